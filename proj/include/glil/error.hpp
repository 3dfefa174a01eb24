#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace glil {

/// Malformed formula text. `position` is a byte offset into the input.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Malformed model or certificate file.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was called outside its domain (e.g. a formula containing |>
/// handed to the GL prover, or a non-tree model handed to the lifting).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The reduction produced a certificate that does not re-check. Never caught
/// internally.
class CertificationFailure : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace glil
