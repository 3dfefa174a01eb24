#include "glil/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "glil/axioms.hpp"
#include "glil/closed.hpp"
#include "glil/dot.hpp"
#include "glil/error.hpp"
#include "glil/json_io.hpp"
#include "glil/reduction.hpp"
#include "glil/syntax.hpp"
#include "glil/translate.hpp"

namespace glil::cli {
namespace {

using io::Json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(std::istream& in) {
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string read_file(const std::string& path) {
  if (path == "-") return slurp(std::cin);
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  return slurp(in);
}

// Inline text, or the contents of a file when written as @path.
Formula formula_arg(const std::string& arg) {
  if (!arg.empty() && arg.front() == '@') return parse(read_file(arg.substr(1)));
  return parse(arg);
}

Json model_document(const std::string& path) {
  try {
    return Json::parse(read_file(path));
  } catch (const Json::parse_error& e) {
    throw FormatError(path + ": " + e.what());
  }
}

bool ci_mode() {
  const char* v = std::getenv(kCiEnv);
  return v != nullptr && std::string(v) != "" && std::string(v) != "0";
}

struct Options {
  std::string format = "text";
  std::optional<std::uint64_t> seed;

  std::uint64_t seed_for(const std::string& command) const {
    if (!seed && ci_mode()) throw UsageError(command + " requires --seed when " + kCiEnv + " is set");
    return seed.value_or(0);
  }
};

void print_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

void print_diagnostics(std::ostream& out, const Diagnostics& d) {
  if (d.clean()) {
    out << "clean\n";
    return;
  }
  for (const auto& v : d.violations) {
    out << "violation: " << v.message();
    if (!v.detail.empty()) out << "  [" << v.detail << "]";
    out << '\n';
  }
}

std::vector<Formula> default_instance_pool() {
  std::vector<Formula> pool;
  for (const char* text : {"F", "T", "p0", "<>T", "[]F", "<><>T", "T |> <>T", "~p0 & <>p0"})
    pool.push_back(parse(text));
  return pool;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"GL / IL toolkit: provability and interpretability logic"};
  app.require_subcommand(1, 1);
  app.fallthrough();

  Options opt;
  app.add_option("--format", opt.format, "Output encoding")
      ->check(CLI::IsMember({"text", "json", "dot"}))
      ->capture_default_str();
  app.add_option("--seed", opt.seed, "Seed for every random choice");

  const auto existing = CLI::Validator(
      [](std::string& path) {
        if (path == "-") return std::string();
        return CLI::ExistingFile(path);
      },
      "FILE|-");

  std::string formula_text;
  std::string model_path;
  std::optional<World> world;

  auto* prove = app.add_subcommand("prove-gl", "Decide GL validity; print a countermodel if invalid");
  prove->add_option("formula", formula_text, "Formula, or @file")->required();
  bool use_oracle = false;
  prove->add_flag("--oracle", use_oracle, "Use the exhaustive bounded search instead of the tableau");

  auto* translate = app.add_subcommand("translate", "Translate a one-variable GL formula to closed IL");
  translate->add_option("formula", formula_text, "Formula, or @file")->required();

  auto* lift = app.add_subcommand("lift", "Lift a tree GL model (JSON) to a Veltman model");
  lift->add_option("model", model_path, "Kripke model JSON file, or - for stdin")->required()->check(existing);

  auto* project = app.add_subcommand("project", "Project a Veltman model to a GL model at a world");
  project->add_option("model", model_path, "Veltman model JSON file, or -")->required()->check(existing);
  project->add_option("--world", world, "World to project at")->required();

  auto* check = app.add_subcommand("check-model", "Validate the frame conditions of a model");
  check->add_option("model", model_path, "Kripke or Veltman model JSON file, or -")->required()->check(existing);

  auto* mc = app.add_subcommand("mc", "Model-check a formula");
  mc->add_option("model", model_path, "Kripke or Veltman model JSON file, or -")->required()->check(existing);
  mc->add_option("formula", formula_text, "Formula, or @file")->required();
  mc->add_option("--world", world, "Only this world (default: all)");

  auto* reduce = app.add_subcommand("reduce", "Translate and certify a one-variable GL formula");
  reduce->add_option("formula", formula_text, "Formula, or @file")->required();
  unsigned smoke_models = ReduceOptions{}.smoke_models;
  reduce->add_option("--models", smoke_models, "Random Veltman models for the valid-side smoke test")
      ->capture_default_str();

  auto* normal = app.add_subcommand("normal-form", "Height profile and []^n F normal form of a closed formula");
  normal->add_option("formula", formula_text, "Formula, or @file")->required();

  auto* random = app.add_subcommand("random-model", "Generate a random Veltman model");
  std::size_t worlds = 5;
  double density = 0.5;
  unsigned variables = 1;
  random->add_option("--worlds", worlds, "Number of worlds")->check(CLI::PositiveNumber)->capture_default_str();
  random->add_option("--density", density, "Probability of keeping an order pair")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  random->add_option("--variables", variables, "Variables in the valuation")->capture_default_str();

  auto* sweep = app.add_subcommand("sweep-axioms", "Model-check instances of an axiom scheme at every world");
  sweep->add_option("model", model_path, "Veltman model JSON file, or -")->required()->check(existing);
  std::string scheme_text;
  sweep->add_option("--scheme", scheme_text, "J1..J5, F, GL1, GL2 or BoxRhd")->required();
  std::vector<std::string> instance_texts;
  sweep->add_option("--instance", instance_texts, "A;B;C (repeatable); default: a fixed pool");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kUsage;
  }

  const bool json = opt.format == "json";
  const bool dot = opt.format == "dot";

  try {
    if (app.got_subcommand(prove)) {
      const Formula f = formula_arg(formula_text);
      GlVerdict v;
      if (use_oracle) {
        const auto b = sufficient_bounds(f);
        v = brute_force_gl(f, b.max_depth, b.max_branching);
      } else {
        v = prove_gl(f);
      }
      if (json) {
        print_json(out, io::to_json(v));
      } else if (dot) {
        out << (v.countermodel ? dot::to_dot(*v.countermodel) : "digraph kripke {\n}\n");
      } else {
        out << (v.valid ? "valid" : "invalid") << '\n';
        if (v.countermodel) print_json(out, io::to_json(*v.countermodel));
      }
    } else if (app.got_subcommand(translate)) {
      const Formula f = formula_arg(formula_text);
      const Formula t = translate_dagger(f);
      if (json) {
        print_json(out, Json{{"input", render(f)}, {"translated", render(t)}});
      } else {
        out << render(t) << '\n';
      }
    } else if (app.got_subcommand(lift)) {
      const LiftedModel l = lift_to_veltman(io::kripke_from_json(model_document(model_path)));
      if (dot) {
        out << dot::to_dot(l.model);
      } else {
        print_json(out, io::to_json(l));
      }
    } else if (app.got_subcommand(project)) {
      const VeltmanModel m = io::veltman_from_json(model_document(model_path));
      if (const auto d = validate_veltman(m); !d.clean()) {
        throw PreconditionError("project: not a Veltman model (" + d.violations.front().message() + ")");
      }
      const Projection p = project_to_gl(m, *world);
      if (dot) {
        out << dot::to_dot(p.model);
      } else {
        print_json(out, io::to_json(p));
      }
    } else if (app.got_subcommand(check)) {
      const Json doc = model_document(model_path);
      const Diagnostics d = io::is_veltman_document(doc) ? validate_veltman(io::veltman_from_json(doc))
                                                          : validate_gl_frame(io::kripke_from_json(doc));
      if (json) {
        print_json(out, io::to_json(d));
      } else {
        print_diagnostics(out, d);
      }
    } else if (app.got_subcommand(mc)) {
      const Json doc = model_document(model_path);
      const Formula f = formula_arg(formula_text);
      WorldSet truth;
      if (io::is_veltman_document(doc)) {
        const VeltmanModel m = io::veltman_from_json(doc);
        if (const auto d = validate_veltman(m); !d.clean()) {
          throw PreconditionError("mc: not a Veltman model (" + d.violations.front().message() + ")");
        }
        truth = IlEvaluator(m).truth_set(f);
      } else {
        truth = truth_set_gl(io::kripke_from_json(doc), f);
      }
      if (world && *world >= truth.size()) {
        throw PreconditionError("mc: world " + std::to_string(*world) + " not in model");
      }
      if (json) {
        Json j;
        j["formula"] = render(f);
        if (world) {
          j["world"] = *world;
          j["value"] = static_cast<bool>(truth[*world]);
        } else {
          Json all = Json::object();
          for (World w = 0; w < truth.size(); ++w) all[std::to_string(w)] = static_cast<bool>(truth[w]);
          j["values"] = all;
        }
        print_json(out, j);
      } else if (world) {
        out << (truth[*world] ? "true" : "false") << '\n';
      } else {
        for (World w = 0; w < truth.size(); ++w) out << w << ": " << (truth[w] ? "true" : "false") << '\n';
      }
    } else if (app.got_subcommand(reduce)) {
      const Formula f = formula_arg(formula_text);
      ReduceOptions ro;
      ro.smoke_models = smoke_models;
      ro.seed = opt.seed_for("reduce");
      const CertifiedReduction c = reduce_and_certify(f, ro);
      if (json) {
        print_json(out, io::to_json(c));
      } else if (dot) {
        out << (c.lifted ? dot::to_dot(c.lifted->model) : "digraph veltman {\n}\n");
      } else {
        out << "input: " << render(c.input) << '\n';
        out << "translated: " << render(c.translated) << '\n';
        out << "gl: " << (c.gl_verdict.valid ? "valid" : "invalid") << '\n';
        if (c.lifted) {
          out << "certificate: lifted countermodel with " << c.lifted->model.size()
              << " worlds refutes the translation at root " << c.lifted->root << " (recheck "
              << (c.recheck ? "passed" : "failed") << ")\n";
        } else {
          out << "certificate: closed tableau with " << proof_trace_size(c.gl_verdict.proof_trace)
              << " nodes\n";
          out << "smoke test (heuristic): translation holds at all " << c.smoke_test->worlds_checked
              << " worlds of " << c.smoke_test->models << " random Veltman models\n";
        }
      }
    } else if (app.got_subcommand(normal)) {
      const Formula f = formula_arg(formula_text);
      const NormalForm nf = normal_form_closed(f);
      if (json) {
        Json j;
        j["formula"] = render(f);
        j["depth"] = nf.depth;
        Json heights = Json::array();
        for (unsigned h = 0; h < nf.depth; ++h)
          if (nf.below[h]) heights.push_back(h);
        j["true_heights_below_depth"] = heights;
        j["true_from_depth_on"] = nf.stable;
        j["normal_form"] = render(nf.formula);
        print_json(out, j);
      } else {
        out << render(nf.formula) << '\n';
        // The tail run starts at the first height from which truth is constant.
        unsigned tail = nf.depth;
        while (nf.stable && tail > 0 && nf.below[tail - 1]) --tail;
        out << "true at heights:";
        for (unsigned h = 0; h < tail; ++h)
          if (nf.below[h]) out << ' ' << h;
        if (nf.stable) out << ' ' << tail << "..";
        out << '\n';
      }
    } else if (app.got_subcommand(random)) {
      const VeltmanModel m = random_veltman(worlds, density, opt.seed_for("random-model"), variables);
      if (dot) {
        out << dot::to_dot(m);
      } else {
        print_json(out, io::to_json(m));
      }
    } else if (app.got_subcommand(sweep)) {
      const auto scheme = scheme_from_name(scheme_text);
      if (!scheme) throw UsageError("unknown scheme " + scheme_text);
      const VeltmanModel m = io::veltman_from_json(model_document(model_path));
      if (const auto d = validate_veltman(m); !d.clean()) {
        throw PreconditionError("sweep-axioms: not a Veltman model (" + d.violations.front().message() + ")");
      }
      std::vector<AxiomInstance> instances;
      for (const auto& text : instance_texts) {
        std::vector<Formula> parts;
        std::stringstream ss(text);
        std::string piece;
        while (std::getline(ss, piece, ';')) parts.push_back(parse(piece));
        if (parts.empty() || parts.size() > 3) throw UsageError("--instance takes A, A;B or A;B;C");
        while (parts.size() < 3) parts.push_back(Formula::Top());
        instances.push_back({parts[0], parts[1], parts[2]});
      }
      if (instances.empty()) {
        const auto pool = default_instance_pool();
        for (const auto& a : pool)
          for (const auto& b : pool)
            for (const auto& c : pool) instances.push_back({a, b, c});
      }
      const Diagnostics d = check_axiom_sweep(m, *scheme, instances);
      if (json) {
        Json j = io::to_json(d);
        j["scheme"] = scheme_text;
        j["instances"] = instances.size();
        print_json(out, j);
      } else {
        out << scheme_text << ": " << instances.size() << " instances at " << m.size() << " worlds\n";
        print_diagnostics(out, d);
      }
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const FormatError& e) {
    err << "format error: " << e.what() << '\n';
    return kUsage;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const PreconditionError& e) {
    err << "precondition violated: " << e.what() << '\n';
    return kPrecondition;
  } catch (const CertificationFailure& e) {
    err << "CERTIFICATION FAILURE: " << e.what() << '\n';
    return kCertification;
  }
  return kOk;
}

}  // namespace glil::cli
