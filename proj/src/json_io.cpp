#include "glil/json_io.hpp"

#include <map>

#include "glil/error.hpp"
#include "glil/syntax.hpp"

namespace glil::io {
namespace {

Json world_list(std::size_t n) {
  Json a = Json::array();
  for (World w = 0; w < n; ++w) a.push_back(w);
  return a;
}

Json pair_list(const Relation& r) {
  Json a = Json::array();
  for (auto [x, y] : r.pairs()) a.push_back(Json::array({x, y}));
  return a;
}

Json valuation(const std::vector<std::set<unsigned>>& val) {
  Json o = Json::object();
  for (World w = 0; w < val.size(); ++w) o[std::to_string(w)] = val[w];
  return o;
}

[[noreturn]] void fail(const std::string& what) { throw FormatError("model document: " + what); }

World world_id(const Json& j, std::size_t n) {
  if (!j.is_number_integer() || j.get<long long>() < 0) fail("world ids must be non-negative integers");
  const auto w = j.get<unsigned long long>();
  if (w >= n) fail("world " + std::to_string(w) + " is not listed in \"worlds\"");
  return static_cast<World>(w);
}

World key_id(const std::string& key, std::size_t n) {
  try {
    std::size_t used = 0;
    const unsigned long long w = std::stoull(key, &used);
    if (used != key.size()) throw std::invalid_argument(key);
    if (w >= n) fail("world " + key + " is not listed in \"worlds\"");
    return static_cast<World>(w);
  } catch (const std::logic_error&) {
    fail("world key \"" + key + "\" is not an integer");
  }
}

std::size_t read_worlds(const Json& j) {
  if (!j.is_object()) fail("expected an object");
  if (!j.contains("worlds") || !j["worlds"].is_array()) fail("missing \"worlds\" array");
  const auto& ws = j["worlds"];
  const std::size_t n = ws.size();
  std::vector<bool> seen(n, false);
  for (const auto& w : ws) {
    if (!w.is_number_integer() || w.get<long long>() < 0 || w.get<unsigned long long>() >= n) {
      fail("worlds must be the integers 0.." + std::to_string(n ? n - 1 : 0));
    }
    if (seen[w.get<std::size_t>()]) fail("duplicate world " + w.dump());
    seen[w.get<std::size_t>()] = true;
  }
  return n;
}

Relation read_pairs(const Json& j, std::size_t n, const char* what) {
  Relation r(n);
  if (!j.is_array()) fail(std::string(what) + " must be an array of pairs");
  for (const auto& p : j) {
    if (!p.is_array() || p.size() != 2) fail(std::string(what) + " must be an array of pairs");
    r.insert(world_id(p[0], n), world_id(p[1], n));
  }
  return r;
}

std::vector<std::set<unsigned>> read_val(const Json& j, std::size_t n) {
  std::vector<std::set<unsigned>> val(n);
  if (!j.contains("val")) return val;
  if (!j["val"].is_object()) fail("\"val\" must be an object");
  for (const auto& [key, vars] : j["val"].items()) {
    const World w = key_id(key, n);
    if (!vars.is_array()) fail("valuation entries must be arrays");
    for (const auto& v : vars) {
      if (!v.is_number_integer() || v.get<long long>() < 0) fail("variable indices must be non-negative");
      val[w].insert(v.get<unsigned>());
    }
  }
  return val;
}

}  // namespace

Json to_json(const KripkeModel& m) {
  Json j;
  j["worlds"] = world_list(m.size());
  j["R"] = pair_list(m.r);
  j["val"] = valuation(m.val);
  if (m.root) j["root"] = *m.root;
  return j;
}

Json to_json(const VeltmanModel& m) {
  Json j;
  j["worlds"] = world_list(m.size());
  j["R"] = pair_list(m.r);
  Json s = Json::object();
  for (World x = 0; x < m.size(); ++x) s[std::to_string(x)] = pair_list(m.s[x]);
  j["S"] = s;
  j["val"] = valuation(m.val);
  return j;
}

Json to_json(const LiftedModel& m) {
  Json j = to_json(m.model);
  j["root"] = m.root;
  j["old_worlds"] = m.old_worlds;
  Json flats = Json::object();
  Json naturals = Json::object();
  for (auto [e, f] : m.flats) flats[std::to_string(e)] = f;
  for (auto [e, f] : m.naturals) naturals[std::to_string(e)] = f;
  j["flats"] = flats;
  j["naturals"] = naturals;
  return j;
}

Json to_json(const Projection& p) {
  Json j = to_json(p.model);
  j["origin"] = p.origin;
  return j;
}

Json to_json(const Diagnostics& d) {
  Json j;
  j["clean"] = d.clean();
  Json vs = Json::array();
  for (const auto& v : d.violations) {
    Json e;
    e["condition"] = v.condition;
    e["witness"] = v.witness;
    e["message"] = v.message();
    if (!v.detail.empty()) e["detail"] = v.detail;
    vs.push_back(e);
  }
  j["violations"] = vs;
  return j;
}

Json to_json(const ProofTrace& trace) {
  // Nodes are numbered in depth-first order; shared nodes appear once.
  std::map<const ProofNode*, std::size_t> ids;
  std::vector<const ProofNode*> order;
  auto number = [&](auto&& self, const ProofNode* n) -> void {
    if (ids.count(n)) return;
    ids.emplace(n, order.size());
    order.push_back(n);
    for (const auto& c : n->children) self(self, c.get());
  };
  if (!trace) return nullptr;
  number(number, trace.get());
  Json nodes = Json::array();
  for (const ProofNode* n : order) {
    Json e;
    e["id"] = ids[n];
    Json label = Json::array();
    for (const auto& s : n->label) label.push_back(render(s));
    e["label"] = label;
    e["rule"] = n->rule;
    if (n->principal) e["principal"] = render(*n->principal);
    Json kids = Json::array();
    for (const auto& c : n->children) kids.push_back(ids[c.get()]);
    e["children"] = kids;
    nodes.push_back(e);
  }
  Json j;
  j["root"] = 0;
  j["nodes"] = nodes;
  return j;
}

Json to_json(const GlVerdict& v) {
  Json j;
  j["valid"] = v.valid;
  if (v.countermodel) j["countermodel"] = to_json(*v.countermodel);
  if (v.proof_trace) j["proof_trace"] = to_json(v.proof_trace);
  return j;
}

Json to_json(const CertifiedReduction& c) {
  Json j;
  j["input"] = render(c.input);
  j["translated"] = render(c.translated);
  j["gl_verdict"] = to_json(c.gl_verdict);
  Json cert;
  if (c.lifted) {
    cert["kind"] = "lifted_countermodel";
    cert["lifted_model"] = to_json(*c.lifted);
    cert["root"] = c.lifted->root;
    cert["recheck"] = c.recheck;
  } else {
    cert["kind"] = "proof_trace";
    cert["proof_trace_nodes"] = proof_trace_size(c.gl_verdict.proof_trace);
  }
  j["certificate"] = cert;
  if (c.smoke_test) {
    Json s;
    s["heuristic"] = true;
    s["models"] = c.smoke_test->models;
    s["worlds_checked"] = c.smoke_test->worlds_checked;
    s["failures"] = c.smoke_test->failures;
    j["smoke_test"] = s;
  }
  return j;
}

bool is_veltman_document(const Json& j) { return j.is_object() && j.contains("S"); }

KripkeModel kripke_from_json(const Json& j) {
  const std::size_t n = read_worlds(j);
  KripkeModel m(n);
  m.r = j.contains("R") ? read_pairs(j["R"], n, "\"R\"") : Relation(n);
  m.val = read_val(j, n);
  if (j.contains("root") && !j["root"].is_null()) m.root = world_id(j["root"], n);
  return m;
}

VeltmanModel veltman_from_json(const Json& j) {
  const std::size_t n = read_worlds(j);
  VeltmanModel m(n);
  m.r = j.contains("R") ? read_pairs(j["R"], n, "\"R\"") : Relation(n);
  if (j.contains("S")) {
    if (!j["S"].is_object()) fail("\"S\" must be an object");
    for (const auto& [key, pairs] : j["S"].items()) m.s[key_id(key, n)] = read_pairs(pairs, n, "\"S\"");
  }
  m.val = read_val(j, n);
  return m;
}

}  // namespace glil::io
