#include <map>
#include <unordered_map>

#include "glil/error.hpp"
#include "glil/prover.hpp"

namespace glil {
namespace {

// Subformulas in post-order (operands before the formula itself).
struct Closure {
  std::vector<Formula> subs;
  std::vector<int> a, b;
  std::vector<unsigned> vars;
  std::vector<int> modal;  // indices of [] / <> subformulas
  int top = -1;

  explicit Closure(const Formula& f) {
    std::unordered_map<Formula, int> index;
    top = add(f, index);
    std::set<unsigned> vs;
    for (std::size_t i = 0; i < subs.size(); ++i) {
      if (subs[i].op() == Op::Var) vs.insert(subs[i].var());
      if (subs[i].op() == Op::Box || subs[i].op() == Op::Dia) modal.push_back(static_cast<int>(i));
    }
    vars.assign(vs.begin(), vs.end());
  }

  int add(const Formula& f, std::unordered_map<Formula, int>& index) {
    if (auto it = index.find(f); it != index.end()) return it->second;
    if (f.op() == Op::Rhd) throw PreconditionError("brute_force_gl: formula contains |>");
    int ia = -1, ib = -1;
    if (is_unary(f.op()) || is_binary(f.op())) ia = add(f.lhs(), index);
    if (is_binary(f.op())) ib = add(f.rhs(), index);
    const int id = static_cast<int>(subs.size());
    subs.push_back(f);
    a.push_back(ia);
    b.push_back(ib);
    index.emplace(f, id);
    return id;
  }
};

// Truth of every subformula at the root of a tree.
using Profile = std::vector<bool>;
// For each modal subformula M: over the children so far, conjunction (for [])
// or disjunction (for <>) of what each child contributes to M at the parent.
using Aggregate = std::vector<bool>;

struct Witness {
  std::set<unsigned> vars;
  std::vector<int> children;  // profile indices
};

class Search {
 public:
  Search(const Formula& f, unsigned max_depth, unsigned max_branching)
      : c_(f), depth_(max_depth), branching_(max_branching) {}

  GlVerdict run() {
    std::map<Aggregate, std::vector<int>> aggregates{{identity(), {}}};
    add_profiles(aggregates);
    for (unsigned h = 1; h <= depth_; ++h) {
      const std::size_t before = profiles_.size();
      aggregates = aggregates_over(before);
      add_profiles(aggregates);
      if (profiles_.size() == before) break;
    }
    GlVerdict v;
    for (std::size_t i = 0; i < profiles_.size(); ++i) {
      if (!profiles_[i][c_.top]) {
        v.countermodel = materialize(static_cast<int>(i));
        return v;
      }
    }
    v.valid = true;
    auto leaf = std::make_shared<ProofNode>();
    leaf->label = {{false, c_.subs[c_.top]}};
    leaf->rule = "exhaustive";
    v.proof_trace = leaf;
    return v;
  }

 private:
  Aggregate identity() const {
    Aggregate g(c_.modal.size());
    for (std::size_t k = 0; k < c_.modal.size(); ++k) g[k] = c_.subs[c_.modal[k]].op() == Op::Box;
    return g;
  }

  // What a child with profile p contributes to each modal subformula of its parent.
  Aggregate contribution(const Profile& p) const {
    Aggregate g(c_.modal.size());
    for (std::size_t k = 0; k < c_.modal.size(); ++k) {
      const int m = c_.modal[k];
      const bool here = p[c_.a[m]];
      g[k] = c_.subs[m].op() == Op::Box ? (here && p[m]) : (here || p[m]);
    }
    return g;
  }

  Aggregate combine(const Aggregate& x, const Aggregate& y) const {
    Aggregate g(x.size());
    for (std::size_t k = 0; k < x.size(); ++k)
      g[k] = c_.subs[c_.modal[k]].op() == Op::Box ? (x[k] && y[k]) : (x[k] || y[k]);
    return g;
  }

  Profile evaluate(const std::set<unsigned>& vars, const Aggregate& g) const {
    Profile p(c_.subs.size());
    std::size_t next_modal = 0;
    for (std::size_t i = 0; i < c_.subs.size(); ++i) {
      const auto x = [&] { return static_cast<bool>(p[c_.a[i]]); };
      const auto y = [&] { return static_cast<bool>(p[c_.b[i]]); };
      switch (c_.subs[i].op()) {
        case Op::Bot: p[i] = false; break;
        case Op::Top: p[i] = true; break;
        case Op::Var: p[i] = vars.count(c_.subs[i].var()) != 0; break;
        case Op::Not: p[i] = !x(); break;
        case Op::And: p[i] = x() && y(); break;
        case Op::Or: p[i] = x() || y(); break;
        case Op::Imp: p[i] = !x() || y(); break;
        case Op::Iff: p[i] = x() == y(); break;
        case Op::Box:
        case Op::Dia: p[i] = g[next_modal++]; break;
        case Op::Rhd: break;
      }
    }
    return p;
  }

  // Aggregates reachable with at most `branching_` children whose profiles
  // are among the first `available` ones.
  std::map<Aggregate, std::vector<int>> aggregates_over(std::size_t available) const {
    std::map<Aggregate, std::vector<int>> reached{{identity(), {}}};
    std::vector<Aggregate> frontier{identity()};
    for (unsigned j = 0; j < branching_ && !frontier.empty(); ++j) {
      std::vector<Aggregate> next;
      for (const auto& g : frontier) {
        const std::vector<int> base = reached.at(g);
        for (std::size_t p = 0; p < available; ++p) {
          Aggregate h = combine(g, contributions_[p]);
          if (reached.count(h)) continue;
          std::vector<int> kids = base;
          kids.push_back(static_cast<int>(p));
          reached.emplace(h, std::move(kids));
          next.push_back(std::move(h));
        }
      }
      frontier = std::move(next);
    }
    return reached;
  }

  void add_profiles(const std::map<Aggregate, std::vector<int>>& aggregates) {
    const std::size_t assignments = std::size_t{1} << c_.vars.size();
    for (const auto& [g, kids] : aggregates) {
      for (std::size_t mask = 0; mask < assignments; ++mask) {
        std::set<unsigned> vars;
        for (std::size_t k = 0; k < c_.vars.size(); ++k)
          if (mask >> k & 1) vars.insert(c_.vars[k]);
        Profile p = evaluate(vars, g);
        if (index_.count(p)) continue;
        index_.emplace(p, static_cast<int>(profiles_.size()));
        contributions_.push_back(contribution(p));
        witnesses_.push_back({std::move(vars), kids});
        profiles_.push_back(std::move(p));
      }
    }
  }

  KripkeModel materialize(int top) const {
    std::vector<std::set<unsigned>> vals;
    std::vector<std::pair<World, World>> edges;
    auto visit = [&](auto&& self, int p) -> World {
      const World me = vals.size();
      vals.push_back(witnesses_[p].vars);
      for (int c : witnesses_[p].children) edges.emplace_back(me, self(self, c));
      return me;
    };
    visit(visit, top);
    KripkeModel m(vals.size());
    m.val = std::move(vals);
    m.r = tree_closure(m.size(), edges);
    m.root = 0;
    return m;
  }

  Closure c_;
  unsigned depth_;
  unsigned branching_;
  std::vector<Profile> profiles_;
  std::vector<Aggregate> contributions_;
  std::vector<Witness> witnesses_;
  std::map<Profile, int> index_;
};

}  // namespace

GlVerdict brute_force_gl(const Formula& f, unsigned max_depth, unsigned max_branching) {
  if (contains_rhd(f)) throw PreconditionError("brute_force_gl: formula contains |>");
  return Search(f, max_depth, max_branching).run();
}

}  // namespace glil
