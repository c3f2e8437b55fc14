#ifndef BICLUSTER_SOLVER_HPP
#define BICLUSTER_SOLVER_HPP

// Bounded search tree for Bicluster Editing.
//
//   B1  a triangle X: delete one of its three edges.
//   B2  an induced P4 A with |P(A)| >= 2: pick p, p' in P(A) and branch on
//       every inclusion-minimal editing set of G[A + {p, p'}].
//   B3  an induced P4 A with an edge p-i, p in P(A), i in I(A): branch on
//       every inclusion-minimal editing set of G[A + {p, i}].
//
// When none applies, every component on six or more vertices is already a
// biclique, and the smaller components are solved by brute force. Minimum
// editing sets never join two components, so the per-component answers
// combine into a minimum editing set of the whole graph.

#include <array>
#include <optional>
#include <vector>

#include "bicluster/edit_enum.hpp"
#include "bicluster/graph.hpp"
#include "bicluster/structure.hpp"

namespace bicluster {

/// Largest component the base case solves by brute force.
inline constexpr std::size_t kBaseCaseMaxOrder = 5;

struct Instance {
  Graph graph;
  int budget = 0;
};

/// One child of a branching step: the edits applied and the resulting instance.
struct Branch {
  EditSet edits;
  Instance instance;
};

struct Solution {
  EditSet edits;
  bool optimal = false;
};

struct DecisionResult {
  bool yes = false;
  std::optional<EditSet> edits;
};

struct SolverStats {
  std::size_t nodes = 0;
  std::size_t b1 = 0;
  std::size_t b2 = 0;
  std::size_t b3 = 0;
  std::size_t base_cases = 0;
  /// Components of order >= 6 confirmed to be bicliques at a base case.
  std::size_t lemma_checks = 0;

  SolverStats& operator+=(const SolverStats& o) {
    nodes += o.nodes;
    b1 += o.b1;
    b2 += o.b2;
    b3 += o.b3;
    base_cases += o.base_cases;
    lemma_checks += o.lemma_checks;
    return *this;
  }
};

enum class Rule { B1, B2, B3 };

/// A rule together with the structure it fires on. For B1 only `triangle` is
/// meaningful; for B2 `second` is p', for B3 it is i.
struct RuleMatch {
  Rule rule = Rule::B1;
  Triangle triangle{};
  P4Occurrence p4{};
  Vertex first = 0;
  Vertex second = 0;
};

/// The rule the solver would branch on, in order B1, B2, B3, or nothing.
inline std::optional<RuleMatch> find_applicable_rule(const Graph& g) {
  if (auto t = find_triangle(g)) return RuleMatch{Rule::B1, *t, {}, 0, 0};

  std::optional<RuleMatch> match;
  for_each_induced_p4(g, [&](const P4Occurrence& a) {
    auto part = partition_periphery(g, a);
    if (part.periphery.size() < 2) return false;
    match = RuleMatch{Rule::B2, {}, a, part.periphery[0], part.periphery[1]};
    return true;
  });
  if (match) return match;

  for_each_induced_p4(g, [&](const P4Occurrence& a) {
    auto part = partition_periphery(g, a);
    for (Vertex p : part.periphery) {
      for (Vertex i : part.independent) {
        if (g.has_edge(p, i)) {
          match = RuleMatch{Rule::B3, {}, a, p, i};
          return true;
        }
      }
    }
    return false;
  });
  return match;
}

namespace detail {

/// Fmin of G[verts], translated back to the labels of g.
inline std::vector<EditSet> local_minimal_edits(const Graph& g, const std::array<Vertex, 6>& verts,
                                                small::FminTable& table) {
  constexpr std::size_t n = 6;
  small::Mask mask = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (g.has_edge(verts[i], verts[j])) mask |= small::Mask{1} << small::pair_index(n, i, j);
    }
  }
  static const auto pairs = small::pair_list(n);
  std::vector<EditSet> out;
  for (small::Mask f : table.family(n, mask)) {
    EditSet edits;
    for (std::size_t b = 0; b < pairs.size(); ++b) {
      if ((f >> b) & 1U) edits.emplace(verts[pairs[b].first()], verts[pairs[b].second()]);
    }
    out.push_back(std::move(edits));
  }
  return out;
}

inline std::vector<EditSet> rule_edits(const Graph& g, const RuleMatch& m, small::FminTable& table) {
  if (m.rule == Rule::B1) {
    const auto& t = m.triangle;
    return {EditSet{VertexPair(t[0], t[1])}, EditSet{VertexPair(t[0], t[2])},
            EditSet{VertexPair(t[1], t[2])}};
  }
  const auto& a = m.p4.path;
  return local_minimal_edits(g, {a[0], a[1], a[2], a[3], m.first, m.second}, table);
}

/// Minimum editing set of a graph none of whose rules apply. Does not recheck that.
inline EditSet base_case_edits(const Graph& g, SolverStats* stats) {
  EditSet out;
  for (const auto& block : connected_components(g)) {
    if (block.size() < 2) continue;
    auto sub = induced_subgraph(g, block);
    if (block.size() > kBaseCaseMaxOrder) {
      if (!is_biclique(sub.graph)) {
        throw InvariantViolation("base case: component of order " + std::to_string(block.size()) +
                                 " is not a biclique although no branching rule applies");
      }
      if (stats) ++stats->lemma_checks;
      continue;
    }
    auto local = small::minimum_editing_mask(block.size(), small::encode(sub.graph));
    for (const auto& p : small::to_edit_set(block.size(), local)) {
      out.emplace(sub.mapping[p.first()], sub.mapping[p.second()]);
    }
  }
  return out;
}

inline std::vector<Branch> make_branches(const Instance& inst, std::vector<EditSet> edit_sets) {
  std::vector<Branch> out;
  for (auto& f : edit_sets) {
    Instance child{symmetric_difference(inst.graph, f), inst.budget - static_cast<int>(f.size())};
    out.push_back({std::move(f), std::move(child)});
  }
  return out;
}

inline void check_p4(const Graph& g, const P4Occurrence& a) {
  if (!is_induced_p4(g, a)) throw InvariantViolation("branching rule applied to a non-P4");
}

}  // namespace detail

inline std::vector<Branch> branch_rule_b1(const Instance& inst, const Triangle& x) {
  const auto& g = inst.graph;
  if (!(g.has_edge(x[0], x[1]) && g.has_edge(x[0], x[2]) && g.has_edge(x[1], x[2]))) {
    throw InvariantViolation("rule B1 applied to a non-triangle");
  }
  small::FminTable unused;
  return detail::make_branches(inst, detail::rule_edits(g, {Rule::B1, x, {}, 0, 0}, unused));
}

inline std::vector<Branch> branch_rule_b2(const Instance& inst, const P4Occurrence& a, Vertex p,
                                          Vertex p2) {
  detail::check_p4(inst.graph, a);
  auto part = partition_periphery(inst.graph, a);
  auto in_p = [&](Vertex v) {
    return std::find(part.periphery.begin(), part.periphery.end(), v) != part.periphery.end();
  };
  if (p == p2 || !in_p(p) || !in_p(p2)) {
    throw InvariantViolation("rule B2 needs two distinct vertices of P(A)");
  }
  small::FminTable table;
  return detail::make_branches(inst,
                               detail::rule_edits(inst.graph, {Rule::B2, {}, a, p, p2}, table));
}

inline std::vector<Branch> branch_rule_b3(const Instance& inst, const P4Occurrence& a, Vertex p,
                                          Vertex i) {
  detail::check_p4(inst.graph, a);
  auto part = partition_periphery(inst.graph, a);
  bool p_ok = std::find(part.periphery.begin(), part.periphery.end(), p) != part.periphery.end();
  bool i_ok =
      std::find(part.independent.begin(), part.independent.end(), i) != part.independent.end();
  if (!p_ok || !i_ok || !inst.graph.has_edge(p, i)) {
    throw InvariantViolation("rule B3 needs an edge from P(A) to I(A)");
  }
  small::FminTable table;
  return detail::make_branches(inst,
                               detail::rule_edits(inst.graph, {Rule::B3, {}, a, p, i}, table));
}

/// Minimum editing set of a graph on which no branching rule applies.
inline EditSet base_case_solve(const Graph& g) {
  if (find_applicable_rule(g)) throw InputError("base_case_solve: a branching rule still applies");
  return detail::base_case_edits(g, nullptr);
}

/// Sequential search-tree solver. Keeps an Fmin cache and counters across calls.
class Solver {
 public:
  std::optional<EditSet> decide(const Graph& g, int k) {
    if (k < 0) throw InputError("decide: negative budget");
    return run(g, k);
  }

  DecisionResult solve_decision(const Graph& g, int k) {
    if (k < 0) return {};
    auto edits = run(g, k);
    return {edits.has_value(), std::move(edits)};
  }

  Solution solve_minimum(const Graph& g) {
    for (int k = 0;; ++k) {
      if (auto edits = run(g, k)) {
        check_locality(g, *edits);
        return {std::move(*edits), true};
      }
    }
  }

  const SolverStats& stats() const { return stats_; }
  void reset_stats() { stats_ = {}; }

 private:
  std::optional<EditSet> run(const Graph& g, int k) {
    Graph work = g;
    original_ = &g;
    found_.clear();
    if (!search(work, k)) return std::nullopt;
    if (found_.size() > static_cast<std::size_t>(k) ||
        !is_bicluster(symmetric_difference(g, found_))) {
      throw InvariantViolation("solver produced an invalid editing set");
    }
    return found_;
  }

  bool search(Graph& g, int k) {
    ++stats_.nodes;
    if (k < 0) return false;
    auto match = find_applicable_rule(g);
    if (!match) {
      ++stats_.base_cases;
      auto f = detail::base_case_edits(g, &stats_);
      if (f.size() > static_cast<std::size_t>(k)) return false;
      for (const auto& p : f) g.toggle(p);
      // Pairs toggled an odd number of times along the path.
      found_ = difference(*original_, g);
      for (const auto& p : f) g.toggle(p);
      return true;
    }
    switch (match->rule) {
      case Rule::B1: ++stats_.b1; break;
      case Rule::B2: ++stats_.b2; break;
      case Rule::B3: ++stats_.b3; break;
    }
    for (const auto& f : detail::rule_edits(g, *match, fmin_)) {
      if (f.empty()) throw InvariantViolation("branching child without a budget decrease");
      auto cost = static_cast<int>(f.size());
      if (cost > k) continue;
      for (const auto& p : f) g.toggle(p);
      bool ok = search(g, k - cost);
      for (const auto& p : f) g.toggle(p);
      if (ok) return true;
    }
    return false;
  }

  static void check_locality(const Graph& g, const EditSet& edits) {
    std::vector<std::size_t> comp(g.order());
    auto blocks = connected_components(g);
    for (std::size_t c = 0; c < blocks.size(); ++c) {
      for (Vertex v : blocks[c]) comp[v] = c;
    }
    for (const auto& p : edits) {
      if (comp[p.first()] != comp[p.second()]) {
        throw InvariantViolation("minimum editing set joins two components");
      }
    }
  }

  small::FminTable fmin_;
  SolverStats stats_;
  const Graph* original_ = nullptr;
  EditSet found_;
};

inline std::optional<EditSet> decide(const Graph& g, int k) { return Solver{}.decide(g, k); }

inline DecisionResult solve_decision(const Graph& g, int k) {
  return Solver{}.solve_decision(g, k);
}

inline Solution solve_minimum(const Graph& g) { return Solver{}.solve_minimum(g); }

}  // namespace bicluster

#endif  // BICLUSTER_SOLVER_HPP
