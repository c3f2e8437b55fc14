#ifndef BICLUSTER_BRANCH_ANALYSIS_HPP
#define BICLUSTER_BRANCH_ANALYSIS_HPP

// Case analysis behind the running-time bound of rules B2 and B3.
//
// A case fixes the neighbours of p inside the P4 a1-a2-a3-a4 and the
// neighbours of the second extra vertex q inside A + {p}. The six-vertex
// case graph uses labels a1..a4 = 0..3, p = 4, q = 5. Its branching vector is
// the multiset of sizes of the inclusion-minimal editing sets, and its
// branching number is the root x >= 1 of sum_i x^(-d_i) = 1.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "bicluster/edit_enum.hpp"
#include "bicluster/graph.hpp"
#include "bicluster/solver.hpp"

namespace bicluster {

/// The bound every case has to respect, and the rounding slack allowed on it.
inline constexpr double kClaimedBranchingBound = 3.116;
inline constexpr double kBranchingBoundSlack = 1e-6;
inline constexpr double kRootTolerance = 1e-9;

struct BranchCase {
  Rule rule = Rule::B2;
  /// Bit j set iff p ~ a_{j+1}.
  unsigned p_neighbors = 0;
  /// Bit j < 4 set iff q ~ a_{j+1}; bit 4 set iff q ~ p.
  unsigned second_neighbors = 0;

  friend bool operator==(const BranchCase&, const BranchCase&) = default;
};

struct BranchingVector {
  std::vector<int> decrements;

  friend bool operator==(const BranchingVector&, const BranchingVector&) = default;
};

inline std::vector<BranchCase> enumerate_b2_cases() {
  std::vector<BranchCase> out;
  for (unsigned p = 1; p < 16; ++p) {
    for (unsigned q = 0; q < 32; ++q) {
      if ((q & 0xFU) != 0) out.push_back({Rule::B2, p, q});
    }
  }
  return out;
}

inline std::vector<BranchCase> enumerate_b3_cases() {
  std::vector<BranchCase> out;
  for (unsigned p = 1; p < 16; ++p) out.push_back({Rule::B3, p, 0x10U});
  return out;
}

/// The case with the path read backwards (a1 <-> a4, a2 <-> a3).
inline BranchCase mirror(const BranchCase& c) {
  auto flip = [](unsigned m) {
    return ((m & 1U) << 3) | ((m & 2U) << 1) | ((m & 4U) >> 1) | ((m & 8U) >> 3);
  };
  return {c.rule, flip(c.p_neighbors), flip(c.second_neighbors & 0xFU) | (c.second_neighbors & 0x10U)};
}

inline Graph case_to_graph(const BranchCase& c) {
  Graph g(6, {{0, 1}, {1, 2}, {2, 3}});
  for (Vertex j = 0; j < 4; ++j) {
    if ((c.p_neighbors >> j) & 1U) g.add_edge(4, j);
    if ((c.second_neighbors >> j) & 1U) g.add_edge(5, j);
  }
  if ((c.second_neighbors >> 4) & 1U) g.add_edge(5, 4);
  return g;
}

inline BranchingVector branching_vector_of(const BranchCase& c) {
  BranchingVector v;
  for (const auto& f : minimal_editing_sets(case_to_graph(c)).members) {
    v.decrements.push_back(static_cast<int>(f.size()));
  }
  std::sort(v.decrements.begin(), v.decrements.end());
  return v;
}

/// sum_i x^(-d_i)
inline double characteristic_sum(const BranchingVector& v, double x) {
  double s = 0.0;
  for (int d : v.decrements) s += std::pow(x, -d);
  return s;
}

/// Unique x >= 1 with sum_i x^(-d_i) = 1, by bisection.
inline double branching_number(const BranchingVector& v) {
  if (v.decrements.empty()) throw InputError("branching_number: empty branching vector");
  for (int d : v.decrements) {
    if (d < 1) throw InputError("branching_number: decrements must be positive");
  }
  if (v.decrements.size() == 1) return 1.0;
  double lo = 1.0;
  double hi = 1.0 + static_cast<double>(v.decrements.size());
  while (hi - lo > 1e-14) {
    double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    (characteristic_sum(v, mid) > 1.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

struct CaseResult {
  std::string id;
  std::optional<BranchCase> branch_case;  // empty for the B1 entry
  BranchingVector vector;
  double number = 0.0;
};

struct AnalysisOptions {
  /// Restrict to one rule; all rules when empty.
  std::optional<Rule> rule;
  /// Drop a case when its path-reversal mirror comes earlier.
  bool mirror_reduce = false;
};

struct BranchReport {
  std::vector<CaseResult> cases;
  std::size_t b2_cases = 0;
  std::size_t b3_cases = 0;
  double max_number = 0.0;
  /// Ids of every case within kRootTolerance of the maximum, in report order.
  std::vector<std::string> argmax;

  bool within_bound() const { return max_number <= kClaimedBranchingBound + kBranchingBoundSlack; }
};

inline std::string case_id(const BranchCase& c, std::size_t index) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%s-%03zu", c.rule == Rule::B2 ? "B2" : "B3", index);
  return buf;
}

inline BranchReport verify_all(const AnalysisOptions& options = {}) {
  BranchReport report;
  auto wanted = [&](Rule r) { return !options.rule || *options.rule == r; };

  if (wanted(Rule::B1)) {
    BranchingVector v{{1, 1, 1}};
    report.cases.push_back({"B1", std::nullopt, v, branching_number(v)});
  }
  auto add = [&](const std::vector<BranchCase>& cases, std::size_t& counter) {
    for (std::size_t i = 0; i < cases.size(); ++i) {
      const auto& c = cases[i];
      if (options.mirror_reduce) {
        auto m = mirror(c);
        if (std::pair(m.p_neighbors, m.second_neighbors) <
            std::pair(c.p_neighbors, c.second_neighbors)) {
          continue;
        }
      }
      auto v = branching_vector_of(c);
      report.cases.push_back({case_id(c, i), c, v, branching_number(v)});
      ++counter;
    }
  };
  if (wanted(Rule::B2)) add(enumerate_b2_cases(), report.b2_cases);
  if (wanted(Rule::B3)) add(enumerate_b3_cases(), report.b3_cases);

  for (const auto& r : report.cases) report.max_number = std::max(report.max_number, r.number);
  for (const auto& r : report.cases) {
    if (r.number >= report.max_number - kRootTolerance) report.argmax.push_back(r.id);
  }
  return report;
}

inline std::string format_mask(unsigned mask, int bits) {
  std::string s;
  for (int j = 0; j < bits; ++j) s += ((mask >> j) & 1U) ? '1' : '0';
  return s;
}

inline std::string format_vector(const BranchingVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.decrements.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v.decrements[i]);
  }
  return s + ")";
}

/// One line per case, then the counts, the argmax set and `MAX <root> CASE <id>`.
inline void write_report(std::ostream& out, const BranchReport& report) {
  char num[32];
  for (const auto& r : report.cases) {
    std::snprintf(num, sizeof num, "%.6f", r.number);
    out << r.id;
    if (r.branch_case) {
      out << " p=" << format_mask(r.branch_case->p_neighbors, 4)
          << " q=" << format_mask(r.branch_case->second_neighbors, 5);
    }
    out << ' ' << format_vector(r.vector) << ' ' << num << '\n';
  }
  out << "CASES B2 " << report.b2_cases << " B3 " << report.b3_cases << '\n';
  out << "ARGMAX";
  for (const auto& id : report.argmax) out << ' ' << id;
  out << '\n';
  std::snprintf(num, sizeof num, "%.6f", report.max_number);
  out << "MAX " << num << " CASE " << (report.argmax.empty() ? "-" : report.argmax.front()) << '\n';
}

}  // namespace bicluster

#endif  // BICLUSTER_BRANCH_ANALYSIS_HPP
