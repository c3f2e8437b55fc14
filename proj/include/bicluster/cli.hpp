#ifndef BICLUSTER_CLI_HPP
#define BICLUSTER_CLI_HPP

// Subcommand bodies for the `bicluster` tool. Each returns the process exit
// code: 0 success or yes, 1 no or failed verification, 2 usage or parse error.

#include <fstream>
#include <iostream>
#include <string>

#include "bicluster/branch_analysis.hpp"
#include "bicluster/edit_enum.hpp"
#include "bicluster/io.hpp"
#include "bicluster/solver.hpp"
#include "bicluster/structure.hpp"

namespace bicluster::cli {

inline constexpr int kExitYes = 0;
inline constexpr int kExitNo = 1;
inline constexpr int kExitError = 2;

/// Reads a graph file; "-" means standard input.
inline Graph load_graph(const std::string& path) {
  if (path == "-") return parse_graph(std::cin);
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  return parse_graph(in);
}

namespace detail {

template <typename Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitError;
}

}  // namespace detail

inline int cmd_decide(const std::string& path, long k, std::ostream& out, std::ostream& err) {
  return detail::guarded(err, [&] {
    if (k < 0) throw InputError("budget must be non-negative");
    auto g = load_graph(path);
    auto edits = decide(g, static_cast<int>(k));
    if (!edits) {
      out << "NO\n";
      return kExitNo;
    }
    write_edit_script(out, g, *edits);
    return kExitYes;
  });
}

inline int cmd_solve(const std::string& path, std::ostream& out, std::ostream& err) {
  return detail::guarded(err, [&] {
    auto g = load_graph(path);
    auto solution = solve_minimum(g);
    if (!is_bicluster(symmetric_difference(g, solution.edits))) {
      throw InvariantViolation("solve: result does not verify");
    }
    write_edit_script(out, g, solution.edits);
    return kExitYes;
  });
}

inline int cmd_recognize(const std::string& path, std::ostream& out, std::ostream& err) {
  return detail::guarded(err, [&] {
    auto g = load_graph(path);
    auto print = [&](const char* kind, const auto& vertices) {
      out << "NOT-BICLUSTER " << kind;
      for (Vertex v : vertices) out << ' ' << v;
      out << '\n';
      return kExitNo;
    };
    if (auto t = find_triangle(g)) return print("triangle", *t);
    if (auto c = find_odd_cycle(g)) return print("odd-cycle", *c);
    if (auto a = find_induced_p4(g)) return print("p4", a->path);
    out << "BICLUSTER\n";
    return kExitYes;
  });
}

inline int cmd_min_edits(const std::string& path, std::ostream& out, std::ostream& err) {
  return detail::guarded(err, [&] {
    auto g = load_graph(path);
    auto family = minimal_editing_sets(g);
    out << "fmin " << family.members.size() << '\n';
    for (const auto& f : family.members) {
      out << "F " << f.size();
      for (const auto& p : f) {
        out << (g.has_edge(p.first(), p.second()) ? " del " : " add ") << p.first() << ' '
            << p.second();
      }
      out << '\n';
    }
    return kExitYes;
  });
}

inline int cmd_verify_branching(const AnalysisOptions& options, std::ostream& out) {
  auto report = verify_all(options);
  write_report(out, report);
  return report.within_bound() ? kExitYes : kExitNo;
}

inline int cmd_gen(long n, long budget, std::uint64_t seed, std::ostream& out, std::ostream& err) {
  return detail::guarded(err, [&] {
    if (n < 1) throw InputError("gen: n must be at least 1");
    if (budget < 0) throw InputError("gen: budget must be non-negative");
    auto g = generate_planted(static_cast<std::size_t>(n), static_cast<std::size_t>(budget), seed);
    out << "# planted budget " << budget << " seed " << seed << '\n';
    write_graph(out, g);
    return kExitYes;
  });
}

}  // namespace bicluster::cli

#endif  // BICLUSTER_CLI_HPP
