#ifndef BICLUSTER_IO_HPP
#define BICLUSTER_IO_HPP

// Text formats.
//
// Graph file: the first non-comment line is `n m`, followed by exactly m
// lines `u v` (0 <= u, v < n, u != v, each unordered pair once). Lines whose
// first non-blank character is `#` are comments; blank lines are ignored.
//
// Edit script: `k <size>`, then one `add u v` or `del u v` per pair, u < v,
// sorted by pair.

#include <charconv>
#include <istream>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "bicluster/graph.hpp"

namespace bicluster {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

namespace detail {

inline std::vector<std::string_view> split_fields(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

inline std::optional<std::size_t> to_index(std::string_view field) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size()) return std::nullopt;
  return value;
}

}  // namespace detail

inline Graph parse_graph(std::istream& in) {
  std::optional<Graph> g;
  std::size_t expected = 0;
  std::size_t seen = 0;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto fields = detail::split_fields(line);
    if (fields.empty() || fields.front().front() == '#') continue;
    if (fields.size() != 2) throw ParseError(lineno, "expected two integers");
    auto a = detail::to_index(fields[0]);
    auto b = detail::to_index(fields[1]);
    if (!a || !b) throw ParseError(lineno, "expected two non-negative integers");
    if (!g) {
      g.emplace(*a);
      expected = *b;
      continue;
    }
    if (seen == expected) throw ParseError(lineno, "more edge lines than declared");
    if (*a >= g->order() || *b >= g->order()) throw ParseError(lineno, "vertex out of range");
    if (*a == *b) throw ParseError(lineno, "self-loop");
    if (g->has_edge(*a, *b)) throw ParseError(lineno, "duplicate edge");
    g->add_edge(*a, *b);
    ++seen;
  }
  if (!g) throw ParseError(lineno, "missing header `n m`");
  if (seen != expected) {
    throw ParseError(lineno, "declared " + std::to_string(expected) + " edges, found " +
                                 std::to_string(seen));
  }
  return std::move(*g);
}

inline Graph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_graph(in);
}

inline void write_graph(std::ostream& out, const Graph& g) {
  auto edges = g.edges();
  out << g.order() << ' ' << edges.size() << '\n';
  for (const auto& e : edges) out << e.first() << ' ' << e.second() << '\n';
}

/// Edit script for applying `edits` to g.
inline void write_edit_script(std::ostream& out, const Graph& g, const EditSet& edits) {
  out << "k " << edits.size() << '\n';
  for (const auto& p : edits) {
    out << (g.has_edge(p.first(), p.second()) ? "del " : "add ") << p.first() << ' ' << p.second()
        << '\n';
  }
}

/// Reads a script produced by write_edit_script and checks its verbs against g.
inline EditSet parse_edit_script(std::istream& in, const Graph& g) {
  EditSet edits;
  std::optional<std::size_t> declared;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto f = detail::split_fields(line);
    if (f.empty() || f.front().front() == '#') continue;
    if (!declared) {
      auto k = f.size() == 2 && f[0] == "k" ? detail::to_index(f[1]) : std::nullopt;
      if (!k) throw ParseError(lineno, "expected `k <size>`");
      declared = *k;
      continue;
    }
    if (f.size() != 3 || (f[0] != "add" && f[0] != "del")) {
      throw ParseError(lineno, "expected `add u v` or `del u v`");
    }
    auto u = detail::to_index(f[1]);
    auto v = detail::to_index(f[2]);
    if (!u || !v || *u >= g.order() || *v >= g.order() || *u == *v) {
      throw ParseError(lineno, "bad vertex pair");
    }
    if (g.has_edge(*u, *v) != (f[0] == "del")) throw ParseError(lineno, "verb disagrees with graph");
    if (!edits.emplace(*u, *v).second) throw ParseError(lineno, "pair listed twice");
  }
  if (!declared) throw ParseError(lineno, "missing `k <size>` header");
  if (*declared != edits.size()) throw ParseError(lineno, "size header disagrees with script");
  return edits;
}

/// A random bicluster graph on n vertices with `budget` distinct random pairs toggled.
inline Graph generate_planted(std::size_t n, std::size_t budget, std::uint64_t seed) {
  if (n == 0) throw InputError("gen: need at least one vertex");
  if (budget > n * (n - 1) / 2) throw InputError("gen: budget exceeds number of vertex pairs");
  std::mt19937_64 rng(seed);
  auto uniform = [&](std::size_t bound) {
    return std::uniform_int_distribution<std::size_t>(0, bound - 1)(rng);
  };
  // Groups of roughly five vertices; each vertex picks a group and a side.
  std::size_t groups = std::max<std::size_t>(1, n / 5);
  std::vector<std::size_t> group(n);
  std::vector<std::size_t> side(n);
  for (Vertex v = 0; v < n; ++v) {
    group[v] = uniform(groups);
    side[v] = uniform(2);
  }
  Graph g(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (group[u] == group[v] && side[u] != side[v]) g.add_edge(u, v);
    }
  }
  EditSet toggles;
  while (toggles.size() < budget) {
    Vertex u = uniform(n);
    Vertex v = uniform(n);
    if (u != v) toggles.emplace(u, v);
  }
  for (const auto& p : toggles) g.toggle(p);
  return g;
}

}  // namespace bicluster

#endif  // BICLUSTER_IO_HPP
