#ifndef BICLUSTER_GRAPH_HPP
#define BICLUSTER_GRAPH_HPP

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bicluster {

using Vertex = std::size_t;

/// Raised when a caller hands an operation arguments outside its contract.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an internal invariant of the algorithm is broken. Always a bug.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Unordered vertex pair, always stored with first < second.
class VertexPair {
 public:
  VertexPair(Vertex u, Vertex v) {
    if (u == v) throw InputError("vertex pair needs two distinct vertices");
    u_ = std::min(u, v);
    v_ = std::max(u, v);
  }

  Vertex first() const { return u_; }
  Vertex second() const { return v_; }

  friend auto operator<=>(const VertexPair&, const VertexPair&) = default;

 private:
  Vertex u_;
  Vertex v_;
};

/// A set of pairs interpreted as edge toggles.
using EditSet = std::set<VertexPair>;

/// Simple undirected graph on vertices 0..n-1, stored as one bit row per vertex.
class Graph {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  Graph() = default;

  explicit Graph(std::size_t n)
      : n_(n), words_((n + kWordBits - 1) / kWordBits), bits_(n * words_, 0) {}

  Graph(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> edges)
      : Graph(n) {
    for (auto [u, v] : edges) add_edge(u, v);
  }

  std::size_t order() const { return n_; }
  std::size_t words() const { return words_; }

  std::size_t edge_count() const {
    std::size_t total = 0;
    for (Word w : bits_) total += static_cast<std::size_t>(std::popcount(w));
    return total / 2;
  }

  bool has_edge(Vertex u, Vertex v) const {
    check(u);
    check(v);
    return test(u, v);
  }

  void add_edge(Vertex u, Vertex v) { set_edge(u, v, true); }
  void remove_edge(Vertex u, Vertex v) { set_edge(u, v, false); }

  void set_edge(Vertex u, Vertex v, bool present) {
    check(u);
    check(v);
    if (u == v) throw InputError("self-loop " + std::to_string(u));
    if (present) {
      bits_[u * words_ + v / kWordBits] |= bit(v);
      bits_[v * words_ + u / kWordBits] |= bit(u);
    } else {
      bits_[u * words_ + v / kWordBits] &= ~bit(v);
      bits_[v * words_ + u / kWordBits] &= ~bit(u);
    }
  }

  void toggle(VertexPair p) {
    check(p.second());
    bits_[p.first() * words_ + p.second() / kWordBits] ^= bit(p.second());
    bits_[p.second() * words_ + p.first() / kWordBits] ^= bit(p.first());
  }

  /// Adjacency row of v as a bitset over all vertices.
  std::span<const Word> row(Vertex v) const {
    check(v);
    return {bits_.data() + v * words_, words_};
  }

  std::size_t degree(Vertex v) const {
    std::size_t d = 0;
    for (Word w : row(v)) d += static_cast<std::size_t>(std::popcount(w));
    return d;
  }

  std::vector<Vertex> neighbors(Vertex v) const {
    std::vector<Vertex> out;
    auto r = row(v);
    for (std::size_t w = 0; w < words_; ++w) {
      for (Word x = r[w]; x != 0; x &= x - 1) {
        out.push_back(w * kWordBits + static_cast<std::size_t>(std::countr_zero(x)));
      }
    }
    return out;
  }

  /// All edges in canonical order.
  std::vector<VertexPair> edges() const {
    std::vector<VertexPair> out;
    for (Vertex u = 0; u < n_; ++u) {
      for (Vertex v : neighbors(u)) {
        if (u < v) out.emplace_back(u, v);
      }
    }
    return out;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  static Word bit(Vertex v) { return Word{1} << (v % kWordBits); }

  bool test(Vertex u, Vertex v) const {
    return (bits_[u * words_ + v / kWordBits] >> (v % kWordBits)) & 1U;
  }

  void check(Vertex v) const {
    if (v >= n_) {
      throw InputError("vertex " + std::to_string(v) + " out of range for graph of order " +
                       std::to_string(n_));
    }
  }

  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<Word> bits_;
};

/// G with every pair of f toggled.
inline Graph symmetric_difference(const Graph& g, const EditSet& f) {
  for (const auto& p : f) {
    if (p.second() >= g.order()) {
      throw InputError("edit pair (" + std::to_string(p.first()) + "," +
                       std::to_string(p.second()) + ") out of range");
    }
  }
  Graph out = g;
  for (const auto& p : f) out.toggle(p);
  return out;
}

/// Pairs on which two graphs of equal order differ.
inline EditSet difference(const Graph& a, const Graph& b) {
  if (a.order() != b.order()) throw InputError("graphs differ in order");
  EditSet out;
  for (Vertex u = 0; u < a.order(); ++u) {
    auto ra = a.row(u);
    auto rb = b.row(u);
    for (std::size_t w = 0; w < a.words(); ++w) {
      for (Graph::Word x = ra[w] ^ rb[w]; x != 0; x &= x - 1) {
        Vertex v = w * Graph::kWordBits + static_cast<std::size_t>(std::countr_zero(x));
        if (u < v) out.emplace(u, v);
      }
    }
  }
  return out;
}

struct InducedSubgraph {
  Graph graph;
  /// mapping[i] is the original vertex behind vertex i of graph.
  std::vector<Vertex> mapping;
};

/// G[S]. Vertex i of the result is vertices[i] of g.
inline InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<Vertex> sorted(vertices.begin(), vertices.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InputError("induced_subgraph: duplicate vertex");
  }
  if (!sorted.empty() && sorted.back() >= g.order()) {
    throw InputError("induced_subgraph: vertex " + std::to_string(sorted.back()) +
                     " out of range");
  }
  InducedSubgraph out{Graph(vertices.size()), {vertices.begin(), vertices.end()}};
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (g.has_edge(vertices[i], vertices[j])) out.graph.add_edge(i, j);
    }
  }
  return out;
}

inline InducedSubgraph induced_subgraph(const Graph& g, std::initializer_list<Vertex> vertices) {
  return induced_subgraph(g, std::span<const Vertex>(vertices.begin(), vertices.size()));
}

/// Connected components, each sorted, ordered by smallest vertex.
inline std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  std::vector<std::vector<Vertex>> blocks;
  std::vector<bool> seen(g.order(), false);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> block{s};
    seen[s] = true;
    for (std::size_t head = 0; head < block.size(); ++head) {
      for (Vertex w : g.neighbors(block[head])) {
        if (!seen[w]) {
          seen[w] = true;
          block.push_back(w);
        }
      }
    }
    std::sort(block.begin(), block.end());
    blocks.push_back(std::move(block));
  }
  return blocks;
}

}  // namespace bicluster

#endif  // BICLUSTER_GRAPH_HPP
