#ifndef BICLUSTER_STRUCTURE_HPP
#define BICLUSTER_STRUCTURE_HPP

// Recognition of bicliques and bicluster graphs, and detection of the
// obstructions the solver branches on (triangles, induced P4s).

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "bicluster/graph.hpp"

namespace bicluster {

using Triangle = std::array<Vertex, 3>;

/// Ordered path a1-a2-a3-a4 inducing a P4, canonically oriented so a1 < a4.
struct P4Occurrence {
  std::array<Vertex, 4> path;

  bool contains(Vertex v) const {
    return path[0] == v || path[1] == v || path[2] == v || path[3] == v;
  }

  friend bool operator==(const P4Occurrence&, const P4Occurrence&) = default;
};

struct Bipartition {
  std::vector<Vertex> left;
  std::vector<Vertex> right;
};

/// The two sides of g when g is a biclique, otherwise nothing.
///
/// With r = 0, the only candidate split is right = N(r), left = V \ N(r);
/// g is a biclique iff every left vertex sees exactly right and vice versa.
inline std::optional<Bipartition> biclique_sides(const Graph& g) {
  const std::size_t n = g.order();
  if (n < 2) return std::nullopt;
  std::vector<Graph::Word> right(g.row(0).begin(), g.row(0).end());
  std::vector<Graph::Word> left(g.words(), 0);
  Bipartition sides;
  for (Vertex v = 0; v < n; ++v) {
    auto w = v / Graph::kWordBits;
    auto b = Graph::Word{1} << (v % Graph::kWordBits);
    if (right[w] & b) {
      sides.right.push_back(v);
    } else {
      left[w] |= b;
      sides.left.push_back(v);
    }
  }
  if (sides.right.empty()) return std::nullopt;
  for (Vertex v : sides.left) {
    if (!std::equal(right.begin(), right.end(), g.row(v).begin())) return std::nullopt;
  }
  for (Vertex v : sides.right) {
    if (!std::equal(left.begin(), left.end(), g.row(v).begin())) return std::nullopt;
  }
  return sides;
}

inline bool is_biclique(const Graph& g) { return biclique_sides(g).has_value(); }

/// Every component with at least two vertices is a biclique.
inline bool is_bicluster(const Graph& g) {
  for (const auto& block : connected_components(g)) {
    if (block.size() < 2) continue;
    if (!is_biclique(induced_subgraph(g, block).graph)) return false;
  }
  return true;
}

/// A shortest-ish odd cycle found by BFS 2-colouring, or nothing if g is bipartite.
inline std::optional<std::vector<Vertex>> find_odd_cycle(const Graph& g) {
  const std::size_t n = g.order();
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> depth(n, kNone);
  std::vector<Vertex> parent(n, 0);
  for (Vertex root = 0; root < n; ++root) {
    if (depth[root] != kNone) continue;
    depth[root] = 0;
    parent[root] = root;
    std::vector<Vertex> queue{root};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Vertex u = queue[head];
      for (Vertex w : g.neighbors(u)) {
        if (depth[w] == kNone) {
          depth[w] = depth[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        } else if (depth[w] % 2 == depth[u] % 2) {
          // BFS layers differ by at most one, so equal parity means equal depth.
          std::vector<Vertex> up{u};
          std::vector<Vertex> down{w};
          Vertex a = u;
          Vertex b = w;
          while (a != b) {
            a = parent[a];
            b = parent[b];
            up.push_back(a);
            down.push_back(b);
          }
          down.pop_back();
          up.insert(up.end(), down.rbegin(), down.rend());
          return up;
        }
      }
    }
  }
  return std::nullopt;
}

inline bool is_bipartite(const Graph& g) { return !find_odd_cycle(g).has_value(); }

/// Lexicographically smallest triangle (u < v < w).
inline std::optional<Triangle> find_triangle(const Graph& g) {
  const std::size_t words = g.words();
  for (Vertex u = 0; u < g.order(); ++u) {
    auto ru = g.row(u);
    for (Vertex v : g.neighbors(u)) {
      if (v <= u) continue;
      auto rv = g.row(v);
      for (std::size_t w = v / Graph::kWordBits; w < words; ++w) {
        Graph::Word common = ru[w] & rv[w];
        if (w == v / Graph::kWordBits) {
          auto shift = v % Graph::kWordBits + 1;
          common &= shift == Graph::kWordBits ? 0 : ~Graph::Word{0} << shift;
        }
        if (common != 0) {
          return Triangle{u, v, w * Graph::kWordBits + static_cast<std::size_t>(std::countr_zero(common))};
        }
      }
    }
  }
  return std::nullopt;
}

inline bool is_induced_p4(const Graph& g, const P4Occurrence& a) {
  const auto& p = a.path;
  for (Vertex v : p) {
    if (v >= g.order()) return false;
  }
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      if (p[i] == p[j]) return false;
      if (g.has_edge(p[i], p[j]) != (j == i + 1)) return false;
    }
  }
  return true;
}

/// Calls visit on every induced P4 (a1 < a4) in lexicographic order of
/// (a1, a2, a3, a4) until visit returns true. Returns whether it stopped early.
template <typename Visitor>
bool for_each_induced_p4(const Graph& g, Visitor&& visit) {
  const std::size_t n = g.order();
  const std::size_t words = g.words();
  for (Vertex a1 = 0; a1 < n; ++a1) {
    auto r1 = g.row(a1);
    for (Vertex a2 : g.neighbors(a1)) {
      auto r2 = g.row(a2);
      for (Vertex a3 : g.neighbors(a2)) {
        if (a3 == a1 || g.has_edge(a1, a3)) continue;
        auto r3 = g.row(a3);
        for (std::size_t w = a1 / Graph::kWordBits; w < words; ++w) {
          Graph::Word cand = r3[w] & ~r1[w] & ~r2[w];
          if (w == a1 / Graph::kWordBits) {
            auto shift = a1 % Graph::kWordBits + 1;
            cand &= shift == Graph::kWordBits ? 0 : ~Graph::Word{0} << shift;
          }
          if (w == a2 / Graph::kWordBits) cand &= ~(Graph::Word{1} << (a2 % Graph::kWordBits));
          for (; cand != 0; cand &= cand - 1) {
            Vertex a4 = w * Graph::kWordBits + static_cast<std::size_t>(std::countr_zero(cand));
            if (visit(P4Occurrence{{a1, a2, a3, a4}})) return true;
          }
        }
      }
    }
  }
  return false;
}

/// First induced P4 under the lexicographic scan.
inline std::optional<P4Occurrence> find_induced_p4(const Graph& g) {
  std::optional<P4Occurrence> found;
  for_each_induced_p4(g, [&](const P4Occurrence& a) {
    found = a;
    return true;
  });
  return found;
}

/// Bipartite and free of induced P4s; an independent route to is_bicluster.
inline bool is_bicluster_by_characterization(const Graph& g) {
  return is_bipartite(g) && !find_induced_p4(g).has_value();
}

struct PeripheryPartition {
  /// P(A): outside vertices with at least one neighbour in A.
  std::vector<Vertex> periphery;
  /// I(A): outside vertices with no neighbour in A.
  std::vector<Vertex> independent;
};

inline PeripheryPartition partition_periphery(const Graph& g, const P4Occurrence& a) {
  if (!is_induced_p4(g, a)) throw InputError("partition_periphery: not an induced P4");
  std::vector<Graph::Word> touched(g.words(), 0);
  for (Vertex v : a.path) {
    auto r = g.row(v);
    for (std::size_t w = 0; w < g.words(); ++w) touched[w] |= r[w];
  }
  PeripheryPartition out;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (a.contains(v)) continue;
    bool hit = (touched[v / Graph::kWordBits] >> (v % Graph::kWordBits)) & 1U;
    (hit ? out.periphery : out.independent).push_back(v);
  }
  return out;
}

}  // namespace bicluster

#endif  // BICLUSTER_STRUCTURE_HPP
