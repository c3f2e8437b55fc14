#ifndef BICLUSTER_EDIT_ENUM_HPP
#define BICLUSTER_EDIT_ENUM_HPP

// Brute-force editing sets for graphs on a handful of vertices.
//
// Small graphs are encoded as bit masks over their vertex pairs, with pair
// (u, v), u < v, at position u*(2n-u-1)/2 + (v-u-1). That order coincides
// with the canonical order of VertexPair, so lexicographic order on index
// lists is lexicographic order on sorted pair lists.

#include <array>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "bicluster/graph.hpp"

namespace bicluster {

namespace small {

using Mask = std::uint32_t;

/// Largest order the mask encoding supports (C(8,2) = 28 pairs).
inline constexpr std::size_t kMaxOrder = 8;
/// Orders up to this use a precomputed bicluster table.
inline constexpr std::size_t kTableOrder = 6;

constexpr std::size_t pair_count(std::size_t n) { return n * (n - 1) / 2; }

constexpr std::size_t pair_index(std::size_t n, Vertex u, Vertex v) {
  if (u > v) std::swap(u, v);
  return u * (2 * n - u - 1) / 2 + (v - u - 1);
}

inline std::vector<VertexPair> pair_list(std::size_t n) {
  std::vector<VertexPair> out;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) out.emplace_back(u, v);
  }
  return out;
}

inline Mask encode(const Graph& g) {
  if (g.order() > kMaxOrder) throw InputError("graph too large for mask encoding");
  Mask m = 0;
  for (const auto& e : g.edges()) m |= Mask{1} << pair_index(g.order(), e.first(), e.second());
  return m;
}

inline Graph decode(std::size_t n, Mask m) {
  Graph g(n);
  auto pairs = pair_list(n);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if ((m >> i) & 1U) g.add_edge(pairs[i].first(), pairs[i].second());
  }
  return g;
}

inline EditSet to_edit_set(std::size_t n, Mask m) {
  EditSet out;
  auto pairs = pair_list(n);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if ((m >> i) & 1U) out.insert(pairs[i]);
  }
  return out;
}

/// Direct check: each non-trivial component is a biclique.
inline bool compute_is_bicluster(std::size_t n, Mask m) {
  std::array<std::uint8_t, kMaxOrder> adj{};
  std::size_t idx = 0;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v, ++idx) {
      if ((m >> idx) & 1U) {
        adj[u] |= static_cast<std::uint8_t>(1U << v);
        adj[v] |= static_cast<std::uint8_t>(1U << u);
      }
    }
  }
  unsigned seen = 0;
  for (Vertex s = 0; s < n; ++s) {
    if ((seen >> s) & 1U) continue;
    unsigned comp = 1U << s;
    unsigned frontier = comp;
    while (frontier != 0) {
      unsigned next = 0;
      for (unsigned f = frontier; f != 0; f &= f - 1) next |= adj[std::countr_zero(f)];
      frontier = next & ~comp;
      comp |= next;
    }
    seen |= comp;
    if (std::popcount(comp) < 2) continue;
    unsigned right = adj[s];
    unsigned left = comp & ~right;
    for (unsigned f = left; f != 0; f &= f - 1) {
      if (adj[std::countr_zero(f)] != right) return false;
    }
    for (unsigned f = right; f != 0; f &= f - 1) {
      if (adj[std::countr_zero(f)] != left) return false;
    }
  }
  return true;
}

namespace detail {

inline const std::array<std::vector<bool>, kTableOrder + 1>& bicluster_tables() {
  static const auto tables = [] {
    std::array<std::vector<bool>, kTableOrder + 1> t;
    for (std::size_t n = 0; n <= kTableOrder; ++n) {
      t[n].resize(std::size_t{1} << pair_count(n));
      for (Mask m = 0; m < t[n].size(); ++m) t[n][m] = compute_is_bicluster(n, m);
    }
    return t;
  }();
  return tables;
}

}  // namespace detail

inline bool is_bicluster(std::size_t n, Mask m) {
  if (n <= kTableOrder) return detail::bicluster_tables()[n][m];
  return compute_is_bicluster(n, m);
}

/// Visits every k-subset of {0..m-1}, as a mask, in lexicographic order of the
/// sorted index lists. Stops when visit returns true.
template <typename Visitor>
bool for_each_combination(std::size_t m, std::size_t k, Visitor&& visit) {
  if (k > m) return false;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    Mask mask = 0;
    for (auto i : idx) mask |= Mask{1} << i;
    if (visit(mask)) return true;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == m - k + (i - 1)) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

/// All inclusion-minimal editing sets of the graph (n, g), by size then lexicographically.
inline std::vector<Mask> minimal_editing_masks(std::size_t n, Mask g) {
  std::vector<Mask> members;
  const std::size_t m = pair_count(n);
  for (std::size_t k = 0; k <= m; ++k) {
    for_each_combination(m, k, [&](Mask f) {
      if (!is_bicluster(n, g ^ f)) return false;
      for (Mask kept : members) {
        if ((f & kept) == kept) return false;
      }
      members.push_back(f);
      return false;
    });
    if (k == 0 && !members.empty()) break;
  }
  return members;
}

/// Lexicographically first editing set of minimum size.
inline Mask minimum_editing_mask(std::size_t n, Mask g) {
  const std::size_t m = pair_count(n);
  Mask best = 0;
  for (std::size_t k = 0; k <= m; ++k) {
    bool found = for_each_combination(m, k, [&](Mask f) {
      if (!is_bicluster(n, g ^ f)) return false;
      best = f;
      return true;
    });
    if (found) return best;
  }
  throw InvariantViolation("no editing set found");  // the complete bipartite edit always exists
}

/// Memoised minimal_editing_masks, keyed by (order, graph mask).
class FminTable {
 public:
  const std::vector<Mask>& family(std::size_t n, Mask g) {
    auto key = (static_cast<std::uint64_t>(n) << 32) | g;
    auto it = cache_.find(key);
    if (it == cache_.end()) it = cache_.emplace(key, minimal_editing_masks(n, g)).first;
    return it->second;
  }

  std::size_t size() const { return cache_.size(); }

 private:
  std::unordered_map<std::uint64_t, std::vector<Mask>> cache_;
};

}  // namespace small

/// Order limits guarding the exponential enumerations.
struct EnumLimits {
  std::size_t fmin_max_order = 6;
  std::size_t minimum_max_order = 8;
};

struct MinimalEditFamily {
  std::size_t graph_size = 0;
  std::vector<EditSet> members;
};

inline MinimalEditFamily minimal_editing_sets(const Graph& g, const EnumLimits& limits = {}) {
  auto bound = std::min(limits.fmin_max_order, small::kMaxOrder);
  if (g.order() > bound) {
    throw InputError("minimal_editing_sets: order " + std::to_string(g.order()) +
                     " exceeds bound " + std::to_string(bound));
  }
  MinimalEditFamily out{g.order(), {}};
  for (auto f : small::minimal_editing_masks(g.order(), small::encode(g))) {
    out.members.push_back(small::to_edit_set(g.order(), f));
  }
  return out;
}

inline EditSet minimum_editing_set(const Graph& g, const EnumLimits& limits = {}) {
  auto bound = std::min(limits.minimum_max_order, small::kMaxOrder);
  if (g.order() > bound) {
    throw InputError("minimum_editing_set: order " + std::to_string(g.order()) +
                     " exceeds bound " + std::to_string(bound));
  }
  return small::to_edit_set(g.order(), small::minimum_editing_mask(g.order(), small::encode(g)));
}

}  // namespace bicluster

#endif  // BICLUSTER_EDIT_ENUM_HPP
