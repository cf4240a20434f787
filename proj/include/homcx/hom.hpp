#pragma once

// Graph homomorphisms and multihomomorphisms (set-valued maps all of whose
// selections are homs), enumeration with arc-consistency pruning, the
// reconfiguration graph whose edges join maps with a common multihom upper
// bound, and neighborhood folds of the target.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "homcx/errors.hpp"
#include "homcx/graph.hpp"

namespace homcx {

/// A homomorphism as the image vector f[x] over source vertices x.
using Hom = std::vector<int>;

/// Set-valued map as one 64-bit mask of target vertices per source vertex.
/// Valid ("a multihom") iff choices[x] * choices[y] lands in E(H) for every
/// edge (x, y) of G; every mask must be non-empty.
struct MultiHom {
  std::vector<std::uint64_t> choices;

  friend bool operator==(const MultiHom& a, const MultiHom& b) {
    return a.choices == b.choices;
  }
  friend bool operator<(const MultiHom& a, const MultiHom& b) {
    return a.choices < b.choices;
  }
};

/// Target adjacency as neighborhood bitmasks. The mask representation caps
/// targets at 64 vertices.
struct AdjacencyMasks {
  int n = 0;
  std::vector<std::uint64_t> nbr;

  static AdjacencyMasks of(const Graph& h) {
    if (h.vertex_count() > 64)
      throw ResourceLimit("target-vertex cap: set-valued maps support at most 64 target vertices");
    AdjacencyMasks m;
    m.n = h.vertex_count();
    m.nbr.assign(m.n, 0);
    for (int v = 0; v < m.n; ++v)
      for (int w : h.neighbors(v)) m.nbr[v] |= std::uint64_t{1} << w;
    return m;
  }

  std::uint64_t all() const {
    return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  }

  /// Common neighborhood of a vertex set.
  std::uint64_t common_neighbors(std::uint64_t set) const {
    std::uint64_t acc = all();
    while (set) {
      int v = std::countr_zero(set);
      set &= set - 1;
      acc &= nbr[v];
    }
    return acc;
  }
};

inline bool is_hom(const Graph& g, const Graph& h, const Hom& f) {
  if (static_cast<int>(f.size()) != g.vertex_count()) return false;
  for (int v : f)
    if (v < 0 || v >= h.vertex_count()) return false;
  for (auto [x, y] : g.edges())
    if (!h.adjacent(f[x], f[y])) return false;
  return true;
}

inline MultiHom to_multihom(const Hom& f) {
  MultiHom m;
  m.choices.reserve(f.size());
  for (int v : f) m.choices.push_back(std::uint64_t{1} << v);
  return m;
}

inline bool is_multihom(const Graph& g, const AdjacencyMasks& h, const MultiHom& m) {
  if (static_cast<int>(m.choices.size()) != g.vertex_count()) return false;
  for (std::uint64_t set : m.choices)
    if (set == 0 || (set & ~h.all())) return false;
  for (auto [x, y] : g.edges())
    if (m.choices[y] & ~h.common_neighbors(m.choices[x])) return false;
  return true;
}

/// Total set size minus one per vertex: the dimension of the cell the
/// multihom spans.
inline int multihom_dim(const MultiHom& m) {
  int d = 0;
  for (std::uint64_t set : m.choices) d += std::popcount(set) - 1;
  return d;
}

inline MultiHom multihom_union(const MultiHom& a, const MultiHom& b) {
  MultiHom u;
  u.choices.resize(a.choices.size());
  for (std::size_t i = 0; i < a.choices.size(); ++i)
    u.choices[i] = a.choices[i] | b.choices[i];
  return u;
}

inline bool multihom_leq(const MultiHom& a, const MultiHom& b) {
  for (std::size_t i = 0; i < a.choices.size(); ++i)
    if (a.choices[i] & ~b.choices[i]) return false;
  return true;
}

/// All homs obtainable by picking one target vertex per source vertex.
inline std::vector<Hom> selections(const MultiHom& m) {
  std::vector<Hom> out;
  Hom cur(m.choices.size());
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == m.choices.size()) {
      out.push_back(cur);
      return;
    }
    std::uint64_t set = m.choices[i];
    while (set) {
      cur[i] = std::countr_zero(set);
      set &= set - 1;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  return out;
}

/// Two homs are adjacent in the reconfiguration sense iff their pointwise
/// union is a multihom, i.e. f(x) ~ g(y) for every edge (x, y) of G.
inline bool xhomotopy_adjacent(const Graph& g, const Graph& h, const Hom& f, const Hom& f2) {
  for (auto [x, y] : g.edges()) {
    if (!h.adjacent(f[x], f2[y])) return false;
    if (x != y && !h.adjacent(f2[x], f[y])) return false;
  }
  return true;
}

/// Every hom G -> H in lexicographic image order. Backtracking search over
/// source vertices 0..n-1 with one initial arc-consistency pass and forward
/// checking during descent. Throws ResourceLimit beyond max_homs.
inline std::vector<Hom> enumerate_homs(const Graph& g, const Graph& h,
                                       std::size_t max_homs = 200000) {
  const int n = g.vertex_count();
  const AdjacencyMasks masks = AdjacencyMasks::of(h);
  if (n == 0) return {Hom{}};
  if (h.vertex_count() == 0) return {};

  std::vector<std::uint64_t> dom(n, masks.all());
  for (int v = 0; v < n; ++v)
    if (g.has_loop(v)) {
      dom[v] = 0;
      for (int w = 0; w < h.vertex_count(); ++w)
        if (h.has_loop(w)) dom[v] |= std::uint64_t{1} << w;
    }

  // Arc consistency: y stays in dom[u] only while every neighbor of u can
  // still map into N(y).
  std::vector<std::pair<int, int>> arcs;
  for (auto [x, y] : g.edges()) {
    arcs.emplace_back(x, y);
    if (x != y) arcs.emplace_back(y, x);
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto [u, v] : arcs) {
      std::uint64_t keep = 0, set = dom[u];
      while (set) {
        int y = std::countr_zero(set);
        set &= set - 1;
        if (masks.nbr[y] & dom[v]) keep |= std::uint64_t{1} << y;
      }
      if (keep != dom[u]) {
        dom[u] = keep;
        changed = true;
      }
    }
  }
  for (int v = 0; v < n; ++v)
    if (dom[v] == 0) return {};

  std::vector<Hom> out;
  Hom cur(n);
  std::vector<std::uint64_t> stack_dom = dom;
  auto rec = [&](auto&& self, int v, const std::vector<std::uint64_t>& live) -> void {
    if (v == n) {
      if (out.size() >= max_homs)
        throw ResourceLimit("hom cap exceeded (max-homs = " + std::to_string(max_homs) + ")");
      out.push_back(cur);
      return;
    }
    std::uint64_t set = live[v];
    while (set) {
      int y = std::countr_zero(set);
      set &= set - 1;
      std::vector<std::uint64_t> next = live;
      next[v] = std::uint64_t{1} << y;
      bool dead = false;
      for (int w : g.neighbors(v)) {
        if (w <= v) continue;  // already assigned (or v itself)
        next[w] &= masks.nbr[y];
        if (next[w] == 0) {
          dead = true;
          break;
        }
      }
      cur[v] = y;
      if (!dead) self(self, v + 1, next);
    }
  };
  rec(rec, 0, stack_dom);
  return out;
}

/// The reconfiguration graph on Hom(G, H): vertex i is homs[i] (lexicographic
/// order), edges join adjacent homs, components are numbered by smallest
/// member index.
struct ReconfigGraph {
  std::vector<Hom> homs;
  std::vector<std::pair<int, int>> edges;         // i < j, sorted
  std::vector<std::vector<int>> adjacency;        // sorted neighbor ids
  std::vector<int> component_id;                  // per hom
  int component_count = 0;
  std::vector<std::vector<int>> component_members;  // sorted hom ids per component
};

inline ReconfigGraph build_reconfig_graph(const Graph& g, const Graph& h,
                                          std::vector<Hom> homs) {
  ReconfigGraph rg;
  rg.homs = std::move(homs);
  const int m = static_cast<int>(rg.homs.size());
  rg.adjacency.resize(m);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (xhomotopy_adjacent(g, h, rg.homs[i], rg.homs[j])) {
        rg.edges.emplace_back(i, j);
        rg.adjacency[i].push_back(j);
        rg.adjacency[j].push_back(i);
      }

  rg.component_id.assign(m, -1);
  for (int s = 0; s < m; ++s) {
    if (rg.component_id[s] != -1) continue;
    int id = rg.component_count++;
    std::vector<int> queue{s};
    rg.component_id[s] = id;
    for (std::size_t head = 0; head < queue.size(); ++head)
      for (int w : rg.adjacency[queue[head]])
        if (rg.component_id[w] == -1) {
          rg.component_id[w] = id;
          queue.push_back(w);
        }
  }
  rg.component_members.resize(rg.component_count);
  for (int i = 0; i < m; ++i) rg.component_members[rg.component_id[i]].push_back(i);
  return rg;
}

inline ReconfigGraph reconfig_components(const Graph& g, const Graph& h,
                                         std::size_t max_homs = 200000) {
  return build_reconfig_graph(g, h, enumerate_homs(g, h, max_homs));
}

/// Shortest reconfiguration walk from f to g, as a hom sequence, if they lie
/// in the same component.
inline std::optional<std::vector<Hom>> find_xhomotopy_path(const Graph& g, const Graph& h,
                                                           const Hom& from, const Hom& to,
                                                           std::size_t max_homs = 200000) {
  if (!is_hom(g, h, from)) throw InvalidInput("path start is not a homomorphism");
  if (!is_hom(g, h, to)) throw InvalidInput("path end is not a homomorphism");
  ReconfigGraph rg = reconfig_components(g, h, max_homs);
  auto locate = [&](const Hom& f) {
    auto it = std::lower_bound(rg.homs.begin(), rg.homs.end(), f);
    return static_cast<int>(it - rg.homs.begin());
  };
  int s = locate(from), t = locate(to);
  std::vector<int> parent(rg.homs.size(), -2);
  parent[s] = -1;
  std::vector<int> queue{s};
  for (std::size_t head = 0; head < queue.size() && parent[t] == -2; ++head)
    for (int w : rg.adjacency[queue[head]])
      if (parent[w] == -2) {
        parent[w] = queue[head];
        queue.push_back(w);
      }
  if (parent[t] == -2) return std::nullopt;
  std::vector<Hom> path;
  for (int v = t; v != -1; v = parent[v]) path.push_back(rg.homs[v]);
  std::reverse(path.begin(), path.end());
  return path;
}

/// Iterated neighborhood folds: while some vertex u has N(u) contained in
/// N(w) for another vertex w, drop u (smallest such u first, smallest
/// witness w). The result is a retract with the same hom-space topology.
struct FoldResult {
  Graph graph;
  std::vector<int> vertex_map;  // original vertex -> vertex of the fold
};

inline FoldResult fold_reduce(const Graph& h) {
  const int n = h.vertex_count();
  std::vector<char> alive(n, 1);
  std::vector<int> folded_to(n, -1);

  auto nbr_set = [&](int v) {
    std::vector<int> out;
    for (int w : h.neighbors(v))
      if (alive[w]) out.push_back(w);
    return out;
  };
  // Neighborhoods are evaluated in the current induced subgraph; folding a
  // vertex can create new containments, so scan until stable.
  bool changed = true;
  while (changed) {
    changed = false;
    for (int u = 0; u < n && !changed; ++u) {
      if (!alive[u]) continue;
      std::vector<int> nu = nbr_set(u);
      for (int w = 0; w < n; ++w) {
        if (w == u || !alive[w]) continue;
        std::vector<int> nw = nbr_set(w);
        if (std::includes(nw.begin(), nw.end(), nu.begin(), nu.end())) {
          alive[u] = 0;
          folded_to[u] = w;
          changed = true;
          break;
        }
      }
    }
  }

  std::vector<int> new_id(n, -1);
  int next = 0;
  for (int v = 0; v < n; ++v)
    if (alive[v]) new_id[v] = next++;

  FoldResult r;
  r.graph = Graph(next);
  for (auto [u, v] : h.edges())
    if (alive[u] && alive[v]) r.graph.add_edge(new_id[u], new_id[v]);
  r.vertex_map.resize(n);
  for (int v = 0; v < n; ++v) {
    int x = v;
    while (!alive[x]) x = folded_to[x];
    r.vertex_map[v] = new_id[x];
  }
  return r;
}

}  // namespace homcx
