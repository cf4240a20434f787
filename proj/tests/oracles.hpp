#pragma once

// Independent reference implementations used only to cross-check the
// library: exhaustive hom enumeration, brute-force square detection,
// cycle-basis bipartiteness, fraction-free Gaussian rank, exhaustive walk
// rewriting, and hand-built simplicial complexes.

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "homcx/complex.hpp"
#include "homcx/graph.hpp"
#include "homcx/hom.hpp"

namespace testutil {

/// Every map V(g) -> V(h), filtered by the hom condition.
inline std::vector<homcx::Hom> brute_force_homs(const homcx::Graph& g, const homcx::Graph& h) {
  std::vector<homcx::Hom> out;
  const int n = g.vertex_count(), m = h.vertex_count();
  homcx::Hom f(n, 0);
  while (true) {
    if (homcx::is_hom(g, h, f)) out.push_back(f);
    int i = n - 1;
    while (i >= 0 && f[i] == m - 1) f[i--] = 0;
    if (i < 0) break;
    ++f[i];
  }
  return out;
}

/// Loops or 4-cycles by exhaustive tuple search.
inline bool brute_force_square_free(const homcx::Graph& g) {
  const int n = g.vertex_count();
  for (int v = 0; v < n; ++v)
    if (g.adjacent(v, v)) return false;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          std::set<int> four{a, b, c, d};
          if (four.size() != 4) continue;
          if (g.adjacent(a, b) && g.adjacent(b, c) && g.adjacent(c, d) && g.adjacent(d, a))
            return false;
        }
  return true;
}

/// Bipartite iff every fundamental cycle of a spanning forest has even
/// length (loops count as odd cycles).
inline bool bipartite_via_cycle_basis(const homcx::Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> depth(n, -1);
  std::vector<char> in_tree_done(n, 0);
  std::vector<std::pair<int, int>> tree;
  std::vector<int> parent(n, -1);
  for (int s = 0; s < n; ++s) {
    if (depth[s] != -1) continue;
    depth[s] = 0;
    std::vector<int> queue{s};
    for (std::size_t head = 0; head < queue.size(); ++head)
      for (int w : g.neighbors(queue[head]))
        if (w != queue[head] && depth[w] == -1) {
          depth[w] = depth[queue[head]] + 1;
          parent[w] = queue[head];
          queue.push_back(w);
        }
  }
  for (auto [u, v] : g.edges()) {
    if (u == v) return false;  // loop: odd cycle
    if (parent[v] == u || parent[u] == v) continue;
    if ((depth[u] + 1 + depth[v]) % 2 == 1) return false;
  }
  return true;
}

/// Rank over the rationals by fraction-free (Bareiss) elimination.
inline int bareiss_rank(std::vector<std::vector<boost::multiprecision::cpp_int>> m) {
  using Int = boost::multiprecision::cpp_int;
  if (m.empty() || m[0].empty()) return 0;
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m[0].size());
  int rank = 0;
  Int prev = 1;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (m[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot == -1) continue;
    std::swap(m[rank], m[pivot]);
    for (int r = rank + 1; r < rows; ++r) {
      for (int c = col + 1; c < cols; ++c)
        m[r][c] = (m[rank][col] * m[r][c] - m[r][col] * m[rank][c]) / prev;
      m[r][col] = 0;
    }
    prev = m[rank][col];
    ++rank;
  }
  return rank;
}

/// All backtrack-free forms reachable by deleting (x, y, x) detours in any
/// order; used to confirm the reduction is confluent.
inline std::set<std::vector<int>> all_reduced_forms(const std::vector<int>& walk) {
  std::set<std::vector<int>> seen, normal;
  std::vector<std::vector<int>> stack{walk};
  seen.insert(walk);
  while (!stack.empty()) {
    std::vector<int> w = stack.back();
    stack.pop_back();
    bool reducible = false;
    for (std::size_t i = 0; i + 2 < w.size(); ++i) {
      if (w[i] != w[i + 2]) continue;
      reducible = true;
      std::vector<int> next;
      next.insert(next.end(), w.begin(), w.begin() + i + 1);
      next.insert(next.end(), w.begin() + i + 3, w.end());
      if (seen.insert(next).second) stack.push_back(next);
    }
    if (!reducible) normal.insert(w);
  }
  return normal;
}

/// Face-closed order complex from maximal simplices given as vertex lists;
/// for feeding hand-made complexes to the homology stage.
inline homcx::OrderComplex make_complex(const std::vector<std::vector<int>>& maximal) {
  std::vector<std::set<std::vector<int>>> by_dim;
  for (std::vector<int> s : maximal) {
    std::sort(s.begin(), s.end());
    const int k = static_cast<int>(s.size());
    for (unsigned mask = 1; mask < (1u << k); ++mask) {
      std::vector<int> face;
      for (int i = 0; i < k; ++i)
        if (mask & (1u << i)) face.push_back(s[i]);
      int d = static_cast<int>(face.size()) - 1;
      if (d >= static_cast<int>(by_dim.size())) by_dim.resize(d + 1);
      by_dim[d].insert(face);
    }
  }
  homcx::OrderComplex x;
  x.requested_max_dim = static_cast<int>(by_dim.size()) - 1;
  x.truncated = false;
  x.simplices.resize(by_dim.size());
  for (std::size_t d = 0; d < by_dim.size(); ++d)
    for (const auto& s : by_dim[d])
      x.simplices[d].insert(x.simplices[d].end(), s.begin(), s.end());
  return x;
}

/// Minimal 6-vertex triangulation of the real projective plane.
inline std::vector<std::vector<int>> projective_plane_faces() {
  return {{0, 1, 2}, {0, 1, 3}, {0, 2, 4}, {0, 3, 5}, {0, 4, 5},
          {1, 2, 5}, {1, 3, 4}, {1, 4, 5}, {2, 3, 4}, {2, 3, 5}};
}

/// Seven-vertex triangulation of the torus.
inline std::vector<std::vector<int>> torus_faces() {
  std::vector<std::vector<int>> out;
  for (int i = 0; i < 7; ++i) {
    out.push_back({i, (i + 1) % 7, (i + 3) % 7});
    out.push_back({i, (i + 2) % 7, (i + 3) % 7});
  }
  return out;
}

}  // namespace testutil
