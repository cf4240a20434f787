#pragma once

// Shared fixtures for the test suite: hand-built graphs, deterministic
// random graphs, and relabeling.

#include <initializer_list>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include "homcx/graph.hpp"

namespace testutil {

inline homcx::Graph make_graph(int n, std::initializer_list<std::pair<int, int>> edges) {
  homcx::Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

/// Two triangles sharing vertex 0.
inline homcx::Graph bowtie() {
  return make_graph(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}});
}

/// Star K_{1,k} with center 0.
inline homcx::Graph star(int k) {
  homcx::Graph g(k + 1);
  for (int i = 1; i <= k; ++i) g.add_edge(0, i);
  return g;
}

inline homcx::Graph petersen() {
  homcx::Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);          // outer cycle
    g.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    g.add_edge(i, 5 + i);                // spokes
  }
  return g;
}

inline homcx::Graph relabel(const homcx::Graph& g, const std::vector<int>& perm) {
  homcx::Graph out(g.vertex_count());
  for (auto [u, v] : g.edges()) out.add_edge(perm[u], perm[v]);
  return out;
}

inline homcx::Graph random_graph(std::mt19937& rng, int n, double p, bool allow_loops = false) {
  homcx::Graph g(n);
  std::bernoulli_distribution coin(p);
  for (int u = 0; u < n; ++u)
    for (int v = u + (allow_loops ? 0 : 1); v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

inline homcx::Graph random_connected_graph(std::mt19937& rng, int n, double p,
                                           bool allow_loops = false) {
  while (true) {
    homcx::Graph g = random_graph(rng, n, p, allow_loops);
    if (homcx::is_connected(g) && g.edge_count() > 0) return g;
  }
}

}  // namespace testutil
