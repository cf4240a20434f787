#pragma once

// Finite graphs with loops: dense vertex ids, symmetric adjacency, no
// multi-edges. Also the standard families (paths, cycles, complete graphs,
// intervals, theta graphs) and the predicates the rest of the library
// builds on: connectivity, bipartiteness, square-freeness, categorical
// products, BFS distance.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "homcx/errors.hpp"

namespace homcx {

/// A walk is a vertex sequence; consecutive entries must be adjacent.
using Walk = std::vector<int>;

class Graph {
 public:
  Graph() = default;

  explicit Graph(int n) {
    if (n < 0) throw InvalidInput("graph order must be non-negative");
    n_ = n;
    adj_.assign(static_cast<std::size_t>(n) * n, 0);
    nbrs_.resize(n);
  }

  int vertex_count() const { return n_; }

  /// Unordered edge count; a loop counts once.
  int edge_count() const { return m_; }

  /// Inserts {u, v} (a loop when u == v). Re-adding an edge is a no-op.
  void add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (adjacent(u, v)) return;
    at(u, v) = at(v, u) = 1;
    insert_sorted(nbrs_[u], v);
    if (u != v) insert_sorted(nbrs_[v], u);
    ++m_;
  }

  bool adjacent(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return at(u, v) != 0;
  }

  /// Sorted neighbor list; contains v itself exactly when v has a loop.
  const std::vector<int>& neighbors(int v) const {
    check_vertex(v);
    return nbrs_[v];
  }

  int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

  bool has_loop(int v) const { return adjacent(v, v); }

  bool has_any_loop() const {
    for (int v = 0; v < n_; ++v)
      if (at(v, v)) return true;
    return false;
  }

  /// Edges as (u, v) pairs with u <= v, sorted lexicographically.
  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
      for (int v : nbrs_[u])
        if (v >= u) out.emplace_back(u, v);
    return out;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }

 private:
  void check_vertex(int v) const {
    if (v < 0 || v >= n_) throw InvalidInput("vertex id out of range");
  }

  std::uint8_t& at(int u, int v) {
    return adj_[static_cast<std::size_t>(u) * n_ + v];
  }
  std::uint8_t at(int u, int v) const {
    return adj_[static_cast<std::size_t>(u) * n_ + v];
  }

  static void insert_sorted(std::vector<int>& xs, int v) {
    xs.insert(std::lower_bound(xs.begin(), xs.end(), v), v);
  }

  int n_ = 0;
  int m_ = 0;
  std::vector<std::uint8_t> adj_;      // flat n x n incidence
  std::vector<std::vector<int>> nbrs_; // sorted per vertex
};

/// A graph with a chosen basepoint vertex.
struct BasedGraph {
  Graph graph;
  int basepoint = 0;
};

// ---------------------------------------------------------------------------
// Traversal predicates
// ---------------------------------------------------------------------------

/// Connected-component label per vertex; labels are 0-based in order of the
/// smallest vertex of each component.
inline std::vector<int> component_labels(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> label(n, -1);
  int next = 0;
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (label[s] != -1) continue;
    label[s] = next;
    stack.assign(1, s);
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int w : g.neighbors(u))
        if (label[w] == -1) {
          label[w] = next;
          stack.push_back(w);
        }
    }
    ++next;
  }
  return label;
}

inline bool is_connected(const Graph& g) {
  if (g.vertex_count() == 0) return true;
  auto label = component_labels(g);
  return *std::max_element(label.begin(), label.end()) == 0;
}

/// Two-coloring by BFS when one exists. Loops force failure. Disconnected
/// graphs are colored per component (component roots get color 0).
inline std::optional<std::vector<int>> bipartition(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> color(n, -1);
  std::vector<int> queue;
  for (int s = 0; s < n; ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    queue.assign(1, s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      int u = queue[head];
      for (int w : g.neighbors(u)) {
        if (color[w] == -1) {
          color[w] = 1 - color[u];
          queue.push_back(w);
        } else if (color[w] == color[u]) {
          return std::nullopt;  // odd closed walk (includes loops)
        }
      }
    }
  }
  return color;
}

inline bool is_bipartite(const Graph& g) { return bipartition(g).has_value(); }

/// Smallest witness that g is not square-free: a single vertex [v] when v
/// carries a loop, else a 4-cycle [a, b, c, d] (edges ab, bc, cd, da), else
/// nothing. "Square-free" bans loops and 4-cycles, subgraph-wise; triangles
/// are fine.
inline std::optional<std::vector<int>> square_violation(const Graph& g) {
  const int n = g.vertex_count();
  for (int v = 0; v < n; ++v)
    if (g.has_loop(v)) return std::vector<int>{v};
  // A 4-cycle through a and c exists iff they share two neighbors.
  for (int a = 0; a < n; ++a) {
    for (int c = a + 1; c < n; ++c) {
      int b = -1;
      for (int x : g.neighbors(a)) {
        if (x == a || x == c || !g.adjacent(x, c)) continue;
        if (b == -1) {
          b = x;
        } else {
          return std::vector<int>{a, b, c, x};
        }
      }
    }
  }
  return std::nullopt;
}

inline bool is_square_free(const Graph& g) { return !square_violation(g); }

/// Categorical (tensor) product: vertex (x, y) -> x * |V(h)| + y, with
/// (x, y) ~ (x', y') iff x ~ x' in g and y ~ y' in h.
inline Graph categorical_product(const Graph& g, const Graph& h) {
  const int ng = g.vertex_count(), nh = h.vertex_count();
  Graph p(ng * nh);
  for (int x = 0; x < ng; ++x)
    for (int xx : g.neighbors(x))
      for (int y = 0; y < nh; ++y)
        for (int yy : h.neighbors(y)) {
          int a = x * nh + y, b = xx * nh + yy;
          if (a <= b) p.add_edge(a, b);
        }
  return p;
}

/// BFS distance, or nothing if v is unreachable from u.
inline std::optional<int> distance(const Graph& g, int u, int v) {
  if (u < 0 || u >= g.vertex_count() || v < 0 || v >= g.vertex_count())
    throw InvalidInput("vertex id out of range");
  std::vector<int> dist(g.vertex_count(), -1);
  dist[u] = 0;
  std::vector<int> queue{u};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int x = queue[head];
    if (x == v) return dist[x];
    for (int w : g.neighbors(x))
      if (dist[w] == -1) {
        dist[w] = dist[x] + 1;
        queue.push_back(w);
      }
  }
  return dist[v] == -1 ? std::nullopt : std::optional<int>(dist[v]);
}

inline bool is_walk(const Graph& g, const Walk& w) {
  if (w.empty()) return false;
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (!g.adjacent(w[i], w[i + 1])) return false;
  return true;
}

/// Euler characteristic of the graph viewed as a 1-complex: V - E.
inline int euler_characteristic(const Graph& g) {
  return g.vertex_count() - g.edge_count();
}

// ---------------------------------------------------------------------------
// Standard families
// ---------------------------------------------------------------------------

namespace graphs {

/// Path with n edges on vertices 0..n.
inline Graph path(int n) {
  if (n < 1) throw InvalidInput("path length must be >= 1");
  Graph g(n + 1);
  for (int i = 0; i < n; ++i) g.add_edge(i, i + 1);
  return g;
}

/// Cycle on vertices 0..n-1, n >= 3.
inline Graph cycle(int n) {
  if (n < 3) throw InvalidInput("cycle length must be >= 3");
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

/// Complete graph on n vertices (no loops).
inline Graph complete(int n) {
  if (n < 1) throw InvalidInput("complete graph needs >= 1 vertex");
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

/// Interval graph on 0..n: i ~ j iff |i - j| <= 1, so every vertex has a
/// loop. n = 0 gives the single looped vertex.
inline Graph interval(int n) {
  if (n < 0) throw InvalidInput("interval index must be >= 0");
  Graph g(n + 1);
  for (int i = 0; i <= n; ++i) {
    g.add_edge(i, i);
    if (i < n) g.add_edge(i, i + 1);
  }
  return g;
}

/// Theta graph: two hub vertices 0 and 1 joined by three internally
/// disjoint paths of a, b, c edges. Arms of length 1 coincide (the
/// representation has no parallel edges).
inline Graph theta(int a, int b, int c) {
  if (a < 1 || b < 1 || c < 1) throw InvalidInput("theta arm lengths must be >= 1");
  int internal = (a - 1) + (b - 1) + (c - 1);
  Graph g(2 + internal);
  int next = 2;
  for (int len : {a, b, c}) {
    int prev = 0;
    for (int i = 1; i < len; ++i) {
      g.add_edge(prev, next);
      prev = next++;
    }
    g.add_edge(prev, 1);
  }
  return g;
}

}  // namespace graphs

}  // namespace homcx
