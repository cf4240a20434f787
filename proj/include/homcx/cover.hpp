#pragma once

// Walk reduction in a square-free target, finite balls of its walk tree
// (the universal loop-free double-sheet-free cover restricted to a radius),
// local bijectivity verification, and the subgroup of classes realized by
// reconfiguration loops at a fixed hom.

#include <algorithm>
#include <string>
#include <vector>

#include "homcx/errors.hpp"
#include "homcx/free_group.hpp"
#include "homcx/graph.hpp"
#include "homcx/hom.hpp"

namespace homcx {

/// Backtrack-free form of a walk: repeatedly delete (x, y, x) detours. The
/// result is the canonical representative of the walk's class for
/// square-free targets, where backtrack moves generate all walk homotopies.
inline Walk reduce_walk(const Graph& h, const Walk& w) {
  if (auto witness = square_violation(h))
    throw InvalidInput("walk reduction needs a square-free graph");
  if (!is_walk(h, w)) throw InvalidInput("not a walk");
  Walk out;
  for (int x : w) {
    if (out.size() >= 2 && out[out.size() - 2] == x)
      out.pop_back();
    else
      out.push_back(x);
  }
  return out;
}

/// Radius-r ball of the tree of backtrack-free walks out of a base vertex.
/// Vertex 0 is the empty walk; each vertex projects to the walk's endpoint.
struct CoverBall {
  Graph tree;
  int root = 0;
  int radius = 0;
  std::vector<int> projection;
  std::vector<int> depth;
  std::vector<int> parent;  // -1 at the root

  /// Interior vertices are those whose 2-neighborhood lies inside the ball.
  bool interior(int v) const { return depth[v] <= radius - 2; }
};

inline CoverBall cover_ball(const Graph& h, int base, int radius,
                            std::size_t max_vertices = 1000000) {
  if (base < 0 || base >= h.vertex_count()) throw InvalidInput("ball base out of range");
  if (radius < 0) throw InvalidInput("ball radius must be >= 0");
  if (auto witness = square_violation(h))
    throw InvalidInput("cover balls need a square-free graph");

  CoverBall b;
  b.radius = radius;
  b.projection.push_back(base);
  b.depth.push_back(0);
  b.parent.push_back(-1);
  for (std::size_t head = 0; head < b.projection.size(); ++head) {
    if (b.depth[head] == radius) continue;
    int last = b.projection[head];
    int prev = b.parent[head] == -1 ? -1 : b.projection[b.parent[head]];
    for (int y : h.neighbors(last)) {
      if (y == prev) continue;  // extending would backtrack
      if (b.projection.size() >= max_vertices)
        throw ResourceLimit("cover-ball vertex cap (max-ball = " +
                            std::to_string(max_vertices) + ")");
      b.projection.push_back(y);
      b.depth.push_back(b.depth[head] + 1);
      b.parent.push_back(static_cast<int>(head));
    }
  }
  b.tree = Graph(static_cast<int>(b.projection.size()));
  for (std::size_t v = 1; v < b.projection.size(); ++v)
    b.tree.add_edge(static_cast<int>(v), b.parent[v]);
  return b;
}

/// Checks that the ball's projection is locally what a covering of this kind
/// must be: a graph map that is bijective on neighborhoods N(v) wherever the
/// ball contains them (depth <= r-1) and on two-step neighborhoods
/// N2(v) = union of N(y) over y in N(v) wherever it contains those
/// (depth <= r-2). Depths are recomputed from the tree, so a corrupted ball
/// fails honestly.
inline bool verify_two_covering(const CoverBall& ball, const Graph& h) {
  const int n = ball.tree.vertex_count();
  if (static_cast<int>(ball.projection.size()) != n) return false;
  if (ball.root < 0 || ball.root >= n) return false;
  for (int p : ball.projection)
    if (p < 0 || p >= h.vertex_count()) return false;

  for (auto [u, v] : ball.tree.edges())
    if (!h.adjacent(ball.projection[u], ball.projection[v])) return false;

  std::vector<int> dist(n, -1);
  dist[ball.root] = 0;
  std::vector<int> queue{ball.root};
  for (std::size_t head = 0; head < queue.size(); ++head)
    for (int w : ball.tree.neighbors(queue[head]))
      if (dist[w] == -1) {
        dist[w] = dist[queue[head]] + 1;
        queue.push_back(w);
      }
  for (int v = 0; v < n; ++v)
    if (dist[v] == -1 || dist[v] > ball.radius) return false;

  auto two_step = [](const Graph& g, int v) {
    std::vector<int> out;
    for (int a : g.neighbors(v))
      for (int b : g.neighbors(a)) out.push_back(b);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  };

  for (int v = 0; v < n; ++v) {
    if (dist[v] <= ball.radius - 1) {
      const auto& nbrs = ball.tree.neighbors(v);
      std::vector<int> image;
      for (int u : nbrs) image.push_back(ball.projection[u]);
      std::sort(image.begin(), image.end());
      if (std::adjacent_find(image.begin(), image.end()) != image.end()) return false;
      std::vector<int> target = h.neighbors(ball.projection[v]);
      if (image != target) return false;
    }
    if (dist[v] <= ball.radius - 2) {
      std::vector<int> around;
      for (int u : two_step(ball.tree, v)) around.push_back(ball.projection[u]);
      std::sort(around.begin(), around.end());
      if (std::adjacent_find(around.begin(), around.end()) != around.end()) return false;
      if (around != two_step(h, ball.projection[v])) return false;
    }
  }
  return true;
}

/// The class realized by a reconfiguration loop at f = loop.front(): the
/// interleaved closed walk (f_0(v), f_0(v'), f_1(v), f_1(v'), ..., f_n(v))
/// read as a word at ph.basepoint = f(v). Independent of the choice of the
/// neighbor v' of v.
inline Word realized_class(const Graph& g, const Graph& h, const std::vector<Hom>& loop,
                           int v, int v_prime, const Pi1Presentation& ph) {
  if (loop.empty()) throw InvalidInput("empty reconfiguration loop");
  if (loop.front() != loop.back())
    throw InvalidInput("reconfiguration loop must start and end at the same hom");
  if (!g.adjacent(v, v_prime)) throw InvalidInput("v' must be a neighbor of v");
  for (std::size_t i = 0; i < loop.size(); ++i) {
    if (!is_hom(g, h, loop[i])) throw InvalidInput("loop entry is not a homomorphism");
    if (i + 1 < loop.size() && !xhomotopy_adjacent(g, h, loop[i], loop[i + 1]))
      throw InvalidInput("consecutive loop entries are not adjacent");
  }
  if (ph.basepoint != loop.front()[v])
    throw InvalidInput("presentation basepoint must be f(v)");

  Walk w;
  w.reserve(2 * loop.size());
  for (std::size_t i = 0; i + 1 < loop.size(); ++i) {
    w.push_back(loop[i][v]);
    w.push_back(loop[i][v_prime]);
  }
  w.push_back(loop.back()[v]);
  return ph.walk_to_word(w);
}

/// The subgroup of classes realized by reconfiguration loops at a hom:
/// generated by the realized classes of the fundamental cycles of a
/// spanning tree of the hom's reconfiguration component.
struct RealizableSubgroup {
  std::vector<Word> generators;  // one per fundamental cycle, unreduced set
  SubgroupGraph graph;
  SubgroupClass cls = SubgroupClass::Trivial;
  bool neighbor_agreement = true;  // populated when debug_checks is on
};

inline RealizableSubgroup realizable_subgroup(const Graph& g, const Graph& h,
                                              const ReconfigGraph& rg, int hom_index,
                                              int v, const Pi1Presentation& ph,
                                              bool debug_checks = false) {
  if (hom_index < 0 || hom_index >= static_cast<int>(rg.homs.size()))
    throw InvalidInput("hom index out of range");
  if (g.neighbors(v).empty()) throw InvalidInput("v must have a neighbor");
  const int v_prime = g.neighbors(v).front();

  // BFS spanning tree of the component, rooted at the given hom.
  std::vector<int> parent(rg.homs.size(), -2);
  parent[hom_index] = -1;
  std::vector<int> queue{hom_index};
  for (std::size_t head = 0; head < queue.size(); ++head)
    for (int w : rg.adjacency[queue[head]])
      if (parent[w] == -2) {
        parent[w] = queue[head];
        queue.push_back(w);
      }

  auto path_from_root = [&](int i) {
    std::vector<int> back;
    for (int x = i; x != -1; x = parent[x]) back.push_back(x);
    return std::vector<int>(back.rbegin(), back.rend());
  };

  RealizableSubgroup out;
  const int comp = rg.component_id[hom_index];
  for (auto [i, j] : rg.edges) {
    if (rg.component_id[i] != comp) continue;
    if (parent[i] == j || parent[j] == i) continue;
    std::vector<int> ids = path_from_root(i);
    std::vector<int> tail = path_from_root(j);
    ids.insert(ids.end(), tail.rbegin(), tail.rend());
    std::vector<Hom> loop;
    loop.reserve(ids.size());
    for (int id : ids) loop.push_back(rg.homs[id]);

    Word cls = realized_class(g, h, loop, v, v_prime, ph);
    if (debug_checks) {
      for (int other : g.neighbors(v))
        if (realized_class(g, h, loop, v, other, ph) != cls) {
          out.neighbor_agreement = false;
          break;
        }
    }
    out.generators.push_back(std::move(cls));
  }
  auto [cls, sg] = stallings_classify(out.generators, ph.rank());
  out.cls = cls;
  out.graph = std::move(sg);
  return out;
}

inline RealizableSubgroup realizable_subgroup(const Graph& g, const Graph& h, const Hom& f,
                                              int v, std::size_t max_homs = 200000,
                                              bool debug_checks = false) {
  if (!is_hom(g, h, f)) throw InvalidInput("not a homomorphism");
  ReconfigGraph rg = reconfig_components(g, h, max_homs);
  auto it = std::lower_bound(rg.homs.begin(), rg.homs.end(), f);
  int idx = static_cast<int>(it - rg.homs.begin());
  Pi1Presentation ph = pi1_presentation(h, f[v]);
  return realizable_subgroup(g, h, rg, idx, v, ph, debug_checks);
}

}  // namespace homcx
