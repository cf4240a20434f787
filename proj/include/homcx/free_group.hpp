#pragma once

// Fundamental groups of connected graphs as free groups on spanning-tree
// chords, plus the subgroup machinery the classification needs: words and
// free reduction, Stallings folding (rank, membership, completeness), the
// even-walk-length subgroup via a two-coset rewriting, and commutation.

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "homcx/errors.hpp"
#include "homcx/graph.hpp"
#include "homcx/hom.hpp"

namespace homcx {

/// Freely reduced word: letter +k is generator k-1, letter -k its inverse.
struct Word {
  std::vector<int> letters;

  bool empty() const { return letters.empty(); }
  friend bool operator==(const Word& a, const Word& b) { return a.letters == b.letters; }
  friend bool operator<(const Word& a, const Word& b) { return a.letters < b.letters; }
};

inline Word word_reduce(const std::vector<int>& letters) {
  Word w;
  for (int l : letters) {
    if (l == 0) throw InvalidInput("word letters must be nonzero");
    if (!w.letters.empty() && w.letters.back() == -l)
      w.letters.pop_back();
    else
      w.letters.push_back(l);
  }
  return w;
}

inline Word word_concat(const Word& a, const Word& b) {
  std::vector<int> all = a.letters;
  all.insert(all.end(), b.letters.begin(), b.letters.end());
  return word_reduce(all);
}

inline Word word_inverse(const Word& a) {
  Word w;
  w.letters.reserve(a.letters.size());
  for (auto it = a.letters.rbegin(); it != a.letters.rend(); ++it) w.letters.push_back(-*it);
  return w;
}

inline bool commutes(const Word& a, const Word& b) {
  return word_concat(word_concat(a, b), word_inverse(word_concat(b, a))).empty();
}

inline std::string word_to_string(const Word& w) {
  if (w.letters.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    if (i) out += ' ';
    int l = w.letters[i];
    out += 'g';
    out += std::to_string(l > 0 ? l : -l);
    if (l < 0) out += "^-1";
  }
  return out;
}

/// Spanning-tree presentation of the fundamental group of a connected based
/// graph: one free generator per non-tree edge ("chord"), oriented from the
/// smaller to the larger endpoint. Every loop edge is a chord.
struct Pi1Presentation {
  Graph graph;
  int basepoint = 0;
  std::vector<int> parent;  // BFS tree, -1 at the basepoint
  std::vector<int> depth;
  std::vector<std::pair<int, int>> chords;  // (a, b), a <= b, lexicographic
  std::vector<int> chord_parity;            // chord-loop length mod 2

  int rank() const { return static_cast<int>(chords.size()); }

  /// Tree walk basepoint -> x.
  Walk tree_path(int x) const {
    Walk back;
    for (int v = x; v != -1; v = parent[v]) back.push_back(v);
    return Walk(back.rbegin(), back.rend());
  }

  /// The loop representing chord i: basepoint -> a, chord, b -> basepoint.
  Walk chord_loop(int i) const {
    auto [a, b] = chords.at(i);
    Walk w = tree_path(a);
    Walk tail = tree_path(b);
    w.insert(w.end(), tail.rbegin(), tail.rend());
    return w;
  }

  /// Free-group element of a closed walk at the basepoint: tree edges vanish,
  /// chord crossings contribute the generator, signed by direction. A loop
  /// crossing has no direction and counts as +1 by convention (irrelevant for
  /// loop-free graphs, the only ones used as targets).
  Word walk_to_word(const Walk& w) const {
    if (!is_walk(graph, w)) throw InvalidInput("not a walk");
    if (w.front() != basepoint || w.back() != basepoint)
      throw InvalidInput("walk is not closed at the basepoint");
    std::vector<int> letters;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      int a = w[i], b = w[i + 1];
      if (a != b && (parent[b] == a || parent[a] == b)) continue;
      auto it = chord_index_.find(std::minmax(a, b));
      if (it == chord_index_.end()) continue;  // tree edge
      letters.push_back(a <= b ? it->second + 1 : -(it->second + 1));
    }
    return word_reduce(letters);
  }

  /// A closed walk spelling the given word (concatenated chord loops).
  Walk word_to_walk(const Word& word) const {
    Walk w{basepoint};
    for (int l : word.letters) {
      Walk loop = chord_loop((l > 0 ? l : -l) - 1);
      if (l < 0) std::reverse(loop.begin(), loop.end());
      w.insert(w.end(), loop.begin() + 1, loop.end());
    }
    return w;
  }

  /// Walk-length parity of a word (well defined since each chord's parity is
  /// its loop's length parity).
  int parity(const Word& w) const {
    int p = 0;
    for (int l : w.letters) p ^= chord_parity[(l > 0 ? l : -l) - 1];
    return p;
  }

  std::map<std::pair<int, int>, int> chord_index_;
};

inline Pi1Presentation pi1_presentation(const Graph& g, int basepoint) {
  if (basepoint < 0 || basepoint >= g.vertex_count())
    throw InvalidInput("basepoint out of range");
  Pi1Presentation p;
  p.graph = g;
  p.basepoint = basepoint;
  p.parent.assign(g.vertex_count(), -2);
  p.depth.assign(g.vertex_count(), 0);
  p.parent[basepoint] = -1;
  std::vector<int> queue{basepoint};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int u = queue[head];
    for (int w : g.neighbors(u)) {
      if (w == u || p.parent[w] != -2) continue;
      p.parent[w] = u;
      p.depth[w] = p.depth[u] + 1;
      queue.push_back(w);
    }
  }
  if (static_cast<int>(queue.size()) != g.vertex_count())
    throw InvalidInput("graph must be connected for a fundamental group presentation");
  for (auto [u, v] : g.edges()) {
    if (u != v && (p.parent[v] == u || p.parent[u] == v)) continue;
    p.chord_index_.emplace(std::pair(u, v), static_cast<int>(p.chords.size()));
    p.chords.emplace_back(u, v);
    p.chord_parity.push_back((p.depth[u] + 1 + p.depth[v]) % 2);
  }
  return p;
}

/// Images of the source presentation's generators under a hom: each chord
/// loop of the source maps to a closed walk in the target, read off as a
/// word. Requires f(source basepoint) == target basepoint.
inline std::vector<Word> induced_map(const Hom& f, const Pi1Presentation& pg,
                                     const Pi1Presentation& ph) {
  if (f.at(pg.basepoint) != ph.basepoint)
    throw InvalidInput("hom does not carry source basepoint to target basepoint");
  std::vector<Word> out;
  out.reserve(pg.chords.size());
  for (int i = 0; i < pg.rank(); ++i) {
    Walk loop = pg.chord_loop(i);
    Walk image;
    image.reserve(loop.size());
    for (int v : loop) image.push_back(f.at(v));
    out.push_back(ph.walk_to_word(image));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Stallings folding
// ---------------------------------------------------------------------------

enum class SubgroupClass { Trivial, InfiniteCyclic, NonabelianFree };

inline const char* to_string(SubgroupClass c) {
  switch (c) {
    case SubgroupClass::Trivial: return "Trivial";
    case SubgroupClass::InfiniteCyclic: return "InfiniteCyclic";
    default: return "NonabelianFree";
  }
}

/// Folded core automaton of a finitely generated subgroup of a free group.
/// States are 0..n-1 with the basepoint at 0; fwd[s][g] / bwd[s][g] give the
/// endpoint of the g-labeled edge leaving / entering s, or -1.
struct SubgroupGraph {
  int num_gens = 0;
  int start = 0;
  std::vector<std::vector<int>> fwd, bwd;

  int state_count() const { return static_cast<int>(fwd.size()); }

  int edge_count() const {
    int e = 0;
    for (const auto& row : fwd)
      for (int t : row)
        if (t != -1) ++e;
    return e;
  }

  /// First Betti number of the core graph = free rank of the subgroup.
  int rank() const { return edge_count() - state_count() + 1; }

  /// Complete iff every generator can be read forward and backward at every
  /// state; a complete automaton on k states recognizes an index-k subgroup.
  bool complete() const {
    for (const auto& row : fwd)
      for (int t : row)
        if (t == -1) return false;
    for (const auto& row : bwd)
      for (int t : row)
        if (t == -1) return false;
    return true;
  }

  bool member(const Word& w) const {
    int cur = start;
    for (int l : w.letters) {
      int g = (l > 0 ? l : -l) - 1;
      if (g >= num_gens) return false;
      cur = l > 0 ? fwd[cur][g] : bwd[cur][g];
      if (cur == -1) return false;
    }
    return cur == start;
  }
};

inline SubgroupGraph stallings_graph(const std::vector<Word>& gens, int num_gens) {
  // Wedge of subdivided loops at state 0, one per generator word.
  struct Edge {
    int u, v, g;
  };
  std::vector<Edge> edges;
  int states = 1;
  for (const Word& w : gens) {
    if (w.empty()) continue;
    int cur = 0;
    for (std::size_t i = 0; i < w.letters.size(); ++i) {
      int next = (i + 1 == w.letters.size()) ? 0 : states++;
      int l = w.letters[i];
      if (l > 0)
        edges.push_back({cur, next, l - 1});
      else
        edges.push_back({next, cur, -l - 1});
      cur = next;
    }
  }

  // Fold: identify targets of equal-labeled edges leaving (or entering) the
  // same state, until the automaton is deterministic both ways.
  std::vector<int> uf(states);
  for (int i = 0; i < states; ++i) uf[i] = i;
  auto find = [&](int x) {
    while (uf[x] != x) x = uf[x] = uf[uf[x]];
    return x;
  };
  auto unite = [&](int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);  // keep smaller id as representative
    uf[b] = a;
    return true;
  };
  bool changed = true;
  while (changed) {
    changed = false;
    std::map<std::pair<int, int>, int> out, in;
    for (const Edge& e : edges) {
      int u = find(e.u), v = find(e.v);
      auto [ito, fresh_o] = out.emplace(std::pair(u, e.g), v);
      if (!fresh_o && find(ito->second) != v) changed |= unite(ito->second, v);
      auto [iti, fresh_i] = in.emplace(std::pair(v, e.g), u);
      if (!fresh_i && find(iti->second) != u) changed |= unite(iti->second, u);
    }
  }

  // Collapse to distinct edges between representatives.
  std::vector<std::pair<std::pair<int, int>, int>> folded;  // ((u,v),g)
  for (const Edge& e : edges) folded.push_back({{find(e.u), find(e.v)}, e.g});
  std::sort(folded.begin(), folded.end());
  folded.erase(std::unique(folded.begin(), folded.end()), folded.end());

  // Core: strip hanging trees (degree-1 states other than the basepoint).
  const int base = find(0);
  std::vector<int> degree(states, 0);
  std::vector<char> dead(states, 1);
  dead[base] = 0;
  for (auto& [uv, g] : folded) {
    degree[uv.first] += uv.first == uv.second ? 2 : 1;
    if (uv.first != uv.second) degree[uv.second] += 1;
    dead[uv.first] = dead[uv.second] = 0;
  }
  std::vector<char> removed_edge(folded.size(), 0);
  bool pruned = true;
  while (pruned) {
    pruned = false;
    for (std::size_t i = 0; i < folded.size(); ++i) {
      if (removed_edge[i]) continue;
      auto [u, v] = folded[i].first;
      if (u == v) continue;
      int leaf = -1;
      if (u != base && degree[u] == 1) leaf = u;
      else if (v != base && degree[v] == 1) leaf = v;
      if (leaf == -1) continue;
      removed_edge[i] = 1;
      --degree[u];
      --degree[v];
      dead[leaf] = 1;
      pruned = true;
    }
  }

  std::vector<int> new_id(states, -1);
  int next = 0;
  for (int s = 0; s < states; ++s)
    if (!dead[s] && find(s) == s) new_id[s] = next++;
  if (new_id[base] == -1) new_id[base] = next++;  // lone basepoint

  SubgroupGraph sg;
  sg.num_gens = num_gens;
  sg.start = new_id[base];
  sg.fwd.assign(next, std::vector<int>(num_gens, -1));
  sg.bwd.assign(next, std::vector<int>(num_gens, -1));
  for (std::size_t i = 0; i < folded.size(); ++i) {
    if (removed_edge[i]) continue;
    auto [uv, g] = folded[i];
    sg.fwd[new_id[uv.first]][g] = new_id[uv.second];
    sg.bwd[new_id[uv.second]][g] = new_id[uv.first];
  }
  return sg;
}

inline SubgroupClass classify_rank(int rank) {
  if (rank <= 0) return SubgroupClass::Trivial;
  if (rank == 1) return SubgroupClass::InfiniteCyclic;
  return SubgroupClass::NonabelianFree;
}

inline std::pair<SubgroupClass, SubgroupGraph> stallings_classify(const std::vector<Word>& gens,
                                                                  int num_gens) {
  SubgroupGraph sg = stallings_graph(gens, num_gens);
  return {classify_rank(sg.rank()), sg};
}

inline bool subgroup_contains(const SubgroupGraph& sg, const std::vector<Word>& words) {
  for (const Word& w : words)
    if (!sg.member(w)) return false;
  return true;
}

/// Membership both ways between two folded subgroup automata, given each
/// side's generating words.
inline bool subgroups_equal(const SubgroupGraph& a, const std::vector<Word>& a_gens,
                            const SubgroupGraph& b, const std::vector<Word>& b_gens) {
  return subgroup_contains(a, b_gens) && subgroup_contains(b, a_gens);
}

/// Generators of the even-walk-length subgroup of the presented group. If
/// every generator is even the subgroup is everything; otherwise it has
/// index two and the two-coset rewriting over the transversal {1, t} (t the
/// first odd generator) yields 2r - 1 generators.
inline std::vector<Word> even_part_generators(const Pi1Presentation& p) {
  const int r = p.rank();
  int t = -1;
  for (int i = 0; i < r; ++i)
    if (p.chord_parity[i] == 1) {
      t = i;
      break;
    }
  std::vector<Word> out;
  if (t == -1) {
    for (int i = 0; i < r; ++i) out.push_back(Word{{i + 1}});
    return out;
  }
  for (int i = 0; i < r; ++i) {
    if (i == t) continue;  // g_t t^-1 is trivial
    if (p.chord_parity[i] == 0)
      out.push_back(Word{{i + 1}});
    else
      out.push_back(word_reduce({i + 1, -(t + 1)}));
  }
  for (int i = 0; i < r; ++i) {
    if (p.chord_parity[i] == 0)
      out.push_back(word_reduce({t + 1, i + 1, -(t + 1)}));
    else
      out.push_back(word_reduce({t + 1, i + 1}));
  }
  return out;
}

}  // namespace homcx
