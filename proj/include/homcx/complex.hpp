#pragma once

// The cell poset of a hom-space component (multihoms ordered by pointwise
// inclusion, discovered from a seed hom by single-vertex moves), its order
// complex (simplices = strict chains), which is what the homology stage
// consumes, and a homotopy-preserving dismantling that shrinks the poset
// before chains are enumerated.

#include <algorithm>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "homcx/errors.hpp"
#include "homcx/graph.hpp"
#include "homcx/hom.hpp"

namespace homcx {

/// One component of the multihom poset. Cells are sorted by (dimension,
/// choice masks), so comparable cells always have increasing ids, and the
/// dim-0 cells (the component's homs) come first in lexicographic order.
struct CellPoset {
  std::vector<MultiHom> cells;
  std::vector<int> dims;
  std::vector<std::vector<int>> covers_up;  // ids of cells covering i (dim + 1)
  std::vector<int> atoms;                    // ids of dim-0 cells
  int top_dim = 0;
};

namespace detail {

struct MaskVecHash {
  std::size_t operator()(const std::vector<std::uint64_t>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (std::uint64_t x : v) {
      h ^= static_cast<std::size_t>(x);
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace detail

/// Vertices addable to m at position x without breaking validity, given the
/// edges of g incident to x. Excludes vertices already chosen at x.
inline std::uint64_t addable_vertices(const Graph& g, const AdjacencyMasks& h,
                                      const MultiHom& m, int x) {
  std::uint64_t allowed = h.all();
  bool loop = false;
  for (int z : g.neighbors(x)) {
    if (z == x) {
      loop = true;
      continue;
    }
    allowed &= h.common_neighbors(m.choices[z]);
  }
  std::uint64_t out = 0;
  std::uint64_t set = allowed & ~m.choices[x];
  while (set) {
    int y = std::countr_zero(set);
    set &= set - 1;
    // A loop at x makes the chosen set pairwise adjacent, y included.
    if (loop && ((m.choices[x] | (std::uint64_t{1} << y)) & ~h.nbr[y])) continue;
    out |= std::uint64_t{1} << y;
  }
  return out;
}

/// Grows the poset component of the seed hom by moves that add or drop one
/// chosen vertex. Every multihom comparable to a discovered cell is reached
/// this way, so the result is the full component of Hom(G, H) around seed.
inline CellPoset build_component_poset(const Graph& g, const Graph& h, const Hom& seed,
                                       std::size_t max_cells = 1000000) {
  if (!is_hom(g, h, seed)) throw InvalidInput("poset seed is not a homomorphism");
  const AdjacencyMasks masks = AdjacencyMasks::of(h);
  const int n = g.vertex_count();

  std::vector<MultiHom> cells{to_multihom(seed)};
  std::unordered_map<std::vector<std::uint64_t>, int, detail::MaskVecHash> index;
  index.emplace(cells[0].choices, 0);
  // Cover relations as (lower id, upper id) in discovery numbering.
  std::vector<std::pair<int, int>> covers;

  auto intern = [&](MultiHom&& m) {
    auto [it, fresh] = index.emplace(m.choices, static_cast<int>(cells.size()));
    if (fresh) {
      if (cells.size() >= max_cells)
        throw ResourceLimit("cell cap exceeded (max-cells = " + std::to_string(max_cells) + ")");
      cells.push_back(std::move(m));
    }
    return std::pair<int, bool>(it->second, fresh);
  };

  std::vector<int> queue{0};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int id = queue[head];
    const MultiHom cur = cells[id];  // copy: cells may reallocate below
    for (int x = 0; x < n; ++x) {
      std::uint64_t add = addable_vertices(g, masks, cur, x);
      while (add) {
        int y = std::countr_zero(add);
        add &= add - 1;
        MultiHom up = cur;
        up.choices[x] |= std::uint64_t{1} << y;
        auto [uid, fresh] = intern(std::move(up));
        covers.emplace_back(id, uid);
        if (fresh) queue.push_back(uid);
      }
      if (std::popcount(cur.choices[x]) >= 2) {
        std::uint64_t drop = cur.choices[x];
        while (drop) {
          int y = std::countr_zero(drop);
          drop &= drop - 1;
          MultiHom down = cur;  // removing a choice never breaks validity
          down.choices[x] &= ~(std::uint64_t{1} << y);
          auto [did, fresh] = intern(std::move(down));
          covers.emplace_back(did, id);
          if (fresh) queue.push_back(did);
        }
      }
    }
  }

  // Canonical numbering: by (dim, masks). Comparability then implies id order.
  const int count = static_cast<int>(cells.size());
  std::vector<int> order(count);
  for (int i = 0; i < count; ++i) order[i] = i;
  std::vector<int> dim(count);
  for (int i = 0; i < count; ++i) dim[i] = multihom_dim(cells[i]);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (dim[a] != dim[b]) return dim[a] < dim[b];
    return cells[a].choices < cells[b].choices;
  });
  std::vector<int> new_id(count);
  for (int i = 0; i < count; ++i) new_id[order[i]] = i;

  CellPoset p;
  p.cells.reserve(count);
  p.dims.reserve(count);
  for (int i = 0; i < count; ++i) {
    p.cells.push_back(std::move(cells[order[i]]));
    p.dims.push_back(dim[order[i]]);
  }
  p.top_dim = p.dims.empty() ? 0 : p.dims.back();
  p.covers_up.resize(count);
  for (auto [lo, hi] : covers) p.covers_up[new_id[lo]].push_back(new_id[hi]);
  for (auto& ups : p.covers_up) {
    std::sort(ups.begin(), ups.end());
    ups.erase(std::unique(ups.begin(), ups.end()), ups.end());
  }
  for (int i = 0; i < count; ++i)
    if (p.dims[i] == 0)
      p.atoms.push_back(i);
    else
      break;  // sorted by dim, atoms are a prefix
  return p;
}

/// Alternating cell count; equals the Euler characteristic of the order
/// complex without building it. Only meaningful for a full component poset,
/// not for a dismantled core (whose cells keep their original dims).
inline long long euler_characteristic_cells(const CellPoset& p) {
  long long chi = 0;
  for (int d : p.dims) chi += (d % 2 == 0) ? 1 : -1;
  return chi;
}

/// Deletes beat points until none remain: cells whose strictly-above (or
/// strictly-below) surviving cells have a unique minimal (maximal) element.
/// Each deletion is a strong deformation retract of the order complex, so
/// the core's order complex has the homotopy type of the original — with
/// chain counts that are often orders of magnitude smaller. Covers of the
/// core are recomputed; cell dims are inherited, so only the order (and the
/// order complex) of the result is meaningful, not its cellular chi.
inline CellPoset dismantle_core(const CellPoset& p) {
  const int n = static_cast<int>(p.cells.size());
  std::vector<std::vector<int>> covers_down(n);
  for (int i = 0; i < n; ++i)
    for (int j : p.covers_up[i]) covers_down[j].push_back(i);

  const int words = n == 0 ? 0 : static_cast<int>(p.cells[0].choices.size());
  auto le = [&](int a, int b) {
    for (int w = 0; w < words; ++w)
      if (p.cells[a].choices[w] & ~p.cells[b].choices[w]) return false;
    return true;
  };

  std::vector<char> alive(n, 1);
  std::vector<int> stamp(n, -1);
  int tick = 0;
  std::vector<int> queue, found;

  // Extremal survivors strictly beyond x: walk the original cover DAG,
  // expanding deleted cells only, then prune the collected survivors to the
  // minimal (up) or maximal (down) ones. Every extremal survivor is reached
  // this way because all cells strictly between it and x must be deleted.
  auto extremal_beyond = [&](int x, bool up) -> std::vector<int>& {
    ++tick;
    queue.clear();
    found.clear();
    stamp[x] = tick;
    for (int j : up ? p.covers_up[x] : covers_down[x]) {
      stamp[j] = tick;
      queue.push_back(j);
    }
    for (std::size_t head = 0; head < queue.size(); ++head) {
      int y = queue[head];
      if (alive[y]) {
        found.push_back(y);
        continue;
      }
      for (int z : up ? p.covers_up[y] : covers_down[y])
        if (stamp[z] != tick) {
          stamp[z] = tick;
          queue.push_back(z);
        }
    }
    std::size_t keep = 0;
    for (std::size_t i = 0; i < found.size(); ++i) {
      bool extremal = true;
      for (std::size_t j = 0; j < found.size() && extremal; ++j)
        if (j != i && (up ? le(found[j], found[i]) : le(found[i], found[j])))
          extremal = false;
      if (extremal) found[keep++] = found[i];
    }
    found.resize(keep);
    return found;
  };

  bool changed = true;
  while (changed) {
    changed = false;
    for (int x = n - 1; x >= 0; --x) {
      if (!alive[x]) continue;
      if (extremal_beyond(x, true).size() == 1 || extremal_beyond(x, false).size() == 1) {
        alive[x] = 0;
        changed = true;
      }
    }
  }

  // Compact in the original (dim, choices) order, so comparable cells keep
  // increasing ids; covers of the core are the minimal survivors above.
  CellPoset core;
  std::vector<int> new_id(n, -1);
  for (int i = 0; i < n; ++i)
    if (alive[i]) {
      new_id[i] = static_cast<int>(core.cells.size());
      core.cells.push_back(p.cells[i]);
      core.dims.push_back(p.dims[i]);
    }
  core.top_dim = core.dims.empty() ? 0 : core.dims.back();
  core.covers_up.resize(core.cells.size());
  for (int i = 0; i < n; ++i) {
    if (!alive[i]) continue;
    auto& ups = core.covers_up[new_id[i]];
    for (int y : extremal_beyond(i, true)) ups.push_back(new_id[y]);
    std::sort(ups.begin(), ups.end());
  }
  for (int i = 0; i < static_cast<int>(core.dims.size()); ++i)
    if (core.dims[i] == 0)
      core.atoms.push_back(i);
    else
      break;
  return core;
}

/// Strict chains of the poset, one k-simplex per chain of k+1 cells, up to
/// chains of max_dim + 1 cells. `truncated` reports whether longer chains
/// were cut off.
struct OrderComplex {
  int requested_max_dim = 3;
  bool truncated = false;
  std::vector<std::vector<int>> simplices;  // [k]: flat tuples, stride k + 1

  int top_dim() const { return static_cast<int>(simplices.size()) - 1; }
  long long count(int k) const {
    if (k < 0 || k > top_dim()) return 0;
    return static_cast<long long>(simplices[k].size()) / (k + 1);
  }
};

inline OrderComplex order_complex(const CellPoset& p, int max_dim = 3,
                                  std::size_t max_simplices = 5000000) {
  if (max_dim < 0) throw InvalidInput("max_dim must be >= 0");
  const int n = static_cast<int>(p.cells.size());
  OrderComplex x;
  x.requested_max_dim = max_dim;
  if (n == 0) return x;

  auto bump = [&, total = std::size_t{0}](std::size_t add) mutable {
    total += add;
    if (total > max_simplices)
      throw ResourceLimit("simplex cap exceeded (max-simplices = " +
                          std::to_string(max_simplices) + ")");
  };

  // Strictly-above lists via covers, highest dims first so each list is a
  // merge of already-final lists.
  std::vector<std::vector<int>> above(n);
  {
    std::vector<char> seen(n, 0);
    std::vector<int> touched;
    for (int i = n - 1; i >= 0; --i) {
      touched.clear();
      for (int j : p.covers_up[i]) {
        if (!seen[j]) {
          seen[j] = 1;
          touched.push_back(j);
        }
        for (int k : above[j])
          if (!seen[k]) {
            seen[k] = 1;
            touched.push_back(k);
          }
      }
      std::sort(touched.begin(), touched.end());
      above[i] = touched;
      for (int j : touched) seen[j] = 0;
      if (max_dim >= 1) bump(above[i].size());
    }
  }

  x.simplices.resize(1);
  x.simplices[0].reserve(n);
  bump(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) x.simplices[0].push_back(i);

  for (int k = 1; k <= max_dim; ++k) {
    const auto& prev = x.simplices[k - 1];
    const std::size_t stride = k;
    std::vector<int> cur;
    if (k >= 2) {  // k == 1 was budgeted with the above-lists
      std::size_t add = 0;
      for (std::size_t s = 0; s < prev.size(); s += stride)
        add += above[prev[s + stride - 1]].size();
      bump(add);
    }
    for (std::size_t s = 0; s < prev.size(); s += stride) {
      int last = prev[s + stride - 1];
      for (int v : above[last]) {
        cur.insert(cur.end(), prev.begin() + s, prev.begin() + s + stride);
        cur.push_back(v);
      }
    }
    if (cur.empty()) break;
    x.simplices.push_back(std::move(cur));
  }

  if (x.top_dim() == max_dim) {
    const auto& top = x.simplices[max_dim];
    const std::size_t stride = max_dim + 1;
    for (std::size_t s = 0; s < top.size() && !x.truncated; s += stride)
      if (!above[top[s + stride - 1]].empty()) x.truncated = true;
  }
  return x;
}

}  // namespace homcx
