#pragma once

// Exact integer homology of an order complex: boundary matrices with
// alternating signs, sparse Smith normal form (unit pivots with a
// low-fill-in heuristic first, then general gcd pivoting), Betti numbers
// and torsion coefficients. Arithmetic runs in checked 64-bit integers and
// restarts in arbitrary precision if anything overflows.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "homcx/complex.hpp"
#include "homcx/errors.hpp"

namespace homcx {

using BigInt = boost::multiprecision::cpp_int;

/// Column-major sparse integer matrix; entries per column sorted by row.
struct SparseIntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::vector<std::pair<int, long long>>> col_entries;
};

/// Boundary maps d_k : C_k -> C_{k-1} for k = 1..top_dim (index 0 holds an
/// empty placeholder so boundary[k] is d_k).
struct ChainComplex {
  std::vector<long long> counts;
  std::vector<SparseIntMatrix> boundary;
};

namespace detail {

/// Index of a sorted flat tuple array entry equal to key, or -1.
inline int find_tuple(const std::vector<int>& flat, int stride, const int* key) {
  long long lo = 0, hi = static_cast<long long>(flat.size()) / stride;
  while (lo < hi) {
    long long mid = (lo + hi) / 2;
    const int* t = flat.data() + mid * stride;
    int cmp = 0;
    for (int i = 0; i < stride; ++i)
      if (t[i] != key[i]) {
        cmp = t[i] < key[i] ? -1 : 1;
        break;
      }
    if (cmp < 0)
      lo = mid + 1;
    else
      hi = mid;
  }
  const int* t = flat.data() + lo * stride;
  if (lo < static_cast<long long>(flat.size()) / stride &&
      std::equal(t, t + stride, key))
    return static_cast<int>(lo);
  return -1;
}

}  // namespace detail

inline ChainComplex boundary_matrices(const OrderComplex& x) {
  ChainComplex c;
  const int top = x.top_dim();
  c.boundary.resize(std::max(top + 1, 1));
  for (int k = 0; k <= top; ++k) c.counts.push_back(x.count(k));
  for (int k = 1; k <= top; ++k) {
    const auto& cur = x.simplices[k];
    const auto& prev = x.simplices[k - 1];
    SparseIntMatrix& m = c.boundary[k];
    m.rows = static_cast<int>(x.count(k - 1));
    m.cols = static_cast<int>(x.count(k));
    m.col_entries.resize(m.cols);
    std::vector<int> face(k);
    for (int j = 0; j < m.cols; ++j) {
      const int* t = cur.data() + static_cast<std::size_t>(j) * (k + 1);
      auto& col = m.col_entries[j];
      for (int drop = 0; drop <= k; ++drop) {
        for (int i = 0, w = 0; i <= k; ++i)
          if (i != drop) face[w++] = t[i];
        int row = detail::find_tuple(prev, k, face.data());
        if (row < 0) throw InvalidInput("order complex is not closed under faces");
        col.emplace_back(row, drop % 2 == 0 ? 1 : -1);
      }
      std::sort(col.begin(), col.end());
    }
  }
  return c;
}

/// Checks d_{k-1} o d_k == 0 for all k; used by tests and --debug-checks.
inline bool verify_boundary_composition(const ChainComplex& c) {
  for (std::size_t k = 2; k < c.boundary.size(); ++k) {
    const SparseIntMatrix& dk = c.boundary[k];
    const SparseIntMatrix& dk1 = c.boundary[k - 1];
    std::vector<long long> acc(dk1.rows, 0);
    std::vector<int> touched;
    for (const auto& col : dk.col_entries) {
      for (auto [i, s] : col)
        for (auto [r, v] : dk1.col_entries[i]) {
          if (acc[r] == 0) touched.push_back(r);
          acc[r] += s * v;
        }
      for (int r : touched)
        if (acc[r] != 0) return false;
      for (int r : touched) acc[r] = 0;
      touched.clear();
    }
  }
  return true;
}

struct SmithResult {
  long long rank = 0;
  /// Invariant factors greater than one, in divisibility order. (The full
  /// diagonal is this list preceded by rank - size() ones.)
  std::vector<BigInt> invariant_factors;
};

namespace detail {

struct OverflowSignal {};

template <class I>
struct Arith {
  static I add(const I& a, const I& b) { return a + b; }
  static I sub(const I& a, const I& b) { return a - b; }
  static I mul(const I& a, const I& b) { return a * b; }
};

template <>
struct Arith<long long> {
  static long long add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowSignal{};
    return r;
  }
  static long long sub(long long a, long long b) {
    long long r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowSignal{};
    return r;
  }
  static long long mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowSignal{};
    return r;
  }
};

template <class I>
I abs_of(const I& v) {
  return v < 0 ? I(-v) : v;
}

/// Sparse Smith elimination over integer type I. Unit pivots are taken
/// first, chosen from the sparsest columns to limit fill-in; whatever
/// remains (rare and small for boundary matrices) goes through general
/// gcd pivoting with the smallest-magnitude entry as pivot.
template <class I>
struct SmithEliminator {
  using Row = std::vector<std::pair<int, I>>;

  int nrows, ncols;
  std::vector<Row> rows;
  std::vector<std::vector<int>> col_rows;  // stale ids allowed; verify on read
  std::vector<int> col_nnz;
  std::vector<char> row_alive, col_alive;
  // Bucketed queue of candidate pivot columns keyed by nnz at push time.
  std::vector<std::vector<int>> buckets;
  long long rank = 0;
  std::vector<I> factors;  // non-unit pivot magnitudes

  explicit SmithEliminator(const SparseIntMatrix& m)
      : nrows(m.rows),
        ncols(m.cols),
        rows(m.rows),
        col_rows(m.cols),
        col_nnz(m.cols, 0),
        row_alive(m.rows, 1),
        col_alive(m.cols, 1),
        buckets(17) {
    for (int j = 0; j < ncols; ++j)
      for (auto [i, v] : m.col_entries[j]) {
        rows[i].emplace_back(j, I(v));
        col_rows[j].push_back(i);
        ++col_nnz[j];
      }
    for (auto& row : rows) std::sort(row.begin(), row.end());
    for (int j = 0; j < ncols; ++j)
      if (col_nnz[j] > 0) push_col(j);
  }

  void push_col(int c) {
    int b = std::min<int>(col_nnz[c], static_cast<int>(buckets.size()) - 1);
    buckets[b].push_back(c);
  }

  const I* entry(int r, int c) const {
    const Row& row = rows[r];
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const std::pair<int, I>& e, int key) { return e.first < key; });
    if (it != row.end() && it->first == c) return &it->second;
    return nullptr;
  }

  /// rows[dst] -= q * rows[src]; maintains column structures.
  void row_axpy(int dst, const I& q, const Row& src) {
    Row out;
    out.reserve(rows[dst].size() + src.size());
    const Row& a = rows[dst];
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < src.size()) {
      if (j == src.size() || (i < a.size() && a[i].first < src[j].first)) {
        out.push_back(a[i++]);
      } else if (i == a.size() || src[j].first < a[i].first) {
        I v = Arith<I>::mul(q, src[j].second);
        if (v != 0) {
          out.emplace_back(src[j].first, I(-v));
          ++col_nnz[src[j].first];
          col_rows[src[j].first].push_back(dst);
          push_col(src[j].first);
        }
        ++j;
      } else {
        I v = Arith<I>::sub(a[i].second, Arith<I>::mul(q, src[j].second));
        if (v != 0) {
          // A value can become a unit without the column size changing;
          // requeue so the unit phase still sees this column.
          if (abs_of(v) == I(1) && abs_of(a[i].second) != I(1)) push_col(a[i].first);
          out.emplace_back(a[i].first, std::move(v));
        } else {
          --col_nnz[a[i].first];
          push_col(a[i].first);
        }
        ++i;
        ++j;
      }
    }
    rows[dst] = std::move(out);
  }

  void kill_pivot(int r, int c) {
    row_alive[r] = 0;
    for (auto& [col, v] : rows[r]) {
      --col_nnz[col];
      push_col(col);
    }
    rows[r].clear();
    col_alive[c] = 0;
    col_rows[c].clear();
    ++rank;
  }

  /// Clears column c with unit pivot at (r, c), then retires the pivot.
  void eliminate_unit(int r, int c) {
    const I s = *entry(r, c);  // +1 or -1
    Row pivot = rows[r];
    std::vector<int> users;
    users.swap(col_rows[c]);
    std::sort(users.begin(), users.end());
    users.erase(std::unique(users.begin(), users.end()), users.end());
    for (int u : users) {
      if (u == r || !row_alive[u]) continue;
      const I* a = entry(u, c);
      if (!a) continue;
      // q = a / s with s = +-1
      I q = s > 0 ? *a : I(-*a);
      row_axpy(u, q, pivot);
    }
    kill_pivot(r, c);
  }

  bool phase_units() {
    while (true) {
      int c = -1;
      for (auto& bucket : buckets) {
        while (!bucket.empty()) {
          int cand = bucket.back();
          bucket.pop_back();
          if (!col_alive[cand] || col_nnz[cand] == 0) continue;
          int want = std::min<int>(col_nnz[cand], static_cast<int>(buckets.size()) - 1);
          if (&bucket - buckets.data() != want) {
            buckets[want].push_back(cand);  // stale; requeue at true size
            continue;
          }
          c = cand;
          break;
        }
        if (c != -1) break;
      }
      if (c == -1) return true;  // queues empty: no (more) unit work found

      // Best unit entry in column c: smallest row support, then smallest id.
      int best = -1;
      std::size_t best_nnz = 0;
      for (int u : col_rows[c]) {
        if (!row_alive[u]) continue;
        const I* v = entry(u, c);
        if (!v || abs_of(*v) != 1) continue;
        if (best == -1 || rows[u].size() < best_nnz ||
            (rows[u].size() == best_nnz && u < best)) {
          best = u;
          best_nnz = rows[u].size();
        }
      }
      if (best == -1) continue;  // no unit here now; revisited if touched again
      eliminate_unit(best, c);
    }
  }

  /// Smallest-magnitude alive entry, ties by (row, col).
  bool find_min_entry(int& pr, int& pc) {
    bool found = false;
    I best{};
    for (int r = 0; r < nrows; ++r) {
      if (!row_alive[r]) continue;
      for (auto& [c, v] : rows[r]) {
        I a = abs_of(v);
        if (!found || a < best) {
          found = true;
          best = a;
          pr = r;
          pc = c;
        }
      }
    }
    return found;
  }

  static I round_div(const I& a, const I& v) {
    I q = a / v;
    I rem = a - q * v;
    if (rem != 0) {
      // steer remainder into (-|v|/2, |v|/2]
      I step = v > 0 ? I(1) : I(-1);
      I alt = rem > 0 ? I(q + step) : I(q - step);
      I altrem = a - alt * v;
      if (abs_of(altrem) < abs_of(rem)) return alt;
    }
    return q;
  }

  void phase_general() {
    int r = 0, c = 0;
    while (find_min_entry(r, c)) {
      const I v = *entry(r, c);

      // Reduce the rest of column c; remainders smaller than |v| restart.
      bool reduced = true;
      {
        std::vector<int> users;
        users.swap(col_rows[c]);
        std::sort(users.begin(), users.end());
        users.erase(std::unique(users.begin(), users.end()), users.end());
        col_rows[c] = users;
        for (int u : users) {
          if (u == r || !row_alive[u]) continue;
          const I* a = entry(u, c);
          if (!a) continue;
          I q = round_div(*a, v);
          if (q != 0) row_axpy(u, q, rows[r]);
          if (entry(u, c)) reduced = false;  // nonzero remainder
        }
      }
      if (!reduced) continue;

      // Column ops only touch row r now that column c is otherwise clear.
      bool row_clean = true;
      for (auto& [cc, a] : rows[r]) {
        if (cc == c) continue;
        I q = round_div(a, v);
        I rem = Arith<I>::sub(a, Arith<I>::mul(q, v));
        if (a != rem) {
          if (rem == 0) {
            --col_nnz[cc];
            push_col(cc);
          }
          a = rem;
        }
        if (rem != 0) row_clean = false;
      }
      std::erase_if(rows[r], [](const std::pair<int, I>& e) { return e.second == 0; });
      if (!row_clean) continue;

      // Pivot must divide every remaining entry; fold a witness row in and
      // retry otherwise.
      int bad = -1;
      for (int u = 0; u < nrows && bad == -1; ++u) {
        if (!row_alive[u] || u == r) continue;
        for (auto& [cc, a] : rows[u])
          if (a % v != 0) {
            bad = u;
            break;
          }
      }
      if (bad != -1) {
        row_axpy(r, I(-1), rows[bad]);
        continue;
      }

      factors.push_back(abs_of(v));
      kill_pivot(r, c);
    }
  }

  SmithResult run() {
    phase_units();
    phase_general();
    SmithResult out;
    out.rank = rank;
    std::vector<BigInt> fs;
    for (auto& f : factors) fs.emplace_back(f);
    std::sort(fs.begin(), fs.end());
    // Enforce the divisibility chain d1 | d2 | ... via gcd/lcm passes.
    bool stable = false;
    while (!stable) {
      stable = true;
      for (std::size_t i = 0; i + 1 < fs.size(); ++i)
        if (fs[i + 1] % fs[i] != 0) {
          BigInt g = boost::multiprecision::gcd(fs[i], fs[i + 1]);
          BigInt l = fs[i] / g * fs[i + 1];
          fs[i] = g;
          fs[i + 1] = l;
          stable = false;
        }
      if (!stable) std::sort(fs.begin(), fs.end());
    }
    for (auto& f : fs)
      if (f > 1) out.invariant_factors.push_back(f);
    return out;
  }
};

}  // namespace detail

inline SmithResult smith_normal_form(const SparseIntMatrix& m) {
  if (m.rows == 0 || m.cols == 0) return {};
  try {
    return detail::SmithEliminator<long long>(m).run();
  } catch (const detail::OverflowSignal&) {
    return detail::SmithEliminator<BigInt>(m).run();
  }
}

/// Betti numbers and torsion up to the highest degree the (possibly
/// truncated) complex determines exactly.
struct HomologyProfile {
  std::vector<long long> betti;                 // degrees 0..computed_dim
  std::vector<std::vector<BigInt>> torsion;     // same degrees
  int computed_dim = -1;
  bool truncated = false;
  std::vector<long long> simplex_counts;
  std::optional<long long> chi;  // alternating simplex count, absent if truncated
};

inline bool same_homology(const HomologyProfile& a, const HomologyProfile& b) {
  return a.betti == b.betti && a.torsion == b.torsion && a.computed_dim == b.computed_dim;
}

inline HomologyProfile homology_profile(const OrderComplex& x) {
  ChainComplex c = boundary_matrices(x);
  const int top = x.top_dim();
  HomologyProfile p;
  p.truncated = x.truncated;
  p.simplex_counts = c.counts;
  if (top < 0) return p;

  std::vector<SmithResult> snf(top + 2);
  for (int k = 1; k <= top; ++k) snf[k] = smith_normal_form(c.boundary[k]);
  // d_0 and (when the complex is complete) d_{top+1} are zero maps.

  p.computed_dim = x.truncated ? top - 1 : top;
  for (int k = 0; k <= p.computed_dim; ++k) {
    long long rank_k = k >= 1 ? snf[k].rank : 0;
    long long rank_k1 = k + 1 <= top ? snf[k + 1].rank : 0;
    p.betti.push_back(c.counts[k] - rank_k - rank_k1);
    p.torsion.push_back(k + 1 <= top ? snf[k + 1].invariant_factors
                                     : std::vector<BigInt>{});
  }
  if (!x.truncated) {
    long long chi = 0;
    for (int k = 0; k <= top; ++k) chi += (k % 2 == 0) ? c.counts[k] : -c.counts[k];
    p.chi = chi;
  }
  return p;
}

}  // namespace homcx
