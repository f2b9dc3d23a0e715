#include "witten/lattice_comb.hpp"

#include "witten/exact_linalg.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <mutex>
#include <numeric>
#include <set>
#include <thread>

namespace witten {

namespace {

using i64 = std::int64_t;
using i128 = __int128;

constexpr i64 kEntryBound = i64(1) << 56;

i64 gcd_i64(i64 a, i64 b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b) {
    i64 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Last invariant factor of an n x n int64 matrix; 0 when singular.
// Returns false when intermediate growth threatens int64 (caller falls
// back to exact bignum SNF).
bool snf_last_factor_i64(std::vector<i64>& a, int n, i64& out) {
  auto at = [&](int i, int j) -> i64& { return a[static_cast<std::size_t>(i * n + j)]; };
  i64 last = 1;
  for (int t = 0; t < n; ++t) {
    for (;;) {
      int pi = -1, pj = -1;
      i64 best = 0;
      for (int i = t; i < n; ++i)
        for (int j = t; j < n; ++j) {
          i64 v = at(i, j) < 0 ? -at(i, j) : at(i, j);
          if (v != 0 && (pi < 0 || v < best)) {
            best = v;
            pi = i;
            pj = j;
          }
        }
      if (pi < 0) {
        out = 0;  // singular
        return true;
      }
      if (pi != t)
        for (int j = 0; j < n; ++j) std::swap(at(pi, j), at(t, j));
      if (pj != t)
        for (int i = 0; i < n; ++i) std::swap(at(i, pj), at(i, t));

      bool clean = true;
      for (int i = t + 1; i < n; ++i) {
        if (at(i, t) == 0) continue;
        i64 q = at(i, t) / at(t, t);
        if (q != 0)
          for (int j = t; j < n; ++j) {
            i128 v = static_cast<i128>(at(i, j)) - static_cast<i128>(q) * at(t, j);
            if (v > kEntryBound || v < -kEntryBound) return false;
            at(i, j) = static_cast<i64>(v);
          }
        if (at(i, t) != 0) clean = false;
      }
      for (int j = t + 1; j < n; ++j) {
        if (at(t, j) == 0) continue;
        i64 q = at(t, j) / at(t, t);
        if (q != 0)
          for (int i = t; i < n; ++i) {
            i128 v = static_cast<i128>(at(i, j)) - static_cast<i128>(q) * at(i, t);
            if (v > kEntryBound || v < -kEntryBound) return false;
            at(i, j) = static_cast<i64>(v);
          }
        if (at(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      bool fixed = true;
      for (int i = t + 1; i < n && fixed; ++i)
        for (int j = t + 1; j < n && fixed; ++j)
          if (at(i, j) % at(t, t) != 0) {
            for (int k = t; k < n; ++k) {
              i128 v = static_cast<i128>(at(t, k)) + at(i, k);
              if (v > kEntryBound || v < -kEntryBound) return false;
              at(t, k) = static_cast<i64>(v);
            }
            fixed = false;
          }
      if (fixed) break;
    }
    last = at(t, t) < 0 ? -at(t, t) : at(t, t);
  }
  out = last;
  return true;
}

struct ColumnEnumerator {
  int n = 0, m = 0;
  std::vector<i64> cols;  // column-major, n entries per column
  IntMatrix exact;        // for the bignum fallback

  i64 entry(int col, int row) const { return cols[static_cast<std::size_t>(col * n + row)]; }

  // One worker's scratch: the reduced-column stack used to reject
  // dependent prefixes, plus the chosen indices.
  struct Scratch {
    std::vector<i64> basis;       // n entries per depth
    std::vector<int> pivot_row;   // per depth
    std::vector<int> selected;    // per depth
    std::set<Int> values;
  };

  // Reduces column j against the current basis; false when dependent.
  bool reduce(Scratch& s, int depth, int j) const {
    std::vector<i64> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = entry(j, i);
    for (int t = 0; t < depth; ++t) {
      const i64* b = &s.basis[static_cast<std::size_t>(t * n)];
      int p = s.pivot_row[static_cast<std::size_t>(t)];
      i64 vp = v[static_cast<std::size_t>(p)];
      if (vp == 0) continue;
      i64 bp = b[p];
      i64 g = 0;
      for (int i = 0; i < n; ++i) {
        i128 nv = static_cast<i128>(v[static_cast<std::size_t>(i)]) * bp -
                  static_cast<i128>(b[i]) * vp;
        if (nv > kEntryBound || nv < -kEntryBound)
          raise(Errc::Internal, "entry growth beyond the supported range");
        v[static_cast<std::size_t>(i)] = static_cast<i64>(nv);
        g = gcd_i64(g, v[static_cast<std::size_t>(i)]);
      }
      if (g > 1)
        for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] /= g;
    }
    int p = -1;
    for (int i = 0; i < n; ++i)
      if (v[static_cast<std::size_t>(i)] != 0) {
        p = i;
        break;
      }
    if (p < 0) return false;
    std::copy(v.begin(), v.end(), s.basis.begin() + static_cast<std::ptrdiff_t>(depth * n));
    s.pivot_row[static_cast<std::size_t>(depth)] = p;
    return true;
  }

  void leaf(Scratch& s) const {
    std::vector<i64> sub(static_cast<std::size_t>(n * n));
    for (int c = 0; c < n; ++c)
      for (int i = 0; i < n; ++i)
        sub[static_cast<std::size_t>(i * n + c)] = entry(s.selected[static_cast<std::size_t>(c)], i);
    i64 value = 0;
    if (snf_last_factor_i64(sub, n, value)) {
      if (value == 0) raise(Errc::Internal, "pruned enumeration reached a singular leaf");
      s.values.insert(Int(static_cast<long>(value)));
      return;
    }
    // Growth fallback: exact SNF on the original submatrix.
    IntMatrix em(n, n);
    for (int c = 0; c < n; ++c)
      for (int i = 0; i < n; ++i) em(i, c) = exact(i, s.selected[static_cast<std::size_t>(c)]);
    SnfResult r = smith_normal_form(em);
    s.values.insert(r.d(n - 1));
  }

  void recurse(Scratch& s, int depth, int start) const {
    if (depth == n) {
      leaf(s);
      return;
    }
    for (int j = start; j <= m - (n - depth); ++j) {
      if (!reduce(s, depth, j)) continue;
      s.selected[static_cast<std::size_t>(depth)] = j;
      recurse(s, depth + 1, j + 1);
    }
  }

  std::set<Int> run(int threads) const {
    std::vector<int> firsts(static_cast<std::size_t>(m - n + 1));
    std::iota(firsts.begin(), firsts.end(), 0);
    std::set<Int> merged;
    std::mutex merge_mutex;
    std::atomic<std::size_t> cursor{0};
    auto worker = [&]() {
      Scratch s;
      s.basis.assign(static_cast<std::size_t>(n * n), 0);
      s.pivot_row.assign(static_cast<std::size_t>(n), 0);
      s.selected.assign(static_cast<std::size_t>(n), 0);
      for (;;) {
        std::size_t k = cursor.fetch_add(1);
        if (k >= firsts.size()) break;
        int j = firsts[k];
        if (!reduce(s, 0, j)) continue;
        s.selected[0] = j;
        recurse(s, 1, j + 1);
      }
      std::lock_guard<std::mutex> lock(merge_mutex);
      merged.merge(s.values);
    };
    std::vector<std::thread> pool;
    for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    return merged;
  }
};

std::uint64_t checked_combination_count(int m, int n, std::uint64_t budget, const std::string& label) {
  Int c = 1;
  for (int i = 0; i < n; ++i) c = c * (m - i) / (i + 1);
  if (c > Int(static_cast<unsigned long>(budget)))
    raise(Errc::BudgetExceeded, label + " needs " + to_string(c) + " subsets; budget " +
                                    std::to_string(budget));
  return static_cast<std::uint64_t>(c.get_ui());
}

int resolve_threads(int threads) {
  if (threads > 0) return threads;
  unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(hc);
}

InvariantSet enumerate_levels(const IntMatrix& b, std::uint64_t budget, int threads,
                              const std::string& label, SetKind kind) {
  const int n = static_cast<int>(b.rows());
  const int m = static_cast<int>(b.cols());
  if (m < n) raise(Errc::NotFullRank, label + ": fewer columns than rows");
  std::uint64_t covered = checked_combination_count(m, n, budget, label);

  ColumnEnumerator en;
  en.n = n;
  en.m = m;
  en.exact = b;
  en.cols.resize(static_cast<std::size_t>(n * m));
  for (int c = 0; c < m; ++c)
    for (int i = 0; i < n; ++i) {
      if (!fits_i64(b(i, c))) raise(Errc::Internal, label + ": entry out of int64 range");
      en.cols[static_cast<std::size_t>(c * n + i)] = to_i64(b(i, c));
    }

  std::set<Int> values = en.run(resolve_threads(threads));

  InvariantSet out;
  out.kind = kind;
  out.phi = label;
  out.budget_spent = covered;
  out.values.reserve(values.size());
  for (const Int& v : values) out.values.push_back(Rat(v));
  return out;
}

}  // namespace

InvariantSet dset_of_matrix(const IntMatrix& b, std::uint64_t budget, int threads,
                            const std::string& label) {
  return enumerate_levels(b, budget, threads, label, SetKind::D);
}

InvariantSet dset(const RootSystem& rs, std::uint64_t budget, int threads) {
  return enumerate_levels(pairing_matrix(rs), budget, threads, rs.name(), SetKind::D);
}

InvariantSet eset(const RootSystem& rs, std::uint64_t budget, int threads) {
  IntMatrix roots(rs.rank, rs.positive_count());
  for (int c = 0; c < rs.positive_count(); ++c)
    for (int i = 0; i < rs.rank; ++i) roots(i, c) = Int(rs.positive_roots(i, c));
  return enumerate_levels(roots, budget, threads, rs.name(), SetKind::E);
}

InvariantSet hset(const RootSystem& rs) {
  InvariantSet out;
  out.kind = SetKind::H;
  out.phi = rs.name();
  for (long v : highest_root_coeffs(rs)) out.values.push_back(make_rat(v));
  std::sort(out.values.begin(), out.values.end());
  out.budget_spent = 1;
  return out;
}

InvariantSet tset(const RootSystem& rs) {
  InvariantSet out;
  out.kind = SetKind::T;
  out.phi = rs.name();
  std::set<Rat> vals;
  for (long q : highest_root_coeffs(rs))
    for (long p = 1; p <= q; ++p) vals.insert(make_rat(p, q));
  out.values.assign(vals.begin(), vals.end());
  out.budget_spent = 1;
  return out;
}

VerifyReport verify_eh(const RootSystem& rs, std::uint64_t budget, int threads) {
  VerifyReport rep;
  rep.lhs = eset(rs, budget, threads);
  rep.rhs = hset(rs);
  std::set<Rat> h1(rep.rhs.values.begin(), rep.rhs.values.end());
  h1.insert(Rat(1));
  rep.rhs.values.assign(h1.begin(), h1.end());
  rep.holds = rep.lhs.values == rep.rhs.values;
  return rep;
}

VerifyReport verify_de(const RootSystem& rs, std::uint64_t budget, int threads) {
  VerifyReport rep;
  rep.lhs = dset(rs, budget, threads);
  rep.rhs = eset(dual(rs), budget, threads);
  rep.holds = rep.lhs.values == rep.rhs.values;
  return rep;
}

}  // namespace witten
