#include "witten/exact_linalg.hpp"

#include <algorithm>
#include <cstdlib>

namespace witten {

RatMatrix inverse(const RatMatrix& m) {
  if (m.rows() != m.cols()) raise(Errc::Singular, "inverse of non-square matrix");
  const Index n = m.rows();
  RatMatrix a = m;
  RatMatrix inv = RatMatrix::Identity(n, n);
  for (Index col = 0; col < n; ++col) {
    Index piv = -1;
    for (Index i = col; i < n; ++i)
      if (a(i, col) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) raise(Errc::Singular, "matrix is rank deficient");
    if (piv != col) {
      a.row(piv).swap(a.row(col));
      inv.row(piv).swap(inv.row(col));
    }
    Rat p = a(col, col);
    for (Index j = 0; j < n; ++j) {
      a(col, j) /= p;
      inv(col, j) /= p;
    }
    for (Index i = 0; i < n; ++i) {
      if (i == col || a(i, col) == 0) continue;
      Rat f = a(i, col);
      for (Index j = 0; j < n; ++j) {
        a(i, j) -= f * a(col, j);
        inv(i, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

Rat determinant(const RatMatrix& m) {
  if (m.rows() != m.cols()) raise(Errc::Singular, "determinant of non-square matrix");
  const Index n = m.rows();
  RatMatrix a = m;
  Rat det = 1;
  for (Index col = 0; col < n; ++col) {
    Index piv = -1;
    for (Index i = col; i < n; ++i)
      if (a(i, col) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) return Rat(0);
    if (piv != col) {
      a.row(piv).swap(a.row(col));
      det = -det;
    }
    det *= a(col, col);
    Rat p = a(col, col);
    for (Index i = col + 1; i < n; ++i) {
      if (a(i, col) == 0) continue;
      Rat f = a(i, col) / p;
      for (Index j = col; j < n; ++j) a(i, j) -= f * a(col, j);
    }
  }
  return det;
}

Int determinant(const IntMatrix& m) { return to_int(determinant(to_rat_matrix(m))); }

Index rank(const IntMatrix& m) {
  RatMatrix a = to_rat_matrix(m);
  const Index rows = a.rows(), cols = a.cols();
  Index r = 0;
  for (Index col = 0; col < cols && r < rows; ++col) {
    Index piv = -1;
    for (Index i = r; i < rows; ++i)
      if (a(i, col) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r) a.row(piv).swap(a.row(r));
    Rat p = a(r, col);
    for (Index i = r + 1; i < rows; ++i) {
      if (a(i, col) == 0) continue;
      Rat f = a(i, col) / p;
      for (Index j = col; j < cols; ++j) a(i, j) -= f * a(r, j);
    }
    ++r;
  }
  return r;
}

namespace {

// True if some entry of a[t.., t..] is nonzero; reports the smallest in
// absolute value (the pivot choice that keeps intermediate growth down).
bool find_pivot(const IntMatrix& a, Index t, Index& pi, Index& pj) {
  bool found = false;
  Int best;
  for (Index i = t; i < a.rows(); ++i)
    for (Index j = t; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      Int v = abs(a(i, j));
      if (!found || v < best) {
        found = true;
        best = v;
        pi = i;
        pj = j;
      }
    }
  return found;
}

}  // namespace

SnfResult smith_normal_form(const IntMatrix& m) {
  const Index rows = m.rows(), cols = m.cols();
  IntMatrix a = m;
  IntMatrix u = IntMatrix::Identity(rows, rows);
  IntMatrix v = IntMatrix::Identity(cols, cols);
  const Index steps = std::min(rows, cols);

  for (Index t = 0; t < steps; ++t) {
    Index pi = t, pj = t;
    if (!find_pivot(a, t, pi, pj)) break;
    if (pi != t) {
      a.row(pi).swap(a.row(t));
      u.row(pi).swap(u.row(t));
    }
    if (pj != t) {
      a.col(pj).swap(a.col(t));
      v.col(pj).swap(v.col(t));
    }

    for (;;) {
      bool clean = true;
      for (Index i = t + 1; i < rows; ++i) {
        if (a(i, t) == 0) continue;
        Int q;
        mpz_tdiv_q(q.get_mpz_t(), a(i, t).get_mpz_t(), a(t, t).get_mpz_t());
        if (q != 0) {
          a.row(i) -= q * a.row(t);
          u.row(i) -= q * u.row(t);
        }
        if (a(i, t) != 0) {
          // Remainder is smaller than the pivot; promote it and restart.
          a.row(i).swap(a.row(t));
          u.row(i).swap(u.row(t));
          clean = false;
        }
      }
      if (!clean) continue;
      for (Index j = t + 1; j < cols; ++j) {
        if (a(t, j) == 0) continue;
        Int q;
        mpz_tdiv_q(q.get_mpz_t(), a(t, j).get_mpz_t(), a(t, t).get_mpz_t());
        if (q != 0) {
          a.col(j) -= q * a.col(t);
          v.col(j) -= q * v.col(t);
        }
        if (a(t, j) != 0) {
          a.col(j).swap(a.col(t));
          v.col(j).swap(v.col(t));
          clean = false;
        }
      }
      if (!clean) continue;

      // Divisibility fix: the pivot must divide every remaining entry.
      bool fixed = true;
      for (Index i = t + 1; i < rows && fixed; ++i)
        for (Index j = t + 1; j < cols && fixed; ++j) {
          if (a(i, j) % a(t, t) != 0) {
            a.row(t) += a.row(i);
            u.row(t) += u.row(i);
            fixed = false;
          }
        }
      if (fixed) break;
    }

    if (a(t, t) < 0) {
      a.row(t) = -a.row(t);
      u.row(t) = -u.row(t);
    }
  }

  SnfResult out;
  out.d.resize(steps);
  for (Index t = 0; t < steps; ++t) out.d(t) = a(t, t);
  out.u = std::move(u);
  out.v = std::move(v);
  return out;
}

SnfResult smith_normal_form(const RatMatrix& m) { return smith_normal_form(to_int_matrix(m)); }

Int level(const IntMatrix& a) {
  if (a.rows() != a.cols()) raise(Errc::Singular, "level of non-square matrix");
  SnfResult s = smith_normal_form(a);
  const Index n = a.rows();
  if (n == 0) return Int(1);
  if (s.d(n - 1) == 0) raise(Errc::Singular, "level of singular matrix");
  return s.d(n - 1);
}

Int level(const RatMatrix& a) { return level(to_int_matrix(a)); }

Int lattice_quotient_exponent(const IntMatrix& gens) {
  const Index n = gens.rows();
  if (gens.cols() < n) raise(Errc::NotFullRank, "fewer generators than ambient rank");
  SnfResult s = smith_normal_form(gens);
  if (n == 0) return Int(1);
  if (s.d(n - 1) == 0) raise(Errc::NotFullRank, "generators do not span full rank");
  return s.d(n - 1);
}

}  // namespace witten
