#ifndef WITTEN_EXACT_LINALG_HPP
#define WITTEN_EXACT_LINALG_HPP

// Exact dense linear algebra over arbitrary-precision rationals/integers:
// inverses, determinants, Smith normal form, matrix level and lattice
// quotient exponents. Matrices are value-semantic; every operation returns
// a fresh matrix and never mutates its input.

#include "witten/errors.hpp"
#include "witten/scalars.hpp"

namespace witten {

// Smith normal form of an integer matrix M: u * M * v = diag(d) with
// u, v unimodular and d[0] | d[1] | ... (nonnegative invariant factors).
struct SnfResult {
  IntVector d;
  IntMatrix u;
  IntMatrix v;
};

RatMatrix inverse(const RatMatrix& m);  // throws Singular
Rat determinant(const RatMatrix& m);
Int determinant(const IntMatrix& m);

SnfResult smith_normal_form(const IntMatrix& m);
SnfResult smith_normal_form(const RatMatrix& m);  // throws NonIntegral

// Smallest N >= 1 with N * a^{-1} integral; the last invariant factor.
Int level(const IntMatrix& a);  // throws Singular
Int level(const RatMatrix& a);  // throws NonIntegral / Singular

// Exponent of Z^n / Span_Z(columns of gens); throws NotFullRank.
Int lattice_quotient_exponent(const IntMatrix& gens);

// Rank over Q of an integer matrix (fraction-free elimination).
Index rank(const IntMatrix& m);

inline IntMatrix to_int_matrix(const RatMatrix& m) {
  IntMatrix out(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) {
      if (!is_integral(m(i, j)))
        raise(Errc::NonIntegral, "entry (" + std::to_string(i) + "," + std::to_string(j) + ") = " + to_string(m(i, j)));
      out(i, j) = numerator(m(i, j));
    }
  return out;
}

inline RatMatrix to_rat_matrix(const IntMatrix& m) {
  RatMatrix out(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) out(i, j) = Rat(m(i, j));
  return out;
}

}  // namespace witten

#endif  // WITTEN_EXACT_LINALG_HPP
