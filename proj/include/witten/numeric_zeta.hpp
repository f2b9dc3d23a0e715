#ifndef WITTEN_NUMERIC_ZETA_HPP
#define WITTEN_NUMERIC_ZETA_HPP

// High-precision numerics: Hurwitz zeta by Euler-Maclaurin with a reported
// remainder bound, the two-sided exponential sum F(s,a) under the branch
// convention r^s = |r|^s e^{-pi i s} for r < 0, and the quadrature check of
// the integral representation. Arithmetic runs at a fixed working precision
// well above any requested target; truncation cutoffs scale with the target.

#include "witten/errors.hpp"
#include "witten/rootsystem.hpp"
#include "witten/scalars.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

namespace witten {

inline constexpr int kWorkingDigits = 100;

using Real = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<kWorkingDigits>>;
using Complex = boost::multiprecision::cpp_complex<kWorkingDigits>;

struct Precision {
  int target_digits = 30;

  Precision() = default;
  explicit Precision(int target) : target_digits(target) {
    if (target < 1 || target > kWorkingDigits - 10)
      raise(Errc::Internal, "target digits must leave a 10-digit working guard");
  }
  int working_digits() const { return kWorkingDigits; }
};

struct RealBound {
  Real value;
  Real bound;  // upper bound on the absolute error
};

struct ComplexBound {
  Complex value;
  Real bound;
};

Real to_real(const Int& v);
Real to_real(const Rat& r);
Real pi_real();

// Euler-Maclaurin Hurwitz zeta, s != 1, a > 0.
ComplexBound hurwitz_zeta(const Complex& s, const Real& a, const Precision& prec = Precision());
RealBound hurwitz_zeta(const Real& s, const Real& a, const Precision& prec = Precision());
RealBound riemann_zeta(const Real& s, const Precision& prec = Precision());

// F(s,a) = sum_{n>=1} e^{2 pi i n a}/n^s + e^{pi i s} sum_{n>=1} e^{-2 pi i n a}/n^s.
// Tail accelerated by iterated summation by parts against the closed
// geometric partial sums; the reported bound is rigorous for real s (the
// terms n^{-s} are completely monotone) and carries a safety factor
// otherwise. Requires Re s > 1.
ComplexBound lerch_F(const Complex& s, const Real& a, long cutoff, const Precision& prec = Precision());

// | zeta(1-s,a) - Gamma(s) (2 pi i)^{-s} F(s,a) |, both sides independent.
Real apostol_residual(const Real& s, const Real& a, const Precision& prec = Precision());

struct IntRepReport {
  Complex lhs;       // P(s) K^{-s} zeta_phi(s)
  Complex rhs;       // ((2 pi i)^s / Gamma(s))^r * quadrature of I_phi(s)
  Real i_quad;       // the quadrature value of I_phi(s) itself
  Real quad_error;   // internal quadrature error estimate
  Real residual;     // |lhs - rhs| / max(|lhs|, |rhs|, 1)
};

// Verifies P(s) K^{-s} zeta(s) = ((2 pi i)^s / Gamma(s))^r I(s) numerically
// for real s > 1; supported for A2 (1-D, endpoint powers split off in
// closed form) and B2 (2-D over the band cells). Throws QuadratureFailure
// when the internal error estimate exceeds tol.
IntRepReport integral_rep_check(const RootSystem& rs, const Real& s, int quad_nodes,
                                const Precision& prec, const Real& tol);

namespace detail {
// Gauss-Legendre nodes/weights on [0,1]; cached per order.
void gauss_legendre_01(int n, std::vector<Real>& nodes, std::vector<Real>& weights);
}  // namespace detail

}  // namespace witten

#endif  // WITTEN_NUMERIC_ZETA_HPP
