#ifndef WITTEN_WITTEN_CORE_HPP
#define WITTEN_WITTEN_CORE_HPP

// Central objects: the linear-form system behind I_phi(s), exact rational
// values of zeta_phi at positive even integers, the A2 pole-coefficient
// bracket with its series cross-check, and the three rank-2 Bernoulli
// identities.

#include "witten/lattice_comb.hpp"
#include "witten/numeric_zeta.hpp"
#include "witten/polyseries.hpp"
#include "witten/rootsystem.hpp"
#include "witten/triangulation.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace witten {

// Linear forms of the integral representation over [0,1]^{r-n}: one
// identity form per non-simple positive root, then n wrapped forms
// w_i(x) = -sum_alpha (lambda_i, alpha^vee) x_alpha taken modulo 1.
struct IntegrandSpec {
  std::string phi;
  int dim = 0;        // r - n
  int n_wrapped = 0;  // rank
  IntMatrix forms;    // dim x r; identity columns first, wrapped columns last
};

IntegrandSpec integrand_spec(const RootSystem& rs);

struct EvenValueReport {
  std::string phi;
  int s = 0;
  Rat i_value;       // I_phi(s), exact
  Rat zeta_coeff;    // zeta_phi(s) = zeta_coeff * pi^pi_power
  Rat xi_coeff;      // xi_phi(s)   = xi_coeff   * pi^pi_power  (= zeta/K^s)
  long pi_power = 0;  // s * r
  std::size_t cells = 0;
  double elapsed_ms = 0;
};

// Exact rational zeta_phi(2m)/pi^{2mr} via Bernoulli integration over the
// band triangulation. refine subdivides every cell barycentrically first
// (the value must not change). Throws DimensionUnsupported for r-n > 4 and
// BudgetExceeded when the triangulation exceeds max_cells.
EvenValueReport exact_even_value(const RootSystem& rs, int s_even,
                                 std::uint64_t max_cells = 5'000'000, bool refine = false,
                                 int threads = 0);

// Partial sum of K^s sum_{lambda strongly dominant} prod (lambda,a^vee)^{-s}
// over coordinates <= cutoff, plus an integral-comparison tail bound.
// Throws NotConvergent for s <= 1.
RealBound numeric_multisum(const RootSystem& rs, const Real& s, long cutoff,
                           const Precision& prec = Precision());

// Picks the cutoff so the reported tail bound is below tol (relative).
RealBound numeric_multisum_to_tol(const RootSystem& rs, const Real& s, const Real& rel_tol,
                                  const Precision& prec = Precision());

// coeff * zeta(a) * zeta(b), or coeff * zeta(a) when b == 0.
struct ZetaProductTerm {
  Rat coeff;
  int a = 0;
  int b = 0;
};

struct A2PoleCoeff {
  int m = 0;
  // Merged over unordered argument pairs, sorted by (a, b).
  std::vector<ZetaProductTerm> terms;
  int raw_product_terms = 0;  // j = 0..m before merging
  Real numeric;
};

// The bracket giving [I_{A2}(s)][(s+m)^{-1}]: binomial closed form.
A2PoleCoeff a2_pole_coefficient(int m, const Precision& prec = Precision());

struct OnoderaReport {
  int m = 0;
  bool terms_match = false;  // closed form == series route, term by term
  Real closed_value;
  Real series_value;
  Real rel_diff;
};

// Cross-checks the closed-form bracket against the independent series
// route: extract [zeta(1+m,1-x)^2][x^m], 2[zeta(1+m,1-x)zeta(1+m,1+x)][x^m]
// and (1/2)[zeta(1+m,1-x)][x^{2m+1}] by truncated series with symbolic
// zeta coefficients. Even m >= 2.
OnoderaReport onodera_consistency(int m, const Precision& prec = Precision());

struct IdentityReport {
  bool holds = false;
  Rat lhs;
  Rat rhs;
};

IdentityReport identity_a2(int n);
IdentityReport identity_b2(int n);
IdentityReport identity_g2(int n);

}  // namespace witten

#endif  // WITTEN_WITTEN_CORE_HPP
