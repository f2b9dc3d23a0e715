#ifndef WITTEN_POLYSERIES_HPP
#define WITTEN_POLYSERIES_HPP

// Exact rational Bernoulli numbers/polynomials, zeta at negative integers,
// sparse multivariate polynomials, truncated power series carrying a formal
// log-constant symbol, and exact polynomial integration over rational
// simplices.

#include "witten/errors.hpp"
#include "witten/scalars.hpp"
#include "witten/triangulation.hpp"

#include <map>
#include <vector>

namespace witten {

// Sparse multivariate polynomial: exponent vector -> coefficient, no zeros.
struct MultiPoly {
  int nvars = 0;
  std::map<std::vector<int>, Rat> terms;
};

MultiPoly mp_zero(int nvars);
MultiPoly mp_const(int nvars, const Rat& c);
MultiPoly mp_var(int nvars, int i);
// c0 + sum_i c[i] * x_i
MultiPoly mp_affine(int nvars, const Rat& c0, const RatVector& c);

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
MultiPoly operator*(const Rat& c, const MultiPoly& a);
MultiPoly mp_pow(const MultiPoly& a, int e);
bool operator==(const MultiPoly& a, const MultiPoly& b);

Rat mp_eval(const MultiPoly& p, const RatVector& x);
int mp_degree(const MultiPoly& p);
// p with every variable substituted by the given polynomial (all subs share
// one variable set).
MultiPoly mp_substitute(const MultiPoly& p, const std::vector<MultiPoly>& subs);

Int factorial(int n);
Int binomial(int n, int k);
Rat bernoulli_number(int k);

// B_k as a univariate MultiPoly; B_k(x+1) - B_k(x) = k x^{k-1}.
MultiPoly bernoulli_polynomial(int k);
// B_k evaluated at an affine/polynomial argument (Horner).
MultiPoly bernoulli_at(int k, const MultiPoly& arg);

// zeta(-k) = -B_{k+1}(1)/(k+1); zeta(-n, a) = -B_{n+1}(a)/(n+1).
Rat zeta_neg_int(int k);
Rat hurwitz_neg_int(int n, const Rat& a);

// Integral of x^a over the standard simplex: prod(a_i!) / (d + sum a_i)!.
Rat monomial_simplex_integral(const std::vector<int>& exponents);

// Exact integral of p over s via the affine pullback to the standard
// simplex. Throws DegenerateSimplex.
Rat integrate_over_simplex(const MultiPoly& p, const Simplex& s);

// Truncated power series plain(x) + log_part(x) * L, where L is the opaque
// constant log(f(0)); log_base records f(0).
struct LogSeries {
  int order = 0;
  std::vector<Rat> plain;     // size order+1
  std::vector<Rat> log_part;  // size order+1
  Rat log_base = 1;           // L = log(log_base)
};

// Dense univariate series helpers (index = degree, truncated).
std::vector<Rat> series_mul(const std::vector<Rat>& a, const std::vector<Rat>& b, int order);
std::vector<Rat> series_pow(const std::vector<Rat>& a, int e, int order);
std::vector<Rat> series_exp(const std::vector<Rat>& a, int order);  // needs a[0] == 0
std::vector<Rat> to_series(const MultiPoly& univariate, int order);

LogSeries log_series(const MultiPoly& f, int order);  // NonPositiveConstantTerm
LogSeries log_series(const std::vector<Rat>& f, int order);

// Coefficient of x^k in (factor * ls): {plain part, log-symbol part}.
std::pair<Rat, Rat> log_series_coefficient(const std::vector<Rat>& factor, const LogSeries& ls, int k);

}  // namespace witten

#endif  // WITTEN_POLYSERIES_HPP
