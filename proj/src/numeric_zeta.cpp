#include "witten/numeric_zeta.hpp"

#include "witten/polyseries.hpp"
#include "witten/triangulation.hpp"
#include "witten/witten_core.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <vector>

namespace witten {

Real to_real(const Int& v) { return Real(v.get_str()); }

Real to_real(const Rat& r) { return to_real(numerator(r)) / to_real(denominator(r)); }

Real pi_real() { return boost::math::constants::pi<Real>(); }

namespace {

Real machine_slack(const Real& magnitude, long op_count) {
  static const Real eps = pow(Real(10), -(kWorkingDigits - 4));
  return abs(magnitude) * eps * Real(std::max(op_count, 1L));
}

bool is_small_integer(const Real& x, long& out) {
  Real r = round(x);
  if (abs(x - r) != 0) return false;
  if (abs(r) > Real(1000)) return false;
  out = static_cast<long>(r);
  return true;
}

// base^{-s} for base > 0; integer s goes through powers, else exp/log.
Real power_neg(const Real& base, const Real& s) {
  long k = 0;
  if (is_small_integer(s, k)) {
    Real p = pow(base, static_cast<int>(k < 0 ? -k : k));
    return k >= 0 ? 1 / p : p;
  }
  return exp(-s * log(base));
}

Complex power_neg(const Real& base, const Complex& s) {
  if (s.imag() == 0) return Complex(power_neg(base, s.real()));
  return exp(-s * log(base));
}

Real real_part(const Real& x) { return x; }
Real real_part(const Complex& x) { return x.real(); }

// Euler-Maclaurin core, one code path for real and complex s.
template <typename S>
struct EmValue {
  S value;
  Real bound;
};

template <typename S>
EmValue<S> hurwitz_em(const S& s, const Real& a, const Precision& prec) {
  if (a <= 0) raise(Errc::Internal, "hurwitz zeta needs a > 0");
  if (s == S(1)) raise(Errc::PoleAtOne, "hurwitz zeta pole at s = 1");

  const Real sigma = real_part(s);
  const int target = prec.target_digits;
  const long m_cut = std::max<long>({2L * target, static_cast<long>(3 * abs(sigma)) + 8, 16});
  const int k_corr = std::max(10, std::min(target + 5, static_cast<int>(m_cut) / 2 - 1));

  S acc = S(0);
  for (long k = 0; k < m_cut; ++k) acc += power_neg(a + Real(k), s);

  const Real base = a + Real(m_cut);
  // (M+a)^{1-s}/(s-1) + (M+a)^{-s}/2
  acc += power_neg(base, s - S(1)) / (s - S(1));
  acc += power_neg(base, s) / 2;

  // sum_j B_{2j}/(2j)! (s)_{2j-1} (M+a)^{-s-2j+1}
  S poch = s;                                   // (s)_1
  S tail_pow = power_neg(base, s + S(1));       // (M+a)^{-s-1}
  const Real inv_base2 = 1 / (base * base);
  S corr = S(0);
  for (int j = 1; j <= k_corr; ++j) {
    if (j > 1) poch *= (s + S(2 * j - 3)) * (s + S(2 * j - 2));
    Real factor = to_real(bernoulli_number(2 * j)) / to_real(factorial(2 * j));
    corr += tail_pow * poch * factor;
    tail_pow *= inv_base2;
  }
  acc += corr;

  // Remainder bounded by twice the first omitted correction term.
  S poch_next = poch * (s + S(2 * k_corr - 1)) * (s + S(2 * k_corr));
  Real omitted = abs(to_real(bernoulli_number(2 * k_corr + 2)) / to_real(factorial(2 * k_corr + 2)) *
                     abs(poch_next) * abs(tail_pow));
  Real bound = 2 * omitted + machine_slack(abs(acc), m_cut + k_corr);
  return {acc, bound};
}

}  // namespace

ComplexBound hurwitz_zeta(const Complex& s, const Real& a, const Precision& prec) {
  auto r = hurwitz_em<Complex>(s, a, prec);
  return {r.value, r.bound};
}

RealBound hurwitz_zeta(const Real& s, const Real& a, const Precision& prec) {
  if (s == 1) raise(Errc::PoleAtOne, "hurwitz zeta pole at s = 1");
  auto r = hurwitz_em<Real>(s, a, prec);
  return {r.value, r.bound};
}

RealBound riemann_zeta(const Real& s, const Precision& prec) {
  return hurwitz_zeta(s, Real(1), prec);
}

namespace {

// sum_{n>=N} w^n n^{-s} by iterated summation by parts:
//   T_k = sum_{m>=N} w^m (Delta^k v)_m,  T_k = (w^N (Delta^k v)_N + w T_{k+1})/(1-w),
// so T_0 = sum_k w^{N+k} (Delta^k v)_N / (1-w)^{k+1} + w^K T_K / (1-w)^K.
// For real s the v_n are completely monotone and sum_m |Delta^K v_m| =
// |Delta^{K-1} v_N|, which gives the remainder bound below.
ComplexBound oscillatory_tail(const Complex& w, const Complex& s, long n0, int depth,
                              const Precision& prec) {
  std::vector<Complex> diff(static_cast<std::size_t>(depth + 1));
  for (int i = 0; i <= depth; ++i)
    diff[static_cast<std::size_t>(i)] = power_neg(Real(n0 + i), s);

  Complex one_minus_w = Complex(1) - w;
  Complex value = 0;
  Complex w_pow = 1;
  for (long i = 0; i < n0; ++i) w_pow *= w;
  Complex denom = one_minus_w;
  Real last_abs = 0;
  for (int k = 0; k < depth; ++k) {
    value += w_pow * diff[0] / denom;
    last_abs = abs(diff[0]);
    // advance the difference table one level: entries 0 .. depth-k-1
    for (int i = 0; i < depth - k; ++i)
      diff[static_cast<std::size_t>(i)] =
          diff[static_cast<std::size_t>(i + 1)] - diff[static_cast<std::size_t>(i)];
    w_pow *= w;
    denom *= one_minus_w;
  }
  // |remainder| <= |Delta^{depth-1} v_{n0}| / |1-w|^{depth}; factor 2 for
  // the complex case where monotonicity is not available.
  Real bound = 2 * last_abs / pow(abs(one_minus_w), depth) +
               machine_slack(abs(value), static_cast<long>(depth) * depth);
  (void)prec;
  return {value, bound};
}

}  // namespace

ComplexBound lerch_F(const Complex& s, const Real& a, long cutoff, const Precision& prec) {
  if (real_part(s) <= 1) raise(Errc::NotConvergent, "lerch_F needs Re s > 1");
  const int depth = std::min(90, std::max(40, prec.target_digits + 20));
  const long n0 = std::max<long>({cutoff, 2L * depth, 64});

  const Real two_pi = 2 * pi_real();
  Complex total = 0;
  Real bound = 0;
  const Complex phase = exp(Complex(0, 1) * pi_real() * s);  // e^{pi i s}

  for (int dir = 0; dir < 2; ++dir) {
    const Real angle = (dir == 0 ? two_pi * a : -two_pi * a);
    const Complex w = exp(Complex(0, 1) * angle);
    Complex partial = 0;
    Complex w_pow = 1;
    for (long n = 1; n < n0; ++n) {
      w_pow *= w;
      partial += w_pow * power_neg(Real(n), s);
    }
    ComplexBound tail = oscillatory_tail(w, s, n0, depth, prec);
    Complex sum_dir = partial + tail.value;
    if (dir == 0) {
      total += sum_dir;
      bound += tail.bound;
    } else {
      total += phase * sum_dir;
      bound += abs(phase) * tail.bound;
    }
  }
  bound += machine_slack(abs(total), 4 * n0);
  return {total, bound};
}

Real apostol_residual(const Real& s, const Real& a, const Precision& prec) {
  if (s <= 1) raise(Errc::NotConvergent, "apostol check needs s > 1");
  if (a <= 0 || a >= 1) raise(Errc::Internal, "apostol check needs 0 < a < 1");
  RealBound lhs = hurwitz_zeta(Real(1) - s, a, prec);
  ComplexBound f = lerch_F(Complex(s), a, 0, prec);
  const Real gamma_s = boost::math::tgamma(s);
  // (2 pi i)^{-s} = (2 pi)^{-s} e^{-i pi s / 2}
  const Complex pref =
      power_neg(2 * pi_real(), s) * exp(Complex(0, -1) * pi_real() * s / 2) * gamma_s;
  return abs(Complex(lhs.value) - pref * f.value);
}

namespace detail {

void gauss_legendre_01(int n, std::vector<Real>& nodes, std::vector<Real>& weights) {
  static std::mutex mutex;
  static std::map<int, std::pair<std::vector<Real>, std::vector<Real>>> cache;
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(n);
    if (it != cache.end()) {
      nodes = it->second.first;
      weights = it->second.second;
      return;
    }
  }
  // Roots of P_n on (-1,1) by Newton from the Chebyshev estimate.
  std::vector<Real> xs(static_cast<std::size_t>(n)), ws(static_cast<std::size_t>(n));
  const Real pi = pi_real();
  for (int i = 0; i < n; ++i) {
    Real x = cos(pi * (Real(i) + Real(3) / 4) / (Real(n) + Real(1) / 2));
    Real dp = 0;
    for (int iter = 0; iter < 200; ++iter) {
      Real p0 = 1, p1 = x;
      for (int k = 2; k <= n; ++k) {
        Real p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1);
      Real step = p1 / dp;
      x -= step;
      if (abs(step) < pow(Real(10), -(kWorkingDigits - 2))) break;
    }
    xs[static_cast<std::size_t>(i)] = x;
    ws[static_cast<std::size_t>(i)] = 2 / ((1 - x * x) * dp * dp);
  }
  // shift to [0,1]
  for (int i = 0; i < n; ++i) {
    xs[static_cast<std::size_t>(i)] = (xs[static_cast<std::size_t>(i)] + 1) / 2;
    ws[static_cast<std::size_t>(i)] /= 2;
  }
  std::lock_guard<std::mutex> lock(mutex);
  cache[n] = {xs, ws};
  nodes = xs;
  weights = ws;
}

}  // namespace detail

namespace {

template <typename F>
Real gl_segment(const F& f, const Real& lo, const Real& hi, int n) {
  std::vector<Real> xs, ws;
  detail::gauss_legendre_01(n, xs, ws);
  Real acc = 0;
  const Real len = hi - lo;
  for (int i = 0; i < n; ++i)
    acc += ws[static_cast<std::size_t>(i)] * f(lo + len * xs[static_cast<std::size_t>(i)]);
  return acc * len;
}

// Composite on [0, hi] with panels shrinking geometrically toward 0, for
// integrands with an endpoint power singularity in the derivative.
template <typename F>
Real gl_geometric(const F& f, const Real& hi, int n, int levels) {
  Real acc = 0;
  Real right = hi;
  for (int k = 0; k < levels; ++k) {
    Real left = right / 2;
    acc += gl_segment(f, left, right, n);
    right = left;
  }
  return acc;
}

struct A2Quadrature {
  Real value;
  Real error;
};

// I_{A2}(s) = int_0^1 z(x) z(1-x)^2 dx with z = zeta(1-s, .), folded onto
// [0, 1/2]. With zp = z(1+x), zm = z(1-x) and z(x) = zp + x^{s-1}:
//   integrand = (zp zm^2 + zm zp^2) + x^{s-1}(zm^2 + 2 zm zp) + x^{2s-2} zm,
// so the analytic part integrates on uniform panels while the power pieces
// get their constant term in closed form and the remainder on panels
// shrinking geometrically into the endpoint.
A2Quadrature a2_integral(const Real& s, int nodes, const Precision& prec) {
  Precision eval_prec(std::min(prec.target_digits + 10, kWorkingDigits - 10));
  auto zeta_at = [&](const Real& a) { return hurwitz_zeta(Real(1) - s, a, eval_prec).value; };
  const Real half = Real(1) / 2;
  const Real sig1 = s - 1, sig2 = 2 * s - 2;
  const Real z1 = zeta_at(Real(1));  // zm = zp at x = 0
  const Real e1_0 = z1 * z1 + 2 * z1 * z1;
  const Real e2_0 = z1;

  auto run = [&](int n) {
    auto smooth = [&](const Real& x) {
      Real zp = zeta_at(1 + x), zm = zeta_at(1 - x);
      return zp * zm * zm + zm * zp * zp;
    };
    Real acc = 0;
    for (int p = 0; p < 8; ++p)
      acc += gl_segment(smooth, half * p / 8, half * (p + 1) / 8, n);

    // closed forms of the constant parts: e0 (1/2)^{sig+1}/(sig+1)
    acc += e1_0 * power_neg(half, -(sig1 + 1)) / (sig1 + 1);
    acc += e2_0 * power_neg(half, -(sig2 + 1)) / (sig2 + 1);

    auto rest = [&](const Real& x) {
      Real zp = zeta_at(1 + x), zm = zeta_at(1 - x);
      Real e1 = zm * zm + 2 * zm * zp;
      return power_neg(x, -sig1) * (e1 - e1_0) + power_neg(x, -sig2) * (zm - e2_0);
    };
    acc += gl_geometric(rest, half, n, 96);
    return acc;
  };

  Real coarse = run(nodes);
  Real fine = run(nodes + nodes / 2);
  return {fine, abs(fine - coarse) + machine_slack(abs(fine), 10000)};
}

// 2-D quadrature of I_{B2}(s) over the band cells, Duffy-collapsed
// Gauss-Legendre per triangle.
A2Quadrature b2_integral(const RootSystem& rs, const Real& s, int nodes, const Precision& prec) {
  Precision eval_prec(std::min(prec.target_digits + 10, kWorkingDigits - 10));
  IntegrandSpec spec = integrand_spec(rs);
  InvariantSet denoms = dset_of_matrix(spec.forms, 1u << 20, 0, spec.phi + "-forms");
  std::vector<Int> expected;
  for (const Rat& v : denoms.values) expected.push_back(numerator(v));
  BandTriangulation tri = band_triangulate(spec.forms, expected);

  auto zeta_at = [&](const Real& a) { return hurwitz_zeta(Real(1) - s, a, eval_prec).value; };

  auto run = [&](int n) {
    std::vector<Real> xs, ws;
    detail::gauss_legendre_01(n, xs, ws);
    Real total = 0;
    for (const auto& cell : tri.cells) {
      const RatMatrix& v = cell.simplex.vertices;
      Real v0x = to_real(v(0, 0)), v0y = to_real(v(1, 0));
      Real e1x = to_real(v(0, 1) - v(0, 0)), e1y = to_real(v(1, 1) - v(1, 0));
      Real e2x = to_real(v(0, 2) - v(0, 1)), e2y = to_real(v(1, 2) - v(1, 1));
      Rat jac_rat = (v(0, 1) - v(0, 0)) * (v(1, 2) - v(1, 0)) - (v(0, 2) - v(0, 0)) * (v(1, 1) - v(1, 0));
      Real jac = abs(to_real(jac_rat));
      Real cell_acc = 0;
      for (int iu = 0; iu < n; ++iu)
        for (int iv = 0; iv < n; ++iv) {
          const Real& u = xs[static_cast<std::size_t>(iu)];
          const Real& vv = xs[static_cast<std::size_t>(iv)];
          // x = v0 + u (v1 - v0) + u vv (v2 - v1); dx = |J| u du dvv
          Real x = v0x + u * (e1x + vv * e2x);
          Real y = v0y + u * (e1y + vv * e2y);
          Real f = 1;
          for (Index c = 0; c < spec.forms.cols(); ++c) {
            Real g = to_real(spec.forms(0, c)) * x + to_real(spec.forms(1, c)) * y -
                     Real(cell.bands(static_cast<int>(c)));
            f *= zeta_at(g);
          }
          cell_acc += ws[static_cast<std::size_t>(iu)] * ws[static_cast<std::size_t>(iv)] * u * f;
        }
      total += jac * cell_acc;
    }
    return total;
  };

  Real coarse = run(nodes);
  Real fine = run(nodes + nodes / 2);
  return {fine, abs(fine - coarse) + machine_slack(abs(fine), 100000)};
}

}  // namespace

IntRepReport integral_rep_check(const RootSystem& rs, const Real& s, int quad_nodes,
                                const Precision& prec, const Real& tol) {
  if (s <= 1) raise(Errc::NotConvergent, "integral representation check needs s > 1");

  A2Quadrature quad{};
  if (rs.family == Family::A && rs.rank == 2) {
    quad = a2_integral(s, quad_nodes, prec);
  } else if ((rs.family == Family::B || rs.family == Family::C) && rs.rank == 2) {
    quad = b2_integral(rs, s, quad_nodes, prec);
  } else {
    raise(Errc::DimensionUnsupported, "quadrature implemented for A2 and B2 only");
  }
  if (quad.error > tol)
    raise(Errc::QuadratureFailure,
          "quadrature error estimate " + quad.error.str(3) + " exceeds tolerance " + tol.str(3));

  const int r = rs.positive_count();

  // lhs: P(s) K^{-s} zeta_phi(s), P from the length generating function at
  // q = e^{i pi s}.
  RealBound zeta_phi = numeric_multisum_to_tol(rs, s, tol / 10, prec);
  std::vector<Int> pcoeff = poincare_poly(rs);
  const Complex q = exp(Complex(0, 1) * pi_real() * s);
  Complex p_s = 0;
  Complex q_pow = 1;
  for (std::size_t l = 0; l < pcoeff.size(); ++l) {
    p_s += to_real(pcoeff[l]) * q_pow;
    q_pow *= q;
  }
  const Real k_s = power_neg(to_real(k_phi(rs)), s);  // K^{-s}
  Complex lhs = p_s * k_s * zeta_phi.value;

  // rhs: ((2 pi i)^s / Gamma(s))^r I(s)
  const Real gamma_s = boost::math::tgamma(s);
  const Complex two_pi_i_s = exp(Complex(Real(0), pi_real() / 2) * s) / power_neg(2 * pi_real(), s);
  const Complex base = two_pi_i_s / gamma_s;
  Complex factor = 1;
  for (int k = 0; k < r; ++k) factor *= base;
  Complex rhs = factor * quad.value;

  IntRepReport rep;
  rep.lhs = lhs;
  rep.rhs = rhs;
  rep.i_quad = quad.value;
  rep.quad_error = quad.error;
  Real denom = std::max({abs(lhs), abs(rhs), Real(1)});
  rep.residual = abs(lhs - rhs) / denom;
  return rep;
}

}  // namespace witten
