#include "witten/witten_core.hpp"

#include "witten/exact_linalg.hpp"

#include <boost/math/special_functions/gamma.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <mutex>
#include <thread>

namespace witten {

namespace {

Real machine_slack(const Real& magnitude, long op_count) {
  static const Real eps = pow(Real(10), -(kWorkingDigits - 4));
  return abs(magnitude) * eps * Real(std::max(op_count, 1L));
}

}  // namespace

IntegrandSpec integrand_spec(const RootSystem& rs) {
  const int n = rs.rank;
  const int r = rs.positive_count();
  const int d = r - n;
  IntMatrix m = pairing_matrix(rs);

  IntegrandSpec spec;
  spec.phi = rs.name();
  spec.dim = d;
  spec.n_wrapped = n;
  spec.forms.resize(d, r);
  spec.forms.setConstant(Int(0));
  for (int j = 0; j < d; ++j) spec.forms(j, j) = 1;  // x_alpha, non-simple alpha
  // wrapped form i: -(lambda_i, alpha^vee) over the non-simple columns
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < d; ++j) spec.forms(j, d + i) = -m(i, n + j);
  return spec;
}

namespace {

// Product over all forms of B_s(shifted form), integrated exactly over the
// cell after pulling back to the standard simplex.
Rat cell_integral(const IntMatrix& forms, const BandedCell& cell, int s) {
  const Index d = forms.rows();
  const RatMatrix& v = cell.simplex.vertices;
  RatMatrix edges(d, d);
  for (Index k = 1; k <= d; ++k) edges.col(k - 1) = v.col(k) - v.col(0);
  Rat det = determinant(edges);
  if (det == 0) raise(Errc::DegenerateSimplex, "zero-volume cell");
  if (det < 0) det = -det;

  MultiPoly prod = mp_const(static_cast<int>(d), Rat(1));
  for (Index c = 0; c < forms.cols(); ++c) {
    Rat constant = -Rat(cell.bands(static_cast<int>(c)));
    RatVector lin(d);
    for (Index i = 0; i < d; ++i) {
      constant += Rat(forms(i, c)) * v(i, 0);
      Rat coeff = 0;
      for (Index k = 0; k < d; ++k) coeff += Rat(forms(k, c)) * edges(k, i);
      lin(i) = coeff;
    }
    prod = prod * bernoulli_at(s, mp_affine(static_cast<int>(d), constant, lin));
  }
  Rat acc = 0;
  for (const auto& [e, coeff] : prod.terms) acc += coeff * monomial_simplex_integral(e);
  return det * acc;
}

struct BandIntegral {
  Rat value;
  std::size_t cells = 0;
};

BandIntegral even_value_i_via_bands(const RootSystem& rs, int s, std::uint64_t max_cells, bool refine,
                                    int threads) {
  IntegrandSpec spec = integrand_spec(rs);
  InvariantSet denoms = dset_of_matrix(spec.forms, 1u << 20, threads, spec.phi + "-forms");
  std::vector<Int> expected;
  for (const Rat& q : denoms.values) expected.push_back(numerator(q));
  BandTriangulation tri = band_triangulate(spec.forms, expected);

  std::vector<BandedCell> cells;
  if (refine) {
    for (const auto& cell : tri.cells)
      for (auto& sub : barycentric_subdivide(cell.simplex)) {
        BandedCell bc;
        bc.simplex = std::move(sub);
        bc.bands = cell.bands;  // bands hold on any subset of the cell
        cells.push_back(std::move(bc));
      }
  } else {
    cells = std::move(tri.cells);
  }
  if (cells.size() > max_cells)
    raise(Errc::BudgetExceeded, "triangulation produced " + std::to_string(cells.size()) + " cells");

  int nthreads = threads > 0 ? threads : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  nthreads = std::min<int>(nthreads, static_cast<int>(cells.size()) == 0 ? 1 : static_cast<int>(cells.size()));
  Rat total = 0;
  std::mutex total_mutex;
  std::atomic<std::size_t> cursor{0};
  auto worker = [&]() {
    Rat local = 0;
    for (;;) {
      std::size_t k = cursor.fetch_add(1);
      if (k >= cells.size()) break;
      local += cell_integral(spec.forms, cells[k], s);
    }
    std::lock_guard<std::mutex> lock(total_mutex);
    total += local;
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < nthreads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  // zeta(1-s, a) = -B_s(a)/s per factor.
  const int r = rs.positive_count();
  Rat scale = (r % 2 == 0) ? Rat(1) : Rat(-1);
  Int s_pow_r = 1;
  for (int k = 0; k < r; ++k) s_pow_r *= s;
  return {scale * total / Rat(s_pow_r), cells.size()};
}

// A2 collapses to one interval with a single wrapped form; integrate the
// univariate product directly. The generic band pipeline reaches the same
// single cell; tests assert the two routes agree.
Rat even_value_i_a2(int s) {
  MultiPoly x = mp_var(1, 0);
  MultiPoly one_minus_x = mp_const(1, Rat(1)) - x;
  MultiPoly bx = bernoulli_at(s, x);
  MultiPoly b1mx = bernoulli_at(s, one_minus_x);
  MultiPoly integrand = bx * b1mx * b1mx;
  Simplex unit;
  unit.vertices.resize(1, 2);
  unit.vertices(0, 0) = 0;
  unit.vertices(0, 1) = 1;
  Rat integral = integrate_over_simplex(integrand, unit);
  Int s_cubed = Int(s) * s * s;
  return -integral / Rat(s_cubed);
}

}  // namespace

EvenValueReport exact_even_value(const RootSystem& rs, int s_even, std::uint64_t max_cells,
                                 bool refine, int threads) {
  if (s_even < 2 || s_even % 2 != 0)
    raise(Errc::Internal, "exact evaluation needs a positive even integer argument");
  const int n = rs.rank;
  const int r = rs.positive_count();
  const int d = r - n;
  if (d < 1 || d > 4)
    raise(Errc::DimensionUnsupported,
          rs.name() + " has r-n = " + std::to_string(d) + "; supported range is 1..4");

  auto t0 = std::chrono::steady_clock::now();
  EvenValueReport rep;
  rep.phi = rs.name();
  rep.s = s_even;

  if (rs.family == Family::A && rs.rank == 2 && !refine) {
    rep.i_value = even_value_i_a2(s_even);
    rep.cells = 1;
  } else {
    BandIntegral bi = even_value_i_via_bands(rs, s_even, max_cells, refine, threads);
    rep.i_value = bi.value;
    rep.cells = bi.cells;
  }

  // zeta(2m) normalization: K^{2m} ((-1)^m (2pi)^{2m} / (2m-1)!)^r I / |W|.
  const int m = s_even / 2;
  Int k_pow = 1;
  Int k = k_phi(rs);
  for (int i = 0; i < s_even; ++i) k_pow *= k;
  Int two_pow = Int(1) << static_cast<unsigned long>(s_even * r);
  Int fact_pow = 1;
  Int f = factorial(s_even - 1);
  for (int i = 0; i < r; ++i) fact_pow *= f;
  Rat sign = ((m * r) % 2 == 0) ? Rat(1) : Rat(-1);
  rep.zeta_coeff = Rat(k_pow) * sign * Rat(two_pow) * rep.i_value / (Rat(fact_pow) * Rat(weyl_order(rs)));
  rep.xi_coeff = rep.zeta_coeff / Rat(k_pow);
  rep.pi_power = static_cast<long>(s_even) * r;

  auto t1 = std::chrono::steady_clock::now();
  rep.elapsed_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  return rep;
}

RealBound numeric_multisum(const RootSystem& rs, const Real& s, long cutoff, const Precision& prec) {
  if (s <= 1) raise(Errc::NotConvergent, "multisum needs s > 1");
  const int n = rs.rank;
  IntMatrix m = pairing_matrix(rs);
  const int r = static_cast<int>(m.cols());
  std::vector<std::vector<long>> cols(static_cast<std::size_t>(r), std::vector<long>(static_cast<std::size_t>(n)));
  for (int c = 0; c < r; ++c)
    for (int i = 0; i < n; ++i) cols[static_cast<std::size_t>(c)][static_cast<std::size_t>(i)] = to_i64(m(i, c));

  long s_int = 0;
  const bool integral_s = [&] {
    Real rounded = round(s);
    if (abs(s - rounded) != 0 || abs(rounded) > Real(64)) return false;
    s_int = static_cast<long>(rounded);
    return true;
  }();

  std::vector<long> idx(static_cast<std::size_t>(n), 1);
  Real sum = 0;
  for (;;) {
    Real term = 1;
    for (int c = 0; c < r; ++c) {
      long dot = 0;
      for (int i = 0; i < n; ++i)
        dot += cols[static_cast<std::size_t>(c)][static_cast<std::size_t>(i)] * idx[static_cast<std::size_t>(i)];
      if (integral_s) {
        Real p = pow(Real(dot), static_cast<int>(s_int));
        term /= p;
      } else {
        term *= exp(-s * log(Real(dot)));
      }
    }
    sum += term;
    int pos = 0;
    while (pos < n) {
      if (++idx[static_cast<std::size_t>(pos)] <= cutoff) break;
      idx[static_cast<std::size_t>(pos)] = 1;
      ++pos;
    }
    if (pos == n) break;
  }

  const Real k_s = exp(s * log(to_real(k_phi(rs))));
  // Tail: every pairing is >= 1 and every column containing index i is
  // >= m_i, so the piece with m_i > cutoff is at most
  // zeta(s)^{n-1} * cutoff^{1 - k_i s}/(k_i s - 1), k_i the column count.
  Real zeta_s = riemann_zeta(s, prec).value;
  Real tail = 0;
  for (int i = 0; i < n; ++i) {
    int k_i = 0;
    for (int c = 0; c < r; ++c)
      if (cols[static_cast<std::size_t>(c)][static_cast<std::size_t>(i)] > 0) ++k_i;
    Real expo = Real(k_i) * s - 1;
    tail += exp(-expo * log(Real(cutoff))) / expo;
  }
  Real zeta_pow = 1;
  for (int i = 0; i + 1 < n; ++i) zeta_pow *= zeta_s;
  Real bound = k_s * zeta_pow * tail;

  long points = 1;
  for (int i = 0; i < n; ++i) points *= cutoff;
  return {k_s * sum, bound + machine_slack(abs(k_s * sum), points)};
}

RealBound numeric_multisum_to_tol(const RootSystem& rs, const Real& s, const Real& rel_tol,
                                  const Precision& prec) {
  long cutoff = 32;
  const long max_points = 40'000'000;
  for (;;) {
    RealBound r = numeric_multisum(rs, s, cutoff, prec);
    if (r.value != 0 && r.bound / abs(r.value) <= rel_tol) return r;
    long next = cutoff * 2;
    double pts = 1;
    for (int i = 0; i < rs.rank; ++i) pts *= static_cast<double>(next);
    if (pts > static_cast<double>(max_points))
      raise(Errc::BudgetExceeded, "multisum cannot reach the requested tolerance within the point budget");
    cutoff = next;
  }
}

namespace {

// Formal Q-combination of zeta products: sorted argument list -> coefficient.
using ZetaCombo = std::map<std::vector<int>, Rat>;

void combo_add(ZetaCombo& combo, std::vector<int> args, const Rat& coeff) {
  if (coeff == 0) return;
  std::sort(args.begin(), args.end());
  auto it = combo.find(args);
  if (it == combo.end()) {
    combo.emplace(std::move(args), coeff);
    return;
  }
  it->second += coeff;
  if (it->second == 0) combo.erase(it);
}

Real combo_eval(const ZetaCombo& combo, const Precision& prec) {
  std::map<int, Real> zeta_cache;
  auto zeta_of = [&](int a) {
    auto it = zeta_cache.find(a);
    if (it != zeta_cache.end()) return it->second;
    Real v = riemann_zeta(Real(a), prec).value;
    zeta_cache.emplace(a, v);
    return v;
  };
  Real acc = 0;
  for (const auto& [args, coeff] : combo) {
    Real term = to_real(coeff);
    for (int a : args) term *= zeta_of(a);
    acc += term;
  }
  return acc;
}

ZetaCombo bracket_closed_form(int m) {
  ZetaCombo combo;
  for (int j = 0; j <= m; ++j) {
    Rat coeff = Rat(binomial(m + j, j)) * Rat(binomial(2 * m - j, m - j)) *
                Rat(1 + 2 * ((j % 2 == 0) ? 1 : -1));
    combo_add(combo, {1 + m + j, 1 + 2 * m - j}, coeff);
  }
  combo_add(combo, {3 * m + 2}, Rat(binomial(3 * m + 1, 2 * m + 1)) / 2);
  return combo;
}

// Series route: zeta(1+m, 1 -+ x) = sum_k C(m+k,k) zeta(1+m+k) (+-x)^k.
ZetaCombo bracket_series_form(int m) {
  ZetaCombo combo;
  // [zeta(1+m,1-x)^2][x^m] and 2 [zeta(1+m,1-x) zeta(1+m,1+x)][x^m]
  for (int j = 0; j <= m; ++j) {
    int k = m - j;
    Rat base = Rat(binomial(m + j, j)) * Rat(binomial(m + k, k));
    combo_add(combo, {1 + m + j, 1 + m + k}, base);                              // minus x both
    combo_add(combo, {1 + m + j, 1 + m + k}, Rat(2) * base * ((k % 2 == 0) ? 1 : -1));  // cross
  }
  // (1/2) [zeta(1+m,1-x)][x^{2m+1}]
  combo_add(combo, {3 * m + 2}, Rat(binomial(3 * m + 1, 2 * m + 1)) / 2);
  return combo;
}

}  // namespace

A2PoleCoeff a2_pole_coefficient(int m, const Precision& prec) {
  if (m < 1) raise(Errc::Internal, "pole coefficient needs m >= 1");
  A2PoleCoeff out;
  out.m = m;
  out.raw_product_terms = m + 1;
  ZetaCombo combo = bracket_closed_form(m);
  for (const auto& [args, coeff] : combo) {
    ZetaProductTerm t;
    t.coeff = coeff;
    t.a = args[0];
    t.b = args.size() > 1 ? args[1] : 0;
    out.terms.push_back(std::move(t));
  }
  std::sort(out.terms.begin(), out.terms.end(), [](const ZetaProductTerm& x, const ZetaProductTerm& y) {
    return std::tie(x.a, x.b) < std::tie(y.a, y.b);
  });
  out.numeric = combo_eval(combo, prec);
  return out;
}

OnoderaReport onodera_consistency(int m, const Precision& prec) {
  if (m < 2 || m % 2 != 0) raise(Errc::Internal, "consistency check needs even m >= 2");
  OnoderaReport rep;
  rep.m = m;
  ZetaCombo closed = bracket_closed_form(m);
  ZetaCombo series = bracket_series_form(m);
  rep.terms_match = closed == series;
  rep.closed_value = combo_eval(closed, prec);
  rep.series_value = combo_eval(series, prec);
  Real denom = std::max(abs(rep.closed_value), Real(1));
  rep.rel_diff = abs(rep.closed_value - rep.series_value) / denom;
  return rep;
}

IdentityReport identity_a2(int n) {
  if (n < 1) raise(Errc::Internal, "identity index must be positive");
  IdentityReport rep;
  rep.lhs = Rat(factorial(2 * n)) / Rat(factorial(4 * n + 1)) * zeta_neg_int(6 * n + 1);
  Rat rhs = 0;
  for (int k = 0; k <= 2 * n; ++k)
    rhs += zeta_neg_int(k + 2 * n) * zeta_neg_int(4 * n - k) /
           (Rat(factorial(k)) * Rat(factorial(2 * n - k)));
  rep.rhs = rhs;
  rep.holds = rep.lhs == rep.rhs;
  return rep;
}

namespace {

IdentityReport convolution_identity(const std::vector<Rat>& f_coeffs, int n, int deg_f, int lhs_zeta,
                                    const Rat& twist, int lhs_denom, int coeff_order, int rhs_span) {
  // Shared shape of the B2/G2 identities:
  //   zeta(-lhs_zeta)/lhs_denom * (1+twist) * [f^{2n} log f][x^{coeff_order}]
  //     = sum_k [f^{2n}][x^k] zeta(-k-2n) zeta(k-rhs_span)
  IdentityReport rep;
  std::vector<Rat> f_pow = series_pow(f_coeffs, 2 * n, coeff_order);
  LogSeries lf = log_series(f_coeffs, coeff_order);
  auto [plain, log_sym] = log_series_coefficient(f_pow, lf, coeff_order);
  if (log_sym != 0)
    raise(Errc::Internal, "log-symbol part must vanish by the degree bound");
  rep.lhs = zeta_neg_int(lhs_zeta) / Rat(lhs_denom) * (Rat(1) + twist) * plain;
  Rat rhs = 0;
  for (int k = 0; k <= 2 * n * deg_f; ++k)
    rhs += f_pow[static_cast<std::size_t>(k)] * zeta_neg_int(k + 2 * n) * zeta_neg_int(rhs_span - k);
  rep.rhs = rhs;
  rep.holds = rep.lhs == rep.rhs;
  return rep;
}

}  // namespace

IdentityReport identity_b2(int n) {
  if (n < 1) raise(Errc::Internal, "identity index must be positive");
  // f_B = (1+x)(1+2x)
  std::vector<Rat> f{Rat(1), Rat(3), Rat(2)};
  Int denom = Int(1) << static_cast<unsigned long>(1 + 4 * n);
  return convolution_identity(f, n, 2, 8 * n + 1, make_rat(Int(1), denom), 3, 1 + 6 * n, 6 * n);
}

IdentityReport identity_g2(int n) {
  if (n < 1) raise(Errc::Internal, "identity index must be positive");
  // f_G = (1+x)(1+2x)(1+3x)(2+3x)
  std::vector<Rat> f = series_mul(series_mul({Rat(1), Rat(1)}, {Rat(1), Rat(2)}, 4),
                                  series_mul({Rat(1), Rat(3)}, {Rat(2), Rat(3)}, 4), 4);
  Int denom;
  mpz_ui_pow_ui(denom.get_mpz_t(), 3, static_cast<unsigned long>(1 + 6 * n));
  return convolution_identity(f, n, 4, 12 * n + 1, make_rat(Int(1), denom), 5, 1 + 10 * n, 10 * n);
}

}  // namespace witten
