#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "witten/polyseries.hpp"
#include "witten/triangulation.hpp"

#include <random>

using namespace witten;

namespace {

Simplex unit_interval() {
  Simplex s;
  s.vertices.resize(1, 2);
  s.vertices(0, 0) = 0;
  s.vertices(0, 1) = 1;
  return s;
}

Simplex triangle(std::initializer_list<std::pair<Rat, Rat>> pts) {
  Simplex s;
  s.vertices.resize(2, 3);
  Index k = 0;
  for (auto& [x, y] : pts) {
    s.vertices(0, k) = x;
    s.vertices(1, k) = y;
    ++k;
  }
  return s;
}

// Dense univariate coefficient convolution, the independent route for the
// frozen integral values below.
std::vector<Rat> conv(const std::vector<Rat>& a, const std::vector<Rat>& b) {
  std::vector<Rat> out(a.size() + b.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

}  // namespace

TEST_CASE("bernoulli polynomials") {
  CHECK(bernoulli_polynomial(0) == mp_const(1, Rat(1)));

  MultiPoly b1 = bernoulli_polynomial(1);
  CHECK(b1.terms.at({1}) == 1);
  CHECK(b1.terms.at({0}) == make_rat(-1, 2));

  MultiPoly b2 = bernoulli_polynomial(2);
  CHECK(b2.terms.at({2}) == 1);
  CHECK(b2.terms.at({1}) == -1);
  CHECK(b2.terms.at({0}) == make_rat(1, 6));
}

TEST_CASE("bernoulli difference and reflection identities") {
  MultiPoly x = mp_var(1, 0);
  MultiPoly x_plus_1 = x + mp_const(1, Rat(1));
  MultiPoly one_minus_x = mp_const(1, Rat(1)) - x;
  for (int k = 1; k <= 20; ++k) {
    MultiPoly diff = bernoulli_at(k, x_plus_1) - bernoulli_at(k, x);
    MultiPoly expected = mp_zero(1);
    expected.terms[{k - 1}] = k;
    CHECK(diff == expected);

    MultiPoly reflected = bernoulli_at(k, one_minus_x);
    MultiPoly signed_bk = (k % 2 == 0 ? Rat(1) : Rat(-1)) * bernoulli_polynomial(k);
    CHECK(reflected == signed_bk);
  }
}

TEST_CASE("zeta at negative integers") {
  CHECK(zeta_neg_int(0) == make_rat(-1, 2));
  CHECK(zeta_neg_int(1) == make_rat(-1, 12));
  CHECK(zeta_neg_int(2) == 0);
  CHECK(zeta_neg_int(3) == make_rat(1, 120));
  CHECK(zeta_neg_int(7) == make_rat(1, 240));
  for (int k = 2; k <= 20; k += 2) CHECK(zeta_neg_int(k) == 0);
}

TEST_CASE("hurwitz at negative integers") {
  // -B_1(a) = 1/2 - a
  for (long p = 1; p <= 4; ++p) {
    Rat a = make_rat(p, 5);
    CHECK(hurwitz_neg_int(0, a) == make_rat(1, 2) - a);
  }
  CHECK(hurwitz_neg_int(1, make_rat(1, 2)) == make_rat(1, 24));
  CHECK(hurwitz_neg_int(1, Rat(1)) == make_rat(-1, 12));
}

TEST_CASE("monomial simplex integrals") {
  CHECK(monomial_simplex_integral({0}) == 1);
  CHECK(monomial_simplex_integral({0, 0}) == make_rat(1, 2));
  CHECK(monomial_simplex_integral({2}) == make_rat(1, 3));
  CHECK(monomial_simplex_integral({1, 1}) == make_rat(1, 24));
}

TEST_CASE("integrate_over_simplex") {
  MultiPoly one2 = mp_const(2, Rat(1));
  Simplex std2 = triangle({{Rat(0), Rat(0)}, {Rat(1), Rat(0)}, {Rat(0), Rat(1)}});
  CHECK(integrate_over_simplex(one2, std2) == make_rat(1, 2));

  Simplex half = triangle({{Rat(0), Rat(0)}, {Rat(1), Rat(0)}, {Rat(0), make_rat(1, 2)}});
  CHECK(integrate_over_simplex(one2, half) == make_rat(1, 4));

  Simplex degenerate = triangle({{Rat(0), Rat(0)}, {Rat(1), Rat(1)}, {Rat(2), Rat(2)}});
  CHECK_THROWS_AS(integrate_over_simplex(one2, degenerate), Error);
}

TEST_CASE("the one-dimensional Bernoulli integral") {
  // Independent oracle: expand (x^2 - x + 1/6)^3 by dense convolution and
  // integrate termwise with 1/(k+1).
  std::vector<Rat> b2{make_rat(1, 6), Rat(-1), Rat(1)};
  std::vector<Rat> cube = conv(conv(b2, b2), b2);
  Rat expected = 0;
  for (std::size_t k = 0; k < cube.size(); ++k)
    expected += cube[k] / Rat(static_cast<long>(k + 1));
  expected /= -8;
  CHECK(expected == make_rat(-1, 30240));

  MultiPoly poly = bernoulli_polynomial(2);
  MultiPoly integrand = make_rat(-1, 8) * (poly * poly * poly);
  CHECK(integrate_over_simplex(integrand, unit_interval()) == expected);
}

TEST_CASE("bernoulli polynomials integrate to zero") {
  for (int k = 1; k <= 20; ++k)
    CHECK(integrate_over_simplex(bernoulli_polynomial(k), unit_interval()) == 0);
}

TEST_CASE("integral is additive over barycentric subdivision") {
  std::mt19937_64 rng(5150);
  std::uniform_int_distribution<long> c(-4, 4);
  Simplex tri = triangle({{Rat(0), Rat(0)}, {make_rat(3, 2), Rat(0)}, {make_rat(1, 3), Rat(1)}});
  for (int trial = 0; trial < 5; ++trial) {
    MultiPoly p = mp_zero(2);
    for (int ex = 0; ex <= 2; ++ex)
      for (int ey = 0; ey + ex <= 2; ++ey) p.terms[{ex, ey}] = Rat(c(rng));
    Rat whole = integrate_over_simplex(p, tri);
    Rat parts = 0;
    for (const auto& sub : barycentric_subdivide(tri)) parts += integrate_over_simplex(p, sub);
    CHECK(whole == parts);
  }
}

TEST_CASE("log series basics") {
  MultiPoly f1 = mp_const(1, Rat(1)) + mp_var(1, 0);  // 1 + x
  LogSeries l1 = log_series(f1, 3);
  CHECK(l1.log_base == 1);
  CHECK(l1.plain == std::vector<Rat>{Rat(0), Rat(1), make_rat(-1, 2), make_rat(1, 3)});
  CHECK(l1.log_part == std::vector<Rat>{Rat(1), Rat(0), Rat(0), Rat(0)});

  MultiPoly f2 = mp_const(1, Rat(2)) + Rat(3) * mp_var(1, 0);  // 2 + 3x
  LogSeries l2 = log_series(f2, 1);
  CHECK(l2.log_base == 2);
  CHECK(l2.plain == std::vector<Rat>{Rat(0), make_rat(3, 2)});
  CHECK(l2.log_part == std::vector<Rat>{Rat(1), Rat(0)});

  CHECK_THROWS_AS(log_series(mp_var(1, 0), 2), Error);                            // f(0) = 0
  CHECK_THROWS_AS(log_series(mp_const(1, Rat(-1)) + mp_var(1, 0), 2), Error);     // f(0) < 0
}

TEST_CASE("exp inverts log up to truncation") {
  const int order = 12;
  std::vector<std::vector<Rat>> cases{
      {Rat(1), Rat(1)},                              // 1 + x
      {Rat(1), Rat(3), Rat(2)},                      // (1+x)(1+2x)
      {Rat(2), Rat(3)},                              // 2 + 3x
      {Rat(3), Rat(0), make_rat(1, 2), Rat(5)},      // sparse cubic
  };
  for (const auto& f : cases) {
    LogSeries l = log_series(f, order);
    std::vector<Rat> back = series_exp(l.plain, order);
    for (int k = 0; k <= order; ++k) {
      Rat fk = k < static_cast<int>(f.size()) ? f[static_cast<std::size_t>(k)] : Rat(0);
      CHECK(back[static_cast<std::size_t>(k)] == fk / f[0]);
    }
  }
}

TEST_CASE("coefficient extraction with the log factor") {
  // [f_B(x)^2 log f_B(x)][x^5] for f_B = (1+x)(1+2x): zero log-symbol part,
  // plain part cross-checked by direct series multiplication.
  std::vector<Rat> fb{Rat(1), Rat(3), Rat(2)};
  std::vector<Rat> fb2 = conv(fb, fb);
  LogSeries lf = log_series(fb, 5);
  auto [plain, logc] = log_series_coefficient(fb2, lf, 5);
  CHECK(logc == 0);

  Rat direct = 0;
  for (std::size_t k = 0; k < fb2.size() && k <= 5; ++k)
    direct += fb2[k] * lf.plain[5 - k];
  CHECK(plain == direct);
  CHECK(plain != 0);
}
