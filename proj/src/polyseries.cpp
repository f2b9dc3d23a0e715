#include "witten/polyseries.hpp"

#include "witten/exact_linalg.hpp"

#include <algorithm>
#include <mutex>

namespace witten {

MultiPoly mp_zero(int nvars) { return MultiPoly{nvars, {}}; }

MultiPoly mp_const(int nvars, const Rat& c) {
  MultiPoly p{nvars, {}};
  if (c != 0) p.terms[std::vector<int>(static_cast<std::size_t>(nvars), 0)] = c;
  return p;
}

MultiPoly mp_var(int nvars, int i) {
  MultiPoly p{nvars, {}};
  std::vector<int> e(static_cast<std::size_t>(nvars), 0);
  e[static_cast<std::size_t>(i)] = 1;
  p.terms[e] = 1;
  return p;
}

MultiPoly mp_affine(int nvars, const Rat& c0, const RatVector& c) {
  MultiPoly p = mp_const(nvars, c0);
  for (int i = 0; i < nvars; ++i) {
    if (c(i) == 0) continue;
    std::vector<int> e(static_cast<std::size_t>(nvars), 0);
    e[static_cast<std::size_t>(i)] = 1;
    p.terms[e] = c(i);
  }
  return p;
}

namespace {

void add_term(MultiPoly& p, const std::vector<int>& e, const Rat& c) {
  auto it = p.terms.find(e);
  if (it == p.terms.end()) {
    if (c != 0) p.terms.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second == 0) p.terms.erase(it);
}

}  // namespace

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly out = a;
  for (const auto& [e, c] : b.terms) add_term(out, e, c);
  return out;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly out = a;
  for (const auto& [e, c] : b.terms) add_term(out, e, -c);
  return out;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly out{a.nvars, {}};
  std::vector<int> e(static_cast<std::size_t>(a.nvars));
  for (const auto& [ea, ca] : a.terms)
    for (const auto& [eb, cb] : b.terms) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      add_term(out, e, ca * cb);
    }
  return out;
}

MultiPoly operator*(const Rat& c, const MultiPoly& a) {
  MultiPoly out{a.nvars, {}};
  if (c == 0) return out;
  for (const auto& [e, k] : a.terms) out.terms.emplace(e, c * k);
  return out;
}

MultiPoly mp_pow(const MultiPoly& a, int e) {
  MultiPoly acc = mp_const(a.nvars, 1);
  for (int k = 0; k < e; ++k) acc = acc * a;
  return acc;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  return a.nvars == b.nvars && a.terms == b.terms;
}

Rat mp_eval(const MultiPoly& p, const RatVector& x) {
  Rat acc = 0;
  for (const auto& [e, c] : p.terms) {
    Rat term = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      for (int k = 0; k < e[i]; ++k) term *= x(static_cast<Index>(i));
    acc += term;
  }
  return acc;
}

int mp_degree(const MultiPoly& p) {
  int deg = 0;
  for (const auto& [e, c] : p.terms) {
    int d = 0;
    for (int v : e) d += v;
    deg = std::max(deg, d);
  }
  return deg;
}

MultiPoly mp_substitute(const MultiPoly& p, const std::vector<MultiPoly>& subs) {
  if (subs.size() != static_cast<std::size_t>(p.nvars))
    raise(Errc::Internal, "substitution arity mismatch");
  const int out_vars = subs.empty() ? 0 : subs[0].nvars;
  // Memoized powers of each substituted variable.
  std::vector<std::vector<MultiPoly>> powers(subs.size());
  for (std::size_t i = 0; i < subs.size(); ++i) powers[i].push_back(mp_const(out_vars, 1));
  MultiPoly out = mp_zero(out_vars);
  for (const auto& [e, c] : p.terms) {
    MultiPoly term = mp_const(out_vars, c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      auto& pw = powers[i];
      while (static_cast<int>(pw.size()) <= e[i]) pw.push_back(pw.back() * subs[i]);
      if (e[i] > 0) term = term * pw[static_cast<std::size_t>(e[i])];
    }
    out = out + term;
  }
  return out;
}

Int factorial(int n) {
  static std::mutex mutex;
  static std::vector<Int> cache{Int(1)};
  std::lock_guard<std::mutex> lock(mutex);
  while (static_cast<int>(cache.size()) <= n) cache.push_back(cache.back() * static_cast<long>(cache.size()));
  return cache[static_cast<std::size_t>(n)];
}

Int binomial(int n, int k) {
  if (k < 0 || k > n) return Int(0);
  return factorial(n) / (factorial(k) * factorial(n - k));
}

Rat bernoulli_number(int k) {
  static std::mutex mutex;
  static std::vector<Rat> cache{Rat(1)};
  std::lock_guard<std::mutex> lock(mutex);
  while (static_cast<int>(cache.size()) <= k) {
    const int m = static_cast<int>(cache.size());
    Rat acc = 0;
    for (int j = 0; j < m; ++j) acc += Rat(binomial(m + 1, j)) * cache[static_cast<std::size_t>(j)];
    cache.push_back(-acc / Rat(m + 1));
  }
  return cache[static_cast<std::size_t>(k)];
}

MultiPoly bernoulli_polynomial(int k) {
  MultiPoly p = mp_zero(1);
  for (int j = 0; j <= k; ++j) {
    Rat c = Rat(binomial(k, j)) * bernoulli_number(j);
    if (c == 0) continue;
    p.terms[{k - j}] = c;
  }
  return p;
}

MultiPoly bernoulli_at(int k, const MultiPoly& arg) {
  // Horner on the univariate coefficients of B_k.
  MultiPoly b = bernoulli_polynomial(k);
  std::vector<Rat> coeff(static_cast<std::size_t>(k + 1), Rat(0));
  for (const auto& [e, c] : b.terms) coeff[static_cast<std::size_t>(e[0])] = c;
  MultiPoly acc = mp_const(arg.nvars, coeff[static_cast<std::size_t>(k)]);
  for (int d = k - 1; d >= 0; --d) acc = acc * arg + mp_const(arg.nvars, coeff[static_cast<std::size_t>(d)]);
  return acc;
}

Rat zeta_neg_int(int k) {
  MultiPoly b = bernoulli_polynomial(k + 1);
  RatVector one(1);
  one(0) = 1;
  return -mp_eval(b, one) / Rat(k + 1);
}

Rat hurwitz_neg_int(int n, const Rat& a) {
  MultiPoly b = bernoulli_polynomial(n + 1);
  RatVector x(1);
  x(0) = a;
  return -mp_eval(b, x) / Rat(n + 1);
}

Rat monomial_simplex_integral(const std::vector<int>& exponents) {
  int total = 0;
  Int num = 1;
  for (int a : exponents) {
    num *= factorial(a);
    total += a;
  }
  return make_rat(num, factorial(static_cast<int>(exponents.size()) + total));
}

Rat integrate_over_simplex(const MultiPoly& p, const Simplex& s) {
  const Index d = s.dim();
  if (p.nvars != static_cast<int>(d)) raise(Errc::Internal, "polynomial/simplex dimension mismatch");
  RatMatrix edges(d, d);
  for (Index k = 1; k <= d; ++k) edges.col(k - 1) = s.vertices.col(k) - s.vertices.col(0);
  Rat det = determinant(edges);
  if (det == 0) raise(Errc::DegenerateSimplex, "integration domain has zero volume");
  if (det < 0) det = -det;

  // Pull back through x = v0 + E u, then integrate monomials in u.
  std::vector<MultiPoly> subs;
  subs.reserve(static_cast<std::size_t>(d));
  for (Index i = 0; i < d; ++i)
    subs.push_back(mp_affine(static_cast<int>(d), s.vertices(i, 0), edges.row(i).transpose()));
  MultiPoly q = mp_substitute(p, subs);
  Rat acc = 0;
  for (const auto& [e, c] : q.terms) acc += c * monomial_simplex_integral(e);
  return det * acc;
}

std::vector<Rat> series_mul(const std::vector<Rat>& a, const std::vector<Rat>& b, int order) {
  std::vector<Rat> out(static_cast<std::size_t>(order + 1), Rat(0));
  for (std::size_t i = 0; i < a.size() && i <= static_cast<std::size_t>(order); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size() && i + j <= static_cast<std::size_t>(order); ++j)
      out[i + j] += a[i] * b[j];
  }
  return out;
}

std::vector<Rat> series_pow(const std::vector<Rat>& a, int e, int order) {
  std::vector<Rat> acc(static_cast<std::size_t>(order + 1), Rat(0));
  acc[0] = 1;
  for (int k = 0; k < e; ++k) acc = series_mul(acc, a, order);
  return acc;
}

std::vector<Rat> series_exp(const std::vector<Rat>& a, int order) {
  if (!a.empty() && a[0] != 0) raise(Errc::Internal, "series_exp needs zero constant term");
  std::vector<Rat> out(static_cast<std::size_t>(order + 1), Rat(0));
  out[0] = 1;
  std::vector<Rat> power(out);
  Rat fact = 1;
  for (int j = 1; j <= order; ++j) {
    power = series_mul(power, a, order);
    fact *= j;
    bool all_zero = true;
    for (std::size_t k = 0; k < power.size(); ++k) {
      if (power[k] == 0) continue;
      out[k] += power[k] / fact;
      all_zero = false;
    }
    if (all_zero) break;
  }
  return out;
}

std::vector<Rat> to_series(const MultiPoly& univariate, int order) {
  if (univariate.nvars != 1) raise(Errc::Internal, "to_series expects a univariate polynomial");
  std::vector<Rat> out(static_cast<std::size_t>(order + 1), Rat(0));
  for (const auto& [e, c] : univariate.terms)
    if (e[0] <= order) out[static_cast<std::size_t>(e[0])] = c;
  return out;
}

LogSeries log_series(const std::vector<Rat>& f, int order) {
  if (f.empty() || f[0] <= 0) raise(Errc::NonPositiveConstantTerm, "log series needs f(0) > 0");
  const Rat f0 = f[0];
  // g = f/f0 - 1 has zero constant term; log f = log f0 + sum (-1)^{j+1} g^j / j.
  std::vector<Rat> g(static_cast<std::size_t>(order + 1), Rat(0));
  for (std::size_t i = 1; i < f.size() && i <= static_cast<std::size_t>(order); ++i) g[i] = f[i] / f0;

  LogSeries out;
  out.order = order;
  out.plain.assign(static_cast<std::size_t>(order + 1), Rat(0));
  out.log_part.assign(static_cast<std::size_t>(order + 1), Rat(0));
  out.log_part[0] = 1;
  out.log_base = f0;

  std::vector<Rat> power(static_cast<std::size_t>(order + 1), Rat(0));
  power[0] = 1;
  for (int j = 1; j <= order; ++j) {
    power = series_mul(power, g, order);
    Rat sign = (j % 2 == 1) ? Rat(1) : Rat(-1);
    bool all_zero = true;
    for (std::size_t k = 0; k < power.size(); ++k) {
      if (power[k] == 0) continue;
      out.plain[k] += sign * power[k] / Rat(j);
      all_zero = false;
    }
    if (all_zero) break;
  }
  return out;
}

LogSeries log_series(const MultiPoly& f, int order) {
  if (f.nvars != 1) raise(Errc::Internal, "log_series expects a univariate polynomial");
  return log_series(to_series(f, std::max(order, mp_degree(f))), order);
}

std::pair<Rat, Rat> log_series_coefficient(const std::vector<Rat>& factor, const LogSeries& ls, int k) {
  if (k > ls.order) raise(Errc::Internal, "coefficient index beyond truncation order");
  Rat plain = 0, logc = 0;
  for (std::size_t i = 0; i < factor.size() && i <= static_cast<std::size_t>(k); ++i) {
    if (factor[i] == 0) continue;
    plain += factor[i] * ls.plain[static_cast<std::size_t>(k) - i];
    logc += factor[i] * ls.log_part[static_cast<std::size_t>(k) - i];
  }
  return {plain, logc};
}

}  // namespace witten
