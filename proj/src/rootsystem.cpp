#include "witten/rootsystem.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>

namespace witten {

namespace {

void check_type(Family family, int rank) {
  bool ok = false;
  switch (family) {
    case Family::A: ok = rank >= 1; break;
    case Family::B: ok = rank >= 2; break;
    case Family::C: ok = rank >= 2; break;
    case Family::D: ok = rank >= 3; break;
    case Family::E: ok = rank >= 6 && rank <= 8; break;
    case Family::F: ok = rank == 4; break;
    case Family::G: ok = rank == 2; break;
  }
  if (!ok)
    raise(Errc::InvalidType, std::string(1, static_cast<char>(family)) + std::to_string(rank) +
                                 " is not an irreducible type");
}

Eigen::MatrixXi cartan_matrix(Family family, int n) {
  Eigen::MatrixXi c = Eigen::MatrixXi::Zero(n, n);
  for (int i = 0; i < n; ++i) c(i, i) = 2;
  auto bond = [&](int i, int j) { c(i, j) = c(j, i) = -1; };
  switch (family) {
    case Family::A:
      for (int i = 0; i + 1 < n; ++i) bond(i, i + 1);
      break;
    case Family::B:
      for (int i = 0; i + 1 < n; ++i) bond(i, i + 1);
      c(n - 2, n - 1) = -2;  // alpha_n short
      break;
    case Family::C:
      for (int i = 0; i + 1 < n; ++i) bond(i, i + 1);
      c(n - 1, n - 2) = -2;  // alpha_n long
      break;
    case Family::D:
      for (int i = 0; i + 2 < n; ++i) bond(i, i + 1);
      bond(n - 3, n - 1);
      break;
    case Family::E:
      bond(0, 2);
      bond(1, 3);
      for (int i = 2; i + 1 < n; ++i) bond(i, i + 1);
      break;
    case Family::F:
      bond(0, 1);
      bond(2, 3);
      c(1, 2) = -2;  // alpha_3, alpha_4 short
      c(2, 1) = -1;
      break;
    case Family::G:
      c(0, 1) = -1;  // alpha_1 short
      c(1, 0) = -3;
      break;
  }
  return c;
}

std::vector<Rat> compute_symmetrizer(const Eigen::MatrixXi& cartan) {
  // d_i C(j,i) = d_j C(i,j) symmetrizes (alpha_i, alpha_j) = d_j C(i,j);
  // propagate along bonds, then scale so the long roots sit at d = 1.
  const int n = static_cast<int>(cartan.rows());
  std::vector<Rat> d(static_cast<std::size_t>(n), Rat(0));
  d[0] = 1;
  std::vector<int> queue{0};
  while (!queue.empty()) {
    int i = queue.back();
    queue.pop_back();
    for (int j = 0; j < n; ++j) {
      if (i == j || cartan(i, j) == 0 || d[static_cast<std::size_t>(j)] != 0) continue;
      d[static_cast<std::size_t>(j)] =
          d[static_cast<std::size_t>(i)] * Rat(cartan(j, i)) / Rat(cartan(i, j));
      queue.push_back(j);
    }
  }
  Rat dmax = d[0];
  for (const Rat& v : d) dmax = std::max(dmax, v);
  for (Rat& v : d) v /= dmax;
  return d;
}

int height(const Eigen::VectorXi& v) { return v.sum(); }

bool coeff_less(const Eigen::VectorXi& a, const Eigen::VectorXi& b) {
  if (height(a) != height(b)) return height(a) < height(b);
  for (int i = 0; i < a.size(); ++i)
    if (a(i) != b(i)) return a(i) > b(i);  // alpha_1 before alpha_2 within a height
  return false;
}

Eigen::MatrixXi generate_positive_roots(const Eigen::MatrixXi& cartan) {
  const int n = static_cast<int>(cartan.rows());
  std::set<std::vector<int>> seen;
  std::vector<Eigen::VectorXi> roots;
  auto key = [](const Eigen::VectorXi& v) { return std::vector<int>(v.data(), v.data() + v.size()); };
  for (int i = 0; i < n; ++i) {
    Eigen::VectorXi e = Eigen::VectorXi::Zero(n);
    e(i) = 1;
    roots.push_back(e);
    seen.insert(key(e));
  }
  // Root string closure: beta + alpha_i is a root iff p - (beta, alpha_i^vee) > 0
  // with p the depth of the string below beta.
  for (std::size_t idx = 0; idx < roots.size(); ++idx) {
    Eigen::VectorXi beta = roots[idx];
    for (int i = 0; i < n; ++i) {
      int pairing = 0;
      for (int j = 0; j < n; ++j) pairing += beta(j) * cartan(j, i);
      int p = 0;
      Eigen::VectorXi down = beta;
      for (;;) {
        down(i) -= 1;
        if (down(i) < 0 || !seen.count(key(down))) break;
        ++p;
      }
      if (p - pairing > 0) {
        Eigen::VectorXi up = beta;
        up(i) += 1;
        if (seen.insert(key(up)).second) roots.push_back(up);
      }
    }
  }
  std::sort(roots.begin(), roots.end(), coeff_less);
  Eigen::MatrixXi out(n, static_cast<int>(roots.size()));
  for (int c = 0; c < static_cast<int>(roots.size()); ++c) out.col(c) = roots[static_cast<std::size_t>(c)];
  return out;
}

long expected_positive_count(Family family, int n) {
  switch (family) {
    case Family::A: return static_cast<long>(n) * (n + 1) / 2;
    case Family::B:
    case Family::C: return static_cast<long>(n) * n;
    case Family::D: return static_cast<long>(n) * (n - 1);
    case Family::G: return 6;
    case Family::F: return 24;
    case Family::E: return n == 6 ? 36 : (n == 7 ? 63 : 120);
  }
  return -1;
}

}  // namespace

RootSystem build(Family family, int rank) {
  check_type(family, rank);
  RootSystem rs;
  rs.family = family;
  rs.rank = rank;
  rs.cartan = cartan_matrix(family, rank);
  rs.symmetrizer = compute_symmetrizer(rs.cartan);
  rs.positive_roots = generate_positive_roots(rs.cartan);
  if (rs.positive_count() != expected_positive_count(family, rank))
    raise(Errc::Internal, "positive root count mismatch for " + rs.name());
  return rs;
}

RootSystem build(const std::string& type_name) {
  if (type_name.size() < 2) raise(Errc::InvalidType, "'" + type_name + "'");
  char f = static_cast<char>(std::toupper(static_cast<unsigned char>(type_name[0])));
  if (f < 'A' || f > 'G') raise(Errc::InvalidType, "'" + type_name + "'");
  int rank = 0;
  for (std::size_t i = 1; i < type_name.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(type_name[i])))
      raise(Errc::InvalidType, "'" + type_name + "'");
    rank = rank * 10 + (type_name[i] - '0');
  }
  if (rank <= 0 || rank > 30) raise(Errc::InvalidType, "'" + type_name + "'");
  return build(static_cast<Family>(f), rank);
}

Rat root_half_norm(const RootSystem& rs, const Eigen::VectorXi& coeffs) {
  // (alpha, alpha)/2 with (alpha_i, alpha_j) = d_j C(i,j).
  Rat acc = 0;
  const int n = rs.rank;
  for (int i = 0; i < n; ++i) {
    if (coeffs(i) == 0) continue;
    for (int j = 0; j < n; ++j) {
      if (coeffs(j) == 0 || rs.cartan(i, j) == 0) continue;
      acc += Rat(coeffs(i)) * Rat(coeffs(j)) * rs.symmetrizer[static_cast<std::size_t>(j)] *
             Rat(rs.cartan(i, j));
    }
  }
  return acc / 2;
}

IntMatrix pairing_matrix(const RootSystem& rs, const std::vector<Rat>& symmetrizer) {
  const int n = rs.rank;
  const int r = rs.positive_count();
  IntMatrix m(n, r);
  for (int c = 0; c < r; ++c) {
    Eigen::VectorXi root = rs.positive_roots.col(c);
    // (lambda_i, alpha^vee) = c_i d_i / d_alpha.
    Rat d_alpha = 0;
    for (int i = 0; i < n; ++i) {
      if (root(i) == 0) continue;
      for (int j = 0; j < n; ++j) {
        if (root(j) == 0 || rs.cartan(i, j) == 0) continue;
        d_alpha += Rat(root(i)) * Rat(root(j)) * symmetrizer[static_cast<std::size_t>(j)] *
                   Rat(rs.cartan(i, j));
      }
    }
    d_alpha /= 2;
    for (int i = 0; i < n; ++i) {
      Rat value = Rat(root(i)) * symmetrizer[static_cast<std::size_t>(i)] / d_alpha;
      if (!is_integral(value)) raise(Errc::Internal, "non-integral pairing in " + rs.name());
      m(i, c) = numerator(value);
    }
  }
  return m;
}

IntMatrix pairing_matrix(const RootSystem& rs) { return pairing_matrix(rs, rs.symmetrizer); }

Eigen::VectorXi highest_root(const RootSystem& rs) {
  return rs.positive_roots.col(rs.positive_count() - 1);
}

std::set<long> highest_root_coeffs(const RootSystem& rs) {
  Eigen::VectorXi h = highest_root(rs);
  std::set<long> out;
  for (int i = 0; i < h.size(); ++i) out.insert(h(i));
  return out;
}

std::vector<int> weyl_degrees(const RootSystem& rs) {
  const int n = rs.rank;
  std::vector<int> d;
  switch (rs.family) {
    case Family::A:
      for (int k = 2; k <= n + 1; ++k) d.push_back(k);
      break;
    case Family::B:
    case Family::C:
      for (int k = 1; k <= n; ++k) d.push_back(2 * k);
      break;
    case Family::D:
      for (int k = 1; k <= n - 1; ++k) d.push_back(2 * k);
      d.push_back(n);
      break;
    case Family::G: d = {2, 6}; break;
    case Family::F: d = {2, 6, 8, 12}; break;
    case Family::E:
      if (n == 6) d = {2, 5, 6, 8, 9, 12};
      else if (n == 7) d = {2, 6, 8, 10, 12, 14, 18};
      else d = {2, 8, 12, 14, 18, 20, 24, 30};
      break;
  }
  return d;
}

Int weyl_order(const RootSystem& rs) {
  Int w = 1;
  for (int d : weyl_degrees(rs)) w *= d;
  return w;
}

Int k_phi(const RootSystem& rs) {
  // (delta, alpha^vee) = sum_i (lambda_i, alpha^vee): column sums of M.
  IntMatrix m = pairing_matrix(rs);
  Int k = 1;
  for (Index c = 0; c < m.cols(); ++c) {
    Int s = 0;
    for (Index i = 0; i < m.rows(); ++i) s += m(i, c);
    k *= s;
  }
  return k;
}

std::vector<WeylElement> weyl_enumerate(const RootSystem& rs, long max_order) {
  Int order = weyl_order(rs);
  if (order > max_order)
    raise(Errc::BudgetExceeded, "|W(" + rs.name() + ")| = " + to_string(order) + " exceeds budget " +
                                    std::to_string(max_order));
  const int n = rs.rank;
  // Simple reflection on coefficient vectors: row i of S_i is
  // delta_{ij} - C(j,i).
  std::vector<Eigen::MatrixXi> gens;
  for (int i = 0; i < n; ++i) {
    Eigen::MatrixXi s = Eigen::MatrixXi::Identity(n, n);
    for (int j = 0; j < n; ++j) s(i, j) -= rs.cartan(j, i);
    gens.push_back(s);
  }

  auto key = [](const Eigen::MatrixXi& m) {
    return std::vector<int>(m.data(), m.data() + m.size());
  };
  std::map<std::vector<int>, int> seen;
  std::vector<Eigen::MatrixXi> elements{Eigen::MatrixXi::Identity(n, n)};
  seen.emplace(key(elements[0]), 0);
  for (std::size_t idx = 0; idx < elements.size(); ++idx) {
    Eigen::MatrixXi w = elements[idx];
    for (const auto& g : gens) {
      Eigen::MatrixXi next = g * w;
      if (seen.emplace(key(next), static_cast<int>(elements.size())).second)
        elements.push_back(std::move(next));
    }
  }
  if (Int(static_cast<long>(elements.size())) != order)
    raise(Errc::Internal, "Weyl closure size mismatch for " + rs.name());

  std::vector<WeylElement> out;
  out.reserve(elements.size());
  for (auto& m : elements) {
    int len = 0;
    for (int c = 0; c < rs.positive_count(); ++c) {
      Eigen::VectorXi image = m * rs.positive_roots.col(c);
      bool nonpos = true;
      for (int i = 0; i < n; ++i)
        if (image(i) > 0) {
          nonpos = false;
          break;
        }
      if (nonpos) ++len;
    }
    out.push_back({std::move(m), len});
  }
  return out;
}

std::vector<Int> poincare_from_degrees(const std::vector<int>& degrees) {
  std::vector<Int> acc{Int(1)};
  for (int d : degrees) {
    // multiply by 1 + q + ... + q^{d-1}
    std::vector<Int> next(acc.size() + static_cast<std::size_t>(d) - 1, Int(0));
    for (std::size_t i = 0; i < acc.size(); ++i)
      for (int k = 0; k < d; ++k) next[i + static_cast<std::size_t>(k)] += acc[i];
    acc = std::move(next);
  }
  return acc;
}

std::vector<Int> poincare_poly(const RootSystem& rs) {
  constexpr long kEnumerationCap = 20000;
  if (weyl_order(rs) <= kEnumerationCap) {
    std::vector<Int> coeff(static_cast<std::size_t>(rs.positive_count() + 1), Int(0));
    for (const auto& w : weyl_enumerate(rs, kEnumerationCap)) coeff[static_cast<std::size_t>(w.length)] += 1;
    return coeff;
  }
  return poincare_from_degrees(weyl_degrees(rs));
}

RootSystem dual(const RootSystem& rs) {
  Family f = rs.family;
  if (rs.family == Family::B) f = Family::C;
  else if (rs.family == Family::C) f = Family::B;
  return build(f, rs.rank);
}

}  // namespace witten
