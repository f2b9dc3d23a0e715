#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "witten/rootsystem.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <vector>

using namespace witten;

namespace {

std::multiset<std::vector<long>> column_multiset(const IntMatrix& m) {
  std::multiset<std::vector<long>> out;
  for (Index c = 0; c < m.cols(); ++c) {
    std::vector<long> col;
    for (Index i = 0; i < m.rows(); ++i) col.push_back(m(i, c).get_si());
    out.insert(col);
  }
  return out;
}

std::multiset<std::vector<long>> columns(std::initializer_list<std::vector<long>> cols) {
  return {cols.begin(), cols.end()};
}

const std::vector<std::string> kAllTypes{"A1", "A2", "A3", "A4", "A5", "A6", "A7", "A8",
                                         "B2", "B3", "B4", "B5", "B6", "B7", "B8",
                                         "C2", "C3", "C4", "C5", "C6", "C7", "C8",
                                         "D3", "D4", "D5", "D6", "D7", "D8",
                                         "E6", "E7", "E8", "F4", "G2"};

}  // namespace

TEST_CASE("A2 construction") {
  RootSystem rs = build("A2");
  CHECK(rs.cartan(0, 0) == 2);
  CHECK(rs.cartan(0, 1) == -1);
  CHECK(rs.cartan(1, 0) == -1);
  CHECK(rs.positive_count() == 3);
  Eigen::MatrixXi roots = rs.positive_roots;
  CHECK(roots.col(0) == Eigen::Vector2i(1, 0));
  CHECK(roots.col(1) == Eigen::Vector2i(0, 1));
  CHECK(roots.col(2) == Eigen::Vector2i(1, 1));
}

TEST_CASE("invalid types are rejected") {
  CHECK_THROWS_AS(build("E5"), Error);
  CHECK_THROWS_AS(build("F3"), Error);
  CHECK_THROWS_AS(build("G3"), Error);
  CHECK_THROWS_AS(build("B1"), Error);
  CHECK_THROWS_AS(build("H4"), Error);
  CHECK_THROWS_AS(build("A0"), Error);
}

TEST_CASE("positive root counts and root-string closure sanity") {
  for (const auto& name : kAllTypes) {
    RootSystem rs = build(name);
    // closure produced only nonnegative vectors and the advertised count
    for (int c = 0; c < rs.positive_count(); ++c)
      for (int i = 0; i < rs.rank; ++i) CHECK(rs.positive_roots(i, c) >= 0);
    // heights ascend
    for (int c = 0; c + 1 < rs.positive_count(); ++c)
      CHECK(rs.positive_roots.col(c).sum() <= rs.positive_roots.col(c + 1).sum());
  }
}

TEST_CASE("highest roots match the classification") {
  auto coeffs = [](const RootSystem& rs) {
    Eigen::VectorXi h = highest_root(rs);
    return std::vector<int>(h.data(), h.data() + h.size());
  };
  CHECK(coeffs(build("A4")) == std::vector<int>{1, 1, 1, 1});
  CHECK(coeffs(build("B3")) == std::vector<int>{1, 2, 2});
  CHECK(coeffs(build("C4")) == std::vector<int>{2, 2, 2, 1});
  CHECK(coeffs(build("D5")) == std::vector<int>{1, 2, 2, 1, 1});
  CHECK(coeffs(build("G2")) == std::vector<int>{3, 2});
  CHECK(coeffs(build("F4")) == std::vector<int>{2, 3, 4, 2});
  CHECK(coeffs(build("E6")) == std::vector<int>{1, 2, 2, 3, 2, 1});
  CHECK(coeffs(build("E7")) == std::vector<int>{2, 2, 3, 4, 3, 2, 1});
  CHECK(coeffs(build("E8")) == std::vector<int>{2, 3, 4, 6, 5, 4, 3, 2});

  CHECK(highest_root_coeffs(build("A4")) == std::set<long>{1});
  CHECK(highest_root_coeffs(build("G2")) == std::set<long>{2, 3});
  CHECK(highest_root_coeffs(build("E8")) == std::set<long>{2, 3, 4, 5, 6});
}

TEST_CASE("pairing matrices for the small systems") {
  CHECK(column_multiset(pairing_matrix(build("A2"))) ==
        columns({{1, 0}, {0, 1}, {1, 1}}));
  CHECK(column_multiset(pairing_matrix(build("G2"))) ==
        columns({{1, 0}, {0, 1}, {1, 3}, {1, 1}, {2, 3}, {1, 2}}));
  CHECK(column_multiset(pairing_matrix(build("B3"))) ==
        columns({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {0, 1, 1}, {0, 2, 1},
                 {1, 1, 1}, {2, 2, 1}, {1, 2, 1}}));
}

TEST_CASE("identity block and symmetrizer invariance") {
  for (const auto& name : kAllTypes) {
    RootSystem rs = build(name);
    IntMatrix m = pairing_matrix(rs);
    for (int i = 0; i < rs.rank; ++i)
      for (int j = 0; j < rs.rank; ++j) CHECK(m(i, j) == (i == j ? 1 : 0));

    // pairings are normalization-invariant: rescale the symmetrizer
    std::vector<Rat> scaled = rs.symmetrizer;
    for (Rat& d : scaled) d *= make_rat(7, 3);
    CHECK(pairing_matrix(rs, scaled) == m);
  }
}

TEST_CASE("weyl degrees and positive-root count") {
  CHECK(weyl_degrees(build("A2")) == std::vector<int>{2, 3});
  CHECK(weyl_degrees(build("D5")) == std::vector<int>{2, 4, 6, 8, 5});
  CHECK(weyl_degrees(build("F4")) == std::vector<int>{2, 6, 8, 12});
  CHECK(weyl_degrees(build("E7")) == std::vector<int>{2, 6, 8, 10, 12, 14, 18});

  for (const auto& name : kAllTypes) {
    RootSystem rs = build(name);
    int sum = 0;
    for (int d : weyl_degrees(rs)) sum += d - 1;
    CHECK(sum == rs.positive_count());
  }
}

TEST_CASE("K values from the multiple zeta prefactors") {
  CHECK(k_phi(build("A2")) == 2);
  CHECK(k_phi(build("B2")) == 6);
  CHECK(k_phi(build("A3")) == 12);
  CHECK(k_phi(build("A1")) == 1);
}

TEST_CASE("weyl enumeration") {
  auto a1 = weyl_enumerate(build("A1"), 100);
  CHECK(a1.size() == 2);
  std::multiset<int> l1;
  for (const auto& w : a1) l1.insert(w.length);
  CHECK(l1 == std::multiset<int>{0, 1});

  auto a2 = weyl_enumerate(build("A2"), 100);
  CHECK(a2.size() == 6);
  std::multiset<int> l2;
  for (const auto& w : a2) l2.insert(w.length);
  CHECK(l2 == std::multiset<int>{0, 1, 1, 2, 2, 3});

  CHECK(weyl_enumerate(build("B2"), 100).size() == 8);
  CHECK(weyl_enumerate(build("G2"), 100).size() == 12);
  CHECK_THROWS_AS(weyl_enumerate(build("E6"), 1000), Error);
}

TEST_CASE("poincare polynomial") {
  std::vector<Int> a2 = poincare_poly(build("A2"));
  CHECK(a2 == std::vector<Int>{Int(1), Int(2), Int(2), Int(1)});
  std::vector<Int> a1 = poincare_poly(build("A1"));
  CHECK(a1 == std::vector<Int>{Int(1), Int(1)});

  for (const auto& name : {"A3", "A4", "B3", "B4", "C4", "D4", "F4", "G2"}) {
    RootSystem rs = build(name);
    // enumerated generating function equals the degree factorization
    std::vector<Int> coeff(static_cast<std::size_t>(rs.positive_count() + 1), Int(0));
    for (const auto& w : weyl_enumerate(rs, 20000)) coeff[static_cast<std::size_t>(w.length)] += 1;
    CHECK(coeff == poincare_from_degrees(weyl_degrees(rs)));

    Int at_one = 0;
    for (const Int& c : coeff) at_one += c;
    CHECK(at_one == weyl_order(rs));
  }
}

TEST_CASE("duality") {
  CHECK(dual(build("B3")).name() == "C3");
  CHECK(dual(build("C4")).name() == "B4");
  CHECK(dual(build("A2")).name() == "A2");
  CHECK(dual(build("F4")).name() == "F4");
  CHECK(dual(build("G2")).name() == "G2");

  // Cartan of the dual is the transpose up to simultaneous relabeling; for
  // B/C with Bourbaki labels the matrix is exactly the transpose.
  RootSystem b3 = build("B3");
  RootSystem c3 = dual(b3);
  CHECK(c3.cartan == b3.cartan.transpose());
}
