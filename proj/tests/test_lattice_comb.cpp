#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "witten/cache.hpp"
#include "witten/lattice_comb.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>

using namespace witten;

namespace {

std::vector<long> as_longs(const InvariantSet& s) {
  std::vector<long> out;
  for (const Rat& v : s.values) out.push_back(to_i64(numerator(v)));
  return out;
}

std::vector<Rat> rats(std::initializer_list<std::pair<long, long>> vals) {
  std::vector<Rat> out;
  for (auto [p, q] : vals) out.push_back(make_rat(p, q));
  return out;
}

}  // namespace

TEST_CASE("dset examples from the worked matrices") {
  InvariantSet g2 = dset(build("G2"));
  CHECK(as_longs(g2) == std::vector<long>{1, 2, 3});
  CHECK(g2.budget_spent == 15);

  InvariantSet b3 = dset(build("B3"));
  CHECK(as_longs(b3) == std::vector<long>{1, 2});
  CHECK(b3.budget_spent == 84);

  InvariantSet a2 = dset(build("A2"));
  CHECK(as_longs(a2) == std::vector<long>{1});
  CHECK(a2.budget_spent == 3);
}

TEST_CASE("eset examples") {
  CHECK(as_longs(eset(build("A1"))) == std::vector<long>{1});
  for (const auto& name : {"A2", "A3", "A4", "A5", "A6"})
    CHECK(as_longs(eset(build(name))) == std::vector<long>{1});
  CHECK(as_longs(eset(build("G2"))) == std::vector<long>{1, 2, 3});
  CHECK(as_longs(eset(build("C3"))) == std::vector<long>{1, 2});
}

TEST_CASE("tset") {
  CHECK(tset(build("A5")).values == rats({{1, 1}}));
  CHECK(tset(build("B2")).values == rats({{1, 2}, {1, 1}}));
  CHECK(tset(build("G2")).values == rats({{1, 3}, {1, 2}, {2, 3}, {1, 1}}));
  CHECK(tset(build("F4")).values == rats({{1, 4}, {1, 3}, {1, 2}, {2, 3}, {3, 4}, {1, 1}}));
}

TEST_CASE("membership invariants") {
  for (const auto& name : {"A3", "B3", "C3", "D4", "G2", "F4"}) {
    RootSystem rs = build(name);
    InvariantSet d = dset(rs);
    InvariantSet e = eset(rs);
    CHECK(std::find(d.values.begin(), d.values.end(), Rat(1)) != d.values.end());
    CHECK(std::find(e.values.begin(), e.values.end(), Rat(1)) != e.values.end());

    InvariantSet h = hset(rs);
    // every highest-root coefficient occurs as an exponent, and nothing larger
    for (const Rat& q : h.values)
      CHECK(std::find(e.values.begin(), e.values.end(), q) != e.values.end());
    CHECK(e.values.back() <= h.values.back());
  }
}

TEST_CASE("structural propositions on small ranks") {
  for (const auto& name : {"A1", "A2", "A3", "B2", "B3", "C3", "D4", "G2", "F4"}) {
    VerifyReport eh = verify_eh(build(name));
    CHECK(eh.holds);
    VerifyReport de = verify_de(build(name));
    CHECK(de.holds);
  }
  // spot examples with known sets
  VerifyReport f4 = verify_eh(build("F4"));
  CHECK(as_longs(f4.lhs) == std::vector<long>{1, 2, 3, 4});
  VerifyReport b3 = verify_de(build("B3"));
  CHECK(as_longs(b3.lhs) == std::vector<long>{1, 2});
}

TEST_CASE("the block transpose lemma") {
  // D of (I_n | C) equals D of (I_{r-n} | C^T), and column signs do not
  // matter (the integrand form matrix uses -C^T).
  for (const auto& name : {"A3", "B3", "G2", "B4"}) {
    RootSystem rs = build(name);
    IntMatrix m = pairing_matrix(rs);
    const int n = rs.rank;
    const int r = rs.positive_count();
    const int d = r - n;
    IntMatrix b(d, r);
    b.setConstant(Int(0));
    for (int i = 0; i < d; ++i) b(i, i) = 1;
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < n; ++j) b(i, d + j) = m(j, n + i);
    IntMatrix b_neg = b;
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < n; ++j) b_neg(i, d + j) = -b(i, d + j);

    auto dm = dset(rs);
    auto db = dset_of_matrix(b, kDefaultBudget, 0, name);
    auto dbn = dset_of_matrix(b_neg, kDefaultBudget, 0, name);
    CHECK(dm.values == db.values);
    CHECK(dm.values == dbn.values);
  }
}

TEST_CASE("budget refusal") {
  CHECK_THROWS_AS(dset(build("E7")), Error);
  CHECK_THROWS_AS(eset(build("E8")), Error);
  try {
    dset(build("E7"));
  } catch (const Error& e) {
    CHECK(e.code() == Errc::BudgetExceeded);
  }
}

TEST_CASE("results are schedule independent") {
  for (int threads : {1, 2, 5}) {
    InvariantSet d = dset(build("F4"), kDefaultBudget, threads);
    CHECK(as_longs(d) == std::vector<long>{1, 2, 3, 4});
    InvariantSet e = eset(build("B4"), kDefaultBudget, threads);
    CHECK(as_longs(e) == std::vector<long>{1, 2});
  }
}

TEST_CASE("cache round trip and corruption handling") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "witten-cache-test";
  fs::remove_all(dir);

  RootSystem g2 = build("G2");
  std::uint64_t h = matrix_content_hash(pairing_matrix(g2));
  CHECK_FALSE(cache_load(dir, SetKind::D, "G2", h).has_value());

  InvariantSet d = dset(g2);
  cache_store(dir, d, h);
  auto back = cache_load(dir, SetKind::D, "G2", h);
  REQUIRE(back.has_value());
  CHECK(back->values == d.values);
  CHECK(back->budget_spent == d.budget_spent);
  CHECK(back->phi == "G2");

  // wrong hash: miss
  CHECK_FALSE(cache_load(dir, SetKind::D, "G2", h + 1).has_value());

  // corrupt the record: load must fail cleanly
  for (const auto& entry : fs::directory_iterator(dir)) {
    std::ofstream out(entry.path(), std::ios::trunc);
    out << "witten-cache 1\nkind dset\nphi G2\nvalues not-a-number\n";
  }
  CHECK_FALSE(cache_load(dir, SetKind::D, "G2", h).has_value());
  fs::remove_all(dir);
}
