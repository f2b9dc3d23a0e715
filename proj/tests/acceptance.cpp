// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Each criterion pins its tolerances and runtime limits in code.

#include "witten/witten_core.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <vector>

using namespace witten;

namespace {

int g_failures = 0;

void criterion(int number, const std::string& label, const std::function<bool(std::string&)>& body) {
  std::string detail;
  bool ok = false;
  auto t0 = std::chrono::steady_clock::now();
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  auto t1 = std::chrono::steady_clock::now();
  double secs = std::chrono::duration<double>(t1 - t0).count();
  std::cout << (ok ? "[PASS] " : "[FAIL] ") << "criterion " << number << ": " << label << " ("
            << secs << " s)";
  if (!detail.empty()) std::cout << "  -- " << detail;
  std::cout << std::endl;
  if (!ok) ++g_failures;
}

std::vector<long> as_longs(const InvariantSet& s) {
  std::vector<long> out;
  for (const Rat& v : s.values) out.push_back(to_i64(numerator(v)));
  return out;
}

std::multiset<std::vector<long>> column_multiset(const IntMatrix& m) {
  std::multiset<std::vector<long>> out;
  for (Index c = 0; c < m.cols(); ++c) {
    std::vector<long> col;
    for (Index i = 0; i < m.rows(); ++i) col.push_back(m(i, c).get_si());
    out.insert(col);
  }
  return out;
}

Real pi_pow(int k) {
  Real p = 1;
  for (int i = 0; i < k; ++i) p *= pi_real();
  return p;
}

double seconds_since(const std::chrono::steady_clock::time_point& t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main() {
  // 1. Reference values: the two worked level sets and the expected
  //    pairing matrices, each under a second.
  criterion(1, "dset(G2) = {1,2,3}, dset(B3) = {1,2}, reference matrices, < 1 s each", [](std::string& d) {
    auto t0 = std::chrono::steady_clock::now();
    InvariantSet g2 = dset(build("G2"));
    double tg = seconds_since(t0);
    auto t1 = std::chrono::steady_clock::now();
    InvariantSet b3 = dset(build("B3"));
    double tb = seconds_since(t1);
    bool sets_ok = as_longs(g2) == std::vector<long>{1, 2, 3} && g2.budget_spent == 15 &&
                   as_longs(b3) == std::vector<long>{1, 2} && b3.budget_spent == 84;

    std::multiset<std::vector<long>> mg2{{1, 0}, {0, 1}, {1, 3}, {1, 1}, {2, 3}, {1, 2}};
    std::multiset<std::vector<long>> mb3{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {0, 1, 1},
                                         {0, 2, 1}, {1, 1, 1}, {2, 2, 1}, {1, 2, 1}};
    bool matrices_ok = column_multiset(pairing_matrix(build("G2"))) == mg2 &&
                       column_multiset(pairing_matrix(build("B3"))) == mb3;
    bool timing_ok = tg < 1.0 && tb < 1.0;
    if (!timing_ok) d = "slow: G2 " + std::to_string(tg) + " s, B3 " + std::to_string(tb) + " s";
    return sets_ok && matrices_ok && timing_ok;
  });

  // 2. Structural propositions E = H u {1} and D = E(dual) across the small
  //    ranks plus E6; E7/E8 refuse on budget.
  criterion(2, "E(phi) = H(phi) u {1} and D(phi) = E(dual) through E6; E7/E8 refuse", [](std::string& d) {
    const std::vector<std::string> types{"A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4",
                                         "D4", "F4", "G2", "A5", "A6", "B5", "D5", "E6"};
    for (const auto& name : types) {
      auto t0 = std::chrono::steady_clock::now();
      RootSystem rs = build(name);
      if (!verify_eh(rs).holds) {
        d = "E = H u {1} fails for " + name;
        return false;
      }
      if (!verify_de(rs).holds) {
        d = "D = E(dual) fails for " + name;
        return false;
      }
      double t = seconds_since(t0);
      if (name == "E6" && t > 600) {
        d = "E6 took " + std::to_string(t) + " s";
        return false;
      }
    }
    for (const auto& name : {"E7", "E8"}) {
      try {
        dset(build(name));
        d = std::string(name) + " did not refuse";
        return false;
      } catch (const Error& e) {
        if (e.code() != Errc::BudgetExceeded) {
          d = std::string(name) + " wrong error";
          return false;
        }
      }
    }
    return true;
  });

  // 3. Poincare factorization by full enumeration at rank <= 4.
  criterion(3, "enumerated length generating function = degree product, |W(F4)| = 1152", [](std::string& d) {
    for (const auto& name : {"A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "F4", "G2"}) {
      RootSystem rs = build(name);
      std::vector<Int> coeff(static_cast<std::size_t>(rs.positive_count() + 1), Int(0));
      auto elements = weyl_enumerate(rs, 20000);
      for (const auto& w : elements) coeff[static_cast<std::size_t>(w.length)] += 1;
      if (coeff != poincare_from_degrees(weyl_degrees(rs))) {
        d = std::string("factorization fails for ") + name;
        return false;
      }
      if (std::string(name) == "F4" && elements.size() != 1152) {
        d = "|W(F4)| = " + std::to_string(elements.size());
        return false;
      }
    }
    return true;
  });

  // 4. Exact even values against the independent summation oracle.
  criterion(4, "zeta_A2(2) = (4/2835) pi^6 etc. vs the multisum oracle, < 2 min", [](std::string& d) {
    auto t0 = std::chrono::steady_clock::now();
    Precision p30(30);

    EvenValueReport a2 = exact_even_value(build("A2"), 2);
    if (a2.i_value != make_rat(-1, 30240) || a2.zeta_coeff != make_rat(4, 2835) || a2.pi_power != 6) {
      d = "A2 s=2 exact value wrong";
      return false;
    }

    struct Case {
      const char* name;
      int s;
      const char* tol;
    };
    for (const Case& c : {Case{"A2", 4, "1e-8"}, Case{"B2", 2, "1e-6"}}) {
      RootSystem rs = build(c.name);
      EvenValueReport rep = exact_even_value(rs, c.s);
      RealBound oracle = numeric_multisum_to_tol(rs, Real(c.s), Real(c.tol) / 4, p30);
      Real exact = to_real(rep.zeta_coeff) * pi_pow(static_cast<int>(rep.pi_power));
      if (abs(oracle.value - exact) / exact > Real(c.tol)) {
        d = std::string(c.name) + " mismatch vs oracle";
        return false;
      }
    }

    try {
      EvenValueReport a3 = exact_even_value(build("A3"), 2);
      RealBound oracle = numeric_multisum_to_tol(build("A3"), Real(2), Real("1e-6") / 4, p30);
      Real exact = to_real(a3.zeta_coeff) * pi_pow(static_cast<int>(a3.pi_power));
      if (abs(oracle.value - exact) / exact > Real("1e-6")) {
        d = "A3 mismatch vs oracle";
        return false;
      }
    } catch (const Error& e) {
      if (e.code() == Errc::BudgetExceeded) {
        d = "A3 skipped: triangulation budget";
      } else {
        throw;
      }
    }

    double t = seconds_since(t0);
    if (t > 120) {
      d = "took " + std::to_string(t) + " s";
      return false;
    }
    return true;
  });

  // 5. The three vanishing-equivalent identities, exact.
  criterion(5, "identities a2 (n<=6), b2 (n<=4), g2 (n<=2) hold exactly, < 30 s", [](std::string& d) {
    auto t0 = std::chrono::steady_clock::now();
    for (int n = 1; n <= 6; ++n)
      if (!identity_a2(n).holds) {
        d = "a2 fails at n=" + std::to_string(n);
        return false;
      }
    for (int n = 1; n <= 4; ++n)
      if (!identity_b2(n).holds) {
        d = "b2 fails at n=" + std::to_string(n);
        return false;
      }
    for (int n = 1; n <= 2; ++n)
      if (!identity_g2(n).holds) {
        d = "g2 fails at n=" + std::to_string(n);
        return false;
      }
    double t = seconds_since(t0);
    if (t > 30) {
      d = "took " + std::to_string(t) + " s";
      return false;
    }
    return true;
  });

  // 6. Apostol relation at 30 target digits.
  criterion(6, "apostol residual < 1e-25 on the 16-point grid", [](std::string& d) {
    Precision p30(30);
    const Real tol = pow(Real(10), -25);
    for (double s : {2.0, 2.5, 3.0, 4.0}) {
      for (int ai = 0; ai < 4; ++ai) {
        Real a = ai == 0 ? Real(1) / 4 : ai == 1 ? Real(1) / 3 : ai == 2 ? Real(1) / 2 : Real("0.7");
        Real res = apostol_residual(Real(s), a, p30);
        if (res > tol) {
          d = "residual " + res.str(3) + " at s=" + std::to_string(s) + ", a index " + std::to_string(ai);
          return false;
        }
      }
    }
    return true;
  });

  // 7. Integral representation numerically, plus the quadrature anchor.
  criterion(7, "integral representation: A2 (s=2,3) < 1e-6, B2 (s=2) < 1e-4, quad anchor 1e-8", [](std::string& d) {
    IntRepReport a2s2 = integral_rep_check(build("A2"), Real(2), 24, Precision(25), Real("1e-6"));
    if (a2s2.residual > Real("1e-6")) {
      d = "A2 s=2 residual " + a2s2.residual.str(3);
      return false;
    }
    Real exact = -Real(1) / 30240;
    if (abs(a2s2.i_quad - exact) / abs(exact) > Real("1e-8")) {
      d = "A2 quadrature drifts from -1/30240";
      return false;
    }
    IntRepReport a2s3 = integral_rep_check(build("A2"), Real(3), 24, Precision(25), Real("1e-6"));
    if (a2s3.residual > Real("1e-6")) {
      d = "A2 s=3 residual " + a2s3.residual.str(3);
      return false;
    }
    IntRepReport b2 = integral_rep_check(build("B2"), Real(2), 16, Precision(20), Real("1e-4"));
    if (b2.residual > Real("1e-4")) {
      d = "B2 residual " + b2.residual.str(3);
      return false;
    }
    return true;
  });

  // 8. Onodera bracket: term-by-term equality and 30-digit numerics.
  criterion(8, "A2 bracket routes agree term-by-term and to 1e-25 for m = 2, 4", [](std::string& d) {
    Precision p30(30);
    for (int m : {2, 4}) {
      OnoderaReport rep = onodera_consistency(m, p30);
      if (!rep.terms_match) {
        d = "term multisets differ at m=" + std::to_string(m);
        return false;
      }
      if (rep.rel_diff > pow(Real(10), -25)) {
        d = "numeric difference " + rep.rel_diff.str(3);
        return false;
      }
    }
    return true;
  });

  // 9. Triangulation invariants for the B2 and G2 form systems.
  criterion(9, "B2 bands: 4 regions of area 1/4, denominators | 2; G2: volume 1, denominators | 6", [](std::string& d) {
    IntegrandSpec b2 = integrand_spec(build("B2"));
    InvariantSet b2d = dset_of_matrix(b2.forms, 1u << 20, 0, "B2-forms");
    std::vector<Int> expected;
    for (const Rat& v : b2d.values) expected.push_back(numerator(v));
    BandTriangulation tri = band_triangulate(b2.forms, expected);
    Rat total = 0;
    std::map<std::vector<int>, Rat> regions;
    for (const auto& c : tri.cells) {
      Rat v = volume(c.simplex);
      total += v;
      regions[std::vector<int>(c.bands.data(), c.bands.data() + c.bands.size())] += v;
    }
    if (total != 1) {
      d = "B2 tiling volume " + to_string(total);
      return false;
    }
    if (regions.size() != 4) {
      d = "B2 has " + std::to_string(regions.size()) + " band regions";
      return false;
    }
    for (const auto& [sig, vol] : regions)
      if (vol != make_rat(1, 4)) {
        d = "B2 region area " + to_string(vol);
        return false;
      }
    for (const Int& q : tri.vertex_denominators)
      if (Int(2) % q != 0) {
        d = "B2 vertex denominator " + to_string(q);
        return false;
      }

    IntegrandSpec g2 = integrand_spec(build("G2"));
    InvariantSet g2d = dset_of_matrix(g2.forms, 1u << 20, 0, "G2-forms");
    expected.clear();
    for (const Rat& v : g2d.values) expected.push_back(numerator(v));
    BandTriangulation tg = band_triangulate(g2.forms, expected);
    Rat vol4 = 0;
    for (const auto& c : tg.cells) vol4 += volume(c.simplex);
    if (vol4 != 1) {
      d = "G2 tiling volume " + to_string(vol4);
      return false;
    }
    for (const Int& q : tg.vertex_denominators)
      if (Int(6) % q != 0) {
        d = "G2 vertex denominator " + to_string(q);
        return false;
      }
    return true;
  });

  std::cout << (g_failures == 0 ? "all criteria passed" : std::to_string(g_failures) + " criteria failed")
            << std::endl;
  return g_failures == 0 ? 0 : 1;
}
