// Command-line front end: every computation in the library, with plain-text
// or machine-readable JSON output. Exact numbers are serialized as strings
// ("p/q" in lowest terms); floats are decimal strings with an explicit
// error-bound field. Exit codes: 0 success (for verify-* and identity, only
// when the checked statement holds), 1 computation error, 2 usage error.

#include "witten/cache.hpp"
#include "witten/witten_core.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <optional>

using json = nlohmann::ordered_json;
using namespace witten;

namespace {

struct GlobalOpts {
  bool json_out = false;
  int prec = 30;
  std::string cache_dir;
  int threads = 0;
  std::uint64_t budget = kDefaultBudget;
};

std::string real_str(const Real& v, int digits) { return v.str(digits); }

json rat_json(const Rat& v) { return to_string(v); }

json values_json(const InvariantSet& s) {
  json arr = json::array();
  for (const Rat& v : s.values) {
    if (is_integral(v) && fits_i64(numerator(v)))
      arr.push_back(to_i64(numerator(v)));
    else
      arr.push_back(to_string(v));
  }
  return arr;
}

json int_matrix_json(const IntMatrix& m) {
  json rows = json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

std::optional<std::filesystem::path> cache_path(const GlobalOpts& g) {
  if (!g.cache_dir.empty()) return std::filesystem::path(g.cache_dir);
  if (const char* env = std::getenv("WITTEN_CACHE_DIR"); env && *env)
    return std::filesystem::path(env);
  return std::nullopt;
}

InvariantSet cached_set(const GlobalOpts& g, const RootSystem& rs, SetKind kind, bool* hit) {
  auto dir = cache_path(g);
  std::uint64_t h = matrix_content_hash(pairing_matrix(rs));
  if (dir) {
    if (auto loaded = cache_load(*dir, kind, rs.name(), h)) {
      if (hit) *hit = true;
      return *loaded;
    }
  }
  InvariantSet fresh;
  switch (kind) {
    case SetKind::D: fresh = dset(rs, g.budget, g.threads); break;
    case SetKind::E: fresh = eset(rs, g.budget, g.threads); break;
    case SetKind::H: fresh = hset(rs); break;
    case SetKind::T: fresh = tset(rs); break;
  }
  if (dir) cache_store(*dir, fresh, h);
  if (hit) *hit = false;
  return fresh;
}

void print_text_set(const InvariantSet& s) {
  std::cout << set_kind_name(s.kind) << "(" << s.phi << ") = {";
  for (std::size_t i = 0; i < s.values.size(); ++i)
    std::cout << (i ? ", " : " ") << to_string(s.values[i]);
  std::cout << " }  [" << s.budget_spent << " subsets]\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"witten: exact and numerical invariants of root-system zeta functions"};
  app.require_subcommand(1);
  app.fallthrough(true);

  GlobalOpts g;
  app.add_flag("--json", g.json_out, "machine-readable output");
  app.add_option("--prec", g.prec, "target digits for numeric results")->check(CLI::Range(5, 80));
  app.add_option("--cache", g.cache_dir, "result cache directory");
  app.add_option("--threads", g.threads, "worker threads (0 = hardware)");

  std::string command;
  json inputs = json::object();
  std::function<json()> runner;
  bool holds_gate = true;  // verify-* / identity flip this on failure

  // --- roots ---
  std::string type_arg;
  auto* roots_cmd = app.add_subcommand("roots", "root system data");
  roots_cmd->add_option("type", type_arg, "root system (e.g. A2, G2, B3)")->required();
  roots_cmd->callback([&] {
    command = "roots";
    inputs["type"] = type_arg;
    runner = [&]() {
      RootSystem rs = build(type_arg);
      json p;
      p["type"] = rs.name();
      p["rank"] = rs.rank;
      p["positive_roots"] = rs.positive_count();
      p["degrees"] = weyl_degrees(rs);
      p["weyl_order"] = to_string(weyl_order(rs));
      Eigen::VectorXi h = highest_root(rs);
      p["highest_root"] = std::vector<int>(h.data(), h.data() + h.size());
      json hs = json::array();
      for (long v : highest_root_coeffs(rs)) hs.push_back(v);
      p["hset"] = hs;
      p["K"] = to_string(k_phi(rs));
      json cart = json::array();
      for (int i = 0; i < rs.rank; ++i) {
        json row = json::array();
        for (int j = 0; j < rs.rank; ++j) row.push_back(rs.cartan(i, j));
        cart.push_back(row);
      }
      p["cartan"] = cart;
      p["pairing_matrix"] = int_matrix_json(pairing_matrix(rs));
      if (!g.json_out) {
        std::cout << rs.name() << ": rank " << rs.rank << ", " << rs.positive_count()
                  << " positive roots, |W| = " << to_string(weyl_order(rs))
                  << ", K = " << to_string(k_phi(rs)) << "\n";
      }
      return p;
    };
  });

  // --- set commands ---
  for (auto kind : {SetKind::D, SetKind::E, SetKind::H, SetKind::T}) {
    auto* cmd = app.add_subcommand(set_kind_name(kind), std::string("compute ") + set_kind_name(kind));
    cmd->add_option("type", type_arg, "root system")->required();
    cmd->add_option("--budget", g.budget, "max subsets to enumerate");
    cmd->callback([&, kind] {
      command = set_kind_name(kind);
      inputs["type"] = type_arg;
      inputs["budget"] = std::to_string(g.budget);
      runner = [&, kind]() {
        RootSystem rs = build(type_arg);
        bool hit = false;
        InvariantSet s = cached_set(g, rs, kind, &hit);
        if (!g.json_out) print_text_set(s);
        json p;
        p["values"] = values_json(s);
        p["budget_spent"] = s.budget_spent;
        p["cached"] = hit;
        return p;
      };
    });
  }

  // --- verify commands ---
  for (bool de : {false, true}) {
    const char* name = de ? "verify-de" : "verify-eh";
    auto* cmd = app.add_subcommand(name, de ? "check D(phi) = E(dual phi)" : "check E(phi) = H(phi) u {1}");
    cmd->add_option("type", type_arg, "root system")->required();
    cmd->add_option("--budget", g.budget, "max subsets to enumerate");
    cmd->callback([&, de, name] {
      command = name;
      inputs["type"] = type_arg;
      runner = [&, de]() {
        RootSystem rs = build(type_arg);
        VerifyReport rep = de ? verify_de(rs, g.budget, g.threads) : verify_eh(rs, g.budget, g.threads);
        holds_gate = rep.holds;
        if (!g.json_out) {
          std::cout << (rep.holds ? "holds" : "FAILS") << " for " << rs.name() << "\n";
          print_text_set(rep.lhs);
          print_text_set(rep.rhs);
        }
        json p;
        p["holds"] = rep.holds;
        p[de ? "dset" : "eset"] = values_json(rep.lhs);
        p[de ? "eset_dual" : "hset_plus_one"] = values_json(rep.rhs);
        return p;
      };
    });
  }

  // --- even-value ---
  int s_even = 2;
  auto* ev_cmd = app.add_subcommand("even-value", "exact zeta_phi(2m)/pi^{2mr}");
  ev_cmd->add_option("type", type_arg, "root system")->required();
  ev_cmd->add_option("--s", s_even, "positive even integer")->required();
  ev_cmd->callback([&] {
    command = "even-value";
    inputs["type"] = type_arg;
    inputs["s"] = std::to_string(s_even);
    runner = [&]() {
      RootSystem rs = build(type_arg);
      EvenValueReport rep = exact_even_value(rs, s_even, kDefaultBudget, false, g.threads);
      if (!g.json_out) {
        std::cout << "zeta_" << rep.phi << "(" << rep.s << ") = " << to_string(rep.zeta_coeff)
                  << " * pi^" << rep.pi_power << "   (I = " << to_string(rep.i_value) << ", "
                  << rep.cells << " cells)\n";
      }
      json p;
      p["i_value"] = rat_json(rep.i_value);
      p["zeta_coeff"] = rat_json(rep.zeta_coeff);
      p["xi_coeff"] = rat_json(rep.xi_coeff);
      p["pi_power"] = rep.pi_power;
      p["cells"] = rep.cells;
      p["normalization"] = "zeta_phi(s) = zeta_coeff * pi^pi_power; xi = zeta / K^s";
      return p;
    };
  });

  // --- multisum ---
  double s_real = 2.0;
  long cutoff = 200;
  auto* ms_cmd = app.add_subcommand("multisum", "numeric zeta_phi(s) by direct summation");
  ms_cmd->add_option("type", type_arg, "root system")->required();
  ms_cmd->add_option("--s", s_real, "real s > 1")->required();
  ms_cmd->add_option("--cutoff", cutoff, "per-coordinate cutoff");
  ms_cmd->callback([&] {
    command = "multisum";
    inputs["type"] = type_arg;
    inputs["s"] = std::to_string(s_real);
    inputs["cutoff"] = std::to_string(cutoff);
    runner = [&]() {
      RootSystem rs = build(type_arg);
      RealBound v = numeric_multisum(rs, Real(s_real), cutoff, Precision(g.prec));
      if (!g.json_out)
        std::cout << "zeta_" << rs.name() << "(" << s_real << ") = " << real_str(v.value, g.prec)
                  << " +- " << real_str(v.bound, 3) << "\n";
      json p;
      p["value"] = real_str(v.value, g.prec);
      p["bound"] = real_str(v.bound, 5);
      return p;
    };
  });

  // --- identity ---
  std::string which_identity;
  int n_idx = 1;
  auto* id_cmd = app.add_subcommand("identity", "exact rank-2 vanishing identities");
  id_cmd->add_option("which", which_identity, "a2, b2 or g2")
      ->required()
      ->check(CLI::IsMember({"a2", "b2", "g2"}));
  id_cmd->add_option("--n", n_idx, "identity index n >= 1")->required()->check(CLI::PositiveNumber);
  id_cmd->callback([&] {
    command = "identity";
    inputs["which"] = which_identity;
    inputs["n"] = std::to_string(n_idx);
    runner = [&]() {
      IdentityReport rep;
      if (which_identity == "a2") rep = identity_a2(n_idx);
      else if (which_identity == "b2") rep = identity_b2(n_idx);
      else rep = identity_g2(n_idx);
      holds_gate = rep.holds;
      if (!g.json_out)
        std::cout << "identity " << which_identity << " n=" << n_idx << ": "
                  << (rep.holds ? "holds" : "FAILS") << "  lhs = " << to_string(rep.lhs)
                  << ", rhs = " << to_string(rep.rhs) << "\n";
      json p;
      p["holds"] = rep.holds;
      p["lhs"] = rat_json(rep.lhs);
      p["rhs"] = rat_json(rep.rhs);
      return p;
    };
  });

  // --- pole-coeff-a2 ---
  int m_idx = 1;
  auto* pc_cmd = app.add_subcommand("pole-coeff-a2", "A2 residue bracket as zeta products");
  pc_cmd->add_option("--m", m_idx, "m >= 1")->required()->check(CLI::PositiveNumber);
  pc_cmd->callback([&] {
    command = "pole-coeff-a2";
    inputs["m"] = std::to_string(m_idx);
    runner = [&]() {
      A2PoleCoeff pc = a2_pole_coefficient(m_idx, Precision(g.prec));
      if (!g.json_out) {
        std::cout << "bracket(m=" << m_idx << ") =";
        for (const auto& t : pc.terms) {
          std::cout << " + " << to_string(t.coeff) << "*zeta(" << t.a << ")";
          if (t.b != 0) std::cout << "*zeta(" << t.b << ")";
        }
        std::cout << " = " << real_str(pc.numeric, g.prec) << "\n";
      }
      json p;
      json terms = json::array();
      for (const auto& t : pc.terms) {
        json jt;
        jt["coeff"] = rat_json(t.coeff);
        jt["zeta_args"] = t.b == 0 ? json::array({t.a}) : json::array({t.a, t.b});
        terms.push_back(jt);
      }
      p["terms"] = terms;
      p["raw_product_terms"] = pc.raw_product_terms;
      p["numeric"] = real_str(pc.numeric, g.prec);
      return p;
    };
  });

  // --- onodera ---
  auto* on_cmd = app.add_subcommand("onodera", "cross-check the A2 bracket against the series route");
  on_cmd->add_option("--m", m_idx, "even m >= 2")->required();
  on_cmd->callback([&] {
    command = "onodera";
    inputs["m"] = std::to_string(m_idx);
    runner = [&]() {
      OnoderaReport rep = onodera_consistency(m_idx, Precision(g.prec));
      if (!g.json_out)
        std::cout << "m=" << rep.m << ": terms " << (rep.terms_match ? "match" : "DIFFER")
                  << ", relative difference " << real_str(rep.rel_diff, 3) << "\n";
      json p;
      p["terms_match"] = rep.terms_match;
      p["closed_value"] = real_str(rep.closed_value, g.prec);
      p["series_value"] = real_str(rep.series_value, g.prec);
      p["rel_diff"] = real_str(rep.rel_diff, 5);
      return p;
    };
  });

  // --- int-rep-check ---
  double tol = 1e-6;
  int nodes = 24;
  auto* ir_cmd = app.add_subcommand("int-rep-check", "numeric check of the integral representation");
  ir_cmd->add_option("type", type_arg, "A2 or B2")->required();
  ir_cmd->add_option("--s", s_real, "real s > 1")->required();
  ir_cmd->add_option("--nodes", nodes, "quadrature nodes");
  ir_cmd->add_option("--tol", tol, "quadrature tolerance");
  ir_cmd->callback([&] {
    command = "int-rep-check";
    inputs["type"] = type_arg;
    inputs["s"] = std::to_string(s_real);
    runner = [&]() {
      RootSystem rs = build(type_arg);
      IntRepReport rep = integral_rep_check(rs, Real(s_real), nodes, Precision(g.prec), Real(tol));
      if (!g.json_out)
        std::cout << rs.name() << " s=" << s_real << ": residual " << real_str(rep.residual, 3)
                  << " (quadrature error estimate " << real_str(rep.quad_error, 3) << ")\n";
      json p;
      p["lhs_re"] = real_str(rep.lhs.real(), g.prec);
      p["lhs_im"] = real_str(rep.lhs.imag(), g.prec);
      p["rhs_re"] = real_str(rep.rhs.real(), g.prec);
      p["rhs_im"] = real_str(rep.rhs.imag(), g.prec);
      p["i_quad"] = real_str(rep.i_quad, g.prec);
      p["quad_error"] = real_str(rep.quad_error, 5);
      p["residual"] = real_str(rep.residual, 5);
      return p;
    };
  });

  // --- triangulate ---
  bool emit_cells = false;
  auto* tri_cmd = app.add_subcommand("triangulate", "band triangulation of the integrand cube");
  tri_cmd->add_option("type", type_arg, "root system with r-n <= 4")->required();
  tri_cmd->add_flag("--emit-cells", emit_cells, "include per-cell vertices and bands");
  tri_cmd->callback([&] {
    command = "triangulate";
    inputs["type"] = type_arg;
    runner = [&]() {
      RootSystem rs = build(type_arg);
      IntegrandSpec spec = integrand_spec(rs);
      if (spec.dim < 1 || spec.dim > 4)
        raise(Errc::DimensionUnsupported, rs.name() + " integrand has dimension " + std::to_string(spec.dim));
      InvariantSet denoms = dset_of_matrix(spec.forms, 1u << 20, g.threads, spec.phi + "-forms");
      std::vector<Int> expected;
      for (const Rat& v : denoms.values) expected.push_back(numerator(v));
      BandTriangulation tri = band_triangulate(spec.forms, expected);
      Rat total = 0;
      std::map<std::vector<int>, Rat> regions;
      for (const auto& c : tri.cells) {
        Rat v = volume(c.simplex);
        total += v;
        regions[std::vector<int>(c.bands.data(), c.bands.data() + c.bands.size())] += v;
      }
      if (!g.json_out)
        std::cout << rs.name() << ": " << tri.cells.size() << " cells, " << regions.size()
                  << " band regions, total volume " << to_string(total) << "\n";
      json p;
      p["dimension"] = spec.dim;
      p["cells"] = tri.cells.size();
      p["band_regions"] = regions.size();
      p["total_volume"] = to_string(total);
      json dn = json::array();
      for (const Int& d : tri.vertex_denominators) dn.push_back(to_string(d));
      p["vertex_denominators"] = dn;
      p["denominators_within_expected"] = tri.denominators_within_expected;
      json rv = json::array();
      for (const auto& [sig, vol] : regions) {
        json jr;
        jr["bands"] = sig;
        jr["volume"] = to_string(vol);
        rv.push_back(jr);
      }
      p["regions"] = rv;
      if (emit_cells) {
        json cells = json::array();
        for (const auto& c : tri.cells) {
          json jc;
          json verts = json::array();
          for (Index k = 0; k < c.simplex.vertices.cols(); ++k) {
            json vert = json::array();
            for (Index i = 0; i < c.simplex.vertices.rows(); ++i)
              vert.push_back(to_string(c.simplex.vertices(i, k)));
            verts.push_back(vert);
          }
          jc["vertices"] = verts;
          jc["bands"] = std::vector<int>(c.bands.data(), c.bands.data() + c.bands.size());
          cells.push_back(jc);
        }
        p["cell_list"] = cells;
      }
      return p;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  json result;
  result["command"] = command;
  result["inputs"] = inputs;
  auto t0 = std::chrono::steady_clock::now();
  try {
    json payload = runner();
    auto t1 = std::chrono::steady_clock::now();
    result["status"] = "ok";
    result["payload"] = payload;
    result["timing_ms"] = std::chrono::duration<double, std::milli>(t1 - t0).count();
    if (g.json_out) std::cout << result.dump(2) << "\n";
    return holds_gate ? 0 : 1;
  } catch (const Error& e) {
    result["status"] = "error";
    result["payload"] = {{"error", errc_name(e.code())}, {"message", e.what()}};
    if (g.json_out)
      std::cout << result.dump(2) << "\n";
    else
      std::cerr << "error: " << e.what() << "\n";
    return e.code() == Errc::InvalidType ? 2 : 1;
  } catch (const std::exception& e) {
    result["status"] = "error";
    result["payload"] = {{"error", "Internal"}, {"message", e.what()}};
    if (g.json_out)
      std::cout << result.dump(2) << "\n";
    else
      std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
