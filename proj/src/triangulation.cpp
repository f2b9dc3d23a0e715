#include "witten/triangulation.hpp"

#include "witten/exact_linalg.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace witten {

namespace {

RatMatrix edge_matrix(const Simplex& s) {
  const Index d = s.dim();
  RatMatrix e(d, d);
  for (Index k = 1; k <= d; ++k) e.col(k - 1) = s.vertices.col(k) - s.vertices.col(0);
  return e;
}

Int factorial_int(Index n) {
  Int f = 1;
  for (Index k = 2; k <= n; ++k) f *= static_cast<long>(k);
  return f;
}

bool lex_less(const RatMatrix& m, Index a, Index b) {
  for (Index i = 0; i < m.rows(); ++i) {
    if (m(i, a) < m(i, b)) return true;
    if (m(i, a) > m(i, b)) return false;
  }
  return false;
}

std::vector<Rat> flatten_sorted(const Simplex& s) {
  std::vector<Index> order(s.vertices.cols());
  std::iota(order.begin(), order.end(), Index(0));
  std::sort(order.begin(), order.end(), [&](Index a, Index b) { return lex_less(s.vertices, a, b); });
  std::vector<Rat> flat;
  flat.reserve(static_cast<std::size_t>(s.vertices.size()));
  for (Index k : order)
    for (Index i = 0; i < s.vertices.rows(); ++i) flat.push_back(s.vertices(i, k));
  return flat;
}

}  // namespace

Rat volume(const Simplex& s) {
  const Index d = s.dim();
  if (s.vertices.cols() != d + 1) raise(Errc::DegenerateSimplex, "simplex needs dim+1 vertices");
  Rat det = determinant(edge_matrix(s));
  if (det < 0) det = -det;
  return det / Rat(factorial_int(d));
}

std::vector<Simplex> barycentric_subdivide(const Simplex& s) {
  const Index d = s.dim();
  if (volume(s) == 0) raise(Errc::DegenerateSimplex, "cannot subdivide a degenerate simplex");

  std::vector<Index> perm(d + 1);
  std::iota(perm.begin(), perm.end(), Index(0));
  std::sort(perm.begin(), perm.end());

  std::vector<Simplex> out;
  do {
    Simplex sub;
    sub.vertices.resize(d, d + 1);
    RatVector acc = RatVector::Zero(d);
    for (Index k = 0; k <= d; ++k) {
      acc += s.vertices.col(perm[static_cast<std::size_t>(k)]);
      sub.vertices.col(k) = acc / Rat(static_cast<long>(k + 1));
    }
    sub.distinguished = 0;  // the single original vertex it contains
    out.push_back(std::move(sub));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

namespace detail {

namespace {

Rat plane_eval(const IntVector& normal, const Int& rhs, const RatMatrix& verts, Index k) {
  Rat acc = -Rat(rhs);
  for (Index i = 0; i < verts.rows(); ++i) acc += Rat(normal(i)) * verts(i, k);
  return acc;
}

// (u, w) span an edge iff the planes tight at both intersect in a line.
bool is_edge(const ConvexCell& cell, Index u, Index w) {
  const Index d = cell.vertices.rows();
  std::vector<Index> tight;
  for (Index p = 0; p < static_cast<Index>(cell.planes.size()); ++p) {
    const auto& [a, c] = cell.planes[static_cast<std::size_t>(p)];
    if (plane_eval(a, c, cell.vertices, u) == 0 && plane_eval(a, c, cell.vertices, w) == 0)
      tight.push_back(p);
  }
  if (static_cast<Index>(tight.size()) < d - 1) return false;
  IntMatrix normals(static_cast<Index>(tight.size()), d);
  for (Index r = 0; r < static_cast<Index>(tight.size()); ++r)
    normals.row(r) = cell.planes[static_cast<std::size_t>(tight[static_cast<std::size_t>(r)])].first.transpose();
  return rank(normals) == d - 1;
}

std::pair<IntVector, Int> normalize_plane(IntVector a, Int c) {
  Int g = abs(c);
  for (Index i = 0; i < a.size(); ++i) g = gcd_int(g, a(i));
  if (g > 1) {
    for (Index i = 0; i < a.size(); ++i) a(i) /= g;
    c /= g;
  }
  for (Index i = 0; i < a.size(); ++i) {
    if (a(i) == 0) continue;
    if (a(i) < 0) {
      a = -a;
      c = -c;
    }
    break;
  }
  return {std::move(a), std::move(c)};
}

std::vector<Rat> column_key(const RatMatrix& m, Index k) {
  std::vector<Rat> key;
  key.reserve(static_cast<std::size_t>(m.rows()));
  for (Index i = 0; i < m.rows(); ++i) key.push_back(m(i, k));
  return key;
}

// Triangulates the face spanned by the given vertex indices (intrinsic
// dimension fdim) into fdim-simplices, returned as index tuples.
void triangulate_face(const ConvexCell& cell, const std::vector<Index>& verts, Index fdim,
                      std::vector<std::vector<Index>>& out) {
  if (static_cast<Index>(verts.size()) == fdim + 1) {
    out.push_back(verts);
    return;
  }
  // Fan apex: lexicographically least vertex of the face.
  Index apex = verts[0];
  for (Index v : verts)
    if (lex_less(cell.vertices, v, apex)) apex = v;

  std::set<std::vector<Index>> facets;
  for (const auto& [a, c] : cell.planes) {
    std::vector<Index> on;
    bool apex_on = false;
    for (Index v : verts) {
      if (plane_eval(a, c, cell.vertices, v) == 0) {
        on.push_back(v);
        if (v == apex) apex_on = true;
      }
    }
    if (apex_on || static_cast<Index>(on.size()) < fdim) continue;
    // Affine rank check: the subset must span a (fdim-1)-flat.
    RatMatrix diff(cell.vertices.rows(), static_cast<Index>(on.size()) - 1);
    for (Index k = 1; k < static_cast<Index>(on.size()); ++k)
      diff.col(k - 1) = cell.vertices.col(on[static_cast<std::size_t>(k)]) -
                        cell.vertices.col(on[0]);
    IntMatrix scaled(diff.rows(), diff.cols());
    // Rank is scale-invariant; clear denominators columnwise.
    for (Index k = 0; k < diff.cols(); ++k) {
      Int l = 1;
      for (Index i = 0; i < diff.rows(); ++i) l = lcm_int(l, denominator(diff(i, k)));
      for (Index i = 0; i < diff.rows(); ++i) scaled(i, k) = numerator(diff(i, k) * Rat(l));
    }
    if (rank(scaled) != fdim - 1) continue;
    std::sort(on.begin(), on.end());
    facets.insert(std::move(on));
  }

  for (const auto& facet : facets) {
    std::vector<std::vector<Index>> sub;
    triangulate_face(cell, facet, fdim - 1, sub);
    for (auto& s : sub) {
      s.push_back(apex);
      out.push_back(std::move(s));
    }
  }
}

}  // namespace

std::vector<ConvexCell> slice_cell(const ConvexCell& cell, const IntVector& normal, const Int& rhs) {
  const Index k = cell.vertices.cols();
  std::vector<Rat> sign(static_cast<std::size_t>(k));
  bool any_pos = false, any_neg = false;
  for (Index v = 0; v < k; ++v) {
    sign[static_cast<std::size_t>(v)] = plane_eval(normal, rhs, cell.vertices, v);
    if (sign[static_cast<std::size_t>(v)] > 0) any_pos = true;
    if (sign[static_cast<std::size_t>(v)] < 0) any_neg = true;
  }
  if (!any_pos || !any_neg) return {cell};

  std::vector<std::vector<Rat>> cut_keys;
  std::vector<RatVector> cuts;
  for (Index u = 0; u < k; ++u) {
    if (sign[static_cast<std::size_t>(u)] <= 0) continue;
    for (Index w = 0; w < k; ++w) {
      if (sign[static_cast<std::size_t>(w)] >= 0) continue;
      if (!is_edge(cell, u, w)) continue;
      const Rat& su = sign[static_cast<std::size_t>(u)];
      const Rat& sw = sign[static_cast<std::size_t>(w)];
      RatVector p = (su * cell.vertices.col(w) - sw * cell.vertices.col(u)) / (su - sw);
      std::vector<Rat> key(p.data(), p.data() + p.size());
      if (std::find(cut_keys.begin(), cut_keys.end(), key) == cut_keys.end()) {
        cut_keys.push_back(std::move(key));
        cuts.push_back(std::move(p));
      }
    }
  }

  auto collect = [&](bool positive) {
    ConvexCell half;
    std::vector<Index> keep;
    for (Index v = 0; v < k; ++v) {
      const Rat& s = sign[static_cast<std::size_t>(v)];
      if (s == 0 || (positive ? s > 0 : s < 0)) keep.push_back(v);
    }
    half.vertices.resize(cell.vertices.rows(), static_cast<Index>(keep.size() + cuts.size()));
    Index col = 0;
    for (Index v : keep) half.vertices.col(col++) = cell.vertices.col(v);
    for (const auto& p : cuts) half.vertices.col(col++) = p;
    half.planes = cell.planes;
    half.planes.push_back(normalize_plane(normal, rhs));
    return half;
  };
  return {collect(true), collect(false)};
}

std::vector<Simplex> triangulate_cell(const ConvexCell& cell) {
  const Index d = cell.vertices.rows();
  ConvexCell work = cell;
  // Deduplicate planes geometrically; facet identity is by vertex subset,
  // but duplicates would make the subset scan quadratic for nothing.
  {
    std::set<std::vector<Rat>> seen_v;
    std::vector<std::pair<IntVector, Int>> planes;
    std::set<std::pair<std::vector<Int>, Int>> seen_p;
    for (const auto& [a, c] : work.planes) {
      auto [na, nc] = normalize_plane(a, c);
      std::vector<Int> key(na.data(), na.data() + na.size());
      if (seen_p.insert({key, nc}).second) planes.push_back({na, nc});
    }
    work.planes = std::move(planes);
    // Deduplicate vertices by exact equality.
    std::vector<Index> keep;
    for (Index v = 0; v < work.vertices.cols(); ++v)
      if (seen_v.insert(column_key(work.vertices, v)).second) keep.push_back(v);
    RatMatrix verts(d, static_cast<Index>(keep.size()));
    for (Index i = 0; i < static_cast<Index>(keep.size()); ++i)
      verts.col(i) = work.vertices.col(keep[static_cast<std::size_t>(i)]);
    work.vertices = std::move(verts);
  }

  std::vector<Index> all(work.vertices.cols());
  std::iota(all.begin(), all.end(), Index(0));
  std::vector<std::vector<Index>> tuples;
  triangulate_face(work, all, d, tuples);

  std::vector<Simplex> out;
  out.reserve(tuples.size());
  for (const auto& t : tuples) {
    Simplex s;
    s.vertices.resize(d, d + 1);
    for (Index k = 0; k <= d; ++k) s.vertices.col(k) = work.vertices.col(t[static_cast<std::size_t>(k)]);
    if (volume(s) == 0) raise(Errc::Internal, "fan triangulation produced a degenerate simplex");
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace detail

BandTriangulation band_triangulate(const IntMatrix& forms, const std::vector<Int>& expected_denoms) {
  const Index d = forms.rows();
  const Index m = forms.cols();
  if (m <= d) raise(Errc::NoIdentityBlock, "need more forms than dimensions");
  for (Index i = 0; i < d; ++i) {
    bool found = false;
    for (Index j = 0; j < m && !found; ++j) {
      bool is_ei = true;
      for (Index k = 0; k < d; ++k)
        if (forms(k, j) != (k == i ? 1 : 0)) {
          is_ei = false;
          break;
        }
      found = is_ei;
    }
    if (!found) raise(Errc::NoIdentityBlock, "missing identity column e_" + std::to_string(i + 1));
  }

  // Unit hypercube with its facet planes.
  detail::ConvexCell cube;
  cube.vertices.resize(d, Index(1) << d);
  for (Index v = 0; v < (Index(1) << d); ++v)
    for (Index i = 0; i < d; ++i) cube.vertices(i, v) = Rat(((v >> i) & 1) ? 1 : 0);
  for (Index i = 0; i < d; ++i) {
    IntVector e = IntVector::Zero(d);
    e(i) = 1;
    cube.planes.push_back({e, Int(0)});
    cube.planes.push_back({e, Int(1)});
  }

  // Integer levels of each form strictly inside its range over the cube.
  std::vector<std::pair<IntVector, Int>> cut_planes;
  std::set<std::pair<std::vector<Int>, Int>> seen;
  for (const auto& [a, c] : cube.planes)
    seen.insert({std::vector<Int>(a.data(), a.data() + a.size()), c});
  for (Index j = 0; j < m; ++j) {
    Int lo = 0, hi = 0;
    for (Index i = 0; i < d; ++i) {
      if (forms(i, j) < 0) lo += forms(i, j);
      if (forms(i, j) > 0) hi += forms(i, j);
    }
    for (Int n = lo + 1; n < hi; ++n) {
      auto [na, nc] = detail::normalize_plane(forms.col(j), n);
      std::vector<Int> key(na.data(), na.data() + na.size());
      if (seen.insert({key, nc}).second) cut_planes.push_back({std::move(na), nc});
    }
  }

  std::vector<detail::ConvexCell> cells{cube};
  for (const auto& [a, c] : cut_planes) {
    std::vector<detail::ConvexCell> next;
    for (const auto& cell : cells) {
      auto parts = detail::slice_cell(cell, a, c);
      for (auto& p : parts) next.push_back(std::move(p));
    }
    cells = std::move(next);
  }

  BandTriangulation out;
  Rat total = 0;
  for (const auto& cell : cells) {
    for (auto& s : detail::triangulate_cell(cell)) {
      BandedCell bc;
      bc.bands.resize(static_cast<int>(m));
      RatVector centroid = RatVector::Zero(d);
      for (Index k = 0; k <= d; ++k) centroid += s.vertices.col(k);
      centroid /= Rat(static_cast<long>(d + 1));
      for (Index j = 0; j < m; ++j) {
        Rat val = 0;
        for (Index i = 0; i < d; ++i) val += Rat(forms(i, j)) * centroid(i);
        Int band = floor_rat(val);
        for (Index k = 0; k <= d; ++k) {
          Rat vv = 0;
          for (Index i = 0; i < d; ++i) vv += Rat(forms(i, j)) * s.vertices(i, k);
          if (vv < Rat(band) || vv > Rat(band + 1))
            raise(Errc::Internal, "form escapes its band on a cell");
        }
        bc.bands(static_cast<int>(j)) = static_cast<int>(to_i64(band));
      }
      total += volume(s);
      bc.simplex = std::move(s);
      out.cells.push_back(std::move(bc));
    }
  }
  if (total != 1) raise(Errc::Internal, "band triangulation does not tile the cube");

  std::sort(out.cells.begin(), out.cells.end(), [](const BandedCell& a, const BandedCell& b) {
    return flatten_sorted(a.simplex) < flatten_sorted(b.simplex);
  });

  std::set<Int> denoms;
  for (const auto& bc : out.cells)
    for (Index k = 0; k < bc.simplex.vertices.cols(); ++k)
      for (Index i = 0; i < d; ++i) denoms.insert(denominator(bc.simplex.vertices(i, k)));
  out.vertex_denominators.assign(denoms.begin(), denoms.end());
  out.denominators_within_expected = true;
  for (const Int& q : out.vertex_denominators) {
    bool divides_some = false;
    for (const Int& e : expected_denoms)
      if (e != 0 && e % q == 0) {
        divides_some = true;
        break;
      }
    if (!divides_some) out.denominators_within_expected = false;
  }
  return out;
}

}  // namespace witten
