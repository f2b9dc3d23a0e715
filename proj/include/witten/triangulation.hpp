#ifndef WITTEN_TRIANGULATION_HPP
#define WITTEN_TRIANGULATION_HPP

// Rational-vertex simplex machinery: volumes, barycentric subdivision, and
// the integral-band triangulation of the hypercube that confines a family
// of integer linear forms to unit bands per cell.

#include "witten/errors.hpp"
#include "witten/scalars.hpp"

#include <vector>

namespace witten {

struct Simplex {
  // vertices(:, k) is the k-th vertex; dim rows, dim+1 columns.
  RatMatrix vertices;
  int distinguished = -1;

  Index dim() const { return vertices.rows(); }
};

Rat volume(const Simplex& s);

// (d+1)! sub-simplices; each carries as distinguished vertex the unique
// original vertex it contains. Throws DegenerateSimplex.
std::vector<Simplex> barycentric_subdivide(const Simplex& s);

struct BandedCell {
  Simplex simplex;
  // bands(i): integer N with N <= l_i(x) <= N+1 on the cell, one per form.
  Eigen::VectorXi bands;
};

struct BandTriangulation {
  std::vector<BandedCell> cells;
  // Reduced denominators occurring among vertex coordinates, sorted.
  std::vector<Int> vertex_denominators;
  // True when every vertex denominator divides some expected denominator
  // (the constructive analogue of the level bound); when false the actual
  // denominators above are authoritative and downstream consumers only
  // rely on the band property plus vertex rationality.
  bool denominators_within_expected = true;
};

// forms: d x m integer matrix whose columns are linear forms on R^d; must
// contain every identity column e_1..e_d (throws NoIdentityBlock) and m > d.
// Tiles [0,1]^d with simplices such that every form is confined to one unit
// integer band per cell. Cut vertices arise only as intersections of
// form-level hyperplanes, so their coordinates obey the level bound of the
// expected denominators.
BandTriangulation band_triangulate(const IntMatrix& forms, const std::vector<Int>& expected_denoms);

namespace detail {

// Convex polytope carried as vertices plus the (possibly redundant) list of
// integer hyperplanes a.x = c that ever sliced it; all facet-defining planes
// are guaranteed to be in the list, which is what the edge test needs.
struct ConvexCell {
  RatMatrix vertices;  // d x k
  std::vector<std::pair<IntVector, Int>> planes;
};

// Splits the cell by a.x = c; returns one or two cells.
std::vector<ConvexCell> slice_cell(const ConvexCell& cell, const IntVector& normal, const Int& rhs);

// Fan triangulation from the lexicographically least vertex; recursive on
// facets, introduces no new vertices.
std::vector<Simplex> triangulate_cell(const ConvexCell& cell);

}  // namespace detail

}  // namespace witten

#endif  // WITTEN_TRIANGULATION_HPP
