#include "stringy/fano.hpp"

#include <algorithm>

#include "stringy/error.hpp"

namespace stringy {

namespace {

bool spans(const std::vector<IntVector>& points, int dim) {
  return !points.empty() && affine_rank(points) == static_cast<std::size_t>(dim);
}

}  // namespace

bool ClassificationReport::consistent() const {
  if (is_reflexive && !is_almost_reflexive) return false;
  if (is_almost_reflexive && !is_almost_pseudoreflexive) return false;
  if (is_reflexive && !is_canonical_fano) return false;
  if (is_pseudoreflexive && !is_almost_pseudoreflexive) return false;
  if (dim <= 4 && is_almost_pseudoreflexive != is_almost_reflexive) return false;
  if (dim <= 4 && is_pseudoreflexive != is_reflexive) return false;
  if (dim == 2 && is_canonical_fano && !is_reflexive) return false;
  if (!origin_interior && (is_canonical_fano || is_reflexive || is_almost_pseudoreflexive || is_ldp_polygon))
    return false;
  return true;
}

std::optional<LatticePolytope> lattice_hull_of_dual(const LatticePolytope& p) {
  RationalPolytope dual = dual_polytope(p);
  LatticePoints pts = lattice_points(dual);
  std::vector<IntVector> all = pts.boundary;
  all.insert(all.end(), pts.interior.begin(), pts.interior.end());
  if (!spans(all, p.dim())) return std::nullopt;
  return LatticePolytope::hull_of(all, p.dim());
}

bool all_facets_at_distance_one(const LatticePolytope& p) {
  return std::all_of(p.facets().begin(), p.facets().end(),
                     [](const FacetData& f) { return f.halfspace.offset == -1; });
}

bool is_canonical_fano(const LatticePolytope& p) {
  if (!p.origin_in_interior()) return false;
  return lattice_points(p).interior.size() == 1;
}

ClassificationReport classify(const LatticePolytope& p) {
  ClassificationReport r;
  r.dim = p.dim();
  LatticePoints pts = lattice_points(p);
  r.interior_point_count = pts.interior.size();
  r.boundary_point_count = pts.boundary.size();
  r.origin_interior = p.origin_in_interior();
  if (!r.origin_interior) return r;

  r.is_canonical_fano = r.interior_point_count == 1;
  if (p.dim() == 2) {
    r.is_ldp_polygon = std::all_of(p.vertices().begin(), p.vertices().end(),
                                   [](const IntVector& v) { return content(v) == 1; });
  }

  RationalPolytope dual = dual_polytope(p);
  r.is_reflexive = dual.is_lattice();

  LatticePoints dual_pts = lattice_points(dual);
  r.dual_lattice_point_count = dual_pts.total();
  std::vector<IntVector> all = dual_pts.boundary;
  all.insert(all.end(), dual_pts.interior.begin(), dual_pts.interior.end());
  if (!spans(all, p.dim())) return r;
  LatticePolytope hull = LatticePolytope::hull_of(all, p.dim());

  r.is_almost_pseudoreflexive = hull.origin_in_interior();
  if (!r.is_almost_pseudoreflexive) return r;

  r.is_almost_reflexive = dual_polytope(hull).is_lattice();

  // [[Δ*]*] computed literally and compared with Δ.
  LatticePoints back = lattice_points(dual_polytope(hull));
  std::vector<IntVector> back_all = back.boundary;
  back_all.insert(back_all.end(), back.interior.begin(), back.interior.end());
  if (spans(back_all, p.dim())) {
    r.is_pseudoreflexive = LatticePolytope::hull_of(back_all, p.dim()) == p;
  }
  return r;
}

}  // namespace stringy
