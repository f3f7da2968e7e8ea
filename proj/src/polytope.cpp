#include <algorithm>
#include <map>

#include "stringy/error.hpp"
#include "stringy/hull.hpp"
#include "stringy/polytope.hpp"

namespace stringy {

LatticePolytope LatticePolytope::hull_of(std::span<const IntVector> points, int dim) {
  if (dim < 2 || dim > 4) fail(ErrorCode::UnsupportedDimension, "polytope dimension must be 2, 3 or 4");
  if (points.empty()) fail(ErrorCode::EmptyInput, "convex hull of no points");
  for (const auto& p : points)
    if (p.dim() != static_cast<std::size_t>(dim))
      fail(ErrorCode::ShapeMismatch, "point " + to_string(p) + " has the wrong dimension");

  std::vector<IntVector> sorted(points.begin(), points.end());
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 1; i < sorted.size(); ++i)
    if (sorted[i] == sorted[i - 1]) fail(ErrorCode::DegenerateInput, "repeated point " + to_string(sorted[i]));

  detail::Hull hull = detail::compute_hull(sorted, dim);

  // `sorted` is lexicographic, so vertex_ids already come out in canonical order.
  LatticePolytope p;
  p.dim_ = dim;
  std::vector<int> new_id(sorted.size(), -1);
  for (int id : hull.vertex_ids) {
    new_id[static_cast<std::size_t>(id)] = static_cast<int>(p.vertices_.size());
    p.vertices_.push_back(sorted[static_cast<std::size_t>(id)]);
  }
  for (auto& f : hull.facets) {
    FacetData fd{{std::move(f.normal), std::move(f.offset)}, {}};
    for (int id : f.point_ids)
      if (new_id[static_cast<std::size_t>(id)] >= 0) fd.vertex_ids.push_back(new_id[static_cast<std::size_t>(id)]);
    p.facets_.push_back(std::move(fd));
  }
  std::sort(p.facets_.begin(), p.facets_.end(),
            [](const FacetData& a, const FacetData& b) { return a.vertex_ids < b.vertex_ids; });
  return p;
}

bool LatticePolytope::contains(const IntVector& x) const {
  return std::all_of(facets_.begin(), facets_.end(), [&](const FacetData& f) { return f.halfspace.contains(x); });
}

bool LatticePolytope::in_interior(const IntVector& x) const {
  return std::all_of(facets_.begin(), facets_.end(),
                     [&](const FacetData& f) { return dot(f.halfspace.normal, x) > f.halfspace.offset; });
}

bool LatticePolytope::origin_in_interior() const {
  return std::all_of(facets_.begin(), facets_.end(), [](const FacetData& f) { return f.halfspace.offset < 0; });
}

LatticePolytope LatticePolytope::scaled(const Integer& k) const {
  if (k <= 0) fail(ErrorCode::InvalidArgument, "scale factor must be positive");
  LatticePolytope p = *this;
  for (auto& v : p.vertices_) v *= k;
  for (auto& f : p.facets_) f.halfspace.offset *= k;
  return p;
}

// ---------------------------------------------------------------------------

RationalPolytope RationalPolytope::hull_of(std::span<const RatVector> points, int dim) {
  if (points.empty()) fail(ErrorCode::EmptyInput, "convex hull of no points");
  Integer l = 1;
  for (const auto& p : points) l = lcm(l, p.denominator());
  std::vector<IntVector> scaled;
  scaled.reserve(points.size());
  for (const auto& p : points) scaled.push_back(p.scaled_to_integer(l));

  RationalPolytope r;
  r.scaled_ = LatticePolytope::hull_of(scaled, dim);
  r.denominator_ = 1;
  for (const auto& v : r.scaled_.vertices()) {
    RatVector y(v.dim());
    for (std::size_t i = 0; i < v.dim(); ++i) y[i] = make_rational(v[i], l);
    r.denominator_ = lcm(r.denominator_, y.denominator());
    r.vertices_.push_back(std::move(y));
  }
  if (r.denominator_ != l) {
    // Redundant input points carried a larger denominator than any vertex.
    std::vector<IntVector> rescaled;
    for (const auto& y : r.vertices_) rescaled.push_back(y.scaled_to_integer(r.denominator_));
    r.scaled_ = LatticePolytope::hull_of(rescaled, dim);
  }
  return r;
}

bool RationalPolytope::contains(const IntVector& x) const { return scaled_.contains(denominator_ * x); }

bool RationalPolytope::in_interior(const IntVector& x) const { return scaled_.in_interior(denominator_ * x); }

// ---------------------------------------------------------------------------

namespace {

// Lattice points of {x : <m_i, x> >= offset_i / scale} inside the box [lo, hi].
// The outer coordinates are scanned; the last one is cut to an exact interval.
LatticePoints enumerate_points(const std::vector<FacetData>& facets, const Integer& scale,
                               const IntVector& lo, const IntVector& hi) {
  LatticePoints out;
  const std::size_t d = lo.dim();
  IntVector x = lo;
  std::vector<Rational> partial(facets.size());

  auto emit_line = [&]() {
    Integer a = lo[d - 1], b = hi[d - 1];
    for (std::size_t f = 0; f < facets.size(); ++f) {
      const auto& h = facets[f].halfspace;
      partial[f] = 0;
      for (std::size_t j = 0; j + 1 < d; ++j) partial[f] += h.normal[j] * x[j];
      Rational rhs = make_rational(h.offset, scale) - partial[f];
      const Integer& m = h.normal[d - 1];
      if (m > 0) {
        Integer bound = ceil(rhs / m);
        if (bound > a) a = bound;
      } else if (m < 0) {
        Integer bound = floor(rhs / m);
        if (bound < b) b = bound;
      } else if (rhs > 0) {
        return;
      }
    }
    for (Integer t = a; t <= b; ++t) {
      x[d - 1] = t;
      bool boundary = false;
      for (std::size_t f = 0; f < facets.size(); ++f) {
        const auto& h = facets[f].halfspace;
        if ((partial[f] + h.normal[d - 1] * t) * scale == h.offset) {
          boundary = true;
          break;
        }
      }
      (boundary ? out.boundary : out.interior).push_back(x);
    }
  };

  // Odometer over coordinates 0..d-2.
  while (true) {
    emit_line();
    std::size_t j = d - 1;
    while (j > 0) {
      --j;
      if (x[j] < hi[j]) {
        ++x[j];
        break;
      }
      x[j] = lo[j];
      if (j == 0) return out;
    }
    if (d == 1) return out;
  }
}

}  // namespace

LatticePoints lattice_points(const LatticePolytope& p) {
  const std::size_t d = static_cast<std::size_t>(p.dim());
  IntVector lo = p.vertices().front(), hi = lo;
  for (const auto& v : p.vertices())
    for (std::size_t i = 0; i < d; ++i) {
      if (v[i] < lo[i]) lo[i] = v[i];
      if (v[i] > hi[i]) hi[i] = v[i];
    }
  return enumerate_points(p.facets(), 1, lo, hi);
}

LatticePoints lattice_points(const RationalPolytope& p) {
  const std::size_t d = static_cast<std::size_t>(p.dim());
  IntVector lo(d), hi(d);
  for (std::size_t i = 0; i < d; ++i) {
    lo[i] = ceil(p.vertices().front()[i]);
    hi[i] = floor(p.vertices().front()[i]);
  }
  for (const auto& v : p.vertices())
    for (std::size_t i = 0; i < d; ++i) {
      Integer c = ceil(v[i]), f = floor(v[i]);
      if (c < lo[i]) lo[i] = c;
      if (f > hi[i]) hi[i] = f;
    }
  for (std::size_t i = 0; i < d; ++i)
    if (lo[i] > hi[i]) return {};
  return enumerate_points(p.scaled().facets(), p.denominator(), lo, hi);
}

// ---------------------------------------------------------------------------

Rational hull_volume(std::span<const IntVector> points) {
  if (points.empty()) fail(ErrorCode::EmptyInput, "volume of an empty point set");
  std::vector<IntVector> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  std::vector<IntVector> basis = sublattice_basis(pts);
  const std::size_t k = basis.size();
  if (k == 0) return 1;

  std::vector<IntVector> coords;
  coords.reserve(pts.size());
  for (const auto& p : pts) coords.push_back(lattice_coordinates(basis, p - pts.front()));

  if (k == 1) {
    auto [mn, mx] = std::minmax_element(coords.begin(), coords.end(),
                                        [](const IntVector& a, const IntVector& b) { return a[0] < b[0]; });
    return Rational((*mx)[0] - (*mn)[0]);
  }

  // Pyramid decomposition from one vertex: v(conv(p0, F)) = height * v(F).
  LatticePolytope poly = LatticePolytope::hull_of(coords, static_cast<int>(k));
  const IntVector& apex = poly.vertices().front();
  Rational total = 0;
  for (const auto& f : poly.facets()) {
    Integer height = dot(f.halfspace.normal, apex) - f.halfspace.offset;
    if (height == 0) continue;
    std::vector<IntVector> base;
    for (int id : f.vertex_ids) base.push_back(poly.vertices()[static_cast<std::size_t>(id)]);
    total += height * hull_volume(base);
  }
  return total;
}

Rational hull_volume(std::span<const RatVector> points) {
  if (points.empty()) fail(ErrorCode::EmptyInput, "volume of an empty point set");
  Integer l = 1;
  for (const auto& p : points) l = lcm(l, p.denominator());
  std::vector<IntVector> scaled;
  for (const auto& p : points) scaled.push_back(p.scaled_to_integer(l));
  std::size_t k = affine_rank(scaled);
  Integer lk;
  mpz_pow_ui(lk.get_mpz_t(), l.get_mpz_t(), static_cast<unsigned long>(k));
  return hull_volume(scaled) / lk;
}

RationalPolytope dual_polytope(const LatticePolytope& p) {
  if (!p.origin_in_interior()) fail(ErrorCode::OriginNotInterior, "dual polytope needs the origin in the interior");
  std::vector<RatVector> ys;
  for (const auto& f : p.facets()) {
    RatVector y(f.halfspace.normal.dim());
    for (std::size_t i = 0; i < y.dim(); ++i) y[i] = make_rational(f.halfspace.normal[i], -f.halfspace.offset);
    ys.push_back(std::move(y));
  }
  return RationalPolytope::hull_of(ys, p.dim());
}

Rational lattice_distance(const LatticePolytope& p, const FaceLattice& lattice, int face_id) {
  const Face& f = lattice.face(face_id);
  if (f.dim != p.dim() - 1) fail(ErrorCode::NotAFacet, "face " + std::to_string(face_id) + " is not a facet");
  if (!p.origin_in_interior()) fail(ErrorCode::OriginNotInterior, "lattice distance needs the origin in the interior");
  if (f.facets.size() != 1) fail(ErrorCode::InternalInconsistency, "facet face without its halfspace");
  return Rational(-p.facets()[static_cast<std::size_t>(f.facets.front())].halfspace.offset);
}

}  // namespace stringy
