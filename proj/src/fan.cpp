#include <algorithm>
#include <map>
#include <set>

#include "stringy/error.hpp"
#include "stringy/fano.hpp"
#include "stringy/stringy.hpp"

namespace stringy {

namespace {

using Triangle = std::vector<IntVector>;

IntVector cross(const IntVector& a, const IntVector& b) {
  return IntVector(std::vector<Integer>{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]});
}

int sign(const Integer& x) { return sgn(x); }

// Complete fan whose maximal cones are spanned by the given point simplices.
Fan fan_from_simplices(const std::vector<std::vector<IntVector>>& simplices, int d) {
  Fan fan;
  fan.ambient_dim = d;
  std::set<IntVector> points;
  for (const auto& s : simplices) points.insert(s.begin(), s.end());
  fan.rays.assign(points.begin(), points.end());
  for (auto& r : fan.rays) r = make_primitive(r);
  std::sort(fan.rays.begin(), fan.rays.end());
  if (std::adjacent_find(fan.rays.begin(), fan.rays.end()) != fan.rays.end())
    fail(ErrorCode::InternalInconsistency, "two subdivision points span the same ray");

  std::vector<std::set<std::vector<int>>> by_dim(static_cast<std::size_t>(d + 1));
  for (const auto& s : simplices) {
    std::vector<int> ids;
    for (const auto& pt : s) {
      auto it = std::lower_bound(fan.rays.begin(), fan.rays.end(), make_primitive(pt));
      ids.push_back(static_cast<int>(it - fan.rays.begin()));
    }
    std::sort(ids.begin(), ids.end());
    const std::size_t n = ids.size();
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      std::vector<int> sub;
      for (std::size_t i = 0; i < n; ++i)
        if (mask & (1u << i)) sub.push_back(ids[i]);
      by_dim[sub.size()].insert(std::move(sub));
    }
  }
  int next_id = 0;
  fan.cones.resize(static_cast<std::size_t>(d + 1));
  for (int k = 0; k <= d; ++k) {
    for (const auto& ids : by_dim[static_cast<std::size_t>(k)]) {
      Cone c;
      c.id = next_id++;
      c.dim = k;
      c.ray_ids = ids;
      for (int r : ids) c.generators.push_back(fan.rays[static_cast<std::size_t>(r)]);
      fan.cones[static_cast<std::size_t>(k)].push_back(std::move(c));
    }
  }
  return fan;
}

// Lattice points of the facet with the given halfspace, among the boundary points.
std::vector<IntVector> points_on(const Halfspace& h, const std::vector<IntVector>& boundary) {
  std::vector<IntVector> out;
  for (const auto& x : boundary)
    if (h.on_boundary(x)) out.push_back(x);
  return out;
}

// Inserts q into a planar triangulation: a point inside a triangle splits it in
// three, a point on an edge splits both triangles sharing that edge in two.
void insert_point(std::vector<Triangle>& tris, const IntVector& q) {
  std::vector<Triangle> out;
  bool found = false;
  for (const auto& t : tris) {
    const IntVector& a = t[0];
    const IntVector& b = t[1];
    const IntVector& c = t[2];
    IntVector normal = cross(b - a, c - a);
    int sa = sign(dot(cross(b - q, c - q), normal));
    int sb = sign(dot(cross(c - q, a - q), normal));
    int sc = sign(dot(cross(a - q, b - q), normal));
    if (sa < 0 || sb < 0 || sc < 0) {
      out.push_back(t);
      continue;
    }
    int zeros = (sa == 0) + (sb == 0) + (sc == 0);
    if (zeros >= 2) return;  // q is already a vertex
    found = true;
    if (zeros == 0) {
      out.push_back({a, b, q});
      out.push_back({b, c, q});
      out.push_back({c, a, q});
    } else if (sa == 0) {
      out.push_back({a, b, q});
      out.push_back({a, q, c});
    } else if (sb == 0) {
      out.push_back({b, c, q});
      out.push_back({b, q, a});
    } else {
      out.push_back({c, a, q});
      out.push_back({c, q, b});
    }
  }
  if (!found) fail(ErrorCode::InternalInconsistency, "facet point outside its triangulation");
  tris = std::move(out);
}

std::vector<std::vector<IntVector>> boundary_simplices_2d(const LatticePolytope& p, SubdivisionStrategy strategy) {
  std::vector<IntVector> boundary;
  if (strategy == SubdivisionStrategy::AllBoundaryPoints) boundary = lattice_points(p).boundary;
  std::vector<std::vector<IntVector>> out;
  for (const auto& f : p.facets()) {
    const IntVector& a = p.vertices()[static_cast<std::size_t>(f.vertex_ids[0])];
    const IntVector& b = p.vertices()[static_cast<std::size_t>(f.vertex_ids[1])];
    if (strategy == SubdivisionStrategy::VerticesOnly) {
      out.push_back({a, b});
      continue;
    }
    std::vector<IntVector> pts = points_on(f.halfspace, boundary);
    IntVector dir = b - a;
    std::sort(pts.begin(), pts.end(),
              [&](const IntVector& x, const IntVector& y) { return dot(dir, x) < dot(dir, y); });
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) out.push_back({pts[i], pts[i + 1]});
  }
  return out;
}

std::vector<std::vector<IntVector>> boundary_simplices_3d(const LatticePolytope& p, SubdivisionStrategy strategy) {
  FaceLattice lattice = FaceLattice::build(p);
  std::vector<IntVector> boundary;
  if (strategy == SubdivisionStrategy::AllBoundaryPoints) boundary = lattice_points(p).boundary;
  const auto& verts = p.vertices();
  std::vector<std::vector<IntVector>> out;
  for (int id : lattice.of_dim(2)) {
    const Face& facet = lattice.face(id);
    // Pulling triangulation from the smallest vertex.
    const int apex = facet.vertex_ids.front();
    std::vector<Triangle> tris;
    for (int e : facet.subfaces) {
      const auto& ev = lattice.face(e).vertex_ids;
      if (std::binary_search(ev.begin(), ev.end(), apex)) continue;
      tris.push_back({verts[static_cast<std::size_t>(apex)], verts[static_cast<std::size_t>(ev[0])],
                      verts[static_cast<std::size_t>(ev[1])]});
    }
    if (strategy == SubdivisionStrategy::AllBoundaryPoints) {
      const Halfspace& h = p.facets()[static_cast<std::size_t>(facet.facets.front())].halfspace;
      for (const auto& q : points_on(h, boundary)) insert_point(tris, q);
    }
    for (auto& t : tris) out.push_back(std::move(t));
  }
  return out;
}

}  // namespace

bool Fan::is_simplicial() const {
  for (const auto& level : cones)
    for (const auto& c : level)
      if (!c.is_simplicial) return false;
  return true;
}

Fan spanning_fan(const LatticePolytope& p) {
  if (!p.origin_in_interior()) fail(ErrorCode::OriginNotInterior, "spanning fan needs the origin in the interior");
  FaceLattice lattice = FaceLattice::build(p);
  const int d = p.dim();
  Fan fan;
  fan.ambient_dim = d;
  for (const auto& v : p.vertices()) fan.rays.push_back(make_primitive(v));
  fan.cones.resize(static_cast<std::size_t>(d + 1));
  int next_id = 0;
  for (int k = -1; k < d; ++k) {
    for (int id : lattice.of_dim(k)) {
      const Face& f = lattice.face(id);
      Cone c;
      c.id = next_id++;
      c.dim = k + 1;
      c.ray_ids = f.vertex_ids;
      for (int r : f.vertex_ids) c.generators.push_back(fan.rays[static_cast<std::size_t>(r)]);
      c.is_simplicial = static_cast<int>(c.generators.size()) == c.dim;
      c.face_id = id;
      fan.cones[static_cast<std::size_t>(c.dim)].push_back(std::move(c));
    }
  }
  return fan;
}

Fan simplicial_subdivision(const Fan& fan, const LatticePolytope& p, SubdivisionStrategy strategy) {
  const int d = p.dim();
  if (d != 2 && d != 3) fail(ErrorCode::UnsupportedDimension, "simplicial subdivision needs d = 2 or 3");
  if (!is_canonical_fano(p)) fail(ErrorCode::NotCanonicalFano, "simplicial subdivision needs a canonical Fano polytope");
  if (fan.ambient_dim != d || fan.count(1) != p.vertices().size())
    fail(ErrorCode::InvalidArgument, "fan is not the spanning fan of the polytope");
  auto simplices = d == 2 ? boundary_simplices_2d(p, strategy) : boundary_simplices_3d(p, strategy);
  return fan_from_simplices(simplices, d);
}

Rational kappa(const Fan& fan, const IntVector& n) {
  if (n.is_zero()) return 0;
  const auto d = static_cast<std::size_t>(fan.ambient_dim);
  if (n.dim() != d) fail(ErrorCode::ShapeMismatch, "point has the wrong dimension");
  for (const auto& c : fan.cones.at(d)) {
    if (!c.is_simplicial) fail(ErrorCode::NotSimplicial, "kappa needs a simplicial fan");
    RatVector lambda = solve_linear(IntMatrix::from_columns(c.generators), n);
    if (std::any_of(lambda.begin(), lambda.end(), [](const Rational& x) { return x < 0; })) continue;
    Rational sum = 0;
    for (const auto& x : lambda) sum += x;
    return -sum;
  }
  fail(ErrorCode::InternalInconsistency, "no cone of the fan contains " + to_string(n));
}

std::vector<BoxPoint> box_points(const Cone& cone, std::size_t ambient_dim) {
  if (!cone.is_simplicial || cone.generators.size() != static_cast<std::size_t>(cone.dim))
    fail(ErrorCode::NotSimplicial, "box points need a simplicial cone");
  const std::size_t k = cone.generators.size();
  if (k == 0) return {BoxPoint{IntVector(ambient_dim), cone.id, {}, 0}};

  // Cosets of the generator lattice inside span(σ) ∩ N, one box point each.
  std::vector<IntVector> with_origin{IntVector(ambient_dim)};
  with_origin.insert(with_origin.end(), cone.generators.begin(), cone.generators.end());
  std::vector<IntVector> basis = sublattice_basis(with_origin);
  std::vector<IntVector> coords;
  for (const auto& u : cone.generators) coords.push_back(lattice_coordinates(basis, u));
  IntMatrix u_rows = IntMatrix::from_rows(coords);
  IntMatrix u_cols = u_rows.transpose();
  IntMatrix h = hermite_normal_form(u_rows);

  std::vector<BoxPoint> out;
  IntVector rep(k);
  while (true) {
    RatVector lambda = solve_linear(u_cols, rep);
    BoxPoint bp{IntVector(ambient_dim), cone.id, {}, 0};
    for (std::size_t i = 0; i < k; ++i) {
      Rational f = lambda[i] - Rational(floor(lambda[i]));
      if (f == 0) f = 1;
      bp.kappa -= f;
      bp.lambda.push_back(f);
    }
    RatVector pt(ambient_dim);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < ambient_dim; ++j) pt[j] += bp.lambda[i] * cone.generators[i][j];
    for (std::size_t j = 0; j < ambient_dim; ++j) {
      if (pt[j].get_den() != 1) fail(ErrorCode::InternalInconsistency, "box point is not a lattice point");
      bp.point[j] = pt[j].get_num();
    }
    out.push_back(std::move(bp));

    std::size_t i = 0;
    for (; i < k; ++i) {
      if (++rep[i] < h(i, i)) break;
      rep[i] = 0;
    }
    if (i == k) break;
  }
  std::sort(out.begin(), out.end(), [](const BoxPoint& a, const BoxPoint& b) { return a.point < b.point; });
  return out;
}

}  // namespace stringy
