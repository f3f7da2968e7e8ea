#include "stringy/hull.hpp"

#include <algorithm>
#include <map>

#include "stringy/error.hpp"

namespace stringy::detail {

IntVector hyperplane_normal(std::span<const IntVector> points) {
  const std::size_t d = points.front().dim();
  if (points.size() != d) fail(ErrorCode::ShapeMismatch, "hyperplane_normal needs exactly d points");
  IntVector normal(d);
  for (std::size_t j = 0; j < d; ++j) {
    IntMatrix minor(d - 1, d - 1);
    for (std::size_t i = 1; i < d; ++i) {
      std::size_t cc = 0;
      for (std::size_t c = 0; c < d; ++c) {
        if (c == j) continue;
        minor(i - 1, cc++) = points[i][c] - points[0][c];
      }
    }
    Integer m = integer_det(minor);
    normal[j] = (j % 2 == 0) ? m : Integer(-m);
  }
  return make_primitive(normal);
}

namespace {

struct WorkFacet {
  std::vector<int> pts;
  IntVector normal;
  Integer offset;
  bool alive = true;
};

}  // namespace

Hull compute_hull(std::span<const IntVector> points, int dim) {
  const auto d = static_cast<std::size_t>(dim);
  const int n = static_cast<int>(points.size());
  for (const auto& p : points)
    if (p.dim() != d) fail(ErrorCode::ShapeMismatch, "point dimension differs from polytope dimension");

  // Initial simplex: greedily grow an affinely independent set.
  std::vector<int> simplex;
  std::vector<IntVector> simplex_pts;
  for (int i = 0; i < n && simplex.size() < d + 1; ++i) {
    simplex_pts.push_back(points[static_cast<std::size_t>(i)]);
    if (affine_rank(simplex_pts) + 1 == simplex_pts.size()) {
      simplex.push_back(i);
    } else {
      simplex_pts.pop_back();
    }
  }
  if (simplex.size() < d + 1) fail(ErrorCode::NotFullDimensional, "points do not span the ambient space");

  // (d+1) times the simplex centroid; strictly interior for the whole run.
  IntVector centroid(d);
  for (const auto& p : simplex_pts) centroid += p;
  const Integer scale = static_cast<long>(d + 1);

  std::vector<WorkFacet> facets;
  std::map<std::vector<int>, std::vector<int>> ridges;

  auto add_facet = [&](std::vector<int> pts) {
    std::sort(pts.begin(), pts.end());
    std::vector<IntVector> verts;
    for (int id : pts) verts.push_back(points[static_cast<std::size_t>(id)]);
    WorkFacet f;
    f.normal = hyperplane_normal(verts);
    f.offset = dot(f.normal, verts.front());
    if (dot(f.normal, centroid) < scale * f.offset) {
      f.normal = -f.normal;
      f.offset = -f.offset;
    }
    f.pts = std::move(pts);
    const int fid = static_cast<int>(facets.size());
    for (std::size_t skip = 0; skip < f.pts.size(); ++skip) {
      std::vector<int> ridge;
      for (std::size_t k = 0; k < f.pts.size(); ++k)
        if (k != skip) ridge.push_back(f.pts[k]);
      ridges[ridge].push_back(fid);
    }
    facets.push_back(std::move(f));
  };

  for (std::size_t skip = 0; skip <= d; ++skip) {
    std::vector<int> pts;
    for (std::size_t k = 0; k <= d; ++k)
      if (k != skip) pts.push_back(simplex[k]);
    add_facet(pts);
  }

  std::vector<bool> in_simplex(static_cast<std::size_t>(n), false);
  for (int id : simplex) in_simplex[static_cast<std::size_t>(id)] = true;

  for (int i = 0; i < n; ++i) {
    if (in_simplex[static_cast<std::size_t>(i)]) continue;
    const IntVector& p = points[static_cast<std::size_t>(i)];
    std::vector<char> visible(facets.size(), 0);
    std::vector<int> visible_ids;
    for (std::size_t f = 0; f < facets.size(); ++f) {
      if (facets[f].alive && dot(facets[f].normal, p) < facets[f].offset) {
        visible[f] = 1;
        visible_ids.push_back(static_cast<int>(f));
      }
    }
    if (visible_ids.empty()) continue;

    std::vector<std::vector<int>> horizon;
    for (int fid : visible_ids) {
      const auto& pts = facets[static_cast<std::size_t>(fid)].pts;
      for (std::size_t skip = 0; skip < pts.size(); ++skip) {
        std::vector<int> ridge;
        for (std::size_t k = 0; k < pts.size(); ++k)
          if (k != skip) ridge.push_back(pts[k]);
        const auto& owners = ridges.at(ridge);
        for (int other : owners) {
          if (other != fid && !visible[static_cast<std::size_t>(other)]) horizon.push_back(ridge);
        }
      }
    }
    for (int fid : visible_ids) {
      auto& f = facets[static_cast<std::size_t>(fid)];
      f.alive = false;
      for (std::size_t skip = 0; skip < f.pts.size(); ++skip) {
        std::vector<int> ridge;
        for (std::size_t k = 0; k < f.pts.size(); ++k)
          if (k != skip) ridge.push_back(f.pts[k]);
        auto it = ridges.find(ridge);
        auto& owners = it->second;
        owners.erase(std::remove(owners.begin(), owners.end(), fid), owners.end());
        if (owners.empty()) ridges.erase(it);
      }
    }
    for (auto& ridge : horizon) {
      ridge.push_back(i);
      add_facet(ridge);
    }
  }

  // Merge coplanar simplices into facets.
  std::map<IntVector, std::pair<IntVector, Integer>> planes;
  for (const auto& f : facets) {
    if (!f.alive) continue;
    std::vector<Integer> key = f.normal.coords();
    key.push_back(f.offset);
    planes.emplace(IntVector(std::move(key)), std::make_pair(f.normal, f.offset));
  }

  Hull hull;
  std::vector<std::vector<IntVector>> incident_normals(static_cast<std::size_t>(n));
  for (const auto& [key, plane] : planes) {
    HullFacet hf{plane.first, plane.second, {}};
    for (int i = 0; i < n; ++i) {
      if (dot(hf.normal, points[static_cast<std::size_t>(i)]) == hf.offset) {
        hf.point_ids.push_back(i);
        incident_normals[static_cast<std::size_t>(i)].push_back(hf.normal);
      }
    }
    hull.facets.push_back(std::move(hf));
  }
  for (int i = 0; i < n; ++i) {
    const auto& normals = incident_normals[static_cast<std::size_t>(i)];
    if (normals.size() >= d && rank(IntMatrix::from_rows(normals)) == d) hull.vertex_ids.push_back(i);
  }
  return hull;
}

}  // namespace stringy::detail
