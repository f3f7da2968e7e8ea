#pragma once

// Exact beneath-beyond convex hull in Z^d.  Internal to the polytope module
// but exposed for tests.

#include <span>
#include <vector>

#include "stringy/exact_linalg.hpp"

namespace stringy::detail {

struct HullFacet {
  IntVector normal;             // primitive inner normal
  Integer offset;               // <normal, x> >= offset on the hull
  std::vector<int> point_ids;   // input points lying on the facet hyperplane, sorted
};

struct Hull {
  std::vector<int> vertex_ids;  // indices of input points that are vertices, sorted
  std::vector<HullFacet> facets;
};

/// Points must be pairwise distinct and span Z^d affinely (NotFullDimensional otherwise).
Hull compute_hull(std::span<const IntVector> points, int dim);

/// Primitive normal of the hyperplane through d affinely independent points in Z^d.
IntVector hyperplane_normal(std::span<const IntVector> points);

}  // namespace stringy::detail
