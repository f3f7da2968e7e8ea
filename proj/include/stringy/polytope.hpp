#pragma once

// Lattice and rational polytopes in dimension 2..4.
//
// A LatticePolytope is stored by its vertices (lexicographically sorted) and
// its facet inequalities <m, x> >= c with m the primitive inner normal.  Face
// lattices, duals and lattice points are computed on demand by the free
// functions below; all results are immutable values.

#include <optional>
#include <span>
#include <vector>

#include "stringy/exact_linalg.hpp"

namespace stringy {

struct Halfspace {
  IntVector normal;  // primitive inner normal m
  Integer offset;    // <m, x> >= offset on the polytope

  bool contains(const IntVector& x) const { return dot(normal, x) >= offset; }
  bool on_boundary(const IntVector& x) const { return dot(normal, x) == offset; }
};

struct FacetData {
  Halfspace halfspace;
  std::vector<int> vertex_ids;  // sorted
};

class LatticePolytope {
 public:
  /// Convex hull of `points` in Z^dim.  Redundant points are dropped; duplicate
  /// points raise DegenerateInput, lower-dimensional input NotFullDimensional.
  static LatticePolytope hull_of(std::span<const IntVector> points, int dim);

  int dim() const noexcept { return dim_; }
  const std::vector<IntVector>& vertices() const noexcept { return vertices_; }
  const std::vector<FacetData>& facets() const noexcept { return facets_; }

  bool contains(const IntVector& x) const;
  bool in_interior(const IntVector& x) const;
  bool origin_in_interior() const;

  /// Image under x -> k*x for integer k > 0.
  LatticePolytope scaled(const Integer& k) const;

  friend bool operator==(const LatticePolytope& a, const LatticePolytope& b) {
    return a.dim_ == b.dim_ && a.vertices_ == b.vertices_;
  }

 private:
  int dim_ = 0;
  std::vector<IntVector> vertices_;
  std::vector<FacetData> facets_;
};

/// Alias matching the operation name used throughout the docs.
inline LatticePolytope convex_hull(std::span<const IntVector> points, int dim) {
  return LatticePolytope::hull_of(points, dim);
}

/// A polytope with rational vertices.  `scaled()` is l * P for the minimal
/// l making every vertex integral; vertex order agrees with scaled().vertices().
class RationalPolytope {
 public:
  static RationalPolytope hull_of(std::span<const RatVector> points, int dim);

  int dim() const noexcept { return scaled_.dim(); }
  const std::vector<RatVector>& vertices() const noexcept { return vertices_; }
  const Integer& denominator() const noexcept { return denominator_; }
  const LatticePolytope& scaled() const noexcept { return scaled_; }

  bool is_lattice() const { return denominator_ == 1; }
  bool contains(const IntVector& x) const;
  bool in_interior(const IntVector& x) const;

 private:
  std::vector<RatVector> vertices_;
  Integer denominator_ = 1;
  LatticePolytope scaled_;
};

struct Face {
  int id = 0;
  int dim = 0;                      // -1 for the empty face, d for the polytope itself
  std::vector<int> vertex_ids;      // sorted indices into the polytope's vertices
  Rational normalized_volume = 0;   // v(θ); 1 for vertices, 0 for the empty face
  std::optional<IntVector> inner_normal;      // facets only
  std::optional<Rational> lattice_distance;   // facets only, origin interior
  std::optional<int> dual_face_id;            // into the dual polytope's face lattice
  std::vector<int> subfaces;        // faces of dimension dim - 1 contained in this one
  std::vector<int> superfaces;      // faces of dimension dim + 1 containing this one
  std::vector<int> facets;          // facet ids (into LatticePolytope::facets()) containing this face
};

class FaceLattice {
 public:
  /// Combinatorics and normalized volumes, no dual information.  Faces are
  /// ordered by (dim, vertex ids), so ids are reproducible.
  static FaceLattice build(const LatticePolytope& p);
  /// Same for a rational polytope: volumes are v(l θ) / l^k.
  static FaceLattice build(const RationalPolytope& p);

  int dim() const noexcept { return dim_; }
  const std::vector<Face>& faces() const noexcept { return faces_; }
  const Face& face(int id) const { return faces_.at(static_cast<std::size_t>(id)); }
  /// Ids of all faces of dimension k (k in [-1, d]).
  const std::vector<int>& of_dim(int k) const;
  std::size_t count(int k) const { return of_dim(k).size(); }
  /// Face with exactly this (sorted) vertex set, if any.
  std::optional<int> find(const std::vector<int>& vertex_ids) const;
  int top() const { return of_dim(dim_).front(); }

  Face& mutable_face(int id) { return faces_.at(static_cast<std::size_t>(id)); }

 private:
  int dim_ = 0;
  std::vector<Face> faces_;
  std::vector<std::vector<int>> by_dim_;
};

/// Face lattice with facet normals, lattice distances and dual-face links.
/// Distances and links are filled only when the origin is interior.
FaceLattice face_lattice(const LatticePolytope& p);

/// Δ* = {y : <y, x> >= -1 for all x in Δ}.  Throws OriginNotInterior.
RationalPolytope dual_polytope(const LatticePolytope& p);

/// Everything the identity verifiers need about Δ and Δ*, computed once.
struct DualPair {
  LatticePolytope polytope;
  FaceLattice faces;
  RationalPolytope dual;
  FaceLattice dual_faces;
};

/// Throws OriginNotInterior.
DualPair analyze(const LatticePolytope& p);

struct LatticePoints {
  std::vector<IntVector> boundary;   // lexicographic order
  std::vector<IntVector> interior;   // lexicographic order
  std::size_t total() const { return boundary.size() + interior.size(); }
};

LatticePoints lattice_points(const LatticePolytope& p);
LatticePoints lattice_points(const RationalPolytope& p);

/// Normalized volume of a face of `lattice`.
Rational normalized_volume(const FaceLattice& lattice, int face_id);

/// Normalized volume of conv(points) measured in the lattice span(points) ∩ Z^n.
/// Works in any affine dimension 0..4; a single point has volume 1.
Rational hull_volume(std::span<const IntVector> points);
Rational hull_volume(std::span<const RatVector> points);

/// n_θ for a facet.  Throws NotAFacet / OriginNotInterior.
Rational lattice_distance(const LatticePolytope& p, const FaceLattice& lattice, int face_id);

}  // namespace stringy
