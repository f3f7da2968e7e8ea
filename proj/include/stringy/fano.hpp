#pragma once

#include <optional>

#include "stringy/polytope.hpp"

namespace stringy {

struct ClassificationReport {
  int dim = 0;
  bool origin_interior = false;
  bool is_canonical_fano = false;
  bool is_reflexive = false;
  bool is_almost_pseudoreflexive = false;
  bool is_pseudoreflexive = false;
  bool is_almost_reflexive = false;
  bool is_ldp_polygon = false;  // dim 2 only
  std::size_t interior_point_count = 0;
  std::size_t boundary_point_count = 0;
  std::size_t dual_lattice_point_count = 0;  // |Δ* ∩ M|, 0 when the origin is not interior

  /// The implication chain and the d <= 4 equivalences that must hold for any input.
  bool consistent() const;
};

/// [Δ*] = conv(Δ* ∩ M), or nullopt when those points are not full-dimensional.
/// Throws OriginNotInterior.
std::optional<LatticePolytope> lattice_hull_of_dual(const LatticePolytope& p);

ClassificationReport classify(const LatticePolytope& p);

/// Reflexivity read off the facets (all lattice distances 1); must agree with
/// the dual-denominator test used by classify().
bool all_facets_at_distance_one(const LatticePolytope& p);

bool is_canonical_fano(const LatticePolytope& p);

}  // namespace stringy
