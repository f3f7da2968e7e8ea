#pragma once

#include <cstdint>

#include "stringy/polytope.hpp"
#include "stringy/stringy.hpp"

namespace stringy {

struct Identity24Report {
  Rational volume_term;  // v(Δ)
  Rational facet_term;   // Σ_facets v(θ)/n_θ
  Rational edge_term;    // Σ_edges v(θ)·v(θ*)
  Rational total;        // volume_term - facet_term + edge_term
  bool holds = false;    // total == 24
};

struct LibgoberWoodReport {
  Rational lhs;          // Σ ψ_α (α - d/2)²
  Rational rhs_volume;   // d/12 · v(Σ)
  Rational rhs_mixed;    // 1/6 · Σ_{σ ∈ Σ(d-1)} v(σ)·v(Δ*^σ)
  bool holds = false;
};

/// Canonical Fano, d = 3.  Throws UnsupportedDimension / NotCanonicalFano.
Identity24Report identity24(const LatticePolytope& p);

/// Stringy Euler number of the Calabi-Yau hypersurface from v(θ), 1/n_θ and v(θ*).
/// Almost pseudoreflexive, d in {3, 4}.  Throws UnsupportedDimension / NotAlmostPseudoreflexive.
Rational cy_stringy_euler(const LatticePolytope& p);

/// Same number with v(σ^θ ∩ Δ*) computed as the volume of the pyramid conv(0, θ*).
Rational cy_stringy_euler_normalfan(const LatticePolytope& p);

/// Canonical Fano, d in {2, 3}.  The E-function comes from the general formula.
LibgoberWoodReport libgober_wood(const LatticePolytope& p);

/// 6·Σ_{k=1}^{n-1} (1/4 - (k/n - 1/2)²) by direct summation.  Throws InvalidArgument for n = 0.
Rational gauss_sum(std::uint64_t n);

}  // namespace stringy
