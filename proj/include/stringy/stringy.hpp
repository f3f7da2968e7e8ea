#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "stringy/polytope.hpp"

namespace stringy {

struct Cone {
  int id = 0;
  int dim = 0;
  std::vector<int> ray_ids;          // sorted indices into Fan::rays
  std::vector<IntVector> generators;  // primitive, in ray_ids order
  bool is_simplicial = true;
  std::optional<int> face_id;  // face θ of the polytope with σ = R≥0·θ, spanning fans only
};

struct Fan {
  int ambient_dim = 0;
  std::vector<IntVector> rays;
  std::vector<std::vector<Cone>> cones;  // cones[k] holds the k-dimensional cones, k = 0..d

  std::size_t count(int k) const { return cones.at(static_cast<std::size_t>(k)).size(); }
  bool is_simplicial() const;
};

struct BoxPoint {
  IntVector point;
  int cone_id = 0;
  std::vector<Rational> lambda;  // each in (0, 1]
  Rational kappa;                // -Σ lambda
};

enum class SubdivisionStrategy { VerticesOnly, AllBoundaryPoints };

/// Σ_Δ.  Throws OriginNotInterior.
Fan spanning_fan(const LatticePolytope& p);

/// Simplicial refinement of the spanning fan of a canonical Fano polytope, d in {2, 3}.
/// Throws UnsupportedDimension / NotCanonicalFano.
Fan simplicial_subdivision(const Fan& fan, const LatticePolytope& p, SubdivisionStrategy strategy);

/// Value of the piecewise linear function that is -1 on every ray generator.
/// The fan must be simplicial and complete.
Rational kappa(const Fan& fan, const IntVector& n);

/// Lattice points Σ λ_i u_i with every λ_i in (0, 1].  The zero cone yields {0}.
/// Throws NotSimplicial.
std::vector<BoxPoint> box_points(const Cone& cone, std::size_t ambient_dim);

/// Σ ψ_α (uv)^α.
struct StringyEFunction {
  int dim = 0;
  std::map<Rational, Integer> terms;  // zero coefficients never stored
  Integer gorenstein_q = 1;

  const Integer& coefficient(const Rational& alpha) const;
  /// ψ_0 = ψ_d = 1 and ψ_α = ψ_{d-α}.
  bool is_symmetric() const;
  /// "1*(uv)^(0/1) + 5*(uv)^(1/1) + ..." in ascending exponent order.
  std::string to_text() const;

  friend bool operator==(const StringyEFunction& a, const StringyEFunction& b) {
    return a.dim == b.dim && a.terms == b.terms;
  }
};

/// Builds the E-function from a raw term map, dropping zero terms and fixing q.
/// Throws InternalInconsistency on a negative coefficient.
StringyEFunction make_e_function(int dim, const std::map<Rational, Integer>& terms);

StringyEFunction stringy_e_general(const LatticePolytope& p, SubdivisionStrategy strategy);
StringyEFunction stringy_e_canonical3d(const LatticePolytope& p);
StringyEFunction stringy_e_ldp(const LatticePolytope& p);
Rational stringy_euler(const StringyEFunction& e);

}  // namespace stringy
