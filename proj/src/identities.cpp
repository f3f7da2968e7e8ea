#include "stringy/identities.hpp"

#include "stringy/error.hpp"
#include "stringy/fano.hpp"

namespace stringy {

namespace {

void require_almost_pseudoreflexive(const LatticePolytope& p) {
  if (p.dim() != 3 && p.dim() != 4) fail(ErrorCode::UnsupportedDimension, "Calabi-Yau Euler numbers need d = 3 or 4");
  if (!p.origin_in_interior() || !classify(p).is_almost_pseudoreflexive)
    fail(ErrorCode::NotAlmostPseudoreflexive, "polytope is not almost pseudoreflexive");
}

int alternating(int dim) { return (dim - 1) % 2 == 0 ? 1 : -1; }

std::vector<RatVector> dual_vertices(const DualPair& pair, const Face& theta) {
  const Face& dual = pair.dual_faces.face(*theta.dual_face_id);
  std::vector<RatVector> out;
  for (int id : dual.vertex_ids) out.push_back(pair.dual.vertices()[static_cast<std::size_t>(id)]);
  return out;
}

// Exact conversion of a signed 128-bit accumulator.
Integer to_integer(__int128 x) {
  bool neg = x < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-x) : static_cast<unsigned __int128>(x);
  Integer hi = static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64));
  Integer lo = static_cast<unsigned long>(static_cast<std::uint64_t>(u));
  Integer r = (hi << 64) + lo;
  return neg ? Integer(-r) : r;
}

}  // namespace

Identity24Report identity24(const LatticePolytope& p) {
  if (p.dim() != 3) fail(ErrorCode::UnsupportedDimension, "the 24 identity needs d = 3");
  if (!is_canonical_fano(p)) fail(ErrorCode::NotCanonicalFano, "the 24 identity needs a canonical Fano polytope");
  DualPair pair = analyze(p);
  Identity24Report r;
  r.volume_term = pair.faces.face(pair.faces.top()).normalized_volume;
  for (int id : pair.faces.of_dim(2)) {
    const Face& f = pair.faces.face(id);
    r.facet_term += f.normalized_volume / *f.lattice_distance;
  }
  for (int id : pair.faces.of_dim(1)) {
    const Face& f = pair.faces.face(id);
    r.edge_term += f.normalized_volume * pair.dual_faces.face(*f.dual_face_id).normalized_volume;
  }
  r.total = r.volume_term - r.facet_term + r.edge_term;
  r.holds = r.total == 24;
  return r;
}

// The face-type sum Σ (-1)^{dim θ - 1} v(θ)·v(σ^θ ∩ Δ*) with the pyramid volumes
// replaced by 1, 1/n_θ and v(θ*).  The sign of the first two terms is
// (-1)^{d-1}, which is +1 in the three-dimensional case.
Rational cy_stringy_euler(const LatticePolytope& p) {
  require_almost_pseudoreflexive(p);
  const int d = p.dim();
  DualPair pair = analyze(p);
  Rational facets = 0;
  for (int id : pair.faces.of_dim(d - 1)) {
    const Face& f = pair.faces.face(id);
    facets += f.normalized_volume / *f.lattice_distance;
  }
  Rational total = alternating(d) * (pair.faces.face(pair.faces.top()).normalized_volume - facets);
  for (int k = 1; k <= d - 2; ++k) {
    for (int id : pair.faces.of_dim(k)) {
      const Face& f = pair.faces.face(id);
      total += alternating(k) * f.normalized_volume * pair.dual_faces.face(*f.dual_face_id).normalized_volume;
    }
  }
  return total;
}

Rational cy_stringy_euler_normalfan(const LatticePolytope& p) {
  require_almost_pseudoreflexive(p);
  const int d = p.dim();
  DualPair pair = analyze(p);
  Rational total = 0;
  for (int k = 1; k <= d; ++k) {
    for (int id : pair.faces.of_dim(k)) {
      const Face& f = pair.faces.face(id);
      std::vector<RatVector> pyramid{RatVector(static_cast<std::size_t>(d))};
      for (auto& y : dual_vertices(pair, f)) pyramid.push_back(std::move(y));
      total += alternating(k) * f.normalized_volume * hull_volume(pyramid);
    }
  }
  return total;
}

LibgoberWoodReport libgober_wood(const LatticePolytope& p) {
  const int d = p.dim();
  if (d != 2 && d != 3) fail(ErrorCode::UnsupportedDimension, "the Libgober-Wood identity needs d = 2 or 3");
  StringyEFunction e = stringy_e_general(p, SubdivisionStrategy::AllBoundaryPoints);
  LibgoberWoodReport r;
  const Rational half_d = make_rational(d, 2);
  for (const auto& [alpha, psi] : e.terms) {
    Rational x = alpha - half_d;
    r.lhs += psi * x * x;
  }

  Fan fan = spanning_fan(p);
  DualPair pair = analyze(p);
  auto cone_volume = [&](const Cone& c) {
    std::vector<IntVector> pts{IntVector(static_cast<std::size_t>(d))};
    pts.insert(pts.end(), c.generators.begin(), c.generators.end());
    return hull_volume(pts);
  };
  Rational v_sigma = 0;
  for (const auto& c : fan.cones[static_cast<std::size_t>(d)]) v_sigma += cone_volume(c);
  r.rhs_volume = make_rational(d, 12) * v_sigma;
  Rational mixed = 0;
  for (const auto& c : fan.cones[static_cast<std::size_t>(d - 1)]) {
    const Face& theta = pair.faces.face(*c.face_id);
    mixed += cone_volume(c) * pair.dual_faces.face(*theta.dual_face_id).normalized_volume;
  }
  r.rhs_mixed = mixed / 6;
  r.holds = r.lhs == r.rhs_volume + r.rhs_mixed;
  return r;
}

Rational gauss_sum(std::uint64_t n) {
  if (n == 0) fail(ErrorCode::InvalidArgument, "gauss_sum needs n >= 1");
  // 1/4 - (k/n - 1/2)² = (n² - (2k - n)²) / (4n²)
  Integer numerator = 0;
  if (n < (std::uint64_t{1} << 31)) {
    const auto nn = static_cast<std::int64_t>(n);
    __int128 acc = 0;
    for (std::int64_t k = 1; k < nn; ++k) {
      std::int64_t m = 2 * k - nn;
      acc += nn * nn - m * m;
    }
    numerator = to_integer(acc);
  } else {
    Integer big = to_integer(static_cast<__int128>(n));
    for (std::uint64_t k = 1; k < n; ++k) {
      Integer m = 2 * to_integer(static_cast<__int128>(k)) - big;
      numerator += big * big - m * m;
    }
  }
  Integer big = to_integer(static_cast<__int128>(n));
  return make_rational(6 * numerator, 4 * big * big);
}

}  // namespace stringy
