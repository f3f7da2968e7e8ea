#include <algorithm>

#include "stringy/error.hpp"
#include "stringy/fano.hpp"
#include "stringy/stringy.hpp"

namespace stringy {

namespace {

const Integer kZero = 0;

// terms += (t - 1)^m * t^alpha
void add_shifted_power(std::map<Rational, Integer>& terms, int m, const Rational& alpha) {
  Integer binom = 1;
  for (int j = 0; j <= m; ++j) {
    Integer c = ((m - j) % 2 == 0) ? binom : Integer(-binom);
    terms[alpha + j] += c;
    binom = binom * (m - j) / (j + 1);
  }
}

void require_dim3_canonical(const LatticePolytope& p) {
  if (p.dim() != 3) fail(ErrorCode::UnsupportedDimension, "closed form needs d = 3");
  if (!is_canonical_fano(p)) fail(ErrorCode::NotCanonicalFano, "closed form needs a canonical Fano polytope");
}

}  // namespace

const Integer& StringyEFunction::coefficient(const Rational& alpha) const {
  auto it = terms.find(alpha);
  return it == terms.end() ? kZero : it->second;
}

bool StringyEFunction::is_symmetric() const {
  if (coefficient(0) != 1 || coefficient(dim) != 1) return false;
  return std::all_of(terms.begin(), terms.end(),
                     [&](const auto& t) { return coefficient(Rational(dim) - t.first) == t.second; });
}

std::string StringyEFunction::to_text() const {
  std::string out;
  for (const auto& [alpha, psi] : terms) {
    if (!out.empty()) out += " + ";
    out += to_string(psi) + "*(uv)^(" + to_string(alpha, true) + ")";
  }
  return out.empty() ? "0" : out;
}

StringyEFunction make_e_function(int dim, const std::map<Rational, Integer>& terms) {
  StringyEFunction e;
  e.dim = dim;
  for (const auto& [alpha, psi] : terms) {
    if (psi < 0)
      fail(ErrorCode::InternalInconsistency, "negative coefficient " + to_string(psi) + " at exponent " + to_string(alpha));
    if (psi == 0) continue;
    e.terms.emplace(alpha, psi);
    e.gorenstein_q = lcm(e.gorenstein_q, alpha.get_den());
  }
  return e;
}

StringyEFunction stringy_e_general(const LatticePolytope& p, SubdivisionStrategy strategy) {
  const int d = p.dim();
  if (d != 2 && d != 3) fail(ErrorCode::UnsupportedDimension, "E-functions need d = 2 or 3");
  if (!is_canonical_fano(p)) fail(ErrorCode::NotCanonicalFano, "E-functions need a canonical Fano polytope");
  Fan fan = simplicial_subdivision(spanning_fan(p), p, strategy);
  std::map<Rational, Integer> terms;
  for (int k = 0; k <= d; ++k) {
    for (const auto& cone : fan.cones[static_cast<std::size_t>(k)]) {
      for (const auto& bp : box_points(cone, static_cast<std::size_t>(d))) add_shifted_power(terms, d - k, k + bp.kappa);
    }
  }
  return make_e_function(d, terms);
}

StringyEFunction stringy_e_canonical3d(const LatticePolytope& p) {
  require_dim3_canonical(p);
  FaceLattice lattice = FaceLattice::build(p);
  Integer r = Integer(static_cast<unsigned long>(lattice_points(p).total())) - 4;
  std::map<Rational, Integer> terms{{0, 1}, {1, r}, {2, r}, {3, 1}};
  for (int id : lattice.of_dim(2)) {
    const Face& f = lattice.face(id);
    Integer n = -p.facets()[static_cast<std::size_t>(f.facets.front())].halfspace.offset;
    if (n <= 1) continue;
    const Rational& v = f.normalized_volume;
    if (v.get_den() != 1) fail(ErrorCode::InternalInconsistency, "lattice facet with fractional volume");
    for (Integer k = 1; k < n; ++k) terms[make_rational(k, n) + 1] += v.get_num();
  }
  return make_e_function(3, terms);
}

StringyEFunction stringy_e_ldp(const LatticePolytope& p) {
  if (p.dim() != 2) fail(ErrorCode::NotLDP, "LDP polygons are two-dimensional");
  ClassificationReport rep = classify(p);
  if (!rep.is_ldp_polygon) fail(ErrorCode::NotLDP, "origin not interior or a vertex is not primitive");
  Fan fan = spanning_fan(p);
  LatticePoints pts = lattice_points(p);
  Integer r = Integer(static_cast<unsigned long>(pts.boundary.size())) - 2;
  std::map<Rational, Integer> terms{{0, 1}, {1, r}, {2, 1}};
  for (const auto& n : pts.interior) {
    if (n.is_zero()) continue;
    Rational k = kappa(fan, n);
    terms[2 + k] += 1;
    terms[-k] += 1;
  }
  return make_e_function(2, terms);
}

Rational stringy_euler(const StringyEFunction& e) {
  Rational sum = 0;
  for (const auto& [alpha, psi] : e.terms) sum += psi;
  return sum;
}

}  // namespace stringy
