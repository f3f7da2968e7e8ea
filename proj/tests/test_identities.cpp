#include <doctest.h>

#include "corpus.hpp"
#include "stringy/error.hpp"
#include "stringy/identities.hpp"

using namespace stringy;

namespace {

Rational q(long a, long b) { return make_rational(a, b); }

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("identity24 goldens") {
  Identity24Report r1 = identity24(corpus::delta1());
  CHECK(r1.volume_term == 4);
  CHECK(r1.facet_term == 4);
  CHECK(r1.edge_term == 24);
  CHECK(r1.holds);

  Identity24Report r2 = identity24(corpus::delta2());
  CHECK(r2.volume_term == 5);
  CHECK(r2.facet_term == q(7, 2));
  CHECK(r2.edge_term == q(45, 2));
  CHECK(r2.total == 24);

  Identity24Report r3 = identity24(corpus::delta3());
  CHECK(r3.volume_term == 20);
  CHECK(r3.facet_term == q(26, 3));
  CHECK(r3.edge_term == q(38, 3));
  CHECK(r3.holds);

  CHECK(code_of([] { identity24(corpus::p2_polygon()); }) == ErrorCode::UnsupportedDimension);
  CHECK(code_of([] { identity24(corpus::make({{2, 0, 0}, {0, 2, 0}, {0, 0, 2}, {-2, -2, -2}})); }) ==
        ErrorCode::NotCanonicalFano);
}

TEST_CASE("identity24 holds and is GL(3, Z) invariant on random canonical simplices") {
  for (const auto& s : corpus::canonical_simplices(80, 17)) {
    Identity24Report r = identity24(s.polytope);
    CHECK(r.holds);
    Identity24Report base = identity24(corpus::simplex_abc(s.abc[0], s.abc[1], s.abc[2]));
    CHECK(r.volume_term == base.volume_term);
    CHECK(r.facet_term == base.facet_term);
    CHECK(r.edge_term == base.edge_term);
    // Reflexive inputs have all facets at distance one, so the facet term is the volume.
    if (classify(s.polytope).is_reflexive) CHECK(r.facet_term == r.volume_term);
  }
}

TEST_CASE("Calabi-Yau stringy Euler number by both routes") {
  CHECK(cy_stringy_euler(corpus::delta1()) == 24);
  CHECK(cy_stringy_euler_normalfan(corpus::delta1()) == 24);
  CHECK(cy_stringy_euler(corpus::delta2()) == 24);
  CHECK(cy_stringy_euler_normalfan(corpus::delta2()) == 24);
  CHECK(code_of([] { cy_stringy_euler(corpus::delta3()); }) == ErrorCode::NotAlmostPseudoreflexive);
  CHECK(code_of([] { cy_stringy_euler_normalfan(corpus::p2_polygon()); }) == ErrorCode::UnsupportedDimension);

  // conv(e1..e4, -Σe): 0 from the volume and facet terms, 10·25 from edges, -10·5 from 2-faces.
  CHECK(cy_stringy_euler(corpus::simplex4()) == 200);
  CHECK(cy_stringy_euler_normalfan(corpus::simplex4()) == 200);

  // Non-reflexive almost reflexive 4-simplices where every face of dimension <= 2 lies at
  // lattice distance 1 from the origin in its own span: the two routes agree.
  for (std::array<long, 4> w : {std::array<long, 4>{1, 1, 1, 3}, {1, 1, 2, 3}, {1, 2, 2, 4}}) {
    LatticePolytope p = corpus::make({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {-w[0], -w[1], -w[2], -w[3]}});
    ClassificationReport r = classify(p);
    REQUIRE(r.is_almost_pseudoreflexive);
    CHECK_FALSE(r.is_reflexive);
    CHECK(cy_stringy_euler(p) == cy_stringy_euler_normalfan(p));
  }
}

TEST_CASE("the v(θ*) shortcut breaks for a 2-face at lattice distance 2 in d = 4") {
  // conv(e1..e4, -(1,1,2,2)): the 2-face conv(e1, e2, -(1,1,2,2)) spans a saturated plane in
  // which it sits at distance 2 from 0, so its pyramid over θ* has volume v(θ*)/2 = 7/4, not 7/2.
  LatticePolytope p = corpus::make({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {-1, -1, -2, -2}});
  REQUIRE(classify(p).is_almost_pseudoreflexive);
  CHECK(cy_stringy_euler_normalfan(p) == 186);
  CHECK(cy_stringy_euler(p) == q(737, 4));
  CHECK(cy_stringy_euler_normalfan(p) - cy_stringy_euler(p) == q(7, 4));
}

TEST_CASE("Calabi-Yau Euler number is 24 on almost reflexive canonical simplices") {
  int seen = 0;
  for (const auto& s : corpus::canonical_simplices(80, 19)) {
    if (!classify(s.polytope).is_almost_pseudoreflexive) continue;
    ++seen;
    CHECK(cy_stringy_euler(s.polytope) == 24);
    CHECK(cy_stringy_euler_normalfan(s.polytope) == 24);
  }
  CHECK(seen > 10);
}

TEST_CASE("Libgober-Wood identity") {
  LibgoberWoodReport r1 = libgober_wood(corpus::delta1());
  CHECK(r1.lhs == 5);
  CHECK(r1.rhs_volume == 1);
  CHECK(r1.rhs_mixed == 4);
  CHECK(r1.holds);

  LibgoberWoodReport r2 = libgober_wood(corpus::delta2());
  CHECK(r2.lhs == 5);
  CHECK(r2.holds);
  CHECK(libgober_wood(corpus::delta3()).holds);

  // d = 2: Σ ψ (α - 1)² = 2 for the P2 polygon, and v(Σ)/6 + Σ v(θ*)/6 = 3/6 + 9/6.
  LibgoberWoodReport rp = libgober_wood(corpus::p2_polygon());
  CHECK(rp.lhs == 2);
  CHECK(rp.rhs_volume == q(1, 2));
  CHECK(rp.rhs_mixed == q(3, 2));
  CHECK(rp.holds);

  for (const auto& s : corpus::canonical_simplices(40, 23)) CHECK(libgober_wood(s.polytope).holds);
  CHECK(code_of([] { libgober_wood(corpus::simplex4()); }) == ErrorCode::UnsupportedDimension);
}

TEST_CASE("gauss_sum") {
  CHECK(gauss_sum(1) == 0);
  CHECK(gauss_sum(2) == q(3, 2));
  CHECK(gauss_sum(3) == q(8, 3));
  for (std::uint64_t n = 1; n <= 300; ++n) {
    // Independent route: the terms 6·(1/4 - (k/n - 1/2)²) summed as rationals.
    Rational direct = 0;
    for (std::uint64_t k = 1; k < n; ++k) {
      Rational x = make_rational(static_cast<long>(k), static_cast<long>(n)) - q(1, 2);
      direct += 6 * (q(1, 4) - x * x);
    }
    CHECK(gauss_sum(n) == direct);
    CHECK(gauss_sum(n) == Rational(static_cast<long>(n)) - make_rational(1, static_cast<long>(n)));
  }
  CHECK(code_of([] { gauss_sum(0); }) == ErrorCode::InvalidArgument);
}
