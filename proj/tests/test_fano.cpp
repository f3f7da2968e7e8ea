#include <doctest.h>

#include <random>

#include "corpus.hpp"
#include "stringy/error.hpp"
#include "stringy/fano.hpp"

using namespace stringy;

TEST_CASE("classification of the worked examples") {
  ClassificationReport r1 = classify(corpus::delta1());
  CHECK(r1.is_canonical_fano);
  CHECK(r1.is_reflexive);
  CHECK(r1.is_almost_reflexive);
  CHECK(r1.is_pseudoreflexive);

  ClassificationReport r2 = classify(corpus::delta2());
  CHECK(r2.is_canonical_fano);
  CHECK_FALSE(r2.is_reflexive);
  CHECK(r2.is_almost_reflexive);
  CHECK(r2.is_almost_pseudoreflexive);
  CHECK_FALSE(r2.is_pseudoreflexive);

  ClassificationReport r3 = classify(corpus::delta3());
  CHECK(r3.is_canonical_fano);
  CHECK_FALSE(r3.is_almost_reflexive);
  CHECK_FALSE(r3.is_almost_pseudoreflexive);
  CHECK(r3.interior_point_count == 1);
  CHECK(r3.boundary_point_count == 8);

  ClassificationReport rm = classify(corpus::ldp3_polygon());
  CHECK(rm.is_ldp_polygon);
  CHECK_FALSE(rm.is_canonical_fano);

  for (const auto* r : {&r1, &r2, &r3, &rm}) CHECK(r->consistent());
}

TEST_CASE("lattice hull of the dual") {
  auto h1 = lattice_hull_of_dual(corpus::delta1());
  REQUIRE(h1);
  RationalPolytope d1 = dual_polytope(corpus::delta1());
  CHECK(*h1 == d1.scaled());

  auto h2 = lattice_hull_of_dual(corpus::delta2());
  REQUIRE(h2);
  CHECK(h2->origin_in_interior());
  CHECK(h2->contains(IntVector{-1, -1, 1}));
  CHECK(h2->contains(IntVector{4, -1, -1}));

  auto h3 = lattice_hull_of_dual(corpus::delta3());
  REQUIRE(h3);
  CHECK_FALSE(h3->origin_in_interior());

  try {
    lattice_hull_of_dual(LatticePolytope::hull_of(std::vector<IntVector>{{0, 0}, {2, 0}, {0, 2}}, 2));
    FAIL("expected OriginNotInterior");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::OriginNotInterior);
  }
}

TEST_CASE("origin outside gives all Fano flags false") {
  LatticePolytope p = LatticePolytope::hull_of(std::vector<IntVector>{{1, 1}, {3, 1}, {1, 4}}, 2);
  ClassificationReport r = classify(p);
  CHECK_FALSE(r.origin_interior);
  CHECK_FALSE(r.is_canonical_fano);
  CHECK_FALSE(r.is_reflexive);
  CHECK_FALSE(r.is_ldp_polygon);
  CHECK(r.interior_point_count + r.boundary_point_count == 7);
}

TEST_CASE("classification invariants on random polytopes") {
  std::mt19937 rng(41);
  std::uniform_int_distribution<long> wide(-3, 3), narrow(-1, 1);
  int canonical_polygons = 0;
  int canonical_3d = 0;
  for (int t = 0; t < 400; ++t) {
    std::size_t d = 2 + t % 2;
    auto& coord = (t / 2) % 2 ? wide : narrow;
    std::vector<IntVector> pts;
    for (std::size_t i = 0; i < d + 2 + static_cast<std::size_t>(t % 5); ++i) {
      IntVector v(d);
      for (auto& x : v) x = coord(rng);
      if (std::find(pts.begin(), pts.end(), v) == pts.end()) pts.push_back(v);
    }
    if (affine_rank(pts) < d) continue;
    LatticePolytope p = LatticePolytope::hull_of(pts, static_cast<int>(d));
    ClassificationReport r = classify(p);
    CHECK(r.consistent());
    if (!r.origin_interior) continue;
    CHECK(r.is_reflexive == all_facets_at_distance_one(p));
    if (d == 2 && r.is_canonical_fano) {
      ++canonical_polygons;
      CHECK(r.is_reflexive);
    }
    if (d == 3 && r.is_canonical_fano) {
      ++canonical_3d;
      // Both routes to almost reflexivity agree.
      auto hull = lattice_hull_of_dual(p);
      bool inside = hull && hull->origin_in_interior();
      bool hull_reflexive = inside && dual_polytope(*hull).is_lattice();
      CHECK(inside == r.is_almost_reflexive);
      CHECK(hull_reflexive == r.is_almost_reflexive);
    }
  }
  CHECK(canonical_polygons > 5);
  CHECK(canonical_3d > 5);
}

TEST_CASE("the sixteen reflexive polygons are exactly the canonical Fano polygons in a small box") {
  // Every reflexive polygon fits in [-2, 2]^2 up to GL(2, Z); counting distinct vertex
  // sets is not an isomorphism test, so only the implication is checked here.
  std::vector<IntVector> box;
  for (long x = -2; x <= 2; ++x)
    for (long y = -2; y <= 2; ++y)
      if (x != 0 || y != 0) box.push_back({x, y});
  std::mt19937 rng(43);
  std::uniform_int_distribution<std::size_t> pick(0, box.size() - 1);
  for (int t = 0; t < 300; ++t) {
    std::vector<IntVector> pts;
    for (int i = 0; i < 4; ++i) {
      IntVector v = box[pick(rng)];
      if (std::find(pts.begin(), pts.end(), v) == pts.end()) pts.push_back(v);
    }
    if (affine_rank(pts) < 2) continue;
    LatticePolytope p = LatticePolytope::hull_of(pts, 2);
    ClassificationReport r = classify(p);
    if (r.is_canonical_fano) {
      CHECK(r.is_reflexive);
      CHECK(r.is_ldp_polygon);
      CHECK(r.boundary_point_count >= 3);
      CHECK(r.boundary_point_count <= 9);
    }
  }
}
