#include <doctest.h>

#include <random>

#include "corpus.hpp"
#include "stringy/error.hpp"
#include "stringy/stringy.hpp"

using namespace stringy;

namespace {

using Terms = std::map<Rational, Integer>;

Terms terms(std::initializer_list<std::pair<Rational, long>> xs) {
  Terms out;
  for (const auto& [a, c] : xs) out[a] = c;
  return out;
}

Rational q(long a, long b) { return make_rational(a, b); }

// Box points by scanning the bounding box of the closed parallelepiped.
std::vector<IntVector> brute_force_box(const Cone& cone, std::size_t d) {
  const auto& g = cone.generators;
  IntVector lo(d), hi(d);
  for (unsigned mask = 0; mask < (1u << g.size()); ++mask) {
    IntVector corner(d);
    for (std::size_t i = 0; i < g.size(); ++i)
      if (mask & (1u << i)) corner += g[i];
    for (std::size_t j = 0; j < d; ++j) {
      if (corner[j] < lo[j]) lo[j] = corner[j];
      if (corner[j] > hi[j]) hi[j] = corner[j];
    }
  }
  // Solve in a coordinate subspace where the generators are independent.
  std::vector<std::size_t> cols;
  for (std::size_t j = 0; j < d && cols.size() < g.size(); ++j) {
    std::vector<std::size_t> trial = cols;
    trial.push_back(j);
    IntMatrix m(g.size(), trial.size());
    for (std::size_t i = 0; i < g.size(); ++i)
      for (std::size_t c = 0; c < trial.size(); ++c) m(i, c) = g[i][trial[c]];
    if (rank(m) == trial.size()) cols = trial;
  }
  std::vector<IntVector> out;
  IntVector x = lo;
  while (true) {
    IntMatrix a(g.size(), g.size());
    IntVector b(g.size());
    for (std::size_t r = 0; r < g.size(); ++r) {
      for (std::size_t i = 0; i < g.size(); ++i) a(r, i) = g[i][cols[r]];
      b[r] = x[cols[r]];
    }
    RatVector lambda = solve_linear(a, b);
    IntVector back(d);
    bool in_box = true;
    RatVector sum(d);
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (lambda[i] <= 0 || lambda[i] > 1) in_box = false;
      for (std::size_t j = 0; j < d; ++j) sum[j] += lambda[i] * g[i][j];
    }
    for (std::size_t j = 0; j < d; ++j)
      if (sum[j] != x[j]) in_box = false;
    if (in_box) out.push_back(x);
    std::size_t j = 0;
    for (; j < d; ++j) {
      if (x[j] < hi[j]) {
        ++x[j];
        break;
      }
      x[j] = lo[j];
    }
    if (j == d) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

// κ from the facet description: the largest t with n ∈ -t·Δ is min_y <y, n> over dual vertices.
Rational kappa_by_dual(const LatticePolytope& p, const IntVector& n) {
  RationalPolytope dual = dual_polytope(p);
  Rational best = dot(dual.vertices().front(), n);
  for (const auto& y : dual.vertices()) best = std::min(best, dot(y, n));
  return best;
}

const Cone& find_cone(const Fan& fan, std::vector<IntVector> gens) {
  std::sort(gens.begin(), gens.end());
  for (const auto& c : fan.cones[gens.size()]) {
    auto g = c.generators;
    std::sort(g.begin(), g.end());
    if (g == gens) return c;
  }
  FAIL("cone not found");
  return fan.cones[0].front();
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("spanning fans") {
  Fan f1 = spanning_fan(corpus::delta1());
  CHECK(f1.count(0) == 1);
  CHECK(f1.count(1) == 4);
  CHECK(f1.count(2) == 6);
  CHECK(f1.count(3) == 4);
  CHECK(f1.is_simplicial());

  Fan f2 = spanning_fan(corpus::delta2());
  CHECK(f2.count(3) == 4);
  const Cone& c = find_cone(f2, {{1, 0, 0}, {0, 1, 0}, {-1, -1, -2}});
  std::vector<IntVector> pts{IntVector(3)};
  pts.insert(pts.end(), c.generators.begin(), c.generators.end());
  CHECK(hull_volume(pts) == 2);

  Fan fp = spanning_fan(corpus::p2_polygon());
  CHECK(fp.count(2) == 3);
  for (const auto& cone : fp.cones[2]) CHECK(abs(integer_det(IntMatrix::from_columns(cone.generators))) == 1);

  CHECK(code_of([] { spanning_fan(LatticePolytope::hull_of(std::vector<IntVector>{{0, 0}, {1, 0}, {0, 1}}, 2)); }) ==
        ErrorCode::OriginNotInterior);
}

TEST_CASE("simplicial subdivisions") {
  LatticePolytope d1 = corpus::delta1();
  Fan f1 = spanning_fan(d1);
  for (auto s : {SubdivisionStrategy::VerticesOnly, SubdivisionStrategy::AllBoundaryPoints}) {
    Fan sub = simplicial_subdivision(f1, d1, s);
    CHECK(sub.count(1) == 4);
    CHECK(sub.count(2) == 6);
    CHECK(sub.count(3) == 4);
    CHECK(sub.rays == f1.rays);
  }

  // The cube [-1, 1]^3 has square facets.
  LatticePolytope cube_like = corpus::make({{1, 1, 1}, {1, 1, -1}, {1, -1, 1}, {1, -1, -1},
                                            {-1, 1, 1}, {-1, 1, -1}, {-1, -1, 1}, {-1, -1, -1}});
  REQUIRE(is_canonical_fano(cube_like));
  Fan sf = spanning_fan(cube_like);
  CHECK_FALSE(sf.is_simplicial());
  Fan vo = simplicial_subdivision(sf, cube_like, SubdivisionStrategy::VerticesOnly);
  CHECK(vo.is_simplicial());
  CHECK(vo.count(3) == 2 * vo.count(1) - 4);
  CHECK(vo.count(3) == 2 * sf.count(3));

  std::mt19937 rng(47);
  auto samples = corpus::canonical_simplices(40, 99);
  std::vector<LatticePolytope> polys{corpus::delta2(), corpus::delta3(), cube_like};
  for (const auto& s : samples) polys.push_back(s.polytope);
  for (const auto& p : polys) {
    Fan fan = spanning_fan(p);
    Fan sub = simplicial_subdivision(fan, p, SubdivisionStrategy::AllBoundaryPoints);
    std::size_t rays = sub.count(1);
    CHECK(rays == lattice_points(p).total() - 1);
    CHECK(sub.count(3) == 2 * rays - 4);
    CHECK(sub.count(2) == 3 * rays - 6);
    // Unimodular on the boundary: every maximal cone has volume n_θ.
    for (const auto& c : sub.cones[3]) {
      Integer det = abs(integer_det(IntMatrix::from_columns(c.generators)));
      Rational k = kappa_by_dual(p, c.generators[0] + c.generators[1] + c.generators[2]);
      CHECK(k == -3);
      CHECK(det >= 1);
    }
    for (const auto& r : sub.rays) CHECK(kappa_by_dual(p, r) == -1);
  }

  CHECK(code_of([] {
          LatticePolytope p = corpus::simplex4();
          simplicial_subdivision(Fan{}, p, SubdivisionStrategy::VerticesOnly);
        }) == ErrorCode::UnsupportedDimension);
  CHECK(code_of([] {
          LatticePolytope p = corpus::make({{2, 0, 0}, {0, 2, 0}, {0, 0, 2}, {-2, -2, -2}});
          simplicial_subdivision(spanning_fan(p), p, SubdivisionStrategy::VerticesOnly);
        }) == ErrorCode::NotCanonicalFano);
}

TEST_CASE("kappa") {
  LatticePolytope d2 = corpus::delta2();
  Fan fan = simplicial_subdivision(spanning_fan(d2), d2, SubdivisionStrategy::VerticesOnly);
  CHECK(kappa(fan, IntVector{0, 0, 0}) == 0);
  for (const auto& r : fan.rays) CHECK(kappa(fan, r) == -1);
  CHECK(kappa(fan, IntVector{0, 0, -1}) == q(-3, 2));

  std::mt19937 rng(53);
  std::uniform_int_distribution<long> coord(-6, 6);
  auto samples = corpus::canonical_simplices(20, 7);
  for (const auto& s : samples) {
    Fan f = simplicial_subdivision(spanning_fan(s.polytope), s.polytope, SubdivisionStrategy::AllBoundaryPoints);
    for (int t = 0; t < 20; ++t) {
      IntVector n{coord(rng), coord(rng), coord(rng)};
      CHECK(kappa(f, n) == kappa_by_dual(s.polytope, n));
    }
  }
  CHECK(code_of([] {
          Fan f = spanning_fan(corpus::make({{1, 1, 1}, {1, 1, -1}, {1, -1, 1}, {1, -1, -1},
                                             {-1, 1, 1}, {-1, 1, -1}, {-1, -1, 1}, {-1, -1, -1}}));
          kappa(f, IntVector{1, 1, 1});
        }) == ErrorCode::NotSimplicial);
}

TEST_CASE("box points") {
  Cone unimodular;
  unimodular.dim = 3;
  unimodular.generators = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  auto b = box_points(unimodular, 3);
  REQUIRE(b.size() == 1);
  CHECK(b[0].point == IntVector{1, 1, 1});
  CHECK(b[0].kappa == -3);

  Cone c2;
  c2.dim = 3;
  c2.generators = {{1, 0, 0}, {0, 1, 0}, {-1, -1, -2}};
  auto b2 = box_points(c2, 3);
  REQUIRE(b2.size() == 2);
  CHECK(b2[0].point == IntVector{0, 0, -2});
  CHECK(b2[0].kappa == -3);
  CHECK(b2[1].point == IntVector{0, 0, -1});
  CHECK(b2[1].kappa == q(-3, 2));

  Cone plane;
  plane.dim = 2;
  plane.generators = {{1, 0, 0}, {0, 1, 0}};
  auto bp = box_points(plane, 3);
  REQUIRE(bp.size() == 1);
  CHECK(bp[0].point == IntVector{1, 1, 0});
  CHECK(bp[0].kappa == -2);

  Cone zero;
  zero.dim = 0;
  auto bz = box_points(zero, 3);
  REQUIRE(bz.size() == 1);
  CHECK(bz[0].point.is_zero());
  CHECK(bz[0].kappa == 0);

  Cone bad;
  bad.dim = 2;
  bad.is_simplicial = false;
  bad.generators = {{1, 0}, {0, 1}, {1, 1}};
  CHECK(code_of([&] { box_points(bad, 2); }) == ErrorCode::NotSimplicial);

  // Coset enumeration against a bounding-box scan, with the invariants of each record.
  std::mt19937 rng(59);
  std::uniform_int_distribution<long> coord(-4, 4);
  for (int t = 0; t < 150; ++t) {
    std::size_t d = 2 + t % 2;
    std::size_t k = 1 + t % d;
    Cone c;
    c.dim = static_cast<int>(k);
    for (std::size_t i = 0; i < k; ++i) {
      IntVector v(d);
      for (auto& x : v) x = coord(rng);
      if (v.is_zero()) v[0] = 1;
      c.generators.push_back(make_primitive(v));
    }
    if (affine_rank([&] {
          std::vector<IntVector> pts{IntVector(d)};
          pts.insert(pts.end(), c.generators.begin(), c.generators.end());
          return pts;
        }()) < k)
      continue;
    auto fast = box_points(c, d);
    std::vector<IntVector> fast_points;
    for (const auto& bp2 : fast) {
      fast_points.push_back(bp2.point);
      Rational sum = 0;
      RatVector rebuilt(d);
      for (std::size_t i = 0; i < k; ++i) {
        CHECK(bp2.lambda[i] > 0);
        CHECK(bp2.lambda[i] <= 1);
        sum += bp2.lambda[i];
        for (std::size_t j = 0; j < d; ++j) rebuilt[j] += bp2.lambda[i] * c.generators[i][j];
      }
      CHECK(bp2.kappa == -sum);
      CHECK(rebuilt == RatVector(bp2.point));
    }
    CHECK(fast_points == brute_force_box(c, d));
  }
}

TEST_CASE("E-function goldens") {
  CHECK(stringy_e_canonical3d(corpus::delta1()).terms == terms({{0, 1}, {1, 1}, {2, 1}, {3, 1}}));
  CHECK(stringy_e_canonical3d(corpus::delta2()).terms == terms({{0, 1}, {1, 1}, {q(3, 2), 1}, {2, 1}, {3, 1}}));
  StringyEFunction e3 = stringy_e_canonical3d(corpus::delta3());
  CHECK(e3.terms == terms({{0, 1}, {1, 5}, {q(4, 3), 2}, {q(3, 2), 4}, {q(5, 3), 2}, {2, 5}, {3, 1}}));
  CHECK(e3.gorenstein_q == 6);
  CHECK(stringy_euler(e3) == 20);

  for (auto s : {SubdivisionStrategy::VerticesOnly, SubdivisionStrategy::AllBoundaryPoints}) {
    CHECK(stringy_e_general(corpus::delta1(), s).terms == terms({{0, 1}, {1, 1}, {2, 1}, {3, 1}}));
    CHECK(stringy_e_general(corpus::delta2(), s).terms == terms({{0, 1}, {1, 1}, {q(3, 2), 1}, {2, 1}, {3, 1}}));
    CHECK(stringy_e_general(corpus::delta3(), s) == e3);
    CHECK(stringy_e_general(corpus::p2_polygon(), s).terms == terms({{0, 1}, {1, 1}, {2, 1}}));
  }

  StringyEFunction p2 = stringy_e_ldp(corpus::p2_polygon());
  CHECK(p2.terms == terms({{0, 1}, {1, 1}, {2, 1}}));
  CHECK(stringy_euler(p2) == 3);
  CHECK(stringy_e_ldp(corpus::ldp3_polygon()).terms == terms({{0, 1}, {q(2, 3), 1}, {1, 1}, {q(4, 3), 1}, {2, 1}}));

  CHECK(stringy_e_canonical3d(corpus::delta2()).to_text() ==
        "1*(uv)^(0/1) + 1*(uv)^(1/1) + 1*(uv)^(3/2) + 1*(uv)^(2/1) + 1*(uv)^(3/1)");
}

TEST_CASE("reflexive polygons have E = (uv)^2 + (b - 2) uv + 1") {
  std::vector<LatticePolytope> polys{corpus::p2_polygon(), corpus::make({{1, 0}, {0, 1}, {-1, 0}, {0, -1}}),
                                     corpus::make({{1, 0}, {0, 1}, {-1, -1}, {1, 1}, {-1, 0}, {0, -1}}),
                                     corpus::make({{-1, -1}, {2, -1}, {-1, 2}})};
  for (const auto& p : polys) {
    Integer b = Integer(static_cast<unsigned long>(lattice_points(p).boundary.size()));
    Terms expected{{0, 1}, {1, b - 2}, {2, 1}};
    CHECK(stringy_e_ldp(p).terms == expected);
    CHECK(stringy_e_general(p, SubdivisionStrategy::VerticesOnly).terms == expected);
    CHECK(stringy_e_general(p, SubdivisionStrategy::AllBoundaryPoints).terms == expected);
  }
}

TEST_CASE("E-function properties on random canonical simplices and LDP polygons") {
  for (const auto& s : corpus::canonical_simplices(60, 5)) {
    const LatticePolytope& p = s.polytope;
    StringyEFunction closed = stringy_e_canonical3d(p);
    StringyEFunction vo = stringy_e_general(p, SubdivisionStrategy::VerticesOnly);
    StringyEFunction ab = stringy_e_general(p, SubdivisionStrategy::AllBoundaryPoints);
    CHECK(vo == closed);
    CHECK(ab == closed);
    CHECK(closed.is_symmetric());
    CHECK(stringy_euler(closed) == hull_volume(p.vertices()));
    Integer lcm_n = 1;
    for (const auto& f : p.facets()) lcm_n = stringy::lcm(lcm_n, -f.halfspace.offset);
    CHECK(lcm_n % closed.gorenstein_q == 0);
    for (const auto& [alpha, psi] : closed.terms) {
      CHECK(psi > 0);
      if (alpha.get_den() != 1) {
        CHECK(alpha > 1);
        CHECK(alpha < 2);
      }
    }
  }

  // LDP polygons conv(e1, e2, -(a, b)) with primitive third vertex.
  for (long a = 1; a <= 7; ++a)
    for (long b = 1; b <= 7; ++b) {
      if (stringy::gcd(Integer(a), Integer(b)) != 1) continue;
      LatticePolytope p = corpus::make({{1, 0}, {0, 1}, {-a, -b}});
      StringyEFunction e = stringy_e_ldp(p);
      CHECK(e.is_symmetric());
      CHECK(stringy_euler(e) == hull_volume(p.vertices()));
    }
}

TEST_CASE("E-function errors") {
  CHECK(code_of([] { stringy_e_canonical3d(corpus::p2_polygon()); }) == ErrorCode::UnsupportedDimension);
  CHECK(code_of([] { stringy_e_canonical3d(corpus::make({{2, 0, 0}, {0, 2, 0}, {0, 0, 2}, {-2, -2, -2}})); }) ==
        ErrorCode::NotCanonicalFano);
  CHECK(code_of([] { stringy_e_general(corpus::simplex4(), SubdivisionStrategy::VerticesOnly); }) ==
        ErrorCode::UnsupportedDimension);
  CHECK(code_of([] { stringy_e_ldp(corpus::make({{2, 0}, {0, 1}, {-1, -1}})); }) == ErrorCode::NotLDP);
  CHECK(code_of([] { stringy_e_ldp(corpus::delta1()); }) == ErrorCode::NotLDP);
  CHECK(code_of([] { make_e_function(1, {{0, 1}, {1, -1}}); }) == ErrorCode::InternalInconsistency);
}
