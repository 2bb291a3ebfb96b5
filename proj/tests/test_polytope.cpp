#include <gtest/gtest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "shadowcover/polytope.hpp"

using namespace shadowcover;

namespace {

RatVector iv(std::initializer_list<long long> xs) {
  std::vector<Rational> e;
  for (auto x : xs) e.emplace_back(x);
  return RatVector(std::move(e));
}

Polytope square() { return Polytope::hull({iv({1, 1}), iv({1, -1}), iv({-1, 1}), iv({-1, -1})}); }

Polytope pyramid() {
  return Polytope::hull({iv({1, 1, 0}), iv({1, -1, 0}), iv({-1, 1, 0}), iv({-1, -1, 0}), iv({0, 0, 1})});
}

Polytope cube(std::size_t n) {
  std::vector<RatVector> pts;
  for (std::size_t mask = 0; mask < (1u << n); ++mask) {
    RatVector v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = (mask >> i) & 1 ? 1 : -1;
    pts.push_back(v);
  }
  return Polytope::hull(pts);
}

std::set<RatVector> normals_of(const Polytope& p) {
  std::set<RatVector> out;
  for (const auto& f : p.facets()) out.insert(f.normal);
  return out;
}

Polytope random_points_hull(std::mt19937_64& rng, std::size_t n, std::size_t count, int bound) {
  std::vector<RatVector> pts;
  for (std::size_t i = 0; i < count; ++i) {
    RatVector v(n);
    for (std::size_t j = 0; j < n; ++j) v[j] = static_cast<long long>(rng() % (2 * bound + 1)) - bound;
    pts.push_back(v);
  }
  return Polytope::hull(pts);
}

// Structural checks of a hull against independent oracles.
void expect_valid_hull(const Polytope& p) {
  const std::size_t k = p.affine_dim();
  for (const auto& f : p.facets()) {
    EXPECT_FALSE(f.normal.is_zero());
    EXPECT_TRUE(oracle::all_below(p.vertices(), f.normal, f.offset));
    std::vector<RatVector> diffs;
    for (auto i : f.incident) diffs.push_back(p.vertices()[i] - p.vertices()[f.incident[0]]);
    EXPECT_EQ(oracle::rank(diffs), k - 1);
    for (std::size_t i = 0; i < p.vertices().size(); ++i) {
      const bool on = dot(f.normal, p.vertices()[i]) == f.offset;
      const bool listed = std::find(f.incident.begin(), f.incident.end(), i) != f.incident.end();
      EXPECT_EQ(on, listed);
    }
  }
  if (k > 0) {
    for (std::size_t v = 0; v < p.vertices().size(); ++v) {
      std::size_t count = 0;
      for (const auto& f : p.facets()) count += std::count(f.incident.begin(), f.incident.end(), v);
      EXPECT_GE(count, k);
    }
  }
}

}  // namespace

TEST(Hull, Square) {
  const Polytope sq = square();
  EXPECT_EQ(sq.vertices().size(), 4u);
  EXPECT_EQ(normals_of(sq), (std::set<RatVector>{iv({1, 0}), iv({-1, 0}), iv({0, 1}), iv({0, -1})}));
  for (const auto& f : sq.facets()) EXPECT_EQ(f.offset, Rational(1));
}

TEST(Hull, SquarePyramid) {
  const Polytope p = pyramid();
  ASSERT_EQ(p.facets().size(), 5u);
  EXPECT_EQ(normals_of(p), (std::set<RatVector>{iv({0, 0, -1}), iv({1, 0, 1}), iv({-1, 0, 1}), iv({0, 1, 1}),
                                                iv({0, -1, 1})}));
  for (const auto& f : p.facets()) {
    EXPECT_EQ(f.offset, f.normal == iv({0, 0, -1}) ? Rational(0) : Rational(1));
  }
  expect_valid_hull(p);
}

TEST(Hull, RedundantPointsRemoved) {
  const Polytope sq = Polytope::hull({iv({1, 1}), iv({1, -1}), iv({-1, 1}), iv({-1, -1}), iv({0, 0}), iv({1, 0}),
                                      iv({1, 1})});
  EXPECT_EQ(sq.vertices().size(), 4u);
  EXPECT_EQ(sq.discarded_points(), 3u);
  EXPECT_EQ(sq, square());
}

TEST(Hull, LowerDimensionalBodies) {
  const Polytope point = Polytope::hull({iv({1, 2, 3}), iv({1, 2, 3})});
  EXPECT_EQ(point.affine_dim(), 0u);
  EXPECT_TRUE(point.facets().empty());

  const Polytope seg = Polytope::hull({iv({0, 0, 0}), iv({1, 1, 1}), iv({2, 2, 2})});
  EXPECT_EQ(seg.affine_dim(), 1u);
  EXPECT_EQ(seg.vertices().size(), 2u);
  EXPECT_EQ(normals_of(seg), (std::set<RatVector>{iv({1, 1, 1}), iv({-1, -1, -1})}));

  // Triangle in the plane z = 1: relative facets have normals inside the plane.
  const Polytope tri = Polytope::hull({iv({0, 0, 1}), iv({1, 0, 1}), iv({0, 1, 1})});
  EXPECT_EQ(tri.affine_dim(), 2u);
  EXPECT_EQ(normals_of(tri), (std::set<RatVector>{iv({-1, 0, 0}), iv({0, -1, 0}), iv({1, 1, 0})}));
  expect_valid_hull(tri);
}

TEST(Hull, RandomHullsSatisfyStructuralInvariants) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + trial % 3;
    const Polytope p = random_points_hull(rng, n, n + 2 + rng() % 6, 4);
    expect_valid_hull(p);
    // Round trip: rebuilding from the vertices reproduces the facets.
    const Polytope again = Polytope::hull(p.vertices());
    ASSERT_EQ(again.facets().size(), p.facets().size());
    for (std::size_t i = 0; i < p.facets().size(); ++i) {
      EXPECT_EQ(again.facets()[i].normal, p.facets()[i].normal);
      EXPECT_EQ(again.facets()[i].offset, p.facets()[i].offset);
    }
    if (p.full_dimensional()) EXPECT_TRUE(vector_area_check(p));
  }
}

TEST(Support, Examples) {
  const Polytope unit = Polytope::hull({iv({0, 0}), iv({1, 0}), iv({0, 1}), iv({1, 1})});
  EXPECT_EQ(support(unit, iv({1, 1})), Rational(2));
  EXPECT_EQ(support(pyramid(), iv({1, 0, 1})), Rational(1));
  EXPECT_EQ(support(pyramid(), iv({0, 0, 0})), Rational(0));
}

TEST(Project, Examples) {
  const std::size_t xy[] = {0, 1};
  EXPECT_EQ(project(cube(3), Subspace::coordinate(3, xy)), square());

  const std::size_t z[] = {2};
  const Polytope shadow = project(pyramid(), Subspace::coordinate(3, z));
  EXPECT_EQ(shadow.vertices(), (std::vector<RatVector>{iv({0}), iv({1})}));

  EXPECT_EQ(project(pyramid(), Subspace(RatMatrix::identity(3))), pyramid());
}

TEST(Project, SupportConsistencyAndTranslationCommutes) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 3;
    const Polytope p = random_points_hull(rng, n, 7, 4);
    RatMatrix b(2, n);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < n; ++j) b[i][j] = static_cast<long long>(rng() % 7) - 3;
    if (rank(b) < 2) continue;
    const Subspace xi(b);
    const Polytope shadow = project(p, xi);
    // For w = B^T c in the subspace, support of the coordinate shadow along
    // B w equals support(P, w).
    const RatVector c{Rational(static_cast<long long>(rng() % 5) - 2), Rational(static_cast<long long>(rng() % 5) - 2)};
    const RatVector w = xi.lift(c);
    EXPECT_EQ(support(shadow, b * w), support(p, w));

    const RatVector t = iv({static_cast<long long>(rng() % 5) - 2, 1, -1});
    EXPECT_EQ(project(translate(p, t), xi), translate(shadow, xi.coordinates(t)));
  }
}

TEST(MinkowskiSum, Examples) {
  const Polytope seg1 = Polytope::hull({iv({0, 0}), iv({1, 0})});
  const Polytope seg2 = Polytope::hull({iv({0, 0}), iv({0, 1})});
  EXPECT_EQ(minkowski_sum(seg1, seg2), Polytope::hull({iv({0, 0}), iv({1, 0}), iv({0, 1}), iv({1, 1})}));

  const Polytope pt = Polytope::hull({iv({3, -1})});
  EXPECT_EQ(minkowski_sum(square(), pt), translate(square(), iv({3, -1})));

  const Polytope tri = Polytope::hull({iv({0, 0}), iv({1, 0}), iv({0, 1})});
  EXPECT_EQ(minkowski_sum(tri, tri), scale(tri, 2));
}

TEST(MinkowskiSum, SupportAdditivity) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 30; ++trial) {
    const Polytope p = random_points_hull(rng, 3, 5, 3);
    const Polytope q = random_points_hull(rng, 3, 5, 3);
    const Polytope s = minkowski_sum(p, q);
    for (int k = 0; k < 10; ++k) {
      const RatVector u = iv({static_cast<long long>(rng() % 9) - 4, static_cast<long long>(rng() % 9) - 4,
                              static_cast<long long>(rng() % 9) - 4});
      EXPECT_EQ(support(s, u), support(p, u) + support(q, u));
    }
  }
}

TEST(DirectSum, Examples) {
  const std::size_t x[] = {0}, y[] = {1};
  const Polytope unit_seg = Polytope::hull({iv({0}), iv({1})});
  EXPECT_EQ(direct_sum(unit_seg, unit_seg, Subspace::coordinate(2, x), Subspace::coordinate(2, y)),
            Polytope::hull({iv({0, 0}), iv({1, 0}), iv({0, 1}), iv({1, 1})}));

  const std::size_t xy[] = {0, 1}, z[] = {2};
  const Polytope tri = Polytope::hull({iv({0, 0}), iv({1, 0}), iv({0, 1})});
  const Polytope prism = direct_sum(tri, unit_seg, Subspace::coordinate(3, xy), Subspace::coordinate(3, z));
  EXPECT_EQ(prism.facets().size(), 5u);
  EXPECT_EQ(prism.vertices().size(), 6u);

  const Polytope pt = Polytope::hull({iv({2})});
  EXPECT_EQ(direct_sum(tri, pt, Subspace::coordinate(3, xy), Subspace::coordinate(3, z)),
            Polytope::hull({iv({0, 0, 2}), iv({1, 0, 2}), iv({0, 1, 2})}));

  EXPECT_THROW(direct_sum(unit_seg, unit_seg, Subspace(RatMatrix{iv({1, 1})}), Subspace(RatMatrix{iv({2, 2})})),
               std::invalid_argument);
}

TEST(VectorArea, CubeAndPyramid) {
  EXPECT_TRUE(vector_area_check(cube(3)));
  EXPECT_TRUE(vector_area_check(cube(4)));
  const Polytope p = pyramid();
  const auto areas = facet_area_vectors(p);
  std::set<RatVector> got(areas.begin(), areas.end());
  EXPECT_EQ(got, (std::set<RatVector>{iv({0, 0, -4}), iv({1, 0, 1}), iv({-1, 0, 1}), iv({0, 1, 1}), iv({0, -1, 1})}));
  EXPECT_TRUE(vector_area_check(p));
  EXPECT_THROW(vector_area_check(Polytope::hull({iv({0, 0, 0}), iv({1, 0, 0})})), std::invalid_argument);
}

TEST(VectorArea, AreaMagnitudesMatchKnownVolumes) {
  // Cube [-1,1]^3 facets have area 4; |area vector|^2 = 16.
  for (const auto& a : facet_area_vectors(cube(3))) EXPECT_EQ(dot(a, a), Rational(16));
}

TEST(CentralSymmetry, Examples) {
  EXPECT_EQ(is_centrally_symmetric(cube(3)), iv({0, 0, 0}));
  EXPECT_FALSE(is_centrally_symmetric(pyramid()).has_value());
  EXPECT_EQ(is_centrally_symmetric(Polytope::hull({iv({4, 5})})), iv({4, 5}));
  EXPECT_EQ(is_centrally_symmetric(translate(cube(2), iv({1, 2}))), iv({1, 2}));
}

TEST(Embed, Examples) {
  const Polytope e = embed(square(), 3);
  EXPECT_EQ(e.dim(), 3u);
  EXPECT_EQ(e.affine_dim(), 2u);
  EXPECT_EQ(e.vertices().front(), iv({-1, -1, 0}));
  EXPECT_EQ(embed(Polytope::hull({iv({1})}), 3).vertices(), std::vector<RatVector>{iv({1, 0, 0})});
  const std::size_t xy[] = {0, 1};
  EXPECT_EQ(project(e, Subspace::coordinate(3, xy)), square());
}

TEST(ApplyLinear, Examples) {
  EXPECT_EQ(apply_linear(cube(3), RatMatrix::identity(3)), cube(3));
  const RatMatrix stretch{iv({2, 0, 0}), iv({0, 1, 0}), iv({0, 0, 1})};
  const Polytope box = apply_linear(cube(3), stretch);
  EXPECT_EQ(support(box, iv({1, 0, 0})), Rational(2));
  EXPECT_EQ(support(box, iv({0, 1, 0})), Rational(1));

  const Polytope unit = Polytope::hull({iv({0, 0}), iv({1, 0}), iv({0, 1}), iv({1, 1})});
  EXPECT_EQ(apply_linear(unit, RatMatrix{iv({1, 1}), iv({0, 1})}).vertices(),
            (std::vector<RatVector>{iv({0, 0}), iv({1, 0}), iv({1, 1}), iv({2, 1})}));
  EXPECT_THROW(apply_linear(unit, RatMatrix{iv({1, 2}), iv({2, 4})}), std::domain_error);
}

TEST(AffineCoordinates, FullDimensionalInOwnHull) {
  const Polytope tri = Polytope::hull({iv({0, 0, 1}), iv({2, 0, 1}), iv({0, 2, 1})});
  const Polytope local = affine_coordinates(tri);
  EXPECT_EQ(local.dim(), 2u);
  EXPECT_TRUE(local.full_dimensional());
  EXPECT_EQ(local.facets().size(), 3u);
}

TEST(Triangulate, VolumesAddUp) {
  // Cube [-1,1]^3 has volume 8; sum of simplex volumes |det|/3! must match.
  const Polytope c = cube(3);
  Rational total;
  for (const auto& s : triangulate(c)) {
    RatMatrix m(std::vector<RatVector>{}, 3);
    for (std::size_t j = 1; j < s.size(); ++j) m.append_row(c.vertices()[s[j]] - c.vertices()[s[0]]);
    total += determinant(m).abs() / Rational(6);
  }
  EXPECT_EQ(total, Rational(8));
}
