#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "shadowcover/reliability.hpp"
#include "test_support.hpp"

using namespace shadowcover;
using fixture::iv;

namespace {

DirectionSet q_directions() {
  std::vector<RatVector> dirs;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) {
      RatVector u(4);
      u[i] = 1;
      u[j] = 1;
      dirs.push_back(u);
      dirs.push_back(-u);
    }
  return DirectionSet(4, dirs);
}

// Every simplicial family of size >= lo by brute force over all subsets.
std::vector<std::vector<std::size_t>> brute_families(const DirectionSet& a, std::size_t lo) {
  std::vector<std::vector<std::size_t>> out;
  oracle::for_each_subset(a.size(), lo, a.dim() + 1, [&](const std::vector<std::size_t>& s) {
    std::vector<RatVector> vs;
    for (auto i : s) vs.push_back(a[i]);
    if (oracle::is_simplicial_family(vs)) out.push_back(s);
  });
  std::stable_sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.size() < y.size(); });
  return out;
}

Polytope random_parallelotope(std::mt19937_64& rng, std::size_t n) {
  for (;;) {
    std::vector<RatVector> gens;
    for (std::size_t i = 0; i < n; ++i) {
      RatVector g(n);
      for (std::size_t j = 0; j < n; ++j) g[j] = static_cast<long long>(rng() % 7) - 3;
      gens.push_back(g);
    }
    if (rank(gens) != n) continue;
    std::vector<RatVector> pts;
    for (std::size_t mask = 0; mask < (1u << n); ++mask) {
      RatVector p(n);
      for (std::size_t i = 0; i < n; ++i)
        if (mask >> i & 1) p += gens[i];
      pts.push_back(p);
    }
    return Polytope::hull(pts);
  }
}

}  // namespace

TEST(DirectionSet, CanonicalFormAndValidation) {
  const DirectionSet a(2, {iv({0, -2}), iv({0, 3}), iv({-2, 4})});
  EXPECT_EQ(a.canonical(0), iv({0, 1}));
  EXPECT_TRUE(a.flipped(0));
  EXPECT_FALSE(a.flipped(1));
  EXPECT_EQ(a.canonical(2), iv({1, -2}));
  EXPECT_TRUE(a.flipped(2));
  EXPECT_THROW(DirectionSet(2, {iv({1, 1}), iv({2, 2})}), std::invalid_argument);
  EXPECT_THROW(DirectionSet(2, {iv({0, 0})}), std::invalid_argument);
  EXPECT_THROW(DirectionSet(2, {iv({1, 0, 0})}), std::invalid_argument);
}

TEST(IsSimplicial, Examples) {
  const std::vector<RatVector> pair{iv({1, 0}), iv({-1, 0})};
  const auto a = is_simplicial(pair);
  ASSERT_TRUE(a);
  EXPECT_EQ(a->coefficients, (std::vector<Rational>{1, 1}));

  const std::vector<RatVector> tri{iv({1, 0, 1}), iv({-1, 0, 1}), iv({0, 0, -1})};
  const auto b = is_simplicial(tri);
  ASSERT_TRUE(b);
  EXPECT_EQ(b->coefficients, (std::vector<Rational>{1, 1, 2}));

  const std::vector<RatVector> bad{iv({1, 0}), iv({0, 1}), iv({-1, 0})};
  EXPECT_FALSE(is_simplicial(bad));
}

TEST(EnumerateSimplicial, CubeHasNoLargeFamilies) {
  const auto a = DirectionSet::facet_normals(fixture::cube(3));
  EXPECT_TRUE(enumerate_simplicial(a, 3).empty());
  EXPECT_EQ(enumerate_simplicial(a, 2).size(), 3u);
}

TEST(EnumerateSimplicial, SquarePyramid) {
  const auto a = DirectionSet::facet_normals(fixture::square_pyramid());
  ASSERT_EQ(a.size(), 5u);
  const auto fams = enumerate_simplicial(a, 3);
  ASSERT_FALSE(fams.empty());
  for (const auto& f : fams) {
    EXPECT_EQ(f.size(), 3u);
    EXPECT_TRUE(verify_family(a, f));
  }
  EXPECT_TRUE(enumerate_simplicial(a, 4).empty());
  // Oracle: all 4- and 5-subsets checked directly.
  EXPECT_TRUE(brute_families(a, 4).empty());
}

TEST(EnumerateSimplicial, TwelveDirectionSet) {
  const DirectionSet q = q_directions();
  EXPECT_TRUE(enumerate_simplicial(q, 5).empty());
  const auto fams = enumerate_simplicial(q, 4);
  ASSERT_FALSE(fams.empty());
  const std::vector<RatVector> target{iv({1, 1, 0, 0}), iv({0, 0, 1, 1}), iv({-1, 0, 0, -1}), iv({0, -1, -1, 0})};
  bool found = false;
  for (const auto& f : fams) {
    EXPECT_TRUE(verify_family(q, f));
    std::vector<RatVector> members;
    for (auto i : f.members) members.push_back(q[i]);
    if (std::is_permutation(members.begin(), members.end(), target.begin())) {
      found = true;
      EXPECT_EQ(f.coefficients, (std::vector<Rational>{1, 1, 1, 1}));
    }
  }
  EXPECT_TRUE(found);
}

TEST(EnumerateSimplicial, MatchesBruteForceOnRandomSets) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + trial % 3;
    std::vector<RatVector> dirs;
    std::vector<RatVector> canon;
    while (dirs.size() < n + 3) {
      RatVector u(n);
      for (std::size_t j = 0; j < n; ++j) u[j] = static_cast<long long>(rng() % 5) - 2;
      if (u.is_zero()) continue;
      const RatVector p = primitive(u);
      if (std::find(canon.begin(), canon.end(), p) != canon.end()) continue;
      canon.push_back(p);
      dirs.push_back(u);
    }
    const DirectionSet a(n, dirs);
    const auto fams = enumerate_simplicial(a, 2);
    const auto brute = brute_families(a, 2);
    ASSERT_EQ(fams.size(), brute.size());
    for (std::size_t i = 0; i < fams.size(); ++i) {
      EXPECT_EQ(fams[i].members, brute[i]);
      EXPECT_TRUE(verify_family(a, fams[i]));
    }
    const auto first = first_simplicial(a, 3);
    const auto big = enumerate_simplicial(a, 3);
    EXPECT_EQ(first.has_value(), !big.empty());
    if (first) EXPECT_EQ(*first, big.front());
  }
}

TEST(IsReliable, SquarePyramid) {
  const Polytope p = fixture::square_pyramid();
  EXPECT_TRUE(is_reliable(p, 2).reliable);
  const auto v = is_reliable(p, 1);
  EXPECT_FALSE(v.reliable);
  ASSERT_TRUE(v.certificate);
  EXPECT_EQ(v.certificate->size(), 3u);
  EXPECT_TRUE(verify_family(DirectionSet::facet_normals(p), *v.certificate));
}

TEST(IsReliable, SimplicesAreNeverReliable) {
  for (std::size_t n = 2; n <= 4; ++n) {
    const Polytope s = fixture::corner_simplex(n);
    for (std::size_t d = 1; d < n; ++d) {
      const auto v = is_reliable(s, d);
      EXPECT_FALSE(v.reliable) << "n=" << n << " d=" << d;
      ASSERT_TRUE(v.certificate);
      // Proper subsets of the facet normals are independent.
      EXPECT_EQ(v.certificate->size(), n + 1);
    }
    // All n+1 facet normals form one family.
    const auto all = enumerate_simplicial(DirectionSet::facet_normals(s), n + 1);
    ASSERT_EQ(all.size(), 1u);
    EXPECT_EQ(all[0].size(), n + 1);
  }
}

TEST(IsReliable, RejectsOutOfRangeD) {
  EXPECT_THROW(is_reliable(fixture::cube(3), 0), std::invalid_argument);
  EXPECT_THROW(is_reliable(fixture::cube(3), 3), std::invalid_argument);
}

TEST(IsReliable, ScaleInvarianceAndMonotonicity) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t n = 3 + trial % 2;
    const Polytope p = fixture::random_body(rng, n, n + 3, 3);
    const auto normals = DirectionSet::facet_normals(p);
    std::vector<RatVector> scaled;
    for (const auto& u : normals.directions()) scaled.push_back(Rational(1 + rng() % 5, 1 + rng() % 3) * u);
    const DirectionSet scaled_set(n, scaled);
    bool prev = false;
    for (std::size_t d = 1; d < n; ++d) {
      const bool r = is_reliable(normals, d).reliable;
      EXPECT_EQ(r, is_reliable(scaled_set, d).reliable);
      if (prev) EXPECT_TRUE(r);
      prev = r;
    }
  }
}

TEST(ParallelotopeCheck, Examples) {
  EXPECT_TRUE(parallelotope_check(fixture::cube(3)));
  const RatMatrix shear{iv({1, 2, 0}), iv({0, 1, 3}), iv({0, 0, 1})};
  EXPECT_TRUE(parallelotope_check(apply_linear(fixture::box({{0, 1}, {0, 2}, {0, 3}}), shear)));
  EXPECT_FALSE(parallelotope_check(fixture::square_pyramid()));
  EXPECT_FALSE(parallelotope_check(Polytope::hull({iv({0, 0}), iv({4, 0}), iv({3, 1}), iv({1, 1})})));
  EXPECT_THROW(parallelotope_check(Polytope::hull({iv({0, 0, 0}), iv({1, 0, 0})})), std::invalid_argument);
}

// 1-reliable exactly for parallelotopes.
TEST(ParallelotopeCheck, AgreesWithOneReliability) {
  std::mt19937_64 rng(99);
  int parallelotopes = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + trial % 3;
    const Polytope p = trial % 3 == 0 ? random_parallelotope(rng, n) : fixture::random_body(rng, n, n + 2, 3);
    const bool par = parallelotope_check(p);
    EXPECT_EQ(is_reliable(p, 1).reliable, par);
    parallelotopes += par;
  }
  EXPECT_GE(parallelotopes, 13);
}

TEST(SubsetCount, SmallAndSaturating) {
  EXPECT_EQ(subset_count(5, 4, 5), 6u);
  EXPECT_EQ(subset_count(12, 5, 5), 792u);
  EXPECT_EQ(subset_count(200, 100, 100), UINT64_MAX);
}
