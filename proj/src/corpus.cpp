#include "shadowcover/corpus.hpp"

#include <functional>
#include <stdexcept>

#include "shadowcover/random.hpp"

namespace shadowcover {

namespace {

RatVector iv(std::initializer_list<long long> xs) {
  std::vector<Rational> e;
  for (auto x : xs) e.emplace_back(x);
  return RatVector(std::move(e));
}

std::mt19937_64 seeded(std::uint64_t seed) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)};
  return std::mt19937_64(seq);
}

RatVector random_point(std::mt19937_64& gen, std::size_t n, long long bound) {
  RatVector p(n);
  for (std::size_t j = 0; j < n; ++j) p[j] = uniform_int(gen, -bound, bound);
  return p;
}

Polytope cube(std::size_t n) {
  std::vector<RatVector> pts;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    RatVector p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = (mask >> i & 1) ? 1 : -1;
    pts.push_back(p);
  }
  return Polytope::hull(pts);
}

Polytope standard_simplex(std::size_t n) {
  std::vector<RatVector> pts{RatVector(n)};
  for (std::size_t i = 0; i < n; ++i) pts.push_back(RatVector::unit(n, i));
  return Polytope::hull(pts);
}

Polytope cross_polytope(std::size_t n) {
  std::vector<RatVector> pts;
  for (std::size_t i = 0; i < n; ++i) {
    pts.push_back(RatVector::unit(n, i));
    pts.push_back(-RatVector::unit(n, i));
  }
  return Polytope::hull(pts);
}

Polytope hexagonal_prism() {
  std::vector<RatVector> pts;
  for (const auto& h : {iv({2, 0}), iv({1, 1}), iv({-1, 1}), iv({-2, 0}), iv({-1, -1}), iv({1, -1})})
    for (long long z : {-1, 1}) pts.push_back(RatVector{h[0], h[1], Rational(z)});
  return Polytope::hull(pts);
}

Polytope rhombic_dodecahedron() {
  std::vector<RatVector> pts;
  for (long long a : {-1, 1})
    for (long long b : {-1, 1})
      for (long long c : {-1, 1}) pts.push_back(iv({a, b, c}));
  for (std::size_t i = 0; i < 3; ++i) {
    pts.push_back(Rational(2) * RatVector::unit(3, i));
    pts.push_back(Rational(-2) * RatVector::unit(3, i));
  }
  return Polytope::hull(pts);
}

DirectionSet q_directions() {
  // +-(1,1,0,0), +-(1,0,1,0), +-(1,0,0,1), +-(0,1,1,0), +-(0,1,0,1), +-(0,0,1,1)
  std::vector<RatVector> dirs;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) {
      RatVector u(4);
      u[i] = 1;
      u[j] = 1;
      dirs.push_back(u);
      dirs.push_back(-u);
    }
  return DirectionSet(4, std::move(dirs));
}

struct Builder {
  NamedExample info;
  std::function<Geometry()> build;
};

const std::vector<Builder>& builders() {
  static const std::vector<Builder> all = [] {
    std::vector<Builder> b;
    for (std::size_t n = 2; n <= 5; ++n)
      b.push_back({{"cube-" + std::to_string(n), "[-1,1]^" + std::to_string(n)}, [n] { return Geometry(cube(n)); }});
    b.push_back({{"square-pyramid", "conv{(+-1,+-1,0),(0,0,1)}"},
                 [] {
                   return Geometry(Polytope::hull(
                       {iv({-1, -1, 0}), iv({1, -1, 0}), iv({1, 1, 0}), iv({-1, 1, 0}), iv({0, 0, 1})}));
                 }});
    for (std::size_t n = 2; n <= 5; ++n)
      b.push_back({{"standard-simplex-" + std::to_string(n), "conv{0,e_1,...,e_" + std::to_string(n) + "}"},
                   [n] { return Geometry(standard_simplex(n)); }});
    b.push_back({{"octahedron", "conv{+-e_1,+-e_2,+-e_3}"}, [] { return Geometry(cross_polytope(3)); }});
    b.push_back({{"cross-polytope-4", "conv{+-e_1,...,+-e_4}"}, [] { return Geometry(cross_polytope(4)); }});
    b.push_back({{"hexagonal-prism", "hexagon conv{(+-2,0),(+-1,+-1)} x [-1,1]"},
                 [] { return Geometry(hexagonal_prism()); }});
    b.push_back({{"triangular-prism", "conv{0,2e_1,2e_2} x [0,3]"},
                 [] {
                   return Geometry(Polytope::hull({iv({0, 0, 0}), iv({2, 0, 0}), iv({0, 2, 0}), iv({0, 0, 3}),
                                                   iv({2, 0, 3}), iv({0, 2, 3})}));
                 }});
    b.push_back({{"rhombic-dodecahedron", "conv{(+-1,+-1,+-1),+-2e_i}"},
                 [] { return Geometry(rhombic_dodecahedron()); }});
    b.push_back({{"sheared-box-2", "[0,1]x[0,2] under (x,y) -> (x+y,y)"},
                 [] {
                   return Geometry(apply_linear(Polytope::hull({iv({0, 0}), iv({1, 0}), iv({0, 2}), iv({1, 2})}),
                                                RatMatrix{iv({1, 1}), iv({0, 1})}));
                 }});
    b.push_back({{"sheared-box-3", "[0,1]x[0,2]x[0,3] under rows (1,2,0),(0,1,3),(0,0,1)"},
                 [] {
                   std::vector<RatVector> pts;
                   for (long long x : {0, 1})
                     for (long long y : {0, 2})
                       for (long long z : {0, 3}) pts.push_back(iv({x, y, z}));
                   return Geometry(
                       apply_linear(Polytope::hull(pts), RatMatrix{iv({1, 2, 0}), iv({0, 1, 3}), iv({0, 0, 1})}));
                 }});
    b.push_back({{"q-directions", "the twelve directions +-(e_i + e_j) in Q^4 (direction set)"},
                 [] { return Geometry(q_directions()); }});
    return b;
  }();
  return all;
}

}  // namespace

const std::vector<NamedExample>& catalog() {
  static const std::vector<NamedExample> names = [] {
    std::vector<NamedExample> out;
    for (const auto& b : builders()) out.push_back(b.info);
    return out;
  }();
  return names;
}

Geometry named(std::string_view name) {
  for (const auto& b : builders())
    if (b.info.name == name) return b.build();
  throw std::invalid_argument("unknown example: " + std::string(name));
}

Polytope named_polytope(std::string_view name) {
  Geometry g = named(name);
  if (auto* p = std::get_if<Polytope>(&g)) return std::move(*p);
  throw std::invalid_argument("example is a direction set, not a polytope: " + std::string(name));
}

Polytope random_polytope(std::uint64_t seed, std::size_t n, std::size_t vertex_count, long long bound) {
  if (n == 0 || vertex_count < n + 1) throw std::invalid_argument("random_polytope: need at least n + 1 points");
  auto gen = seeded(seed);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<RatVector> pts;
    for (std::size_t i = 0; i < vertex_count; ++i) pts.push_back(random_point(gen, n, bound));
    Polytope p = Polytope::hull(std::move(pts));
    if (p.full_dimensional()) return p;
  }
  throw std::runtime_error("random_polytope: no full-dimensional sample after 1000 attempts");
}

Polytope random_symmetric_polytope(std::uint64_t seed, std::size_t n, std::size_t pair_count, long long bound) {
  if (n == 0 || pair_count < n) throw std::invalid_argument("random_symmetric_polytope: need at least n pairs");
  auto gen = seeded(seed);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<RatVector> pts;
    for (std::size_t i = 0; i < pair_count; ++i) {
      RatVector v = random_point(gen, n, bound);
      pts.push_back(-v);
      pts.push_back(std::move(v));
    }
    Polytope p = Polytope::hull(std::move(pts));
    if (p.full_dimensional()) return p;
  }
  throw std::runtime_error("random_symmetric_polytope: no full-dimensional sample after 1000 attempts");
}

Polytope random_parallelotope(std::uint64_t seed, std::size_t n, long long bound) {
  auto gen = seeded(seed);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<RatVector> gens;
    for (std::size_t i = 0; i < n; ++i) gens.push_back(random_point(gen, n, bound));
    if (rank(gens) != n) continue;
    std::vector<RatVector> pts;
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      RatVector p(n);
      for (std::size_t i = 0; i < n; ++i)
        if (mask >> i & 1) p += gens[i];
      pts.push_back(std::move(p));
    }
    return Polytope::hull(std::move(pts));
  }
  throw std::runtime_error("random_parallelotope: no independent generators after 1000 attempts");
}

Polytope random_symmetric_direct_sum(std::uint64_t seed, std::span<const std::size_t> dims, long long bound,
                                     bool shear) {
  std::size_t n = 0;
  for (auto d : dims) n += d;
  auto gen = seeded(seed);
  RatMatrix basis = RatMatrix::identity(n);
  if (shear) {
    do {
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) basis[i][j] = uniform_int(gen, -2, 2);
    } while (determinant(basis).is_zero());
  }
  std::vector<std::pair<Subspace, Polytope>> parts;
  std::size_t row = 0;
  for (auto d : dims) {
    RatMatrix b(d, n);
    for (std::size_t i = 0; i < d; ++i) b[i] = basis[row + i];
    row += d;
    Polytope f = d == 1 ? Polytope::hull({iv({-uniform_int(gen, 1, bound)}), RatVector(1)})
                        : random_symmetric_polytope(gen(), d, d + 1, bound);
    if (d == 1) f = Polytope::hull({-f.vertices()[0], f.vertices()[0]});
    parts.emplace_back(Subspace(std::move(b)), std::move(f));
  }
  return direct_sum(parts);
}

std::vector<CorpusEntry> standard_corpus(std::uint64_t seed) {
  std::vector<CorpusEntry> out;
  for (const auto& info : catalog()) {
    Geometry g = named(info.name);
    auto* p = std::get_if<Polytope>(&g);
    if (p && p->dim() <= 4) out.push_back({info.name, "named", std::move(*p)});
  }
  auto gen = seeded(seed);
  auto sub_seed = [&] { return gen(); };
  struct Spec {
    std::size_t n, lo, hi, count;
  };
  for (const Spec s : {Spec{2, 3, 8, 40}, Spec{3, 4, 9, 50}, Spec{4, 5, 8, 30}})
    for (std::size_t i = 0; i < s.count; ++i) {
      const std::size_t v = s.lo + i % (s.hi - s.lo + 1);
      out.push_back({"random-" + std::to_string(s.n) + "d-" + std::to_string(i), "random",
                     random_polytope(sub_seed(), s.n, v, 5)});
    }
  for (const Spec s : {Spec{2, 2, 4, 10}, Spec{3, 3, 5, 20}, Spec{4, 4, 5, 10}})
    for (std::size_t i = 0; i < s.count; ++i) {
      const std::size_t pairs = s.lo + i % (s.hi - s.lo + 1);
      out.push_back({"symmetric-" + std::to_string(s.n) + "d-" + std::to_string(i), "symmetric",
                     random_symmetric_polytope(sub_seed(), s.n, pairs, 4)});
    }
  for (std::size_t i = 0; i < 30; ++i) {
    const std::size_t n = 2 + i % 3;
    out.push_back({"parallelotope-" + std::to_string(n) + "d-" + std::to_string(i), "parallelotope",
                   random_parallelotope(sub_seed(), n, 3)});
  }
  for (std::size_t i = 0; i < 10; ++i) {
    const std::vector<std::size_t> dims = i % 2 ? std::vector<std::size_t>{2, 1} : std::vector<std::size_t>{2, 2};
    out.push_back({"direct-sum-" + std::to_string(i), "direct-sum",
                   random_symmetric_direct_sum(sub_seed(), dims, 3, i % 4 >= 2)});
  }
  return out;
}

}  // namespace shadowcover
