#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "shadowcover/polytope.hpp"
#include "shadowcover/reliability.hpp"

namespace shadowcover {

using Geometry = std::variant<Polytope, DirectionSet>;

struct NamedExample {
  std::string name;
  std::string description;
};

// Every name accepted by named(), in a fixed order.
const std::vector<NamedExample>& catalog();

// Throws std::invalid_argument for an unknown name.
Geometry named(std::string_view name);
// As named(), but also throws if the example is a bare direction set.
Polytope named_polytope(std::string_view name);

// Hull of vertex_count random integer points in [-bound, bound]^n, redrawn
// until full-dimensional. Throws std::runtime_error after 1000 failed
// draws and std::invalid_argument if vertex_count < n + 1.
Polytope random_polytope(std::uint64_t seed, std::size_t n, std::size_t vertex_count, long long bound);

// Hull of +-v over pair_count random integer v; centrally symmetric about
// the origin. Requires pair_count >= n.
Polytope random_symmetric_polytope(std::uint64_t seed, std::size_t n, std::size_t pair_count, long long bound);

// Sum of n random independent integer segments [0, g_i].
Polytope random_parallelotope(std::uint64_t seed, std::size_t n, long long bound);

// Direct sum of origin-symmetric factors of the given dimensions over the
// standard basis, or over a random nonsingular integer basis when
// shear is set.
Polytope random_symmetric_direct_sum(std::uint64_t seed, std::span<const std::size_t> dims, long long bound,
                                     bool shear);

struct CorpusEntry {
  std::string label;
  std::string family;  // "named", "random", "symmetric", "parallelotope", "direct-sum"
  Polytope body;
};

// Named polytopes of dimension <= 4 plus seeded random members; about 200
// bodies, all full-dimensional.
std::vector<CorpusEntry> standard_corpus(std::uint64_t seed = 1);

}  // namespace shadowcover
