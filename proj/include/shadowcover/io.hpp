#pragma once

#include <filesystem>
#include <nlohmann/json.hpp>
#include <stdexcept>
#include <string>

#include "shadowcover/corpus.hpp"
#include "shadowcover/counterexample.hpp"

namespace shadowcover::io {

using nlohmann::json;

// Malformed or unreadable input; the CLI maps it to exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Rationals travel as strings in lowest terms ("3", "-7/2"). Readers also
// accept JSON integers; floats and malformed strings are rejected.
json encode(const Rational& q);
json encode(const RatVector& v);
json encode(const RatMatrix& m);
json encode(const Subspace& s);
// {"dim", "vertices"}, plus "facets" [{"normal", "offset", "incident"}] on request.
json encode(const Polytope& p, bool with_facets = false);
json encode(const DirectionSet& a);  // {"dim", "directions"}
json encode(const SimplicialFamily& f);
json encode(const FarkasCertificate& c);
json encode(const ContainmentVerdict& v);
json encode(const ShadowCoverReport& r);
json encode(const CounterexampleBundle& b);

Rational decode_rational(const json& j);
RatVector decode_vector(const json& j, std::size_t dim);
Subspace decode_subspace(const json& j, std::size_t ambient_dim);
// `input_points`, if given, receives the number of listed points before
// duplicates and interior points are dropped.
Polytope decode_polytope(const json& j, std::size_t* input_points = nullptr);
DirectionSet decode_directions(const json& j);
// A polytope document if it has "vertices", a direction set if it has
// "directions".
Geometry decode_geometry(const json& j);
SimplicialFamily decode_family(const json& j);
FarkasCertificate decode_certificate(const json& j);
ShadowCoverReport decode_shadow_report(const json& j, std::size_t ambient_dim);
// Rebuilds L and S from their vertices; a stored facet list for L must
// match the recomputed one, since the family indexes it.
CounterexampleBundle decode_bundle(const json& j);

json read_json_file(const std::filesystem::path& path);

}  // namespace shadowcover::io
