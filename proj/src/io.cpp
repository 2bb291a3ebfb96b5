#include "shadowcover/io.hpp"

#include <fstream>
#include <sstream>

namespace shadowcover::io {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object()) throw InputError("expected a JSON object");
  const auto it = j.find(key);
  if (it == j.end()) throw InputError(std::string("missing field \"") + key + "\"");
  return *it;
}

std::size_t decode_size(const json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0) throw InputError(std::string(what) + ": expected a nonnegative integer");
  return j.get<std::size_t>();
}

long long decode_int(const json& j, const char* what) {
  if (!j.is_number_integer()) throw InputError(std::string(what) + ": expected an integer");
  return j.get<long long>();
}

const json& array_of(const json& j, const char* what) {
  if (!j.is_array()) throw InputError(std::string(what) + ": expected an array");
  return j;
}

}  // namespace

json encode(const Rational& q) { return q.str(); }

json encode(const RatVector& v) {
  json out = json::array();
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(encode(v[i]));
  return out;
}

json encode(const RatMatrix& m) {
  json out = json::array();
  for (const auto& r : m.row_vectors()) out.push_back(encode(r));
  return out;
}

json encode(const Subspace& s) { return {{"ambient_dim", s.ambient_dim()}, {"basis", encode(s.basis())}}; }

json encode(const Polytope& p, bool with_facets) {
  json out{{"dim", p.dim()}, {"vertices", json::array()}};
  for (const auto& v : p.vertices()) out["vertices"].push_back(encode(v));
  if (with_facets) {
    out["facets"] = json::array();
    for (const auto& f : p.facets())
      out["facets"].push_back({{"normal", encode(f.normal)}, {"offset", encode(f.offset)}, {"incident", f.incident}});
  }
  return out;
}

json encode(const DirectionSet& a) {
  json out{{"dim", a.dim()}, {"directions", json::array()}};
  for (const auto& u : a.directions()) out["directions"].push_back(encode(u));
  return out;
}

json encode(const SimplicialFamily& f) {
  json coef = json::array();
  for (const auto& c : f.coefficients) coef.push_back(encode(c));
  return {{"members", f.members}, {"coefficients", coef}};
}

json encode(const FarkasCertificate& c) {
  json out = json::array();
  for (const auto& [i, lambda] : c.multipliers) out.push_back({{"facet", i}, {"lambda", encode(lambda)}});
  return out;
}

json encode(const ContainmentVerdict& v) {
  json out{{"fits", v.fits}};
  if (v.witness) out["witness"] = encode(*v.witness);
  if (v.certificate) out["certificate"] = encode(*v.certificate);
  if (v.hull_mismatch) out["hull_mismatch"] = true;
  return out;
}

json encode(const ShadowCoverReport& r) {
  json out{{"seed", r.seed},     {"d", r.d},           {"entry_bound", r.entry_bound},
           {"trials", r.trials}, {"passes", r.passes}, {"all_pass", r.all_pass()}};
  if (r.first_failure_trial) out["first_failure_trial"] = *r.first_failure_trial;
  if (r.first_failure) out["first_failure"] = encode(*r.first_failure);
  return out;
}

json encode(const CounterexampleBundle& b) {
  return {{"l", encode(b.l, true)},
          {"d", b.d},
          {"family", encode(b.family)},
          {"s", encode(b.s)},
          {"alpha", encode(b.alpha)},
          {"alpha_min", encode(b.alpha_min)},
          {"margin", encode(b.margin)},
          {"alpha_trials", b.alpha_trials},
          {"noncontainment", encode(b.noncontainment)},
          {"shadow_report", encode(b.shadow_report)}};
}

Rational decode_rational(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (!j.is_string()) throw InputError("rational must be a string \"p/q\" or an integer, got " + j.dump());
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

RatVector decode_vector(const json& j, std::size_t dim) {
  array_of(j, "vector");
  if (j.size() != dim) {
    std::ostringstream msg;
    msg << "vector " << j.dump() << " has " << j.size() << " entries, expected " << dim;
    throw InputError(msg.str());
  }
  RatVector v(dim);
  for (std::size_t i = 0; i < dim; ++i) v[i] = decode_rational(j[i]);
  return v;
}

Subspace decode_subspace(const json& j, std::size_t ambient_dim) {
  std::vector<RatVector> rows;
  for (const auto& r : array_of(field(j, "basis"), "basis")) rows.push_back(decode_vector(r, ambient_dim));
  RatMatrix b(std::move(rows), ambient_dim);
  if (rank(b) != b.rows()) throw InputError("subspace basis is not linearly independent");
  return Subspace(std::move(b));
}

Polytope decode_polytope(const json& j, std::size_t* input_points) {
  const std::size_t n = decode_size(field(j, "dim"), "dim");
  if (n == 0) throw InputError("dim must be positive");
  const json& vs = array_of(field(j, "vertices"), "vertices");
  if (vs.empty()) throw InputError("vertices must be nonempty");
  std::vector<RatVector> pts;
  for (const auto& v : vs) pts.push_back(decode_vector(v, n));
  if (input_points) *input_points = pts.size();
  return Polytope::hull(std::move(pts));
}

DirectionSet decode_directions(const json& j) {
  const std::size_t n = decode_size(field(j, "dim"), "dim");
  if (n == 0) throw InputError("dim must be positive");
  std::vector<RatVector> dirs;
  for (const auto& u : array_of(field(j, "directions"), "directions")) dirs.push_back(decode_vector(u, n));
  try {
    return DirectionSet(n, std::move(dirs));
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

Geometry decode_geometry(const json& j) {
  if (j.is_object() && j.contains("vertices")) return decode_polytope(j);
  if (j.is_object() && j.contains("directions")) return decode_directions(j);
  throw InputError("expected a polytope document (\"vertices\") or a direction set (\"directions\")");
}

SimplicialFamily decode_family(const json& j) {
  SimplicialFamily f;
  for (const auto& m : array_of(field(j, "members"), "members")) f.members.push_back(decode_size(m, "member"));
  for (const auto& c : array_of(field(j, "coefficients"), "coefficients")) f.coefficients.push_back(decode_rational(c));
  if (f.members.size() != f.coefficients.size()) throw InputError("family members and coefficients differ in length");
  return f;
}

FarkasCertificate decode_certificate(const json& j) {
  FarkasCertificate c;
  for (const auto& e : array_of(j, "certificate"))
    c.multipliers.emplace_back(decode_size(field(e, "facet"), "facet"), decode_rational(field(e, "lambda")));
  return c;
}

ShadowCoverReport decode_shadow_report(const json& j, std::size_t ambient_dim) {
  ShadowCoverReport r;
  const json& seed = field(j, "seed");
  if (!seed.is_number_unsigned()) throw InputError("seed: expected a nonnegative integer");
  r.seed = seed.get<std::uint64_t>();
  r.d = decode_size(field(j, "d"), "d");
  r.entry_bound = decode_int(field(j, "entry_bound"), "entry_bound");
  r.trials = decode_size(field(j, "trials"), "trials");
  r.passes = decode_size(field(j, "passes"), "passes");
  if (j.contains("first_failure_trial")) r.first_failure_trial = decode_size(j["first_failure_trial"], "first_failure_trial");
  if (j.contains("first_failure")) r.first_failure = decode_subspace(j["first_failure"], ambient_dim);
  return r;
}

CounterexampleBundle decode_bundle(const json& j) {
  CounterexampleBundle b;
  const json& lj = field(j, "l");
  b.l = decode_polytope(lj);
  if (lj.contains("facets")) {
    const json& fs = array_of(lj["facets"], "facets");
    bool same = fs.size() == b.l.facets().size();
    for (std::size_t i = 0; same && i < fs.size(); ++i)
      same = decode_vector(field(fs[i], "normal"), b.l.dim()) == b.l.facets()[i].normal &&
             decode_rational(field(fs[i], "offset")) == b.l.facets()[i].offset;
    if (!same) throw InputError("stored facets of L do not match its recomputed hull");
  }
  b.d = decode_size(field(j, "d"), "d");
  b.family = decode_family(field(j, "family"));
  b.s = decode_polytope(field(j, "s"));
  if (b.s.dim() != b.l.dim()) throw InputError("S and L live in different dimensions");
  b.alpha = decode_rational(field(j, "alpha"));
  b.alpha_min = decode_rational(field(j, "alpha_min"));
  b.margin = decode_rational(field(j, "margin"));
  b.alpha_trials = decode_size(field(j, "alpha_trials"), "alpha_trials");
  b.noncontainment = decode_certificate(field(j, "noncontainment"));
  for (const auto& [i, lambda] : b.noncontainment.multipliers)
    if (i >= b.l.facets().size()) throw InputError("certificate names a facet L does not have");
  b.shadow_report = decode_shadow_report(field(j, "shadow_report"), b.l.dim());
  return b;
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

}  // namespace shadowcover::io
