#include "shadowcover/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "shadowcover/acceptance.hpp"
#include "shadowcover/decomposability.hpp"
#include "shadowcover/io.hpp"

#ifndef SHADOWCOVER_VERSION
#define SHADOWCOVER_VERSION "unknown"
#endif

namespace shadowcover {

namespace {

using io::InputError;
using io::json;

struct RunConfig {
  std::string command;
  std::vector<std::string> inputs;
  std::optional<std::size_t> d;
  std::optional<std::uint64_t> seed;
  std::size_t trials = 1000;
  long long bound = 10;
  std::string margin = "1/2";
  std::string format = "json";
  std::string out;
  bool affine = false;
  std::vector<int> criteria;

  json to_json() const {
    json j{{"command", command}, {"inputs", inputs},   {"trials", trials}, {"bound", bound},
           {"margin", margin},   {"format", format},   {"affine", affine}};
    j["d"] = d ? json(*d) : json(nullptr);
    j["seed"] = seed ? json(*seed) : json(nullptr);
    j["out"] = out.empty() ? json(nullptr) : json(out);
    if (!criteria.empty()) j["criteria"] = criteria;
    return j;
  }
};

// A finished command: machine report, human rendering, exit code.
struct Result {
  json report;
  std::vector<std::string> text;
  int code = kExitYes;
  bool bare = false;  // report is an input document; print without the envelope
};

std::string approx(const Rational& q) {
  std::ostringstream os;
  os << q;
  if (!q.is_integer()) os << " (≈ " << std::setprecision(6) << q.to_double() << ")";
  return os.str();
}

std::string show(const RatVector& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

std::string seed_note(std::uint64_t seed) { return "seed " + std::to_string(seed); }

// Reads a polytope; lower-dimensional input is an error unless --affine
// maps it to coordinates of its affine hull.
Polytope full_or_affine(const RunConfig& cfg, const std::string& path, Polytope p) {
  if (p.full_dimensional()) return p;
  if (!cfg.affine)
    throw InputError(path + ": polytope is " + std::to_string(p.affine_dim()) + "-dimensional in Q^" +
                     std::to_string(p.dim()) + "; pass --affine to work in its affine hull");
  if (p.affine_dim() == 0) throw InputError(path + ": polytope is a single point");
  return affine_coordinates(p);
}

Polytope load_body(const RunConfig& cfg, const std::string& path, bool need_full) {
  Polytope p = io::decode_polytope(io::read_json_file(path));
  return need_full ? full_or_affine(cfg, path, std::move(p)) : p;
}

Geometry load_geometry(const RunConfig& cfg, const std::string& path) {
  Geometry g = io::decode_geometry(io::read_json_file(path));
  if (auto* p = std::get_if<Polytope>(&g)) return full_or_affine(cfg, path, std::move(*p));
  return g;
}

std::size_t ambient(const Geometry& g) {
  return std::visit([](const auto& x) { return x.dim(); }, g);
}

std::size_t checked_d(const RunConfig& cfg, std::size_t n, std::size_t hi) {
  if (!cfg.d) throw InputError("--d is required");
  if (*cfg.d < 1 || *cfg.d > hi)
    throw InputError("--d must lie in [1, " + std::to_string(hi) + "] for dimension " + std::to_string(n));
  return *cfg.d;
}

Rational checked_margin(const RunConfig& cfg) {
  Rational m;
  try {
    m = Rational::parse(cfg.margin);
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("--margin: ") + e.what());
  }
  if (m.sign() <= 0 || m >= Rational(1)) throw InputError("--margin must lie strictly between 0 and 1");
  return m;
}

Result cmd_validate(const RunConfig& cfg) {
  const std::string& path = cfg.inputs.at(0);
  std::size_t raw = 0;
  const Polytope p = io::decode_polytope(io::read_json_file(path), &raw);
  const bool round_trip = Polytope::hull(p.vertices()) == p;
  const bool area = p.affine_dim() == 0 || vector_area_check(p.full_dimensional() ? p : affine_coordinates(p));
  const auto center = is_centrally_symmetric(p);
  Result r;
  r.report = {{"dim", p.dim()},
              {"affine_dim", p.affine_dim()},
              {"input_points", raw},
              {"vertices", p.vertices().size()},
              {"removed_points", raw - p.vertices().size()},
              {"facets", p.facets().size()},
              {"hull_round_trip", round_trip},
              {"vector_area_check", area},
              {"centrally_symmetric", center.has_value()},
              {"polytope", io::encode(p, true)}};
  if (center) r.report["center"] = io::encode(*center);
  r.code = round_trip && area ? kExitYes : kExitNo;
  r.report["pass"] = r.code == kExitYes;
  r.text.push_back(std::string(r.code == kExitYes ? "PASS" : "FAIL") + ": " + path);
  r.text.push_back("dimension " + std::to_string(p.dim()) + ", affine dimension " + std::to_string(p.affine_dim()));
  r.text.push_back(std::to_string(p.vertices().size()) + " vertices, " + std::to_string(p.facets().size()) + " facets");
  if (raw != p.vertices().size())
    r.text.push_back("note: " + std::to_string(raw - p.vertices().size()) +
                     " duplicate or non-extreme input points removed");
  r.text.push_back(std::string("hull round-trip: ") + (round_trip ? "ok" : "FAILED"));
  r.text.push_back(std::string("facet area vectors sum to zero: ") + (area ? "ok" : "FAILED"));
  r.text.push_back(center ? "centrally symmetric about " + show(*center) : "not centrally symmetric");
  return r;
}

json family_json(const DirectionSet& a, const SimplicialFamily& f) {
  json j = io::encode(f);
  j["directions"] = json::array();
  for (auto i : f.members) j["directions"].push_back(io::encode(a[i]));
  return j;
}

std::string family_text(const DirectionSet& a, const SimplicialFamily& f) {
  std::ostringstream os;
  for (std::size_t k = 0; k < f.size(); ++k) os << (k ? " + " : "") << f.coefficients[k] << "*" << a[f.members[k]];
  os << " = 0";
  return os.str();
}

Result cmd_reliability(const RunConfig& cfg) {
  const Geometry g = load_geometry(cfg, cfg.inputs.at(0));
  const DirectionSet a = std::holds_alternative<Polytope>(g) ? DirectionSet::facet_normals(std::get<Polytope>(g))
                                                             : std::get<DirectionSet>(g);
  const std::size_t d = checked_d(cfg, a.dim(), a.dim() - 1);
  const ReliabilityVerdict v = is_reliable(a, d);
  Result r;
  r.report = {{"d", d}, {"dim", a.dim()}, {"directions", a.size()}, {"reliable", v.reliable}};
  r.report["certificate"] = v.certificate ? family_json(a, *v.certificate) : json(nullptr);
  r.code = v.reliable ? kExitYes : kExitNo;
  if (v.reliable) {
    r.text.push_back(std::to_string(d) + "-reliable: no simplicial family of " + std::to_string(d + 2) +
                     " or more among " + std::to_string(a.size()) + " directions");
  } else {
    r.text.push_back("not " + std::to_string(d) + "-reliable; simplicial " + std::to_string(v.certificate->size()) +
                     "-family:");
    r.text.push_back("  " + family_text(a, *v.certificate));
  }
  return r;
}

Result cmd_decompose(const RunConfig& cfg) {
  const Geometry g = load_geometry(cfg, cfg.inputs.at(0));
  const std::size_t n = ambient(g);
  const DecompositionReport rep =
      std::holds_alternative<Polytope>(g) ? decompose(std::get<Polytope>(g)) : decompose(std::get<DirectionSet>(g));
  if (cfg.d) checked_d(cfg, n, n);
  Result r;
  json comps = json::array();
  for (const auto& c : rep.components)
    comps.push_back({{"dim", c.span.dim()}, {"members", c.members}, {"span", io::encode(c.span.basis())}});
  json table = json::object();
  for (std::size_t d = 1; d <= n; ++d) table[std::to_string(d)] = rep.is_d_decomposable(d);
  r.report = {{"dim", n}, {"components", comps}, {"max_component_dim", rep.max_component_dim()},
              {"decomposable", table}};
  if (rep.factors) {
    json fs = json::array();
    for (const auto& [eta, f] : *rep.factors) fs.push_back({{"subspace", io::encode(eta)}, {"polytope", io::encode(f)}});
    r.report["factors"] = fs;
  }
  std::ostringstream dims;
  for (std::size_t i = 0; i < rep.components.size(); ++i) dims << (i ? ", " : "") << rep.components[i].span.dim();
  r.text.push_back(std::to_string(rep.components.size()) + " component(s) of dimension " + dims.str());
  for (std::size_t d = 1; d <= n; ++d)
    r.text.push_back("  " + std::to_string(d) + "-decomposable: " + (rep.is_d_decomposable(d) ? "yes" : "no"));
  if (rep.factors)
    for (std::size_t i = 0; i < rep.factors->size(); ++i)
      r.text.push_back("  factor " + std::to_string(i) + ": " + std::to_string((*rep.factors)[i].second.vertices().size()) +
                       " vertices in a " + std::to_string((*rep.factors)[i].first.dim()) + "-dim subspace");
  if (cfg.d) {
    r.report["d"] = *cfg.d;
    r.code = rep.is_d_decomposable(*cfg.d) ? kExitYes : kExitNo;
  }
  return r;
}

std::pair<Polytope, Polytope> load_pair(const RunConfig& cfg) {
  Polytope k = load_body(cfg, cfg.inputs.at(0), false), l = load_body(cfg, cfg.inputs.at(1), false);
  if (k.dim() != l.dim()) throw InputError("K and L live in different dimensions");
  return {std::move(k), std::move(l)};
}

Result cmd_contain(const RunConfig& cfg) {
  const auto [k, l] = load_pair(cfg);
  const ContainmentVerdict v = translate_fit(k, l);
  if (!verify_verdict(k, l, v)) throw std::logic_error("containment verdict failed re-verification");
  Result r;
  r.report = io::encode(v);
  r.report["verified"] = true;
  r.code = v.fits ? kExitYes : kExitNo;
  if (v.fits) {
    r.text.push_back("fits: K + v lies in L for v = " + show(*v.witness));
  } else if (v.hull_mismatch) {
    r.text.push_back("does not fit: the affine hull of K is not parallel to a subspace of L's");
  } else {
    r.text.push_back("does not fit; Farkas multipliers on the facets of L:");
    for (const auto& [i, lambda] : v.certificate->multipliers)
      r.text.push_back("  facet " + std::to_string(i) + " " + show(l.facets()[i].normal) + ": " + approx(lambda));
  }
  return r;
}

std::vector<std::string> shadow_text(const ShadowCoverReport& s) {
  std::vector<std::string> t{std::to_string(s.passes) + "/" + std::to_string(s.trials) + " sampled " +
                             std::to_string(s.d) + "-shadows fit (" + seed_note(s.seed) + ", entries in [-" +
                             std::to_string(s.entry_bound) + ", " + std::to_string(s.entry_bound) + "])"};
  if (s.first_failure) {
    std::ostringstream os;
    os << "first failure at trial " << *s.first_failure_trial << ", basis " << s.first_failure->basis();
    t.push_back(os.str());
  }
  t.push_back("evidence only: passing every sample does not prove the shadow cover");
  return t;
}

Result cmd_shadow_cover(const RunConfig& cfg) {
  const auto [k, l] = load_pair(cfg);
  const std::size_t d = checked_d(cfg, k.dim(), k.dim());
  const ShadowCoverReport s =
      sampled_shadow_cover(k, l, d, SubspaceSampler(*cfg.seed, d, cfg.bound), cfg.trials);
  Result r;
  r.report = io::encode(s);
  r.report["statistical"] = true;
  r.text = shadow_text(s);
  r.code = s.all_pass() ? kExitYes : kExitNo;
  return r;
}

// The fresh verification sampler never reuses the construction seed.
std::uint64_t fresh_seed(std::uint64_t seed) { return seed + 1; }

json check_json(const BundleCheck& c) {
  json j{{"exact_pass", c.exact_pass()},
         {"statistical_pass", c.statistical_pass()},
         {"pass", c.pass()},
         {"full_verdict", io::encode(c.full_verdict)},
         {"family_certificate_ok", c.family_certificate_ok},
         {"stored_certificate_ok", c.stored_certificate_ok},
         {"statistical", io::encode(c.statistical)}};
  j["restricted_certificate"] = c.restricted_certificate ? io::encode(*c.restricted_certificate) : json(nullptr);
  return j;
}

std::vector<std::string> check_text(const BundleCheck& c) {
  std::vector<std::string> t{std::string("exact non-containment: ") + (c.exact_pass() ? "PASS" : "FAIL")};
  for (auto& line : shadow_text(c.statistical)) t.push_back(line);
  t.push_back(std::string("overall: ") + (c.pass() ? "PASS" : "FAIL"));
  return t;
}

Result cmd_counterexample(const RunConfig& cfg) {
  const Polytope l = load_body(cfg, cfg.inputs.at(0), true);
  const std::size_t d = checked_d(cfg, l.dim(), l.dim() - 1);
  const Rational margin = checked_margin(cfg);
  Result r;
  const ReliabilityVerdict rel = is_reliable(l, d);
  if (rel.reliable) {
    r.report = {{"d", d}, {"reliable", true}, {"bundle", nullptr}};
    r.text.push_back("L is " + std::to_string(d) + "-reliable, so no counterexample exists");
    r.code = kExitNo;
    return r;
  }
  const CounterexampleBundle b =
      build_counterexample(l, d, SubspaceSampler(*cfg.seed, d, cfg.bound), cfg.trials, margin, rel.certificate);
  const std::size_t verify_trials = 2 * cfg.trials;
  const BundleCheck c = verify_bundle(b, SubspaceSampler(fresh_seed(*cfg.seed), d, cfg.bound), verify_trials);
  r.report = {{"d", d}, {"reliable", false}, {"bundle", io::encode(b)}, {"verification", check_json(c)},
              {"verification_seed", fresh_seed(*cfg.seed)}};
  r.text.push_back("simplicial family on the facets of L: " +
                   family_text(DirectionSet::facet_normals(l), b.family));
  r.text.push_back("S = hull of the family facet centroids, " + std::to_string(b.s.vertices().size()) + " vertices");
  r.text.push_back("alpha = " + approx(b.alpha) + ", smallest sampled shadow scale " + approx(b.alpha_min));
  r.text.push_back("construction shadows: " + std::to_string(b.shadow_report.passes) + "/" +
                   std::to_string(b.shadow_report.trials) + " fit");
  r.text.push_back("verification with " + seed_note(fresh_seed(*cfg.seed)) + ":");
  for (auto& line : check_text(c)) r.text.push_back("  " + line);
  r.code = c.pass() ? kExitYes : kExitNo;
  return r;
}

Result cmd_verify_bundle(const RunConfig& cfg) {
  json doc = io::read_json_file(cfg.inputs.at(0));
  // Accept a counterexample report as well as a bare bundle.
  if (doc.is_object() && doc.contains("result") && doc["result"].is_object() && doc["result"].contains("bundle"))
    doc = doc["result"]["bundle"];
  if (doc.is_null()) throw InputError("report holds no bundle");
  const CounterexampleBundle b = io::decode_bundle(doc);
  if (b.d < 1 || b.d + 1 > b.l.dim()) throw InputError("bundle has d outside [1, n-1]");
  const std::size_t trials = 2 * cfg.trials;
  const BundleCheck c = verify_bundle(b, SubspaceSampler(*cfg.seed, b.d, cfg.bound), trials);
  Result r;
  r.report = check_json(c);
  r.report["alpha"] = io::encode(b.alpha);
  r.text = check_text(c);
  r.code = c.pass() ? kExitYes : kExitNo;
  return r;
}

Result cmd_corpus(const RunConfig& cfg) {
  Result r;
  if (cfg.inputs.empty()) {
    r.report = json::array();
    for (const auto& e : catalog()) {
      const bool dirs = std::holds_alternative<DirectionSet>(named(e.name));
      r.report.push_back({{"name", e.name}, {"description", e.description}, {"kind", dirs ? "directions" : "polytope"}});
      r.text.push_back(e.name + "  " + e.description);
    }
    return r;
  }
  Geometry g;
  try {
    g = named(cfg.inputs[0]);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  r.report = std::visit([](const auto& x) { return io::encode(x); }, g);
  r.bare = true;
  return r;
}

Result cmd_selftest(const RunConfig& cfg, std::ostream& err) {
  std::vector<int> ids = cfg.criteria;
  if (ids.empty())
    for (int i = 1; i <= kCriterionCount; ++i) ids.push_back(i);
  Result r;
  r.report = json::array();
  bool ok = true;
  for (int id : ids) {
    if (id < 1 || id > kCriterionCount) throw InputError("no criterion " + std::to_string(id));
    const CriterionResult c = run_criterion(id);
    // Progress goes to stderr; timings stay out of the report.
    err << c.line() << std::endl;
    r.report.push_back({{"criterion", id}, {"title", c.title}, {"pass", c.pass()}, {"detail", c.detail}});
    r.text.push_back(c.line());
    ok = ok && c.pass();
  }
  r.code = ok ? kExitYes : kExitNo;
  return r;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact shadow-containment analysis of convex polytopes", "shadowcover"};
  app.set_version_flag("--version", std::string(SHADOWCOVER_VERSION));
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--out", cfg.out, "Write the report to this file instead of stdout");
  };
  auto add_sampling = [&](CLI::App* sub) {
    sub->add_option("--seed", cfg.seed, "Seed of the subspace sampler")->required();
    sub->add_option("--trials", cfg.trials, "Sampled subspaces")->capture_default_str()->check(CLI::PositiveNumber);
    sub->add_option("--bound", cfg.bound, "Basis entries are drawn from [-bound, bound]")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
  };

  auto* validate = app.add_subcommand("validate", "Check a polytope file: hull, facet identity, symmetry");
  validate->add_option("file", cfg.inputs, "Polytope JSON")->required()->expected(1);
  add_format(validate);

  auto* reliability = app.add_subcommand("reliability", "Decide d-reliability of a polytope or direction set");
  reliability->add_option("file", cfg.inputs, "Polytope or direction-set JSON")->required()->expected(1);
  reliability->add_option("--d", cfg.d, "Shadow dimension")->required();
  reliability->add_flag("--affine", cfg.affine, "Work in the affine hull of a lower-dimensional polytope");
  add_format(reliability);

  auto* decomp = app.add_subcommand("decompose", "Split the normals into components and extract factors");
  decomp->add_option("file", cfg.inputs, "Polytope or direction-set JSON")->required()->expected(1);
  decomp->add_option("--d", cfg.d, "Exit 0 iff d-decomposable");
  decomp->add_flag("--affine", cfg.affine, "Work in the affine hull of a lower-dimensional polytope");
  add_format(decomp);

  auto* contain = app.add_subcommand("contain", "Does a translate of K fit in L?");
  contain->add_option("files", cfg.inputs, "K and L polytope JSON")->required()->expected(2);
  add_format(contain);

  auto* shadow = app.add_subcommand("shadow-cover", "Sample d-shadows of K and L and test each for containment");
  shadow->add_option("files", cfg.inputs, "K and L polytope JSON")->required()->expected(2);
  shadow->add_option("--d", cfg.d, "Shadow dimension")->required();
  add_sampling(shadow);
  add_format(shadow);

  auto* counter = app.add_subcommand("counterexample", "Build and verify a shadow-cover counterexample for L");
  counter->add_option("file", cfg.inputs, "Polytope JSON for L")->required()->expected(1);
  counter->add_option("--d", cfg.d, "Shadow dimension")->required();
  counter->add_option("--margin", cfg.margin, "alpha = 1 + margin (alpha_min - 1), a rational in (0, 1)")
      ->capture_default_str();
  counter->add_flag("--affine", cfg.affine, "Work in the affine hull of a lower-dimensional polytope");
  add_sampling(counter);
  add_format(counter);

  auto* verify = app.add_subcommand("verify-bundle", "Re-verify a counterexample bundle on fresh subspaces");
  verify->add_option("file", cfg.inputs, "Bundle JSON or counterexample report")->required()->expected(1);
  add_sampling(verify);
  add_format(verify);

  auto* corpus = app.add_subcommand(
      "corpus", "List named examples, or print one as a bare polytope or direction-set document");
  corpus->add_option("name", cfg.inputs, "Example name")->expected(0, 1);
  add_format(corpus);

  auto* selftest = app.add_subcommand("selftest", "Run the acceptance criteria");
  selftest->add_option("--criterion", cfg.criteria, "Run only these criteria");
  add_format(selftest);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitYes : kExitInput;
  }
  cfg.command = app.get_subcommands().front()->get_name();

  Result r;
  try {
    if (cfg.command == "validate") r = cmd_validate(cfg);
    else if (cfg.command == "reliability") r = cmd_reliability(cfg);
    else if (cfg.command == "decompose") r = cmd_decompose(cfg);
    else if (cfg.command == "contain") r = cmd_contain(cfg);
    else if (cfg.command == "shadow-cover") r = cmd_shadow_cover(cfg);
    else if (cfg.command == "counterexample") r = cmd_counterexample(cfg);
    else if (cfg.command == "verify-bundle") r = cmd_verify_bundle(cfg);
    else if (cfg.command == "corpus") r = cmd_corpus(cfg);
    else r = cmd_selftest(cfg, err);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }

  std::ostringstream body;
  if (r.bare) {
    body << r.report.dump(2) << "\n";
  } else if (cfg.format == "json") {
    const json report{{"tool", "shadowcover"}, {"version", SHADOWCOVER_VERSION}, {"config", cfg.to_json()},
                      {"exit_code", r.code},   {"result", r.report}};
    body << report.dump(2) << "\n";
  } else {
    for (const auto& line : r.text) body << line << "\n";
  }
  if (cfg.out.empty()) {
    out << body.str();
  } else {
    std::ofstream f(cfg.out);
    if (!(f << body.str())) {
      err << "error: cannot write " << cfg.out << "\n";
      return kExitInput;
    }
  }
  return r.code;
}

}  // namespace shadowcover
