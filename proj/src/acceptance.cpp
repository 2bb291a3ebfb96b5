#include "shadowcover/acceptance.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "shadowcover/corpus.hpp"
#include "shadowcover/counterexample.hpp"
#include "shadowcover/decomposability.hpp"
#include "shadowcover/random.hpp"

namespace shadowcover {

namespace {

// Outcome of a criterion body: checks_ok plus a one-line summary. The first
// failing check is reported verbatim.
struct Outcome {
  bool ok = true;
  std::string detail;
  std::string first_failure;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) first_failure = what;
    ok = ok && cond;
  }
};

std::mt19937_64 stream(std::uint64_t tag) {
  std::seed_seq seq{static_cast<std::uint32_t>(tag), 0x5eedu};
  return std::mt19937_64(seq);
}

RatMatrix random_nonsingular(std::mt19937_64& gen, std::size_t n, long long bound) {
  RatMatrix m(n, n);
  do {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m[i][j] = uniform_int(gen, -bound, bound);
  } while (determinant(m).is_zero());
  return m;
}

RatVector random_nonzero(std::mt19937_64& gen, std::size_t n, long long bound) {
  RatVector v(n);
  do {
    for (std::size_t j = 0; j < n; ++j) v[j] = uniform_int(gen, -bound, bound);
  } while (v.is_zero());
  return v;
}

Subspace hyperplane(const RatVector& normal) {
  const std::vector<RatVector> rows{normal};
  return Subspace(RatMatrix(orthogonal_complement(rows, normal.size()), normal.size()));
}

Subspace lift_subspace(const Subspace& xi, std::size_t target) {
  RatMatrix b(xi.dim(), target);
  for (std::size_t i = 0; i < xi.dim(); ++i)
    for (std::size_t j = 0; j < xi.ambient_dim(); ++j) b[i][j] = xi.basis()[i][j];
  return Subspace(std::move(b));
}

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> c = standard_corpus(1);
  return c;
}

Outcome square_pyramid() {
  Outcome o;
  const Polytope p = named_polytope("square-pyramid");
  const auto r1 = is_reliable(p, 1);
  o.require(!r1.reliable, "pyramid reported 1-reliable");
  o.require(r1.certificate && r1.certificate->size() == 3, "1-reliability certificate is not a 3-family");
  o.require(is_reliable(p, 2).reliable, "pyramid not 2-reliable");
  o.require(!is_decomposable(p, 2), "pyramid reported 2-decomposable");
  o.detail = "not 1-reliable (3-family), 2-reliable, not 2-decomposable";
  return o;
}

Outcome q_directions() {
  Outcome o;
  const auto q = std::get<DirectionSet>(named("q-directions"));
  o.require(q.size() == 12, "Q does not have 12 directions");
  o.require(enumerate_simplicial(q, 5).empty(), "Q has a simplicial family of size >= 5");
  const auto four = first_simplicial(q, 4);
  o.require(four && four->size() == 4, "Q has no simplicial 4-family");
  const auto rep = decompose(q);
  o.require(rep.components.size() == 1 && rep.max_component_dim() == 4, "Q does not form one 4-dim component");
  o.require(!rep.is_d_decomposable(3), "Q reported 3-decomposable");
  o.detail = "no 5-family among " + std::to_string(subset_count(12, 5, 5)) + " subsets of size 5, a 4-family, one 4-dim component";
  return o;
}

Outcome one_iff_one() {
  Outcome o;
  std::size_t agree = 0, yes = 0;
  for (const auto& e : corpus()) {
    const bool r = is_reliable(e.body, 1).reliable;
    const bool par = parallelotope_check(e.body);
    o.require(r == par, e.label + ": 1-reliable = " + std::to_string(r) + " but parallelotope = " + std::to_string(par));
    agree += r == par;
    yes += par;
  }
  o.require(corpus().size() >= 200, "corpus has fewer than 200 members");
  o.require(yes > 0 && yes < corpus().size(), "suite is one-sided");
  o.detail = std::to_string(agree) + "/" + std::to_string(corpus().size()) + " agree, " + std::to_string(yes) +
             " parallelotopes";
  return o;
}

std::vector<std::pair<std::string, Polytope>> symmetric_suite() {
  auto gen = stream(4);
  std::vector<std::pair<std::string, Polytope>> out;
  for (std::size_t i = 0; i < 60; ++i)
    out.emplace_back("sym3-" + std::to_string(i), random_symmetric_polytope(gen(), 3, 3 + i % 4, 4));
  for (std::size_t i = 0; i < 30; ++i)
    out.emplace_back("sym4-" + std::to_string(i), random_symmetric_polytope(gen(), 4, 4 + i % 2, 3));
  for (std::size_t i = 0; i < 12; ++i) {
    const std::vector<std::size_t> dims = i % 3 == 0   ? std::vector<std::size_t>{2, 1}
                                          : i % 3 == 1 ? std::vector<std::size_t>{2, 2}
                                                       : std::vector<std::size_t>{2, 1, 1};
    out.emplace_back("sum-" + std::to_string(i), random_symmetric_direct_sum(gen(), dims, 3, i % 2));
  }
  for (std::size_t i = 0; i < 8; ++i)
    out.emplace_back("par-" + std::to_string(i), random_parallelotope(gen(), 3 + i % 2, 3));
  return out;
}

Outcome two_iff_two() {
  Outcome o;
  const auto suite = symmetric_suite();
  const CrossCheckReport rep = cross_check_reliable_decomposable(suite);
  std::size_t reliable = 0;
  for (const auto& e : rep.entries) reliable += e.reliable;
  for (auto v : rep.violations) o.require(false, rep.entries[v].label + " disagrees");
  o.require(suite.size() >= 100, "fewer than 100 bodies");
  o.require(reliable > 0 && reliable < suite.size(), "suite is one-sided");
  o.detail = std::to_string(rep.entries.size() - rep.violations.size()) + "/" + std::to_string(rep.entries.size()) +
             " agree, " + std::to_string(reliable) + " 2-reliable";
  return o;
}

Outcome decomposable_implies_reliable() {
  Outcome o;
  std::size_t instances = 0, decomposable = 0;
  for (const auto& e : corpus())
    for (std::size_t d = 1; d < e.body.dim(); ++d) {
      ++instances;
      if (!is_decomposable(e.body, d)) continue;
      ++decomposable;
      o.require(is_reliable(e.body, d).reliable, e.label + " is " + std::to_string(d) + "-decomposable but not reliable");
    }
  o.require(decomposable > 0, "no decomposable instance");
  o.detail = std::to_string(instances) + " (P, d) instances, " + std::to_string(decomposable) + " decomposable";
  return o;
}

Outcome product_property() {
  Outcome o;
  auto gen = stream(6);
  std::size_t fits = 0, sheared = 0;
  const std::size_t pairs = 50;
  for (std::size_t i = 0; i < pairs; ++i) {
    const std::size_t n = 3 + i % 2;
    const std::vector<std::size_t> dims = n == 3 ? std::vector<std::size_t>{2, 1}
                                          : i % 4 == 1 ? std::vector<std::size_t>{2, 2}
                                                       : std::vector<std::size_t>{2, 1, 1};
    const bool shear = i % 3 != 0;
    sheared += shear;
    const RatMatrix basis = shear ? random_nonsingular(gen, n, 2) : RatMatrix::identity(n);
    std::vector<std::pair<Subspace, Polytope>> comps;
    std::size_t row = 0;
    for (auto d : dims) {
      RatMatrix b(d, n);
      for (std::size_t r = 0; r < d; ++r) b[r] = basis[row + r];
      row += d;
      comps.emplace_back(Subspace(std::move(b)), random_polytope(gen(), d, d + 2, 3));
    }
    const Polytope c = direct_sum(comps);
    // Halving every other K keeps both verdicts common.
    const Polytope k = scale(random_polytope(gen(), n, n + 2, 2), i % 2 ? Rational(1) : Rational(1, 2));
    const ProductVerdict pv = product_containment(k, comps);
    const ContainmentVerdict tv = translate_fit(k, c);
    const std::string tag = "pair " + std::to_string(i);
    o.require(pv.verdict.fits == tv.fits, tag + ": product and direct verdicts differ");
    o.require(verify_verdict(k, c, tv), tag + ": direct verdict does not verify");
    if (pv.verdict.fits) o.require(verify_witness(k, c, *pv.verdict.witness), tag + ": product witness does not verify");
    fits += tv.fits;
  }
  o.require(fits > 0 && fits < pairs, "suite is one-sided");
  o.detail = std::to_string(pairs) + " pairs (" + std::to_string(sheared) + " sheared), " + std::to_string(fits) + " fit";
  return o;
}

Outcome counterexamples() {
  Outcome o;
  std::vector<std::pair<std::string, std::pair<Polytope, std::size_t>>> jobs;
  jobs.push_back({"octahedron", {named_polytope("octahedron"), 2}});
  for (const char* name : {"standard-simplex-3", "standard-simplex-4"}) {
    const Polytope p = named_polytope(name);
    for (std::size_t d = 1; d < p.dim(); ++d) jobs.push_back({name, {p, d}});
  }
  for (const auto& e : corpus()) {
    if (e.family != "random") continue;
    for (std::size_t d = 1; d < e.body.dim(); ++d)
      if (!is_reliable(e.body, d).reliable) jobs.push_back({e.label, {e.body, d}});
  }
  std::size_t passed = 0;
  Rational smallest_gap;
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    const auto& [label, job] = jobs[i];
    const auto& [l, d] = job;
    const std::string tag = label + " d=" + std::to_string(d);
    const CounterexampleBundle b = build_counterexample(l, d, SubspaceSampler(1000 + i, d), 1000, Rational(1, 2));
    const BundleCheck chk = verify_bundle(b, SubspaceSampler(500000 + i, d), 2000);
    o.require(b.alpha > Rational(1), tag + ": alpha <= 1");
    o.require(chk.exact_pass(), tag + ": exact half failed");
    o.require(chk.statistical_pass() && chk.statistical.trials == 2000, tag + ": " + chk.summary());
    passed += chk.pass() && b.alpha > Rational(1);
    const Rational gap = b.alpha - Rational(1);
    if (i == 0 || gap < smallest_gap) smallest_gap = gap;
  }
  std::ostringstream os;
  os << passed << "/" << jobs.size() << " pipelines (exact + 2000 fresh shadows), min alpha - 1 = "
     << smallest_gap.to_double();
  o.detail = os.str();
  return o;
}

Outcome oblique_invariance() {
  Outcome o;
  auto gen = stream(8);
  std::size_t fits = 0;
  const std::size_t cases = 50;
  for (std::size_t i = 0; i < cases; ++i) {
    const std::size_t n = 2 + i % 3;
    const Polytope k = random_polytope(gen(), n, n + 2, 2);
    const Polytope l = random_polytope(gen(), n, n + 3, 3);
    const RatMatrix psi = random_nonsingular(gen, n, 3);
    const RatVector w = random_nonzero(gen, n, 3);
    // Shadow along the line R w; psi carries it to the line R psi w.
    const Subspace xi = hyperplane(w), xi2 = hyperplane(psi * w);
    const Polytope k2 = apply_linear(k, psi), l2 = apply_linear(l, psi);
    const ContainmentVerdict a = shadow_fit(k, l, xi), b = shadow_fit(k2, l2, xi2);
    const std::string tag = "case " + std::to_string(i);
    o.require(a.fits == b.fits, tag + ": verdict changed under psi");
    o.require(verify_verdict(project(k, xi), project(l, xi), a), tag + ": original verdict does not verify");
    o.require(verify_verdict(project(k2, xi2), project(l2, xi2), b), tag + ": transformed verdict does not verify");
    fits += a.fits;
  }
  o.require(fits > 0 && fits < cases, "suite is one-sided");
  o.detail = std::to_string(cases) + " (K, L, psi, u) cases, " + std::to_string(fits) + " fit";
  return o;
}

Outcome embedding_invariance() {
  Outcome o;
  std::size_t verdicts = 0;
  for (const auto& e : corpus()) {
    const Polytope up = embed(e.body, e.body.dim() + 1);
    for (std::size_t d = 1; d < e.body.dim(); ++d) {
      ++verdicts;
      o.require(is_reliable(e.body, d).reliable == is_reliable(up, d).reliable,
                e.label + ": embedding changed the " + std::to_string(d) + "-reliability verdict");
    }
  }
  auto gen = stream(9);
  std::size_t shadow_checks = 0, covering_pairs = 0;
  for (std::size_t i = 0; i < 30; ++i) {
    const std::size_t n = 2 + i % 2, d = 1 + i % n % (n - 1);
    const Polytope k = random_polytope(gen(), n, n + 2, 2), l = random_polytope(gen(), n, n + 3, 3);
    const Polytope ku = embed(k, n + 1), lu = embed(l, n + 1);
    const SubspaceSampler sampler(9000 + i, d);
    const ShadowCoverReport low = sampled_shadow_cover(k, l, d, sampler, 40);
    std::size_t lifted_passes = 0;
    for (std::size_t t = 0; t < 40; ++t) {
      const Subspace xi = sampler.draw(n, t);
      const bool a = shadow_fit(k, l, xi).fits;
      const bool b = shadow_fit(ku, lu, lift_subspace(xi, n + 1)).fits;
      o.require(a == b, "pair " + std::to_string(i) + ": lifted shadow verdict differs");
      lifted_passes += b;
      ++shadow_checks;
    }
    o.require(lifted_passes == low.passes, "pair " + std::to_string(i) + ": sampled cover counts differ");
    if (translate_fit(k, l).fits) {
      ++covering_pairs;
      o.require(sampled_shadow_cover(ku, lu, d, SubspaceSampler(9100 + i, d), 40).all_pass(),
                "pair " + std::to_string(i) + ": embedded covering pair failed a shadow in R^(n+1)");
    }
  }
  o.detail = std::to_string(verdicts) + " reliability verdicts, " + std::to_string(shadow_checks) +
             " lifted shadows, " + std::to_string(covering_pairs) + " covering pairs re-sampled in R^(n+1)";
  return o;
}

Outcome infrastructure() {
  Outcome o;
  const auto& c = corpus();
  std::size_t support_checks = 0, lp_checks = 0;
  auto gen = stream(10);
  for (std::size_t i = 0; i < c.size(); ++i) {
    const Polytope& p = c[i].body;
    const std::string& tag = c[i].label;
    const std::size_t n = p.dim();
    o.require(Polytope::hull(p.vertices()) == p, tag + ": hull round-trip");
    o.require(vector_area_check(p), tag + ": facet area vectors do not sum to zero");

    // Partner for the Minkowski sum: the next body of the same dimension
    // when the point count stays small, else a segment.
    const Polytope* next = nullptr;
    for (std::size_t j = 1; j < c.size() && !next; ++j)
      if (c[(i + j) % c.size()].body.dim() == n) next = &c[(i + j) % c.size()].body;
    RatVector w(n);
    for (std::size_t j = 0; j < n; ++j) w[j] = static_cast<long long>(j + 1);
    const Polytope segment = Polytope::hull({RatVector(n), w});
    const Polytope& q = next->vertices().size() * p.vertices().size() <= 36 ? *next : segment;
    const Polytope sum = minkowski_sum(p, q);
    std::vector<RatVector> dirs;
    for (const auto& f : sum.facets()) dirs.push_back(f.normal);
    for (int k = 0; k < 5; ++k) dirs.push_back(random_nonzero(gen, n, 5));
    for (const auto& u : dirs) {
      ++support_checks;
      o.require(support(sum, u) == support(p, u) + support(q, u), tag + ": support not additive");
    }

    for (const auto& [a, b] : {std::pair{&p, next}, std::pair{next, &p}}) {
      ++lp_checks;
      o.require(verify_verdict(*a, *b, translate_fit(*a, *b)), tag + ": containment verdict does not verify");
    }
  }
  o.detail = std::to_string(c.size()) + " bodies, " + std::to_string(support_checks) + " support sums, " +
             std::to_string(lp_checks) + " LP verdicts re-verified";
  return o;
}

struct Criterion {
  const char* title;
  double budget_seconds;
  std::function<Outcome()> body;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all{
      {"square pyramid verdicts", 1, square_pyramid},
      {"Q direction set", 1, q_directions},
      {"1-reliable iff parallelotope", 60, one_iff_one},
      {"2-reliable iff 2-decomposable (symmetric)", 300, two_iff_two},
      {"decomposable implies reliable", 300, decomposable_implies_reliable},
      {"product containment", 120, product_property},
      {"counterexample pipeline", 600, counterexamples},
      {"linear-image invariance of hyperplane shadows", 120, oblique_invariance},
      {"embedding invariance", 300, embedding_invariance},
      {"infrastructure invariants", 300, infrastructure},
  };
  return all;
}

}  // namespace

std::string CriterionResult::line() const {
  char timing[64];
  std::snprintf(timing, sizeof timing, "%.2f s of %.0f s", seconds, budget_seconds);
  return "criterion " + std::to_string(id) + ": " + (pass() ? "PASS " : "FAIL ") + title + " (" + detail + "; " +
         timing + ")";
}

CriterionResult run_criterion(int id) {
  if (id < 1 || id > kCriterionCount) throw std::out_of_range("no criterion " + std::to_string(id));
  const Criterion& c = criteria()[id - 1];
  CriterionResult r;
  r.id = id;
  r.title = c.title;
  r.budget_seconds = c.budget_seconds;
  const auto start = std::chrono::steady_clock::now();
  try {
    Outcome o = c.body();
    r.checks_ok = o.ok;
    r.detail = o.ok ? o.detail : o.first_failure + "; " + o.detail;
  } catch (const std::exception& e) {
    r.checks_ok = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<CriterionResult> run_acceptance(std::ostream* log) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriterionCount; ++id) {
    out.push_back(run_criterion(id));
    if (log) *log << out.back().line() << std::endl;
  }
  return out;
}

}  // namespace shadowcover
