#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "shadowcover/io.hpp"
#include "test_support.hpp"

using namespace shadowcover;
using namespace shadowcover::io;
using fixture::iv;

TEST(Rationals, WriterUsesLowestTerms) {
  EXPECT_EQ(encode(Rational(6, -4)), json("-3/2"));
  EXPECT_EQ(encode(Rational(8, 4)), json("2"));
  EXPECT_EQ(encode(Rational::parse("123456789012345678901234567890/3")), json("41152263004115226300411522630"));
}

TEST(Rationals, ReaderAcceptsStringsAndIntegers) {
  EXPECT_EQ(decode_rational(json("10/4")), Rational(5, 2));
  EXPECT_EQ(decode_rational(json("-7")), Rational(-7));
  EXPECT_EQ(decode_rational(json(3)), Rational(3));
  EXPECT_EQ(decode_rational(json(-3)), Rational(-3));
}

TEST(Rationals, ReaderRejectsMalformed) {
  for (const json& bad : {json("1/0"), json("1.5"), json("abc"), json(" 1"), json("1/"), json("/2"), json(""),
                          json("1/-2"), json(1.5), json(nullptr), json::array(), json(true)})
    EXPECT_THROW(decode_rational(bad), InputError) << bad.dump();
}

TEST(Polytopes, RoundTrip) {
  const Polytope p = fixture::square_pyramid();
  const json j = encode(p);
  EXPECT_EQ(j.at("dim"), 3);
  EXPECT_EQ(j.at("vertices").size(), 5u);
  EXPECT_FALSE(j.contains("facets"));
  EXPECT_EQ(decode_polytope(j), p);
  const json jf = encode(p, true);
  ASSERT_EQ(jf.at("facets").size(), 5u);
  EXPECT_EQ(decode_rational(jf["facets"][0]["offset"]), p.facets()[0].offset);
}

TEST(Polytopes, ParsesLiteralDocumentAndNotesDuplicates) {
  const json j = json::parse(R"({"dim": 2, "vertices": [["0","0"], ["1/2", 0], [0, "1/2"], ["1/2", "0"], ["1/8", "1/8"]]})");
  std::size_t raw = 0;
  const Polytope p = decode_polytope(j, &raw);
  EXPECT_EQ(raw, 5u);
  EXPECT_EQ(p.vertices().size(), 3u);
  EXPECT_EQ(p, Polytope::hull({iv({0, 0}), RatVector{Rational(1, 2), Rational(0)}, RatVector{Rational(0), Rational(1, 2)}}));
}

TEST(Polytopes, RejectsBadDocuments) {
  for (const char* text : {R"({"vertices": [[0]]})", R"({"dim": 2})", R"({"dim": 0, "vertices": [[]]})",
                           R"({"dim": 2, "vertices": []})", R"({"dim": 2, "vertices": [[0, 1, 2]]})",
                           R"({"dim": -1, "vertices": [[0]]})", R"({"dim": 2, "vertices": [["a", 0]]})",
                           R"({"dim": 2, "vertices": {"x": 1}})", R"([1, 2])"})
    EXPECT_THROW(decode_polytope(json::parse(text)), InputError) << text;
}

TEST(Directions, RoundTripAndGeometryDispatch) {
  const DirectionSet a(3, {iv({1, 0, 0}), iv({-1, 0, 0}), iv({0, 2, 1})});
  const json j = encode(a);
  const Geometry g = decode_geometry(j);
  ASSERT_TRUE(std::holds_alternative<DirectionSet>(g));
  EXPECT_EQ(std::get<DirectionSet>(g).directions(), a.directions());
  EXPECT_TRUE(std::holds_alternative<Polytope>(decode_geometry(encode(fixture::cube(2)))));
  EXPECT_THROW(decode_geometry(json::parse(R"({"dim": 2})")), InputError);
  EXPECT_THROW(decode_directions(json::parse(R"({"dim": 2, "directions": [[0, 0]]})")), InputError);
  EXPECT_THROW(decode_directions(json::parse(R"({"dim": 2, "directions": [[1, 1], [2, 2]]})")), InputError);
}

TEST(Certificates, FamilyAndFarkasRoundTrip) {
  const SimplicialFamily f{{0, 2, 5}, {Rational(1), Rational(2, 3), Rational(5)}};
  EXPECT_EQ(decode_family(encode(f)), f);
  FarkasCertificate c;
  c.multipliers = {{1, Rational(1, 2)}, {4, Rational(3)}};
  EXPECT_EQ(decode_certificate(encode(c)).multipliers, c.multipliers);
  EXPECT_THROW(decode_family(json::parse(R"({"members": [0, 1], "coefficients": ["1"]})")), InputError);
  EXPECT_THROW(decode_certificate(json::parse(R"([{"facet": -1, "lambda": "1"}])")), InputError);
}

TEST(Subspaces, RoundTripAndRankCheck) {
  const Subspace s(RatMatrix{iv({1, 2, 0}), iv({0, 1, -3})});
  EXPECT_EQ(decode_subspace(encode(s), 3).basis(), s.basis());
  EXPECT_THROW(decode_subspace(json::parse(R"({"basis": [[1, 1], [2, 2]]})"), 2), InputError);
}

TEST(Bundles, RoundTripReverifies) {
  const Polytope oct = fixture::cross_polytope(3);
  const SubspaceSampler sampler(5, 2);
  const CounterexampleBundle b = build_counterexample(oct, 2, sampler, 100, Rational(1, 2));
  const json j = encode(b);
  // Rationals only as strings; no floating point anywhere.
  EXPECT_EQ(j.dump().find('.'), std::string::npos);
  const CounterexampleBundle back = decode_bundle(json::parse(j.dump()));
  EXPECT_EQ(back.l, b.l);
  EXPECT_EQ(back.s, b.s);
  EXPECT_EQ(back.family, b.family);
  EXPECT_EQ(back.alpha, b.alpha);
  EXPECT_EQ(back.alpha_min, b.alpha_min);
  EXPECT_EQ(back.noncontainment.multipliers, b.noncontainment.multipliers);
  EXPECT_EQ(back.shadow_report.seed, 5u);
  EXPECT_EQ(back.shadow_report.passes, b.shadow_report.passes);
  EXPECT_EQ(encode(back), j);
  EXPECT_TRUE(verify_bundle(back, SubspaceSampler(6, 2), 200).pass());
}

TEST(Bundles, TamperedFacetsOrAlphaAreCaught) {
  const CounterexampleBundle b = build_counterexample(fixture::cross_polytope(3), 2, SubspaceSampler(5, 2), 50,
                                                      Rational(1, 2));
  json j = encode(b);
  std::swap(j["l"]["facets"][0], j["l"]["facets"][1]);
  EXPECT_THROW(decode_bundle(j), InputError);

  json k = encode(b);
  k["alpha"] = "1";  // alpha S = S touches L; the exact half must fail
  const BundleCheck chk = verify_bundle(decode_bundle(k), SubspaceSampler(6, 2), 20);
  EXPECT_FALSE(chk.exact_pass());
  EXPECT_TRUE(chk.full_verdict.fits);
}

TEST(Files, ReadErrorsAreInputErrors) {
  const auto dir = std::filesystem::temp_directory_path() / "shadowcover_test_io";
  std::filesystem::create_directories(dir);
  EXPECT_THROW(read_json_file(dir / "missing.json"), InputError);
  {
    std::ofstream(dir / "bad.json") << "{\"dim\": 2,";
  }
  EXPECT_THROW(read_json_file(dir / "bad.json"), InputError);
  {
    std::ofstream(dir / "good.json") << encode(fixture::cube(2)).dump();
  }
  EXPECT_EQ(decode_polytope(read_json_file(dir / "good.json")), fixture::cube(2));
  std::filesystem::remove_all(dir);
}
