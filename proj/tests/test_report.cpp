#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "test_support.hpp"

using namespace origami;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Input, JsonForm) {
  Origami o = parse_origami_spec(R"({"n": 3, "r": [2,1,3], "u": [3,2,1]})");
  EXPECT_EQ(o, L(2, 2));
  EXPECT_EQ(origami_from_json(origami_to_json(Ogn(3, 9))), Ogn(3, 9));
  EXPECT_EQ(parse_origami_spec("(1,2)|(1,3)"), L(2, 2));
  EXPECT_THROW(parse_origami_spec(R"({"n": 4, "r": [2,1,3], "u": [3,2,1]})"), InputError);
  EXPECT_THROW(parse_origami_spec(R"({"r": [2,2,3], "u": [3,2,1]})"), InputError);
  EXPECT_THROW(parse_origami_spec("{broken"), InputError);
}

TEST(Analyze, SmallestOrbit) {
  AnalysisReport r = analyze(L(2, 2));
  EXPECT_EQ(r.d, 3u);
  EXPECT_EQ(r.level, 2u);
  EXPECT_EQ(r.e, 3u);
  EXPECT_EQ(r.f, 1u);
  EXPECT_TRUE(r.congruence);
  EXPECT_FALSE(r.totally_noncongruence);
  EXPECT_EQ(r.image_order, "2");
}

TEST(Analyze, ExtraModuliAndCertificates) {
  AnalyzeOptions opt;
  opt.moduli = {5, 15, 30};
  opt.certificates = true;
  AnalysisReport r = analyze(L(3, 3), opt);
  EXPECT_EQ(r.d, 9u);
  EXPECT_EQ(r.level, 15u);
  EXPECT_EQ(r.e, 1u);
  EXPECT_EQ(r.f, 9u);
  ASSERT_EQ(r.moduli.size(), 3u);
  EXPECT_EQ(r.moduli[1].f, 9u);
  ASSERT_FALSE(r.certificates.empty());
  for (const auto& c : r.certificates) EXPECT_TRUE(c.verdict) << to_string(c.kind);
  EXPECT_EQ(r.certificates.front().kind, CertificateKind::CoprimeCusp);
}

TEST(Analyze, JsonRoundTrip) {
  AnalyzeOptions opt;
  opt.moduli = {4};
  opt.certificates = true;
  for (const Origami& o : {L(4, 2), Ogn(3, 7)}) {
    AnalysisReport r = analyze(o, opt);
    json j = r;
    AnalysisReport back = j.get<AnalysisReport>();
    EXPECT_EQ(back, r);
    EXPECT_EQ(json::parse(j.dump()).get<AnalysisReport>(), r);
    for (const char* key : {"d", "level", "widths", "width_inf", "width_zero", "mu", "e2", "e3", "s", "curve_genus",
                            "m", "image_order", "e", "f", "congruence", "totally_noncongruence", "certificates"})
      EXPECT_TRUE(j.contains(key)) << key;
    EXPECT_TRUE(j["image_order"].is_string());
  }
}

TEST(Analyze, SerializedCertificatesReverify) {
  AnalyzeOptions opt;
  opt.certificates = true;
  Origami o = L(5, 5);
  AnalysisReport r = analyze(o, opt);
  OrbitTable t = orbit(o);
  VeechGroupData v = veech_generators(t);
  for (const json& jc : json(r)["certificates"]) {
    Certificate c = jc.get<Certificate>();
    EXPECT_TRUE(verify_certificate(c, v, t)) << jc.dump();
  }
}

TEST(Analyze, CsvRow) {
  AnalysisReport r = analyze(L(2, 2));
  EXPECT_EQ(analysis_csv_row(r), "3,2,\"(2)\",3,2,2,2,3,2,0,3,1,true,false");
}

TEST(Table1, Representatives) {
  auto specs = table1_specs(11);
  ASSERT_EQ(specs.size(), 13u);
  for (const auto& s : specs) {
    EXPECT_EQ(s.a + s.b - 1, s.squares);
    EXPECT_EQ(classify_h2_orbit(L(s.a, s.b)), s.kind) << s.label;
  }
  EXPECT_EQ(specs[0].label, "-");
  EXPECT_EQ(specs[2].label, "B5");
  EXPECT_EQ(specs[3].label, "A5");
}

TEST(Table1, MatchesGoldenFile) {
  std::string golden = read_file(ORIGAMI_GOLDEN_DIR "/table1.csv");
  ASSERT_FALSE(golden.empty());
  EXPECT_EQ(table1_csv(table1(11)), golden);
}

TEST(Table1, SmallPrefixes) {
  EXPECT_EQ(table1_csv(table1(3)), "squares,orbit_label,g,s,l,d,e,f\n3,-,0,2,2,3,3,1\n");
  EXPECT_EQ(table1(5).size(), 4u);
  EXPECT_THROW(table1(2), InputError);
}

TEST(Table1, ParallelOutputIsIdentical) { EXPECT_EQ(table1_csv(table1(9, 3)), table1_csv(table1(9, 1))); }

TEST(Table1, ExtendedRowsPinned) {
  // computed once, pinned as regression values
  struct Row {
    std::size_t squares;
    const char* label;
    long long g;
    std::size_t s;
    std::uint64_t l;
    std::size_t d;
    std::uint64_t e, f;
  };
  const Row expected[] = {{12, "-", 11, 38, 27720, 360, 3, 120},   {13, "B13", 7, 39, 90090, 315, 1, 315},
                          {13, "A13", 14, 37, 360360, 378, 3, 126}, {14, "-", 25, 60, 360360, 648, 3, 216},
                          {15, "B15", 16, 42, 90090, 432, 1, 432},  {15, "A15", 21, 42, 360360, 504, 3, 168}};
  auto specs = table1_specs(15, 12);
  ASSERT_EQ(specs.size(), 6u);
  for (std::size_t k = 0; k < specs.size(); ++k) {
    Table1Row r = compute_table1_row(specs[k]);
    EXPECT_EQ(r.squares, expected[k].squares);
    EXPECT_EQ(r.label, expected[k].label);
    EXPECT_EQ(r.g, expected[k].g) << r.label;
    EXPECT_EQ(r.s, expected[k].s) << r.label;
    EXPECT_EQ(r.l, expected[k].l) << r.label;
    EXPECT_EQ(r.d, expected[k].d) << r.label;
    EXPECT_EQ(r.e, expected[k].e) << r.label;
    EXPECT_EQ(r.f, expected[k].f) << r.label;
  }
}

TEST(Theorems, Theorem3SmallRange) {
  TheoremReport r = check_theorem3(3, 9);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.checks.size(), 10u);
  for (const auto& c : r.checks) EXPECT_FALSE(c.certificates.empty()) << c.subject;
}

TEST(Theorems, Theorem5Instances) {
  TheoremReport r = check_theorem5({{3, 7}, {3, 11}});
  EXPECT_TRUE(r.ok());
  for (const auto& c : r.checks) EXPECT_EQ(c.e, 1u);
  EXPECT_THROW(check_theorem5({{3, 9}}), InputError);
}

TEST(Theorems, Theorem1SmallSet) {
  TheoremReport r = check_theorem1({L(2, 2), L(2, 3)}, 24);
  EXPECT_TRUE(r.ok());
}

TEST(Theorems, Theorem2Consistency) {
  TheoremReport r = check_theorem2({{"L(3,3)", L(3, 3)}, {"L(2,2)", L(2, 2)}});
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.checks[0].certificates.size(), 1u);
  EXPECT_TRUE(r.checks[1].certificates.empty());
}

TEST(ParallelFor, PropagatesErrors) {
  EXPECT_THROW(parallel_for(5, 2, [](std::size_t i) {
                 if (i == 3) throw InputError("boom");
               }),
               InputError);
}
