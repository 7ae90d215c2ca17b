#include <gtest/gtest.h>

#include <cstdlib>
#include <random>
#include <sstream>

#include "bmw/errors.hpp"
#include "bmw/instances.hpp"
#include "bmw/json_io.hpp"
#include "bmw/shell.hpp"

namespace bmw {
namespace {

std::string corpus(const std::string& name) { return std::string(BMW_CORPUS_DIR) + "/" + name; }

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& s, const std::string& part) { return s.find(part) != std::string::npos; }

TEST(Shell, AnalyzeCommuting) {
  const auto r = call({"analyze", corpus("commuting_3_3.vh")});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_TRUE(contains(r.out, "HypothesesNotMet")) << r.out;
}

TEST(Shell, AnalyzeErrors) {
  EXPECT_EQ(call({"analyze", "missing.vh"}).code, kExitBadInput);
  EXPECT_EQ(call({"analyze", corpus("bad_duplicate.vh")}).code, kExitBadInput);
  EXPECT_EQ(call({"analyze", corpus("bad_incomplete.vh")}).code, kExitBadInput);
  EXPECT_EQ(call({"analyze", corpus("commuting_3_3.vh"), "--bogus"}).code, kExitBadInput);
  EXPECT_EQ(call({}).code, kExitBadInput);
  EXPECT_EQ(call({"frobnicate"}).code, kExitBadInput);
}

TEST(Shell, VerdictExamples) {
  auto r = call({"verdict", "--d1", "11663", "--d2", "4", "--f1", "Alt", "--f2", "Sym"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_TRUE(contains(r.out, "ExceptionalCase (ii)")) << r.out;
  EXPECT_TRUE(contains(r.out, "12*972-1")) << r.out;

  r = call({"verdict", "--d1", "4", "--d2", "5", "--f1", "Sym4", "--f2", "(0 1 2 3 4),(1 2 4 3)", "--json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j["theorem12"]["status"], "Irreducible");
  EXPECT_EQ(j["f2"]["label"], "C5xC4");

  EXPECT_EQ(call({"verdict", "--d1", "5", "--d2", "3", "--f1", "Sym4", "--f2", "Sym"}).code, kExitBadInput);
  EXPECT_EQ(call({"verdict", "--d1", "x", "--d2", "3", "--f1", "Sym", "--f2", "Sym"}).code, kExitBadInput);
  EXPECT_EQ(call({"verdict", "--d1", "100000", "--d2", "3", "--f1", "(0 1)", "--f2", "Sym"}).code, kExitCapExceeded);
}

TEST(Shell, Tables) {
  const auto r = call({"tables"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_TRUE(contains(r.out, "[lps]"));
  const auto j = Json::parse(call({"tables", "--json"}).out);
  EXPECT_EQ(j["two_transitive"].size(), 10u);
  EXPECT_EQ(j["lps"].size(), 7u);
}

TEST(Shell, Verify) {
  EXPECT_EQ(call({"verify", "thompson"}).code, kExitOk);
  auto r = call({"verify", "wreath-bound", "--d", "3"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_TRUE(contains(r.out, "59421121885698253195157962752")) << r.out;  // 6 * 2^93
  EXPECT_EQ(call({"verify", "wreath-bound", "--d", "2"}).code, kExitBadInput);
  r = call({"verify", "remark-small"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_TRUE(contains(r.out, "size 16, stabilizer order 3"));
  EXPECT_TRUE(contains(r.out, "size 60, stabilizer order 2"));
  EXPECT_TRUE(contains(r.out, "size 30, stabilizer order 4"));
  r = call({"verify", "all"});
  EXPECT_EQ(r.code, kExitOk) << r.out;
  EXPECT_FALSE(contains(r.out, "FAIL"));
  EXPECT_FALSE(contains(r.out, "[3]"));
  EXPECT_EQ(call({"verify", "instance"}).code, kExitBadInput);
  EXPECT_EQ(call({"verify", "thompson", "extra"}).code, kExitBadInput);
}

TEST(Shell, VerifyInstances) {
  auto r = call({"verify", "instance", corpus("theta_cube.inst")});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_TRUE(contains(r.out, "Hyp6: fails"));
  EXPECT_TRUE(contains(r.out, "member of E: yes"));
  r = call({"verify", "instance", corpus("sym4_factorization.inst"), "--json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = Json::parse(r.out);
  EXPECT_TRUE(j["hypotheses"]["member_of_F"].get<bool>());
  EXPECT_TRUE(j["basic_lemma"]["all_passed"].get<bool>());
  EXPECT_EQ(call({"verify", "instance", corpus("missing.inst")}).code, kExitBadInput);
}

TEST(Shell, CapsFromEnvironmentAndFlags) {
  ::setenv("BMW_ENUM_CAP", "10", 1);
  EXPECT_EQ(limits_from_environment().element_cap, 10u);
  ::unsetenv("BMW_ENUM_CAP");
  // K6 x Petersen has 60 vertex pairs.
  ::setenv("BMW_GRAPH_CAP", "59", 1);
  EXPECT_EQ(call({"verify", "instance", corpus("k6_petersen.inst")}).code, kExitCapExceeded);
  ::setenv("BMW_GRAPH_CAP", "60", 1);
  EXPECT_EQ(call({"verify", "instance", corpus("k6_petersen.inst")}).code, kExitOk);
  ::unsetenv("BMW_GRAPH_CAP");
  ::setenv("BMW_ENUM_CAP", "0", 1);
  EXPECT_THROW(limits_from_environment(), ParseError);
  EXPECT_EQ(call({"tables"}).code, kExitBadInput);
  ::unsetenv("BMW_ENUM_CAP");
  EXPECT_EQ(call({"verify", "instance", corpus("k6_petersen.inst"), "--graph-cap", "10"}).code, kExitCapExceeded);
  EXPECT_EQ(call({"tables", "--element-cap", "0"}).code, kExitBadInput);
}

TEST(Shell, SearchPartition) {
  // Only the argument handling; the full search is exercised elsewhere.
  EXPECT_EQ(call({"search", "gap-11-5"}).code, kExitBadInput);
  EXPECT_EQ(call({"search", "gap-11-4", "--threads", "0"}).code, kExitBadInput);
}

TEST(Json, DatumReportRoundTrip) {
  for (const char* f : {"commuting_2_2.vh", "commuting_3_3.vh", "sym3_3_3.vh", "twist_4_4.vh"}) {
    const auto r = analyze(read_datum_file(corpus(f)));
    const auto j = to_json(r);
    const auto back = datum_report_from_json(Json::parse(j.dump()));
    EXPECT_TRUE(same_report(r, back)) << f;
    EXPECT_EQ(to_json(back), j);
  }
}

TEST(Json, VerdictRoundTrip) {
  std::mt19937 rng(3);
  const unsigned degrees[] = {3, 4, 5, 23, 47, 11663, 19, 39, 72, 119, 719};
  const char* labels[] = {"Alt", "Sym", "Other2Transitive"};
  for (int i = 0; i < 200; ++i) {
    const unsigned d1 = degrees[rng() % std::size(degrees)];
    const unsigned d2 = degrees[rng() % std::size(degrees)];
    auto pick = [&](unsigned d) {
      if (d == 3) return class_from_label(d, "Sym3");
      if (d == 4) return class_from_label(d, rng() % 2 ? "Alt4" : "Sym4");
      if (d == 5) return class_from_label(d, rng() % 2 ? "C5xC4" : "Alt5@5");
      return class_from_label(d, labels[rng() % 3]);
    };
    const auto v = theorem12_verdict(pick(d1), pick(d2));
    EXPECT_EQ(verdict_from_json(Json::parse(to_json(v).dump())), v);
  }
}

TEST(Json, SearchReportRoundTrip) {
  SearchReport r;
  r.total_candidates = 5;
  r.c1 = 3;
  r.c1_c2 = 1;
  r.per_partition = {{5, 3, 1, 1, 0}};
  r.survivors.push_back({0, 2, 1, 3, 4, 5, 6, 7, 8, 9, 10, 11});
  r.wall_seconds = 0.25;
  const auto back = search_report_from_json(Json::parse(to_json(r).dump()));
  EXPECT_TRUE(back.same_result(r));
  EXPECT_EQ(back.wall_seconds, r.wall_seconds);
  EXPECT_THROW(verdict_from_json(Json{{"status", "Maybe"}, {"by", "Theorem12"}, {"matched_cases", Json::array()}, {"reason", ""}}),
               ParseError);
}

TEST(InstanceBundle, RoundTrip) {
  for (const auto& inst : {theta_cube_instance(), k6_petersen_instance(), sym4_factorization_instance()}) {
    const auto text = format_instance_bundle(inst);
    const auto b = parse_instance_bundle(text);
    EXPECT_EQ(format_instance_bundle(b.instance), text);
    EXPECT_EQ(b.instance.first().graph(), inst.first().graph());
    EXPECT_EQ(product_orbit_report(b.instance).size(), product_orbit_report(inst).size());
  }
  const auto b = read_instance_bundle(corpus("theta_cube.inst"));
  ASSERT_TRUE(b.expect1 && b.expect2);
  EXPECT_EQ(b.expect1->order(), 24);
  EXPECT_EQ(b.expect2->order(), 6);
}

TEST(InstanceBundle, Errors) {
  EXPECT_THROW(parse_instance_bundle(""), ParseError);
  EXPECT_THROW(parse_instance_bundle("group 2\ngen (0 1)\nfactor 1\n"), ParseError);
  EXPECT_THROW(parse_instance_bundle("group 2\nwhat\n"), ParseError);
  auto text = format_instance_bundle(theta_cube_instance());
  EXPECT_THROW(parse_instance_bundle(text + "expect 1 Sym3\n"), ParseError);  // degree 4 factor
  EXPECT_THROW(parse_instance_bundle(text + "act () | ()\n"), ParseError);
}

}  // namespace
}  // namespace bmw
