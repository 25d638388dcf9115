#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "reslab/graph6.hpp"
#include "reslab/patterns.hpp"
#include "reslab/verify.hpp"

namespace reslab {
namespace {

std::string write_temp(const std::string& name, const std::string& body) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << body;
  return path.string();
}

nlohmann::ordered_json without_elapsed(const VerifyReport& r) {
  nlohmann::ordered_json j = to_json(r);
  j.erase("elapsed_ms");
  return j;
}

TEST(CheckNames, RoundTrip) {
  for (CheckId id : kAllChecks) EXPECT_EQ(parse_check(check_name(id)), id);
  EXPECT_EQ(parse_check("thm2_sandwich"), CheckId::thm2_sandwich);
  EXPECT_FALSE(parse_check("thm2"));
  EXPECT_FALSE(parse_check(""));
}

TEST(CheckOne, Examples) {
  EXPECT_EQ(check_one(path(5), CheckId::thm2_sandwich), Verdict::pass);
  EXPECT_EQ(check_one(path(5), CheckId::thm1_residue_le_alpha), Verdict::pass);
  EXPECT_EQ(check_one(cycle(4), CheckId::thm_bm_c4p5), Verdict::not_applicable);
  EXPECT_EQ(check_one(path(5), CheckId::thm_bm_c4p5), Verdict::not_applicable);
  EXPECT_EQ(check_one(complete(3), CheckId::thm_bm_c4p5), Verdict::pass);
  EXPECT_EQ(check_one(Graph(2), CheckId::alpha_le_2_edgeless), Verdict::pass);
  EXPECT_EQ(check_one(complete(2), CheckId::alpha_le_2_edgeless), Verdict::not_applicable);
  EXPECT_EQ(check_one(from_graph6("D]_"), CheckId::hh_deletion_gives_residue), Verdict::not_applicable);
  EXPECT_EQ(check_one(cycle(4), CheckId::hh_deletion_gives_residue), Verdict::pass);
  EXPECT_EQ(check_one(path(5), CheckId::realization_has_hh_vertex), Verdict::pass);
}

TEST(CheckOne, StructureMembers) {
  const Graph a3 = gen_f_member(FKind::A, 3).graph;
  const Graph a4 = gen_f_member(FKind::A, 4).graph;
  const Graph c3 = gen_f_member(FKind::C, 3, Attachment::opposite_side).graph;
  EXPECT_EQ(check_one(a3, CheckId::f_members_are_mdi), Verdict::fail);
  EXPECT_EQ(check_one(gen_f_member(FKind::B, 3).graph, CheckId::f_members_are_mdi), Verdict::fail);
  EXPECT_EQ(check_one(c3, CheckId::f_members_are_mdi), Verdict::pass);
  EXPECT_EQ(check_one(path(5), CheckId::f_members_are_mdi), Verdict::not_applicable);

  EXPECT_EQ(check_one(a4, CheckId::thm_structure_alpha3), Verdict::pass);
  EXPECT_EQ(check_one(c3, CheckId::thm_structure_alpha3), Verdict::pass);
  EXPECT_EQ(check_one(a4, CheckId::q_cliques), Verdict::pass);
  EXPECT_EQ(check_one(path(5), CheckId::thm_structure_alpha3), Verdict::not_applicable);
  EXPECT_EQ(check_one(Graph(3), CheckId::thm_structure_alpha3), Verdict::not_applicable);
  EXPECT_EQ(check_one(a4, CheckId::thm_structure_alpha_gt3), Verdict::not_applicable);
}

TEST(Checker, AnchoredWitnessNamesRolesInTheInput) {
  Checker checker;
  const StructureResult r = checker.structure_alpha3(gen_f_member(FKind::C, 3, Attachment::opposite_side).graph);
  ASSERT_TRUE(r.applicable);
  EXPECT_TRUE(r.unanchored);
  EXPECT_TRUE(r.anchored);
  EXPECT_EQ(r.witness, "C3-opposite v=0;u=1;w=2;Q'=3,5;N'=4");
}

TEST(RunSuite, EnumerationCounts) {
  const std::array checks{CheckId::thm2_sandwich};
  const auto reports = run_suite(EnumerationSource{5}, checks);
  ASSERT_EQ(reports.size(), 1u);
  EXPECT_EQ(reports[0].scanned, 1024u);
  EXPECT_EQ(reports[0].applicable, 1024u);
  EXPECT_TRUE(reports[0].counterexamples.empty());
  EXPECT_EQ(reports[0].source, "enumeration(n=5)");
}

TEST(RunSuite, JsonKeyOrder) {
  const std::array checks{CheckId::thm1_residue_le_alpha};
  const nlohmann::ordered_json j = to_json(run_suite(EnumerationSource{3}, checks).front());
  std::vector<std::string> keys;
  for (const auto& item : j.items()) keys.push_back(item.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"check", "source", "scanned", "applicable", "counterexamples",
                                            "skipped_records", "elapsed_ms", "tool_version"}));
  EXPECT_EQ(j["check"], "thm1_residue_le_alpha");
  EXPECT_EQ(j["tool_version"], kToolVersion);
}

TEST(RunSuite, ShardCountDoesNotChangeReports) {
  const auto one = run_suite(EnumerationSource{6}, kAllChecks, {1, std::nullopt});
  const auto four = run_suite(EnumerationSource{6}, kAllChecks, {4, std::nullopt});
  ASSERT_EQ(one.size(), four.size());
  for (std::size_t i = 0; i < one.size(); ++i) {
    EXPECT_EQ(without_elapsed(one[i]).dump(), without_elapsed(four[i]).dump());
  }
}

TEST(RunSuite, CounterexamplesReplay) {
  const std::array checks{CheckId::f_members_are_mdi};
  const VerifyReport r = run_suite(EnumerationSource{6}, checks).front();
  EXPECT_EQ(r.counterexamples.size(), 100u);  // labelled copies of A3 and B3
  EXPECT_TRUE(std::is_sorted(r.counterexamples.begin(), r.counterexamples.end()));
  for (const std::string& g6 : r.counterexamples) {
    EXPECT_EQ(check_one(from_graph6(g6), CheckId::f_members_are_mdi), Verdict::fail) << g6;
  }
}

TEST(RunSuite, CorpusSkipsBadRecords) {
  const std::string path = write_temp("reslab_bad_corpus.g6", ">>graph6<<\nBw\nnot-graph6\n\nCl\nBx\n");
  const std::array checks{CheckId::thm1_residue_le_alpha};
  SuiteDiagnostics diag;
  const VerifyReport r = run_suite(CorpusSource{path}, checks, {}, &diag).front();
  EXPECT_EQ(r.scanned, 2u);
  EXPECT_EQ(r.skipped_records, 2u);
  ASSERT_EQ(diag.parse_errors.size(), 2u);
  EXPECT_EQ(diag.parse_errors[0].rfind("line 3:", 0), 0u);
  EXPECT_EQ(diag.parse_errors[1].rfind("line 6:", 0), 0u);
  EXPECT_THROW(run_suite(CorpusSource{path + ".missing"}, checks), std::runtime_error);
}

TEST(Hunt, FindsTheTwoNonMdiMembers) {
  std::ostringstream body;
  for (const FMember& m : f_catalog(10, false)) body << to_graph6(m.graph) << "\n";
  const std::string path = write_temp("reslab_catalog.g6", body.str());
  const std::string a3 = to_graph6(gen_f_member(FKind::A, 3).graph);
  const std::string b3 = to_graph6(gen_f_member(FKind::B, 3).graph);
  EXPECT_EQ(hunt(CorpusSource{path}, CheckId::f_members_are_mdi, 10), (std::vector<std::string>{a3, b3}));
  EXPECT_EQ(hunt(CorpusSource{path}, CheckId::f_members_are_mdi, 10, 3), (std::vector<std::string>{a3, b3}));
  EXPECT_EQ(hunt(CorpusSource{path}, CheckId::f_members_are_mdi, 1), std::vector<std::string>{a3});

  const std::array checks{CheckId::f_members_are_mdi};
  for (int shards : {1, 2, 5}) {
    const VerifyReport r = run_suite(CorpusSource{path}, checks, {shards, 1}).front();
    EXPECT_EQ(r.counterexamples, std::vector<std::string>{a3});
    EXPECT_EQ(r.scanned, 1u);
    EXPECT_EQ(r.applicable, 1u);
  }
}

TEST(Hunt, EmptyWhenTheClaimHolds) {
  EXPECT_TRUE(hunt(EnumerationSource{5}, CheckId::thm2_sandwich, 3).empty());
}

}  // namespace
}  // namespace reslab
