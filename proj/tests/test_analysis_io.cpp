#include <doctest.h>

#include <sstream>

#include "support/corpus.hpp"
#include "tbg/analysis.hpp"
#include "tbg/io.hpp"
#include "tbg/reporting.hpp"

using namespace tbg;

namespace {

const std::vector<u32> kInv8 = {0, 1, 5, 6, 7, 2, 3, 4};

nlohmann::json inv64_doc() {
  nlohmann::json doc;
  doc["id"] = "inv64";
  doc["field"] = "2";
  doc["m"] = 3;
  doc["n"] = 2;
  nlohmann::json round;
  round["bricks"] = {kInv8, kInv8};
  // [[I,I],[I,0]] in 3x3 blocks: invertible and proper
  round["layer"] = std::vector<int>{1, 0, 0, 1, 0, 0,  //
                                    0, 1, 0, 0, 1, 0,  //
                                    0, 0, 1, 0, 0, 1,  //
                                    1, 0, 0, 0, 0, 0,  //
                                    0, 1, 0, 0, 0, 0,  //
                                    0, 0, 1, 0, 0, 0};
  round["proper"] = true;
  doc["rounds"] = {round};
  return doc;
}

}  // namespace

TEST_SUITE_BEGIN("analysis_io");

TEST_CASE("cipher json ingestion") {
  TbCipherSpec cip = cipher_from_json(inv64_doc());
  CHECK(cip.space.num_points() == 64);
  CHECK(cip.space.m_p == 3);
  CHECK(cip.rounds.size() == 1);
  CHECK(cip.first_proper_round() == 0);

  auto bad = inv64_doc();
  bad.erase("rounds");
  CHECK_THROWS_AS(cipher_from_json(bad), spec_error);
  auto bad2 = inv64_doc();
  bad2["rounds"][0]["bricks"][0] = std::vector<int>{0, 0, 1, 2, 3, 4, 5, 6};
  CHECK_THROWS_AS(cipher_from_json(bad2), spec_error);
  auto bad3 = inv64_doc();
  bad3["budgets"] = {{"no_such_knob", 3}};
  CHECK_THROWS_AS(cipher_from_json(bad3), spec_error);
}

TEST_CASE("table and generator files") {
  std::istringstream good("0 3 1 2");
  CHECK(load_sbox_table(good).table == std::vector<u32>{0, 3, 1, 2});
  std::istringstream dup("0 0 1 2");
  CHECK_THROWS_AS(load_sbox_table(dup), spec_error);
  std::istringstream junk("0 1 two 3");
  CHECK_THROWS_AS(load_sbox_table(junk), spec_error);

  std::istringstream gens("1 0 2 3\n0 1 2 3\n\n1 2 3 0\n");
  auto perms = load_generators(gens);
  REQUIRE(perms.size() == 3);
  CHECK(perms[2].img == std::vector<u32>{1, 2, 3, 0});
  std::istringstream badline("0 1\n2 2\n");
  CHECK_THROWS_AS(load_generators(badline), spec_error);
  std::istringstream empty("");
  CHECK_THROWS_AS(load_generators(empty), spec_error);
}

TEST_CASE("sbox cli analysis") {
  AnalyzeOptions opts;
  opts.delta = 2;
  opts.r = 1;
  SBoxCliReport rep = analyze_sbox(SBox::identity(8), 2, opts);
  CHECK_FALSE(rep.checks.passes());
  CHECK(rep.m_p == 3);
  // searched r on the F_8 inversion lands at r = 1 (m_p = 3)
  SBoxCliReport inv = analyze_sbox(SBox(kInv8), 2, {});
  CHECK(inv.r == 1);
  CHECK(inv.checks.uniformity.passes);
  CHECK(inv.checks.anti_invariance.passes);
  CHECK_FALSE(inv.checks.coset.passes);  // the F_8 inversion images are cosets
  CHECK_FALSE(analyze_sbox(SBox(kInv8), 2, {}).checks.passes());
  // table length must be a power of p
  CHECK_THROWS_AS(analyze_sbox(SBox::identity(12), 2, {}), spec_error);
  // report JSON carries the spec'd keys
  auto j = json_sbox_report(inv);
  CHECK(j.contains("weak_uniformity"));
  CHECK(j["weak_uniformity"].contains("min_image"));
  CHECK(j.contains("anti_invariance"));
  CHECK(j.contains("coset_condition"));
}

TEST_CASE("all-identity cipher analysis") {
  VSpace sp(FieldSpec(2, {0, 1}), 2, 2);
  TbCipherSpec cip = corpus::one_round_cipher(
      "all-identity", sp, {SBox::identity(4), SBox::identity(4)},
      MixingLayer::identity(sp.field, sp.d));
  CipherAnalysis a = analyze_cipher(cip);
  CHECK(a.verdict == Verdict::Imprimitive);
  CHECK_FALSE(a.ledger.mixing_layer_proper);
  CHECK_FALSE(a.ledger.bricks_weakly_uniform);
  REQUIRE(a.imprimitivity.has_value());
  REQUIRE(a.group_ran);
  CHECK_FALSE(a.group_h->primitive);
  REQUIRE(a.group_h->blocks.has_value());
  CHECK(verify_block_coset_form(*a.group_h->blocks, sp.points));
  CHECK(a.group_h->order == "16");  // identity rho generates only T(V)
  CHECK_FALSE(a.all_requested_passed());
}

TEST_CASE("inversion cipher analysis lands at PrimitiveOnly") {
  TbCipherSpec cip = cipher_from_json(inv64_doc());
  CipherAnalysis a = analyze_cipher(cip);
  CHECK(a.r == 1);
  CHECK(a.ledger.primitivity_hypotheses());
  CHECK_FALSE(a.ledger.coset_condition);
  REQUIRE(a.group_ran);
  CHECK(a.group_h->primitive);
  CHECK(a.verdict == Verdict::PrimitiveOnly);

  // skipping the group computation still yields the theorem-level verdict
  AnalyzeOptions skip;
  skip.skip_group = true;
  CipherAnalysis b = analyze_cipher(cip, skip);
  CHECK_FALSE(b.group_ran);
  CHECK(b.verdict == Verdict::PrimitiveOnly);
  CHECK_FALSE(b.ledger.group_primitive.has_value());
  // hypotheses minus the coset condition hold, so the requested checks fail
  CHECK_FALSE(b.all_requested_passed());
}

TEST_CASE("no declared proper round is an input error") {
  VSpace sp(FieldSpec(2, {0, 1}), 2, 2);
  RoundSpec round{{SBox::identity(4), SBox::identity(4)},
                  MixingLayer::identity(sp.field, sp.d), false};
  TbCipherSpec cip("none", sp, {round});
  CHECK_THROWS_WITH_AS(analyze_cipher(cip), doctest::Contains("condition (2)"), spec_error);
}

TEST_CASE("analysis report is deterministic and json-stable") {
  TbCipherSpec cip = cipher_from_json(inv64_doc());
  auto first = json_cipher_analysis(analyze_cipher(cip)).dump(2);
  auto second = json_cipher_analysis(analyze_cipher(cipher_from_json(inv64_doc()))).dump(2);
  CHECK(first == second);
  CHECK(first.find("\"verdict\": \"PrimitiveOnly\"") != std::string::npos);
  // ledger lists every condition
  for (const char* key :
       {"proper_round_declared", "m_n_greater_one", "r_in_range", "bricks_weakly_uniform",
        "bricks_strongly_anti_invariant", "mixing_layer_proper", "coset_condition",
        "group_primitive", "group_class_alt_or_sym"})
    CHECK(first.find(key) != std::string::npos);
}

TEST_CASE("group analysis report") {
  PointSpace sp(2, 2);
  std::vector<Permutation> gens;
  for (int t = 0; t < 2; ++t) gens.push_back(translation_perm(sp, sp.basis_point(t)));
  GroupAnalysis ga = analyze_group(gens);
  CHECK(ga.order == "4");
  CHECK(ga.transitive);
  CHECK_FALSE(ga.primitive);
  auto j = json_group_analysis(ga);
  CHECK(j["degree"] == 4);
  CHECK(j["class"] == "ProperSubgroup");

  GroupAnalysis single = analyze_group({Permutation::identity(3)});
  CHECK(single.order == "1");
  CHECK_FALSE(single.transitive);
}

TEST_SUITE_END();
