#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tbg/cipher.hpp"
#include "tbg/common.hpp"
#include "tbg/group_engine.hpp"
#include "tbg/mixing_analysis.hpp"
#include "tbg/sbox_analysis.hpp"

namespace tbg {

struct AnalyzeOptions {
  std::optional<int> r;  // force the uniformity/anti-invariance parameter
  std::optional<int> delta;  // force delta (analyze-sbox only); default p^r
  bool skip_group = false;
  Budgets budgets;
};

/// Per-brick results of the three S-box checks.
struct SBoxAnalysis {
  bool fixes_zero = true;
  UniformityReport uniformity;
  AntiInvarianceReport anti_invariance;
  CosetConditionReport coset;
  bool passes() const {
    return uniformity.passes && anti_invariance.passes && coset.passes;
  }
};

/// Standalone S-box analysis (the analyze-sbox command). When r is not
/// forced the largest r with 1 <= r < m_p/2 passing both the uniformity
/// and the anti-invariance check is reported; when no r passes, the
/// checks are reported at r = 1.
struct SBoxCliReport {
  int p = 2;
  int m_p = 2;
  std::optional<int> r;  // chosen r; nullopt when no r in range passes
  SBoxAnalysis checks;
  bool zero_fix_warning = false;
};
SBoxCliReport analyze_sbox(const SBox& box, int p, const AnalyzeOptions& opts = {});

struct GroupAnalysis {
  u32 degree = 0;
  std::string order;  // exact, decimal
  bool transitive = false;
  bool primitive = false;
  std::optional<BlockSystem> blocks;
  GroupClass cls = GroupClass::ProperSubgroup;
};

/// Which conditions of the primitivity theorem and of the main
/// (alternating-or-symmetric) theorem held. Group entries are absent
/// when the group computation was skipped or out of budget.
struct HypothesisLedger {
  bool proper_round_declared = false;
  bool m_n_greater_one = false;
  bool r_in_range = false;
  bool bricks_weakly_uniform = false;
  bool bricks_strongly_anti_invariant = false;
  bool mixing_layer_proper = false;
  bool coset_condition = false;
  std::optional<bool> group_primitive;
  std::optional<bool> group_class_alt_or_sym;

  bool primitivity_hypotheses() const {
    return proper_round_declared && m_n_greater_one && r_in_range && bricks_weakly_uniform &&
           bricks_strongly_anti_invariant && mixing_layer_proper;
  }
};

enum class Verdict { TheoremMainSatisfied, PrimitiveOnly, Imprimitive, HypothesesFail };
const char* to_string(Verdict v);

struct CipherAnalysis {
  std::string cipher_id;
  std::string field;
  int m = 0;
  int n = 0;
  u32 degree = 0;
  int analyzed_round = 0;  // the first round flagged proper
  std::optional<int> r;
  std::vector<SBoxAnalysis> sbox_reports;  // bricks of the analyzed round
  MixingReport layer_report;
  bool witness_search_ran = false;
  std::string witness_note;  // set when the search was skipped
  std::optional<ImprimitivityWitness> imprimitivity;
  bool group_ran = false;
  std::string group_note;  // set when the group computation was skipped
  std::optional<GroupAnalysis> group_h;
  std::optional<GroupAnalysis> group_inf;
  HypothesisLedger ledger;
  Verdict verdict = Verdict::HypothesesFail;

  /// True when every check that was requested ran and passed; drives the
  /// CLI exit code.
  bool all_requested_passed() const;
};

/// Runs the full verify-cipher pipeline: per-brick checks on the first
/// declared-proper round, layer propriety, imprimitivity-witness search,
/// and the group computations for the one-round group and the all-rounds
/// group. Throws spec_error when no round is flagged proper.
CipherAnalysis analyze_cipher(const TbCipherSpec& cipher, const AnalyzeOptions& opts = {});

/// Group report for an explicit generator list (the group command).
GroupAnalysis analyze_group(const std::vector<Permutation>& gens, const Budgets& budgets = {},
                            const PointSpace* coset_space = nullptr);

}  // namespace tbg
