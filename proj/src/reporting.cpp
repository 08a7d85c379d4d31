#include "tbg/reporting.hpp"

namespace tbg {

namespace {

// Full cell listings are included only for moderate degrees; the cell of
// 0 and the sizes identify the system at any scale.
constexpr u32 kMaxDegreeForCells = 4096;

}  // namespace

ordered_json json_subgroup(const SubgroupBasis& s) {
  ordered_json j;
  j["dim"] = s.dim();
  j["rows"] = s.rows;
  return j;
}

ordered_json json_block_system(const BlockSystem& b) {
  ordered_json j;
  j["block_size"] = b.block_size;
  j["num_blocks"] = b.blocks.size();
  j["subgroup"] = b.as_subgroup ? json_subgroup(*b.as_subgroup) : ordered_json(nullptr);
  j["cell_of_zero"] = b.blocks[b.cell_of[0]];
  if (b.degree <= kMaxDegreeForCells) j["cells"] = b.blocks;
  return j;
}

ordered_json json_sbox_checks(const SBoxAnalysis& a) {
  ordered_json j;
  ordered_json wu;
  wu["delta"] = a.uniformity.delta;
  wu["min_image"] = a.uniformity.min_image_size;
  wu["passes"] = a.uniformity.passes;
  wu["witness"] = a.uniformity.witness_a;
  j["weak_uniformity"] = std::move(wu);
  ordered_json ai;
  ai["r"] = a.anti_invariance.r;
  ai["passes"] = a.anti_invariance.passes;
  ordered_json viols = ordered_json::array();
  for (const auto& [u, w] : a.anti_invariance.violations) {
    ordered_json v;
    v["U"] = json_subgroup(u);
    v["W"] = json_subgroup(w);
    viols.push_back(std::move(v));
  }
  ai["violations"] = std::move(viols);
  j["anti_invariance"] = std::move(ai);
  ordered_json cc;
  cc["passes"] = a.coset.passes;
  cc["witness"] = a.coset.witness_a ? ordered_json(*a.coset.witness_a) : ordered_json(nullptr);
  j["coset_condition"] = std::move(cc);
  return j;
}

ordered_json json_sbox_report(const SBoxCliReport& rep) {
  ordered_json j;
  j["p"] = rep.p;
  j["m_p"] = rep.m_p;
  j["fixes_zero"] = !rep.zero_fix_warning;
  j["r"] = rep.r ? ordered_json(*rep.r) : ordered_json(nullptr);
  ordered_json checks = json_sbox_checks(rep.checks);
  for (auto& [key, value] : checks.items()) j[key] = value;
  j["passes"] = rep.checks.passes();
  return j;
}

ordered_json json_mixing_report(const MixingReport& rep) {
  ordered_json j;
  j["proper_layer"] = rep.proper;
  j["invariant_subset"] =
      rep.invariant_subset ? ordered_json(*rep.invariant_subset) : ordered_json(nullptr);
  return j;
}

ordered_json json_group_analysis(const GroupAnalysis& g) {
  ordered_json j;
  j["degree"] = g.degree;
  j["order"] = g.order;
  j["transitive"] = g.transitive;
  j["primitive"] = g.primitive;
  if (g.blocks) j["blocks"] = json_block_system(*g.blocks);
  j["class"] = to_string(g.cls);
  return j;
}

ordered_json json_cipher_analysis(const CipherAnalysis& a) {
  ordered_json j;
  j["cipher_id"] = a.cipher_id;
  j["field"] = a.field;
  j["m"] = a.m;
  j["n"] = a.n;
  j["degree"] = a.degree;
  j["analyzed_round"] = a.analyzed_round;
  j["r"] = a.r ? ordered_json(*a.r) : ordered_json(nullptr);
  ordered_json boxes = ordered_json::array();
  for (const auto& rep : a.sbox_reports) boxes.push_back(json_sbox_checks(rep));
  j["sbox_reports"] = std::move(boxes);
  j["layer_report"] = json_mixing_report(a.layer_report);

  ordered_json imp;
  if (!a.witness_search_ran) {
    imp["found"] = nullptr;
    imp["omitted"] = a.witness_note;
  } else if (a.imprimitivity) {
    imp["found"] = true;
    imp["W_basis"] = a.imprimitivity->w.rows;
    imp["dim"] = a.imprimitivity->w.dim();
  } else {
    imp["found"] = false;
    imp["W_basis"] = nullptr;
    imp["dim"] = nullptr;
  }
  j["imprimitivity"] = std::move(imp);

  ordered_json grp;
  if (!a.group_ran) {
    grp["omitted"] = a.group_note;
  } else {
    grp["gamma_h"] = json_group_analysis(*a.group_h);
    grp["gamma_infinity"] = json_group_analysis(*a.group_inf);
  }
  j["group"] = std::move(grp);

  ordered_json lg;
  lg["proper_round_declared"] = a.ledger.proper_round_declared;
  lg["m_n_greater_one"] = a.ledger.m_n_greater_one;
  lg["r_in_range"] = a.ledger.r_in_range;
  lg["bricks_weakly_uniform"] = a.ledger.bricks_weakly_uniform;
  lg["bricks_strongly_anti_invariant"] = a.ledger.bricks_strongly_anti_invariant;
  lg["mixing_layer_proper"] = a.ledger.mixing_layer_proper;
  lg["coset_condition"] = a.ledger.coset_condition;
  lg["group_primitive"] =
      a.ledger.group_primitive ? ordered_json(*a.ledger.group_primitive) : ordered_json(nullptr);
  lg["group_class_alt_or_sym"] = a.ledger.group_class_alt_or_sym
                                     ? ordered_json(*a.ledger.group_class_alt_or_sym)
                                     : ordered_json(nullptr);
  j["hypothesis_ledger"] = std::move(lg);
  j["verdict"] = to_string(a.verdict);
  return j;
}

}  // namespace tbg
