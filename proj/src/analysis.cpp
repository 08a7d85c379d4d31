#include "tbg/analysis.hpp"

#include <algorithm>

namespace tbg {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::TheoremMainSatisfied: return "TheoremMainSatisfied";
    case Verdict::PrimitiveOnly: return "PrimitiveOnly";
    case Verdict::Imprimitive: return "Imprimitive";
    default: return "HypothesesFail";
  }
}

namespace {

int log_base(u32 size, int p) {
  int e = 0;
  u32 t = 1;
  while (t < size) {
    t *= static_cast<u32>(p);
    ++e;
  }
  if (t != size) throw spec_error("table length is not a power of p");
  return e;
}

// Largest r with 1 <= r < m_p/2 for which every brick passes both the
// weak p^r-uniformity and the strong r-anti-invariance check.
std::optional<int> search_r(const std::vector<const SBox*>& bricks, const PointSpace& brick_space,
                            const Budgets& budgets) {
  int r_max = (brick_space.e - 1) / 2;
  for (int r = r_max; r >= 1; --r) {
    int delta = 1;
    for (int i = 0; i < r; ++i) delta *= brick_space.p;
    bool all = true;
    for (const SBox* b : bricks) {
      if (!check_weak_uniformity(*b, brick_space, delta).passes ||
          !check_anti_invariance(*b, brick_space, r, budgets).passes) {
        all = false;
        break;
      }
    }
    if (all) return r;
  }
  return std::nullopt;
}

SBoxAnalysis run_checks(const SBox& box, const PointSpace& brick_space, int r, int delta,
                        const Budgets& budgets) {
  SBoxAnalysis a;
  a.fixes_zero = box.fixes_zero();
  a.uniformity = check_weak_uniformity(box, brick_space, delta);
  a.anti_invariance = check_anti_invariance(box, brick_space, r, budgets);
  a.coset = check_coset_condition(box, brick_space);
  return a;
}

GroupAnalysis group_analysis_from(const std::vector<Permutation>& gens, const Budgets& budgets,
                                  const PointSpace* coset_space) {
  GroupAnalysis ga;
  GroupBSGS chain(gens, budgets.bsgs_max_degree);
  ga.degree = chain.degree();
  ga.order = chain.order().get_str();
  ga.transitive = is_transitive(gens);
  if (ga.transitive) {
    auto prim = is_primitive(gens, coset_space);
    ga.primitive = prim.primitive;
    ga.blocks = std::move(prim.blocks);
  } else {
    ga.primitive = false;
  }
  ga.cls = classify_alt_sym(chain);
  return ga;
}

}  // namespace

SBoxCliReport analyze_sbox(const SBox& box, int p, const AnalyzeOptions& opts) {
  SBoxCliReport rep;
  rep.p = p;
  rep.m_p = log_base(box.size(), p);
  PointSpace brick_space(p, rep.m_p);
  rep.zero_fix_warning = !box.fixes_zero();

  if (opts.r) {
    rep.r = *opts.r;
  } else {
    rep.r = search_r({&box}, brick_space, opts.budgets);
  }
  int r_report = rep.r.value_or(1);
  int delta = opts.delta.value_or([&] {
    int dlt = 1;
    for (int i = 0; i < r_report; ++i) dlt *= p;
    return dlt;
  }());
  rep.checks = run_checks(box, brick_space, r_report, delta, opts.budgets);
  return rep;
}

bool CipherAnalysis::all_requested_passed() const {
  bool hyp = ledger.primitivity_hypotheses() && ledger.coset_condition;
  if (!hyp) return false;
  if (group_ran)
    return ledger.group_primitive.value_or(false) &&
           ledger.group_class_alt_or_sym.value_or(false);
  return true;  // group checks were not requested
}

CipherAnalysis analyze_cipher(const TbCipherSpec& cipher, const AnalyzeOptions& opts) {
  const VSpace& sp = cipher.space;
  CipherAnalysis out;
  out.cipher_id = cipher.id;
  out.field = sp.field.to_text();
  out.m = sp.m;
  out.n = sp.n;
  out.degree = sp.num_points();

  int h = cipher.first_proper_round();
  if (h < 0)
    throw spec_error(
        "no round is flagged proper; a translation based cipher requires at least one round "
        "with a proper mixing layer and a surjective round-key map (condition (2) of the "
        "definition)");
  out.analyzed_round = h;
  const RoundSpec& round = cipher.rounds[h];

  out.ledger.proper_round_declared = true;
  out.ledger.m_n_greater_one = sp.m > 1 && sp.n > 1;

  // choose r
  if (opts.r) {
    out.r = *opts.r;
    out.ledger.r_in_range = *opts.r >= 1 && 2 * *opts.r < sp.m_p;
  } else {
    std::vector<const SBox*> brick_ptrs;
    for (const auto& b : round.bricks) brick_ptrs.push_back(&b);
    out.r = search_r(brick_ptrs, sp.brick_space, opts.budgets);
    out.ledger.r_in_range = out.r.has_value();
  }
  int r_report = out.r.value_or(1);
  int delta = 1;
  for (int i = 0; i < r_report; ++i) delta *= sp.field.p;

  bool all_uniform = true, all_anti = true, all_coset = true;
  for (const auto& b : round.bricks) {
    out.sbox_reports.push_back(run_checks(b, sp.brick_space, r_report, delta, opts.budgets));
    const auto& a = out.sbox_reports.back();
    all_uniform = all_uniform && a.uniformity.passes;
    all_anti = all_anti && a.anti_invariance.passes;
    all_coset = all_coset && a.coset.passes;
  }
  out.ledger.bricks_weakly_uniform = all_uniform;
  out.ledger.bricks_strongly_anti_invariant = all_anti;
  out.ledger.coset_condition = all_coset;

  out.layer_report = is_proper_mixing_layer(sp, round.layer);
  out.ledger.mixing_layer_proper = out.layer_report.proper;

  try {
    out.imprimitivity = find_imprimitivity_witness(sp, round.bricks, round.layer, opts.budgets);
    out.witness_search_ran = true;
  } catch (const budget_error& e) {
    out.witness_search_ran = false;
    out.witness_note = e.what();
  }

  if (opts.skip_group) {
    out.group_ran = false;
    out.group_note = "group computation skipped on request";
  } else if (sp.num_points() > opts.budgets.bsgs_max_degree) {
    out.group_ran = false;
    out.group_note = "degree " + std::to_string(sp.num_points()) +
                     " exceeds the group engine bound of " +
                     std::to_string(opts.budgets.bsgs_max_degree);
  } else {
    auto gens_h = group_generators(cipher, GeneratorScope::OneRound, h);
    out.group_h = group_analysis_from(gens_h, opts.budgets, &sp.points);
    if (cipher.rounds.size() == 1) {
      out.group_inf = out.group_h;
    } else {
      auto gens_all = group_generators(cipher, GeneratorScope::AllRounds);
      out.group_inf = group_analysis_from(gens_all, opts.budgets, &sp.points);
    }
    out.group_ran = true;
    out.ledger.group_primitive = out.group_h->primitive && out.group_inf->primitive;
    out.ledger.group_class_alt_or_sym =
        out.group_inf->cls == GroupClass::Sym || out.group_inf->cls == GroupClass::Alt;
  }

  bool imprimitive_known =
      (out.group_ran && !(out.group_h->primitive && out.group_inf->primitive)) ||
      (out.witness_search_ran && out.imprimitivity.has_value());
  bool hyp = out.ledger.primitivity_hypotheses();
  if (imprimitive_known) {
    out.verdict = Verdict::Imprimitive;
  } else if (hyp && out.ledger.coset_condition && out.group_ran &&
             out.ledger.group_class_alt_or_sym.value_or(false)) {
    out.verdict = Verdict::TheoremMainSatisfied;
  } else if (hyp && (!out.group_ran || out.ledger.group_primitive.value_or(false))) {
    out.verdict = Verdict::PrimitiveOnly;
  } else {
    out.verdict = Verdict::HypothesesFail;
  }
  return out;
}

GroupAnalysis analyze_group(const std::vector<Permutation>& gens, const Budgets& budgets,
                            const PointSpace* coset_space) {
  return group_analysis_from(gens, budgets, coset_space);
}

}  // namespace tbg
