#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

#include "tbg/analysis.hpp"
#include "tbg/io.hpp"
#include "tbg/reporting.hpp"

namespace {

using tbg::ordered_json;

tbg::Budgets apply_budget_flags(tbg::Budgets base, const std::vector<std::string>& flags) {
  nlohmann::json doc = nlohmann::json::object();
  for (const auto& flag : flags) {
    auto eq = flag.find('=');
    if (eq == std::string::npos)
      throw tbg::spec_error("budget override must look like name=value, got '" + flag + "'");
    doc[flag.substr(0, eq)] = std::stoull(flag.substr(eq + 1));
  }
  return tbg::budgets_from_json(doc, base);
}

int run_analyze_sbox(const std::string& table_file, const std::string& field_text,
                     std::optional<int> delta, std::optional<int> r,
                     const std::vector<std::string>& budget_flags) {
  tbg::FieldSpec field = tbg::FieldSpec::parse(field_text);
  tbg::SBox box = tbg::load_sbox_file(table_file);
  if (!box.fixes_zero())
    std::cerr << "warning: table does not fix 0; the uniformity, anti-invariance and coset "
                 "checks are still defined\n";
  tbg::AnalyzeOptions opts;
  opts.r = r;
  opts.delta = delta;
  opts.budgets = apply_budget_flags(opts.budgets, budget_flags);
  tbg::SBoxCliReport rep = tbg::analyze_sbox(box, field.p, opts);
  std::cout << tbg::json_sbox_report(rep).dump(2) << "\n";
  return rep.checks.passes() ? 0 : 1;
}

int run_verify_cipher(const std::string& spec_file, std::optional<int> r, bool skip_group,
                      const std::vector<std::string>& budget_flags) {
  tbg::TbCipherSpec cipher = tbg::load_cipher_file(spec_file);
  tbg::AnalyzeOptions opts;
  opts.r = r;
  opts.skip_group = skip_group;
  opts.budgets = apply_budget_flags(opts.budgets, budget_flags);
  tbg::CipherAnalysis analysis = tbg::analyze_cipher(cipher, opts);
  std::cout << tbg::json_cipher_analysis(analysis).dump(2) << "\n";
  return analysis.all_requested_passed() ? 0 : 1;
}

int run_group(const std::string& gen_file, const std::vector<std::string>& budget_flags) {
  auto gens = tbg::load_generator_file(gen_file);
  tbg::Budgets budgets = apply_budget_flags({}, budget_flags);
  tbg::GroupAnalysis ga = tbg::analyze_group(gens, budgets);
  std::cout << tbg::json_group_analysis(ga).dump(2) << "\n";
  return 0;
}

int run_enumerate(int p, int e, int min_dim, int max_dim, bool count_only,
                  const std::vector<std::string>& budget_flags) {
  tbg::Budgets budgets = apply_budget_flags({}, budget_flags);
  tbg::SubgroupEnumerator en(e, p, min_dim, max_dim, budgets);
  ordered_json j;
  j["p"] = p;
  j["e"] = e;
  j["min_dim"] = min_dim;
  j["max_dim"] = max_dim;
  j["count"] = en.total_count();
  if (!count_only) {
    ordered_json list = ordered_json::array();
    while (auto s = en.next()) list.push_back(tbg::json_subgroup(*s));
    j["subgroups"] = std::move(list);
  }
  std::cout << j.dump(2) << "\n";
  return 0;
}

int run_check_layer(const std::string& matrix_file, const std::string& field_text, int m, int n) {
  tbg::FieldSpec field = tbg::FieldSpec::parse(field_text);
  tbg::VSpace space(field, m, n);
  tbg::MixingLayer layer = tbg::load_matrix_file(matrix_file, field, space.d);
  tbg::MixingReport rep = tbg::is_proper_mixing_layer(space, layer);
  std::cout << tbg::json_mixing_report(rep).dump(2) << "\n";
  return rep.proper ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "tbgroup: structural checks and permutation-group computations for "
      "translation based block ciphers over finite fields"};
  app.require_subcommand(1);

  std::string table_file, field_text, spec_file, gen_file, matrix_file;
  std::optional<int> delta, r_flag;
  bool skip_group = false, count_only = false;
  int p = 2, e = 1, min_dim = 0, max_dim = -1, m = 2, n = 2;
  std::vector<std::string> budget_flags;

  auto* sbox = app.add_subcommand("analyze-sbox",
                                  "Run the uniformity, anti-invariance and coset checks on one "
                                  "S-box table");
  sbox->add_option("table", table_file, "whitespace-separated permutation table")->required();
  sbox->add_option("--field", field_text, "field spec, e.g. 2 or 2^3/1,1,0,1")->required();
  sbox->add_option("--delta", delta, "uniformity threshold (default p^r)");
  sbox->add_option("--r", r_flag, "anti-invariance parameter (default: searched)");
  sbox->add_option("--budget", budget_flags, "budget override name=value");

  auto* verify = app.add_subcommand("verify-cipher", "Full analysis of a cipher spec document");
  verify->add_option("spec", spec_file, "cipher spec JSON file")->required();
  verify->add_option("--r", r_flag, "anti-invariance parameter (default: searched)");
  verify->add_flag("--skip-group", skip_group, "skip the group computations");
  verify->add_option("--budget", budget_flags, "budget override name=value");

  auto* grp = app.add_subcommand("group", "Order/transitivity/primitivity/class of a "
                                          "permutation group given by generators");
  grp->add_option("generators", gen_file, "one permutation per line, space-separated images")
      ->required();
  grp->add_option("--budget", budget_flags, "budget override name=value");

  auto* enu = app.add_subcommand("enumerate-subgroups", "List the F_p-subspaces of F_p^e");
  enu->add_option("--p", p, "prime")->required();
  enu->add_option("--e", e, "ambient dimension")->required();
  enu->add_option("--min-dim", min_dim, "smallest dimension (default 0)");
  enu->add_option("--max-dim", max_dim, "largest dimension (default e)");
  enu->add_flag("--count-only", count_only, "emit the count without the bases");
  enu->add_option("--budget", budget_flags, "budget override name=value");

  auto* layer = app.add_subcommand("check-layer", "Test a mixing layer for propriety");
  layer->add_option("matrix", matrix_file, "d*d field-element indices, row-major")->required();
  layer->add_option("--field", field_text, "field spec")->required();
  layer->add_option("--m", m, "brick dimension")->required();
  layer->add_option("--n", n, "brick count")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (sbox->parsed()) return run_analyze_sbox(table_file, field_text, delta, r_flag, budget_flags);
    if (verify->parsed()) return run_verify_cipher(spec_file, r_flag, skip_group, budget_flags);
    if (grp->parsed()) return run_group(gen_file, budget_flags);
    if (enu->parsed())
      return run_enumerate(p, e, min_dim, max_dim < 0 ? e : max_dim, count_only, budget_flags);
    if (layer->parsed()) return run_check_layer(matrix_file, field_text, m, n);
  } catch (const tbg::budget_error& err) {
    std::cerr << "budget error: " << err.what() << "\n";
    return 2;
  } catch (const tbg::spec_error& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  }
  return 2;
}
