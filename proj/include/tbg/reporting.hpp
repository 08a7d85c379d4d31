#pragma once

#include <nlohmann/json.hpp>

#include "tbg/analysis.hpp"

namespace tbg {

using ordered_json = nlohmann::ordered_json;

ordered_json json_subgroup(const SubgroupBasis& s);
ordered_json json_block_system(const BlockSystem& b);
ordered_json json_sbox_checks(const SBoxAnalysis& a);
ordered_json json_sbox_report(const SBoxCliReport& rep);
ordered_json json_mixing_report(const MixingReport& rep);
ordered_json json_group_analysis(const GroupAnalysis& g);
ordered_json json_cipher_analysis(const CipherAnalysis& a);

}  // namespace tbg
