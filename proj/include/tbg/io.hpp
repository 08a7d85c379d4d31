#pragma once

#include <nlohmann/json.hpp>

#include <istream>
#include <string>
#include <vector>

#include "tbg/cipher.hpp"
#include "tbg/common.hpp"

namespace tbg {

/// Cipher spec document:
/// {
///   "id": "...",                       optional
///   "field": "p^f/c0,...,cf",          "p" for prime fields
///   "m": int, "n": int,
///   "rounds": [ {"bricks": [[...] x n],
///                "layer": [d*d field-element indices, row-major],
///                "proper": bool} ],
///   "key_schedule": [[point x rounds] x keys],   optional
///   "budgets": { ... }                           optional
/// }
TbCipherSpec cipher_from_json(const nlohmann::json& doc);
TbCipherSpec load_cipher_file(const std::string& path);

/// Budget overrides from a JSON object; unknown keys are rejected.
Budgets budgets_from_json(const nlohmann::json& doc, Budgets base = {});

/// Whitespace-separated integers; the table must be a bijection.
SBox load_sbox_table(std::istream& in);
SBox load_sbox_file(const std::string& path);

/// One permutation per line as a space-separated image list.
std::vector<Permutation> load_generators(std::istream& in);
std::vector<Permutation> load_generator_file(const std::string& path);

/// d*d whitespace-separated field-element indices, row-major.
MixingLayer load_matrix(std::istream& in, const FieldSpec& field, int d);
MixingLayer load_matrix_file(const std::string& path, const FieldSpec& field, int d);

}  // namespace tbg
