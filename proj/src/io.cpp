#include "tbg/io.hpp"

#include <fstream>
#include <sstream>

namespace tbg {

namespace {

std::ifstream open_or_throw(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw spec_error("cannot open '" + path + "'");
  return in;
}

}  // namespace

Budgets budgets_from_json(const nlohmann::json& doc, Budgets base) {
  if (!doc.is_object()) throw spec_error("budgets must be a JSON object");
  for (const auto& [key, value] : doc.items()) {
    if (key == "bsgs_max_degree")
      base.bsgs_max_degree = value.get<u32>();
    else if (key == "witness_max_points")
      base.witness_max_points = value.get<u32>();
    else if (key == "witness_max_subgroups")
      base.witness_max_subgroups = value.get<u64>();
    else if (key == "enum_max_points")
      base.enum_max_points = value.get<u32>();
    else
      throw spec_error("unknown budget key '" + key + "'");
  }
  return base;
}

TbCipherSpec cipher_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw spec_error("cipher spec must be a JSON object");
  for (const char* key : {"field", "m", "n", "rounds"})
    if (!doc.contains(key)) throw spec_error(std::string("cipher spec is missing '") + key + "'");

  FieldSpec field = FieldSpec::parse(doc.at("field").get<std::string>());
  int m = doc.at("m").get<int>();
  int n = doc.at("n").get<int>();
  Budgets budgets;
  if (doc.contains("budgets")) budgets = budgets_from_json(doc.at("budgets"));
  VSpace space(field, m, n, budgets.bsgs_max_degree);

  std::vector<RoundSpec> rounds;
  for (const auto& rdoc : doc.at("rounds")) {
    RoundSpec r;
    if (!rdoc.contains("bricks") || !rdoc.contains("layer"))
      throw spec_error("round needs 'bricks' and 'layer'");
    for (const auto& bdoc : rdoc.at("bricks"))
      r.bricks.emplace_back(bdoc.get<std::vector<u32>>());
    r.layer = MixingLayer(field, space.d, rdoc.at("layer").get<std::vector<int>>());
    r.proper = rdoc.value("proper", true);
    rounds.push_back(std::move(r));
  }

  std::optional<std::vector<std::vector<u32>>> keys;
  if (doc.contains("key_schedule"))
    keys = doc.at("key_schedule").get<std::vector<std::vector<u32>>>();

  return TbCipherSpec(doc.value("id", std::string{}), std::move(space), std::move(rounds),
                      std::move(keys));
}

TbCipherSpec load_cipher_file(const std::string& path) {
  auto in = open_or_throw(path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw spec_error("cannot parse '" + path + "': " + e.what());
  }
  return cipher_from_json(doc);
}

SBox load_sbox_table(std::istream& in) {
  std::vector<u32> table;
  long long v = 0;
  while (in >> v) {
    if (v < 0) throw spec_error("S-box entries must be non-negative");
    table.push_back(static_cast<u32>(v));
  }
  if (!in.eof()) throw spec_error("S-box table contains a non-integer token");
  return SBox(std::move(table));
}

SBox load_sbox_file(const std::string& path) {
  auto in = open_or_throw(path);
  return load_sbox_table(in);
}

std::vector<Permutation> load_generators(std::istream& in) {
  std::vector<Permutation> gens;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ls(line);
    Permutation p;
    long long v = 0;
    while (ls >> v) {
      if (v < 0) throw spec_error("permutation images must be non-negative");
      p.img.push_back(static_cast<u32>(v));
    }
    if (!ls.eof()) throw spec_error("permutation line contains a non-integer token");
    if (!is_permutation_table(p.img))
      throw spec_error("permutation line is not a bijection on [0, " +
                       std::to_string(p.img.size()) + ")");
    gens.push_back(std::move(p));
  }
  if (gens.empty()) throw spec_error("generator file contains no permutations");
  return gens;
}

std::vector<Permutation> load_generator_file(const std::string& path) {
  auto in = open_or_throw(path);
  return load_generators(in);
}

MixingLayer load_matrix(std::istream& in, const FieldSpec& field, int d) {
  std::vector<int> mat;
  long long v = 0;
  while (in >> v) mat.push_back(static_cast<int>(v));
  if (!in.eof()) throw spec_error("matrix contains a non-integer token");
  return MixingLayer(field, d, std::move(mat));
}

MixingLayer load_matrix_file(const std::string& path, const FieldSpec& field, int d) {
  auto in = open_or_throw(path);
  return load_matrix(in, field, d);
}

}  // namespace tbg
