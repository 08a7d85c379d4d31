#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tbg/algebra.hpp"
#include "tbg/group_engine.hpp"

namespace tbg {

/// A brick: a permutation table on the brick point space [0, p^{m_p}).
struct SBox {
  std::vector<u32> table;

  SBox() = default;
  explicit SBox(std::vector<u32> t);

  u32 size() const { return static_cast<u32>(table.size()); }
  bool fixes_zero() const { return !table.empty() && table[0] == 0; }
  SBox inverted() const;
  static SBox identity(u32 n);
};

/// An invertible d x d matrix over F_q acting on row vectors, v -> v*M.
struct MixingLayer {
  int d = 0;
  std::vector<int> mat;  // row-major, integer-encoded field elements

  MixingLayer() = default;
  MixingLayer(const FieldSpec& field, int d_, std::vector<int> mat_);

  int at(int row, int col) const { return mat[row * d + col]; }
  static MixingLayer identity(const FieldSpec& field, int d);
};

MixingLayer layer_inverse(const FieldSpec& field, const MixingLayer& layer);
int apply_layer_entry(const FieldSpec& field, const MixingLayer& layer,
                      const std::vector<int>& entries, int col);
Vector apply_layer(const VSpace& space, const MixingLayer& layer, const Vector& v);
u32 apply_layer_point(const VSpace& space, const MixingLayer& layer, u32 a);
/// The e x e matrix of the induced F_p-linear map: row t is the digit
/// vector of (t-th F_p basis vector) * layer.
std::vector<std::vector<int>> layer_fp_matrix(const VSpace& space, const MixingLayer& layer);

struct RoundSpec {
  std::vector<SBox> bricks;  // n bricks, each fixing 0
  MixingLayer layer;
  bool proper = true;  // asserts the round-key map k -> phi(k, h) is onto V
};

/// The cipher model: rounds of bricklayer + mixing layer + round-key
/// translation over V = F_q^d, with an explicit toy key table. Structural
/// validity (sizes, bijections, invertibility, 0-fixing bricks) is
/// enforced at construction; whether the declared-proper round also has a
/// proper mixing layer is a separate analysis question.
struct TbCipherSpec {
  std::string id;
  VSpace space;
  std::vector<RoundSpec> rounds;
  // key_schedule[k][h] = round key of round h under master key k
  std::optional<std::vector<std::vector<u32>>> key_schedule;

  TbCipherSpec() = default;
  TbCipherSpec(std::string id_, VSpace space_, std::vector<RoundSpec> rounds_,
               std::optional<std::vector<std::vector<u32>>> keys = std::nullopt);

  int first_proper_round() const;  // -1 when none is flagged
};

u32 apply_bricklayer_point(const VSpace& space, const std::vector<SBox>& bricks, u32 a);
Vector apply_bricklayer(const VSpace& space, const std::vector<SBox>& bricks, const Vector& v);

/// The translation x -> x + v.
Permutation translation_perm(const PointSpace& space, u32 v);
/// Full table of the bricklayer alone.
Permutation gamma_permutation(const VSpace& space, const std::vector<SBox>& bricks);
/// rho = gamma * lambda, the key-free part of the round.
Permutation gamma_lambda(const VSpace& space, const RoundSpec& round);
/// v -> (v gamma) lambda + k as a full table.
Permutation round_function(const VSpace& space, const RoundSpec& round, u32 key_point);

enum class GeneratorScope { OneRound, AllRounds };

/// Generators of the round-function group: {rho_h} plus the e basis
/// translations (the basis translations generate the full translation
/// group, so the closure equals <rho_h, T(V)>). AllRounds unions the
/// rho_h over every round and includes the translations once.
std::vector<Permutation> group_generators(const TbCipherSpec& cipher, GeneratorScope scope,
                                          int round_index = 0);

u32 encrypt_point(const TbCipherSpec& cipher, u32 master_key, u32 a);
Vector encrypt(const TbCipherSpec& cipher, u32 master_key, const Vector& v);
/// Inverse of encrypt, by table inversion; provided for round-trip tests.
u32 decrypt_point(const TbCipherSpec& cipher, u32 master_key, u32 a);

}  // namespace tbg
