#pragma once

#include <optional>
#include <vector>

#include "tbg/algebra.hpp"
#include "tbg/cipher.hpp"
#include "tbg/common.hpp"

namespace tbg {

struct MixingReport {
  bool proper = false;
  // 1-based brick indices I with (sum of V_i, i in I) invariant under the
  // layer; present iff proper is false.
  std::optional<std::vector<int>> invariant_subset;
};

/// A mixing layer is proper when no sum of the bricks other than {0} and
/// V is invariant under it. Scans all 2^n - 2 candidate subsets; n <= 24.
MixingReport is_proper_mixing_layer(const VSpace& space, const MixingLayer& layer);

struct ImprimitivityWitness {
  SubgroupBasis w;
  bool verified = false;  // (u+v)gamma - v gamma lies in W lambda^{-1} for all u in W, v in V
};

/// First subgroup W (canonical order: increasing dimension, then echelon
/// order) such that (u+v)gamma - v gamma is in W lambda^{-1} for all
/// u in W and v in V. For a round with a surjective key map this is
/// equivalent to imprimitivity of <rho, T(V)>, and the blocks are the
/// cosets {W+v}. Returns nullopt when no witness exists.
std::optional<ImprimitivityWitness> find_imprimitivity_witness(const VSpace& space,
                                                               const std::vector<SBox>& bricks,
                                                               const MixingLayer& layer,
                                                               const Budgets& budgets = {});

}  // namespace tbg
