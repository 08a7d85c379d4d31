#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "tbg/algebra.hpp"
#include "tbg/cipher.hpp"
#include "tbg/common.hpp"

namespace tbg {

/// Image of the difference map x -> f(x+a) - f(x) for a fixed shift a.
struct DifferenceImage {
  u32 shift = 0;
  std::vector<u32> image;  // sorted, duplicate-free
};

struct UniformityReport {
  int delta = 0;
  u32 min_image_size = 0;
  u32 witness_a = 0;  // smallest shift attaining the minimum
  bool passes = false;
};

struct AntiInvarianceReport {
  int r = 0;
  // (U, f(U)) pairs with |U| >= p^{m_p - r}, U proper, f(U) a subgroup
  std::vector<std::pair<SubgroupBasis, SubgroupBasis>> violations;
  bool passes = false;
};

struct CosetConditionReport {
  bool passes = false;
  std::optional<u32> witness_a;  // smallest shift whose image is a coset
};

DifferenceImage difference_image(const SBox& f, const PointSpace& brick, u32 a);

/// Weakly delta-uniform: |Im(f^_a)| > p^{m_p-1}/delta for every a != 0.
/// Requires m_p >= 2 and delta >= p.
UniformityReport check_weak_uniformity(const SBox& f, const PointSpace& brick, int delta);

/// Strongly r-anti-invariant: no subgroup U with p^{m_p-r} <= |U| < p^{m_p}
/// has f(U) closed under addition. Requires 1 <= r < m_p.
AntiInvarianceReport check_anti_invariance(const SBox& f, const PointSpace& brick, int r,
                                           const Budgets& budgets = {});

/// No difference image Im(f^_a), a != 0, is a coset of a subgroup.
CosetConditionReport check_coset_condition(const SBox& f, const PointSpace& brick);

/// True iff `set_points` is d0 + W for a subgroup W (any fixed d0 works).
bool is_coset_of_subgroup(const std::vector<u32>& set_points, const PointSpace& space);

/// Cross-check of the subgroup-size bound behind the uniformity
/// definitions: if Im(f^_a) is contained in W for every tested a != 0 and
/// f is weakly p^r-uniform, then |W| >= p^{m_p - r} must hold. Returns
/// false only when containment holds and the bound fails.
bool min_subgroup_order_bound(const SBox& f, const PointSpace& brick, int r,
                              const SubgroupBasis& w, const std::vector<u32>& shifts);

}  // namespace tbg
