#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace tbg {

using u8 = std::uint8_t;
using u32 = std::uint32_t;
using u64 = std::uint64_t;

// Malformed input: bad field spec, non-bijective table, size mismatch, ...
class spec_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A computation was refused because it exceeds a configured size bound.
class budget_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Size bounds for the expensive scans. All overridable per call site.
struct Budgets {
  // Maximum permutation degree accepted by the group engine.
  u32 bsgs_max_degree = 1u << 16;
  // Imprimitivity-witness search: maximum ambient point count p^e and
  // maximum number of candidate subgroups to scan.
  u32 witness_max_points = 1u << 10;
  u64 witness_max_subgroups = 1'000'000;
  // Subgroup enumeration: maximum ambient point count p^e.
  u32 enum_max_points = 1u << 16;
};

}  // namespace tbg
