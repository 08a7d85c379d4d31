#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "tbg/algebra.hpp"
#include "tbg/common.hpp"

namespace tbg {

/// A permutation of [0, N) as a full image table. Actions are on the
/// right throughout: compose(a, b) applies a first, then b.
struct Permutation {
  std::vector<u32> img;

  static Permutation identity(u32 n);
  u32 degree() const { return static_cast<u32>(img.size()); }
  u32 operator[](u32 x) const { return img[x]; }
  bool is_identity() const;
  bool operator==(const Permutation&) const = default;
};

Permutation compose(const Permutation& a, const Permutation& b);
Permutation inverse(const Permutation& a);
bool is_permutation_table(const std::vector<u32>& table);
/// +1 for even permutations, -1 for odd ones.
int parity(const Permutation& a);

/// A nontrivial invariant partition of [0, N) into equal-size cells.
struct BlockSystem {
  u32 degree = 0;
  u32 block_size = 0;
  std::vector<u32> cell_of;               // point -> block id; block 0 contains point 0
  std::vector<std::vector<u32>> blocks;   // sorted cells, ordered by least element
  // When the group contains all translations the cell of 0 is a subgroup
  // W and the blocks are its cosets {W+v}; filled in by is_primitive.
  std::optional<SubgroupBasis> as_subgroup;
};

/// Base and strong generating set via deterministic Schreier-Sims.
/// Base points are chosen greedily as the smallest non-fixed points, so
/// orders, bases and transcripts are reproducible.
class GroupBSGS {
 public:
  explicit GroupBSGS(std::vector<Permutation> generators, u32 max_degree = 1u << 16);

  u32 degree() const { return degree_; }
  const mpz_class& order() const { return order_; }
  const std::vector<Permutation>& generators() const { return input_gens_; }
  const std::vector<Permutation>& strong_generators() const { return strong_gens_; }
  std::vector<u32> base() const;
  /// Membership by sifting through the stabilizer chain.
  bool contains(const Permutation& g) const;
  bool is_transitive() const;

 private:
  struct Level {
    u32 beta = 0;
    std::vector<u32> gen_ids;           // indices into strong_gens_
    std::vector<std::int32_t> sv_gen;   // Schreier vector: strong gen id, -1 out, -2 root
    std::vector<u32> sv_from;
    std::vector<u32> orbit;             // discovery order
    // materialized transversal per point, kept only while orbit*degree is
    // small; otherwise transversals are rebuilt by walking the vector
    std::vector<Permutation> tr_cache;
    bool cached = false;
    bool in_orbit(u32 x) const { return sv_gen[x] != -1; }
  };

  u32 degree_ = 0;
  std::vector<Permutation> input_gens_;
  std::vector<Permutation> strong_gens_;
  std::vector<Level> levels_;
  mpz_class order_;

  void distribute_(u32 gen_id);
  void rebuild_orbit_(size_t level);
  Permutation transversal_(size_t level, u32 point) const;
  std::pair<Permutation, size_t> strip_(Permutation g, size_t from) const;
  void schreier_sims_(size_t level);
};

inline GroupBSGS bsgs(std::vector<Permutation> generators, u32 max_degree = 1u << 16) {
  return GroupBSGS(std::move(generators), max_degree);
}

bool is_transitive(const std::vector<Permutation>& gens);

/// Finest G-invariant partition in which a and b share a cell (Atkinson
/// refinement over the generator images); nullopt when that partition is
/// the single cell {V}. The group must be transitive.
std::optional<BlockSystem> minimal_block(const std::vector<Permutation>& gens, u32 a, u32 b);

struct PrimitivityResult {
  bool primitive = false;
  std::optional<BlockSystem> blocks;
};

/// Scans minimal_block({0, v}) over all v != 0; reports the first
/// nontrivial system found. When coset_space is given (generators are
/// known to contain all basis translations) the cell of 0 is verified to
/// be a subgroup and attached to the block system.
PrimitivityResult is_primitive(const std::vector<Permutation>& gens,
                               const PointSpace* coset_space = nullptr);

enum class GroupClass { Sym, Alt, ProperSubgroup };
const char* to_string(GroupClass c);

/// Sym iff |G| = N!, Alt iff |G| = N!/2, else ProperSubgroup. Exact big
/// integer arithmetic throughout.
GroupClass classify_alt_sym(const GroupBSGS& g);

mpz_class factorial(u32 n);

/// True iff the cell containing 0 is closed under addition and every
/// other cell is one of its cosets.
bool verify_block_coset_form(const BlockSystem& blocks, const PointSpace& space);

}  // namespace tbg
