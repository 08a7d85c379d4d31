#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tbg/common.hpp"

namespace tbg {

bool is_prime(int n);

/// F_q = F_p[x]/(pi), pi monic irreducible of degree f, coefficients
/// stored low-to-high. Elements are encoded as integers in [0, q):
/// base-p digit i of the encoding is the coefficient of x^i.
struct FieldSpec {
  int p = 2;
  int f = 1;
  std::vector<int> poly;  // length f+1, entries in [0,p), poly[f] == 1
  int q = 2;              // p^f

  FieldSpec() : poly{0, 1} {}
  FieldSpec(int p_, std::vector<int> poly_);

  /// Parses "p" (prime field, pi = x) or "p^f/c0,c1,...,cf".
  static FieldSpec parse(const std::string& text);
  std::string to_text() const;

  int add(int a, int b) const;
  int sub(int a, int b) const;
  int neg(int a) const;
  int mul(int a, int b) const;
  int pow(int a, u64 k) const;
  int inv(int a) const;  // a != 0

  std::vector<int> coeffs(int a) const;
  int from_coeffs(std::span<const int> c) const;
};

/// An element of F_q in the pi-basis; thin coefficient-vector view of the
/// integer encoding used everywhere else.
struct FieldElement {
  std::vector<int> coeffs;
  bool operator==(const FieldElement&) const = default;
};

FieldElement fe_from_index(const FieldSpec& k, int v);
int fe_index(const FieldSpec& k, const FieldElement& a);
FieldElement ff_add(const FieldSpec& k, const FieldElement& a, const FieldElement& b);
FieldElement ff_mul(const FieldSpec& k, const FieldElement& a, const FieldElement& b);

/// The elementary abelian group F_p^e with points encoded as integers in
/// [0, p^e) by little-endian base-p digits.
struct PointSpace {
  int p = 2;
  int e = 1;
  u32 size = 2;  // p^e

  PointSpace() = default;
  PointSpace(int p_, int e_, u64 max_points = u64(1) << 16);

  u32 add(u32 a, u32 b) const;
  u32 sub(u32 a, u32 b) const;
  u32 neg(u32 a) const;
  u32 scale(u32 a, int c) const;  // c * a, c in [0, p)
  u32 basis_point(int t) const;   // t-th standard basis vector

  std::vector<int> digits(u32 a) const;
  u32 from_digits(std::span<const int> d) const;
};

/// A vector of V = F_q^d; entries are integer-encoded field elements.
struct Vector {
  std::vector<int> entries;
  bool operator==(const Vector&) const = default;
};

/// V = F_q^d with the brick decomposition V = V_1 + ... + V_n (d = m*n).
/// Points of V are indexed in [0, p^e), e = d*f, by the little-endian
/// base-p encoding with brick 1 in the least significant digits. This
/// fixes the bijection V <-> {0..|V|-1} used by the whole artifact.
struct VSpace {
  FieldSpec field;
  int d = 4;    // F_q-dimension
  int m = 2;    // F_q-dimension of each brick, > 1
  int n = 2;    // brick count, > 1
  int e = 4;    // F_p-dimension = d*f
  int m_p = 2;  // per-brick F_p-dimension = m*f
  PointSpace points;       // F_p^e
  PointSpace brick_space;  // F_p^{m_p}, shared by all bricks

  VSpace() = default;
  VSpace(FieldSpec field_, int m_, int n_, u64 max_points = u64(1) << 16);

  u32 num_points() const { return points.size; }

  u32 vector_to_point(const Vector& v) const;
  Vector point_to_vector(u32 a) const;

  /// Projection pi_i onto brick i (0-based), as a brick-space point.
  u32 brick_of(u32 a, int i) const;
  /// Replaces brick i of point a with the brick-space point b.
  u32 with_brick(u32 a, int i, u32 b) const;
  /// Entries (i*m .. i*m+m-1) of v, as an m-entry vector.
  Vector brick_entries(const Vector& v, int i) const;
};

/// An F_p-subspace of F_p^e ("subgroup") held in reduced row-echelon
/// form, which is the unique representative per subspace.
struct SubgroupBasis {
  int p = 2;
  int ambient_e = 0;
  std::vector<std::vector<int>> rows;  // RREF over F_p, each length ambient_e

  int dim() const { return static_cast<int>(rows.size()); }
  u64 order() const;  // p^dim
  bool contains(std::span<const int> v) const;
  bool contains_point(u32 a, const PointSpace& space) const;
  /// All p^dim member points, in the deterministic combination order.
  std::vector<u32> elements(const PointSpace& space) const;
  bool operator==(const SubgroupBasis&) const = default;
};

/// Reduced row-echelon basis of the span of `vectors` over F_p.
SubgroupBasis echelonize(const std::vector<std::vector<int>>& vectors, int e, int p);
SubgroupBasis echelonize_points(const std::vector<u32>& pts, const PointSpace& space);

/// True iff x+y stays in S for all x, y in S. S must be nonempty; a
/// nonempty finite subset of F_p^e closed under addition is a subgroup.
bool is_closed_under_addition(const std::vector<u32>& set_points, const PointSpace& space);

/// Streams every F_p-subspace of F_p^e with dim in [min_dim, max_dim],
/// each exactly once, in canonical order: by dimension, then by pivot
/// columns lexicographically, then by free entries counted little-endian
/// in row-major position order.
class SubgroupEnumerator {
 public:
  SubgroupEnumerator(int e, int p, int min_dim, int max_dim, const Budgets& budgets = {});

  std::optional<SubgroupBasis> next();
  u64 total_count() const { return total_count_; }

  /// Number of subspaces with dim in [min_dim, max_dim]; saturates at
  /// UINT64_MAX.
  static u64 count(int e, int p, int min_dim, int max_dim);

 private:
  int e_, p_, max_dim_;
  int dim_;
  bool done_ = false;
  std::vector<int> pivots_;             // current pivot columns, increasing
  std::vector<std::pair<int, int>> free_pos_;  // (row, col) of free entries
  std::vector<int> free_val_;
  u64 total_count_;

  bool start_dim(int k);
  bool advance_pivots();
  void reset_free();
  SubgroupBasis materialize() const;
};

/// Convenience: materializes the whole stream.
std::vector<SubgroupBasis> enumerate_subgroups(int e, int p, int min_dim, int max_dim,
                                               const Budgets& budgets = {});

}  // namespace tbg
