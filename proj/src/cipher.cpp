#include "tbg/cipher.hpp"

#include <algorithm>

namespace tbg {

SBox::SBox(std::vector<u32> t) : table(std::move(t)) {
  if (table.empty()) throw spec_error("empty S-box table");
  if (!is_permutation_table(table)) throw spec_error("S-box table is not a bijection");
}

SBox SBox::identity(u32 n) {
  std::vector<u32> t(n);
  for (u32 i = 0; i < n; ++i) t[i] = i;
  return SBox(std::move(t));
}

SBox SBox::inverted() const {
  std::vector<u32> t(table.size());
  for (u32 i = 0; i < table.size(); ++i) t[table[i]] = i;
  return SBox(std::move(t));
}

MixingLayer::MixingLayer(const FieldSpec& field, int d_, std::vector<int> mat_)
    : d(d_), mat(std::move(mat_)) {
  if (static_cast<int>(mat.size()) != d * d) throw spec_error("mixing layer matrix is not d x d");
  for (int x : mat)
    if (x < 0 || x >= field.q) throw spec_error("mixing layer entry out of field range");
  layer_inverse(field, *this);  // throws when singular
}

MixingLayer MixingLayer::identity(const FieldSpec& field, int d) {
  std::vector<int> m(static_cast<size_t>(d) * d, 0);
  for (int i = 0; i < d; ++i) m[i * d + i] = 1;
  return MixingLayer(field, d, std::move(m));
}

MixingLayer layer_inverse(const FieldSpec& field, const MixingLayer& layer) {
  int d = layer.d;
  // Gauss-Jordan over F_q on [M | I]
  std::vector<std::vector<int>> a(d, std::vector<int>(2 * d, 0));
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) a[i][j] = layer.at(i, j);
    a[i][d + i] = 1;
  }
  for (int col = 0; col < d; ++col) {
    int pivot = -1;
    for (int r = col; r < d; ++r)
      if (a[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) throw spec_error("mixing layer matrix is singular");
    std::swap(a[col], a[pivot]);
    int inv = field.inv(a[col][col]);
    for (int j = 0; j < 2 * d; ++j) a[col][j] = field.mul(a[col][j], inv);
    for (int r = 0; r < d; ++r) {
      if (r == col || a[r][col] == 0) continue;
      int c = a[r][col];
      for (int j = 0; j < 2 * d; ++j) a[r][j] = field.sub(a[r][j], field.mul(c, a[col][j]));
    }
  }
  std::vector<int> out(static_cast<size_t>(d) * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) out[i * d + j] = a[i][d + j];
  MixingLayer r;
  r.d = d;
  r.mat = std::move(out);
  return r;
}

Vector apply_layer(const VSpace& space, const MixingLayer& layer, const Vector& v) {
  if (layer.d != space.d) throw spec_error("mixing layer size does not match space");
  if (static_cast<int>(v.entries.size()) != space.d) throw spec_error("vector size mismatch");
  const FieldSpec& k = space.field;
  Vector out;
  out.entries.assign(space.d, 0);
  for (int j = 0; j < space.d; ++j) {
    int acc = 0;
    for (int i = 0; i < space.d; ++i) acc = k.add(acc, k.mul(v.entries[i], layer.at(i, j)));
    out.entries[j] = acc;
  }
  return out;
}

u32 apply_layer_point(const VSpace& space, const MixingLayer& layer, u32 a) {
  return space.vector_to_point(apply_layer(space, layer, space.point_to_vector(a)));
}

std::vector<std::vector<int>> layer_fp_matrix(const VSpace& space, const MixingLayer& layer) {
  std::vector<std::vector<int>> rows(space.e);
  for (int t = 0; t < space.e; ++t) {
    u32 img = apply_layer_point(space, layer, space.points.basis_point(t));
    rows[t] = space.points.digits(img);
  }
  return rows;
}

TbCipherSpec::TbCipherSpec(std::string id_, VSpace space_, std::vector<RoundSpec> rounds_,
                           std::optional<std::vector<std::vector<u32>>> keys)
    : id(std::move(id_)), space(std::move(space_)), rounds(std::move(rounds_)),
      key_schedule(std::move(keys)) {
  if (rounds.empty()) throw spec_error("cipher needs at least one round");
  for (const auto& r : rounds) {
    if (static_cast<int>(r.bricks.size()) != space.n)
      throw spec_error("round brick count does not match n");
    for (const auto& b : r.bricks) {
      if (b.size() != space.brick_space.size)
        throw spec_error("brick table size does not match the brick space");
      if (!b.fixes_zero()) throw spec_error("brick does not fix 0");
    }
    if (r.layer.d != space.d) throw spec_error("round layer size does not match d");
  }
  if (key_schedule) {
    for (const auto& row : *key_schedule) {
      if (row.size() != rounds.size()) throw spec_error("key schedule row length != round count");
      for (u32 kp : row)
        if (kp >= space.num_points()) throw spec_error("round key out of range");
    }
    // a round flagged proper must take every value of V in its key column
    for (size_t h = 0; h < rounds.size(); ++h) {
      if (!rounds[h].proper) continue;
      std::vector<bool> seen(space.num_points(), false);
      u32 cnt = 0;
      for (const auto& row : *key_schedule)
        if (!seen[row[h]]) {
          seen[row[h]] = true;
          ++cnt;
        }
      if (cnt != space.num_points())
        throw spec_error("round " + std::to_string(h) +
                         " is flagged proper but its key column is not onto V");
    }
  }
}

int TbCipherSpec::first_proper_round() const {
  for (size_t h = 0; h < rounds.size(); ++h)
    if (rounds[h].proper) return static_cast<int>(h);
  return -1;
}

u32 apply_bricklayer_point(const VSpace& space, const std::vector<SBox>& bricks, u32 a) {
  if (static_cast<int>(bricks.size()) != space.n)
    throw spec_error("brick count does not match n");
  u32 out = 0;
  u32 mult = 1;
  for (int i = 0; i < space.n; ++i) {
    u32 piece = a % space.brick_space.size;
    a /= space.brick_space.size;
    if (bricks[i].size() != space.brick_space.size)
      throw spec_error("brick table size does not match the brick space");
    out += bricks[i].table[piece] * mult;
    mult *= space.brick_space.size;
  }
  return out;
}

Vector apply_bricklayer(const VSpace& space, const std::vector<SBox>& bricks, const Vector& v) {
  return space.point_to_vector(apply_bricklayer_point(space, bricks, space.vector_to_point(v)));
}

Permutation translation_perm(const PointSpace& space, u32 v) {
  Permutation p;
  p.img.resize(space.size);
  for (u32 x = 0; x < space.size; ++x) p.img[x] = space.add(x, v);
  return p;
}

Permutation gamma_permutation(const VSpace& space, const std::vector<SBox>& bricks) {
  Permutation p;
  p.img.resize(space.num_points());
  for (u32 x = 0; x < space.num_points(); ++x) p.img[x] = apply_bricklayer_point(space, bricks, x);
  return p;
}

Permutation gamma_lambda(const VSpace& space, const RoundSpec& round) {
  // evaluate lambda entry-wise from a per-entry image cache: the image of
  // v is sum_j v_j * row_j with row_j the layer image of basis entry j
  Permutation p;
  p.img.resize(space.num_points());
  const u32 npts = space.num_points();
  // cache: for each entry position j and field value c, the point of the
  // layer image of c*e_j
  const FieldSpec& k = space.field;
  std::vector<std::vector<u32>> cache(space.d, std::vector<u32>(k.q));
  for (int j = 0; j < space.d; ++j) {
    Vector basis;
    basis.entries.assign(space.d, 0);
    for (int c = 0; c < k.q; ++c) {
      basis.entries[j] = c;
      cache[j][c] = space.vector_to_point(apply_layer(space, round.layer, basis));
    }
  }
  for (u32 x = 0; x < npts; ++x) {
    u32 g = apply_bricklayer_point(space, round.bricks, x);
    u32 acc = 0;
    u32 t = g;
    for (int j = 0; j < space.d; ++j) {
      acc = space.points.add(acc, cache[j][t % static_cast<u32>(k.q)]);
      t /= static_cast<u32>(k.q);
    }
    p.img[x] = acc;
  }
  return p;
}

Permutation round_function(const VSpace& space, const RoundSpec& round, u32 key_point) {
  Permutation p = gamma_lambda(space, round);
  if (key_point == 0) return p;
  for (u32 x = 0; x < p.img.size(); ++x) p.img[x] = space.points.add(p.img[x], key_point);
  return p;
}

std::vector<Permutation> group_generators(const TbCipherSpec& cipher, GeneratorScope scope,
                                          int round_index) {
  const VSpace& sp = cipher.space;
  std::vector<Permutation> gens;
  if (scope == GeneratorScope::OneRound) {
    if (round_index < 0 || round_index >= static_cast<int>(cipher.rounds.size()))
      throw spec_error("round index out of range");
    if (!cipher.rounds[round_index].proper)
      throw spec_error(
          "round " + std::to_string(round_index) +
          " is not flagged proper: the one-round group equals <rho, T(V)> only when the "
          "round-key map k -> phi(k,h) is onto V");
    gens.push_back(gamma_lambda(sp, cipher.rounds[round_index]));
  } else {
    if (cipher.first_proper_round() < 0)
      throw spec_error(
          "no round is flagged proper; a translation based cipher requires at least one round "
          "with a surjective round-key map (condition (2) of the definition)");
    for (const auto& r : cipher.rounds) gens.push_back(gamma_lambda(sp, r));
  }
  for (int t = 0; t < sp.e; ++t)
    gens.push_back(translation_perm(sp.points, sp.points.basis_point(t)));
  return gens;
}

u32 encrypt_point(const TbCipherSpec& cipher, u32 master_key, u32 a) {
  if (!cipher.key_schedule) throw spec_error("cipher has no key schedule table");
  if (master_key >= cipher.key_schedule->size()) throw spec_error("unknown master key index");
  const auto& keys = (*cipher.key_schedule)[master_key];
  for (size_t h = 0; h < cipher.rounds.size(); ++h) {
    a = apply_bricklayer_point(cipher.space, cipher.rounds[h].bricks, a);
    a = apply_layer_point(cipher.space, cipher.rounds[h].layer, a);
    a = cipher.space.points.add(a, keys[h]);
  }
  return a;
}

Vector encrypt(const TbCipherSpec& cipher, u32 master_key, const Vector& v) {
  return cipher.space.point_to_vector(
      encrypt_point(cipher, master_key, cipher.space.vector_to_point(v)));
}

u32 decrypt_point(const TbCipherSpec& cipher, u32 master_key, u32 a) {
  if (!cipher.key_schedule) throw spec_error("cipher has no key schedule table");
  if (master_key >= cipher.key_schedule->size()) throw spec_error("unknown master key index");
  const auto& keys = (*cipher.key_schedule)[master_key];
  for (size_t h = cipher.rounds.size(); h-- > 0;) {
    a = cipher.space.points.sub(a, keys[h]);
    a = apply_layer_point(cipher.space, layer_inverse(cipher.space.field, cipher.rounds[h].layer),
                          a);
    std::vector<SBox> inv_bricks;
    inv_bricks.reserve(cipher.rounds[h].bricks.size());
    for (const auto& b : cipher.rounds[h].bricks) inv_bricks.push_back(b.inverted());
    a = apply_bricklayer_point(cipher.space, inv_bricks, a);
  }
  return a;
}

}  // namespace tbg
