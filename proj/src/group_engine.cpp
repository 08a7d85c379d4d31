#include "tbg/group_engine.hpp"

#include <algorithm>
#include <numeric>

namespace tbg {

Permutation Permutation::identity(u32 n) {
  Permutation p;
  p.img.resize(n);
  std::iota(p.img.begin(), p.img.end(), 0u);
  return p;
}

bool Permutation::is_identity() const {
  for (u32 x = 0; x < img.size(); ++x)
    if (img[x] != x) return false;
  return true;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw spec_error("compose: degree mismatch");
  Permutation r;
  r.img.resize(a.img.size());
  for (u32 x = 0; x < a.img.size(); ++x) r.img[x] = b.img[a.img[x]];
  return r;
}

Permutation inverse(const Permutation& a) {
  Permutation r;
  r.img.resize(a.img.size());
  for (u32 x = 0; x < a.img.size(); ++x) r.img[a.img[x]] = x;
  return r;
}

bool is_permutation_table(const std::vector<u32>& table) {
  std::vector<bool> seen(table.size(), false);
  for (u32 y : table) {
    if (y >= table.size() || seen[y]) return false;
    seen[y] = true;
  }
  return true;
}

int parity(const Permutation& a) {
  std::vector<bool> seen(a.img.size(), false);
  int transpositions = 0;
  for (u32 x = 0; x < a.img.size(); ++x) {
    if (seen[x]) continue;
    u32 len = 0, y = x;
    while (!seen[y]) {
      seen[y] = true;
      y = a.img[y];
      ++len;
    }
    transpositions += static_cast<int>(len - 1);
  }
  return transpositions % 2 == 0 ? 1 : -1;
}

namespace {

u32 smallest_moved(const Permutation& g) {
  for (u32 x = 0; x < g.degree(); ++x)
    if (g.img[x] != x) return x;
  throw spec_error("identity permutation has no moved point");
}

void check_generators(const std::vector<Permutation>& gens, u32 max_degree) {
  if (gens.empty()) throw spec_error("empty generator list");
  u32 n = gens.front().degree();
  if (n == 0) throw spec_error("zero-degree permutation");
  if (n > max_degree)
    throw budget_error("degree " + std::to_string(n) + " exceeds the group engine bound of " +
                       std::to_string(max_degree));
  for (const auto& g : gens) {
    if (g.degree() != n) throw spec_error("generator degree mismatch");
    if (!is_permutation_table(g.img)) throw spec_error("generator table is not a bijection");
  }
}

}  // namespace

GroupBSGS::GroupBSGS(std::vector<Permutation> generators, u32 max_degree)
    : input_gens_(std::move(generators)) {
  check_generators(input_gens_, max_degree);
  degree_ = input_gens_.front().degree();
  for (const auto& g : input_gens_) {
    if (g.is_identity()) continue;
    strong_gens_.push_back(g);
    distribute_(static_cast<u32>(strong_gens_.size()) - 1);
  }
  for (size_t l = 0; l < levels_.size(); ++l) rebuild_orbit_(l);
  for (size_t l = levels_.size(); l-- > 0;) schreier_sims_(l);
  order_ = 1;
  for (const auto& lv : levels_) order_ *= static_cast<unsigned long>(lv.orbit.size());
}

void GroupBSGS::distribute_(u32 gen_id) {
  const Permutation& g = strong_gens_[gen_id];
  size_t j = 0;
  while (j < levels_.size() && g.img[levels_[j].beta] == levels_[j].beta) ++j;
  if (j == levels_.size()) {
    Level lv;
    lv.beta = smallest_moved(g);
    levels_.push_back(std::move(lv));
  }
  for (size_t l = 0; l <= j; ++l) levels_[l].gen_ids.push_back(gen_id);
}

void GroupBSGS::rebuild_orbit_(size_t level) {
  Level& lv = levels_[level];
  lv.sv_gen.assign(degree_, -1);
  lv.sv_from.assign(degree_, 0);
  lv.orbit.clear();
  lv.tr_cache.clear();
  lv.sv_gen[lv.beta] = -2;
  lv.orbit.push_back(lv.beta);
  for (size_t head = 0; head < lv.orbit.size(); ++head) {
    u32 x = lv.orbit[head];
    for (u32 gid : lv.gen_ids) {
      u32 y = strong_gens_[gid].img[x];
      if (lv.sv_gen[y] == -1) {
        lv.sv_gen[y] = static_cast<std::int32_t>(gid);
        lv.sv_from[y] = x;
        lv.orbit.push_back(y);
      }
    }
  }
  lv.cached = static_cast<u64>(lv.orbit.size()) * degree_ <= (u64(1) << 22);
  if (lv.cached) {
    lv.tr_cache.assign(degree_, {});
    lv.tr_cache[lv.beta] = Permutation::identity(degree_);
    for (u32 y : lv.orbit) {
      if (y == lv.beta) continue;
      lv.tr_cache[y] = compose(lv.tr_cache[lv.sv_from[y]],
                               strong_gens_[static_cast<u32>(lv.sv_gen[y])]);
    }
  }
}

Permutation GroupBSGS::transversal_(size_t level, u32 point) const {
  const Level& lv = levels_[level];
  if (lv.cached) return lv.tr_cache[point];
  std::vector<u32> path;
  u32 x = point;
  while (x != lv.beta) {
    path.push_back(static_cast<u32>(lv.sv_gen[x]));
    x = lv.sv_from[x];
  }
  Permutation u = Permutation::identity(degree_);
  for (size_t i = path.size(); i-- > 0;) u = compose(u, strong_gens_[path[i]]);
  return u;
}

std::pair<Permutation, size_t> GroupBSGS::strip_(Permutation g, size_t from) const {
  for (size_t l = from; l < levels_.size(); ++l) {
    u32 delta = g.img[levels_[l].beta];
    if (delta == levels_[l].beta) continue;
    if (!levels_[l].in_orbit(delta)) return {std::move(g), l};
    g = compose(g, inverse(transversal_(l, delta)));
  }
  return {std::move(g), levels_.size()};
}

void GroupBSGS::schreier_sims_(size_t level) {
  rebuild_orbit_(level);
  // Copies: recursion below may reallocate levels_ and strong_gens_.
  const std::vector<u32> orbit = levels_[level].orbit;
  const std::vector<u32> gen_ids = levels_[level].gen_ids;
  for (size_t oi = 0; oi < orbit.size(); ++oi) {
    u32 beta_pt = orbit[oi];
    Permutation u_b = transversal_(level, beta_pt);
    for (size_t gi = 0; gi < gen_ids.size(); ++gi) {
      u32 target = strong_gens_[gen_ids[gi]].img[beta_pt];
      Permutation sg =
          compose(compose(u_b, strong_gens_[gen_ids[gi]]), inverse(transversal_(level, target)));
      if (sg.is_identity()) continue;
      auto [h, j] = strip_(std::move(sg), level + 1);
      if (h.is_identity()) continue;
      u32 hid = static_cast<u32>(strong_gens_.size());
      strong_gens_.push_back(std::move(h));
      if (j == levels_.size()) {
        Level nl;
        nl.beta = smallest_moved(strong_gens_[hid]);
        levels_.push_back(std::move(nl));
      }
      for (size_t l = level + 1; l <= j; ++l) levels_[l].gen_ids.push_back(hid);
      for (size_t l = j; l >= level + 1; --l) {
        schreier_sims_(l);
        if (l == level + 1) break;
      }
    }
  }
}

std::vector<u32> GroupBSGS::base() const {
  std::vector<u32> b;
  b.reserve(levels_.size());
  for (const auto& lv : levels_) b.push_back(lv.beta);
  return b;
}

bool GroupBSGS::contains(const Permutation& g) const {
  if (g.degree() != degree_) throw spec_error("membership test: degree mismatch");
  if (!is_permutation_table(g.img)) throw spec_error("membership test: not a bijection");
  Permutation h = g;
  for (size_t l = 0; l < levels_.size(); ++l) {
    u32 delta = h.img[levels_[l].beta];
    if (delta == levels_[l].beta) continue;
    if (!levels_[l].in_orbit(delta)) return false;
    h = compose(h, inverse(transversal_(l, delta)));
  }
  return h.is_identity();
}

bool GroupBSGS::is_transitive() const { return tbg::is_transitive(input_gens_); }

bool is_transitive(const std::vector<Permutation>& gens) {
  check_generators(gens, UINT32_MAX);
  u32 n = gens.front().degree();
  std::vector<bool> seen(n, false);
  std::vector<u32> queue{0};
  seen[0] = true;
  size_t cnt = 1;
  for (size_t head = 0; head < queue.size(); ++head) {
    u32 x = queue[head];
    for (const auto& g : gens) {
      u32 y = g.img[x];
      if (!seen[y]) {
        seen[y] = true;
        queue.push_back(y);
        ++cnt;
      }
    }
  }
  return cnt == n;
}

namespace {

struct UnionFind {
  std::vector<u32> parent;
  explicit UnionFind(u32 n) : parent(n) { std::iota(parent.begin(), parent.end(), 0u); }
  u32 find(u32 x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  // Merges the classes; the smaller root stays representative. Returns
  // the absorbed root, or UINT32_MAX if already joined.
  u32 unite(u32 a, u32 b) {
    u32 ra = find(a), rb = find(b);
    if (ra == rb) return UINT32_MAX;
    if (rb < ra) std::swap(ra, rb);
    parent[rb] = ra;
    return rb;
  }
};

std::optional<BlockSystem> minimal_block_unchecked(const std::vector<Permutation>& gens, u32 a,
                                                   u32 b) {
  u32 n = gens.front().degree();
  UnionFind uf(n);
  std::vector<u32> queue;
  u32 absorbed = uf.unite(a, b);
  queue.push_back(absorbed);
  for (size_t head = 0; head < queue.size(); ++head) {
    u32 gamma = queue[head];
    u32 beta = uf.find(gamma);
    for (const auto& g : gens) {
      u32 merged = uf.unite(g.img[gamma], g.img[beta]);
      if (merged != UINT32_MAX) queue.push_back(merged);
    }
  }
  // collect cells
  std::vector<u32> root_id(n, UINT32_MAX);
  BlockSystem sys;
  sys.degree = n;
  sys.cell_of.resize(n);
  for (u32 x = 0; x < n; ++x) {
    u32 r = uf.find(x);
    if (root_id[r] == UINT32_MAX) {
      root_id[r] = static_cast<u32>(sys.blocks.size());
      sys.blocks.emplace_back();
    }
    sys.cell_of[x] = root_id[r];
    sys.blocks[root_id[r]].push_back(x);
  }
  if (sys.blocks.size() <= 1) return std::nullopt;
  sys.block_size = static_cast<u32>(sys.blocks.front().size());
  for (const auto& cell : sys.blocks)
    if (cell.size() != sys.block_size)
      throw spec_error("block refinement produced unequal cells; input group not transitive?");
  return sys;
}

}  // namespace

std::optional<BlockSystem> minimal_block(const std::vector<Permutation>& gens, u32 a, u32 b) {
  check_generators(gens, UINT32_MAX);
  if (!is_transitive(gens)) throw spec_error("minimal_block requires a transitive group");
  u32 n = gens.front().degree();
  if (a >= n || b >= n || a == b) throw spec_error("minimal_block needs two distinct points");
  return minimal_block_unchecked(gens, a, b);
}

PrimitivityResult is_primitive(const std::vector<Permutation>& gens,
                               const PointSpace* coset_space) {
  check_generators(gens, UINT32_MAX);
  u32 n = gens.front().degree();
  if (!is_transitive(gens)) throw spec_error("is_primitive requires a transitive group");
  if (n == 1) return {true, std::nullopt};
  for (u32 v = 1; v < n; ++v) {
    auto sys = minimal_block_unchecked(gens, 0, v);
    if (!sys) continue;
    if (coset_space && coset_space->size == n) {
      const auto& cell0 = sys->blocks[sys->cell_of[0]];
      if (is_closed_under_addition(cell0, *coset_space))
        sys->as_subgroup = echelonize_points(cell0, *coset_space);
    }
    return {false, std::move(sys)};
  }
  return {true, std::nullopt};
}

const char* to_string(GroupClass c) {
  switch (c) {
    case GroupClass::Sym: return "Sym";
    case GroupClass::Alt: return "Alt";
    default: return "ProperSubgroup";
  }
}

mpz_class factorial(u32 n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

GroupClass classify_alt_sym(const GroupBSGS& g) {
  // Groups of order below 20! cannot be Sym or Alt of degree >= 21, so
  // skip the factorial for small orders on large degrees.
  if (g.degree() >= 21 && mpz_sizeinbase(g.order().get_mpz_t(), 2) <= 64)
    return GroupClass::ProperSubgroup;
  mpz_class full = factorial(g.degree());
  if (g.order() == full) return GroupClass::Sym;
  if (g.order() * 2 == full) return GroupClass::Alt;
  return GroupClass::ProperSubgroup;
}

bool verify_block_coset_form(const BlockSystem& blocks, const PointSpace& space) {
  if (blocks.degree != space.size) throw spec_error("block system degree does not match space");
  const auto& cell0 = blocks.blocks[blocks.cell_of[0]];
  if (!is_closed_under_addition(cell0, space)) return false;
  for (const auto& cell : blocks.blocks) {
    u32 v = cell.front();
    for (u32 w : cell0)
      if (blocks.cell_of[space.add(v, w)] != blocks.cell_of[v]) return false;
  }
  return true;
}

}  // namespace tbg
