#include "tbg/mixing_analysis.hpp"

namespace tbg {

MixingReport is_proper_mixing_layer(const VSpace& space, const MixingLayer& layer) {
  if (space.n > 24) throw budget_error("mixing layer subset scan limited to n <= 24 bricks");
  // For each brick i, the set of bricks touched by the images of its
  // basis vectors. The span of brick set I is layer-invariant iff the
  // reach of every i in I stays inside I.
  std::vector<u32> reach(space.n, 0);
  for (int i = 0; i < space.n; ++i) {
    for (int t = 0; t < space.m_p; ++t) {
      u32 basis = space.points.basis_point(i * space.m_p + t);
      u32 img = apply_layer_point(space, layer, basis);
      for (int j = 0; j < space.n; ++j)
        if (space.brick_of(img, j) != 0) reach[i] |= (1u << j);
    }
  }
  u32 full = (1u << space.n) - 1;
  for (u32 mask = 1; mask < full; ++mask) {
    u32 covered = 0;
    for (int i = 0; i < space.n; ++i)
      if (mask & (1u << i)) covered |= reach[i];
    if ((covered | mask) == mask) {
      MixingReport rep;
      rep.proper = false;
      std::vector<int> subset;
      for (int i = 0; i < space.n; ++i)
        if (mask & (1u << i)) subset.push_back(i + 1);
      rep.invariant_subset = std::move(subset);
      return rep;
    }
  }
  MixingReport rep;
  rep.proper = true;
  return rep;
}

std::optional<ImprimitivityWitness> find_imprimitivity_witness(const VSpace& space,
                                                               const std::vector<SBox>& bricks,
                                                               const MixingLayer& layer,
                                                               const Budgets& budgets) {
  const PointSpace& pts = space.points;
  if (pts.size > budgets.witness_max_points)
    throw budget_error("imprimitivity witness search limited to p^e <= " +
                       std::to_string(budgets.witness_max_points) + " points");
  Permutation gamma = gamma_permutation(space, bricks);
  MixingLayer inv = layer_inverse(space.field, layer);
  auto inv_rows = layer_fp_matrix(space, inv);

  Budgets enum_budgets = budgets;
  enum_budgets.enum_max_points = std::max(budgets.enum_max_points, pts.size);
  SubgroupEnumerator en(pts.e, pts.p, 1, pts.e - 1, enum_budgets);
  while (auto w = en.next()) {
    // W lambda^{-1} as an echelon basis
    std::vector<std::vector<int>> mapped;
    mapped.reserve(w->rows.size());
    for (const auto& row : w->rows) {
      std::vector<int> img(pts.e, 0);
      for (int t = 0; t < pts.e; ++t) {
        if (row[t] == 0) continue;
        for (int j = 0; j < pts.e; ++j)
          img[j] = (img[j] + row[t] * inv_rows[t][j]) % pts.p;
      }
      mapped.push_back(std::move(img));
    }
    SubgroupBasis target = echelonize(mapped, pts.e, pts.p);

    bool ok = true;
    for (u32 u : w->elements(pts)) {
      if (u == 0) continue;
      for (u32 v = 0; v < pts.size && ok; ++v) {
        u32 diff = pts.sub(gamma.img[pts.add(u, v)], gamma.img[v]);
        if (!target.contains_point(diff, pts)) ok = false;
      }
      if (!ok) break;
    }
    if (ok) return ImprimitivityWitness{std::move(*w), true};
  }
  return std::nullopt;
}

}  // namespace tbg
