#include "tbg/sbox_analysis.hpp"

#include <algorithm>

namespace tbg {

namespace {

void check_box(const SBox& f, const PointSpace& brick) {
  if (f.size() != brick.size) throw spec_error("S-box size does not match the brick space");
}

}  // namespace

DifferenceImage difference_image(const SBox& f, const PointSpace& brick, u32 a) {
  check_box(f, brick);
  if (a == 0) throw spec_error("difference image needs a nonzero shift");
  if (a >= brick.size) throw spec_error("shift out of range");
  std::vector<bool> hit(brick.size, false);
  DifferenceImage out;
  out.shift = a;
  for (u32 x = 0; x < brick.size; ++x) {
    u32 y = brick.sub(f.table[brick.add(x, a)], f.table[x]);
    if (!hit[y]) {
      hit[y] = true;
      out.image.push_back(y);
    }
  }
  std::sort(out.image.begin(), out.image.end());
  return out;
}

UniformityReport check_weak_uniformity(const SBox& f, const PointSpace& brick, int delta) {
  check_box(f, brick);
  if (brick.e < 2) throw spec_error("weak uniformity is defined for m_p >= 2");
  if (delta < brick.p) throw spec_error("weak uniformity needs delta >= p");
  UniformityReport rep;
  rep.delta = delta;
  rep.min_image_size = brick.size + 1;
  for (u32 a = 1; a < brick.size; ++a) {
    u32 sz = static_cast<u32>(difference_image(f, brick, a).image.size());
    if (sz < rep.min_image_size) {
      rep.min_image_size = sz;
      rep.witness_a = a;
    }
  }
  // passes iff min > p^{m_p-1}/delta, i.e. min * delta > p^{m_p-1}
  u64 bound = brick.size / static_cast<u32>(brick.p);  // p^{m_p-1}
  rep.passes = static_cast<u64>(rep.min_image_size) * static_cast<u64>(delta) > bound;
  return rep;
}

AntiInvarianceReport check_anti_invariance(const SBox& f, const PointSpace& brick, int r,
                                           const Budgets& budgets) {
  check_box(f, brick);
  if (r < 1 || r >= brick.e)
    throw spec_error("anti-invariance parameter needs 1 <= r < m_p");
  AntiInvarianceReport rep;
  rep.r = r;
  // only subgroups with dim >= m_p - r can violate
  SubgroupEnumerator en(brick.e, brick.p, brick.e - r, brick.e - 1, budgets);
  std::vector<u32> image;
  while (auto u = en.next()) {
    auto members = u->elements(brick);
    image.clear();
    image.reserve(members.size());
    for (u32 x : members) image.push_back(f.table[x]);
    if (is_closed_under_addition(image, brick))
      rep.violations.emplace_back(std::move(*u), echelonize_points(image, brick));
  }
  rep.passes = rep.violations.empty();
  return rep;
}

bool is_coset_of_subgroup(const std::vector<u32>& set_points, const PointSpace& space) {
  if (set_points.empty()) return false;
  // |D| must be a power of p
  u64 sz = set_points.size();
  while (sz % static_cast<u64>(space.p) == 0) sz /= static_cast<u64>(space.p);
  if (sz != 1) return false;
  // D is a coset iff D - d0 is closed under addition for any fixed d0
  u32 d0 = set_points.front();
  std::vector<u32> shifted;
  shifted.reserve(set_points.size());
  for (u32 x : set_points) shifted.push_back(space.sub(x, d0));
  return is_closed_under_addition(shifted, space);
}

CosetConditionReport check_coset_condition(const SBox& f, const PointSpace& brick) {
  check_box(f, brick);
  CosetConditionReport rep;
  for (u32 a = 1; a < brick.size; ++a) {
    auto d = difference_image(f, brick, a);
    if (is_coset_of_subgroup(d.image, brick)) {
      rep.passes = false;
      rep.witness_a = a;
      return rep;
    }
  }
  rep.passes = true;
  return rep;
}

bool min_subgroup_order_bound(const SBox& f, const PointSpace& brick, int r,
                              const SubgroupBasis& w, const std::vector<u32>& shifts) {
  check_box(f, brick);
  bool all_contained = true;
  for (u32 a : shifts) {
    if (a == 0) continue;
    auto d = difference_image(f, brick, a);
    for (u32 y : d.image)
      if (!w.contains_point(y, brick)) {
        all_contained = false;
        break;
      }
    if (!all_contained) break;
  }
  if (!all_contained) return true;
  u64 bound = 1;
  for (int i = 0; i < brick.e - r; ++i) bound *= static_cast<u64>(brick.p);
  return w.order() >= bound;
}

}  // namespace tbg
