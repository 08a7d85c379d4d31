#include "tbg/algebra.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace tbg {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; static_cast<long long>(d) * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

// Remainder of a mod b in F_p[x]; coefficient vectors low-to-high.
std::vector<int> poly_mod(std::vector<int> a, const std::vector<int>& b, int p) {
  int db = static_cast<int>(b.size()) - 1;
  while (db > 0 && b[db] == 0) --db;
  int lead_inv = 1;
  // b is monic in all call sites; keep the general inverse anyway.
  for (int c = 1; c < p; ++c)
    if (b[db] * c % p == 1) { lead_inv = c; break; }
  for (int i = static_cast<int>(a.size()) - 1; i >= db; --i) {
    if (a[i] == 0) continue;
    int factor = static_cast<int>(static_cast<long long>(a[i]) * lead_inv % p);
    for (int j = 0; j <= db; ++j) {
      long long t = a[i - db + j] - static_cast<long long>(factor) * b[j];
      a[i - db + j] = static_cast<int>(((t % p) + p) % p);
    }
  }
  a.resize(db > 0 ? db : 1);
  return a;
}

bool poly_is_zero(const std::vector<int>& a) {
  return std::all_of(a.begin(), a.end(), [](int c) { return c == 0; });
}

// Trial factor search: no monic divisor of degree in [1, f/2].
bool poly_irreducible(const std::vector<int>& poly, int p, int f) {
  if (f == 1) return true;
  for (int deg = 1; 2 * deg <= f; ++deg) {
    // all monic polynomials of degree deg: p^deg candidates
    u64 count = 1;
    for (int i = 0; i < deg; ++i) count *= static_cast<u64>(p);
    for (u64 idx = 0; idx < count; ++idx) {
      std::vector<int> g(deg + 1);
      u64 t = idx;
      for (int i = 0; i < deg; ++i) {
        g[i] = static_cast<int>(t % p);
        t /= p;
      }
      g[deg] = 1;
      if (poly_is_zero(poly_mod(poly, g, p))) return false;
    }
  }
  return true;
}

u64 checked_pow(int p, int e, u64 limit, const char* what) {
  u64 r = 1;
  for (int i = 0; i < e; ++i) {
    r *= static_cast<u64>(p);
    if (r > limit)
      throw budget_error(std::string(what) + ": p^e exceeds the configured bound of " +
                         std::to_string(limit) + " points");
  }
  return r;
}

}  // namespace

FieldSpec::FieldSpec(int p_, std::vector<int> poly_) : p(p_), poly(std::move(poly_)) {
  if (!is_prime(p)) throw spec_error("field characteristic must be prime, got " + std::to_string(p));
  if (poly.size() < 2) throw spec_error("reduction polynomial must have degree >= 1");
  f = static_cast<int>(poly.size()) - 1;
  if (f > 8) throw spec_error("extension degree > 8 not supported");
  for (int& c : poly) {
    c %= p;
    if (c < 0) c += p;
  }
  if (poly[f] != 1) throw spec_error("reduction polynomial must be monic");
  u64 qq = 1;
  for (int i = 0; i < f; ++i) {
    qq *= static_cast<u64>(p);
    if (qq > (u64(1) << 26)) throw spec_error("field too large (p^f > 2^26)");
  }
  q = static_cast<int>(qq);
  if (!poly_irreducible(poly, p, f))
    throw spec_error("reduction polynomial is reducible over F_" + std::to_string(p));
}

FieldSpec FieldSpec::parse(const std::string& text) {
  auto caret = text.find('^');
  if (caret == std::string::npos) {
    int p = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), p);
    if (ec != std::errc() || ptr != text.data() + text.size())
      throw spec_error("bad field spec '" + text + "'");
    return FieldSpec(p, {0, 1});
  }
  auto slash = text.find('/', caret);
  int p = 0, f = 0;
  if (std::from_chars(text.data(), text.data() + caret, p).ec != std::errc())
    throw spec_error("bad field spec '" + text + "'");
  const char* fend = text.data() + (slash == std::string::npos ? text.size() : slash);
  if (std::from_chars(text.data() + caret + 1, fend, f).ec != std::errc())
    throw spec_error("bad field spec '" + text + "'");
  std::vector<int> poly;
  if (slash == std::string::npos) {
    if (f != 1) throw spec_error("field spec '" + text + "' needs a reduction polynomial");
    poly = {0, 1};
  } else {
    std::stringstream ss(text.substr(slash + 1));
    std::string item;
    while (std::getline(ss, item, ',')) {
      int c = 0;
      auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), c);
      if (ec != std::errc() || ptr != item.data() + item.size())
        throw spec_error("bad polynomial coefficient '" + item + "'");
      poly.push_back(c);
    }
  }
  FieldSpec spec(p, std::move(poly));
  if (spec.f != f)
    throw spec_error("field spec '" + text + "': polynomial degree does not match " +
                     std::to_string(f));
  return spec;
}

std::string FieldSpec::to_text() const {
  std::string s = std::to_string(p) + "^" + std::to_string(f) + "/";
  for (int i = 0; i <= f; ++i) {
    if (i) s += ",";
    s += std::to_string(poly[i]);
  }
  return s;
}

int FieldSpec::add(int a, int b) const {
  if (f == 1) return (a + b) % p;
  int r = 0, mult = 1;
  for (int i = 0; i < f; ++i) {
    r += (a % p + b % p) % p * mult;
    a /= p;
    b /= p;
    mult *= p;
  }
  return r;
}

int FieldSpec::sub(int a, int b) const { return add(a, neg(b)); }

int FieldSpec::neg(int a) const {
  if (f == 1) return (p - a) % p;
  int r = 0, mult = 1;
  for (int i = 0; i < f; ++i) {
    r += (p - a % p) % p * mult;
    a /= p;
    mult *= p;
  }
  return r;
}

int FieldSpec::mul(int a, int b) const {
  if (f == 1) return static_cast<int>(static_cast<long long>(a) * b % p);
  int ac[9], bc[9];
  long long prod[17] = {0};
  for (int i = 0; i < f; ++i) {
    ac[i] = a % p;
    a /= p;
    bc[i] = b % p;
    b /= p;
  }
  for (int i = 0; i < f; ++i) {
    if (!ac[i]) continue;
    for (int j = 0; j < f; ++j) prod[i + j] += static_cast<long long>(ac[i]) * bc[j];
  }
  // reduce by the monic pi: x^f = -(poly[0] + ... + poly[f-1] x^{f-1})
  for (int deg = 2 * f - 2; deg >= f; --deg) {
    long long c = prod[deg] % p;
    if (!c) continue;
    for (int j = 0; j < f; ++j) {
      prod[deg - f + j] -= c * poly[j];
    }
    prod[deg] = 0;
  }
  int r = 0, mult = 1;
  for (int i = 0; i < f; ++i) {
    int c = static_cast<int>(((prod[i] % p) + p) % p);
    r += c * mult;
    mult *= p;
  }
  return r;
}

int FieldSpec::pow(int a, u64 k) const {
  int r = 1;
  while (k) {
    if (k & 1) r = mul(r, a);
    a = mul(a, a);
    k >>= 1;
  }
  return r;
}

int FieldSpec::inv(int a) const {
  if (a == 0) throw spec_error("inverse of zero field element");
  return pow(a, static_cast<u64>(q) - 2);
}

std::vector<int> FieldSpec::coeffs(int a) const {
  std::vector<int> c(f);
  for (int i = 0; i < f; ++i) {
    c[i] = a % p;
    a /= p;
  }
  return c;
}

int FieldSpec::from_coeffs(std::span<const int> c) const {
  if (static_cast<int>(c.size()) != f) throw spec_error("coefficient count does not match field degree");
  int r = 0, mult = 1;
  for (int i = 0; i < f; ++i) {
    int x = c[i] % p;
    if (x < 0) x += p;
    r += x * mult;
    mult *= p;
  }
  return r;
}

FieldElement fe_from_index(const FieldSpec& k, int v) { return FieldElement{k.coeffs(v)}; }
int fe_index(const FieldSpec& k, const FieldElement& a) { return k.from_coeffs(a.coeffs); }
FieldElement ff_add(const FieldSpec& k, const FieldElement& a, const FieldElement& b) {
  return fe_from_index(k, k.add(fe_index(k, a), fe_index(k, b)));
}
FieldElement ff_mul(const FieldSpec& k, const FieldElement& a, const FieldElement& b) {
  return fe_from_index(k, k.mul(fe_index(k, a), fe_index(k, b)));
}

PointSpace::PointSpace(int p_, int e_, u64 max_points) : p(p_), e(e_) {
  if (!is_prime(p)) throw spec_error("point space characteristic must be prime");
  if (e < 1) throw spec_error("point space dimension must be >= 1");
  size = static_cast<u32>(checked_pow(p, e, max_points, "point space"));
}

u32 PointSpace::add(u32 a, u32 b) const {
  if (p == 2) return a ^ b;
  u32 r = 0, mult = 1;
  for (int i = 0; i < e; ++i) {
    r += (a + b) % static_cast<u32>(p) % static_cast<u32>(p) * mult;
    a /= static_cast<u32>(p);
    b /= static_cast<u32>(p);
    mult *= static_cast<u32>(p);
  }
  return r;
}

u32 PointSpace::neg(u32 a) const {
  if (p == 2) return a;
  u32 r = 0, mult = 1;
  for (int i = 0; i < e; ++i) {
    r += (static_cast<u32>(p) - a % static_cast<u32>(p)) % static_cast<u32>(p) * mult;
    a /= static_cast<u32>(p);
    mult *= static_cast<u32>(p);
  }
  return r;
}

u32 PointSpace::sub(u32 a, u32 b) const { return p == 2 ? (a ^ b) : add(a, neg(b)); }

u32 PointSpace::scale(u32 a, int c) const {
  u32 r = 0, mult = 1;
  for (int i = 0; i < e; ++i) {
    r += (a % static_cast<u32>(p)) * static_cast<u32>(c) % static_cast<u32>(p) * mult;
    a /= static_cast<u32>(p);
    mult *= static_cast<u32>(p);
  }
  return r;
}

u32 PointSpace::basis_point(int t) const {
  u32 r = 1;
  for (int i = 0; i < t; ++i) r *= static_cast<u32>(p);
  return r;
}

std::vector<int> PointSpace::digits(u32 a) const {
  std::vector<int> d(e);
  for (int i = 0; i < e; ++i) {
    d[i] = static_cast<int>(a % static_cast<u32>(p));
    a /= static_cast<u32>(p);
  }
  return d;
}

u32 PointSpace::from_digits(std::span<const int> d) const {
  if (static_cast<int>(d.size()) != e) throw spec_error("digit count does not match dimension");
  u32 r = 0, mult = 1;
  for (int i = 0; i < e; ++i) {
    int x = d[i] % p;
    if (x < 0) x += p;
    r += static_cast<u32>(x) * mult;
    mult *= static_cast<u32>(p);
  }
  return r;
}

VSpace::VSpace(FieldSpec field_, int m_, int n_, u64 max_points)
    : field(std::move(field_)), m(m_), n(n_) {
  if (m < 2) throw spec_error("brick dimension m must be > 1");
  if (n < 2) throw spec_error("brick count n must be > 1");
  d = m * n;
  e = d * field.f;
  m_p = m * field.f;
  checked_pow(field.p, e, max_points, "vector space");
  points = PointSpace(field.p, e, max_points);
  brick_space = PointSpace(field.p, m_p, max_points);
}

u32 VSpace::vector_to_point(const Vector& v) const {
  if (static_cast<int>(v.entries.size()) != d) throw spec_error("vector entry count does not match d");
  u32 r = 0, mult = 1;
  for (int j = 0; j < d; ++j) {
    int x = v.entries[j];
    if (x < 0 || x >= field.q) throw spec_error("vector entry out of field range");
    r += static_cast<u32>(x) * mult;
    mult *= static_cast<u32>(field.q);
  }
  return r;
}

Vector VSpace::point_to_vector(u32 a) const {
  Vector v;
  v.entries.resize(d);
  for (int j = 0; j < d; ++j) {
    v.entries[j] = static_cast<int>(a % static_cast<u32>(field.q));
    a /= static_cast<u32>(field.q);
  }
  return v;
}

u32 VSpace::brick_of(u32 a, int i) const {
  for (int t = 0; t < i; ++t) a /= brick_space.size;
  return a % brick_space.size;
}

u32 VSpace::with_brick(u32 a, int i, u32 b) const {
  u32 mult = 1;
  for (int t = 0; t < i; ++t) mult *= brick_space.size;
  u32 old = a / mult % brick_space.size;
  return a + (b - old) * mult;
}

Vector VSpace::brick_entries(const Vector& v, int i) const {
  Vector r;
  r.entries.assign(v.entries.begin() + i * m, v.entries.begin() + (i + 1) * m);
  return r;
}

u64 SubgroupBasis::order() const {
  u64 r = 1;
  for (int i = 0; i < dim(); ++i) r *= static_cast<u64>(p);
  return r;
}

bool SubgroupBasis::contains(std::span<const int> v) const {
  if (static_cast<int>(v.size()) != ambient_e) throw spec_error("membership test: dimension mismatch");
  std::vector<int> w(v.begin(), v.end());
  for (const auto& row : rows) {
    int pc = 0;
    while (pc < ambient_e && row[pc] == 0) ++pc;
    int c = w[pc] % p;
    if (c == 0) continue;
    for (int j = pc; j < ambient_e; ++j) w[j] = ((w[j] - c * row[j]) % p + p) % p;
  }
  return std::all_of(w.begin(), w.end(), [](int x) { return x == 0; });
}

bool SubgroupBasis::contains_point(u32 a, const PointSpace& space) const {
  auto d = space.digits(a);
  return contains(d);
}

std::vector<u32> SubgroupBasis::elements(const PointSpace& space) const {
  std::vector<u32> row_pts(rows.size());
  for (size_t i = 0; i < rows.size(); ++i) row_pts[i] = space.from_digits(rows[i]);
  std::vector<u32> out;
  out.reserve(static_cast<size_t>(order()));
  std::vector<int> combo(rows.size(), 0);
  while (true) {
    u32 pt = 0;
    for (size_t i = 0; i < rows.size(); ++i)
      if (combo[i]) pt = space.add(pt, space.scale(row_pts[i], combo[i]));
    out.push_back(pt);
    size_t k = 0;
    while (k < combo.size() && ++combo[k] == p) combo[k++] = 0;
    if (k == combo.size()) break;
  }
  return out;
}

SubgroupBasis echelonize(const std::vector<std::vector<int>>& vectors, int e, int p) {
  for (const auto& v : vectors)
    if (static_cast<int>(v.size()) != e) throw spec_error("echelonize: vector length does not match dimension");
  std::vector<std::vector<int>> rows;
  for (auto v : vectors) {
    for (int& x : v) x = ((x % p) + p) % p;
    // reduce against existing rows
    for (const auto& row : rows) {
      int pc = 0;
      while (pc < e && row[pc] == 0) ++pc;
      int c = v[pc];
      if (c == 0) continue;
      for (int j = pc; j < e; ++j) v[j] = ((v[j] - c * row[j]) % p + p) % p;
    }
    int pc = 0;
    while (pc < e && v[pc] == 0) ++pc;
    if (pc == e) continue;
    // normalize pivot to 1
    int pinv = 1;
    for (int c = 1; c < p; ++c)
      if (v[pc] * c % p == 1) { pinv = c; break; }
    for (int j = pc; j < e; ++j) v[j] = v[j] * pinv % p;
    // back-eliminate this pivot from existing rows
    for (auto& row : rows) {
      int c = row[pc];
      if (c == 0) continue;
      for (int j = pc; j < e; ++j) row[j] = ((row[j] - c * v[j]) % p + p) % p;
    }
    rows.push_back(std::move(v));
  }
  std::sort(rows.begin(), rows.end(), [e](const auto& a, const auto& b) {
    int pa = 0, pb = 0;
    while (pa < e && a[pa] == 0) ++pa;
    while (pb < e && b[pb] == 0) ++pb;
    return pa < pb;
  });
  SubgroupBasis basis;
  basis.p = p;
  basis.ambient_e = e;
  basis.rows = std::move(rows);
  return basis;
}

SubgroupBasis echelonize_points(const std::vector<u32>& pts, const PointSpace& space) {
  std::vector<std::vector<int>> vecs;
  vecs.reserve(pts.size());
  for (u32 a : pts) vecs.push_back(space.digits(a));
  return echelonize(vecs, space.e, space.p);
}

bool is_closed_under_addition(const std::vector<u32>& set_points, const PointSpace& space) {
  if (set_points.empty()) throw spec_error("closure test on empty set");
  std::vector<bool> member(space.size, false);
  for (u32 a : set_points) member[a] = true;
  for (u32 a : set_points)
    for (u32 b : set_points)
      if (!member[space.add(a, b)]) return false;
  return true;
}

u64 SubgroupEnumerator::count(int e, int p, int min_dim, int max_dim) {
  u64 total = 0;
  for (int k = min_dim; k <= max_dim; ++k) {
    if (k == 0) {
      ++total;
      continue;
    }
    // sum over pivot-column sets of p^{#free entries}
    std::vector<int> pivots(k);
    for (int i = 0; i < k; ++i) pivots[i] = i;
    while (true) {
      int free_cnt = 0;
      for (int i = 0; i < k; ++i) {
        for (int c = pivots[i] + 1; c < e; ++c) {
          bool is_pivot = std::binary_search(pivots.begin(), pivots.end(), c);
          if (!is_pivot) ++free_cnt;
        }
      }
      u64 cells = 1;
      for (int i = 0; i < free_cnt; ++i) {
        u64 next = cells * static_cast<u64>(p);
        if (next / static_cast<u64>(p) != cells) return UINT64_MAX;
        cells = next;
      }
      if (total > UINT64_MAX - cells) return UINT64_MAX;
      total += cells;
      // next combination
      int i = k - 1;
      while (i >= 0 && pivots[i] == e - k + i) --i;
      if (i < 0) break;
      ++pivots[i];
      for (int j = i + 1; j < k; ++j) pivots[j] = pivots[j - 1] + 1;
    }
  }
  return total;
}

SubgroupEnumerator::SubgroupEnumerator(int e, int p, int min_dim, int max_dim,
                                       const Budgets& budgets)
    : e_(e), p_(p), max_dim_(max_dim), dim_(min_dim) {
  if (min_dim < 0 || min_dim > max_dim || max_dim > e)
    throw spec_error("subgroup enumeration: need 0 <= min_dim <= max_dim <= e");
  checked_pow(p, e, budgets.enum_max_points, "subgroup enumeration");
  total_count_ = count(e, p, min_dim, max_dim);
  if (total_count_ > budgets.witness_max_subgroups) {
    throw budget_error("subgroup enumeration too large: " +
                       (total_count_ == UINT64_MAX ? std::string(">= 2^64")
                                                   : std::to_string(total_count_)) +
                       " subgroups exceed the bound of " +
                       std::to_string(budgets.witness_max_subgroups));
  }
  while (dim_ <= max_dim_ && !start_dim(dim_)) ++dim_;
  if (dim_ > max_dim_) done_ = true;
}

bool SubgroupEnumerator::start_dim(int k) {
  pivots_.resize(k);
  for (int i = 0; i < k; ++i) pivots_[i] = i;
  if (k > e_) return false;
  reset_free();
  return true;
}

void SubgroupEnumerator::reset_free() {
  free_pos_.clear();
  for (size_t i = 0; i < pivots_.size(); ++i)
    for (int c = pivots_[i] + 1; c < e_; ++c)
      if (!std::binary_search(pivots_.begin(), pivots_.end(), c))
        free_pos_.emplace_back(static_cast<int>(i), c);
  free_val_.assign(free_pos_.size(), 0);
}

bool SubgroupEnumerator::advance_pivots() {
  int k = static_cast<int>(pivots_.size());
  int i = k - 1;
  while (i >= 0 && pivots_[i] == e_ - k + i) --i;
  if (i < 0) return false;
  ++pivots_[i];
  for (int j = i + 1; j < k; ++j) pivots_[j] = pivots_[j - 1] + 1;
  reset_free();
  return true;
}

SubgroupBasis SubgroupEnumerator::materialize() const {
  SubgroupBasis basis;
  basis.p = p_;
  basis.ambient_e = e_;
  basis.rows.assign(pivots_.size(), std::vector<int>(e_, 0));
  for (size_t i = 0; i < pivots_.size(); ++i) basis.rows[i][pivots_[i]] = 1;
  for (size_t t = 0; t < free_pos_.size(); ++t)
    basis.rows[free_pos_[t].first][free_pos_[t].second] = free_val_[t];
  return basis;
}

std::optional<SubgroupBasis> SubgroupEnumerator::next() {
  if (done_) return std::nullopt;
  SubgroupBasis out = materialize();
  // advance: free counter, then pivots, then dimension
  size_t t = 0;
  while (t < free_val_.size() && ++free_val_[t] == p_) free_val_[t++] = 0;
  if (t == free_val_.size()) {
    if (!advance_pivots()) {
      ++dim_;
      while (dim_ <= max_dim_ && !start_dim(dim_)) ++dim_;
      if (dim_ > max_dim_) done_ = true;
    }
  }
  return out;
}

std::vector<SubgroupBasis> enumerate_subgroups(int e, int p, int min_dim, int max_dim,
                                               const Budgets& budgets) {
  SubgroupEnumerator en(e, p, min_dim, max_dim, budgets);
  std::vector<SubgroupBasis> out;
  while (auto s = en.next()) out.push_back(std::move(*s));
  return out;
}

}  // namespace tbg
