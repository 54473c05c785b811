#include "fusionlab/fusion_ring.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

namespace fusionlab {

FusionRing::FusionRing(std::vector<std::string> labels, int unit, std::vector<int> dual,
                       const std::vector<Entry>& entries)
    : labels_(std::move(labels)), unit_(unit), dual_(std::move(dual)) {
  const int n = size();
  if (n == 0) throw FusionRingError("fusion ring needs at least one label");
  if (unit_ < 0 || unit_ >= n) throw FusionRingError("unit label out of range");
  if (static_cast<int>(dual_.size()) != n) throw FusionRingError("dual table has the wrong size");
  for (int x = 0; x < n; ++x)
    if (dual_[x] < 0 || dual_[x] >= n || dual_[dual_[x]] != x) throw FusionRingError("dual is not an involution");
  prod_.assign(static_cast<std::size_t>(n) * n, {});
  for (const auto& [x, y, z, m] : entries) {
    if (x < 0 || y < 0 || z < 0 || x >= n || y >= n || z >= n) throw FusionRingError("structure constant label out of range");
    if (m < 0) throw FusionRingError("structure constants must be nonnegative");
    if (m == 0) continue;
    prod_[x * n + y].emplace_back(z, m);
  }
  for (auto& v : prod_) {
    std::sort(v.begin(), v.end());
    for (std::size_t i = 1; i < v.size(); ++i)
      if (v[i].first == v[i - 1].first) throw FusionRingError("duplicate structure constant entry");
  }
  if (auto why = check_ring_axioms(*this)) throw FusionRingError(*why);
}

std::optional<int> FusionRing::find_label(const std::string& s) const {
  auto it = std::find(labels_.begin(), labels_.end(), s);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<int>(it - labels_.begin());
}

int FusionRing::N(int x, int y, int z) const {
  const auto& v = product(x, y);
  auto it = std::lower_bound(v.begin(), v.end(), std::make_pair(z, 0));
  return it != v.end() && it->first == z ? it->second : 0;
}

std::vector<FusionRing::Entry> FusionRing::entries() const {
  std::vector<Entry> out;
  const int n = size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (const auto& [z, m] : product(x, y)) out.push_back({x, y, z, m});
  return out;
}

std::optional<std::string> check_ring_axioms(const FusionRing& r) {
  const int n = r.size();
  const int e = r.unit();
  for (int x = 0; x < n; ++x) {
    const std::vector<std::pair<int, int>> just_x{{x, 1}};
    if (r.product(e, x) != just_x || r.product(x, e) != just_x) return "unit axiom fails at " + r.label(x);
    for (int y = 0; y < n; ++y)
      if (r.N(x, y, e) != (y == r.dual(x) ? 1 : 0)) return "duality axiom fails at " + r.label(x) + ", " + r.label(y);
  }
  std::vector<long> left(n), right(n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const auto& xy = r.product(x, y);
      for (int z = 0; z < n; ++z) {
        std::fill(left.begin(), left.end(), 0);
        std::fill(right.begin(), right.end(), 0);
        for (const auto& [w, a] : xy)
          for (const auto& [u, b] : r.product(w, z)) left[u] += static_cast<long>(a) * b;
        for (const auto& [w, a] : r.product(y, z))
          for (const auto& [u, b] : r.product(x, w)) right[u] += static_cast<long>(a) * b;
        if (left != right) return "associativity fails at " + r.label(x) + ", " + r.label(y) + ", " + r.label(z);
      }
    }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// FP dimensions

double Surd::value() const { return coeff.get_d() * std::sqrt(static_cast<double>(radicand)); }

std::string Surd::str() const {
  if (radicand == 1) return coeff.get_str();
  return (coeff == 1 ? std::string() : coeff.get_str() + "*") + "sqrt(" + std::to_string(radicand) + ")";
}

namespace {

Surd make_surd(long n) {
  long a = 1, s = 1;
  for (long f = 2; f * f <= n; ++f)
    while (n % (f * f) == 0) {
      n /= f * f;
      a *= f;
    }
  s = n;
  return {mpq_class(a), s};
}

std::optional<Surd> guess_exact(double d) {
  const double r = std::round(d);
  if (r >= 1 && std::abs(d - r) < 1e-6) return Surd{mpq_class(static_cast<long>(r)), 1};
  const double sq = std::round(d * d);
  if (sq >= 1 && std::abs(d * d - sq) < 1e-6 * std::max(1.0, d)) return make_surd(static_cast<long>(sq));
  return std::nullopt;
}

using SurdSum = std::map<long, mpq_class>;

void add_product(SurdSum& acc, const Surd& a, const Surd& b, long mult) {
  const long g = std::gcd(a.radicand, b.radicand);
  const long rad = (a.radicand / g) * (b.radicand / g);
  acc[rad] += a.coeff * b.coeff * g * mult;
}

bool same_sum(SurdSum a, SurdSum b) {
  std::erase_if(a, [](const auto& kv) { return kv.second == 0; });
  std::erase_if(b, [](const auto& kv) { return kv.second == 0; });
  return a == b;
}

}  // namespace

FPDims fp_dims(const FusionRing& r, double tol, int max_iter) {
  const int n = r.size();
  // M[y][z] = Σ_x N[x][y][z] is strictly positive; its Perron vector is the
  // FP dimension vector.
  std::vector<double> m(static_cast<std::size_t>(n) * n, 0.0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (const auto& [z, c] : r.product(x, y)) m[y * n + z] += c;
  std::vector<double> v(n, 1.0), next(n);
  bool converged = false;
  for (int it = 0; it < max_iter && !converged; ++it) {
    for (int y = 0; y < n; ++y) {
      double s = 0;
      for (int z = 0; z < n; ++z) s += m[y * n + z] * v[z];
      next[y] = s;
    }
    const double scale = next[r.unit()];
    double diff = 0;
    for (int y = 0; y < n; ++y) {
      next[y] /= scale;
      diff = std::max(diff, std::abs(next[y] - v[y]));
    }
    v.swap(next);
    converged = diff < tol;
  }
  if (!converged) throw FusionRingError("FP dimension power iteration did not converge");

  FPDims out;
  out.dims = v;
  for (double d : v) out.total += d * d;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      double s = 0;
      for (const auto& [z, c] : r.product(x, y)) s += c * v[z];
      out.max_residual = std::max(out.max_residual, std::abs(v[x] * v[y] - s));
    }

  std::vector<Surd> exact;
  for (double d : v) {
    auto g = guess_exact(d);
    if (!g) return out;
    exact.push_back(*g);
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      SurdSum lhs, rhs;
      add_product(lhs, exact[x], exact[y], 1);
      for (const auto& [z, c] : r.product(x, y)) add_product(rhs, exact[z], Surd{mpq_class(1), 1}, c);
      if (!same_sum(lhs, rhs)) return out;
    }
  out.exact = std::move(exact);
  return out;
}

// ---------------------------------------------------------------------------
// Constructions

FusionRing ty_ring(const GroupPtr& a) {
  if (!a->is_abelian()) throw FusionRingError("Tambara-Yamagami ring needs an abelian group");
  const int n = a->order();
  const int m = n;
  std::vector<std::string> labels = a->labels();
  labels.push_back("m");
  std::vector<int> dual(n + 1);
  for (int x = 0; x < n; ++x) dual[x] = a->inv(x);
  dual[m] = m;
  std::vector<FusionRing::Entry> entries;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) entries.push_back({x, y, a->mul(x, y), 1});
    entries.push_back({x, m, m, 1});
    entries.push_back({m, x, m, 1});
    entries.push_back({m, m, x, 1});
  }
  return FusionRing(std::move(labels), a->identity(), std::move(dual), entries);
}

FusionRing group_ring(const GroupPtr& g) {
  const int n = g->order();
  std::vector<int> dual(n);
  std::vector<FusionRing::Entry> entries;
  for (int x = 0; x < n; ++x) {
    dual[x] = g->inv(x);
    for (int y = 0; y < n; ++y) entries.push_back({x, y, g->mul(x, y), 1});
  }
  return FusionRing(g->labels(), g->identity(), std::move(dual), entries);
}

std::optional<std::string> check_action(const RingAction& act) {
  const FusionRing& r = act.ring;
  const GroupTable& g = *act.group;
  const int n = r.size();
  if (static_cast<int>(act.perm.size()) != g.order()) return "one permutation per group element is required";
  for (int x = 0; x < g.order(); ++x) {
    const auto& p = act.perm[x];
    if (static_cast<int>(p.size()) != n) return "permutation has the wrong length";
    std::vector<int> sorted = p;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < n; ++i)
      if (sorted[i] != i) return "not a permutation of the labels";
    if (p[r.unit()] != r.unit()) return "action does not fix the unit";
    for (int a = 0; a < n; ++a) {
      if (p[r.dual(a)] != r.dual(p[a])) return "action does not commute with duality";
      for (int b = 0; b < n; ++b) {
        const auto& ab = r.product(a, b);
        if (ab.size() != r.product(p[a], p[b]).size()) return "action does not preserve fusion rules";
        for (const auto& [c, k] : ab)
          if (r.N(p[a], p[b], p[c]) != k) return "action does not preserve fusion rules";
      }
    }
  }
  for (int x = 0; x < n; ++x)
    if (act.perm[g.identity()][x] != x) return "identity does not act trivially";
  for (int s = 0; s < g.order(); ++s)
    for (int t = 0; t < g.order(); ++t)
      for (int x = 0; x < n; ++x)
        if (act.perm[g.mul(s, t)][x] != act.perm[s][act.perm[t][x]]) return "permutations do not compose";
  return std::nullopt;
}

FusionRing crossed_product_ring(const RingAction& act) {
  if (auto why = check_action(act)) throw FusionRingError("not a ring action: " + *why);
  const FusionRing& r = act.ring;
  const GroupTable& g = *act.group;
  const int n = r.size(), k = g.order();
  auto idx = [&](int x, int s) { return s * n + x; };
  std::vector<std::string> labels(static_cast<std::size_t>(n) * k);
  std::vector<int> dual(labels.size());
  for (int s = 0; s < k; ++s)
    for (int x = 0; x < n; ++x) {
      labels[idx(x, s)] = "(" + r.label(x) + "," + g.label(s) + ")";
      // (x ⊠ s)* = perm_{s^-1}(x*) ⊠ s^-1
      const int si = g.inv(s);
      dual[idx(x, s)] = idx(act.perm[si][r.dual(x)], si);
    }
  std::vector<FusionRing::Entry> entries;
  for (int s = 0; s < k; ++s)
    for (int t = 0; t < k; ++t)
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          for (const auto& [z, c] : r.product(x, act.perm[s][y])) entries.push_back({idx(x, s), idx(y, t), idx(z, g.mul(s, t)), c});
  return FusionRing(std::move(labels), idx(r.unit(), g.identity()), std::move(dual), entries);
}

std::vector<EquivariantSimple> equivariantization_simples(const RingAction& act) {
  if (auto why = check_action(act)) throw FusionRingError("not a ring action: " + *why);
  const FusionRing& r = act.ring;
  const GroupPtr& g = act.group;
  const int n = r.size();
  const FPDims dims = fp_dims(r);
  std::vector<char> seen(n, 0);
  std::vector<EquivariantSimple> out;
  for (int x = 0; x < n; ++x) {
    if (seen[x]) continue;
    std::vector<int> orbit, stab;
    for (int s = 0; s < g->order(); ++s) {
      const int y = act.perm[s][x];
      if (!seen[y]) {
        seen[y] = 1;
        orbit.push_back(y);
      }
      if (y == x) stab.push_back(s);
    }
    std::sort(orbit.begin(), orbit.end());
    Subgroup st(g, stab);
    if (!st.as_group()->is_abelian())
      throw FusionRingError("equivariantization with a nonabelian stabilizer is not supported");
    std::optional<long> base;
    if (dims.exact && (*dims.exact)[x].radicand == 1 && (*dims.exact)[x].coeff.get_den() == 1)
      base = (*dims.exact)[x].coeff.get_num().get_si();
    for (int i = 0; i < st.order(); ++i) {
      EquivariantSimple e{orbit, 1, static_cast<double>(orbit.size()) * dims.dims[x], std::nullopt};
      if (base) e.integer_dim = static_cast<long>(orbit.size()) * *base;
      out.push_back(std::move(e));
    }
  }
  return out;
}

std::vector<std::pair<long, int>> dimension_profile(const std::vector<EquivariantSimple>& simples) {
  std::map<long, int> counts;
  for (const auto& s : simples) {
    if (!s.integer_dim) throw FusionRingError("dimension profile needs integer dimensions");
    ++counts[*s.integer_dim];
  }
  return {counts.begin(), counts.end()};
}

nlohmann::json to_json(const FusionRing& r) {
  nlohmann::json dual = nlohmann::json::object();
  for (int x = 0; x < r.size(); ++x) dual[r.label(x)] = r.label(r.dual(x));
  nlohmann::json n = nlohmann::json::array();
  for (const auto& e : r.entries()) n.push_back(e);
  return {{"labels", r.labels()}, {"unit", r.label(r.unit())}, {"dual", dual}, {"N", n}};
}

}  // namespace fusionlab
