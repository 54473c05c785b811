#include "fusionlab/group.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <random>
#include <set>
#include <unordered_set>

namespace fusionlab {

namespace {

struct VectorHash {
  std::size_t operator()(const std::vector<int>& v) const {
    std::size_t h = v.size();
    for (int x : v) h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

// Closure of a generating set under multiplication, as a sorted member list.
std::vector<int> closure(const GroupTable& g, std::span<const int> gens) {
  std::vector<char> seen(g.order(), 0);
  std::vector<int> members{g.identity()};
  seen[g.identity()] = 1;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (int s : gens) {
      int y = g.mul(members[i], s);
      if (!seen[y]) {
        seen[y] = 1;
        members.push_back(y);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

}  // namespace

GroupTable::GroupTable(std::vector<std::vector<int>> mult, std::vector<std::string> labels)
    : mult_(std::move(mult)), labels_(std::move(labels)) {
  const int n = order();
  if (n < 1) throw GroupError("group must have at least one element");
  if (static_cast<int>(labels_.size()) != n) throw GroupError("label count does not match group order");
  for (const auto& row : mult_) {
    if (static_cast<int>(row.size()) != n) throw GroupError("multiplication table is not square");
    for (int v : row)
      if (v < 0 || v >= n) throw GroupError("multiplication table entry out of range");
  }
  identity_ = -1;
  for (int e = 0; e < n && identity_ < 0; ++e) {
    bool unit = true;
    for (int x = 0; x < n && unit; ++x) unit = mult_[e][x] == x && mult_[x][e] == x;
    if (unit) identity_ = e;
  }
  if (identity_ < 0) throw GroupError("multiplication table has no two-sided identity");
  inv_.assign(n, -1);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (mult_[x][y] == identity_ && mult_[y][x] == identity_) {
        inv_[x] = y;
        break;
      }
    }
    if (inv_[x] < 0) throw GroupError("element " + labels_[x] + " has no two-sided inverse");
  }
}

int GroupTable::element_order(int x) const {
  int k = 1;
  for (int y = x; y != identity_; y = mul(y, x)) ++k;
  return k;
}

int GroupTable::exponent() const {
  int e = 1;
  for (int x = 0; x < order(); ++x) e = std::lcm(e, element_order(x));
  return e;
}

bool GroupTable::is_abelian() const {
  for (int x = 0; x < order(); ++x)
    for (int y = x + 1; y < order(); ++y)
      if (mul(x, y) != mul(y, x)) return false;
  return true;
}

std::optional<int> GroupTable::find_label(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<int>(it - labels_.begin());
}

std::optional<int> GroupTable::from_parent(int x) const {
  if (!parent_) return x;
  auto it = std::lower_bound(parent_index_.begin(), parent_index_.end(), x);
  if (it == parent_index_.end() || *it != x) return std::nullopt;
  return static_cast<int>(it - parent_index_.begin());
}

bool GroupTable::is_associative(unsigned seed) const {
  const int n = order();
  auto check = [&](int x, int y, int z) { return mul(mul(x, y), z) == mul(x, mul(y, z)); };
  if (n <= 256) {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z)
          if (!check(x, y, z)) return false;
    return true;
  }
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> pick(0, n - 1);
  for (int i = 0; i < 20000; ++i)
    if (!check(pick(rng), pick(rng), pick(rng))) return false;
  return true;
}

bool same_group(const GroupPtr& a, const GroupPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->same_table(*b);
}

// ---------------------------------------------------------------------------

Subgroup::Subgroup(GroupPtr parent, std::vector<int> members) : parent_(std::move(parent)), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  const GroupTable& g = *parent_;
  if (!contains(g.identity())) throw GroupError("subgroup must contain the identity");
  for (int x : members_) {
    if (x < 0 || x >= g.order()) throw GroupError("subgroup member out of range");
    if (!contains(g.inv(x))) throw GroupError("subgroup not closed under inverses");
    for (int y : members_)
      if (!contains(g.mul(x, y))) throw GroupError("subgroup not closed under multiplication");
  }
}

Subgroup Subgroup::generated(GroupPtr parent, std::span<const int> gens) {
  for (int s : gens)
    if (s < 0 || s >= parent->order()) throw GroupError("generator out of range");
  auto members = closure(*parent, gens);
  return Subgroup(std::move(parent), std::move(members));
}

Subgroup Subgroup::whole(GroupPtr parent) {
  std::vector<int> all(parent->order());
  std::iota(all.begin(), all.end(), 0);
  return Subgroup(std::move(parent), std::move(all));
}

Subgroup Subgroup::trivial(GroupPtr parent) {
  int e = parent->identity();
  return Subgroup(std::move(parent), {e});
}

bool Subgroup::contains(int x) const { return std::binary_search(members_.begin(), members_.end(), x); }

GroupPtr Subgroup::as_group() const {
  if (local_) return local_;
  const GroupTable& g = *parent_;
  const int n = order();
  std::vector<std::vector<int>> mult(n, std::vector<int>(n));
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) {
    labels[i] = g.label(members_[i]);
    for (int j = 0; j < n; ++j) {
      int prod = g.mul(members_[i], members_[j]);
      mult[i][j] = static_cast<int>(std::lower_bound(members_.begin(), members_.end(), prod) - members_.begin());
    }
  }
  auto table = std::make_shared<GroupTable>(std::move(mult), std::move(labels));
  table->parent_ = parent_;
  table->parent_index_ = members_;
  local_ = table;
  return local_;
}

// ---------------------------------------------------------------------------

bool GroupMorphism::is_homomorphism() const {
  const int n = source->order();
  if (static_cast<int>(image.size()) != n) return false;
  for (int x : image)
    if (x < 0 || x >= target->order()) return false;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (image[source->mul(x, y)] != target->mul(image[x], image[y])) return false;
  return true;
}

bool GroupMorphism::is_bijective() const {
  if (source->order() != target->order()) return false;
  std::vector<char> hit(target->order(), 0);
  for (int x : image) {
    if (x < 0 || x >= target->order() || hit[x]) return false;
    hit[x] = 1;
  }
  return true;
}

bool GroupMorphism::is_identity() const {
  for (int x = 0; x < static_cast<int>(image.size()); ++x)
    if (image[x] != x) return false;
  return true;
}

GroupMorphism GroupMorphism::compose(const GroupMorphism& after) const {
  GroupMorphism out{source, after.target, std::vector<int>(image.size())};
  for (std::size_t x = 0; x < image.size(); ++x) out.image[x] = after.image[image[x]];
  return out;
}

GroupMorphism GroupMorphism::inverse() const {
  if (!is_bijective()) throw GroupError("morphism is not invertible");
  GroupMorphism out{target, source, std::vector<int>(image.size())};
  for (std::size_t x = 0; x < image.size(); ++x) out.image[image[x]] = static_cast<int>(x);
  return out;
}

// ---------------------------------------------------------------------------

GroupPtr make_cyclic(int n) {
  if (n < 1) throw GroupError("cyclic group order must be positive");
  std::vector<std::vector<int>> mult(n, std::vector<int>(n));
  std::vector<std::string> labels(n);
  for (int a = 0; a < n; ++a) {
    labels[a] = std::to_string(a);
    for (int b = 0; b < n; ++b) mult[a][b] = (a + b) % n;
  }
  return std::make_shared<GroupTable>(std::move(mult), std::move(labels));
}

GroupPtr make_dihedral(int two_p) {
  if (two_p < 2 || two_p % 2 != 0) throw GroupError("dihedral group order must be a positive even integer");
  const int n = two_p / 2;
  // r^k -> k, s r^k -> n + k, with s r s = r^{-1}.
  std::vector<std::vector<int>> mult(two_p, std::vector<int>(two_p));
  std::vector<std::string> labels(two_p);
  for (int x = 0; x < two_p; ++x) {
    labels[x] = (x < n ? "r" : "s") + std::to_string(x % n);
    for (int y = 0; y < two_p; ++y) {
      const int a = x % n, b = y % n;
      const bool fx = x >= n, fy = y >= n;
      // (s^fx r^a)(s^fy r^b) = s^(fx+fy) r^((fy ? -a : a) + b)
      const int k = (((fy ? -a : a) + b) % n + n) % n;
      mult[x][y] = ((fx != fy) ? n : 0) + k;
    }
  }
  return std::make_shared<GroupTable>(std::move(mult), std::move(labels));
}

GroupPtr make_direct_product(const GroupTable& g, const GroupTable& h) {
  const int ng = g.order(), nh = h.order(), n = ng * nh;
  std::vector<std::vector<int>> mult(n, std::vector<int>(n));
  std::vector<std::string> labels(n);
  for (int x = 0; x < n; ++x) {
    labels[x] = "(" + g.label(x / nh) + "," + h.label(x % nh) + ")";
    for (int y = 0; y < n; ++y) mult[x][y] = g.mul(x / nh, y / nh) * nh + h.mul(x % nh, y % nh);
  }
  return std::make_shared<GroupTable>(std::move(mult), std::move(labels));
}

GroupPtr make_semidirect(const GroupPtr& n, const GroupPtr& h, const std::vector<GroupMorphism>& act) {
  if (static_cast<int>(act.size()) != h->order()) throw GroupError("action must give one automorphism per element");
  for (const auto& phi : act)
    if (!same_group(phi.source, n) || !phi.is_automorphism()) throw GroupError("action image is not an automorphism");
  for (int x = 0; x < h->order(); ++x)
    for (int y = 0; y < h->order(); ++y)
      for (int a = 0; a < n->order(); ++a)
        if (act[h->mul(x, y)](a) != act[x](act[y](a))) throw GroupError("action is not a homomorphism");
  const int nn = n->order(), nh = h->order(), total = nn * nh;
  std::vector<std::vector<int>> mult(total, std::vector<int>(total));
  std::vector<std::string> labels(total);
  for (int u = 0; u < total; ++u) {
    const int a = u / nh, x = u % nh;
    labels[u] = "(" + n->label(a) + "," + h->label(x) + ")";
    for (int v = 0; v < total; ++v) {
      const int b = v / nh, y = v % nh;
      mult[u][v] = n->mul(a, act[x](b)) * nh + h->mul(x, y);
    }
  }
  return std::make_shared<GroupTable>(std::move(mult), std::move(labels));
}

// ---------------------------------------------------------------------------

std::vector<Subgroup> subgroups(const GroupPtr& g, int max_order) {
  if (g->order() > max_order)
    throw GroupError("group order " + std::to_string(g->order()) + " exceeds subgroup enumeration cap " +
                     std::to_string(max_order));
  const GroupTable& t = *g;
  std::unordered_set<std::vector<int>, VectorHash> seen;
  std::vector<std::vector<int>> found;
  // Each queued subgroup carries a generating set so joins stay cheap.
  std::queue<std::pair<std::vector<int>, std::vector<int>>> frontier;

  auto add = [&](std::vector<int> members, std::vector<int> gens) {
    if (seen.insert(members).second) {
      found.push_back(members);
      frontier.emplace(std::move(members), std::move(gens));
    }
  };
  // Seed with the cyclic subgroups, then join each found subgroup with one
  // more cyclic generator until nothing new appears.
  std::vector<int> cyclic_gens;
  {
    std::unordered_set<std::vector<int>, VectorHash> cyc;
    for (int x = 0; x < t.order(); ++x) {
      const int gen[] = {x};
      auto members = closure(t, gen);
      if (cyc.insert(members).second) cyclic_gens.push_back(x);
      add(std::move(members), {x});
    }
  }
  while (!frontier.empty()) {
    auto [cur, cur_gens] = std::move(frontier.front());
    frontier.pop();
    std::vector<char> in(t.order(), 0);
    for (int x : cur) in[x] = 1;
    for (int x : cyclic_gens) {
      if (in[x]) continue;
      std::vector<int> gens = cur_gens;
      gens.push_back(x);
      auto members = closure(t, gens);
      add(std::move(members), std::move(gens));
    }
  }
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  std::vector<Subgroup> out;
  out.reserve(found.size());
  for (auto& members : found) out.emplace_back(g, std::move(members));
  return out;
}

bool is_normal(const GroupPtr& g, const Subgroup& h) {
  for (int x = 0; x < g->order(); ++x)
    for (int m : h.members())
      if (!h.contains(g->conj(x, m))) return false;
  return true;
}

bool is_abelian(const Subgroup& h) {
  const GroupTable& g = *h.parent();
  for (int x : h.members())
    for (int y : h.members())
      if (g.mul(x, y) != g.mul(y, x)) return false;
  return true;
}

std::vector<Subgroup> normal_abelian_subgroups(const GroupPtr& g, int max_order) {
  std::vector<Subgroup> out;
  for (auto& h : subgroups(g, max_order))
    if (is_abelian(h) && is_normal(g, h)) out.push_back(std::move(h));
  return out;
}

Subgroup conjugate_subgroup(const GroupPtr& g, const Subgroup& h, int x) {
  if (x < 0 || x >= g->order()) throw GroupError("conjugating element not in group");
  std::vector<int> members;
  members.reserve(h.order());
  for (int m : h.members()) members.push_back(g->conj(x, m));
  return Subgroup(g, std::move(members));
}

Subgroup centralizer(const GroupPtr& g, int x) {
  if (x < 0 || x >= g->order()) throw GroupError("element not in group");
  std::vector<int> members;
  for (int y = 0; y < g->order(); ++y)
    if (g->mul(x, y) == g->mul(y, x)) members.push_back(y);
  return Subgroup(g, std::move(members));
}

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
  std::vector<int> members;
  std::set_intersection(a.members().begin(), a.members().end(), b.members().begin(), b.members().end(),
                        std::back_inserter(members));
  return Subgroup(a.parent(), std::move(members));
}

std::vector<std::vector<int>> conjugacy_classes(const GroupTable& g) {
  std::vector<char> done(g.order(), 0);
  std::vector<std::vector<int>> classes;
  for (int x = 0; x < g.order(); ++x) {
    if (done[x]) continue;
    std::vector<int> cls;
    for (int y = 0; y < g.order(); ++y) {
      int c = g.conj(y, x);
      if (!done[c]) {
        done[c] = 1;
        cls.push_back(c);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

std::vector<std::vector<int>> double_cosets(const GroupPtr& g, const Subgroup& h1, const Subgroup& h2) {
  std::vector<char> done(g->order(), 0);
  std::vector<std::vector<int>> out;
  for (int x = 0; x < g->order(); ++x) {
    if (done[x]) continue;
    std::vector<int> coset;
    for (int a : h1.members()) {
      int ax = g->mul(a, x);
      for (int b : h2.members()) {
        int y = g->mul(ax, b);
        if (!done[y]) {
          done[y] = 1;
          coset.push_back(y);
        }
      }
    }
    std::sort(coset.begin(), coset.end());
    out.push_back(std::move(coset));
  }
  return out;
}

std::vector<int> generating_set(const GroupTable& g) {
  std::vector<int> gens;
  std::vector<int> span = closure(g, gens);
  for (int x = 0; x < g.order() && static_cast<int>(span.size()) < g.order(); ++x) {
    if (std::binary_search(span.begin(), span.end(), x)) continue;
    gens.push_back(x);
    span = closure(g, gens);
  }
  return gens;
}

GroupMorphism inner_automorphism(const GroupPtr& g, int x) {
  GroupMorphism phi{g, g, std::vector<int>(g->order())};
  for (int y = 0; y < g->order(); ++y) phi.image[y] = g->conj(x, y);
  return phi;
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

GroupMorphism rank2_matrix_automorphism(const GroupPtr& a, int p, int m00, int m01, int m10, int m11) {
  GroupMorphism phi{a, a, std::vector<int>(p * p)};
  for (int x1 = 0; x1 < p; ++x1)
    for (int x2 = 0; x2 < p; ++x2) {
      const int y1 = (m00 * x1 + m01 * x2) % p;
      const int y2 = (m10 * x1 + m11 * x2) % p;
      phi.image[x1 * p + x2] = y1 * p + y2;
    }
  return phi;
}

std::vector<GroupMorphism> automorphisms_rank2_elementary(int p) {
  if (!is_prime(p) || p > 13) throw GroupError("automorphisms_rank2_elementary needs a prime p <= 13");
  auto zp = make_cyclic(p);
  GroupPtr a = make_direct_product(*zp, *zp);
  std::vector<GroupMorphism> out;
  for (int m00 = 0; m00 < p; ++m00)
    for (int m01 = 0; m01 < p; ++m01)
      for (int m10 = 0; m10 < p; ++m10)
        for (int m11 = 0; m11 < p; ++m11)
          if (((m00 * m11 - m01 * m10) % p + p) % p != 0)
            out.push_back(rank2_matrix_automorphism(a, p, m00, m01, m10, m11));
  return out;
}

nlohmann::json to_json(const GroupTable& g) {
  return {{"order", g.order()}, {"mult", g.mult()}, {"labels", g.labels()}};
}

nlohmann::json to_json(const Subgroup& h) { return {{"members", h.members()}}; }

}  // namespace fusionlab
