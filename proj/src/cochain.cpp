#include "fusionlab/cochain.hpp"

#include <algorithm>
#include <numeric>

#include "fusionlab/zmod.hpp"

namespace fusionlab {

// ---------------------------------------------------------------------------
// UnitRoot

UnitRoot::UnitRoot(mpq_class q) : q_(std::move(q)) {
  q_.canonicalize();
  wrap();
}

void UnitRoot::wrap() {
  if (q_ >= 0 && q_ < 1) return;
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  q_ -= fl;
}

UnitRoot& UnitRoot::operator+=(const UnitRoot& o) {
  q_ += o.q_;
  wrap();
  return *this;
}

UnitRoot& UnitRoot::operator-=(const UnitRoot& o) {
  q_ -= o.q_;
  wrap();
  return *this;
}

std::string UnitRoot::str() const { return q_.get_num().get_str() + "/" + q_.get_den().get_str(); }

UnitRoot UnitRoot::parse(const std::string& s) {
  mpq_class q;
  if (q.set_str(s, 10) != 0 || q.get_den() == 0) throw CochainError("malformed root-of-unity exponent '" + s + "'");
  return UnitRoot(q);
}

// ---------------------------------------------------------------------------
// Cochain

namespace {

std::size_t power(std::size_t n, int k) {
  std::size_t r = 1;
  for (int i = 0; i < k; ++i) r *= n;
  return r;
}

void require_arity(int arity) {
  if (arity < 1 || arity > 3) throw CochainError("cochain arity must be 1, 2 or 3");
}

void require_abelian(const GroupTable& g, const char* what) {
  if (!g.is_abelian()) throw CochainError(std::string(what) + " needs an abelian group");
}

}  // namespace

Cochain::Cochain(GroupPtr group, int arity, std::vector<UnitRoot> values)
    : group_(std::move(group)), arity_(arity), n_(group_->order()), values_(std::move(values)) {
  require_arity(arity_);
  if (values_.size() != power(n_, arity_)) throw CochainError("cochain value table has the wrong size");
  normalize();
}

void Cochain::normalize() {
  const int e = group_->identity();
  const int n = static_cast<int>(n_);
  switch (arity_) {
    case 1:
      values_[e] = UnitRoot();
      break;
    case 2:
      for (int x = 0; x < n; ++x) {
        values_[static_cast<std::size_t>(e) * n_ + x] = UnitRoot();
        values_[static_cast<std::size_t>(x) * n_ + e] = UnitRoot();
      }
      break;
    case 3:
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
          values_[(static_cast<std::size_t>(e) * n_ + x) * n_ + y] = UnitRoot();
          values_[(static_cast<std::size_t>(x) * n_ + e) * n_ + y] = UnitRoot();
          values_[(static_cast<std::size_t>(x) * n_ + y) * n_ + e] = UnitRoot();
        }
      break;
  }
}

Cochain Cochain::trivial(GroupPtr group, int arity) {
  require_arity(arity);
  const std::size_t size = power(group->order(), arity);
  return Cochain(std::move(group), arity, std::vector<UnitRoot>(size));
}

Cochain Cochain::from_values(GroupPtr group, int arity, std::vector<UnitRoot> values) {
  return Cochain(std::move(group), arity, std::move(values));
}

Cochain Cochain::from_function(GroupPtr group, Fn1 f) {
  const int n = group->order();
  std::vector<UnitRoot> v(n);
  for (int x = 0; x < n; ++x) v[x] = f(x);
  return Cochain(std::move(group), 1, std::move(v));
}

Cochain Cochain::from_function(GroupPtr group, Fn2 f) {
  const int n = group->order();
  std::vector<UnitRoot> v;
  v.reserve(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) v.push_back(f(x, y));
  return Cochain(std::move(group), 2, std::move(v));
}

Cochain Cochain::from_function(GroupPtr group, Fn3 f) {
  const int n = group->order();
  std::vector<UnitRoot> v;
  v.reserve(power(n, 3));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) v.push_back(f(x, y, z));
  return Cochain(std::move(group), 3, std::move(v));
}

bool Cochain::is_trivial() const {
  return std::all_of(values_.begin(), values_.end(), [](const UnitRoot& u) { return u.is_one(); });
}

unsigned long Cochain::level() const {
  unsigned long l = 1;
  for (const auto& u : values_) l = std::lcm(l, u.order());
  return l;
}

Cochain Cochain::operator+(const Cochain& o) const {
  if (!same_group(group_, o.group_) || arity_ != o.arity_) throw CochainError("cochain sum needs matching group and arity");
  std::vector<UnitRoot> v(values_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = values_[i] + o.values_[i];
  return Cochain(group_, arity_, std::move(v));
}

Cochain Cochain::operator-() const {
  std::vector<UnitRoot> v(values_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = -values_[i];
  return Cochain(group_, arity_, std::move(v));
}

Cochain Cochain::operator-(const Cochain& o) const { return *this + (-o); }

bool Cochain::operator==(const Cochain& o) const {
  return arity_ == o.arity_ && same_group(group_, o.group_) && values_ == o.values_;
}

Cochain Cochain::pullback(const GroupMorphism& phi) const {
  if (!same_group(phi.source, group_) || !same_group(phi.target, group_))
    throw CochainError("pullback needs an endomorphism of the cochain's group");
  switch (arity_) {
    case 1:
      return from_function(group_, Fn1([&](int x) { return (*this)(phi(x)); }));
    case 2:
      return from_function(group_, Fn2([&](int x, int y) { return (*this)(phi(x), phi(y)); }));
    default:
      return from_function(group_, Fn3([&](int x, int y, int z) { return (*this)(phi(x), phi(y), phi(z)); }));
  }
}

// ---------------------------------------------------------------------------
// BilinearForm

BilinearForm::BilinearForm(GroupPtr group, std::vector<UnitRoot> values)
    : group_(std::move(group)), n_(group_->order()), values_(std::move(values)) {
  if (values_.size() != n_ * n_) throw CochainError("bilinear form table has the wrong size");
}

BilinearForm BilinearForm::from_function(GroupPtr group, const std::function<UnitRoot(int, int)>& f) {
  const int n = group->order();
  std::vector<UnitRoot> v;
  v.reserve(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) v.push_back(f(x, y));
  return BilinearForm(std::move(group), std::move(v));
}

bool BilinearForm::is_bimultiplicative() const {
  const GroupTable& g = *group_;
  const int n = g.order();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        if ((*this)(g.mul(x, y), z) != (*this)(x, z) + (*this)(y, z)) return false;
        if ((*this)(x, g.mul(y, z)) != (*this)(x, y) + (*this)(x, z)) return false;
      }
  return true;
}

bool BilinearForm::is_symmetric() const {
  const int n = group_->order();
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      if ((*this)(x, y) != (*this)(y, x)) return false;
  return true;
}

bool BilinearForm::is_alternating() const {
  for (int x = 0; x < group_->order(); ++x)
    if (!(*this)(x, x).is_one()) return false;
  return true;
}

std::vector<int> BilinearForm::radical() const {
  std::vector<int> out;
  const int n = group_->order();
  for (int a = 0; a < n; ++a) {
    bool in = true;
    for (int x = 0; x < n && in; ++x) in = (*this)(a, x).is_one();
    if (in) out.push_back(a);
  }
  return out;
}

bool BilinearForm::preserved_by(const GroupMorphism& phi) const {
  const int n = group_->order();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if ((*this)(phi(x), phi(y)) != (*this)(x, y)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Coboundary and cocycle tests

Cochain coboundary(const Cochain& c) {
  const GroupTable& g = *c.group();
  switch (c.arity()) {
    case 1:
      return Cochain::from_function(c.group(), Cochain::Fn2([&](int x, int y) { return c(y) - c(g.mul(x, y)) + c(x); }));
    case 2:
      return Cochain::from_function(c.group(), Cochain::Fn3([&](int x, int y, int z) {
        return c(y, z) - c(g.mul(x, y), z) + c(x, g.mul(y, z)) - c(x, y);
      }));
    default:
      throw CochainError("coboundary of a 3-cochain is not supported");
  }
}

namespace {

// Values scaled by the level, as integers in [0, level).
std::vector<std::int64_t> residues(const Cochain& c, std::int64_t level) {
  std::vector<std::int64_t> out;
  out.reserve(c.values().size());
  for (const auto& v : c.values()) {
    const mpq_class scaled = v.exponent() * level;
    out.push_back(scaled.get_num().get_si());
  }
  return out;
}

}  // namespace

bool is_cocycle(const Cochain& c) {
  const GroupTable& g = *c.group();
  const int n = g.order();
  const unsigned long lv = c.level();
  if (lv > (1UL << 60)) throw CochainError("cochain level too large");
  const auto level = static_cast<std::int64_t>(lv);
  const auto r = residues(c, level);
  const std::size_t sn = n;
  auto same = [&](std::int64_t a, std::int64_t b) { return (a - b) % level == 0; };
  switch (c.arity()) {
    case 1:
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          if (!same(r[g.mul(x, y)], r[x] + r[y])) return false;
      return true;
    case 2:
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
          const int xy = g.mul(x, y);
          for (int z = 0; z < n; ++z)
            if (!same(r[y * sn + z] + r[x * sn + g.mul(y, z)], r[xy * sn + z] + r[x * sn + y])) return false;
        }
      return true;
    default:
      auto at = [&](std::size_t x, std::size_t y, std::size_t z) { return r[(x * sn + y) * sn + z]; };
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
          const int xy = g.mul(x, y);
          for (int z = 0; z < n; ++z) {
            const int yz = g.mul(y, z);
            for (int w = 0; w < n; ++w) {
              if (!same(at(y, z, w) + at(x, yz, w) + at(x, y, z), at(xy, z, w) + at(x, y, g.mul(z, w)))) return false;
            }
          }
        }
      return true;
  }
}

std::optional<Cochain> coboundary_preimage(const Cochain& c) {
  if (c.arity() != 2 && c.arity() != 3) throw CochainError("coboundary_preimage takes a 2- or 3-cochain");
  const GroupPtr& grp = c.group();
  const GroupTable& g = *grp;
  const int n = g.order();
  const int arity = c.arity() - 1;
  if (c.is_trivial()) return Cochain::trivial(grp, arity);

  // Some preimage takes values of order dividing level * exponent (degree 1)
  // or level * |G| (degree 2), so the system is solved modulo that number.
  const unsigned long bound = static_cast<unsigned long>(arity == 1 ? g.exponent() : n);
  if (c.level() > (1UL << 40) || bound > (1UL << 20)) throw CochainError("cochain level too large");
  const std::int64_t modulus = static_cast<std::int64_t>(c.level() * bound);
  const int e = g.identity();
  std::vector<int> nonid;
  for (int x = 0; x < n; ++x)
    if (x != e) nonid.push_back(x);
  const int m = static_cast<int>(nonid.size());
  std::vector<int> pos(n, -1);
  for (int i = 0; i < m; ++i) pos[nonid[i]] = i;

  std::vector<std::vector<std::int64_t>> a;
  std::vector<std::int64_t> b;
  auto rhs = [&](const UnitRoot& u) {
    const mpq_class scaled = u.exponent() * modulus;
    return scaled.get_num().get_si();
  };
  if (arity == 1) {
    // nu(y) - nu(xy) + nu(x) = c(x, y)
    for (int x : nonid)
      for (int y : nonid) {
        std::vector<std::int64_t> row(m, 0);
        row[pos[y]] += 1;
        row[pos[x]] += 1;
        const int xy = g.mul(x, y);
        if (xy != e) row[pos[xy]] -= 1;
        a.push_back(std::move(row));
        b.push_back(rhs(c(x, y)));
      }
  } else {
    // nu(y,z) - nu(xy,z) + nu(x,yz) - nu(x,y) = c(x, y, z)
    auto col = [&](int x, int y) { return pos[x] * m + pos[y]; };
    for (int x : nonid)
      for (int y : nonid)
        for (int z : nonid) {
          std::vector<std::int64_t> row(static_cast<std::size_t>(m) * m, 0);
          const int xy = g.mul(x, y), yz = g.mul(y, z);
          row[col(y, z)] += 1;
          if (xy != e) row[col(xy, z)] -= 1;
          if (yz != e) row[col(x, yz)] += 1;
          row[col(x, y)] -= 1;
          a.push_back(std::move(row));
          b.push_back(rhs(c(x, y, z)));
        }
  }
  auto sol = solve_mod(std::move(a), std::move(b), modulus);
  if (!sol) return std::nullopt;
  std::vector<UnitRoot> vals(arity == 1 ? n : static_cast<std::size_t>(n) * n);
  if (arity == 1) {
    for (int x : nonid) vals[x] = UnitRoot(mpq_class((*sol)[pos[x]], modulus));
  } else {
    for (int x : nonid)
      for (int y : nonid)
        vals[static_cast<std::size_t>(x) * n + y] = UnitRoot(mpq_class((*sol)[pos[x] * m + pos[y]], modulus));
  }
  Cochain nu = Cochain::from_values(grp, arity, std::move(vals));
  if (!(coboundary(nu) == c)) throw CochainError("internal error: coboundary preimage failed verification");
  return nu;
}

std::optional<Cochain> cohomologous(const Cochain& c1, const Cochain& c2) {
  if (c1.arity() != 2 || c2.arity() != 2) throw CochainError("cohomologous compares 2-cocycles");
  if (!same_group(c1.group(), c2.group())) throw CochainError("cohomologous needs cochains on the same group");
  return coboundary_preimage(c1 - c2);
}

// ---------------------------------------------------------------------------
// Restriction and conjugation

Subgroup embedded_subgroup(const Cochain& c, const GroupPtr& ambient) {
  const GroupPtr& g = c.group();
  if (g->parent() && same_group(g->parent(), ambient)) {
    auto idx = g->parent_indices();
    return Subgroup(ambient, std::vector<int>(idx.begin(), idx.end()));
  }
  if (same_group(g, ambient)) return Subgroup::whole(ambient);
  throw CochainError("cochain group is not a subgroup of the given ambient group");
}

Cochain restrict(const Cochain& c, const Subgroup& h) {
  if (!same_group(c.group(), h.parent())) throw CochainError("restriction needs a subgroup of the cochain's group");
  GroupPtr local = h.as_group();
  const auto& m = h.members();
  switch (c.arity()) {
    case 1:
      return Cochain::from_function(local, Cochain::Fn1([&](int x) { return c(m[x]); }));
    case 2:
      return Cochain::from_function(local, Cochain::Fn2([&](int x, int y) { return c(m[x], m[y]); }));
    default:
      return Cochain::from_function(local, Cochain::Fn3([&](int x, int y, int z) { return c(m[x], m[y], m[z]); }));
  }
}

Cochain restrict_to(const Cochain& c, const Subgroup& h) {
  const GroupPtr& g = c.group();
  if (same_group(g, h.parent())) return restrict(c, h);
  if (!g->parent() || !same_group(g->parent(), h.parent()))
    throw CochainError("restrict_to needs a subgroup of the same ambient group");
  GroupPtr local = h.as_group();
  std::vector<int> to_c(h.order());
  for (int i = 0; i < h.order(); ++i) {
    auto li = g->from_parent(h.members()[i]);
    if (!li) throw CochainError("restrict_to target is not contained in the cochain's subgroup");
    to_c[i] = *li;
  }
  if (c.arity() != 2) throw CochainError("restrict_to supports 2-cochains");
  return Cochain::from_function(local, Cochain::Fn2([&](int x, int y) { return c(to_c[x], to_c[y]); }));
}

Cochain conj_transport(const Cochain& c, int g) {
  const GroupPtr& local = c.group();
  GroupPtr ambient = local->parent() ? local->parent() : local;
  if (g < 0 || g >= ambient->order()) throw CochainError("conjugating element not in the ambient group");
  Subgroup h = embedded_subgroup(c, ambient);
  Subgroup hg = conjugate_subgroup(ambient, h, g);
  GroupPtr out = local->parent() ? hg.as_group() : ambient;
  const int gi = ambient->inv(g);
  // local index in c's group of g^{-1} x g for x an element of out.
  std::vector<int> back(out->order());
  for (int i = 0; i < out->order(); ++i) back[i] = *local->from_parent(ambient->conj(gi, out->to_parent(i)));
  if (c.arity() != 2) throw CochainError("conj_transport supports 2-cochains");
  return Cochain::from_function(out, Cochain::Fn2([&](int x, int y) { return c(back[x], back[y]); }));
}

Cochain twisted_intersection_cocycle(const GroupPtr& ambient, const Cochain& mu1, const Cochain& mu2,
                                     const Cochain* omega, int g) {
  if (mu1.arity() != 2 || mu2.arity() != 2) throw CochainError("twisted intersection cocycle needs 2-cochains");
  if (omega && (omega->arity() != 3 || !same_group(omega->group(), ambient)))
    throw CochainError("omega must be a 3-cochain on the ambient group");
  if (g < 0 || g >= ambient->order()) throw CochainError("double coset representative not in the group");
  const GroupTable& G = *ambient;
  const Subgroup h1 = embedded_subgroup(mu1, ambient);
  const Subgroup h2 = embedded_subgroup(mu2, ambient);
  const Subgroup hg = intersect(h1, conjugate_subgroup(ambient, h2, g));
  GroupPtr local = hg.as_group();
  const GroupTable& l1 = *mu1.group();
  const GroupTable& l2 = *mu2.group();
  const int gi = G.inv(g);
  auto in1 = [&](int x) { return *l1.from_parent(x); };
  auto in2 = [&](int x) { return *l2.from_parent(x); };
  auto w = [&](int x, int y, int z) { return omega ? (*omega)(x, y, z) : UnitRoot(); };
  const auto& m = hg.members();
  return Cochain::from_function(local, Cochain::Fn2([&](int i, int j) {
    const int h = m[i], hp = m[j];
    const int hpi_g = G.mul(G.mul(gi, G.inv(hp)), g);  // g^{-1} h'^{-1} g
    const int hi_g = G.mul(G.mul(gi, G.inv(h)), g);    // g^{-1} h^{-1} g
    return mu1(in1(h), in1(hp)) + mu2(in2(hpi_g), in2(hi_g)) - w(G.mul(G.mul(h, hp), g), hpi_g, hi_g) +
           w(h, hp, g) + w(h, G.mul(hp, g), hpi_g);
  }));
}

// ---------------------------------------------------------------------------
// Abelian groups: alternating forms and H² representatives

BilinearForm alt_form(const Cochain& mu) {
  if (mu.arity() != 2) throw CochainError("alt_form needs a 2-cochain");
  require_abelian(*mu.group(), "alt_form");
  return BilinearForm::from_function(mu.group(), [&](int x, int y) { return mu(y, x) - mu(x, y); });
}

std::optional<Rank2Basis> rank2_basis(const GroupTable& a) {
  if (!a.is_abelian()) return std::nullopt;
  Rank2Basis basis;
  const int order = a.order();
  int best = -1;
  for (int x = 0; x < order; ++x)
    if (best < 0 || a.element_order(x) > a.element_order(best)) best = x;
  basis.e2 = best;
  basis.n = a.element_order(best);
  basis.m = order / basis.n;

  std::vector<int> powers2(basis.n);
  std::vector<int> where2(order, -1);
  for (int k = 0, y = a.identity(); k < basis.n; ++k, y = a.mul(y, best)) {
    powers2[k] = y;
    where2[y] = k;
  }
  basis.e1 = -1;
  for (int x = 0; x < order && basis.e1 < 0; ++x) {
    if (a.element_order(x) != basis.m) continue;
    bool disjoint = true;
    for (int k = 1, y = x; k < basis.m && disjoint; ++k, y = a.mul(y, x)) disjoint = where2[y] < 0;
    if (disjoint) basis.e1 = x;
  }
  if (basis.e1 < 0) return std::nullopt;
  basis.coords.assign(order, {0, 0});
  for (int k1 = 0, y1 = a.identity(); k1 < basis.m; ++k1, y1 = a.mul(y1, basis.e1))
    for (int k2 = 0; k2 < basis.n; ++k2) basis.coords[a.mul(y1, powers2[k2])] = {k1, k2};
  return basis;
}

Cochain canonical_cocycle(const GroupPtr& a, int c) {
  auto basis = rank2_basis(*a);
  if (!basis) throw CochainError("canonical cocycles need an abelian group of rank at most 2");
  const long m = basis->m;
  return Cochain::from_function(a, Cochain::Fn2([&](int x, int y) {
    const long x2 = basis->coords[x].second, y1 = basis->coords[y].first;
    return UnitRoot(mpq_class(((c * x2 * y1) % m + m) % m, m));
  }));
}

std::vector<Cochain> h2_representatives(const GroupPtr& a) {
  auto basis = rank2_basis(*a);
  if (!basis) throw CochainError("h2_representatives supports abelian groups of rank at most 2");
  std::vector<Cochain> reps;
  reps.reserve(basis->m);
  for (int c = 0; c < basis->m; ++c) reps.push_back(canonical_cocycle(a, c));
  return reps;
}

int h2_class_index(const Cochain& mu, const std::vector<Cochain>& reps) {
  // On an abelian group Alt(μ) determines the class; it picks the candidate
  // and a coboundary witness confirms it.
  const bool abelian = mu.group()->is_abelian();
  std::optional<BilinearForm> alt;
  if (abelian) alt = alt_form(mu);
  for (std::size_t i = 0; i < reps.size(); ++i) {
    if (abelian && !(alt_form(reps[i]) == *alt)) continue;
    if (cohomologous(mu, reps[i])) return static_cast<int>(i);
  }
  throw CochainError("cocycle is not cohomologous to any listed representative");
}

bool is_invariant_class(const Cochain& mu, const std::vector<GroupMorphism>& action) {
  for (const auto& t : action) {
    if (!t.is_automorphism() || !same_group(t.source, mu.group()))
      throw CochainError("action elements must be automorphisms of the cocycle's group");
    if (!cohomologous(mu.pullback(t), mu)) return false;
  }
  return true;
}

bool is_nondegenerate(const Cochain& mu) {
  require_abelian(*mu.group(), "is_nondegenerate");
  return alt_form(mu).is_nondegenerate();
}

// ---------------------------------------------------------------------------
// JSON

nlohmann::json to_json(const Cochain& c) {
  nlohmann::json vals = nlohmann::json::array();
  for (const auto& u : c.values()) vals.push_back(u.str());
  return {{"arity", c.arity()}, {"values", std::move(vals)}};
}

nlohmann::json to_json(const BilinearForm& b) {
  nlohmann::json vals = nlohmann::json::array();
  for (const auto& u : b.values()) vals.push_back(u.str());
  return {{"arity", 2}, {"values", std::move(vals)}};
}

Cochain cochain_from_json(const GroupPtr& group, const nlohmann::json& j) {
  const int arity = j.at("arity").get<int>();
  std::vector<UnitRoot> vals;
  for (const auto& v : j.at("values")) vals.push_back(UnitRoot::parse(v.get<std::string>()));
  return Cochain::from_values(group, arity, std::move(vals));
}

}  // namespace fusionlab
