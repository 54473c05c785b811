#include "fusionlab/tambara_yamagami.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <thread>

namespace fusionlab {

namespace {

int sqrt_exact(int n) {
  int r = 0;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r * r == n ? r : -1;
}

GroupPtr elementary(int p) {
  auto z = make_cyclic(p);
  return make_direct_product(*z, *z);
}

int prime_of(const TYData& ty) {
  const int p = sqrt_exact(ty.a->order());
  if (p < 3 || !is_prime(p) || !ty.a->same_table(*elementary(p)))
    throw TYError("operation needs A = (Z/p)^2 for an odd prime p");
  return p;
}

GroupMorphism on_a(const TYData& ty, std::vector<int> image) { return {ty.a, ty.a, std::move(image)}; }

}  // namespace

TYData make_ty_data(const GroupPtr& a, const BilinearForm& chi, const mpq_class& tau) {
  if (!a->is_abelian()) throw TYError("Tambara-Yamagami data needs an abelian group");
  if (!same_group(chi.group(), a)) throw TYError("form lives on a different group");
  if (!chi.is_symmetric()) throw TYError("form is not symmetric");
  if (!chi.is_bimultiplicative()) throw TYError("form is not bimultiplicative");
  if (!chi.is_nondegenerate()) throw TYError("form is degenerate");
  if (tau * tau * a->order() != 1) throw TYError("tau^2 |A| must equal 1 with tau rational");
  return {a, chi, tau};
}

BilinearForm canonical_hyperbolic_form(int p) {
  if (p < 3 || !is_prime(p)) throw TYError("canonical form needs an odd prime");
  auto a = elementary(p);
  return BilinearForm::from_function(a, [p](int x, int y) {
    return UnitRoot((x / p) * (y % p) + (x % p) * (y / p), static_cast<unsigned long>(p));
  });
}

TYData canonical_ty(int p, int tau_sign) {
  auto chi = canonical_hyperbolic_form(p);
  return make_ty_data(chi.group(), chi, mpq_class(tau_sign >= 0 ? 1 : -1, p));
}

GroupMorphism swap_automorphism(const TYData& ty) {
  const int p = prime_of(ty);
  auto m = rank2_matrix_automorphism(ty.a, p, 0, 1, 1, 0);
  return on_a(ty, m.image);
}

std::vector<Lagrangian> lagrangian_subgroups(const TYData& ty) {
  const int n = ty.a->order();
  std::vector<Subgroup> found;
  for (const auto& l : subgroups(ty.a)) {
    if (static_cast<long>(l.order()) * l.order() != n) continue;
    bool isotropic = true;
    for (int x : l.members())
      for (int y : l.members())
        if (!ty.chi(x, y).is_one()) isotropic = false;
    if (isotropic) found.push_back(l);
  }
  std::vector<Lagrangian> out;
  for (const auto& l : found) {
    Lagrangian entry{l, std::nullopt};
    for (const auto& other : found)
      if (intersect(l, other).order() == 1) {
        entry.complement = other;
        break;
      }
    out.push_back(std::move(entry));
  }
  return out;
}

// ---------------------------------------------------------------------------
// F-symbols

FSymbolTable::FSymbolTable(FusionRing ring, unsigned level)
    : ring_(std::move(ring)), level_(level), one_(level, mpq_class(1)) {
  if (ring_.size() >= 1024) throw TYError("F-symbol table supports fewer than 1024 labels");
}

std::uint64_t FSymbolTable::pack(const Key& k) {
  std::uint64_t code = 0;
  for (int v : k) code = (code << 10) | static_cast<std::uint64_t>(v);
  return code;
}

FSymbolTable::Key FSymbolTable::unpack(std::uint64_t code) {
  Key k{};
  for (int i = 5; i >= 0; --i) {
    k[i] = static_cast<int>(code & 1023);
    code >>= 10;
  }
  return k;
}

bool FSymbolTable::admissible(const Key& k) const {
  const auto [a, b, c, d, e, f] = k;
  const int n = ring_.size();
  for (int v : k)
    if (v < 0 || v >= n) return false;
  return ring_.N(a, b, e) && ring_.N(e, c, d) && ring_.N(b, c, f) && ring_.N(a, f, d);
}

const CycScalar* FSymbolTable::find(const Key& k) const {
  if (!admissible(k)) return nullptr;
  auto it = entries_.find(pack(k));
  return it == entries_.end() ? &one_ : &it->second;
}

const CycScalar& FSymbolTable::at(const Key& k) const {
  const CycScalar* v = find(k);
  if (!v) throw TYError("F-symbol index is not admissible");
  return *v;
}

void FSymbolTable::set(const Key& k, const CycScalar& v) {
  if (!admissible(k)) throw TYError("F-symbol index is not admissible");
  if (v.is_zero()) throw TYError("F-symbols must be nonzero");
  entries_.insert_or_assign(pack(k), v.lift(std::lcm(level_, v.level())));
}

std::vector<FSymbolTable::Key> FSymbolTable::explicit_keys() const {
  std::vector<std::uint64_t> codes;
  codes.reserve(entries_.size());
  for (const auto& kv : entries_) codes.push_back(kv.first);
  std::sort(codes.begin(), codes.end());
  std::vector<Key> out;
  for (auto c : codes) out.push_back(unpack(c));
  return out;
}

FSymbolTable f_symbols(const TYData& ty) {
  const int n = ty.a->order();
  unsigned level = 1;
  for (const auto& v : ty.chi.values()) level = std::lcm(level, static_cast<unsigned>(v.order()));
  FSymbolTable fs(ty_ring(ty.a), level);
  const int m = n;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const CycScalar chi = CycScalar::from_unit_root(ty.chi(a, b)).lift(level);
      fs.set({a, m, b, m, m, m}, chi);
      fs.set({m, a, m, b, m, m}, chi);
      fs.set({m, m, m, m, a, b}, CycScalar::from_unit_root(-ty.chi(a, b)).lift(level) * ty.tau);
    }
  return fs;
}

namespace {

// A sum of products of F-values, with all-default products kept as a count.
class Accum {
public:
  explicit Accum(unsigned level) : sum_(level) {}
  void add(std::initializer_list<const CycScalar*> factors, const CycScalar& one) {
    const CycScalar* first = nullptr;
    CycScalar prod;
    bool nontrivial = false;
    for (const CycScalar* f : factors) {
      if (f == &one) continue;
      if (!first) {
        first = f;
      } else {
        prod = nontrivial ? prod * *f : *first * *f;
        nontrivial = true;
      }
    }
    if (!first) {
      ++count_;
    } else {
      sum_ += nontrivial ? prod : *first;
    }
  }
  CycScalar total() const { return sum_ + CycScalar(sum_.level(), mpq_class(count_)); }
  bool empty() const { return count_ == 0 && sum_.is_zero(); }

private:
  CycScalar sum_;
  long count_ = 0;
};

void pentagon_range(const FSymbolTable& fs, int start, int stride, std::vector<PentagonViolation>& out) {
  const FusionRing& r = fs.ring();
  const int n = r.size();
  const CycScalar* unit_ptr = fs.find({r.unit(), r.unit(), r.unit(), r.unit(), r.unit(), r.unit()});
  for (int a = start; a < n; a += stride)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d)
          for (const auto& [f, nf] : r.product(a, b))
            for (const auto& [g, ng] : r.product(f, c))
              for (const auto& [e, ne] : r.product(g, d))
                for (const auto& [l, nl] : r.product(c, d))
                  for (const auto& [k, nk] : r.product(b, l)) {
                    if (!r.N(a, k, e)) continue;
                    Accum lhs(fs.level()), rhs(fs.level());
                    const CycScalar* x1 = fs.find({f, c, d, e, g, l});
                    const CycScalar* x2 = fs.find({a, b, l, e, f, k});
                    if (x1 && x2) lhs.add({x1, x2}, *unit_ptr);
                    for (const auto& [h, nh] : r.product(b, c)) {
                      const CycScalar* y1 = fs.find({a, b, c, g, f, h});
                      if (!y1) continue;
                      const CycScalar* y2 = fs.find({a, h, d, e, g, k});
                      if (!y2) continue;
                      const CycScalar* y3 = fs.find({b, c, d, k, h, l});
                      if (!y3) continue;
                      rhs.add({y1, y2, y3}, *unit_ptr);
                    }
                    const CycScalar lv = lhs.total(), rv = rhs.total();
                    if (!(lv == rv)) out.push_back({{a, b, c, d, e, f, g, l, k}, lv.str(), rv.str()});
                  }
}

int thread_count(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("FUSIONLAB_THREADS")) {
    const int t = std::atoi(env);
    if (t > 0) return t;
  }
  return 1;
}

}  // namespace

std::vector<PentagonViolation> pentagon_check(const FSymbolTable& fs, int threads) {
  const FusionRing& r = fs.ring();
  for (int x = 0; x < r.size(); ++x)
    for (int y = 0; y < r.size(); ++y)
      for (const auto& [z, c] : r.product(x, y))
        if (c != 1) throw TYError("pentagon check needs a multiplicity-free ring");
  const int t = std::min(thread_count(threads), r.size());
  std::vector<std::vector<PentagonViolation>> parts(t);
  if (t == 1) {
    pentagon_range(fs, 0, 1, parts[0]);
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < t; ++i) pool.emplace_back(pentagon_range, std::cref(fs), i, t, std::ref(parts[i]));
    for (auto& th : pool) th.join();
  }
  std::vector<PentagonViolation> out;
  for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.labels < y.labels; });
  return out;
}

nlohmann::json to_json(const PentagonViolation& v, const FusionRing& r) {
  static const char* names[] = {"a", "b", "c", "d", "e", "f", "g", "l", "k"};
  nlohmann::json j;
  for (int i = 0; i < 9; ++i) j[names[i]] = r.label(v.labels[i]);
  j["lhs"] = v.lhs;
  j["rhs"] = v.rhs;
  return j;
}

// ---------------------------------------------------------------------------
// Automorphisms

std::vector<GroupMorphism> aut_chi(const TYData& ty) {
  const int p = prime_of(ty);
  const int e1 = p, e2 = 1;  // (1,0) and (0,1)
  std::vector<GroupMorphism> out;
  for (const auto& m : automorphisms_rank2_elementary(p)) {
    bool keeps = true;
    for (int x : {e1, e2})
      for (int y : {e1, e2})
        if (ty.chi(m(x), m(y)) != ty.chi(x, y)) keeps = false;
    if (!keeps) continue;
    auto phi = on_a(ty, m.image);
    if (!ty.chi.preserved_by(phi)) throw TYError("internal error: form preserved on a basis only");
    out.push_back(std::move(phi));
  }
  return out;
}

bool action_invariance_check(const FSymbolTable& fs, const GroupMorphism& g) {
  const FusionRing& r = fs.ring();
  const int n = g.source->order();
  if (r.size() != n + 1) throw TYError("automorphism does not match the F-symbol table");
  std::vector<int> fwd(n + 1), back(n + 1);
  const GroupMorphism gi = g.inverse();
  for (int x = 0; x < n; ++x) {
    fwd[x] = g(x);
    back[x] = gi(x);
  }
  fwd[n] = back[n] = n;
  auto relabel = [](const FSymbolTable::Key& k, const std::vector<int>& p) {
    FSymbolTable::Key out;
    for (int i = 0; i < 6; ++i) out[i] = p[k[i]];
    return out;
  };
  for (const auto& k : fs.explicit_keys()) {
    const CycScalar& v = fs.at(k);
    const CycScalar* img = fs.find(relabel(k, fwd));
    const CycScalar* pre = fs.find(relabel(k, back));
    if (!img || !pre || !(*img == v) || !(*pre == v)) return false;
  }
  return true;
}

bool action_invariance_check(const TYData& ty, const GroupMorphism& g) {
  if (!g.is_automorphism() || !same_group(g.source, ty.a)) throw TYError("not an automorphism of A");
  return action_invariance_check(f_symbols(ty), g);
}

// ---------------------------------------------------------------------------
// Pointed module categories

bool TYModCatDescriptor::operator==(const TYModCatDescriptor& o) const {
  return kind == o.kind && subgroup == o.subgroup && mu_class == o.mu_class;
}

std::string describe(const TYModCatDescriptor& d) {
  if (d.kind == TYModCatDescriptor::Kind::full) return "A,mu_" + std::to_string(*d.mu_class);
  const auto& s = *d.subgroup;
  const GroupTable& a = *s.parent();
  for (int x : s.members())
    if (x != a.identity()) return "L<" + a.label(x) + ">";
  return "L<" + a.label(a.identity()) + ">";
}

nlohmann::json to_json(const TYModCatDescriptor& d) {
  nlohmann::json j{{"name", describe(d)}};
  if (d.kind == TYModCatDescriptor::Kind::lagrangian) {
    j["kind"] = "lagrangian";
    j["subgroup"] = d.subgroup->members();
  } else {
    j["kind"] = "full";
    j["mu_class"] = *d.mu_class;
  }
  return j;
}

GroupMorphism companion_iota(const TYData& ty, const Cochain& mu) {
  if (!same_group(mu.group(), ty.a)) throw TYError("multiplier lives on a different group");
  const BilinearForm alt = alt_form(mu);
  if (!alt.is_nondegenerate()) throw TYError("companion class needs a nondegenerate multiplier");
  const int n = ty.a->order();
  std::vector<int> image(n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      bool ok = true;
      for (int x = 0; x < n && ok; ++x) ok = alt(x, b) == ty.chi(x, a);
      if (!ok) continue;
      if (image[a] >= 0) throw TYError("internal error: iota is not unique");
      image[a] = b;
    }
  GroupMorphism iota = on_a(ty, image);
  if (std::count(image.begin(), image.end(), -1) || !iota.is_automorphism())
    throw TYError("internal error: iota is not an automorphism");
  return iota;
}

int companion_class(const TYData& ty, const Cochain& mu) {
  const GroupMorphism iota = companion_iota(ty, mu);
  const Cochain companion = -mu.pullback(iota);
  return h2_class_index(companion, h2_representatives(ty.a));
}

std::vector<TYModCatDescriptor> pointed_ty_modcats(const TYData& ty) {
  prime_of(ty);
  auto lag = lagrangian_subgroups(ty);
  if (lag.empty() || !lag.front().complement) throw TYError("form is not hyperbolic");
  std::vector<TYModCatDescriptor> out;
  for (const auto& l : lag) out.push_back({TYModCatDescriptor::Kind::lagrangian, l.subgroup, std::nullopt});
  const auto reps = h2_representatives(ty.a);
  for (int c = 1; c < static_cast<int>(reps.size()); ++c)
    if (companion_class(ty, reps[c]) == c) out.push_back({TYModCatDescriptor::Kind::full, std::nullopt, c});
  return out;
}

ModCatPermutation t_permutation_on_modcats(const TYData& ty, const GroupMorphism& t) {
  if (!t.is_automorphism() || !same_group(t.source, ty.a)) throw TYError("not an automorphism of A");
  ModCatPermutation out;
  out.descriptors = pointed_ty_modcats(ty);
  const auto reps = h2_representatives(ty.a);
  const GroupMorphism ti = t.inverse();
  for (const auto& d : out.descriptors) {
    TYModCatDescriptor img = d;
    if (d.kind == TYModCatDescriptor::Kind::lagrangian) {
      std::vector<int> members;
      for (int x : d.subgroup->members()) members.push_back(t(x));
      img.subgroup = Subgroup(ty.a, members);
    } else {
      img.mu_class = h2_class_index(reps[*d.mu_class].pullback(ti), reps);
    }
    auto it = std::find(out.descriptors.begin(), out.descriptors.end(), img);
    if (it == out.descriptors.end()) throw TYError("automorphism does not permute the pointed module categories");
    out.image.push_back(static_cast<int>(it - out.descriptors.begin()));
  }
  for (int i = 0; i < static_cast<int>(out.image.size()); ++i)
    if (out.image[i] == i) out.fixed_points.push_back(i);
  return out;
}

RingAction ty_ring_action(const TYData& ty, const GroupMorphism& t) {
  if (!t.is_automorphism() || !same_group(t.source, ty.a)) throw TYError("not an automorphism of A");
  if (!t.compose(t).is_identity()) throw TYError("the action needs t^2 = id");
  FusionRing r = ty_ring(ty.a);
  const int n = ty.a->order();
  std::vector<int> id(n + 1), tp(n + 1);
  std::iota(id.begin(), id.end(), 0);
  for (int x = 0; x < n; ++x) tp[x] = t(x);
  tp[n] = n;
  return {std::move(r), make_cyclic(2), {id, tp}};
}

Verdict group_theoretical_verdict(const TYData& ty, const GroupMorphism& t, std::optional<int> pentagon_violations) {
  Verdict v;
  v.p = prime_of(ty);
  v.permutation = t_permutation_on_modcats(ty, t);
  v.group_theoretical = !v.permutation.fixed_points.empty();
  v.dimension_profile = dimension_profile(equivariantization_simples(ty_ring_action(ty, t)));
  for (const auto& [d, c] : v.dimension_profile) v.fpdim_total += d * d * c;
  v.pentagon_violations = pentagon_violations;
  return v;
}

nlohmann::json to_json(const Verdict& v) {
  nlohmann::json perm = nlohmann::json::array(), fixed = nlohmann::json::array(), prof = nlohmann::json::array();
  const auto& ds = v.permutation.descriptors;
  for (std::size_t i = 0; i < ds.size(); ++i) perm.push_back({describe(ds[i]), describe(ds[v.permutation.image[i]])});
  for (int i : v.permutation.fixed_points) fixed.push_back(describe(ds[i]));
  for (const auto& [d, c] : v.dimension_profile) prof.push_back({d, c});
  return {{"p", v.p},
          {"group_theoretical", v.group_theoretical},
          {"modcat_permutation", perm},
          {"fixed_points", fixed},
          {"dimension_profile", prof},
          {"fpdim_total", v.fpdim_total},
          {"pentagon_violations", v.pentagon_violations ? nlohmann::json(*v.pentagon_violations) : nlohmann::json()}};
}

}  // namespace fusionlab
