// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "fusionlab/modcat.hpp"
#include "fusionlab/projrep.hpp"
#include "fusionlab/tambara_yamagami.hpp"

using namespace fusionlab;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

GroupPtr cp_group(int p) { return make_direct_product(*make_dihedral(2 * p), *make_cyclic(p)); }

ModCatDescriptor cp_descriptor(int p) {
  auto g = cp_group(p);
  const int rz = *g->find_label("(r1,1)");
  return make_descriptor(g, Subgroup::generated(g, std::vector<int>{rz}));
}

GroupPtr zp2(int p) {
  auto z = make_cyclic(p);
  return make_direct_product(*z, *z);
}

RingAction swap_ring_action(int p) {
  auto ty = canonical_ty(p);
  return ty_ring_action(ty, swap_automorphism(ty));
}

void ac1(Outcome& o) {
  for (int p : {3, 5, 7}) {
    const auto t0 = Clock::now();
    const auto dual = pointed_modcats_of_dual(cp_descriptor(p));
    const auto ranks = pointed_modcat_ranks(cp_descriptor(p));
    const double s = seconds_since(t0);
    std::multiset<int> got;
    for (const auto& r : ranks) got.insert(r.second);
    o.require(dual.descriptors.size() == 4 && !dual.partial, "4 descriptors at p=" + std::to_string(p));
    o.require(got == std::multiset<int>{2 * p, 2 * p, 2, 2}, "rank multiset at p=" + std::to_string(p));
    if (p == 3) o.require(s < 10, "runtime at p=3");
    if (p == 7) o.require(s < 60, "runtime at p=7");
    o.detail << " p=" << p << ": ranks";
    for (int r : got) o.detail << " " << r;
    o.detail << " (" << s << " s);";
  }
}

void ac2(Outcome& o) {
  for (int p : {3, 5, 7}) {
    const auto d = cp_descriptor(p);
    const int rank = rank_functor_category(d, d);
    std::map<mpq_class, int> dims;
    bool exact = true;
    for (const auto& s : dual_simples(d).simples) {
      if (!s.fp_dim) exact = false;
      else ++dims[*s.fp_dim];
    }
    o.require(rank == p * p + 1, "rank p^2+1 at p=" + std::to_string(p));
    o.require(exact && dims == std::map<mpq_class, int>{{mpq_class(1), p * p}, {mpq_class(p), 1}},
              "census at p=" + std::to_string(p));
    o.detail << " p=" << p << ": rank " << rank << ", " << dims[1] << "x1 + " << dims[p] << "x" << p << ";";
  }
}

// Admissible keys chosen at random, plus one stored entry of each family.
std::vector<FSymbolTable::Key> mutation_keys(const FSymbolTable& fs, int count, unsigned seed) {
  const FusionRing& r = fs.ring();
  const int n = r.size(), m = n - 1;
  std::vector<FSymbolTable::Key> out{{1, m, 2, m, m, m}, {m, 1, m, 2, m, m}, {m, m, m, m, 1, 2}, {m, m, m, m, 0, 0}};
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> pick(0, n - 1);
  while (static_cast<int>(out.size()) < count) {
    FSymbolTable::Key k{pick(rng), pick(rng), pick(rng), 0, 0, 0};
    const auto& ab = r.product(k[0], k[1]);
    k[4] = ab[rng() % ab.size()].first;
    const auto& bc = r.product(k[1], k[2]);
    k[5] = bc[rng() % bc.size()].first;
    const auto& ec = r.product(k[4], k[2]);
    k[3] = ec[rng() % ec.size()].first;
    if (fs.admissible(k)) out.push_back(k);
  }
  return out;
}

void ac3(Outcome& o) {
  for (int p : {3, 5})
    for (int sign : {1, -1}) {
      const auto t0 = Clock::now();
      const auto v = pentagon_check(f_symbols(canonical_ty(p, sign)));
      const double s = seconds_since(t0);
      const std::string tag = "p=" + std::to_string(p) + (sign > 0 ? " tau+" : " tau-");
      o.require(v.empty(), "zero violations " + tag);
      if (p == 3) o.require(s < 30, "runtime " + tag);
      if (p == 5) o.require(s < 600, "runtime " + tag);
      o.detail << " " << tag << ": " << v.size() << " violations (" << s << " s);";
    }
  const auto base = f_symbols(canonical_ty(3));
  const auto keys = mutation_keys(base, 40, 11);
  int caught = 0;
  for (const auto& k : keys) {
    auto broken = base;
    broken.set(k, base.at(k) * CycScalar::root(3, 1));
    caught += !pentagon_check(broken).empty();
  }
  auto doubled = base;
  const int m = 9;
  doubled.set({m, m, m, m, 1, 2}, base.at({m, m, m, m, 1, 2}) * mpq_class(2));
  caught += !pentagon_check(doubled).empty();
  o.require(caught == static_cast<int>(keys.size()) + 1, "every mutation caught");
  o.detail << " mutations caught " << caught << "/" << keys.size() + 1 << ";";
}

void ac4(Outcome& o) {
  for (int p : {3, 5, 7}) {
    const auto ty = canonical_ty(p);
    const auto t = swap_automorphism(ty);
    const auto perm = t_permutation_on_modcats(ty, t);
    bool shape = perm.descriptors.size() == 4;
    for (std::size_t i = 0; shape && i < 4; ++i) {
      const auto& d = perm.descriptors[i];
      const auto& img = perm.descriptors[perm.image[i]];
      if (d.kind == TYModCatDescriptor::Kind::lagrangian)
        shape = img.kind == d.kind && !(img.subgroup == d.subgroup);
      else
        shape = img.kind == d.kind && (*img.mu_class + *d.mu_class) % p == 0 && img.mu_class != d.mu_class;
    }
    const auto v = group_theoretical_verdict(ty, t);
    o.require(shape, "(L1 L2)(c -c) at p=" + std::to_string(p));
    o.require(perm.fixed_points.empty(), "no fixed points at p=" + std::to_string(p));
    o.require(!v.group_theoretical, "not group-theoretical at p=" + std::to_string(p));
    o.detail << " p=" << p << ":";
    for (std::size_t i = 0; i < perm.descriptors.size(); ++i)
      o.detail << " " << describe(perm.descriptors[i]) << "->" << describe(perm.descriptors[perm.image[i]]);
    o.detail << ";";
  }
}

void ac5(Outcome& o) {
  for (int p : {3, 5, 7}) {
    const auto prof = dimension_profile(equivariantization_simples(swap_ring_action(p)));
    long total = 0;
    for (const auto& [d, c] : prof) total += d * d * c;
    const std::vector<std::pair<long, int>> expected{{1, 2 * p}, {2, p * (p - 1) / 2}, {static_cast<long>(p), 2}};
    o.require(prof == expected && total == 4L * p * p, "profile at p=" + std::to_string(p));
    o.detail << " p=" << p << ":";
    for (const auto& [d, c] : prof) o.detail << " " << d << "x" << c;
    o.detail << ", sum " << total << ";";
  }
}

void ac6(Outcome& o) {
  for (int p : {3, 5, 7}) {
    const auto ty = canonical_ty(p);
    const auto reps = h2_representatives(ty.a);
    std::vector<int> self;
    bool involution = true;
    for (int c = 1; c < p; ++c) {
      const int d = companion_class(ty, reps[c]);
      involution = involution && d >= 1 && companion_class(ty, reps[d]) == c;
      if (d == c) self.push_back(c);
    }
    o.require(involution, "involution at p=" + std::to_string(p));
    o.require(self.size() == 2 && (self[0] + self[1]) % p == 0, "two inverse self-companions at p=" + std::to_string(p));
    o.detail << " p=" << p << ": self-companion";
    for (int c : self) o.detail << " " << c;
    o.detail << ";";
  }
}

void ac7(Outcome& o) {
  int cases = 0, agree = 0;
  for (int p : {3, 5}) {
    for (const auto& h : subgroups(cp_group(p))) {
      if (h.order() > 16) continue;
      const auto hg = h.as_group();
      std::vector<Cochain> mus;
      if (hg->is_abelian() && rank2_basis(*hg)) mus = h2_representatives(hg);
      else mus.push_back(Cochain::trivial(hg, 2));
      for (const auto& mu : mus) {
        ++cases;
        agree += count_proj_irreps(hg, mu) == twisted_center_dim(hg, mu);
      }
    }
  }
  o.require(cases > 0 && agree == cases, "all cases agree");
  o.detail << " " << agree << "/" << cases << " (subgroup, class) pairs agree;";
}

void ac8(Outcome& o) {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<long> pick(0, 35);
  auto random_fn1 = [&](const GroupPtr& g) {
    return Cochain::from_function(g, Cochain::Fn1([&](int) { return UnitRoot(pick(rng), 36); }));
  };
  auto random_fn2 = [&](const GroupPtr& g) {
    return Cochain::from_function(g, Cochain::Fn2([&](int, int) { return UnitRoot(pick(rng), 36); }));
  };

  bool d2 = true;
  for (const auto& g : {make_cyclic(12), make_dihedral(10), cp_group(3), zp2(5)}) {
    for (int rep = 0; rep < 5; ++rep) {
      d2 = d2 && coboundary(coboundary(random_fn1(g))) == Cochain::trivial(g, 3);
      d2 = d2 && is_cocycle(coboundary(random_fn2(g)));
    }
  }
  o.require(d2, "coboundary squared is zero");

  int perturbations = 0;
  bool alt_ok = true;
  const auto a = zp2(3);
  for (const auto& mu : h2_representatives(a)) {
    const auto alt = alt_form(mu);
    for (int rep = 0; rep < 100; ++rep, ++perturbations) alt_ok = alt_ok && alt_form(mu + coboundary(random_fn1(a))) == alt;
  }
  o.require(alt_ok && perturbations >= 100, "Alt class invariance");

  std::vector<FusionRing> rings;
  for (int p : {3, 5, 7}) rings.push_back(ty_ring(zp2(p)));
  rings.push_back(ty_ring(make_cyclic(2)));
  rings.push_back(group_ring(cp_group(3)));
  for (int p : {3, 5}) rings.push_back(crossed_product_ring(swap_ring_action(p)));
  bool axioms = true;
  double residual = 0;
  for (const auto& r : rings) {
    axioms = axioms && !check_ring_axioms(r);
    residual = std::max(residual, fp_dims(r).max_residual);
  }
  o.require(axioms, "ring axioms");
  o.require(residual <= 1e-6, "FP relation");

  bool fiber = true;
  for (int p : {3, 5}) fiber = fiber && !fiber_functor_pairs(cp_descriptor(p)).pairs.empty();
  o.require(fiber, "fiber functor pairs exist");

  o.detail << " coboundary^2 ok; " << perturbations << " Alt perturbations; " << rings.size()
           << " rings checked, max FP residual " << residual << "; fiber functor pairs found;";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
      {"AC1 pointed module categories of the dual", ac1},
      {"AC2 census of C_p", ac2},
      {"AC3 pentagon coherence and mutation", ac3},
      {"AC4 swap permutation and verdict", ac4},
      {"AC5 equivariantization dimension profile", ac5},
      {"AC6 companion classes", ac6},
      {"AC7 projective irrep count oracle", ac7},
      {"AC8 property suites", ac8},
  };
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      run(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << " [exception: " << e.what() << "]";
    }
    failures += !o.pass;
    std::cout << (o.pass ? "PASS " : "FAIL ") << name << ":" << o.detail.str() << std::endl;
  }
  return failures ? 1 : 0;
}
