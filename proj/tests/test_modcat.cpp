#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "fusionlab/modcat.hpp"
#include "fusionlab/projrep.hpp"

using namespace fusionlab;

namespace {

struct Config {
  GroupPtr g;
  Subgroup k, h1, h2, p, d2p;
};

// G = D_2p × Z/p with its distinguished subgroups.
Config configuration(int p) {
  auto g = make_direct_product(*make_dihedral(2 * p), *make_cyclic(p));
  const int r = *g->find_label("(r1,0)");
  const int z = *g->find_label("(r0,1)");
  const int rz = *g->find_label("(r1,1)");
  const int s = *g->find_label("(s0,0)");
  auto gen = [&](std::vector<int> xs) { return Subgroup::generated(g, xs); };
  return {g, gen({rz}), gen({r}), gen({z}), gen({r, z}), gen({r, s})};
}

// Oracle for ω = 1: sum over double cosets of the twisted center dimension of
// μ1 · (g-transport of μ2)^{-1} restricted to H1 ∩ g H2 g^{-1}.
int oracle_rank(const ModCatDescriptor& d1, const ModCatDescriptor& d2) {
  const GroupPtr& g = d1.group;
  int total = 0;
  for (const auto& coset : double_cosets(g, d1.subgroup, d2.subgroup)) {
    const int x = coset.front();
    const Subgroup hx = intersect(d1.subgroup, conjugate_subgroup(g, d2.subgroup, x));
    const Cochain moved = conj_transport(d2.mu, x);
    const Cochain a = restrict_to(d1.mu, hx);
    const Cochain b = restrict_to(moved, hx);
    total += twisted_center_dim(a.group(), a - Cochain::from_values(a.group(), 2, b.values()), 128);
  }
  return total;
}

std::vector<ModCatDescriptor> sample_descriptors(const Config& c) {
  std::vector<ModCatDescriptor> out;
  for (const auto& h : {Subgroup::trivial(c.g), c.k, c.h1, c.h2, c.p, c.d2p})
    out.push_back(make_descriptor(c.g, h));
  out.push_back(make_descriptor(c.g, c.p, canonical_cocycle(c.p.as_group(), 1)));
  return out;
}

GroupMorphism conjugation_on(const Subgroup& n, int x) {
  const GroupPtr& g = n.parent();
  GroupPtr local = n.as_group();
  std::vector<int> img(local->order());
  for (int i = 0; i < local->order(); ++i) img[i] = *local->from_parent(g->conj(x, local->to_parent(i)));
  return {local, local, img};
}

}  // namespace

TEST_CASE("descriptor validity") {
  auto c = configuration(3);
  CHECK(validate(make_descriptor(c.g, c.k)));
  CHECK(validate(make_descriptor(c.g, Subgroup::trivial(c.g))));
  auto pg = c.p.as_group();
  auto bad = Cochain::from_function(pg, Cochain::Fn2([](int x, int y) { return UnitRoot(x * y, 7); }));
  REQUIRE_FALSE(is_cocycle(bad));
  CHECK_FALSE(validate(make_descriptor(c.g, c.p, bad)));
  // multiplier on the wrong subgroup
  CHECK_FALSE(validate(make_descriptor(c.g, c.h1, Cochain::trivial(c.h2.as_group(), 2))));

  auto z2 = make_cyclic(2);
  auto omega = Cochain::from_function(z2, Cochain::Fn3([](int x, int y, int z) { return UnitRoot(x * y * z, 2); }));
  CHECK(validate(make_descriptor(z2, Subgroup::trivial(z2), Cochain::trivial(Subgroup::trivial(z2).as_group(), 2), omega)));
  CHECK_FALSE(validate(make_descriptor(z2, Subgroup::whole(z2), Cochain::trivial(Subgroup::whole(z2).as_group(), 2), omega)));
  auto pointed = pointed_modcats_of_dual(make_descriptor(z2, Subgroup::trivial(z2), Cochain::trivial(Subgroup::trivial(z2).as_group(), 2), omega));
  REQUIRE(pointed.descriptors.size() == 1);
  CHECK(pointed.descriptors[0].subgroup.order() == 1);

  auto z4 = make_cyclic(4);
  auto pulled = Cochain::from_function(z4, Cochain::Fn3([](int x, int y, int z) { return UnitRoot((x % 2) * (y % 2) * (z % 2), 2); }));
  auto nu = coboundary_preimage(pulled);
  REQUIRE(nu);
  auto whole = Subgroup::whole(z4);
  auto d = make_descriptor(z4, whole, Cochain::from_values(whole.as_group(), 2, nu->values()), pulled);
  CHECK(validate(d));
  CHECK(rank_functor_category(d, d) == 4);
  CHECK(equivalent_descriptors(d, d) == 0);
}

TEST_CASE("equivalence of descriptors") {
  auto c = configuration(3);
  auto dk = make_descriptor(c.g, c.k);
  CHECK(equivalent_descriptors(dk, dk) == c.g->identity());

  const int s = *c.g->find_label("(s0,0)");
  Subgroup kc = conjugate_subgroup(c.g, c.k, s);
  REQUIRE_FALSE(kc == c.k);
  auto w = equivalent_descriptors(dk, make_descriptor(c.g, kc));
  REQUIRE(w);
  CHECK(conjugate_subgroup(c.g, c.k, *w) == kc);

  CHECK_FALSE(equivalent_descriptors(make_descriptor(c.g, c.h1), make_descriptor(c.g, c.h2)));

  // (P, μ1) and (P, μ2) are swapped by a reflection
  auto pg = c.p.as_group();
  auto d1 = make_descriptor(c.g, c.p, canonical_cocycle(pg, 1));
  auto d2 = make_descriptor(c.g, c.p, canonical_cocycle(pg, 2));
  auto wit = equivalent_descriptors(d1, d2);
  REQUIRE(wit);
  CHECK(cohomologous(conj_transport(d1.mu, *wit), d2.mu).has_value());
  CHECK_FALSE(equivalent_descriptors(d1, make_descriptor(c.g, c.p)));
}

TEST_CASE("functor category ranks") {
  for (int p : {3, 5}) {
    auto c = configuration(p);
    auto dk = make_descriptor(c.g, c.k);
    CHECK(rank_functor_category(make_descriptor(c.g, Subgroup::trivial(c.g)), dk) == 2 * p);
    CHECK(rank_functor_category(make_descriptor(c.g, c.h1), dk) == 2);
    CHECK(rank_functor_category(make_descriptor(c.g, c.h2), dk) == 2);
    CHECK(rank_functor_category(make_descriptor(c.g, c.p), dk) == 2 * p);
    auto rk = rank_breakdown(dk, dk);
    CHECK(rk.rank == p * p + 1);
    std::multiset<int> ms;
    for (const auto& t : rk.breakdown) ms.insert(t.m);
    std::multiset<int> expected{1};
    for (int i = 0; i < p; ++i) expected.insert(p);
    CHECK(ms == expected);
  }
}

TEST_CASE("rank formula agrees with the twisted center oracle") {
  auto c = configuration(3);
  auto ds = sample_descriptors(c);
  for (const auto& a : ds)
    for (const auto& b : ds) {
      const int r = rank_functor_category(a, b);
      CHECK(r == oracle_rank(a, b));
      CHECK(r == rank_functor_category(b, a));
    }
  for (const auto& a : ds) CHECK(rank_functor_category(a, a) >= 1);
}

TEST_CASE("ranks are unchanged by coboundary perturbation") {
  auto c = configuration(3);
  std::mt19937 rng(4);
  auto pg = c.p.as_group();
  auto base = make_descriptor(c.g, c.p, canonical_cocycle(pg, 1));
  auto dk = make_descriptor(c.g, c.k);
  const int r0 = rank_functor_category(base, dk), r1 = rank_functor_category(base, base);
  std::uniform_int_distribution<long> pick(0, 8);
  for (int rep = 0; rep < 10; ++rep) {
    auto f = Cochain::from_function(pg, Cochain::Fn1([&](int) { return UnitRoot(pick(rng), 9); }));
    auto d = make_descriptor(c.g, c.p, base.mu + coboundary(f));
    CHECK(rank_functor_category(d, dk) == r0);
    CHECK(rank_functor_category(d, base) == r1);
    CHECK(dual_simples(d).simples.size() == dual_simples(base).simples.size());
  }
}

TEST_CASE("dual simples") {
  for (int p : {3, 5}) {
    auto c = configuration(p);
    auto ds = dual_simples(make_descriptor(c.g, c.k));
    CHECK_FALSE(ds.advisory);
    std::map<mpq_class, int> dims;
    for (const auto& s : ds.simples) ++dims[*s.fp_dim];
    CHECK(dims == std::map<mpq_class, int>{{1, p * p}, {p, 1}});
  }
  auto a = make_direct_product(*make_cyclic(3), *make_cyclic(3));
  auto whole = dual_simples(make_descriptor(a, Subgroup::whole(a)));
  CHECK(whole.simples.size() == 9);
  for (const auto& s : whole.simples) CHECK(*s.fp_dim == 1);

  auto c = configuration(3);
  auto triv = dual_simples(make_descriptor(c.g, Subgroup::trivial(c.g)));
  CHECK(triv.simples.size() == 18);
  auto full = dual_simples(make_descriptor(c.g, Subgroup::whole(c.g)));
  CHECK(full.advisory);
  CHECK(full.simples.size() == 9);
  for (const auto& s : full.simples) CHECK_FALSE(s.degree);
}

TEST_CASE("FP dimensions of duals square-sum to |G|") {
  auto c = configuration(3);
  for (const auto& h : subgroups(c.g)) {
    auto hg = h.as_group();
    std::vector<Cochain> mus{Cochain::trivial(hg, 2)};
    if (hg->is_abelian() && rank2_basis(*hg)) mus = h2_representatives(hg);
    for (const auto& mu : mus) {
      auto ds = dual_simples(make_descriptor(c.g, h, mu));
      if (ds.advisory) continue;
      mpq_class sum = 0;
      for (const auto& s : ds.simples) {
        mpq_class expect(*s.degree * static_cast<long>(s.coset.size()), h.order());
        expect.canonicalize();
        CHECK(*s.fp_dim == expect);
        sum += *s.fp_dim * *s.fp_dim;
      }
      CHECK(sum == 18);
    }
  }
}

TEST_CASE("fiber functors") {
  auto c = configuration(3);
  auto ff = fiber_functor_pairs(make_descriptor(c.g, c.k));
  CHECK_FALSE(ff.pairs.empty());
  CHECK(std::any_of(ff.pairs.begin(), ff.pairs.end(),
                    [&](const auto& pr) { return pr.first == c.d2p && pr.second.is_trivial(); }));

  auto a = make_direct_product(*make_cyclic(3), *make_cyclic(3));
  auto ffa = fiber_functor_pairs(make_descriptor(a, Subgroup::whole(a)));
  int on_whole = 0;
  for (const auto& [k, nu] : ffa.pairs)
    if (k.order() == 9) {
      ++on_whole;
      CHECK(is_nondegenerate(nu));
    }
  CHECK(on_whole == 2);
  CHECK(std::any_of(ffa.pairs.begin(), ffa.pairs.end(), [](const auto& pr) { return pr.first.order() == 1; }));

  auto fft = fiber_functor_pairs(make_descriptor(c.g, Subgroup::trivial(c.g)));
  CHECK(std::any_of(fft.pairs.begin(), fft.pairs.end(), [&](const auto& pr) { return pr.first.order() == 18; }));
}

TEST_CASE("pointed module categories of the dual") {
  for (int p : {3, 5}) {
    auto c = configuration(p);
    auto dk = make_descriptor(c.g, c.k);
    auto pm = pointed_modcats_of_dual(dk);
    CHECK(pm.descriptors.size() == 4);
    CHECK(pm.raw_count == 4);
    std::vector<Subgroup> found;
    for (const auto& d : pm.descriptors) {
      found.push_back(d.subgroup);
      CHECK(d.mu.is_trivial());
    }
    for (const auto& s : {Subgroup::trivial(c.g), c.h1, c.h2, c.p})
      CHECK(std::count(found.begin(), found.end(), s) == 1);

    std::multiset<int> ranks;
    for (const auto& [d, r] : pointed_modcat_ranks(dk)) ranks.insert(r);
    CHECK(ranks == std::multiset<int>{2, 2, 2 * p, 2 * p});
  }
}

TEST_CASE("invariance test agrees with conjugation pullback") {
  auto c = configuration(3);
  auto gens = generating_set(*c.g);
  for (const auto& n : normal_abelian_subgroups(c.g)) {
    auto ng = n.as_group();
    std::vector<GroupMorphism> action;
    for (int x : gens) action.push_back(conjugation_on(n, x));
    for (const auto& nu : h2_representatives(ng)) {
      bool twisted = true;
      for (int x : gens) twisted = twisted && coboundary_preimage(twisted_intersection_cocycle(c.g, nu, nu, nullptr, x));
      CHECK(twisted == is_invariant_class(nu, action));
    }
  }
}

TEST_CASE("abelian group: every pair is pointed") {
  auto a = make_direct_product(*make_cyclic(3), *make_cyclic(3));
  auto pm = pointed_modcats_of_dual(make_descriptor(a, Subgroup::trivial(a)));
  int expected = 0;
  for (const auto& h : subgroups(a)) expected += static_cast<int>(h2_representatives(h.as_group()).size());
  CHECK(static_cast<int>(pm.descriptors.size()) == expected);
  CHECK(pm.raw_count == expected);
}

TEST_CASE("descriptor json") {
  auto c = configuration(3);
  auto d = make_descriptor(c.g, c.p, canonical_cocycle(c.p.as_group(), 2));
  auto j = to_json(d);
  CHECK(j["omega"] == "trivial");
  auto back = descriptor_from_json(c.g, j);
  CHECK(back.subgroup == d.subgroup);
  CHECK(back.mu.values() == d.mu.values());
  CHECK(validate(back));
  auto rj = to_json(rank_breakdown(d, d), *c.g);
  CHECK(rj["rank"] == rank_functor_category(d, d));
  CHECK(rj["coset_breakdown"][0]["rep"] == "(r0,0)");
}
