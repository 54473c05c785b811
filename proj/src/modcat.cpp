#include "fusionlab/modcat.hpp"

#include "fusionlab/projrep.hpp"

namespace fusionlab {

namespace {

const Cochain* omega_of(const ModCatDescriptor& d) { return d.omega ? &*d.omega : nullptr; }

bool same_omega(const ModCatDescriptor& a, const ModCatDescriptor& b) {
  const bool ta = !a.omega || a.omega->is_trivial();
  const bool tb = !b.omega || b.omega->is_trivial();
  if (ta || tb) return ta == tb;
  return *a.omega == *b.omega;
}

void require_compatible(const ModCatDescriptor& a, const ModCatDescriptor& b) {
  if (!same_group(a.group, b.group)) throw CochainError("descriptors live over different groups");
  if (!same_omega(a, b)) throw CochainError("descriptors use different 3-cocycles");
}

void require_valid(const ModCatDescriptor& d) {
  if (!validate(d)) throw CochainError("invalid module category descriptor");
}

// ν with coboundary(ν) = ω|_h, on h.as_group().
std::optional<Cochain> trivialize(const ModCatDescriptor& d, const Subgroup& h) {
  if (!d.omega || d.omega->is_trivial()) return Cochain::trivial(h.as_group(), 2);
  return coboundary_preimage(restrict(*d.omega, h));
}

// Candidate multipliers on h: the base ν shifted by every H² class when the
// shape of h is supported, else the base alone.
std::vector<Cochain> multipliers_on(const Subgroup& h, const Cochain& base, bool& partial) {
  GroupPtr hg = h.as_group();
  if (hg->is_abelian() && rank2_basis(*hg)) {
    std::vector<Cochain> out;
    for (const auto& rep : h2_representatives(hg)) out.push_back(base + rep);
    return out;
  }
  partial = true;
  return {base};
}

int multiplicity(const GroupPtr& g, const Cochain& mu1, const Cochain& mu2, const Cochain* omega, int rep) {
  const Cochain mug = twisted_intersection_cocycle(g, mu1, mu2, omega, rep);
  return count_proj_irreps(mug.group(), mug);
}

}  // namespace

ModCatDescriptor make_descriptor(const GroupPtr& g, const Subgroup& h) {
  return ModCatDescriptor{g, std::nullopt, h, Cochain::trivial(h.as_group(), 2)};
}

ModCatDescriptor make_descriptor(const GroupPtr& g, const Subgroup& h, const Cochain& mu,
                                 std::optional<Cochain> omega) {
  return ModCatDescriptor{g, std::move(omega), h, mu};
}

bool validate(const ModCatDescriptor& d) {
  try {
    if (d.mu.arity() != 2 || !same_group(d.subgroup.parent(), d.group)) return false;
    if (!(embedded_subgroup(d.mu, d.group) == d.subgroup)) return false;
    if (d.omega && (d.omega->arity() != 3 || !same_group(d.omega->group(), d.group))) return false;
    const Cochain target = d.omega ? restrict(*d.omega, d.subgroup) : Cochain::trivial(d.mu.group(), 3);
    return coboundary(d.mu).values() == target.values();
  } catch (const std::exception&) {
    return false;
  }
}

std::optional<int> equivalent_descriptors(const ModCatDescriptor& d1, const ModCatDescriptor& d2) {
  require_compatible(d1, d2);
  require_valid(d1);
  require_valid(d2);
  const GroupTable& g = *d1.group;
  if (d1.subgroup.order() != d2.subgroup.order()) return std::nullopt;
  for (int x = 0; x < g.order(); ++x) {
    if (!(conjugate_subgroup(d1.group, d1.subgroup, x) == d2.subgroup)) continue;
    // On H2 = x H1 x^{-1} this is μ2 against the x-transport of μ1.
    const Cochain mug = twisted_intersection_cocycle(d1.group, d2.mu, d1.mu, omega_of(d1), x);
    if (coboundary_preimage(mug)) return x;
  }
  return std::nullopt;
}

RankResult rank_breakdown(const ModCatDescriptor& d1, const ModCatDescriptor& d2) {
  require_compatible(d1, d2);
  require_valid(d1);
  require_valid(d2);
  RankResult out;
  for (const auto& coset : double_cosets(d1.group, d1.subgroup, d2.subgroup)) {
    const int rep = coset.front();
    const int m = multiplicity(d1.group, d1.mu, d2.mu, omega_of(d1), rep);
    out.breakdown.push_back({rep, m});
    out.rank += m;
  }
  return out;
}

int rank_functor_category(const ModCatDescriptor& d1, const ModCatDescriptor& d2) {
  return rank_breakdown(d1, d2).rank;
}

DualSimples dual_simples(const ModCatDescriptor& d) {
  require_valid(d);
  DualSimples out;
  const int h = d.subgroup.order();
  for (const auto& coset : double_cosets(d.group, d.subgroup, d.subgroup)) {
    const Cochain mug = twisted_intersection_cocycle(d.group, d.mu, d.mu, omega_of(d), coset.front());
    const GroupPtr& hg = mug.group();
    const int m = count_proj_irreps(hg, mug);
    std::vector<std::optional<int>> degrees(m);
    if (hg->is_abelian()) {
      auto deg = proj_irrep_degrees_abelian(hg, mug);
      for (int i = 0; i < m; ++i) degrees[i] = deg[i];
    } else {
      out.advisory = true;
    }
    for (const auto& deg : degrees) {
      DualSimple s{coset, m, deg, std::nullopt};
      if (deg) s.fp_dim = mpq_class(*deg * static_cast<long>(coset.size()), h);
      if (s.fp_dim) s.fp_dim->canonicalize();
      out.simples.push_back(std::move(s));
    }
  }
  return out;
}

FiberFunctorSearch fiber_functor_pairs(const ModCatDescriptor& d, int max_group_order) {
  require_valid(d);
  FiberFunctorSearch out;
  const GroupPtr& g = d.group;
  const int n = g->order(), h = d.subgroup.order();
  for (const auto& k : subgroups(g, max_group_order)) {
    const int inter = intersect(d.subgroup, k).order();
    if (static_cast<long>(h) * k.order() != static_cast<long>(n) * inter) continue;
    auto base = trivialize(d, k);
    if (!base) continue;
    for (const auto& nu : multipliers_on(k, *base, out.partial))
      if (multiplicity(g, d.mu, nu, omega_of(d), g->identity()) == 1) out.pairs.emplace_back(k, nu);
  }
  return out;
}

PointedModCats pointed_modcats_of_dual(const ModCatDescriptor& d) {
  require_valid(d);
  PointedModCats out;
  const GroupPtr& g = d.group;
  const auto gens = generating_set(*g);
  for (const auto& nsub : normal_abelian_subgroups(g)) {
    auto base = trivialize(d, nsub);
    if (!base) continue;
    for (const auto& nu : multipliers_on(nsub, *base, out.partial)) {
      bool invariant = true;
      for (int x : gens) {
        if (!coboundary_preimage(twisted_intersection_cocycle(g, nu, nu, omega_of(d), x))) {
          invariant = false;
          break;
        }
      }
      if (!invariant) continue;
      ++out.raw_count;
      ModCatDescriptor cand{g, d.omega, nsub, nu};
      bool seen = false;
      for (const auto& prev : out.descriptors)
        if (equivalent_descriptors(prev, cand)) {
          seen = true;
          break;
        }
      if (!seen) out.descriptors.push_back(std::move(cand));
    }
  }
  return out;
}

std::vector<std::pair<ModCatDescriptor, int>> pointed_modcat_ranks(const ModCatDescriptor& d) {
  std::vector<std::pair<ModCatDescriptor, int>> out;
  for (auto& n : pointed_modcats_of_dual(d).descriptors) {
    const int r = rank_functor_category(n, d);
    out.emplace_back(std::move(n), r);
  }
  return out;
}

nlohmann::json to_json(const ModCatDescriptor& d) {
  nlohmann::json j;
  j["subgroup"] = d.subgroup.members();
  j["mu"] = to_json(d.mu);
  j["omega"] = d.omega ? to_json(*d.omega) : nlohmann::json("trivial");
  return j;
}

ModCatDescriptor descriptor_from_json(const GroupPtr& g, const nlohmann::json& j) {
  Subgroup h(g, j.at("subgroup").get<std::vector<int>>());
  std::optional<Cochain> omega;
  if (j.contains("omega") && !(j["omega"].is_string() && j["omega"] == "trivial"))
    omega = cochain_from_json(g, j["omega"]);
  const bool trivial_mu = !j.contains("mu") || (j["mu"].is_string() && j["mu"] == "trivial");
  return make_descriptor(g, h, trivial_mu ? Cochain::trivial(h.as_group(), 2) : cochain_from_json(h.as_group(), j["mu"]),
                         omega);
}

nlohmann::json to_json(const RankResult& r, const GroupTable& g) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& t : r.breakdown) rows.push_back({{"rep", g.label(t.rep)}, {"m", t.m}});
  return {{"rank", r.rank}, {"coset_breakdown", rows}};
}

}  // namespace fusionlab
