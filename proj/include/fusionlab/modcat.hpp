#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>
#include <json.hpp>

#include "fusionlab/cochain.hpp"

namespace fusionlab {

/// The module category M(H, μ) over Vec_G^ω.
///
/// mu lives on subgroup.as_group(); an absent omega means the trivial 3-cocycle.
struct ModCatDescriptor {
  GroupPtr group;
  std::optional<Cochain> omega;
  Subgroup subgroup;
  Cochain mu;
};

/// Descriptor with the trivial multiplier on h.
ModCatDescriptor make_descriptor(const GroupPtr& g, const Subgroup& h);
ModCatDescriptor make_descriptor(const GroupPtr& g, const Subgroup& h, const Cochain& mu,
                                 std::optional<Cochain> omega = std::nullopt);

/// True iff coboundary(mu) equals omega restricted to H.
bool validate(const ModCatDescriptor& d);

/// Some g with H2 = g H1 g^{-1} and conj_transport(μ1, g) ~ μ2.
std::optional<int> equivalent_descriptors(const ModCatDescriptor& d1, const ModCatDescriptor& d2);

struct CosetTerm {
  int rep = 0;
  int m = 0;
};

struct RankResult {
  int rank = 0;
  std::vector<CosetTerm> breakdown;
};

/// Rank of Fun(M1, M2) with its per-double-coset contributions.
RankResult rank_breakdown(const ModCatDescriptor& d1, const ModCatDescriptor& d2);
int rank_functor_category(const ModCatDescriptor& d1, const ModCatDescriptor& d2);

struct DualSimple {
  std::vector<int> coset;
  int multiplier_count = 0;
  std::optional<int> degree;
  std::optional<mpq_class> fp_dim;
};

struct DualSimples {
  std::vector<DualSimple> simples;
  /// Set when some H ∩ gHg^{-1} is nonabelian and degrees were omitted.
  bool advisory = false;
};

/// Simple objects of the dual category (Vec_G^ω)*_M, one per (coset, irrep).
DualSimples dual_simples(const ModCatDescriptor& d);

struct FiberFunctorSearch {
  std::vector<std::pair<Subgroup, Cochain>> pairs;
  /// Set when some candidate K was only searched with its base multiplier.
  bool partial = false;
};

FiberFunctorSearch fiber_functor_pairs(const ModCatDescriptor& d, int max_group_order = kMaxGroupOrder);

struct PointedModCats {
  std::vector<ModCatDescriptor> descriptors;  // up to equivalence
  int raw_count = 0;
  bool partial = false;
};

/// Pointed module categories of the dual: pairs (N, ν) with N normal abelian
/// and ν a G-invariant class.
PointedModCats pointed_modcats_of_dual(const ModCatDescriptor& d);

std::vector<std::pair<ModCatDescriptor, int>> pointed_modcat_ranks(const ModCatDescriptor& d);

nlohmann::json to_json(const ModCatDescriptor& d);
ModCatDescriptor descriptor_from_json(const GroupPtr& g, const nlohmann::json& j);
nlohmann::json to_json(const RankResult& r, const GroupTable& g);

}  // namespace fusionlab
