#pragma once

#include <optional>
#include <vector>

#include <json.hpp>

#include "fusionlab/cochain.hpp"

namespace fusionlab {

/// Irreducible projective representations of a group with a fixed multiplier.
struct ProjRepProfile {
  GroupPtr group;
  Cochain multiplier;
  int count = 0;
  std::optional<std::vector<int>> degrees;
};

/// Number of μ-regular conjugacy classes of h, which equals the number of
/// irreducible projective representations with Schur multiplier μ.
int count_proj_irreps(const GroupPtr& h, const Cochain& mu);

/// Dimension of the center of the twisted group algebra k^μ[h], computed by
/// exact linear algebra over Q(ξ_N). Independent of count_proj_irreps.
int twisted_center_dim(const GroupPtr& h, const Cochain& mu, int max_order = 64);

/// Degrees for abelian h: r copies of sqrt(|h| / r), r = |radical of Alt(μ)|.
std::vector<int> proj_irrep_degrees_abelian(const GroupPtr& a, const Cochain& mu);

ProjRepProfile proj_rep_profile(const GroupPtr& h, const Cochain& mu);

nlohmann::json to_json(const ProjRepProfile& p);

}  // namespace fusionlab
