#include "fusionlab/projrep.hpp"

#include <cmath>

#include "fusionlab/cyclotomic.hpp"

namespace fusionlab {

namespace {

bool is_regular(const GroupTable& g, const Cochain& mu, int x) {
  for (int c = 0; c < g.order(); ++c)
    if (g.mul(x, c) == g.mul(c, x) && mu(x, c) != mu(c, x)) return false;
  return true;
}

void require_multiplier(const GroupPtr& h, const Cochain& mu) {
  if (mu.arity() != 2 || !same_group(mu.group(), h)) throw CochainError("multiplier must be a 2-cochain on the group");
  if (!is_cocycle(mu)) throw CochainError("multiplier is not a 2-cocycle");
}

}  // namespace

int count_proj_irreps(const GroupPtr& h, const Cochain& mu) {
  require_multiplier(h, mu);
  int count = 0;
  for (const auto& cls : conjugacy_classes(*h)) {
    const bool regular = is_regular(*h, mu, cls.front());
    for (int y : cls)
      if (is_regular(*h, mu, y) != regular)
        throw CochainError("internal error: μ-regularity is not constant on a conjugacy class");
    if (regular) ++count;
  }
  return count;
}

int twisted_center_dim(const GroupPtr& h, const Cochain& mu, int max_order) {
  if (h->order() > max_order) throw CochainError("twisted_center_dim: group exceeds the size cap");
  require_multiplier(h, mu);
  const GroupTable& g = *h;
  const int n = g.order();
  const unsigned level = static_cast<unsigned>(mu.level());
  auto scalar = [&](const UnitRoot& u) { return CycScalar::from_unit_root(u).lift(level); };

  // z = Σ a_x e_x is central iff z e_y = e_y z for every y. The coefficient
  // of e_w in z e_y - e_y z is a_{w y^-1} μ(w y^-1, y) - a_{y^-1 w} μ(y, y^-1 w).
  std::vector<std::vector<CycScalar>> basis;  // echelon rows
  std::vector<int> pivots;
  for (int y = 0; y < n && static_cast<int>(basis.size()) < n; ++y) {
    for (int w = 0; w < n && static_cast<int>(basis.size()) < n; ++w) {
      std::vector<CycScalar> row(n, CycScalar(level));
      const int left = g.mul(w, g.inv(y));
      const int right = g.mul(g.inv(y), w);
      row[left] += scalar(mu(left, y));
      row[right] += -scalar(mu(y, right));
      for (std::size_t b = 0; b < basis.size(); ++b) {
        const int p = pivots[b];
        if (row[p].is_zero()) continue;
        const CycScalar f = row[p];
        for (int k = 0; k < n; ++k)
          if (!basis[b][k].is_zero()) row[k] = row[k] - f * basis[b][k];
      }
      int lead = -1;
      for (int k = 0; k < n && lead < 0; ++k)
        if (!row[k].is_zero()) lead = k;
      if (lead < 0) continue;
      const CycScalar inv = row[lead].inverse();
      for (auto& v : row) v = v * inv;
      // keep earlier rows reduced at the new pivot
      for (auto& brow : basis) {
        if (brow[lead].is_zero()) continue;
        const CycScalar f = brow[lead];
        for (int k = 0; k < n; ++k)
          if (!row[k].is_zero()) brow[k] = brow[k] - f * row[k];
      }
      basis.push_back(std::move(row));
      pivots.push_back(lead);
    }
  }
  return n - static_cast<int>(basis.size());
}

std::vector<int> proj_irrep_degrees_abelian(const GroupPtr& a, const Cochain& mu) {
  if (!a->is_abelian()) throw CochainError("proj_irrep_degrees_abelian needs an abelian group");
  require_multiplier(a, mu);
  const int r = static_cast<int>(alt_form(mu).radical().size());
  const int sq = a->order() / r;
  const int d = static_cast<int>(std::lround(std::sqrt(static_cast<double>(sq))));
  if (a->order() % r != 0 || d * d != sq)
    throw CochainError("internal error: projective irrep degree is not an integer");
  return std::vector<int>(r, d);
}

ProjRepProfile proj_rep_profile(const GroupPtr& h, const Cochain& mu) {
  ProjRepProfile out{h, mu, count_proj_irreps(h, mu), std::nullopt};
  if (h->is_abelian()) out.degrees = proj_irrep_degrees_abelian(h, mu);
  return out;
}

nlohmann::json to_json(const ProjRepProfile& p) {
  nlohmann::json j{{"count", p.count}};
  j["degrees"] = p.degrees ? nlohmann::json(*p.degrees) : nlohmann::json(nullptr);
  return j;
}

}  // namespace fusionlab
