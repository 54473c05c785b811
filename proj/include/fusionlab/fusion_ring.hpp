#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>
#include <json.hpp>

#include "fusionlab/group.hpp"

namespace fusionlab {

class FusionRingError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A based ring with simple labels 0..n-1 and sparse structure constants.
class FusionRing {
public:
  using Entry = std::array<int, 4>;  // x, y, z, N[x][y][z]

  /// Throws FusionRingError unless the unit, duality and associativity axioms hold.
  FusionRing(std::vector<std::string> labels, int unit, std::vector<int> dual, const std::vector<Entry>& entries);

  int size() const { return static_cast<int>(labels_.size()); }
  int unit() const { return unit_; }
  int dual(int x) const { return dual_[x]; }
  const std::string& label(int x) const { return labels_[x]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<int> find_label(const std::string& s) const;

  /// x ⊗ y as (z, multiplicity) pairs, z increasing.
  const std::vector<std::pair<int, int>>& product(int x, int y) const { return prod_[x * labels_.size() + y]; }
  int N(int x, int y, int z) const;
  std::vector<Entry> entries() const;

private:
  std::vector<std::string> labels_;
  int unit_;
  std::vector<int> dual_;
  std::vector<std::vector<std::pair<int, int>>> prod_;
};

/// Empty when all axioms hold, else a description of the first failure.
std::optional<std::string> check_ring_axioms(const FusionRing& r);

/// c * sqrt(radicand), radicand squarefree.
struct Surd {
  mpq_class coeff;
  long radicand = 1;
  double value() const;
  std::string str() const;
  bool operator==(const Surd& o) const { return coeff == o.coeff && radicand == o.radicand; }
};

struct FPDims {
  std::vector<double> dims;
  double total = 0;  // Σ d_x²
  /// Exact values, present only when every label has one and the
  /// eigen-equations hold exactly.
  std::optional<std::vector<Surd>> exact;
  /// max |d_x d_y - Σ N d_z|
  double max_residual = 0;
};

/// Frobenius-Perron dimensions by power iteration, with exact verification.
FPDims fp_dims(const FusionRing& r, double tol = 1e-9, int max_iter = 100000);

/// Labels A ∪ {m}: a⊗b = a+b, a⊗m = m⊗a = m, m⊗m = Σ a.
FusionRing ty_ring(const GroupPtr& a);

/// Group ring of g.
FusionRing group_ring(const GroupPtr& g);

/// An action of a group on a fusion ring by label permutations.
struct RingAction {
  FusionRing ring;
  GroupPtr group;
  std::vector<std::vector<int>> perm;  // perm[g][x]
};

std::optional<std::string> check_action(const RingAction& act);

/// Labels (x, g) with (x,g)(y,h) = (x · perm_g(y), gh).
FusionRing crossed_product_ring(const RingAction& act);

struct EquivariantSimple {
  std::vector<int> orbit;
  int stab_irrep_degree = 1;
  double fp_dim = 0;
  std::optional<long> integer_dim;
};

/// Simples of the equivariantization by the orbit-stabilizer rule with
/// untwisted stabilizer representations. Nonabelian stabilizers throw.
std::vector<EquivariantSimple> equivariantization_simples(const RingAction& act);

/// [[dim, count], ...] sorted by dim, for integer dimensions.
std::vector<std::pair<long, int>> dimension_profile(const std::vector<EquivariantSimple>& simples);

nlohmann::json to_json(const FusionRing& r);

}  // namespace fusionlab
