#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>
#include <json.hpp>

#include "fusionlab/group.hpp"

namespace fusionlab {

class CochainError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A root of unity exp(2πi q) stored as its exponent q ∈ [0, 1), in lowest terms.
///
/// Scalar multiplication in k^× is addition of exponents, so UnitRoot is an
/// additive type: `a + b` is the product of the two roots and `-a` the inverse.
class UnitRoot {
public:
  UnitRoot() = default;
  explicit UnitRoot(mpq_class q);
  UnitRoot(long num, unsigned long den) : UnitRoot(mpq_class(num, den)) {}

  const mpq_class& exponent() const { return q_; }
  bool is_one() const { return q_ == 0; }
  /// Denominator of the exponent, i.e. the order of the root.
  unsigned long order() const { return q_.get_den().get_ui(); }

  UnitRoot operator+(const UnitRoot& o) const { return UnitRoot(q_ + o.q_); }
  UnitRoot operator-(const UnitRoot& o) const { return UnitRoot(q_ - o.q_); }
  UnitRoot operator-() const { return UnitRoot(-q_); }
  UnitRoot& operator+=(const UnitRoot& o);
  UnitRoot& operator-=(const UnitRoot& o);
  UnitRoot times(long k) const { return UnitRoot(q_ * k); }

  bool operator==(const UnitRoot& o) const { return q_ == o.q_; }
  bool operator<(const UnitRoot& o) const { return q_ < o.q_; }

  /// "num/den", always with an explicit denominator.
  std::string str() const;
  static UnitRoot parse(const std::string& s);

private:
  void wrap();
  mpq_class q_{0};
};

/// A normalized n-cochain (n = 1, 2, 3) on a finite group with values in
/// roots of unity, stored row-major over group^arity.
class Cochain {
public:
  using Fn1 = std::function<UnitRoot(int)>;
  using Fn2 = std::function<UnitRoot(int, int)>;
  using Fn3 = std::function<UnitRoot(int, int, int)>;

  static Cochain trivial(GroupPtr group, int arity);
  /// Entries with an identity argument are forced to 1 (exponent 0).
  static Cochain from_values(GroupPtr group, int arity, std::vector<UnitRoot> values);
  static Cochain from_function(GroupPtr group, Fn1 f);
  static Cochain from_function(GroupPtr group, Fn2 f);
  static Cochain from_function(GroupPtr group, Fn3 f);

  const GroupPtr& group() const { return group_; }
  int arity() const { return arity_; }
  const std::vector<UnitRoot>& values() const { return values_; }

  const UnitRoot& operator()(int x) const { return values_[x]; }
  const UnitRoot& operator()(int x, int y) const { return values_[static_cast<std::size_t>(x) * n_ + y]; }
  const UnitRoot& operator()(int x, int y, int z) const {
    return values_[(static_cast<std::size_t>(x) * n_ + y) * n_ + z];
  }

  bool is_trivial() const;
  /// Least common multiple of the exponent denominators.
  unsigned long level() const;

  Cochain operator+(const Cochain& o) const;
  Cochain operator-(const Cochain& o) const;
  Cochain operator-() const;
  bool operator==(const Cochain& o) const;

  /// Pullback along an automorphism phi of the group: (phi^*c)(x, ...) = c(phi x, ...).
  Cochain pullback(const GroupMorphism& phi) const;

private:
  Cochain(GroupPtr group, int arity, std::vector<UnitRoot> values);
  void normalize();

  GroupPtr group_;
  int arity_ = 0;
  std::size_t n_ = 0;
  std::vector<UnitRoot> values_;
};

/// A k^×-valued form A × A → k^× on an abelian group.
class BilinearForm {
public:
  BilinearForm(GroupPtr group, std::vector<UnitRoot> values);
  static BilinearForm from_function(GroupPtr group, const std::function<UnitRoot(int, int)>& f);

  const GroupPtr& group() const { return group_; }
  const UnitRoot& operator()(int x, int y) const { return values_[static_cast<std::size_t>(x) * n_ + y]; }
  const std::vector<UnitRoot>& values() const { return values_; }

  bool is_bimultiplicative() const;
  bool is_symmetric() const;
  bool is_alternating() const;
  /// Elements a with form(a, ·) ≡ 1.
  std::vector<int> radical() const;
  bool is_nondegenerate() const { return radical().size() == 1; }
  /// True when form(phi x, phi y) = form(x, y) for all x, y.
  bool preserved_by(const GroupMorphism& phi) const;
  bool operator==(const BilinearForm& o) const { return values_ == o.values_; }

private:
  GroupPtr group_;
  std::size_t n_ = 0;
  std::vector<UnitRoot> values_;
};

Cochain coboundary(const Cochain& c);
bool is_cocycle(const Cochain& c);

/// A cochain nu with coboundary(nu) = c, for c of arity 2 or 3, or nullopt.
std::optional<Cochain> coboundary_preimage(const Cochain& c);

/// A 1-cochain nu with coboundary(nu) = c1 - c2, or nullopt when the classes differ.
std::optional<Cochain> cohomologous(const Cochain& c1, const Cochain& c2);

/// The subgroup of `ambient` that c's group is embedded as.
Subgroup embedded_subgroup(const Cochain& c, const GroupPtr& ambient);

Cochain restrict(const Cochain& c, const Subgroup& h);
/// Restriction of an arity-2 cochain on a subgroup to a smaller subgroup of the same ambient group.
Cochain restrict_to(const Cochain& c, const Subgroup& h);
/// The g-conjugate of c, living on g H g^{-1}: (g c)(x, y) = c(g^{-1} x g, g^{-1} y g).
Cochain conj_transport(const Cochain& c, int g);

/// The cocycle μ^g on H1 ∩ g H2 g^{-1} attached to a double coset of (H1, H2)
/// in `ambient`. `omega` may be null for the trivial 3-cocycle.
Cochain twisted_intersection_cocycle(const GroupPtr& ambient, const Cochain& mu1, const Cochain& mu2,
                                     const Cochain* omega, int g);

/// Alt(μ)(x, y) = μ(y, x) μ(x, y)^{-1}.
BilinearForm alt_form(const Cochain& mu);

/// Coordinates of an abelian group of rank <= 2 as Z/m × Z/n with m | n.
///
/// e2 is the lowest-index element of maximal order n and e1 the lowest-index
/// element completing it to a basis, so that for A = Z/p × Z/p built by
/// make_direct_product the coordinates (x1, x2) agree with the labels.
struct Rank2Basis {
  int m = 1;
  int n = 1;
  int e1 = 0;
  int e2 = 0;
  std::vector<std::pair<int, int>> coords;  // element -> (x1 mod m, x2 mod n)
};

/// nullopt for nonabelian groups or abelian groups of rank > 2.
std::optional<Rank2Basis> rank2_basis(const GroupTable& a);

/// μ_c(x, y) = exp(2πi c x2 y1 / m) in the coordinates of rank2_basis.
Cochain canonical_cocycle(const GroupPtr& a, int c);

/// One cocycle per class of H²(A, k^×), indexed by c = 0..m-1.
std::vector<Cochain> h2_representatives(const GroupPtr& a);

/// Index of the representative cohomologous to mu (verified with a witness).
int h2_class_index(const Cochain& mu, const std::vector<Cochain>& reps);

bool is_invariant_class(const Cochain& mu, const std::vector<GroupMorphism>& action);
bool is_nondegenerate(const Cochain& mu);

nlohmann::json to_json(const Cochain& c);
nlohmann::json to_json(const BilinearForm& b);
Cochain cochain_from_json(const GroupPtr& group, const nlohmann::json& j);

}  // namespace fusionlab
