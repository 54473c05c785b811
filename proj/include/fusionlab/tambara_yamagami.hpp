#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include <gmpxx.h>
#include <json.hpp>

#include "fusionlab/cochain.hpp"
#include "fusionlab/cyclotomic.hpp"
#include "fusionlab/fusion_ring.hpp"

namespace fusionlab {

class TYError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// (A, χ, τ) with χ symmetric nondegenerate and τ² |A| = 1, τ rational.
struct TYData {
  GroupPtr a;
  BilinearForm chi;
  mpq_class tau;
};

TYData make_ty_data(const GroupPtr& a, const BilinearForm& chi, const mpq_class& tau);

/// χ((x1,x2),(y1,y2)) = ξ^{x1 y2 + x2 y1} on (Z/p)².
BilinearForm canonical_hyperbolic_form(int p);

/// TY((Z/p)², canonical χ, sign/p).
TYData canonical_ty(int p, int tau_sign = 1);

/// The coordinate swap of (Z/p)² as an automorphism of ty.a.
GroupMorphism swap_automorphism(const TYData& ty);

struct Lagrangian {
  Subgroup subgroup;
  std::optional<Subgroup> complement;  // another Lagrangian L' with L ∩ L' = 0
};

std::vector<Lagrangian> lagrangian_subgroups(const TYData& ty);

/// F[(a,b,c)→d; e,f] with e ∈ a⊗b and f ∈ b⊗c. Admissible entries not
/// stored explicitly are 1.
class FSymbolTable {
public:
  using Key = std::array<int, 6>;  // a, b, c, d, e, f

  FSymbolTable(FusionRing ring, unsigned level);

  const FusionRing& ring() const { return ring_; }
  unsigned level() const { return level_; }
  bool admissible(const Key& k) const;
  /// nullptr when the sextuple is not admissible.
  const CycScalar* find(const Key& k) const;
  const CycScalar& at(const Key& k) const;
  /// Throws for inadmissible keys or a zero value.
  void set(const Key& k, const CycScalar& v);
  bool is_explicit(const Key& k) const { return entries_.count(pack(k)) != 0; }
  std::vector<Key> explicit_keys() const;

  static std::uint64_t pack(const Key& k);
  static Key unpack(std::uint64_t code);

private:
  FusionRing ring_;
  unsigned level_;
  CycScalar one_;
  std::unordered_map<std::uint64_t, CycScalar> entries_;
};

FSymbolTable f_symbols(const TYData& ty);

struct PentagonViolation {
  // outer labels a, b, c, d, target e; left tree f, g; right tree l, k
  std::array<int, 9> labels;
  std::string lhs;
  std::string rhs;
};

/// Every failing instance of the multiplicity-free pentagon identity.
/// Threads: `threads` if positive, else FUSIONLAB_THREADS, else 1.
std::vector<PentagonViolation> pentagon_check(const FSymbolTable& fs, int threads = 0);

nlohmann::json to_json(const PentagonViolation& v, const FusionRing& r);

/// Automorphisms of A = (Z/p)² preserving χ.
std::vector<GroupMorphism> aut_chi(const TYData& ty);

/// True iff relabeling by g (with m fixed) leaves the F-symbols unchanged.
bool action_invariance_check(const TYData& ty, const GroupMorphism& g);
bool action_invariance_check(const FSymbolTable& fs, const GroupMorphism& g);

struct TYModCatDescriptor {
  enum class Kind { lagrangian, full };
  Kind kind;
  std::optional<Subgroup> subgroup;
  std::optional<int> mu_class;
  bool operator==(const TYModCatDescriptor& o) const;
};

std::string describe(const TYModCatDescriptor& d);
nlohmann::json to_json(const TYModCatDescriptor& d);

/// H² class of μ'(x,y) = μ(ι(x), ι(y))^{-1}, where Alt(μ)(x, ι(a)) = χ(x, a).
int companion_class(const TYData& ty, const Cochain& mu);

/// ι_μ itself; throws TYError when Alt(μ) is degenerate.
GroupMorphism companion_iota(const TYData& ty, const Cochain& mu);

/// Lagrangian descriptors followed by the self-companion full-kind classes.
std::vector<TYModCatDescriptor> pointed_ty_modcats(const TYData& ty);

struct ModCatPermutation {
  std::vector<TYModCatDescriptor> descriptors;
  std::vector<int> image;
  std::vector<int> fixed_points;
};

ModCatPermutation t_permutation_on_modcats(const TYData& ty, const GroupMorphism& t);

/// Z/2 acting on the TY ring through t (t² = id), m fixed.
RingAction ty_ring_action(const TYData& ty, const GroupMorphism& t);

struct Verdict {
  int p = 0;
  bool group_theoretical = false;
  ModCatPermutation permutation;
  std::vector<std::pair<long, int>> dimension_profile;
  long fpdim_total = 0;
  std::optional<int> pentagon_violations;
};

Verdict group_theoretical_verdict(const TYData& ty, const GroupMorphism& t,
                                  std::optional<int> pentagon_violations = std::nullopt);

nlohmann::json to_json(const Verdict& v);

}  // namespace fusionlab
