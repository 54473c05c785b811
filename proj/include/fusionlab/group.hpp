#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace fusionlab {

class GroupTable;
using GroupPtr = std::shared_ptr<const GroupTable>;

/// Thrown when a group construction or query receives invalid input.
class GroupError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Default cap on the group order accepted by subgroup enumeration.
inline constexpr int kMaxGroupOrder = 2000;

/// A finite group stored as an explicit multiplication table.
///
/// Elements are the indices 0..order-1. A table built from a subgroup of
/// another group remembers that embedding (`parent()` / `to_parent()`),
/// which is how cochains on subgroups find their way back to the ambient
/// group for conjugation and restriction.
class GroupTable {
public:
  GroupTable(std::vector<std::vector<int>> mult, std::vector<std::string> labels);

  int order() const { return static_cast<int>(mult_.size()); }
  int identity() const { return identity_; }
  int mul(int x, int y) const { return mult_[x][y]; }
  int inv(int x) const { return inv_[x]; }
  const std::string& label(int x) const { return labels_[x]; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<std::vector<int>>& mult() const { return mult_; }

  int conj(int g, int x) const { return mul(mul(g, x), inv(g)); }
  int element_order(int x) const;
  int exponent() const;
  bool is_abelian() const;

  /// Index of the element carrying `label`, if any.
  std::optional<int> find_label(const std::string& label) const;

  const GroupPtr& parent() const { return parent_; }
  /// Parent index of local element x (identity map when there is no parent).
  int to_parent(int x) const { return parent_ ? parent_index_[x] : x; }
  std::span<const int> parent_indices() const { return parent_index_; }
  /// Local index of a parent element, if it lies in this subgroup.
  std::optional<int> from_parent(int x) const;

  /// Exhaustive associativity check (sampled above 256 elements).
  bool is_associative(unsigned seed = 0) const;

  /// Same table, ignoring labels and embeddings.
  bool same_table(const GroupTable& other) const { return mult_ == other.mult_; }

private:
  friend class Subgroup;
  std::vector<std::vector<int>> mult_;
  std::vector<int> inv_;
  std::vector<std::string> labels_;
  int identity_ = 0;
  GroupPtr parent_;
  std::vector<int> parent_index_;
};

/// True when two pointers denote the same group (identical pointer or table).
bool same_group(const GroupPtr& a, const GroupPtr& b);

/// A subgroup of a parent table, members kept sorted.
class Subgroup {
public:
  /// Validates closure; throws GroupError if `members` is not a subgroup.
  Subgroup(GroupPtr parent, std::vector<int> members);

  /// The subgroup generated by `gens`.
  static Subgroup generated(GroupPtr parent, std::span<const int> gens);
  static Subgroup whole(GroupPtr parent);
  static Subgroup trivial(GroupPtr parent);

  const GroupPtr& parent() const { return parent_; }
  const std::vector<int>& members() const { return members_; }
  int order() const { return static_cast<int>(members_.size()); }
  bool contains(int x) const;

  /// The subgroup as a standalone table whose element i is members()[i].
  GroupPtr as_group() const;

  bool operator==(const Subgroup& other) const { return members_ == other.members_; }

private:
  GroupPtr parent_;
  std::vector<int> members_;
  mutable GroupPtr local_;
};

/// A homomorphism given by the image of every element.
struct GroupMorphism {
  GroupPtr source;
  GroupPtr target;
  std::vector<int> image;

  int operator()(int x) const { return image[x]; }
  bool is_homomorphism() const;
  bool is_bijective() const;
  bool is_automorphism() const { return same_group(source, target) && is_bijective() && is_homomorphism(); }
  bool is_identity() const;
  GroupMorphism compose(const GroupMorphism& after) const;
  GroupMorphism inverse() const;
};

GroupPtr make_cyclic(int n);
GroupPtr make_dihedral(int two_p);
GroupPtr make_direct_product(const GroupTable& g, const GroupTable& h);
/// Semidirect product n ⋊ h where h acts on n through `act` (one automorphism
/// of n per element of h). Elements are pairs (a, x) with
/// (a, x)(b, y) = (a · act[x](b), x y).
GroupPtr make_semidirect(const GroupPtr& n, const GroupPtr& h, const std::vector<GroupMorphism>& act);

std::vector<Subgroup> subgroups(const GroupPtr& g, int max_order = kMaxGroupOrder);
std::vector<Subgroup> normal_abelian_subgroups(const GroupPtr& g, int max_order = kMaxGroupOrder);

bool is_normal(const GroupPtr& g, const Subgroup& h);
bool is_abelian(const Subgroup& h);
Subgroup conjugate_subgroup(const GroupPtr& g, const Subgroup& h, int x);
Subgroup centralizer(const GroupPtr& g, int x);
Subgroup intersect(const Subgroup& a, const Subgroup& b);
std::vector<std::vector<int>> conjugacy_classes(const GroupTable& g);
/// Two-sided cosets h1·x·h2, each sorted, ordered by smallest member.
std::vector<std::vector<int>> double_cosets(const GroupPtr& g, const Subgroup& h1, const Subgroup& h2);

/// A small generating set, chosen greedily in index order.
std::vector<int> generating_set(const GroupTable& g);

/// Conjugation by x as an automorphism of g.
GroupMorphism inner_automorphism(const GroupPtr& g, int x);

/// All automorphisms of (Z/p)^2 = make_direct_product(Z/p, Z/p), one per
/// invertible 2x2 matrix over Z/p acting on coordinate column vectors.
std::vector<GroupMorphism> automorphisms_rank2_elementary(int p);
/// The automorphism of (Z/p)^2 given by the matrix [[a, b], [c, d]].
GroupMorphism rank2_matrix_automorphism(const GroupPtr& a, int p, int m00, int m01, int m10, int m11);

bool is_prime(long n);

nlohmann::json to_json(const GroupTable& g);
nlohmann::json to_json(const Subgroup& h);

}  // namespace fusionlab
