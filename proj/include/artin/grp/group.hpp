#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "artin/grp/perm.hpp"

namespace artin::grp {

using Elem = std::uint32_t;
using ClassId = std::uint32_t;

inline constexpr std::size_t kConstructionCap = 50000;
inline constexpr std::size_t kTableCap = 5000;

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

struct ConjugacyData {
  std::size_t class_count = 0;
  std::vector<ClassId> class_of;
  std::vector<Elem> representatives;
  std::vector<std::size_t> class_sizes;
  std::vector<unsigned> rep_orders;
  std::vector<ClassId> inverse_class;
};

/// An explicit finite group on element indices 0..order-1, identity 0.
///
/// Elements are numbered breadth-first from the identity using right
/// multiplication by the generators in the order given, so every derived
/// artifact is reproducible. Groups up to kTableCap carry a full
/// multiplication table; larger permutation groups multiply by composing
/// permutations.
class FiniteGroup {
 public:
  using RawProduct = std::function<std::size_t(std::size_t, std::size_t)>;

  static GroupPtr from_generators(std::size_t degree, const std::vector<Perm>& gens,
                                  std::string label, std::size_t cap = kConstructionCap);

  // Builds a group from a product on raw labels 0..n-1 (raw identity 0).
  // With canonical = true the elements are renumbered breadth-first from
  // the generators; relabel (if given) receives raw -> canonical.
  static GroupPtr from_product(std::size_t n, const RawProduct& product,
                               const std::vector<std::size_t>& raw_gens, std::string label,
                               bool canonical, std::vector<std::string> raw_names = {},
                               std::vector<Elem>* relabel = nullptr);

  std::size_t order() const { return order_; }
  const std::string& label() const { return label_; }
  const std::vector<Elem>& generators() const { return gens_; }

  Elem product(Elem a, Elem b) const {
    if (!table_.empty()) return table_[static_cast<std::size_t>(a) * order_ + b];
    return perm_product(a, b);
  }
  Elem inverse(Elem a) const { return inverse_[a]; }
  Elem power(Elem a, long k) const;
  Elem conjugate(Elem x, Elem g) const { return product(product(inverse(g), x), g); }
  Elem commutator(Elem a, Elem b) const {
    return product(product(inverse(a), inverse(b)), product(a, b));
  }
  unsigned element_order(Elem a) const { return orders_[a]; }
  unsigned exponent() const { return exponent_; }

  bool has_table() const { return !table_.empty(); }
  bool has_perms() const { return !perms_.empty(); }
  std::size_t degree() const { return degree_; }
  const Perm& perm(Elem a) const { return perms_[a]; }
  std::optional<Elem> find(const Perm& p) const;

  std::string element_name(Elem a) const;

  const ConjugacyData& classes() const { return classes_; }
  std::size_t class_count() const { return classes_.class_count; }
  ClassId class_of(Elem a) const { return classes_.class_of[a]; }
  ClassId power_class(ClassId c, long k) const {
    return classes_.class_of[power(classes_.representatives[c], k)];
  }
  bool is_abelian() const;

 private:
  FiniteGroup() = default;
  Elem perm_product(Elem a, Elem b) const;
  void finish();  // inverses, orders, exponent, classes
  void compute_classes();

  std::size_t order_ = 0;
  std::string label_;
  std::vector<Elem> gens_;
  std::vector<std::uint16_t> table_;
  std::vector<Elem> inverse_;
  std::vector<unsigned> orders_;
  unsigned exponent_ = 1;
  std::size_t degree_ = 0;
  std::vector<Perm> perms_;
  std::unordered_map<Perm, Elem, PermHash> perm_index_;
  std::vector<std::string> names_;
  ConjugacyData classes_;
};

/// A subgroup of `parent`, with its own intrinsic FiniteGroup whose element i
/// is members[i] (members sorted ascending, so element 0 is the identity).
struct Subgroup {
  GroupPtr parent;
  std::vector<Elem> members;
  std::vector<Elem> generators;  // parent indices
  bool is_normal = false;
  std::size_t index = 0;
  GroupPtr group;
  std::vector<std::int32_t> local;  // parent element -> member position or -1

  std::size_t order() const { return members.size(); }
  bool contains(Elem g) const { return local[g] >= 0; }
  Elem embed(Elem local_elem) const { return members[local_elem]; }
  Elem to_local(Elem g) const { return static_cast<Elem>(local[g]); }
};

/// Checks closure and builds the subgroup; throws if `members` is not a subgroup.
Subgroup make_subgroup(const GroupPtr& parent, std::vector<Elem> members);
Subgroup whole_group(const GroupPtr& g);
Subgroup trivial_subgroup(const GroupPtr& g);
Subgroup generated_subgroup(const GroupPtr& g, const std::vector<Elem>& gens);
std::vector<Elem> closure(const FiniteGroup& g, const std::vector<Elem>& gens);
std::vector<Elem> normal_closure(const FiniteGroup& g, const std::vector<Elem>& gens);

/// A subgroup of `inner.group`, re-expressed as a subgroup of inner.parent.
/// The intrinsic group is shared, so class functions carry over unchanged.
Subgroup lift_subgroup(const Subgroup& sub_of_inner, const Subgroup& inner);

/// Positions in `outer` (local indices) of the elements of `inner`; both
/// subgroups of the same parent, inner contained in outer.
std::vector<Elem> inclusion_map(const Subgroup& inner, const Subgroup& outer);

bool is_subgroup_of(const Subgroup& a, const Subgroup& b);
Subgroup conjugate_subgroup(const Subgroup& h, Elem g);

std::vector<Subgroup> derived_series(const GroupPtr& g);
Subgroup derived_subgroup(const Subgroup& h);
bool is_solvable(const GroupPtr& g);
Subgroup center(const GroupPtr& g);

/// Complete list of subgroups of index k (k <= 8), by enumerating transitive
/// actions on k points.
std::vector<Subgroup> subgroups_of_index(const GroupPtr& g, std::size_t k);
/// Index-2 subgroups from the mod-2 abelianization; the cross-check route.
std::vector<Subgroup> index_two_subgroups_abelian(const GroupPtr& g);
/// Every subgroup, by joining cyclic subgroups. Intended for small groups.
std::vector<Subgroup> all_subgroups(const GroupPtr& g);

std::optional<Subgroup> hall_subgroup(const GroupPtr& g, const std::set<unsigned>& primes);

struct Quotient {
  GroupPtr group;
  std::vector<Elem> projection;
};
Quotient quotient_by_normal(const GroupPtr& g, const Subgroup& n);

GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b);
/// (A x B) / {(c, phi(c)^-1)} for the central identification given as pairs
/// (c in A, phi(c) in B).
/// pair_map (if given) receives, at index x * |B| + y, the element (x, y).
GroupPtr amalgamated_central_product(const GroupPtr& a, const GroupPtr& b,
                                     const std::vector<std::pair<Elem, Elem>>& identification,
                                     std::vector<Elem>* pair_map = nullptr);

/// The subgroup as a group in its own right, numbered canonically from its
/// generators; to_parent (if given) receives new element -> parent element.
GroupPtr as_group(const Subgroup& h, std::string label, std::vector<Elem>* to_parent = nullptr);

/// An isomorphism a -> b as the images of all elements of a, if one exists.
/// Searches images of a's generators; intended for small groups.
std::optional<std::vector<Elem>> find_isomorphism(const FiniteGroup& a, const FiniteGroup& b);

std::vector<unsigned> prime_factors(std::size_t n);

}  // namespace artin::grp
