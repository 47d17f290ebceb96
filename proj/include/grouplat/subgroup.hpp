#pragma once

#include <span>
#include <vector>

#include "grouplat/group.hpp"

namespace grouplat {

/// A subgroup of a parent PermGroup, stored as sorted element indices.
/// The parent must outlive the subgroup.
class Subgroup {
 public:
  /// `members` must be sorted, contain 0 (identity) and be closed under the
  /// parent's multiplication; closure is checked.
  Subgroup(const PermGroup& parent, std::vector<int> members);

  const PermGroup& parent() const { return *parent_; }
  int order() const { return static_cast<int>(members_.size()); }
  const std::vector<int>& members() const { return members_; }
  bool contains(int element_index) const;
  bool contains_all(const Subgroup& other) const;

  /// Greedy small generating set (element indices), deterministic.
  std::vector<int> small_generating_set() const;

  /// Sorted multiset of member element orders.
  std::vector<int> order_profile() const;

  bool is_whole_group() const { return order() == parent_->order(); }
  bool is_trivial() const { return order() == 1; }

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.parent_ == b.parent_ && a.members_ == b.members_;
  }

 private:
  const PermGroup* parent_;
  std::vector<int> members_;
};

/// Canonical order: by (order, member indices lexicographically).
bool subgroup_less(const Subgroup& a, const Subgroup& b);

/// Smallest subgroup containing the seed elements.
Subgroup generated_subgroup(const PermGroup& G, std::span<const int> seed);

/// Every subgroup of G, exactly once, in canonical order. Generates all
/// cyclic subgroups and then closes the collection under pairwise join.
std::vector<Subgroup> all_subgroups(const PermGroup& G,
                                    const GroupCaps& caps = {});
// Subgroups keep a pointer to G: temporaries would dangle.
std::vector<Subgroup> all_subgroups(PermGroup&&, const GroupCaps& = {}) = delete;

/// Partition of element indices into conjugacy classes, each sorted, ordered
/// by smallest member (identity class {0} first).
std::vector<std::vector<int>> conjugacy_classes(const PermGroup& G);

std::vector<Subgroup> normal_subgroups(const PermGroup& G,
                                       const std::vector<Subgroup>& subs);
std::vector<Subgroup> normal_subgroups(const PermGroup& G,
                                       const GroupCaps& caps = {});

/// Commutator subgroup ⟨x⁻¹y⁻¹xy⟩.
Subgroup derived_subgroup(const PermGroup& G);

/// Derived subgroup of an arbitrary member set (used for derived series).
std::vector<int> derived_of_members(const PermGroup& G,
                                    std::span<const int> members);

/// True iff the derived series reaches the trivial subgroup.
bool is_solvable(const PermGroup& G);

/// Intersection of the maximal subgroups (the whole group if none).
Subgroup frattini_subgroup(const PermGroup& G, const std::vector<Subgroup>& subs);

/// Largest normal subgroup of G inside H: the intersection of all conjugates.
Subgroup core(const PermGroup& G, const Subgroup& H);

/// Elements commuting with everything.
std::vector<int> center_elements(const PermGroup& G);

/// Number of right cosets Hg with ⟨H ∪ {g}⟩ = G. Representative independence
/// is asserted: every member of a coset must give the same verdict.
long long coset_generator_count(const PermGroup& G, const Subgroup& H);

/// Same count relative to an overgroup K of H: cosets Hg ⊆ K with
/// ⟨H ∪ {g}⟩ = K.
long long coset_generator_count(const PermGroup& G, const Subgroup& H,
                                const Subgroup& K);

/// Smallest k such that some k elements generate G; 0 for the trivial group.
int min_generating_size(const PermGroup& G);

/// One minimal generating tuple (deterministic; witnesses min_generating_size).
std::vector<int> min_generating_tuple(const PermGroup& G);

}  // namespace grouplat
