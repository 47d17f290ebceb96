#pragma once

#include <vector>

#include "grouplat/lattice.hpp"
#include "grouplat/subgroup.hpp"

namespace grouplat {

/// Lattice of subgroups ordered by inclusion: meet = intersection,
/// join = generated subgroup. Works for the complete subgroup collection or
/// any meet/join-closed subfamily (e.g. the normal subgroups).
///
/// Lattice element i corresponds to subgroups[i]; elements are labeled
/// "1" (trivial), the group name (whole group), or "o<order>#<k>" with k
/// counting subgroups of equal order in canonical order.
FinLattice from_subgroups(const PermGroup& G, const std::vector<Subgroup>& subs);

/// A group bundled with its full subgroup lattice.
struct SubgroupLattice {
  const PermGroup* group = nullptr;
  std::vector<Subgroup> subgroups;  // canonical order: (order, members)
  FinLattice lattice;               // payload(i) == i

  const PermGroup& G() const { return *group; }
  const Subgroup& subgroup(int i) const {
    return subgroups[static_cast<size_t>(i)];
  }
  int order_of(int i) const { return subgroup(i).order(); }
  int trivial_index() const { return lattice.bottom(); }
  int whole_index() const { return lattice.top(); }

  /// Index of a subgroup with exactly these members; -1 if absent.
  int index_of(const std::vector<int>& members) const;
};

SubgroupLattice build_subgroup_lattice(const PermGroup& G,
                                       const GroupCaps& caps = {});
// The lattice keeps a pointer to G: temporaries would dangle.
SubgroupLattice build_subgroup_lattice(PermGroup&&,
                                       const GroupCaps& = {}) = delete;

}  // namespace grouplat
