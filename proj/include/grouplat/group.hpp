#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "grouplat/perm.hpp"

namespace grouplat {

/// Resource caps guarding group construction and enumeration.
struct GroupCaps {
  long long max_order = 20000;          // element-closure cap
  int max_degree = 10000;               // permutation degree cap
  int max_subgroups = 10000;            // all_subgroups result cap
  int max_subgroup_group_order = 1024;  // all_subgroups input cap
  int max_aut_group_order = 64;         // automorphism_group input cap
};

/// A finite group realized as permutations, with all elements enumerated.
///
/// Elements are stored in lexicographic order of their image vectors, which
/// puts the identity at index 0. Immutable after construction; safe to share
/// read-only across threads.
class PermGroup {
 public:
  PermGroup() = default;

  /// Smallest multiplication-closed set containing `gens` and the identity,
  /// with multiplication/inversion tables filled in.
  static PermGroup close_generators(int degree, std::vector<Perm> gens,
                                    std::string name = {},
                                    const GroupCaps& caps = {});

  int degree() const { return degree_; }
  int order() const { return static_cast<int>(elements_.size()); }
  const std::vector<Perm>& elements() const { return elements_; }
  const Perm& element(int i) const { return elements_[static_cast<size_t>(i)]; }

  /// Index of element(i) * element(j) (element(j) acts first).
  int mult(int i, int j) const {
    if (!mult_table_.empty())
      return mult_table_[static_cast<size_t>(i) * elements_.size() +
                         static_cast<size_t>(j)];
    return mult_slow(i, j);
  }

  int inverse(int i) const { return inverse_[static_cast<size_t>(i)]; }
  int element_order(int i) const { return orders_[static_cast<size_t>(i)]; }

  /// Index of `p` in the canonical element order, or -1 if not a member.
  int index_of(const Perm& p) const;

  /// Indices of the generators this group was built from.
  const std::vector<int>& generator_indices() const { return gen_indices_; }

  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  /// True iff some element has order |G|.
  bool is_cyclic() const;

  /// Sorted multiset of element orders; a cheap isomorphism fingerprint.
  std::vector<int> order_profile() const;

 private:
  int mult_slow(int i, int j) const;

  int degree_ = 0;
  std::string name_;
  std::vector<Perm> elements_;
  std::vector<int> gen_indices_;
  std::vector<std::uint16_t> inverse_;
  std::vector<std::uint16_t> orders_;
  std::vector<std::uint16_t> mult_table_;  // empty above kEagerMultTableLimit
};

}  // namespace grouplat
