#include "grouplat/subgroup_lattice.hpp"

#include <algorithm>
#include <map>

#include "grouplat/errors.hpp"

namespace grouplat {

namespace {

std::vector<std::string> subgroup_labels(const PermGroup& G,
                                         const std::vector<Subgroup>& subs) {
  std::vector<std::string> labels;
  labels.reserve(subs.size());
  std::map<int, int> seen_of_order;
  for (const Subgroup& H : subs) {
    int k = ++seen_of_order[H.order()];
    if (H.is_trivial())
      labels.push_back("1");
    else if (H.is_whole_group())
      labels.push_back(G.name().empty() ? "G" : G.name());
    else
      labels.push_back("o" + std::to_string(H.order()) + "#" + std::to_string(k));
  }
  return labels;
}

}  // namespace

FinLattice from_subgroups(const PermGroup& G,
                          const std::vector<Subgroup>& subs) {
  GROUPLAT_CHECK(!subs.empty(), "no subgroups given");
  GROUPLAT_CHECK(std::is_sorted(subs.begin(), subs.end(), subgroup_less),
                 "subgroups must be in canonical order");
  const int n = static_cast<int>(subs.size());
  for (const Subgroup& H : subs)
    GROUPLAT_CHECK(&H.parent() == &G, "subgroup from a different group");

  std::map<std::vector<int>, int> index_of;
  for (int i = 0; i < n; ++i) index_of[subs[static_cast<size_t>(i)].members()] = i;

  std::vector<std::uint8_t> leq(static_cast<size_t>(n) * n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      leq[static_cast<size_t>(a) * n + b] =
          subs[static_cast<size_t>(b)].contains_all(subs[static_cast<size_t>(a)]);

  std::vector<int> payload(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) payload[static_cast<size_t>(i)] = i;

  FinLattice L = FinLattice::from_order(n, std::move(leq),
                                        subgroup_labels(G, subs),
                                        std::move(payload));

  // The order-derived meet/join must match intersection and generation; a
  // mismatch means `subs` was not meet/join-closed.
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      const auto& A = subs[static_cast<size_t>(a)].members();
      const auto& B = subs[static_cast<size_t>(b)].members();
      std::vector<int> inter;
      std::set_intersection(A.begin(), A.end(), B.begin(), B.end(),
                            std::back_inserter(inter));
      auto it = index_of.find(inter);
      if (it == index_of.end() || it->second != L.meet(a, b))
        fail_invariant("subgroup family is not intersection-closed");

      std::vector<int> seed = subs[static_cast<size_t>(a)].small_generating_set();
      const auto bgens = subs[static_cast<size_t>(b)].small_generating_set();
      seed.insert(seed.end(), bgens.begin(), bgens.end());
      Subgroup joined = generated_subgroup(G, seed);
      it = index_of.find(joined.members());
      if (it == index_of.end())
        fail_invariant("join of subgroups lands outside the family");
      GROUPLAT_CHECK(it->second == L.join(a, b),
                     "generated join disagrees with lattice join");
    }

  return L;
}

int SubgroupLattice::index_of(const std::vector<int>& members) const {
  auto cmp = [](const Subgroup& H, const std::vector<int>& m) {
    if (H.order() != static_cast<int>(m.size()))
      return H.order() < static_cast<int>(m.size());
    return H.members() < m;
  };
  auto it = std::lower_bound(subgroups.begin(), subgroups.end(), members, cmp);
  if (it == subgroups.end() || it->members() != members) return -1;
  return static_cast<int>(it - subgroups.begin());
}

SubgroupLattice build_subgroup_lattice(const PermGroup& G,
                                       const GroupCaps& caps) {
  SubgroupLattice SL;
  SL.group = &G;
  SL.subgroups = all_subgroups(G, caps);
  SL.lattice = from_subgroups(G, SL.subgroups);
  return SL;
}

}  // namespace grouplat
