#include "grouplat/subgroup.hpp"

#include <algorithm>
#include <cstdint>
#include <unordered_set>

#include "grouplat/errors.hpp"

namespace grouplat {

namespace {

// Element-index set as a packed bitmask; group orders here are at most a few
// thousand so this stays small.
struct Bitset {
  explicit Bitset(int n) : words((static_cast<size_t>(n) + 63) / 64, 0) {}
  std::vector<std::uint64_t> words;

  void set(int i) { words[static_cast<size_t>(i) >> 6] |= 1ULL << (i & 63); }
  bool test(int i) const {
    return (words[static_cast<size_t>(i) >> 6] >> (i & 63)) & 1;
  }
  void intersect(const Bitset& o) {
    for (size_t w = 0; w < words.size(); ++w) words[w] &= o.words[w];
  }
  friend bool operator==(const Bitset& a, const Bitset& b) = default;
};

std::vector<int> to_indices(const Bitset& b, int n) {
  std::vector<int> out;
  for (int i = 0; i < n; ++i)
    if (b.test(i)) out.push_back(i);
  return out;
}

struct VecHash {
  size_t operator()(const std::vector<int>& v) const {
    size_t h = v.size();
    for (int x : v) h = h * 1000003u + static_cast<size_t>(x) + 0x9e3779b9u;
    return h;
  }
};

// Orbit of the identity under right multiplication: the subgroup generated
// by `gens`, as sorted indices.
std::vector<int> orbit_closure(const PermGroup& G, std::span<const int> gens) {
  Bitset in(G.order());
  std::vector<int> list;
  in.set(0);
  list.push_back(0);
  for (size_t at = 0; at < list.size(); ++at) {
    for (int g : gens) {
      int next = G.mult(list[at], g);
      if (!in.test(next)) {
        in.set(next);
        list.push_back(next);
      }
    }
  }
  std::sort(list.begin(), list.end());
  return list;
}

std::vector<int> greedy_generators(const PermGroup& G,
                                   const std::vector<int>& members) {
  std::vector<int> gens;
  std::vector<int> closed{0};
  for (int x : members) {
    if (std::binary_search(closed.begin(), closed.end(), x)) continue;
    gens.push_back(x);
    closed = orbit_closure(G, gens);
    if (closed.size() == members.size()) break;
  }
  return gens;
}

}  // namespace

Subgroup::Subgroup(const PermGroup& parent, std::vector<int> members)
    : parent_(&parent), members_(std::move(members)) {
  GROUPLAT_CHECK(!members_.empty() && members_[0] == 0,
                 "subgroup must contain the identity");
  GROUPLAT_CHECK(std::is_sorted(members_.begin(), members_.end()),
                 "subgroup members must be sorted");
  for (int a : members_)
    for (int b : members_)
      GROUPLAT_CHECK(
          std::binary_search(members_.begin(), members_.end(),
                             parent.mult(a, b)),
          "subgroup members not closed under multiplication");
  GROUPLAT_CHECK(parent.order() % order() == 0,
                 "subgroup order must divide group order");
}

bool Subgroup::contains(int element_index) const {
  return std::binary_search(members_.begin(), members_.end(), element_index);
}

bool Subgroup::contains_all(const Subgroup& other) const {
  return std::includes(members_.begin(), members_.end(),
                       other.members_.begin(), other.members_.end());
}

std::vector<int> Subgroup::small_generating_set() const {
  return greedy_generators(*parent_, members_);
}

std::vector<int> Subgroup::order_profile() const {
  std::vector<int> profile;
  profile.reserve(members_.size());
  for (int m : members_) profile.push_back(parent_->element_order(m));
  std::sort(profile.begin(), profile.end());
  return profile;
}

bool subgroup_less(const Subgroup& a, const Subgroup& b) {
  if (a.order() != b.order()) return a.order() < b.order();
  return a.members() < b.members();
}

Subgroup generated_subgroup(const PermGroup& G, std::span<const int> seed) {
  for (int s : seed)
    GROUPLAT_CHECK(s >= 0 && s < G.order(), "seed element index out of range");
  return Subgroup(G, orbit_closure(G, seed));
}

std::vector<Subgroup> all_subgroups(const PermGroup& G, const GroupCaps& caps) {
  if (G.order() > caps.max_subgroup_group_order)
    throw CapExceeded("all_subgroups: group order " +
                      std::to_string(G.order()) + " exceeds cap " +
                      std::to_string(caps.max_subgroup_group_order));

  // Stage 1: all cyclic subgroups.
  std::unordered_set<std::vector<int>, VecHash> seen;
  std::vector<std::vector<int>> member_sets;   // discovered subgroups
  std::vector<std::vector<int>> generator_sets;
  for (int g = 0; g < G.order(); ++g) {
    int gens[1] = {g};
    std::vector<int> cyc = orbit_closure(G, gens);
    if (seen.insert(cyc).second) {
      member_sets.push_back(std::move(cyc));
      generator_sets.push_back({g});
    }
  }

  // Stage 2: close under pairwise join until a fixed point. Every pair is
  // visited once: pair (i, j) is handled when the later of the two is
  // processed.
  for (size_t current = 0; current < member_sets.size(); ++current) {
    for (size_t other = 0; other < current; ++other) {
      const auto& A = member_sets[current];
      const auto& B = member_sets[other];
      if (std::includes(A.begin(), A.end(), B.begin(), B.end()) ||
          std::includes(B.begin(), B.end(), A.begin(), A.end()))
        continue;
      std::vector<int> join_gens = generator_sets[current];
      join_gens.insert(join_gens.end(), generator_sets[other].begin(),
                       generator_sets[other].end());
      std::vector<int> joined = orbit_closure(G, join_gens);
      if (seen.insert(joined).second) {
        if (static_cast<int>(member_sets.size()) >= caps.max_subgroups)
          throw CapExceeded("subgroup count exceeds cap " +
                            std::to_string(caps.max_subgroups));
        generator_sets.push_back(greedy_generators(G, joined));
        member_sets.push_back(std::move(joined));
      }
    }
  }

  std::vector<Subgroup> result;
  result.reserve(member_sets.size());
  for (auto& members : member_sets) result.emplace_back(G, std::move(members));
  std::sort(result.begin(), result.end(), subgroup_less);
  return result;
}

std::vector<std::vector<int>> conjugacy_classes(const PermGroup& G) {
  const int n = G.order();
  std::vector<bool> assigned(static_cast<size_t>(n), false);
  std::vector<std::vector<int>> classes;
  for (int x = 0; x < n; ++x) {
    if (assigned[static_cast<size_t>(x)]) continue;
    Bitset in_class(n);
    std::vector<int> cls;
    for (int g = 0; g < n; ++g) {
      int conj = G.mult(G.mult(g, x), G.inverse(g));
      if (!in_class.test(conj)) {
        in_class.set(conj);
        cls.push_back(conj);
        assigned[static_cast<size_t>(conj)] = true;
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

namespace {
bool set_is_normal(const PermGroup& G, const std::vector<int>& members) {
  // Conjugation by generators suffices.
  for (int g : G.generator_indices()) {
    int ginv = G.inverse(g);
    for (int m : members) {
      int conj = G.mult(G.mult(g, m), ginv);
      if (!std::binary_search(members.begin(), members.end(), conj))
        return false;
    }
  }
  return true;
}
}  // namespace

std::vector<Subgroup> normal_subgroups(const PermGroup& G,
                                       const std::vector<Subgroup>& subs) {
  std::vector<Subgroup> result;
  for (const Subgroup& H : subs)
    if (set_is_normal(G, H.members())) result.push_back(H);
  return result;
}

std::vector<Subgroup> normal_subgroups(const PermGroup& G,
                                       const GroupCaps& caps) {
  return normal_subgroups(G, all_subgroups(G, caps));
}

std::vector<int> derived_of_members(const PermGroup& G,
                                    std::span<const int> members) {
  Bitset comm(G.order());
  std::vector<int> commutators;
  for (int x : members)
    for (int y : members) {
      int c = G.mult(G.mult(G.inverse(x), G.inverse(y)), G.mult(x, y));
      if (!comm.test(c)) {
        comm.set(c);
        commutators.push_back(c);
      }
    }
  return orbit_closure(G, commutators);
}

Subgroup derived_subgroup(const PermGroup& G) {
  std::vector<int> everything(static_cast<size_t>(G.order()));
  for (int i = 0; i < G.order(); ++i) everything[static_cast<size_t>(i)] = i;
  return Subgroup(G, derived_of_members(G, everything));
}

bool is_solvable(const PermGroup& G) {
  std::vector<int> current(static_cast<size_t>(G.order()));
  for (int i = 0; i < G.order(); ++i) current[static_cast<size_t>(i)] = i;
  while (current.size() > 1) {
    std::vector<int> next = derived_of_members(G, current);
    if (next.size() == current.size()) return false;  // perfect subgroup
    current = std::move(next);
  }
  return true;
}

Subgroup frattini_subgroup(const PermGroup& G,
                           const std::vector<Subgroup>& subs) {
  // Maximal subgroups: proper, with no proper subgroup strictly above.
  std::vector<const Subgroup*> maximal;
  for (const Subgroup& H : subs) {
    if (H.is_whole_group()) continue;
    bool covered = false;
    for (const Subgroup& K : subs) {
      if (K.is_whole_group() || K.order() <= H.order()) continue;
      if (K.contains_all(H)) {
        covered = true;
        break;
      }
    }
    if (!covered) maximal.push_back(&H);
  }
  if (maximal.empty()) {  // trivial group
    return Subgroup(G, {0});
  }
  std::vector<int> inter = maximal[0]->members();
  for (size_t i = 1; i < maximal.size(); ++i) {
    std::vector<int> next;
    std::set_intersection(inter.begin(), inter.end(),
                          maximal[i]->members().begin(),
                          maximal[i]->members().end(),
                          std::back_inserter(next));
    inter = std::move(next);
  }
  return Subgroup(G, std::move(inter));
}

Subgroup core(const PermGroup& G, const Subgroup& H) {
  const int n = G.order();
  Bitset result(n);
  for (int m : H.members()) result.set(m);
  for (int g = 0; g < n; ++g) {
    Bitset conj(n);
    int ginv = G.inverse(g);
    for (int m : H.members()) conj.set(G.mult(G.mult(g, m), ginv));
    result.intersect(conj);
  }
  return Subgroup(G, to_indices(result, n));
}

std::vector<int> center_elements(const PermGroup& G) {
  std::vector<int> result;
  for (int x = 0; x < G.order(); ++x) {
    bool central = true;
    for (int g : G.generator_indices())
      if (G.mult(x, g) != G.mult(g, x)) {
        central = false;
        break;
      }
    if (central) result.push_back(x);
  }
  return result;
}

long long coset_generator_count(const PermGroup& G, const Subgroup& H) {
  std::vector<int> everything(static_cast<size_t>(G.order()));
  for (int i = 0; i < G.order(); ++i) everything[static_cast<size_t>(i)] = i;
  return coset_generator_count(G, H, Subgroup(G, everything));
}

long long coset_generator_count(const PermGroup& G, const Subgroup& H,
                                const Subgroup& K) {
  GROUPLAT_CHECK(K.contains_all(H), "coset count needs H <= K");
  std::vector<int> h_gens = H.small_generating_set();
  std::vector<bool> covered(static_cast<size_t>(G.order()), false);
  long long count = 0;
  for (int g : K.members()) {
    if (covered[static_cast<size_t>(g)]) continue;
    // Right coset Hg.
    std::vector<int> coset;
    for (int h : H.members()) {
      int x = G.mult(h, g);
      covered[static_cast<size_t>(x)] = true;
      coset.push_back(x);
    }
    // ⟨H ∪ {x}⟩ must not depend on the representative x of Hg.
    int verdicts = 0;
    for (int x : coset) {
      std::vector<int> gens = h_gens;
      gens.push_back(x);
      bool generates = orbit_closure(G, gens) == K.members();
      verdicts += generates ? 1 : 0;
    }
    GROUPLAT_CHECK(verdicts == 0 || verdicts == static_cast<int>(coset.size()),
                   "coset generation verdict depends on the representative");
    if (verdicts > 0) ++count;
  }
  return count;
}

namespace {

// Searching only subsets that contain a conjugacy-class minimum is complete:
// conjugating a generating set moves any chosen member onto its class minimum
// and preserves generation.
bool find_generating_tuple(const PermGroup& G, int k, std::vector<int>& out) {
  const int n = G.order();
  if (k == 0) return n == 1;

  std::vector<int> class_mins;
  for (const auto& cls : conjugacy_classes(G))
    if (cls[0] != 0) class_mins.push_back(cls[0]);

  std::vector<int> chosen(static_cast<size_t>(k));
  for (int m : class_mins) {
    chosen[0] = m;
    // Remaining picks strictly increasing, skipping the distinguished member.
    auto rec = [&](auto&& self, int depth, int from) -> bool {
      if (depth == k) {
        if (orbit_closure(G, chosen).size() == static_cast<size_t>(n)) {
          out = chosen;
          return true;
        }
        return false;
      }
      for (int x = from; x < n; ++x) {
        if (x == m) continue;
        chosen[static_cast<size_t>(depth)] = x;
        if (self(self, depth + 1, x + 1)) return true;
      }
      return false;
    };
    if (rec(rec, 1, 1)) return true;
  }
  return false;
}

}  // namespace

int min_generating_size(const PermGroup& G) {
  return static_cast<int>(min_generating_tuple(G).size());
}

std::vector<int> min_generating_tuple(const PermGroup& G) {
  if (G.order() == 1) return {};
  for (int k = 1;; ++k) {
    std::vector<int> tuple;
    if (find_generating_tuple(G, k, tuple)) return tuple;
    GROUPLAT_CHECK(k <= G.order(), "no generating tuple found");
  }
}

}  // namespace grouplat
