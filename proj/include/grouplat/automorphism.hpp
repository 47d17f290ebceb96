#pragma once

#include <string>
#include <vector>

#include "grouplat/group.hpp"

namespace grouplat {

/// An automorphism as a bijection on element indices.
struct Automorphism {
  std::vector<int> map;
};

/// All automorphisms of G, found by mapping a fixed generating tuple onto
/// candidate tuples of matching element orders and propagating along the
/// Cayley graph. Deterministic order: identity first, then by image vector.
std::vector<Automorphism> automorphism_group(const PermGroup& G,
                                             const GroupCaps& caps = {});

/// A semidirect product together with the homomorphism that produced it.
struct SemidirectProduct {
  PermGroup group;                 // realized on |N| + |H| points
  std::vector<int> generator_auts; // Aut(N) index per generator of H
  int hom_index = 0;               // 1-based position in enumeration order
};

/// One product per homomorphism H -> Aut(N), in a deterministic order that
/// starts with the trivial homomorphism (the direct product). Isomorphic
/// duplicates are not removed.
std::vector<SemidirectProduct> semidirect_products(const PermGroup& N,
                                                   const PermGroup& H,
                                                   const GroupCaps& caps = {});

}  // namespace grouplat
