#pragma once

#include <string>

#include "grouplat/group.hpp"

namespace grouplat {

/// Parses the group-spec mini-language and returns the fully enumerated group.
///
/// Accepted forms:
///   C<n>                cyclic of order n, rotation on n points
///   D<m>                dihedral of order m (m even, m >= 6), on m/2 points
///   S<n>, A<n>          symmetric / alternating, natural action
///   Q8                  quaternion group, regular action on 8 points
///   M16                 modular maximal-cyclic group of order 16,
///                       ⟨a,b | a^8 = b^2 = 1, b a b⁻¹ = a^5⟩, regular action
///   X x Y               direct product (spaces optional, e.g. "C2xC2")
///   sd:<N>:<H>:<k>      k-th (1-based) semidirect product N ⋊ H in the
///                       deterministic homomorphism enumeration order
///   perm:<deg>:<gens>   explicit generators as 1-based cycles, e.g.
///                       "perm:3:(1 2 3),(1 2)"; ',' separates generators
PermGroup parse_group_spec(const std::string& text, const GroupCaps& caps = {});

}  // namespace grouplat
