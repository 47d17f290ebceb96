#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "grouplat/subgroup_lattice.hpp"

namespace grouplat {

/// The three totient-type invariants of a subgroup interval [H, K]:
///   phi      = sum over J in [H,K] of mu(J,K) * |J:H|
///   phi_hat  = sum over J in [H,K] of mu(H,J) * |K:J|
///   chi      = -sum over J in [H,K] of mu(J,K) * |K:J|
struct TotientValues {
  std::int64_t phi = 0;
  std::int64_t phi_hat = 0;
  std::int64_t chi = 0;
};

/// Shape of a lattice, as reported alongside totients.
struct LatticeStats {
  int size = 0;
  int atom_count = 0;
  int coatom_count = 0;
  bool boolean = false;
  bool eulerian = false;
};

LatticeStats lattice_stats(const FinLattice& L);

/// Totients of the interval [h, k] of SL; the Möbius function is computed
/// within the interval sublattice (the definitions are interval-relative).
TotientValues interval_totients(const SubgroupLattice& SL, int h, int k);

/// Totients of [h, k] reusing a Möbius table of the full lattice. Equal to
/// interval_totients because mu only depends on the interval; this is the
/// shared-memoization route used by scans and chain searches.
TotientValues interval_totients(const SubgroupLattice& SL,
                                const MobiusTable& mu, int h, int k);

std::int64_t euler_totient(const SubgroupLattice& SL, int h, int k);
std::int64_t dual_euler_totient(const SubgroupLattice& SL, int h, int k);
std::int64_t euler_characteristic(const SubgroupLattice& SL, int h, int k);

/// Convenience forms on [H, G].
std::int64_t euler_totient(const SubgroupLattice& SL, int h);
std::int64_t dual_euler_totient(const SubgroupLattice& SL, int h);
std::int64_t euler_characteristic(const SubgroupLattice& SL, int h);

/// phi_hat over the normal subgroup lattice with its own Möbius function.
std::int64_t normal_dual_totient(const PermGroup& G,
                                 const GroupCaps& caps = {});

/// phi(h, k) must equal the number of cosets Hg in K with ⟨H, g⟩ = K.
bool hall_check(const SubgroupLattice& SL, int h, int k);
bool hall_check(const SubgroupLattice& SL, int h);

/// phi(1, G) = |Phi(G)| * phi(Phi(G), G), with Phi the Frattini subgroup
/// (the meet of the coatoms).
bool frattini_factorization_check(const SubgroupLattice& SL);

/// |G| / squarefree_part(|G:G'|) divides mu(1, G) (zero counts as divisible).
bool kratzer_thevenaz_check(const SubgroupLattice& SL);

enum class TotientVariant { phi, phi_hat };

/// Shortest chain 1 = H_0 < H_1 < ... < H_len = G with a nonzero totient on
/// every step, found by breadth-first search; neighbor order makes the
/// witness deterministic (smallest subgroup order, then member indices).
struct TotientChain {
  std::vector<int> nodes;  // lattice indices, bottom..top
  int length() const { return static_cast<int>(nodes.size()) - 1; }
};

TotientChain min_totient_chain(const SubgroupLattice& SL,
                               TotientVariant variant);

/// Some core-free H < G with nonzero dual totient, if one exists
/// (smallest in canonical order).
std::optional<int> corefree_dual_criterion(const SubgroupLattice& SL);

/// Report for one interval: identities plus lattice shape.
struct TotientReport {
  std::string group;
  int group_order = 0;
  std::string sub_label, top_label;
  int sub_order = 0, top_order = 0;
  TotientValues values;
  LatticeStats stats;
};

TotientReport make_totient_report(const SubgroupLattice& SL, int h, int k);

}  // namespace grouplat
