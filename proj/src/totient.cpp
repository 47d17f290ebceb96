#include "grouplat/totient.hpp"

#include <algorithm>
#include <deque>

#include "grouplat/numeric.hpp"

namespace grouplat {

LatticeStats lattice_stats(const FinLattice& L) {
  LatticeStats s;
  s.size = L.size();
  s.atom_count = static_cast<int>(L.atoms().size());
  s.coatom_count = static_cast<int>(L.coatoms().size());
  s.boolean = is_boolean(L);
  s.eulerian = is_eulerian(L);
  return s;
}

namespace {

TotientValues totients_from_mobius(
    const SubgroupLattice& SL, const std::vector<int>& members,
    const std::vector<std::int64_t>& mu_to_top,
    const std::vector<std::int64_t>& mu_from_bottom, int h, int k) {
  const std::int64_t h_order = SL.order_of(h);
  const std::int64_t k_order = SL.order_of(k);
  TotientValues v;
  for (size_t i = 0; i < members.size(); ++i) {
    const std::int64_t j_order = SL.order_of(members[i]);
    GROUPLAT_CHECK(j_order % h_order == 0 && k_order % j_order == 0,
                   "index not an integer");
    v.phi = checked_add(v.phi, checked_mul(mu_to_top[i], j_order / h_order));
    v.phi_hat =
        checked_add(v.phi_hat, checked_mul(mu_from_bottom[i], k_order / j_order));
    v.chi = checked_add(v.chi, checked_mul(mu_to_top[i], k_order / j_order));
  }
  v.chi = checked_mul(v.chi, -1);
  return v;
}

}  // namespace

TotientValues interval_totients(const SubgroupLattice& SL, int h, int k) {
  GROUPLAT_CHECK(SL.lattice.leq(h, k), "interval needs h <= k");
  std::vector<int> back;
  FinLattice I = SL.lattice.interval(h, k, &back);
  MobiusTable mu = mobius_recursive(I);
  std::vector<std::int64_t> to_top(back.size()), from_bottom(back.size());
  for (size_t i = 0; i < back.size(); ++i) {
    to_top[i] = mu(static_cast<int>(i), I.top());
    from_bottom[i] = mu(I.bottom(), static_cast<int>(i));
  }
  return totients_from_mobius(SL, back, to_top, from_bottom, h, k);
}

TotientValues interval_totients(const SubgroupLattice& SL,
                                const MobiusTable& mu, int h, int k) {
  GROUPLAT_CHECK(SL.lattice.leq(h, k), "interval needs h <= k");
  std::vector<int> members;
  for (int c = 0; c < SL.lattice.size(); ++c)
    if (SL.lattice.leq(h, c) && SL.lattice.leq(c, k)) members.push_back(c);
  std::vector<std::int64_t> to_top(members.size()), from_bottom(members.size());
  for (size_t i = 0; i < members.size(); ++i) {
    to_top[i] = mu(members[i], k);
    from_bottom[i] = mu(h, members[i]);
  }
  return totients_from_mobius(SL, members, to_top, from_bottom, h, k);
}

std::int64_t euler_totient(const SubgroupLattice& SL, int h, int k) {
  return interval_totients(SL, h, k).phi;
}
std::int64_t dual_euler_totient(const SubgroupLattice& SL, int h, int k) {
  return interval_totients(SL, h, k).phi_hat;
}
std::int64_t euler_characteristic(const SubgroupLattice& SL, int h, int k) {
  return interval_totients(SL, h, k).chi;
}
std::int64_t euler_totient(const SubgroupLattice& SL, int h) {
  return euler_totient(SL, h, SL.whole_index());
}
std::int64_t dual_euler_totient(const SubgroupLattice& SL, int h) {
  return dual_euler_totient(SL, h, SL.whole_index());
}
std::int64_t euler_characteristic(const SubgroupLattice& SL, int h) {
  return euler_characteristic(SL, h, SL.whole_index());
}

std::int64_t normal_dual_totient(const PermGroup& G, const GroupCaps& caps) {
  std::vector<Subgroup> normals = normal_subgroups(G, caps);
  FinLattice N = from_subgroups(G, normals);
  MobiusTable mu = mobius_recursive(N);
  std::int64_t result = 0;
  for (int i = 0; i < N.size(); ++i) {
    std::int64_t index =
        G.order() / normals[static_cast<size_t>(N.payload(i))].order();
    result = checked_add(result, checked_mul(mu(N.bottom(), i), index));
  }
  return result;
}

bool hall_check(const SubgroupLattice& SL, int h, int k) {
  std::int64_t phi = euler_totient(SL, h, k);
  long long cosets = coset_generator_count(SL.G(), SL.subgroup(h), SL.subgroup(k));
  return phi == cosets;
}

bool hall_check(const SubgroupLattice& SL, int h) {
  return hall_check(SL, h, SL.whole_index());
}

bool frattini_factorization_check(const SubgroupLattice& SL) {
  int frattini = top_interval_base(SL.lattice);
  std::int64_t whole = euler_totient(SL, SL.trivial_index());
  std::int64_t upper = euler_totient(SL, frattini, SL.whole_index());
  return whole == checked_mul(static_cast<std::int64_t>(SL.order_of(frattini)),
                              upper);
}

bool kratzer_thevenaz_check(const SubgroupLattice& SL) {
  MobiusTable mu = mobius_recursive(SL.lattice);
  std::int64_t mu_bottom_top = mu(SL.lattice.bottom(), SL.lattice.top());
  Subgroup derived = derived_subgroup(SL.G());
  std::int64_t ab_index = SL.G().order() / derived.order();
  std::int64_t divisor = SL.G().order() / squarefree_part(ab_index);
  if (mu_bottom_top == 0) return true;
  return mu_bottom_top % divisor == 0;
}

TotientChain min_totient_chain(const SubgroupLattice& SL,
                               TotientVariant variant) {
  const FinLattice& L = SL.lattice;
  MobiusTable mu = mobius_recursive(L);
  auto step_value = [&](int h, int k) {
    TotientValues v = interval_totients(SL, mu, h, k);
    return variant == TotientVariant::phi ? v.phi : v.phi_hat;
  };

  const int start = L.bottom(), goal = L.top();
  std::vector<int> parent(static_cast<size_t>(L.size()), -1);
  std::vector<bool> visited(static_cast<size_t>(L.size()), false);
  std::deque<int> queue{start};
  visited[static_cast<size_t>(start)] = true;

  while (!queue.empty()) {
    int h = queue.front();
    queue.pop_front();
    if (h == goal) break;
    // Canonical index order = (subgroup order, member indices): first-found
    // parents give the reproducible witness.
    for (int k = 0; k < L.size(); ++k) {
      if (visited[static_cast<size_t>(k)] || k == h || !L.leq(h, k)) continue;
      if (step_value(h, k) == 0) continue;
      visited[static_cast<size_t>(k)] = true;
      parent[static_cast<size_t>(k)] = h;
      queue.push_back(k);
    }
  }

  if (!visited[static_cast<size_t>(goal)])
    throw NumericError("no totient-nonzero chain from bottom to top");
  TotientChain chain;
  for (int at = goal; at != -1; at = parent[static_cast<size_t>(at)])
    chain.nodes.push_back(at);
  std::reverse(chain.nodes.begin(), chain.nodes.end());
  return chain;
}

std::optional<int> corefree_dual_criterion(const SubgroupLattice& SL) {
  for (int h = 0; h < SL.lattice.size(); ++h) {
    if (h == SL.whole_index()) continue;  // needs H < G
    Subgroup c = core(SL.G(), SL.subgroup(h));
    if (!c.is_trivial()) continue;
    if (dual_euler_totient(SL, h) != 0) return h;
  }
  return std::nullopt;
}

TotientReport make_totient_report(const SubgroupLattice& SL, int h, int k) {
  TotientReport r;
  r.group = SL.G().name();
  r.group_order = SL.G().order();
  r.sub_label = SL.lattice.label(h);
  r.top_label = SL.lattice.label(k);
  r.sub_order = SL.order_of(h);
  r.top_order = SL.order_of(k);
  r.values = interval_totients(SL, h, k);
  r.stats = lattice_stats(SL.lattice.interval(h, k));
  return r;
}

}  // namespace grouplat
