#include "grouplat/group.hpp"

#include <algorithm>
#include <set>

#include "grouplat/errors.hpp"

namespace grouplat {

namespace {
// Beyond this order, products are composed on the fly and located by binary
// search instead of being tabulated (the table would be quadratic in memory).
constexpr long long kEagerMultTableLimit = 2048;
}  // namespace

PermGroup PermGroup::close_generators(int degree, std::vector<Perm> gens,
                                      std::string name, const GroupCaps& caps) {
  GROUPLAT_CHECK(degree >= 0, "negative degree");
  if (degree > caps.max_degree)
    throw CapExceeded("degree " + std::to_string(degree) + " exceeds cap " +
                      std::to_string(caps.max_degree));
  for (const Perm& g : gens)
    GROUPLAT_CHECK(g.degree() == degree, "generator degree mismatch");

  // Orbit of the identity under right multiplication by generators; in a
  // finite group this closure contains all inverses as well.
  std::set<Perm> visited;
  std::vector<Perm> queue;
  queue.push_back(Perm::identity(degree));
  visited.insert(queue.back());
  for (size_t at = 0; at < queue.size(); ++at) {
    Perm current = queue[at];  // copy: queue may reallocate
    for (const Perm& g : gens) {
      Perm next = current.compose(g);
      if (visited.insert(next).second) {
        if (static_cast<long long>(visited.size()) > caps.max_order)
          throw CapExceeded("group order exceeds cap " +
                            std::to_string(caps.max_order));
        queue.push_back(std::move(next));
      }
    }
  }

  PermGroup G;
  G.degree_ = degree;
  G.name_ = std::move(name);
  G.elements_.assign(visited.begin(), visited.end());  // sorted: std::set
  const size_t n = G.elements_.size();
  GROUPLAT_CHECK(G.elements_[0].is_identity(),
                 "identity not at index 0 after canonical sort");

  if (static_cast<long long>(n) <= kEagerMultTableLimit) {
    G.mult_table_.resize(n * n);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) {
        int k = G.index_of(G.elements_[i].compose(G.elements_[j]));
        GROUPLAT_CHECK(k >= 0, "product escaped closure");
        G.mult_table_[i * n + j] = static_cast<std::uint16_t>(k);
      }
  }

  G.inverse_.resize(n);
  for (size_t i = 0; i < n; ++i) {
    int k = G.index_of(G.elements_[i].inverse());
    GROUPLAT_CHECK(k >= 0, "inverse escaped closure");
    G.inverse_[i] = static_cast<std::uint16_t>(k);
  }

  G.orders_.resize(n);
  for (size_t i = 0; i < n; ++i)
    G.orders_[i] = static_cast<std::uint16_t>(G.elements_[i].order());

  for (const Perm& g : gens) {
    int k = G.index_of(g);
    GROUPLAT_CHECK(k >= 0, "generator missing from closure");
    G.gen_indices_.push_back(k);
  }
  if (G.gen_indices_.empty()) G.gen_indices_.push_back(0);
  std::sort(G.gen_indices_.begin(), G.gen_indices_.end());
  G.gen_indices_.erase(
      std::unique(G.gen_indices_.begin(), G.gen_indices_.end()),
      G.gen_indices_.end());

  return G;
}

int PermGroup::index_of(const Perm& p) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
  if (it == elements_.end() || !(*it == p)) return -1;
  return static_cast<int>(it - elements_.begin());
}

int PermGroup::mult_slow(int i, int j) const {
  int k = index_of(elements_[static_cast<size_t>(i)].compose(
      elements_[static_cast<size_t>(j)]));
  GROUPLAT_CHECK(k >= 0, "product escaped group");
  return k;
}

bool PermGroup::is_cyclic() const {
  for (size_t i = 0; i < elements_.size(); ++i)
    if (orders_[i] == elements_.size()) return true;
  return elements_.size() <= 1;
}

std::vector<int> PermGroup::order_profile() const {
  std::vector<int> profile(orders_.begin(), orders_.end());
  std::sort(profile.begin(), profile.end());
  return profile;
}

}  // namespace grouplat
