#include "grouplat/automorphism.hpp"

#include <algorithm>
#include <map>

#include "grouplat/errors.hpp"
#include "grouplat/subgroup.hpp"

namespace grouplat {

namespace {

// Extends gens[i] -> images[i] to a map on all of G by breadth-first search
// over the Cayley graph, checking every edge for consistency. Returns the
// full map, or empty if the assignment is contradictory or not bijective.
std::vector<int> extend_to_endomorphism(const PermGroup& G,
                                        const std::vector<int>& gens,
                                        const std::vector<int>& images) {
  const int n = G.order();
  std::vector<int> map(static_cast<size_t>(n), -1);
  std::vector<bool> hit(static_cast<size_t>(n), false);
  map[0] = 0;
  hit[0] = true;

  std::vector<int> queue{0};
  for (size_t at = 0; at < queue.size(); ++at) {
    int x = queue[at];
    for (size_t i = 0; i < gens.size(); ++i) {
      int y = G.mult(x, gens[i]);
      int fy = G.mult(map[static_cast<size_t>(x)], images[i]);
      int& slot = map[static_cast<size_t>(y)];
      if (slot == -1) {
        if (hit[static_cast<size_t>(fy)]) return {};  // not injective
        slot = fy;
        hit[static_cast<size_t>(fy)] = true;
        queue.push_back(y);
      } else if (slot != fy) {
        return {};  // relation violated
      }
    }
  }
  if (queue.size() != static_cast<size_t>(n)) return {};  // gens don't generate
  return map;
}

}  // namespace

std::vector<Automorphism> automorphism_group(const PermGroup& G,
                                             const GroupCaps& caps) {
  if (G.order() > caps.max_aut_group_order)
    throw CapExceeded("automorphism_group: order " + std::to_string(G.order()) +
                      " exceeds cap " +
                      std::to_string(caps.max_aut_group_order));

  std::vector<int> gens = min_generating_tuple(G);
  if (gens.empty()) return {Automorphism{{0}}};

  // Candidate images per generator: same element order.
  std::vector<std::vector<int>> candidates(gens.size());
  for (size_t i = 0; i < gens.size(); ++i)
    for (int x = 1; x < G.order(); ++x)
      if (G.element_order(x) == G.element_order(gens[i]))
        candidates[i].push_back(x);

  std::vector<Automorphism> result;
  std::vector<int> images(gens.size());
  auto rec = [&](auto&& self, size_t depth) -> void {
    if (depth == gens.size()) {
      std::vector<int> map = extend_to_endomorphism(G, gens, images);
      if (!map.empty()) result.push_back(Automorphism{std::move(map)});
      return;
    }
    for (int c : candidates[depth]) {
      images[depth] = c;
      self(self, depth + 1);
    }
  };
  rec(rec, 0);

  std::sort(result.begin(), result.end(),
            [](const Automorphism& a, const Automorphism& b) {
              return a.map < b.map;
            });
  // Identity automorphism first (its map need not be lexicographically least).
  std::vector<int> id_map(static_cast<size_t>(G.order()));
  for (int i = 0; i < G.order(); ++i) id_map[static_cast<size_t>(i)] = i;
  auto it = std::find_if(result.begin(), result.end(),
                         [&](const Automorphism& a) { return a.map == id_map; });
  GROUPLAT_CHECK(it != result.end(), "identity automorphism not found");
  std::rotate(result.begin(), it, it + 1);
  return result;
}

std::vector<SemidirectProduct> semidirect_products(const PermGroup& N,
                                                   const PermGroup& H,
                                                   const GroupCaps& caps) {
  const long long product_order =
      static_cast<long long>(N.order()) * H.order();
  if (product_order > caps.max_order)
    throw CapExceeded("semidirect product order exceeds cap");

  std::vector<Automorphism> auts = automorphism_group(N, caps);
  std::vector<int> h_gens = min_generating_tuple(H);

  // Composition in Aut(N) as index table, to propagate maps along H's Cayley
  // graph the same way extend_to_endomorphism does on elements.
  const int a = static_cast<int>(auts.size());
  std::map<std::vector<int>, int> aut_index;
  for (int k = 0; k < a; ++k) aut_index[auts[static_cast<size_t>(k)].map] = k;
  std::vector<int> aut_mult(static_cast<size_t>(a) * a);
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < a; ++j) {
      // (auts[i] ∘ auts[j])(x) = auts[i].map[auts[j].map[x]]
      std::vector<int> composed(auts[static_cast<size_t>(i)].map.size());
      for (size_t x = 0; x < composed.size(); ++x)
        composed[x] =
            auts[static_cast<size_t>(i)]
                .map[static_cast<size_t>(auts[static_cast<size_t>(j)].map[x])];
      auto it = aut_index.find(composed);
      GROUPLAT_CHECK(it != aut_index.end(),
                     "automorphism composition escaped the computed group");
      aut_mult[static_cast<size_t>(i) * a + j] = it->second;
    }

  // theta: H-element index -> Aut(N) index, or empty when the generator
  // assignment does not define a homomorphism.
  auto extend_hom = [&](const std::vector<int>& gen_images) -> std::vector<int> {
    std::vector<int> theta(static_cast<size_t>(H.order()), -1);
    theta[0] = 0;
    std::vector<int> queue{0};
    for (size_t at = 0; at < queue.size(); ++at) {
      int x = queue[at];
      for (size_t i = 0; i < h_gens.size(); ++i) {
        int y = H.mult(x, h_gens[i]);
        int ty = aut_mult[static_cast<size_t>(theta[static_cast<size_t>(x)]) * a +
                          gen_images[i]];
        int& slot = theta[static_cast<size_t>(y)];
        if (slot == -1) {
          slot = ty;
          queue.push_back(y);
        } else if (slot != ty) {
          return {};
        }
      }
    }
    return theta;
  };

  std::vector<SemidirectProduct> result;
  std::vector<int> gen_images(h_gens.empty() ? 1 : h_gens.size(), 0);
  auto emit = [&](const std::vector<int>& gen_auts) {
    const int deg = N.order() + H.order();
    std::vector<Perm> gens;
    // Generators of N act by left translation on the N block.
    for (int ng : N.generator_indices()) {
      std::vector<std::uint16_t> img(static_cast<size_t>(deg));
      for (int x = 0; x < N.order(); ++x)
        img[static_cast<size_t>(x)] =
            static_cast<std::uint16_t>(N.mult(ng, x));
      for (int y = 0; y < H.order(); ++y)
        img[static_cast<size_t>(N.order() + y)] =
            static_cast<std::uint16_t>(N.order() + y);
      gens.emplace_back(std::move(img));
    }
    // Generators of H act on the N block through theta and by left
    // translation on the H block.
    for (size_t i = 0; i < h_gens.size(); ++i) {
      const std::vector<int>& action = auts[static_cast<size_t>(gen_auts[i])].map;
      std::vector<std::uint16_t> img(static_cast<size_t>(deg));
      for (int x = 0; x < N.order(); ++x)
        img[static_cast<size_t>(x)] = static_cast<std::uint16_t>(action[static_cast<size_t>(x)]);
      for (int y = 0; y < H.order(); ++y)
        img[static_cast<size_t>(N.order() + y)] =
            static_cast<std::uint16_t>(N.order() + H.mult(h_gens[i], y));
      gens.emplace_back(std::move(img));
    }
    int hom_index = static_cast<int>(result.size()) + 1;
    std::string name = "sd:" + N.name() + ":" + H.name() + ":" +
                       std::to_string(hom_index);
    PermGroup P = PermGroup::close_generators(deg, std::move(gens),
                                              std::move(name), caps);
    GROUPLAT_CHECK(P.order() == product_order,
                   "semidirect product has wrong order");
    result.push_back(SemidirectProduct{std::move(P), gen_auts, hom_index});
  };

  if (h_gens.empty()) {  // H trivial: only the trivial homomorphism
    emit({});
    return result;
  }

  auto rec = [&](auto&& self, size_t depth) -> void {
    if (depth == h_gens.size()) {
      if (!extend_hom(gen_images).empty()) emit(gen_images);
      return;
    }
    for (int c = 0; c < a; ++c) {
      gen_images[depth] = c;
      self(self, depth + 1);
    }
  };
  rec(rec, 0);
  return result;
}

}  // namespace grouplat
