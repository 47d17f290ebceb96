#include "grouplat/lattice.hpp"

#include <algorithm>

#include <json.hpp>

#include "grouplat/numeric.hpp"

namespace grouplat {

namespace {

// Down-sets as bitmask rows for fast meet/join derivation.
struct BitRows {
  size_t words_per_row;
  std::vector<std::uint64_t> bits;
  BitRows(int n)
      : words_per_row((static_cast<size_t>(n) + 63) / 64),
        bits(static_cast<size_t>(n) * words_per_row, 0) {}
  void set(int row, int col) {
    bits[static_cast<size_t>(row) * words_per_row + (static_cast<size_t>(col) >> 6)] |=
        1ULL << (col & 63);
  }
  const std::uint64_t* row(int r) const {
    return &bits[static_cast<size_t>(r) * words_per_row];
  }
};

bool row_subset(const std::uint64_t* a, const std::uint64_t* b, size_t words) {
  for (size_t w = 0; w < words; ++w)
    if (a[w] & ~b[w]) return false;
  return true;
}

}  // namespace

FinLattice FinLattice::from_order(int n, std::vector<std::uint8_t> leq,
                                  std::vector<std::string> labels,
                                  std::vector<int> payload) {
  GROUPLAT_CHECK(n > 0, "a lattice needs at least one element");
  GROUPLAT_CHECK(static_cast<size_t>(n) * n == leq.size(), "leq size mismatch");
  if (labels.empty()) {
    labels.resize(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) labels[static_cast<size_t>(i)] = std::to_string(i);
  }
  GROUPLAT_CHECK(labels.size() == static_cast<size_t>(n), "label count mismatch");
  if (payload.empty()) payload.assign(static_cast<size_t>(n), -1);

  auto at = [&](int a, int b) -> std::uint8_t& {
    return leq[static_cast<size_t>(a) * n + static_cast<size_t>(b)];
  };

  // Partial-order axioms.
  for (int a = 0; a < n; ++a) GROUPLAT_CHECK(at(a, a), "order not reflexive");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (a != b && at(a, b) && at(b, a))
        fail_invariant("order not antisymmetric");
      if (!at(a, b)) continue;
      for (int c = 0; c < n; ++c)
        if (at(b, c) && !at(a, c)) fail_invariant("order not transitive");
    }

  FinLattice L;
  L.n_ = n;
  L.leq_ = std::move(leq);
  L.labels_ = std::move(labels);
  L.payload_ = std::move(payload);

  BitRows down(n), up(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (L.leq(a, b)) {
        down.set(b, a);
        up.set(a, b);
      }

  // Meet of (a,b): the greatest common lower bound; it must exist and its
  // down-set must cover all common lower bounds, else this is not a lattice.
  const size_t words = down.words_per_row;
  L.meet_.resize(static_cast<size_t>(n) * n);
  L.join_.resize(static_cast<size_t>(n) * n);
  std::vector<std::uint64_t> common(words);
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b) {
      // meet
      for (size_t w = 0; w < words; ++w)
        common[w] = down.row(a)[w] & down.row(b)[w];
      int best = -1;
      for (int c = 0; c < n; ++c) {
        if (!((common[static_cast<size_t>(c) >> 6] >> (c & 63)) & 1)) continue;
        if (best == -1 || L.leq(best, c)) best = c;
      }
      GROUPLAT_CHECK(best >= 0, "no common lower bound: not a lattice");
      GROUPLAT_CHECK(row_subset(common.data(), down.row(best), words),
                     "no unique meet: not a lattice");
      L.meet_[static_cast<size_t>(a) * n + b] = best;
      L.meet_[static_cast<size_t>(b) * n + a] = best;
      // join
      for (size_t w = 0; w < words; ++w)
        common[w] = up.row(a)[w] & up.row(b)[w];
      best = -1;
      for (int c = 0; c < n; ++c) {
        if (!((common[static_cast<size_t>(c) >> 6] >> (c & 63)) & 1)) continue;
        if (best == -1 || L.leq(c, best)) best = c;
      }
      GROUPLAT_CHECK(best >= 0, "no common upper bound: not a lattice");
      GROUPLAT_CHECK(row_subset(common.data(), up.row(best), words),
                     "no unique join: not a lattice");
      L.join_[static_cast<size_t>(a) * n + b] = best;
      L.join_[static_cast<size_t>(b) * n + a] = best;
    }

  // Bounds.
  L.bottom_ = 0;
  L.top_ = 0;
  for (int c = 0; c < n; ++c) {
    L.bottom_ = L.meet(L.bottom_, c);
    L.top_ = L.join(L.top_, c);
  }
  for (int c = 0; c < n; ++c)
    GROUPLAT_CHECK(L.leq(L.bottom_, c) && L.leq(c, L.top_),
                   "lattice is not bounded");
  return L;
}

std::vector<int> FinLattice::atoms() const {
  std::vector<int> result;
  for (int x = 0; x < n_; ++x) {
    if (x == bottom_) continue;
    bool minimal = true;
    for (int y = 0; y < n_; ++y) {
      if (y == bottom_ || y == x) continue;
      if (leq(y, x)) {
        minimal = false;
        break;
      }
    }
    if (minimal) result.push_back(x);
  }
  return result;
}

std::vector<int> FinLattice::coatoms() const {
  std::vector<int> result;
  for (int x = 0; x < n_; ++x) {
    if (x == top_) continue;
    bool maximal = true;
    for (int y = 0; y < n_; ++y) {
      if (y == top_ || y == x) continue;
      if (leq(x, y)) {
        maximal = false;
        break;
      }
    }
    if (maximal) result.push_back(x);
  }
  return result;
}

std::vector<std::pair<int, int>> FinLattice::cover_pairs() const {
  std::vector<std::pair<int, int>> result;
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b) {
      if (a == b || !leq(a, b)) continue;
      bool covered = true;
      for (int c = 0; c < n_; ++c) {
        if (c == a || c == b) continue;
        if (leq(a, c) && leq(c, b)) {
          covered = false;
          break;
        }
      }
      if (covered) result.emplace_back(a, b);
    }
  return result;
}

FinLattice FinLattice::interval(int a, int b,
                                std::vector<int>* back_map) const {
  GROUPLAT_CHECK(leq(a, b), "interval endpoints not comparable");
  std::vector<int> members;
  for (int c = 0; c < n_; ++c)
    if (leq(a, c) && leq(c, b)) members.push_back(c);

  const int m = static_cast<int>(members.size());
  std::vector<std::uint8_t> sub_leq(static_cast<size_t>(m) * m, 0);
  std::vector<std::string> sub_labels(static_cast<size_t>(m));
  std::vector<int> sub_payload(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) {
    sub_labels[static_cast<size_t>(i)] = labels_[static_cast<size_t>(members[i])];
    sub_payload[static_cast<size_t>(i)] = payload_[static_cast<size_t>(members[i])];
    for (int j = 0; j < m; ++j)
      sub_leq[static_cast<size_t>(i) * m + j] = leq(members[i], members[j]);
  }
  if (back_map) *back_map = members;
  return from_order(m, std::move(sub_leq), std::move(sub_labels),
                    std::move(sub_payload));
}

FinLattice FinLattice::reversed() const {
  std::vector<std::uint8_t> rev(static_cast<size_t>(n_) * n_);
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b)
      rev[static_cast<size_t>(a) * n_ + b] = leq(b, a);
  return from_order(n_, std::move(rev), labels_, payload_);
}

std::vector<int> FinLattice::linear_extension() const {
  // Down-set sizes strictly grow along the order, so sorting by them is a
  // linear extension.
  std::vector<int> down_size(static_cast<size_t>(n_), 0);
  for (int a = 0; a < n_; ++a)
    for (int c = 0; c < n_; ++c) down_size[static_cast<size_t>(a)] += leq(c, a);
  std::vector<int> order(static_cast<size_t>(n_));
  for (int i = 0; i < n_; ++i) order[static_cast<size_t>(i)] = i;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return down_size[static_cast<size_t>(a)] < down_size[static_cast<size_t>(b)];
  });
  return order;
}

MobiusTable mobius_recursive(const FinLattice& L) {
  const int n = L.size();
  MobiusTable T;
  T.n = n;
  T.mu.assign(static_cast<size_t>(n) * n, 0);

  std::vector<int> ext = L.linear_extension();
  std::vector<int> pos(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) pos[static_cast<size_t>(ext[static_cast<size_t>(i)])] = i;

  for (int b = 0; b < n; ++b) {
    T.mu[static_cast<size_t>(b) * n + b] = 1;
    // Walk down from b in reverse linear-extension order.
    for (int p = pos[static_cast<size_t>(b)] - 1; p >= 0; --p) {
      int a = ext[static_cast<size_t>(p)];
      if (!L.leq(a, b)) continue;
      std::int64_t sum = 0;
      for (int q = p + 1; q <= pos[static_cast<size_t>(b)]; ++q) {
        int c = ext[static_cast<size_t>(q)];
        if (L.leq(a, c) && L.leq(c, b))
          sum = checked_add(sum, T.mu[static_cast<size_t>(c) * n + b]);
      }
      T.mu[static_cast<size_t>(a) * n + b] = checked_mul(-1, sum);
    }
  }
  return T;
}

std::vector<std::int64_t> mobius_crosscut_to_top(const FinLattice& L,
                                                 int max_coatoms) {
  std::vector<int> coatoms = L.coatoms();
  const int m = static_cast<int>(coatoms.size());
  if (m > max_coatoms)
    throw CapExceeded("crosscut: " + std::to_string(m) +
                      " coatoms exceeds cap " + std::to_string(max_coatoms));

  std::vector<std::int64_t> bucket(static_cast<size_t>(L.size()), 0);
  // Depth-first over the subset tree: one meet per subset, signs alternate
  // with subset size. The empty subset contributes +1 at the top.
  auto dfs = [&](auto&& self, int next, int meet_so_far, int sign) -> void {
    bucket[static_cast<size_t>(meet_so_far)] =
        checked_add(bucket[static_cast<size_t>(meet_so_far)], sign);
    for (int i = next; i < m; ++i)
      self(self, i + 1, L.meet(meet_so_far, coatoms[static_cast<size_t>(i)]),
           -sign);
  };
  dfs(dfs, 0, L.top(), 1);
  return bucket;
}

std::int64_t mobius_crosscut(const FinLattice& L, int a, int max_coatoms) {
  return mobius_crosscut_to_top(L, max_coatoms)[static_cast<size_t>(a)];
}

int bottom_interval_top(const FinLattice& L) {
  int b = L.bottom();
  for (int atom : L.atoms()) b = L.join(b, atom);
  return b;
}

int top_interval_base(const FinLattice& L) {
  int t = L.top();
  for (int coatom : L.coatoms()) t = L.meet(t, coatom);
  return t;
}

FinLattice bottom_interval(const FinLattice& L) {
  return L.interval(L.bottom(), bottom_interval_top(L));
}

FinLattice top_interval(const FinLattice& L) {
  return L.interval(top_interval_base(L), L.top());
}

bool is_boolean(const FinLattice& L) {
  std::vector<int> atoms = L.atoms();
  if (atoms.size() > 30) return false;  // would need |L| = 2^31 or more
  if (L.size() != (1 << atoms.size())) return false;
  for (int x = 0; x < L.size(); ++x) {
    int join_below = L.bottom();
    for (int a : atoms)
      if (L.leq(a, x)) join_below = L.join(join_below, a);
    if (join_below != x) return false;  // not atomistic
  }
  return true;
}

std::optional<std::vector<int>> grading(const FinLattice& L) {
  auto covers = L.cover_pairs();
  std::vector<std::vector<int>> lower(static_cast<size_t>(L.size()));
  for (auto [a, b] : covers) lower[static_cast<size_t>(b)].push_back(a);

  std::vector<int> rank(static_cast<size_t>(L.size()), -1);
  for (int x : L.linear_extension()) {
    if (x == L.bottom()) {
      rank[static_cast<size_t>(x)] = 0;
      continue;
    }
    int r = -1;
    for (int below : lower[static_cast<size_t>(x)]) {
      int rb = rank[static_cast<size_t>(below)];
      GROUPLAT_CHECK(rb >= 0, "linear extension out of order");
      if (r == -1) r = rb + 1;
      else if (r != rb + 1) return std::nullopt;  // unequal maximal chains
    }
    GROUPLAT_CHECK(r >= 0, "non-bottom element with no lower cover");
    rank[static_cast<size_t>(x)] = r;
  }
  return rank;
}

bool is_eulerian(const FinLattice& L, const MobiusTable& mu) {
  auto rank = grading(L);
  if (!rank) return false;
  for (int a = 0; a < L.size(); ++a)
    for (int b = 0; b < L.size(); ++b) {
      if (!L.leq(a, b)) continue;
      int d = (*rank)[static_cast<size_t>(b)] - (*rank)[static_cast<size_t>(a)];
      std::int64_t expected = (d % 2 == 0) ? 1 : -1;
      if (mu(a, b) != expected) return false;
    }
  return true;
}

bool is_eulerian(const FinLattice& L) {
  if (!grading(L)) return false;
  return is_eulerian(L, mobius_recursive(L));
}

bool is_distributive(const FinLattice& L) {
  for (int a = 0; a < L.size(); ++a)
    for (int b = 0; b < L.size(); ++b)
      for (int c = 0; c < L.size(); ++c)
        if (L.meet(a, L.join(b, c)) != L.join(L.meet(a, b), L.meet(a, c)))
          return false;
  return true;
}

std::string lattice_to_json(const FinLattice& L) {
  nlohmann::json j;
  j["elements"] = nlohmann::json::array();
  for (int i = 0; i < L.size(); ++i) j["elements"].push_back(L.label(i));
  j["covers"] = nlohmann::json::array();
  for (auto [a, b] : L.cover_pairs())
    j["covers"].push_back(nlohmann::json::array({a, b}));
  return j.dump(2);
}

FinLattice lattice_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("lattice file is not valid JSON: ") + e.what());
  }
  if (!j.contains("elements") || !j["elements"].is_array())
    throw ParseError("lattice file needs an 'elements' array");
  if (!j.contains("covers") || !j["covers"].is_array())
    throw ParseError("lattice file needs a 'covers' array");

  const int n = static_cast<int>(j["elements"].size());
  if (n == 0) throw ParseError("lattice file has no elements");
  std::vector<std::string> labels;
  for (const auto& e : j["elements"]) labels.push_back(e.get<std::string>());

  // Reflexive-transitive closure of the cover relation.
  std::vector<std::uint8_t> leq(static_cast<size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) leq[static_cast<size_t>(i) * n + i] = 1;
  for (const auto& c : j["covers"]) {
    if (!c.is_array() || c.size() != 2)
      throw ParseError("each cover must be a pair [i, j]");
    int a = c[0].get<int>(), b = c[1].get<int>();
    if (a < 0 || a >= n || b < 0 || b >= n)
      throw ParseError("cover index out of range");
    leq[static_cast<size_t>(a) * n + b] = 1;
  }
  for (int k = 0; k < n; ++k)  // Floyd-Warshall style closure
    for (int a = 0; a < n; ++a) {
      if (!leq[static_cast<size_t>(a) * n + k]) continue;
      for (int b = 0; b < n; ++b)
        if (leq[static_cast<size_t>(k) * n + b])
          leq[static_cast<size_t>(a) * n + b] = 1;
    }
  return FinLattice::from_order(n, std::move(leq), std::move(labels));
}

}  // namespace grouplat
