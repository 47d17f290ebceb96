#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "grouplat/errors.hpp"

namespace grouplat {

/// A finite lattice: order relation plus meet/join tables.
///
/// Elements are indexed 0..n-1 in some linear extension of the order (smaller
/// index never above a larger one is NOT guaranteed for imported lattices; a
/// linear extension is computed where needed). Immutable after construction.
class FinLattice {
 public:
  /// Builds from the full order relation; meets and joins are derived and
  /// their existence/uniqueness is what makes the input a lattice.
  /// `payload` may carry per-element references (subgroup indices); -1 = none.
  static FinLattice from_order(int n, std::vector<std::uint8_t> leq,
                               std::vector<std::string> labels,
                               std::vector<int> payload = {});

  int size() const { return n_; }
  bool leq(int a, int b) const {
    return leq_[static_cast<size_t>(a) * n_ + static_cast<size_t>(b)] != 0;
  }
  int meet(int a, int b) const {
    return meet_[static_cast<size_t>(a) * n_ + static_cast<size_t>(b)];
  }
  int join(int a, int b) const {
    return join_[static_cast<size_t>(a) * n_ + static_cast<size_t>(b)];
  }
  int bottom() const { return bottom_; }
  int top() const { return top_; }
  const std::string& label(int i) const { return labels_[static_cast<size_t>(i)]; }
  int payload(int i) const { return payload_[static_cast<size_t>(i)]; }

  /// Minimal elements above bottom / maximal elements below top.
  std::vector<int> atoms() const;
  std::vector<int> coatoms() const;

  /// Pairs (i, j) with j covering i.
  std::vector<std::pair<int, int>> cover_pairs() const;

  /// The sublattice {c : a <= c <= b}. `back_map`, when given, receives the
  /// original index of each interval element.
  FinLattice interval(int a, int b, std::vector<int>* back_map = nullptr) const;

  /// Order-reversed lattice (meets and joins swap).
  FinLattice reversed() const;

  /// Elements as a linear extension of the order (bottom first).
  std::vector<int> linear_extension() const;

 private:
  int n_ = 0;
  std::vector<std::uint8_t> leq_;
  std::vector<std::int32_t> meet_, join_;
  std::vector<std::string> labels_;
  std::vector<int> payload_;
  int bottom_ = 0, top_ = 0;
};

/// The two-argument Möbius function of a lattice; mu(a,b) = 0 when a ≰ b.
struct MobiusTable {
  int n = 0;
  std::vector<std::int64_t> mu;
  std::int64_t operator()(int a, int b) const {
    return mu[static_cast<size_t>(a) * n + static_cast<size_t>(b)];
  }
};

/// Full Möbius table by the defining recursion, with overflow detection.
MobiusTable mobius_recursive(const FinLattice& L);

/// mu(a, top) for every a, via the signed subset count over coatom meets
/// (empty meet = top). Guarded: at most `max_coatoms` coatoms.
std::vector<std::int64_t> mobius_crosscut_to_top(const FinLattice& L,
                                                 int max_coatoms = 25);

/// mu(a, top) by the crosscut route only.
std::int64_t mobius_crosscut(const FinLattice& L, int a, int max_coatoms = 25);

/// [bottom, join of atoms] and [meet of coatoms, top].
FinLattice bottom_interval(const FinLattice& L);
FinLattice top_interval(const FinLattice& L);
/// The meet of the coatoms (base element of the top interval).
int top_interval_base(const FinLattice& L);
/// The join of the atoms (top element of the bottom interval).
int bottom_interval_top(const FinLattice& L);

/// True iff every element is the join of a unique set of atoms and
/// |L| = 2^#atoms (then L is the subset lattice of its atoms).
bool is_boolean(const FinLattice& L);

/// Rank function when every maximal chain between comparable elements has the
/// same length; nullopt otherwise.
std::optional<std::vector<int>> grading(const FinLattice& L);

/// Graded with mu(a,b) = (-1)^(rank b - rank a) on every interval.
bool is_eulerian(const FinLattice& L);
bool is_eulerian(const FinLattice& L, const MobiusTable& mu);

/// Meet distributes over join (equivalently join over meet).
bool is_distributive(const FinLattice& L);

/// JSON export/import: {"elements": [labels...], "covers": [[i, j]...]} where
/// [i, j] means element i is covered by element j.
std::string lattice_to_json(const FinLattice& L);
FinLattice lattice_from_json(const std::string& text);

}  // namespace grouplat
