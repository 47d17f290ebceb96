#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace grouplat {

/// A permutation of {0, ..., degree-1}, stored as its image vector.
class Perm {
 public:
  Perm() = default;
  /// Validates that `images` is a bijection.
  explicit Perm(std::vector<std::uint16_t> images);

  static Perm identity(int degree);

  /// Parses disjoint-cycle notation with 1-based points, e.g. "(1 2 3)(4 5)".
  /// "()" or an empty string is the identity.
  static Perm from_cycles(int degree, const std::string& text);

  int degree() const { return static_cast<int>(images_.size()); }
  std::uint16_t operator[](int i) const { return images_[static_cast<size_t>(i)]; }
  const std::vector<std::uint16_t>& images() const { return images_; }

  /// (this ∘ other)(x) = this[other[x]]: `other` acts first.
  Perm compose(const Perm& other) const;
  Perm inverse() const;
  int order() const;
  bool is_identity() const;

  /// 1-based disjoint-cycle string; identity prints as "()".
  std::string cycle_string() const;

  friend bool operator==(const Perm& a, const Perm& b) = default;
  friend std::strong_ordering operator<=>(const Perm& a, const Perm& b) {
    return a.images_ <=> b.images_;
  }

 private:
  std::vector<std::uint16_t> images_;
};

}  // namespace grouplat
