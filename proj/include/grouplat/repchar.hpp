#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "grouplat/subgroup.hpp"

namespace grouplat {

/// Conjugacy-class data in the layout the character machinery wants.
struct ClassData {
  std::vector<std::vector<int>> classes;  // sorted members, identity class first
  std::vector<int> class_of;              // element index -> class index
  std::vector<int> sizes;
  std::vector<int> reps;                  // smallest member per class
  std::vector<int> inverse_class;         // class of the inverses
};

ClassData class_data(const PermGroup& G);

/// Class-sum structure constants: matrices[i][j*r + k] is the coefficient of
/// class k in the product of the class sums of classes i and j (a nonnegative
/// integer).
std::vector<std::vector<std::int64_t>> class_matrices(const PermGroup& G,
                                                      const ClassData& cd);

/// The complex character table, computed numerically from the common
/// eigenvectors of the class matrices.
struct CharacterTable {
  int r = 0;                                  // class count = character count
  std::vector<std::complex<double>> values;   // r x r, row = character
  std::vector<int> degrees;                   // chi(1), positive integers
  std::vector<std::vector<int>> kernels;      // per character, sorted members
  double tol = 1e-8;
  ClassData classes;

  std::complex<double> value(int character, int cls) const {
    return values[static_cast<size_t>(character) * r + static_cast<size_t>(cls)];
  }
  std::complex<double> value_at_element(int character, int element) const {
    return value(character, classes.class_of[static_cast<size_t>(element)]);
  }
};

/// Burnside–Dixon style: eigendecompose a seeded random linear combination of
/// the class matrices; retry on eigenvalue collision (up to 10 attempts).
/// Rows are canonically sorted by (degree, rounded values), so a fixed seed
/// yields a bit-identical table.
CharacterTable character_table(const PermGroup& G, double tol = 1e-8,
                               std::uint64_t seed = 0);

/// Kernel of the i-th character as a Subgroup (asserts closure; normality is
/// automatic since kernels are unions of classes).
Subgroup character_kernel(const PermGroup& G, const CharacterTable& T, int i);

bool has_faithful_irrep(const CharacterTable& T);

/// Sum of deg^2 over the faithful irreducible characters.
std::int64_t faithful_dim_square_sum(const CharacterTable& T);

/// Smallest r such that some r character kernels intersect trivially
/// (0 for the trivial group); nullopt only if no intersection is trivial.
std::optional<int> min_faithful_components(const PermGroup& G,
                                           const CharacterTable& T);

/// dim of the K-fixed subspace of the i-th irreducible: the average of the
/// character over K, which must be integral within int_tol.
std::int64_t fixed_point_dim(const CharacterTable& T, int i, const Subgroup& K,
                             double int_tol = 1e-6);

/// [H, G] is linearly primitive iff some irreducible V has pointwise
/// stabilizer of V^H exactly H: for every g outside H the fixed space of
/// ⟨H, g⟩ must be strictly smaller than that of H.
bool is_linearly_primitive(const PermGroup& G, const Subgroup& H,
                           const CharacterTable& T, double int_tol = 1e-6);

}  // namespace grouplat
