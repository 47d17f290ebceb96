#include "grouplat/repchar.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "grouplat/errors.hpp"
#include "grouplat/numeric.hpp"

namespace grouplat {

namespace {
constexpr int kMaxClasses = 60;
constexpr int kMaxEigenAttempts = 10;
constexpr double kDegreeRoundingTol = 1e-4;
}  // namespace

ClassData class_data(const PermGroup& G) {
  ClassData cd;
  cd.classes = conjugacy_classes(G);
  cd.class_of.assign(static_cast<size_t>(G.order()), -1);
  for (size_t c = 0; c < cd.classes.size(); ++c) {
    for (int x : cd.classes[c]) cd.class_of[static_cast<size_t>(x)] = static_cast<int>(c);
    cd.sizes.push_back(static_cast<int>(cd.classes[c].size()));
    cd.reps.push_back(cd.classes[c][0]);
  }
  for (size_t c = 0; c < cd.classes.size(); ++c)
    cd.inverse_class.push_back(
        cd.class_of[static_cast<size_t>(G.inverse(cd.reps[c]))]);
  return cd;
}

std::vector<std::vector<std::int64_t>> class_matrices(const PermGroup& G,
                                                      const ClassData& cd) {
  const int r = static_cast<int>(cd.classes.size());
  std::vector<std::vector<std::int64_t>> matrices(
      static_cast<size_t>(r),
      std::vector<std::int64_t>(static_cast<size_t>(r) * r, 0));

  for (int i = 0; i < r; ++i) {
    auto& M = matrices[static_cast<size_t>(i)];
    for (int j = 0; j < r; ++j) {
      std::vector<std::int64_t> count(static_cast<size_t>(r), 0);
      for (int x : cd.classes[static_cast<size_t>(i)])
        for (int y : cd.classes[static_cast<size_t>(j)])
          ++count[static_cast<size_t>(cd.class_of[static_cast<size_t>(G.mult(x, y))])];
      for (int k = 0; k < r; ++k) {
        // count[k] spreads evenly over class k.
        GROUPLAT_CHECK(count[static_cast<size_t>(k)] % cd.sizes[static_cast<size_t>(k)] == 0,
                       "class sum product not constant on classes");
        M[static_cast<size_t>(j) * r + k] =
            count[static_cast<size_t>(k)] / cd.sizes[static_cast<size_t>(k)];
      }
    }
  }
  return matrices;
}

namespace {

// Sort key: degree first, then rounded values lexicographically
// (real part before imaginary part).
bool character_row_less(const std::vector<std::complex<double>>& a, int deg_a,
                        const std::vector<std::complex<double>>& b, int deg_b) {
  if (deg_a != deg_b) return deg_a < deg_b;
  for (size_t j = 0; j < a.size(); ++j) {
    double ar = std::round(a[j].real() * 1e6), br = std::round(b[j].real() * 1e6);
    if (ar != br) return ar < br;
    double ai = std::round(a[j].imag() * 1e6), bi = std::round(b[j].imag() * 1e6);
    if (ai != bi) return ai < bi;
  }
  return false;
}

std::vector<int> kernel_members(const PermGroup& G, const ClassData& cd,
                                const std::vector<std::complex<double>>& row,
                                int degree, double tol) {
  std::vector<int> members;
  const double threshold = tol * std::max(1.0, static_cast<double>(degree));
  for (int x = 0; x < G.order(); ++x) {
    std::complex<double> v = row[static_cast<size_t>(cd.class_of[static_cast<size_t>(x)])];
    if (std::abs(v - static_cast<double>(degree)) < threshold)
      members.push_back(x);
  }
  // Tolerance failure would show up as a non-closed member set.
  for (int a : members)
    for (int b : members)
      if (!std::binary_search(members.begin(), members.end(), G.mult(a, b)))
        throw NumericError("character kernel set not closed under product");
  return members;
}

}  // namespace

CharacterTable character_table(const PermGroup& G, double tol,
                               std::uint64_t seed) {
  CharacterTable T;
  T.tol = tol;
  T.classes = class_data(G);
  const int r = static_cast<int>(T.classes.classes.size());
  T.r = r;
  if (r > kMaxClasses)
    throw CapExceeded("character_table: " + std::to_string(r) +
                      " classes exceeds cap " + std::to_string(kMaxClasses));

  const auto matrices = class_matrices(G, T.classes);
  const int identity_class = T.classes.class_of[0];
  GROUPLAT_CHECK(identity_class == 0, "identity class must come first");

  std::string last_failure = "eigensolver never ran";
  for (int attempt = 0; attempt < kMaxEigenAttempts; ++attempt) {
    // Seeded random combination of the commuting class matrices; its
    // eigenvectors are the common eigenvectors when eigenvalues stay simple.
    std::mt19937_64 rng(seed * 1000003ULL + static_cast<std::uint64_t>(attempt));
    std::uniform_real_distribution<double> coeff(-1.0, 1.0);
    Eigen::MatrixXd M = Eigen::MatrixXd::Zero(r, r);
    for (int i = 0; i < r; ++i) {
      double c = coeff(rng);
      for (int jk = 0; jk < r * r; ++jk)
        M(jk / r, jk % r) +=
            c * static_cast<double>(matrices[static_cast<size_t>(i)][static_cast<size_t>(jk)]);
    }

    Eigen::EigenSolver<Eigen::MatrixXd> solver(M);
    if (solver.info() != Eigen::Success) {
      last_failure = "eigensolver did not converge";
      continue;
    }
    Eigen::VectorXcd eigenvalues = solver.eigenvalues();
    double scale = 1.0;
    for (int i = 0; i < r; ++i) scale = std::max(scale, std::abs(eigenvalues(i)));
    bool collision = false;
    for (int i = 0; i < r && !collision; ++i)
      for (int j = i + 1; j < r; ++j)
        if (std::abs(eigenvalues(i) - eigenvalues(j)) < 1e-8 * scale) {
          collision = true;
          break;
        }
    if (collision) {
      last_failure = "eigenvalue collision";
      continue;
    }

    // Each eigenvector is (|C_j| chi(g_j) / deg)_j up to scale; component at
    // the identity class equals 1 after normalization.
    std::vector<std::vector<std::complex<double>>> rows;
    std::vector<int> degrees;
    bool attempt_ok = true;
    for (int t = 0; t < r && attempt_ok; ++t) {
      Eigen::VectorXcd w = solver.eigenvectors().col(t);
      if (std::abs(w(identity_class)) < 1e-12) {
        last_failure = "vanishing identity component in eigenvector";
        attempt_ok = false;
        break;
      }
      w /= w(identity_class);

      double norm = 0.0;  // sum |w_j|^2 / |C_j| = |G| / deg^2
      for (int j = 0; j < r; ++j)
        norm += std::norm(w(j)) / T.classes.sizes[static_cast<size_t>(j)];
      double deg_real = std::sqrt(static_cast<double>(G.order()) / norm);
      int deg = static_cast<int>(std::lround(deg_real));
      if (deg < 1 || std::abs(deg_real - deg) > kDegreeRoundingTol)
        throw NumericError("character degree " + std::to_string(deg_real) +
                           " does not round to a positive integer");

      std::vector<std::complex<double>> row(static_cast<size_t>(r));
      for (int j = 0; j < r; ++j) {
        std::complex<double> v =
            w(j) * static_cast<double>(deg) /
            static_cast<double>(T.classes.sizes[static_cast<size_t>(j)]);
        // Snap values that are within tol of a Gaussian integer.
        double re = v.real(), im = v.imag();
        if (std::abs(re - std::round(re)) < tol) re = std::round(re);
        if (std::abs(im - std::round(im)) < tol) im = std::round(im);
        row[static_cast<size_t>(j)] = {re, im};
      }
      rows.push_back(std::move(row));
      degrees.push_back(deg);
    }
    if (!attempt_ok) continue;

    std::int64_t degree_square_sum = 0;
    for (int d : degrees)
      degree_square_sum = checked_add(degree_square_sum,
                                      checked_mul(d, d));
    if (degree_square_sum != G.order())
      throw NumericError("sum of squared degrees " +
                         std::to_string(degree_square_sum) + " != group order " +
                         std::to_string(G.order()));
    for (int d : degrees)
      GROUPLAT_CHECK(G.order() % d == 0, "character degree must divide |G|");

    // Row orthogonality residual.
    double residual = 0.0;
    for (int i = 0; i < r; ++i)
      for (int k = 0; k < r; ++k) {
        std::complex<double> inner = 0.0;
        for (int j = 0; j < r; ++j)
          inner += static_cast<double>(T.classes.sizes[static_cast<size_t>(j)]) *
                   rows[static_cast<size_t>(i)][static_cast<size_t>(j)] *
                   std::conj(rows[static_cast<size_t>(k)][static_cast<size_t>(j)]);
        inner /= static_cast<double>(G.order());
        residual = std::max(residual, std::abs(inner - (i == k ? 1.0 : 0.0)));
      }
    if (residual > tol) {
      last_failure = "orthogonality residual " + std::to_string(residual);
      continue;
    }

    // Canonical row order.
    std::vector<int> perm(static_cast<size_t>(r));
    for (int i = 0; i < r; ++i) perm[static_cast<size_t>(i)] = i;
    std::sort(perm.begin(), perm.end(), [&](int x, int y) {
      return character_row_less(rows[static_cast<size_t>(x)], degrees[static_cast<size_t>(x)],
                                rows[static_cast<size_t>(y)], degrees[static_cast<size_t>(y)]);
    });

    T.values.assign(static_cast<size_t>(r) * r, {});
    for (int i = 0; i < r; ++i) {
      T.degrees.push_back(degrees[static_cast<size_t>(perm[static_cast<size_t>(i)])]);
      for (int j = 0; j < r; ++j)
        T.values[static_cast<size_t>(i) * r + j] =
            rows[static_cast<size_t>(perm[static_cast<size_t>(i)])][static_cast<size_t>(j)];
    }
    for (int i = 0; i < r; ++i)
      T.kernels.push_back(kernel_members(
          G, T.classes,
          std::vector<std::complex<double>>(
              T.values.begin() + static_cast<long>(i) * r,
              T.values.begin() + static_cast<long>(i + 1) * r),
          T.degrees[static_cast<size_t>(i)], tol));
    return T;
  }
  throw NumericError("character table failed after " +
                     std::to_string(kMaxEigenAttempts) +
                     " eigensolver attempts: " + last_failure);
}

Subgroup character_kernel(const PermGroup& G, const CharacterTable& T, int i) {
  Subgroup K(G, T.kernels[static_cast<size_t>(i)]);
  // Kernels are unions of conjugacy classes, hence normal; assert anyway.
  for (int g = 0; g < G.order(); ++g)
    for (int m : K.members())
      GROUPLAT_CHECK(K.contains(G.mult(G.mult(g, m), G.inverse(g))),
                     "character kernel is not normal");
  return K;
}

bool has_faithful_irrep(const CharacterTable& T) {
  for (const auto& ker : T.kernels)
    if (ker.size() == 1) return true;
  return false;
}

std::int64_t faithful_dim_square_sum(const CharacterTable& T) {
  std::int64_t sum = 0;
  for (int i = 0; i < T.r; ++i)
    if (T.kernels[static_cast<size_t>(i)].size() == 1)
      sum = checked_add(sum, checked_mul(T.degrees[static_cast<size_t>(i)],
                                         T.degrees[static_cast<size_t>(i)]));
  return sum;
}

std::optional<int> min_faithful_components(const PermGroup& G,
                                           const CharacterTable& T) {
  const int n = G.order();
  // r = 0: the empty intersection is all of G.
  if (n == 1) return 0;

  std::vector<std::vector<int>> kernels = T.kernels;
  std::sort(kernels.begin(), kernels.end());
  kernels.erase(std::unique(kernels.begin(), kernels.end()), kernels.end());
  const int m = static_cast<int>(kernels.size());

  for (int r = 1; r <= m; ++r) {
    std::vector<int> pick(static_cast<size_t>(r));
    auto rec = [&](auto&& self, int depth, int from) -> bool {
      if (depth == r) {
        std::vector<int> inter = kernels[static_cast<size_t>(pick[0])];
        for (int d = 1; d < r && inter.size() > 1; ++d) {
          std::vector<int> next;
          std::set_intersection(
              inter.begin(), inter.end(),
              kernels[static_cast<size_t>(pick[static_cast<size_t>(d)])].begin(),
              kernels[static_cast<size_t>(pick[static_cast<size_t>(d)])].end(),
              std::back_inserter(next));
          inter = std::move(next);
        }
        return inter.size() == 1;
      }
      for (int i = from; i < m; ++i) {
        pick[static_cast<size_t>(depth)] = i;
        if (self(self, depth + 1, i + 1)) return true;
      }
      return false;
    };
    if (rec(rec, 0, 0)) return r;
  }
  return std::nullopt;  // unreachable for a complete character table
}

std::int64_t fixed_point_dim(const CharacterTable& T, int i, const Subgroup& K,
                             double int_tol) {
  std::complex<double> sum = 0.0;
  for (int x : K.members()) sum += T.value_at_element(i, x);
  std::complex<double> avg = sum / static_cast<double>(K.order());
  std::int64_t rounded = std::llround(avg.real());
  if (std::abs(avg.real() - static_cast<double>(rounded)) > int_tol ||
      std::abs(avg.imag()) > int_tol)
    throw NumericError("fixed-point dimension not integral: " +
                       std::to_string(avg.real()) + "+" +
                       std::to_string(avg.imag()) + "i");
  GROUPLAT_CHECK(rounded >= 0, "fixed-point dimension negative");
  return rounded;
}

bool is_linearly_primitive(const PermGroup& G, const Subgroup& H,
                           const CharacterTable& T, double int_tol) {
  // ⟨H, g⟩ per coset suffices: the subgroup generated depends only on Hg.
  std::vector<int> h_gens = H.small_generating_set();
  std::vector<Subgroup> extensions;
  std::vector<bool> covered(static_cast<size_t>(G.order()), false);
  for (int m : H.members()) covered[static_cast<size_t>(m)] = true;
  for (int g = 0; g < G.order(); ++g) {
    if (covered[static_cast<size_t>(g)]) continue;
    std::vector<int> gens = h_gens;
    gens.push_back(g);
    Subgroup E = generated_subgroup(G, gens);
    for (int m : H.members())
      covered[static_cast<size_t>(G.mult(m, g))] = true;
    extensions.push_back(std::move(E));
  }

  for (int i = 0; i < T.r; ++i) {
    std::int64_t dim_h = fixed_point_dim(T, i, H, int_tol);
    bool strict = true;
    for (const Subgroup& E : extensions)
      if (fixed_point_dim(T, i, E, int_tol) >= dim_h) {
        strict = false;
        break;
      }
    if (strict) return true;
  }
  return false;
}

}  // namespace grouplat
