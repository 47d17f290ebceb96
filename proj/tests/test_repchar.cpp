#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <memory>

#include "grouplat/catalog.hpp"
#include "grouplat/repchar.hpp"
#include "grouplat/subgroup_lattice.hpp"
#include "grouplat/totient.hpp"

using namespace grouplat;

namespace {

std::vector<int> sorted_degrees(const CharacterTable& T) {
  std::vector<int> d = T.degrees;
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace

TEST_CASE("class matrices") {
  SUBCASE("trivial group") {
    PermGroup G = PermGroup::close_generators(1, {});
    ClassData cd = class_data(G);
    auto M = class_matrices(G, cd);
    REQUIRE(M.size() == 1);
    CHECK(M[0] == std::vector<std::int64_t>{1});
  }
  SUBCASE("C2 class sums multiply like the group ring") {
    PermGroup G = parse_group_spec("C2");
    ClassData cd = class_data(G);
    auto M = class_matrices(G, cd);
    REQUIRE(M.size() == 2);
    // K_0 = identity: acts as identity matrix.
    CHECK(M[0] == std::vector<std::int64_t>{1, 0, 0, 1});
    // K_1 * K_1 = K_0, K_1 * K_0 = K_1.
    CHECK(M[1] == std::vector<std::int64_t>{0, 1, 1, 0});
  }
  SUBCASE("counting identity: sum_k a_ijk |C_k| = |C_i||C_j|") {
    for (const char* spec : {"S3", "Q8", "S4", "M16"}) {
      CAPTURE(spec);
      PermGroup G = parse_group_spec(spec);
      ClassData cd = class_data(G);
      auto M = class_matrices(G, cd);
      const int r = static_cast<int>(cd.classes.size());
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
          std::int64_t total = 0;
          for (int k = 0; k < r; ++k)
            total += M[static_cast<size_t>(i)][static_cast<size_t>(j) * r + k] *
                     cd.sizes[static_cast<size_t>(k)];
          CHECK(total == static_cast<std::int64_t>(cd.sizes[static_cast<size_t>(i)]) *
                             cd.sizes[static_cast<size_t>(j)]);
        }
    }
  }
}

TEST_CASE("character table of C2") {
  PermGroup G = parse_group_spec("C2");
  CharacterTable T = character_table(G);
  REQUIRE(T.r == 2);
  CHECK(T.degrees == std::vector<int>{1, 1});
  // Both rows are real with chi(1) = 1; one is trivial, one is the sign.
  bool has_trivial = false, has_sign = false;
  for (int i = 0; i < 2; ++i) {
    CHECK(T.value(i, 0) == std::complex<double>(1.0, 0.0));
    if (T.value(i, 1) == std::complex<double>(1.0, 0.0)) has_trivial = true;
    if (T.value(i, 1) == std::complex<double>(-1.0, 0.0)) has_sign = true;
  }
  CHECK(has_trivial);
  CHECK(has_sign);
}

TEST_CASE("character degrees of the classical small groups") {
  CHECK(sorted_degrees(character_table(parse_group_spec("S3"))) ==
        std::vector<int>{1, 1, 2});
  CHECK(sorted_degrees(character_table(parse_group_spec("Q8"))) ==
        std::vector<int>{1, 1, 1, 1, 2});
  CHECK(sorted_degrees(character_table(parse_group_spec("S4"))) ==
        std::vector<int>{1, 1, 2, 3, 3});
  CHECK(sorted_degrees(character_table(parse_group_spec("A5"))) ==
        std::vector<int>{1, 3, 3, 4, 5});
  CHECK(sorted_degrees(character_table(parse_group_spec("M16"))) ==
        std::vector<int>{1, 1, 1, 1, 1, 1, 1, 1, 2, 2});
}

TEST_CASE("character table invariants across sample groups") {
  for (const char* spec : {"C1", "C2", "C7", "C12", "S3", "S4", "A4", "A5",
                           "Q8", "D8", "D12", "M16", "C2xC2xC2", "C6xC2"}) {
    CAPTURE(spec);
    PermGroup G = parse_group_spec(spec);
    CharacterTable T = character_table(G);
    // #characters = #classes.
    CHECK(T.r == static_cast<int>(T.classes.classes.size()));
    // sum of squared degrees = |G| (exact integers).
    std::int64_t sum = 0;
    for (int d : T.degrees) sum += static_cast<std::int64_t>(d) * d;
    CHECK(sum == G.order());
    for (int d : T.degrees) CHECK(G.order() % d == 0);
    // Row orthogonality within 1e-8.
    for (int i = 0; i < T.r; ++i)
      for (int k = 0; k < T.r; ++k) {
        std::complex<double> inner = 0.0;
        for (int j = 0; j < T.r; ++j)
          inner += static_cast<double>(T.classes.sizes[static_cast<size_t>(j)]) *
                   T.value(i, j) * std::conj(T.value(k, j));
        inner /= static_cast<double>(G.order());
        CHECK(std::abs(inner - (i == k ? 1.0 : 0.0)) < 1e-8);
      }
    // Every kernel is one of the normal subgroups.
    std::vector<Subgroup> normals = normal_subgroups(G);
    for (int i = 0; i < T.r; ++i) {
      Subgroup K = character_kernel(G, T, i);
      bool found = false;
      for (const Subgroup& N : normals)
        if (N.members() == K.members()) found = true;
      CHECK(found);
    }
  }
}

TEST_CASE("character kernels of S3") {
  PermGroup G = parse_group_spec("S3");
  CharacterTable T = character_table(G);
  for (int i = 0; i < T.r; ++i) {
    Subgroup K = character_kernel(G, T, i);
    if (T.degrees[static_cast<size_t>(i)] == 2) {
      CHECK(K.order() == 1);  // the 2-dim representation is faithful
    } else {
      // Trivial character has kernel S3; the sign character has kernel A3.
      bool constant_one = true;
      for (int j = 0; j < T.r; ++j)
        if (std::abs(T.value(i, j) - std::complex<double>(1, 0)) > 1e-9)
          constant_one = false;
      CHECK(K.order() == (constant_one ? 6 : 3));
    }
  }
}

TEST_CASE("faithful irreducible detection and the squared-dimension sum") {
  PermGroup s3 = parse_group_spec("S3");
  CharacterTable t3 = character_table(s3);
  CHECK(has_faithful_irrep(t3));
  CHECK(faithful_dim_square_sum(t3) == 4);

  PermGroup v4 = parse_group_spec("C2xC2");
  CharacterTable t4 = character_table(v4);
  CHECK_FALSE(has_faithful_irrep(t4));
  CHECK(faithful_dim_square_sum(t4) == 0);

  // M16 has a faithful irreducible character although phi_hat(1, M16) = 0.
  PermGroup m16 = parse_group_spec("M16");
  CharacterTable t16 = character_table(m16);
  CHECK(has_faithful_irrep(t16));
  SubgroupLattice SL = build_subgroup_lattice(m16);
  CHECK(dual_euler_totient(SL, SL.trivial_index()) == 0);
}

TEST_CASE("minimal faithful component counts") {
  auto count = [](const char* spec) {
    PermGroup G = parse_group_spec(spec);
    CharacterTable T = character_table(G);
    return min_faithful_components(G, T);
  };
  CHECK(count("S3") == 1);
  CHECK(count("C2xC2") == 2);
  CHECK(count("C2xC2xC2") == 3);
  CHECK(count("C1") == 0);
  CHECK(count("Q8") == 1);
}

TEST_CASE("fixed point dimensions") {
  PermGroup G = parse_group_spec("S3");
  CharacterTable T = character_table(G);
  std::vector<int> everything{0, 1, 2, 3, 4, 5};
  Subgroup whole(G, everything);
  Subgroup trivial(G, {0});
  std::vector<Subgroup> c2s;
  for (const Subgroup& H : all_subgroups(G))
    if (H.order() == 2) c2s.push_back(H);
  REQUIRE(c2s.size() == 3);

  for (int i = 0; i < T.r; ++i) {
    // K = 1 gives the degree.
    CHECK(fixed_point_dim(T, i, trivial) == T.degrees[static_cast<size_t>(i)]);
    if (T.degrees[static_cast<size_t>(i)] == 2) {
      CHECK(fixed_point_dim(T, i, c2s[0]) == 1);  // (2 + 0) / 2
      CHECK(fixed_point_dim(T, i, whole) == 0);   // (2 + 0*3 - 1*2) / 6
    }
  }
}

TEST_CASE("linear primitivity") {
  PermGroup s3 = parse_group_spec("S3");
  CharacterTable t3 = character_table(s3);
  Subgroup trivial(s3, {0});
  CHECK(is_linearly_primitive(s3, trivial, t3));
  for (const Subgroup& H : all_subgroups(s3))
    if (H.order() == 2) CHECK(is_linearly_primitive(s3, H, t3));

  PermGroup v4 = parse_group_spec("C2xC2");
  CharacterTable t4 = character_table(v4);
  Subgroup trivial4(v4, {0});
  CHECK_FALSE(is_linearly_primitive(v4, trivial4, t4));

  // [G, G] is linearly primitive through the trivial character.
  std::vector<int> everything{0, 1, 2, 3, 4, 5};
  CHECK(is_linearly_primitive(s3, Subgroup(s3, everything), t3));
}

TEST_CASE("Pálfy identity: faithful deg^2 sum equals normal dual totient") {
  for (const char* spec : {"C1", "C2", "C6", "C12", "S3", "S4", "A4", "A5",
                           "Q8", "D8", "D12", "M16", "C2xC2", "C2xC2xC2",
                           "C6xC2"}) {
    CAPTURE(spec);
    PermGroup G = parse_group_spec(spec);
    CharacterTable T = character_table(G);
    CHECK(faithful_dim_square_sum(T) == normal_dual_totient(G));
  }
}

TEST_CASE("same seed gives a bit-identical table") {
  PermGroup G = parse_group_spec("S4");
  CharacterTable a = character_table(G, 1e-8, 42);
  CharacterTable b = character_table(G, 1e-8, 42);
  REQUIRE(a.r == b.r);
  CHECK(a.degrees == b.degrees);
  for (int i = 0; i < a.r; ++i)
    for (int j = 0; j < a.r; ++j) {
      CHECK(a.value(i, j).real() == b.value(i, j).real());
      CHECK(a.value(i, j).imag() == b.value(i, j).imag());
    }
  CHECK(a.kernels == b.kernels);

  // A different seed still gives the same table after canonical sorting.
  CharacterTable c = character_table(G, 1e-8, 707);
  CHECK(a.degrees == c.degrees);
  for (int i = 0; i < a.r; ++i)
    for (int j = 0; j < a.r; ++j)
      CHECK(std::abs(a.value(i, j) - c.value(i, j)) < 1e-8);
}

TEST_CASE("class cap is enforced") {
  // C64 is abelian: 64 classes > 60.
  PermGroup G = parse_group_spec("C64");
  CHECK_THROWS_AS(character_table(G), CapExceeded);
}
