#include <doctest.h>

#include <algorithm>
#include <memory>

#include "grouplat/catalog.hpp"
#include "grouplat/errors.hpp"
#include "grouplat/subgroup_lattice.hpp"

using namespace grouplat;

namespace {

// Face lattice of the square: empty face, 4 vertices, 4 edges, the square.
const char* kSquareFaceLatticeJson = R"({
  "elements": ["empty", "v1", "v2", "v3", "v4",
               "e12", "e23", "e34", "e41", "square"],
  "covers": [[0,1],[0,2],[0,3],[0,4],
             [1,5],[2,5],[2,6],[3,6],[3,7],[4,7],[4,8],[1,8],
             [5,9],[6,9],[7,9],[8,9]]
})";

SubgroupLattice lattice_of(const char* spec) {
  static std::vector<std::unique_ptr<PermGroup>> keep_alive;
  keep_alive.push_back(std::make_unique<PermGroup>(parse_group_spec(spec)));
  return build_subgroup_lattice(*keep_alive.back());
}

// Unique lattice element whose subgroup has the given order; -1 if not unique.
int unique_of_order(const SubgroupLattice& SL, int order) {
  int found = -1;
  for (int i = 0; i < SL.lattice.size(); ++i)
    if (SL.order_of(i) == order) {
      if (found != -1) return -1;
      found = i;
    }
  return found;
}

}  // namespace

TEST_CASE("subgroup lattice shapes") {
  SubgroupLattice s3 = lattice_of("S3");
  CHECK(s3.lattice.size() == 6);
  CHECK(s3.lattice.atoms().size() == 4);
  CHECK(s3.lattice.coatoms().size() == 4);
  CHECK(s3.order_of(s3.lattice.bottom()) == 1);
  CHECK(s3.order_of(s3.lattice.top()) == 6);

  SubgroupLattice c6 = lattice_of("C6");
  CHECK(c6.lattice.size() == 4);
  CHECK(c6.lattice.atoms().size() == 2);  // C2 and C3

  PermGroup trivial = PermGroup::close_generators(1, {});
  FinLattice L1 = from_subgroups(trivial, all_subgroups(trivial));
  CHECK(L1.size() == 1);
  CHECK(L1.bottom() == L1.top());
}

TEST_CASE("interval extraction") {
  SubgroupLattice s3 = lattice_of("S3");
  int c2 = -1;
  for (int i = 0; i < s3.lattice.size(); ++i)
    if (s3.order_of(i) == 2) {
      c2 = i;
      break;
    }
  REQUIRE(c2 >= 0);
  FinLattice chain = s3.lattice.interval(c2, s3.lattice.top());
  CHECK(chain.size() == 2);  // C2 is maximal in S3

  FinLattice point = s3.lattice.interval(c2, c2);
  CHECK(point.size() == 1);

  SubgroupLattice c6 = lattice_of("C6");
  FinLattice whole =
      c6.lattice.interval(c6.lattice.bottom(), c6.lattice.top());
  CHECK(whole.size() == c6.lattice.size());

  CHECK_THROWS_AS(s3.lattice.interval(s3.lattice.top(), c2),
                  InvariantViolation);
}

TEST_CASE("interval operations agree with the parent lattice") {
  SubgroupLattice s4 = lattice_of("S4");
  std::vector<int> back;
  FinLattice I = s4.lattice.interval(s4.lattice.bottom(), s4.lattice.top(), &back);
  for (int a = 0; a < I.size(); ++a)
    for (int b = 0; b < I.size(); ++b) {
      CHECK(back[static_cast<size_t>(I.meet(a, b))] ==
            s4.lattice.meet(back[static_cast<size_t>(a)], back[static_cast<size_t>(b)]));
      CHECK(back[static_cast<size_t>(I.join(a, b))] ==
            s4.lattice.join(back[static_cast<size_t>(a)], back[static_cast<size_t>(b)]));
    }
}

TEST_CASE("Möbius values, frozen from the defining recursion by hand") {
  // L(S3): mu(S3,S3)=1; mu at each of the 4 coatoms is -1;
  // mu(1,S3) = -(1 - 3 - 1) = 3.
  SubgroupLattice s3 = lattice_of("S3");
  MobiusTable mu = mobius_recursive(s3.lattice);
  CHECK(mu(s3.lattice.bottom(), s3.lattice.top()) == 3);
  int c3 = unique_of_order(s3, 3);
  REQUIRE(c3 >= 0);
  CHECK(mu(c3, s3.lattice.top()) == -1);

  // L(C4) is the chain 1 < C2 < C4: mu(1, C4) = 0.
  SubgroupLattice c4 = lattice_of("C4");
  MobiusTable mu4 = mobius_recursive(c4.lattice);
  CHECK(mu4(c4.lattice.bottom(), c4.lattice.top()) == 0);

  // mu(a, a) = 1 everywhere.
  for (int a = 0; a < s3.lattice.size(); ++a) CHECK(mu(a, a) == 1);
}

TEST_CASE("Möbius defining identity re-asserted on the built table") {
  for (const char* spec : {"S3", "C12", "Q8", "S4", "M16"}) {
    CAPTURE(spec);
    SubgroupLattice SL = lattice_of(spec);
    MobiusTable mu = mobius_recursive(SL.lattice);
    const FinLattice& L = SL.lattice;
    for (int a = 0; a < L.size(); ++a)
      for (int b = 0; b < L.size(); ++b) {
        if (a == b || !L.leq(a, b)) continue;
        std::int64_t sum = 0;
        for (int c = 0; c < L.size(); ++c)
          if (L.leq(a, c) && L.leq(c, b)) sum += mu(c, b);
        CHECK(sum == 0);
      }
  }
}

TEST_CASE("crosscut agrees with recursion on every element") {
  for (const char* spec : {"S3", "C4", "C6", "C12", "Q8", "D8", "M16", "S4",
                           "A4", "C2xC2xC2"}) {
    CAPTURE(spec);
    SubgroupLattice SL = lattice_of(spec);
    MobiusTable mu = mobius_recursive(SL.lattice);
    std::vector<std::int64_t> cc = mobius_crosscut_to_top(SL.lattice);
    for (int a = 0; a < SL.lattice.size(); ++a)
      CHECK(cc[static_cast<size_t>(a)] == mu(a, SL.lattice.top()));
  }
}

TEST_CASE("crosscut spec examples") {
  SubgroupLattice s3 = lattice_of("S3");
  CHECK(mobius_crosscut(s3.lattice, s3.lattice.bottom()) == 3);
  CHECK(mobius_crosscut(s3.lattice, s3.lattice.top()) == 1);  // only I = {}

  SubgroupLattice c4 = lattice_of("C4");
  CHECK(mobius_crosscut(c4.lattice, c4.lattice.bottom()) == 0);

  // Coatom cap.
  SubgroupLattice big = lattice_of("S4");
  CHECK_THROWS_AS(mobius_crosscut(big.lattice, 0, 3), CapExceeded);
}

TEST_CASE("bottom and top intervals") {
  // top interval of L(C4) is [C2, C4]: the Frattini subgroup is C2.
  SubgroupLattice c4 = lattice_of("C4");
  CHECK(top_interval(c4.lattice).size() == 2);
  int base = top_interval_base(c4.lattice);
  CHECK(c4.order_of(base) == 2);

  // bottom interval of L(M16) has top of order 4 with profile {1,2,2,2}.
  SubgroupLattice m16 = lattice_of("M16");
  int bt = bottom_interval_top(m16.lattice);
  CHECK(m16.order_of(bt) == 4);
  CHECK(m16.subgroup(bt).order_profile() == std::vector<int>{1, 2, 2, 2});

  // A Boolean lattice is its own bottom interval.
  SubgroupLattice c6 = lattice_of("C6");
  CHECK(bottom_interval(c6.lattice).size() == c6.lattice.size());
}

TEST_CASE("Boolean classification") {
  CHECK(is_boolean(lattice_of("C6").lattice));        // B_2
  CHECK(is_boolean(lattice_of("C30").lattice));       // B_3
  CHECK_FALSE(is_boolean(lattice_of("C4").lattice));  // chain
  CHECK_FALSE(is_boolean(lattice_of("S3").lattice));  // 4 atoms, 6 elements
}

TEST_CASE("gradedness and Eulerian classification") {
  // Boolean lattices are Eulerian.
  CHECK(is_eulerian(lattice_of("C6").lattice));
  CHECK(is_eulerian(lattice_of("C30").lattice));

  // mu(1, S3) = 3 rules out Eulerian regardless of grading.
  CHECK_FALSE(is_eulerian(lattice_of("S3").lattice));

  // Chains are graded but mu vanishes above length 1.
  SubgroupLattice c4 = lattice_of("C4");
  auto rank = grading(c4.lattice);
  REQUIRE(rank.has_value());
  CHECK((*rank)[static_cast<size_t>(c4.lattice.top())] == 2);
  CHECK_FALSE(is_eulerian(c4.lattice));
}

TEST_CASE("square face lattice: Eulerian but not Boolean") {
  FinLattice L = lattice_from_json(kSquareFaceLatticeJson);
  REQUIRE(L.size() == 10);
  CHECK(L.atoms().size() == 4);
  CHECK(L.coatoms().size() == 4);
  auto rank = grading(L);
  REQUIRE(rank.has_value());
  CHECK((*rank)[static_cast<size_t>(L.top())] == 3);
  CHECK(is_eulerian(L));
  CHECK_FALSE(is_boolean(L));
  // Spot value from the recursion: mu(bottom, top) = -1 = (-1)^3.
  MobiusTable mu = mobius_recursive(L);
  CHECK(mu(L.bottom(), L.top()) == -1);
  CHECK(mobius_crosscut(L, L.bottom()) == -1);
}

TEST_CASE("distributivity") {
  CHECK(is_distributive(lattice_of("C4").lattice));  // a chain
  CHECK(is_distributive(lattice_of("C6").lattice));
  // L(C2xC2) is the 3-atom diamond M3.
  CHECK_FALSE(is_distributive(lattice_of("C2xC2").lattice));
}

TEST_CASE("Boolean implies Eulerian and distributive") {
  for (const char* spec : {"C6", "C30", "C2", "C1", "C42"}) {
    CAPTURE(spec);
    FinLattice L = lattice_of(spec).lattice;
    if (!is_boolean(L)) continue;
    CHECK(is_eulerian(L));
    CHECK(is_distributive(L));
  }
}

TEST_CASE("reversed lattice swaps meet and join") {
  SubgroupLattice s3 = lattice_of("S3");
  FinLattice R = s3.lattice.reversed();
  CHECK(R.bottom() == s3.lattice.top());
  CHECK(R.top() == s3.lattice.bottom());
  for (int a = 0; a < R.size(); ++a)
    for (int b = 0; b < R.size(); ++b) {
      CHECK(R.meet(a, b) == s3.lattice.join(a, b));
      CHECK(R.join(a, b) == s3.lattice.meet(a, b));
    }
}

TEST_CASE("lattice JSON round trip") {
  SubgroupLattice q8 = lattice_of("Q8");
  std::string text = lattice_to_json(q8.lattice);
  FinLattice back = lattice_from_json(text);
  REQUIRE(back.size() == q8.lattice.size());
  for (int a = 0; a < back.size(); ++a) {
    CHECK(back.label(a) == q8.lattice.label(a));
    for (int b = 0; b < back.size(); ++b)
      CHECK(back.leq(a, b) == q8.lattice.leq(a, b));
  }
}

TEST_CASE("lattice JSON error paths") {
  CHECK_THROWS_AS(lattice_from_json("not json"), ParseError);
  CHECK_THROWS_AS(lattice_from_json("{\"elements\": []}"), ParseError);
  CHECK_THROWS_AS(lattice_from_json(
                      R"({"elements": ["a"], "covers": [[0, 5]]})"),
                  ParseError);
  // Two maximal elements: not a lattice.
  CHECK_THROWS_AS(lattice_from_json(
                      R"({"elements": ["a","b","c"], "covers": [[0,1],[0,2]]})"),
                  InvariantViolation);
}

TEST_CASE("from_subgroups rejects families that are not join-closed") {
  PermGroup g = parse_group_spec("C2xC2");
  std::vector<Subgroup> subs = all_subgroups(g);
  REQUIRE(subs.size() == 5);
  // Drop the whole group: the two atoms have no join in the family.
  subs.pop_back();
  CHECK_THROWS_AS(from_subgroups(g, subs), InvariantViolation);
}
