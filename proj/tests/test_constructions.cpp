#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "oracles.hpp"
#include "repart/constructions.hpp"
#include "repart/repfn.hpp"

using namespace repart;

TEST_CASE("dombi_partition anchor values")
{
  PartitionPair p3 = dombi_partition(3);
  CHECK(p3.c() == IntSet::from_elements({0, 3}));
  CHECK(p3.d() == IntSet::from_elements({1, 2}));
  CHECK(p3.m() == 3);

  PartitionPair p0 = dombi_partition(0);
  CHECK(p0.c() == IntSet::from_elements({0}));
  CHECK(p0.d().empty());

  PartitionPair p7 = dombi_partition(7);
  CHECK(p7.c() == IntSet::from_elements({0, 3, 5, 6}));
  CHECK(p7.d() == IntSet::from_elements({1, 2, 4, 7}));
}

TEST_CASE("dombi_partition matches the digit-sum filter at odd endpoints")
{
  PartitionPair p = dombi_partition(100);
  CHECK(p.c().elements() == oracle::evil_upto(100));
  CHECK(p.d().elements() == oracle::odious_upto(100));
}

TEST_CASE("finite_tm_partition anchor values and equality up to 2^(l+1)")
{
  PartitionPair p1 = finite_tm_partition(1);
  CHECK(p1.c() == IntSet::from_elements({0}));
  CHECK(p1.d() == IntSet::from_elements({1}));
  CHECK(finite_tm_partition(2).c() == IntSet::from_elements({0, 3}));
  CHECK(finite_tm_partition(3).d() == IntSet::from_elements({1, 2, 4, 7}));
  CHECK_THROWS_AS(finite_tm_partition(0), std::invalid_argument);

  for (unsigned l = 1; l <= 10; ++l) {
    PartitionPair p = finite_tm_partition(l);
    CHECK(first_mismatch(p.c(), p.d(), std::uint64_t{1} << (l + 1)) ==
          std::nullopt);
  }
}

TEST_CASE("chen_lev_pair l=1 is the hand-assembled pair")
{
  PartitionPair p = chen_lev_pair(1);
  CHECK(p.c() == IntSet::from_elements({0, 3, 4, 5}));
  CHECK(p.d() == IntSet::from_elements({1, 2, 3, 6}));
  CHECK(p.m() == 6);
  CHECK(set_intersection(p.c(), p.d()) == IntSet::from_elements({3}));

  // both tables carry value 1 exactly at {3,4,5,7,8,9}
  auto rc = oracle::rep_counts(p.c().elements(), 12);
  auto rd = oracle::rep_counts(p.d().elements(), 12);
  CHECK(rc == rd);
  for (std::uint64_t n = 0; n <= 12; ++n)
    CHECK(rc[n] == ((n >= 3 && n <= 9 && n != 6) ? 1 : 0));
}

TEST_CASE("chen_lev_pair sizes and structure across l")
{
  PartitionPair p2 = chen_lev_pair(2);
  CHECK(p2.m() == 30);
  CHECK(p2.intersection().finite_values() == std::vector<std::uint64_t>{15});
  CHECK(p2.c().size() == 16);
  CHECK(p2.d().size() == 16);

  for (unsigned l = 1; l <= 4; ++l) {
    PartitionPair p = chen_lev_pair(l);
    std::uint64_t r = (std::uint64_t{1} << (2 * l)) - 1;
    CHECK(p.m() == 2 * r);
    CHECK(set_union(p.c(), p.d()) == IntSet::interval(0, p.m()));
    CHECK(set_intersection(p.c(), p.d()) == IntSet::from_elements({r}));
    CHECK(first_mismatch(p.c(), p.d(), 2 * p.m()) == std::nullopt);
  }
  CHECK_THROWS_AS(chen_lev_pair(0), std::invalid_argument);
}

TEST_CASE("doubling_step anchor values and the popcount cross-check")
{
  auto [a2, b2] = doubling_step(IntSet::from_elements({0}),
                                IntSet::from_elements({1}), 1);
  CHECK(a2 == IntSet::from_elements({0, 3}));
  CHECK(b2 == IntSet::from_elements({1, 2}));

  auto [a3, b3] = doubling_step(IntSet::from_elements({0, 3}),
                                IntSet::from_elements({1, 2}), 2);
  CHECK(a3 == IntSet::from_elements({0, 3, 5, 6}));
  CHECK(b3 == IntSet::from_elements({1, 2, 4, 7}));

  IntSet a = IntSet::from_elements({0});
  IntSet b = IntSet::from_elements({1});
  for (unsigned l = 1; l <= 16; ++l) {
    CHECK(a == evil_set(l));
    CHECK(b == odious_set(l));
    if (l < 16) std::tie(a, b) = doubling_step(a, b, l);
  }
}

TEST_CASE("doubling_step rejects non-partitions")
{
  CHECK_THROWS_AS(doubling_step(IntSet::from_elements({0, 1}),
                                IntSet::from_elements({1}), 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(doubling_step(IntSet::from_elements({0}),
                                IntSet::from_elements({2}), 1),
                  std::invalid_argument);
}

TEST_CASE("lift_partition anchor cases")
{
  PartitionPair base = chen_lev_pair(1);

  PartitionPair k1 = lift_partition(base.c(), base.d(), 3, 6, 1);
  CHECK(k1.c() == base.c());
  CHECK(k1.d() == base.d());

  PartitionPair k4 = lift_partition(base.c(), base.d(), 3, 6, 4);
  CHECK(k4.m() == 27);
  CHECK(set_intersection(k4.c(), k4.d()) ==
        IntSet::from_elements({3, 10, 17, 24}));
  CHECK(set_union(k4.c(), k4.d()) == IntSet::interval(0, 27));
  CHECK(first_mismatch(k4.c(), k4.d(), 27) == std::nullopt);

  // blocks follow the evil/odious pattern of the block index: block 1 of C
  // carries 7 + D0
  for (std::uint64_t e : base.d().elements()) CHECK(k4.c().contains(7 + e));
}

TEST_CASE("lift_partition representation equality over longer prefixes")
{
  for (unsigned l = 1; l <= 2; ++l) {
    PartitionPair base = chen_lev_pair(l);
    std::uint64_t r = base.intersection().finite_values()[0];
    for (std::uint64_t blocks : {2, 7, 32, 64}) {
      PartitionPair lifted =
          lift_partition(base.c(), base.d(), r, base.m(), blocks);
      std::uint64_t top = blocks * (base.m() + 1) - 1;
      CHECK(lifted.m() == top);
      CHECK(set_union(lifted.c(), lifted.d()) == IntSet::interval(0, top));
      CHECK(set_intersection(lifted.c(), lifted.d()) ==
            IntersectionSpec::periodic(r, base.m() + 1).materialize(top));
      CHECK(first_mismatch(lifted.c(), lifted.d(), top) == std::nullopt);
    }
  }
}

TEST_CASE("lift_partition rejects broken bases with the offending index")
{
  PartitionPair base = chen_lev_pair(1);

  // hole at 6 in the cover
  IntSet d_hole = IntSet::from_elements({1, 2, 3});
  CHECK_THROWS_WITH_AS(lift_partition(base.c(), d_hole, 3, 6, 2),
                       doctest::Contains("offending index 6"),
                       std::invalid_argument);
  // intersection is {3, 4}, not {3}
  IntSet d_extra = IntSet::from_elements({1, 2, 3, 4, 6});
  CHECK_THROWS_WITH_AS(lift_partition(base.c(), d_extra, 3, 6, 2),
                       doctest::Contains("offending index 4"),
                       std::invalid_argument);
  // 0 on the wrong side
  CHECK_THROWS_AS(lift_partition(base.d(), base.c(), 3, 6, 2),
                  std::invalid_argument);
  // cover and intersection fine, representation equality broken:
  // C = {0,1,3,6}, D = {2,3,4,5} covers [0,6] with intersection {3} but
  // R_C(1) = 1 != 0 = R_D(1)
  CHECK_THROWS_WITH_AS(
      lift_partition(IntSet::from_elements({0, 1, 3, 6}),
                     IntSet::from_elements({2, 3, 4, 5}), 3, 6, 2),
      doctest::Contains("offending index 1"), std::invalid_argument);
  // r outside (0, m]
  CHECK_THROWS_AS(lift_partition(base.c(), base.d(), 0, 6, 2),
                  std::invalid_argument);
}
