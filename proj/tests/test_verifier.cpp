#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "oracles.hpp"
#include "repart/constructions.hpp"
#include "repart/repfn.hpp"
#include "repart/verifier.hpp"

using namespace repart;

TEST_CASE("forced_extension anchor cases")
{
  ForcingOutcome empty3 = forced_extension(3, IntersectionSpec::empty(), 6);
  REQUIRE(empty3.unique());
  CHECK(empty3.pair->c() == IntSet::from_elements({0, 3}));
  CHECK(empty3.pair->d() == IntSet::from_elements({1, 2}));

  ForcingOutcome r3 = forced_extension(6, IntersectionSpec::finite({3}), 12);
  REQUIRE(r3.unique());
  CHECK(r3.pair->c() == IntSet::from_elements({0, 3, 4, 5}));
  CHECK(r3.pair->d() == IntSet::from_elements({1, 2, 3, 6}));

  ForcingOutcome empty4 = forced_extension(4, IntersectionSpec::empty(), 8);
  CHECK(!empty4.unique());
  CHECK(empty4.failure_index.has_value());
}

TEST_CASE("forced_extension argument validation")
{
  CHECK_THROWS_AS(forced_extension(0, IntersectionSpec::empty()),
                  std::invalid_argument);
  CHECK_THROWS_AS(forced_extension(6, IntersectionSpec::empty(), 3),
                  std::invalid_argument);
  // spec element beyond (0, m]
  CHECK_THROWS_AS(forced_extension(6, IntersectionSpec::finite({9})),
                  std::invalid_argument);
  // 0 in the prescribed intersection: the forcing argument needs 0 not in D
  CHECK_THROWS_AS(forced_extension(6, IntersectionSpec::periodic(0, 3)),
                  std::invalid_argument);
}

TEST_CASE("exhaustive_search anchor cases")
{
  auto survivors7 = exhaustive_search(7, IntersectionSpec::empty(), 14);
  REQUIRE(survivors7.size() == 1);
  CHECK(survivors7[0].c() == IntSet::from_elements({0, 3, 5, 6}));
  CHECK(survivors7[0].d() == IntSet::from_elements({1, 2, 4, 7}));

  CHECK(exhaustive_search(5, IntersectionSpec::empty(), 10).empty());

  auto survivors6 = exhaustive_search(6, IntersectionSpec::finite({3}), 12);
  REQUIRE(survivors6.size() == 1);
  PartitionPair expected = chen_lev_pair(1);
  CHECK(survivors6[0].c() == expected.c());
  CHECK(survivors6[0].d() == expected.d());

  CHECK_THROWS_AS(exhaustive_search(23, IntersectionSpec::empty(), 46),
                  CapExceeded);
  CHECK(exhaustive_search(23, IntersectionSpec::empty(), 46, 25).empty());
}

TEST_CASE("oracle agreement and uniqueness for small m")
{
  for (std::uint64_t m = 1; m <= 12; ++m) {
    std::vector<IntersectionSpec> specs{IntersectionSpec::empty()};
    for (std::uint64_t r = 1; r <= m; ++r)
      specs.push_back(IntersectionSpec::finite({r}));
    for (const auto& spec : specs) {
      auto brute = exhaustive_search(m, spec, 2 * m);
      CHECK(brute.size() <= 1);  // at most one survivor per finite prescription
      ForcingOutcome forced = forced_extension(m, spec, 2 * m);
      REQUIRE(forced.unique() == (brute.size() == 1));
      if (forced.unique()) {
        CHECK(forced.pair->c() == brute[0].c());
        CHECK(forced.pair->d() == brute[0].d());
      }
    }
  }
}

TEST_CASE("forcing outcomes are invariant under a larger horizon")
{
  for (std::uint64_t m : {3, 4, 6, 7, 10, 15}) {
    ForcingOutcome base = forced_extension(m, IntersectionSpec::empty(), 2 * m);
    ForcingOutcome wide = forced_extension(m, IntersectionSpec::empty(), 3 * m);
    CHECK(base.unique() == wide.unique());
    if (base.unique()) CHECK(base.pair->c() == wide.pair->c());
  }
  ForcingOutcome base = forced_extension(6, IntersectionSpec::finite({3}), 12);
  ForcingOutcome wide = forced_extension(6, IntersectionSpec::finite({3}), 30);
  CHECK(base.unique());
  CHECK(wide.unique());
  CHECK(base.pair->c() == wide.pair->c());
}

TEST_CASE("classify_theorem3 small sweep")
{
  Theorem3Report report = classify_theorem3(16);
  CHECK(report.conforms);
  REQUIRE(report.hits.size() == 4);
  std::vector<std::uint64_t> ms;
  for (const auto& hit : report.hits) {
    ms.push_back(hit.m);
    CHECK(hit.matches_thue_morse);
  }
  CHECK(ms == std::vector<std::uint64_t>{1, 3, 7, 15});

  // the m = 15 solution is (A_4, B_4)
  ForcingOutcome m15 = forced_extension(15, IntersectionSpec::empty());
  REQUIRE(m15.unique());
  CHECK(m15.pair->c() == evil_set(4));
  CHECK(m15.pair->d() == odious_set(4));

  CHECK(!forced_extension(2, IntersectionSpec::empty()).unique());
}

TEST_CASE("classify_theorem6 small sweep")
{
  Theorem6Report report = classify_theorem6(40);
  CHECK(report.conforms);
  REQUIRE(report.hits.size() == 2);
  CHECK(report.hits[0].m == 6);
  CHECK(report.hits[0].r == 3);
  CHECK(report.hits[0].matches_chen_lev);
  CHECK(report.hits[1].m == 30);
  CHECK(report.hits[1].r == 15);
  CHECK(report.hits[1].matches_chen_lev);

  CHECK(!forced_extension(6, IntersectionSpec::finite({2})).unique());
}

TEST_CASE("reflection closure on the single-intersection survivors")
{
  // a survivor of (m, {r}) reflects to a survivor of (m, {m-r}); the found
  // cells are self-mirrored, so the reflected pair must be the same pair up
  // to the 0-in-C renaming
  for (unsigned l : {1u, 2u}) {
    PartitionPair pair = chen_lev_pair(l);
    std::uint64_t m = pair.m();
    std::uint64_t r = pair.intersection().finite_values()[0];
    IntSet c_prime = reflect(pair.c(), m);
    IntSet d_prime = reflect(pair.d(), m);
    // renormalize: 0 must sit in the C slot
    if (!c_prime.contains(0)) std::swap(c_prime, d_prime);
    ForcingOutcome again = forced_extension(m, IntersectionSpec::finite({m - r}));
    REQUIRE(again.unique());
    CHECK(again.pair->c() == c_prime);
    CHECK(again.pair->d() == d_prime);
  }
}

TEST_CASE("corollary1_witness anchor cases")
{
  CHECK(corollary1_witness(4) == 5);
  auto w5 = corollary1_witness(5);
  REQUIRE(w5.has_value());
  CHECK(*w5 > 5);
  CHECK(*w5 < 10);
  CHECK_THROWS_AS(corollary1_witness(7), std::invalid_argument);
  CHECK_THROWS_AS(corollary1_witness(0), std::invalid_argument);

  for (std::uint64_t m = 2; m <= 300; ++m) {
    if ((m & (m + 1)) == 0) continue;
    auto w = corollary1_witness(m);
    REQUIRE(w.has_value());
    CHECK(*w > m);
    CHECK(*w < 2 * m);
  }
}

TEST_CASE("claim34_check anchor cases")
{
  // M=7: predecessors {6,5,3} all evil; M=6: {5,4,2} mixed
  Claim34Report report = claim34_check(1 << 10);
  CHECK(report.conforms);
  bool saw7 = false, saw6 = false;
  for (const auto& hit : report.hits) {
    CHECK(hit.all_ones);
    if (hit.m == 7) {
      saw7 = true;
      CHECK(hit.in_evil);
    }
    if (hit.m == 6) saw6 = true;
  }
  CHECK(saw7);
  CHECK(!saw6);
  // hits are exactly the all-ones values
  CHECK(report.hits.size() == 10);
}

TEST_CASE("progression_search reproduces the lifted pair")
{
  ProgressionReport report =
      progression_search(IntersectionSpec::periodic(3, 7), 27);
  CHECK(report.n_star == 27);
  PartitionPair base = chen_lev_pair(1);
  PartitionPair lifted = lift_partition(base.c(), base.d(), 3, 6, 4);
  CHECK(report.witness_c == lifted.c());
  CHECK(report.witness_d == lifted.d());
  CHECK(report.nodes > 0);
}

TEST_CASE("progression_search on kN specs stalls immediately")
{
  // 0 sits in both sets, so position 1 (in exactly one of them) breaks
  // R_C(1) = R_D(1) whichever way it goes
  for (std::uint64_t k = 2; k <= 5; ++k) {
    ProgressionReport report =
        progression_search(IntersectionSpec::periodic(0, k), 24);
    CHECK(report.n_star == 0);
    CHECK(report.n_star < 24);
  }
}

TEST_CASE("progression_search n_star agrees with exhaustive enumeration")
{
  // enumerate every spec-consistent assignment of [0, N] and take the best
  // first-violation depth
  auto oracle_n_star = [](std::uint64_t offset, std::uint64_t period,
                          std::uint64_t n_max) {
    IntSet inter = IntersectionSpec::periodic(offset, period).materialize(n_max);
    std::vector<std::uint64_t> free_positions;
    for (std::uint64_t v = 0; v <= n_max; ++v)
      if (!inter.contains(v) && v != 0) free_positions.push_back(v);
    std::int64_t best = -1;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << free_positions.size());
         ++mask) {
      std::vector<std::uint64_t> c_elems, d_elems;
      for (std::uint64_t v = 0; v <= n_max; ++v) {
        if (inter.contains(v)) {
          c_elems.push_back(v);
          d_elems.push_back(v);
        }
      }
      if (!inter.contains(0)) c_elems.push_back(0);
      for (std::size_t j = 0; j < free_positions.size(); ++j)
        ((mask >> j) & 1 ? c_elems : d_elems).push_back(free_positions[j]);
      auto rc = oracle::rep_counts(c_elems, n_max);
      auto rd = oracle::rep_counts(d_elems, n_max);
      std::int64_t depth = static_cast<std::int64_t>(n_max);
      for (std::uint64_t n = 0; n <= n_max; ++n)
        if (rc[n] != rd[n]) {
          depth = static_cast<std::int64_t>(n) - 1;
          break;
        }
      if (depth > best) best = depth;
    }
    return best;
  };

  for (std::uint64_t k = 2; k <= 5; ++k) {
    std::uint64_t n_max = 14;
    ProgressionReport report =
        progression_search(IntersectionSpec::periodic(0, k), n_max);
    CHECK(static_cast<std::int64_t>(report.n_star) ==
          oracle_n_star(0, k, n_max));
  }
  ProgressionReport lifted =
      progression_search(IntersectionSpec::periodic(3, 7), 13);
  CHECK(static_cast<std::int64_t>(lifted.n_star) == oracle_n_star(3, 7, 13));
}

TEST_CASE("progression_search guards")
{
  CHECK_THROWS_AS(progression_search(IntersectionSpec::periodic(0, 4), 100),
                  CapExceeded);
  CHECK_THROWS_AS(progression_search(IntersectionSpec::finite({3}), 20),
                  std::invalid_argument);
  // the k = 1 progression doubles every point; the prescription type itself
  // rejects it (period must be >= 2), so there is nothing to search
  CHECK_THROWS_AS(IntersectionSpec::periodic(0, 1), std::invalid_argument);
}
