#include "repart/constructions.hpp"

#include <stdexcept>
#include <string>

#include "repart/repfn.hpp"

namespace repart {

PartitionPair dombi_partition(std::uint64_t n)
{
  IntSet c(n);
  IntSet d(n);
  for (std::uint64_t i = 0; i <= n; ++i) {
    if (is_evil(i))
      c.insert(i);
    else
      d.insert(i);
  }
  return PartitionPair(std::move(c), std::move(d), n, IntersectionSpec::empty());
}

PartitionPair finite_tm_partition(unsigned l)
{
  if (l < 1) throw std::invalid_argument("finite_tm_partition: l must be >= 1");
  std::uint64_t m = (std::uint64_t{1} << l) - 1;
  return PartitionPair(evil_set(l), odious_set(l), m, IntersectionSpec::empty());
}

PartitionPair chen_lev_pair(unsigned l)
{
  if (l < 1) throw std::invalid_argument("chen_lev_pair: l must be >= 1");
  if (2 * l + 1 > 63)
    throw std::invalid_argument("chen_lev_pair: universe bound overflows");
  const std::uint64_t r = (std::uint64_t{1} << (2 * l)) - 1;
  const std::uint64_t m = (std::uint64_t{1} << (2 * l + 1)) - 2;
  IntSet a = evil_set(2 * l);
  IntSet b = odious_set(2 * l);
  IntSet c = set_union(a, shift(b, r));
  IntSet d = set_union(b, shift(a, r));
  return PartitionPair(std::move(c), std::move(d), m,
                       IntersectionSpec::finite({r}));
}

PartitionPair lift_partition(const IntSet& c0, const IntSet& d0,
                             std::uint64_t r, std::uint64_t m,
                             std::uint64_t blocks)
{
  if (blocks < 1) throw std::invalid_argument("lift_partition: blocks must be >= 1");
  if (r == 0 || r > m)
    throw std::invalid_argument("lift_partition: r must lie in (0, m]");
  if (!c0.contains(0))
    throw std::invalid_argument("lift_partition: 0 not in C0, offending index 0");
  if (auto bad = first_membership_difference(set_union(c0, d0),
                                             IntSet::interval(0, m)))
    throw std::invalid_argument(
        "lift_partition: C0 u D0 != [0, m], first offending index " +
        std::to_string(*bad));
  if (auto bad = first_membership_difference(set_intersection(c0, d0),
                                             IntSet::from_elements({r})))
    throw std::invalid_argument(
        "lift_partition: C0 n D0 != {r}, first offending index " +
        std::to_string(*bad));
  if (auto bad = first_mismatch(c0, d0, 2 * m))
    throw std::invalid_argument(
        "lift_partition: R_C0 != R_D0, first offending index " +
        std::to_string(*bad));

  const std::uint64_t width = m + 1;
  const std::uint64_t top = blocks * width - 1;
  IntSet c(top);
  IntSet d(top);
  auto c0_elems = c0.elements();
  auto d0_elems = d0.elements();
  for (std::uint64_t k = 0; k < blocks; ++k) {
    const std::uint64_t base = k * width;
    const auto& into_c = is_evil(k) ? c0_elems : d0_elems;
    const auto& into_d = is_evil(k) ? d0_elems : c0_elems;
    for (std::uint64_t e : into_c) c.insert(base + e);
    for (std::uint64_t e : into_d) d.insert(base + e);
  }

  PartitionPair pair(std::move(c), std::move(d), top,
                     IntersectionSpec::periodic(r, width));
  // The block assignment is only a candidate witness for the lifting; it is
  // never trusted without re-deriving representation equality over the whole
  // emitted prefix.
  if (auto bad = first_mismatch(pair.c(), pair.d(), top))
    throw std::logic_error(
        "lift_partition: lifted pair loses representation equality at n=" +
        std::to_string(*bad));
  return pair;
}

std::pair<IntSet, IntSet> doubling_step(const IntSet& al, const IntSet& bl,
                                        unsigned l)
{
  if (l < 1 || l > 62) throw std::invalid_argument("doubling_step: l out of range");
  const std::uint64_t half = std::uint64_t{1} << l;
  if (auto bad = first_membership_difference(set_union(al, bl),
                                             IntSet::interval(0, half - 1)))
    throw std::invalid_argument(
        "doubling_step: inputs do not partition [0, 2^l - 1] (union wrong at " +
        std::to_string(*bad) + ")");
  if (!set_intersection(al, bl).empty())
    throw std::invalid_argument("doubling_step: inputs are not disjoint");
  return {set_union(al, shift(bl, half)), set_union(bl, shift(al, half))};
}

}  // namespace repart
