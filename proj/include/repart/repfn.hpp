#pragma once

// Representation functions R_S(n) = #{(s, s'): s < s', s, s' in S, s + s' = n}
// and cross-representation counts, as single points (naive pair scan, the
// oracle) and as full tables (word-parallel convolution, the fast path).

#include <cstdint>
#include <optional>
#include <vector>

#include "repart/core_sets.hpp"

namespace repart {

/// R_S(0..n_max) or a cross-representation sequence. values[n] is the count
/// at n; out-of-range reads are defined as 0, matching the convention that a
/// representation count at a negative argument is empty.
struct RepTable {
  std::vector<std::uint32_t> values;

  std::uint64_t n_max() const noexcept { return values.size() - 1; }
  std::uint32_t at(std::uint64_t n) const noexcept
  {
    return n < values.size() ? values[n] : 0;
  }
  std::uint32_t at_offset(std::uint64_t n, std::uint64_t minus) const noexcept
  {
    return n >= minus ? at(n - minus) : 0;
  }
};

/// Direct pair scan; the reference implementation all fast paths are tested
/// against.
std::uint64_t repfn_point(const IntSet& s, std::uint64_t n);

/// R_S(0..n_max) as half of the self-convolution of the characteristic
/// sequence minus the even-index diagonal chi_S(n/2). Agrees with
/// repfn_point at every index.
RepTable repfn_table(const IntSet& s, std::uint64_t n_max);

/// Entry n is #{(s, t): s in S, t in T, s + t = n}, ordered; S and T need
/// not be disjoint.
RepTable cross_rep_table(const IntSet& s, const IntSet& t,
                         std::uint64_t n_max);

/// Least n <= n_max with R_C(n) != R_D(n), or nullopt when the tables agree
/// on [0, n_max].
std::optional<std::uint64_t> first_mismatch(const IntSet& c, const IntSet& d,
                                            std::uint64_t n_max);

}  // namespace repart
