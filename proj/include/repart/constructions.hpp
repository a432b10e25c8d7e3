#pragma once

// The explicit partition families: evil/odious prefixes, the finite
// interval pairs, the single-intersection pairs over [0, 2^(2l+1)-2], the
// doubling recursion, and the block lifting that tiles a finite pair into a
// prefix of N with a periodic intersection.

#include <cstdint>
#include <utility>

#include "repart/core_sets.hpp"

namespace repart {

/// C = A n [0, n], D = B n [0, n], empty intersection.
PartitionPair dombi_partition(std::uint64_t n);

/// (A_l, B_l) over [0, 2^l - 1], empty intersection. Requires l >= 1.
PartitionPair finite_tm_partition(unsigned l);

/// C = A_2l u (2^2l - 1 + B_2l), D = B_2l u (2^2l - 1 + A_2l) over
/// m = 2^(2l+1) - 2 with intersection exactly {2^2l - 1}. Requires l >= 1.
PartitionPair chen_lev_pair(unsigned l);

/// Tiles (C0, D0) into `blocks` consecutive width-(m+1) blocks: block k of C
/// carries k(m+1)+C0 when k is evil and k(m+1)+D0 otherwise, with D the
/// mirror assignment. The result covers [0, blocks*(m+1) - 1] and intersects
/// exactly in (r + (m+1)N) within that universe.
///
/// Preconditions (validated, violations reported with the first offending
/// index): C0 u D0 = [0, m], C0 n D0 = {r}, 0 in C0, and R_C0 = R_D0 up to
/// 2m. The constructed pair is re-checked for representation equality over
/// its whole universe and the function throws std::logic_error if that ever
/// fails.
PartitionPair lift_partition(const IntSet& c0, const IntSet& d0,
                             std::uint64_t r, std::uint64_t m,
                             std::uint64_t blocks);

/// One doubling step: (A, B) over [0, 2^l - 1] maps to
/// (A u (2^l + B), B u (2^l + A)) over [0, 2^(l+1) - 1]. Throws
/// std::invalid_argument when the input is not a partition of [0, 2^l - 1].
std::pair<IntSet, IntSet> doubling_step(const IntSet& al, const IntSet& bl,
                                        unsigned l);

}  // namespace repart
