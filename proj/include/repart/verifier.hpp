#pragma once

// Decision procedures and search campaigns: the greedy forcing that
// reconstructs the unique candidate pair for a finite intersection
// prescription, the exhaustive-enumeration oracle it is checked against,
// the theorem-level sweeps, and the bounded depth-first search for periodic
// intersection prescriptions.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "repart/core_sets.hpp"

namespace repart {

/// Thrown when a request exceeds a configured resource cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultBruteForceCap = 22;
inline constexpr std::uint64_t kDefaultSearchCap = 64;

struct ForcingOutcome {
  enum class Status { kUnique, kContradiction };

  Status status;
  /// The reconstructed pair (unique outcomes only).
  std::optional<PartitionPair> pair;
  /// Contradiction outcomes only: the least index at which no consistent
  /// choice exists (either the forcing step failed there or the final full
  /// check first disagreed there).
  std::optional<std::uint64_t> failure_index;

  bool unique() const noexcept { return status == Status::kUnique; }
};

/// Deterministically reconstructs the only pair that can satisfy
/// C u D = [0, m], 0 in C, C n D prescribed by `spec`, and R_C = R_D: at
/// each v in [1, m], R_D(v) is already fixed by elements below v and
/// R_C(v) exceeds its partial count by chi_C(v) (the pair (0, v)), so
/// chi_C(v) is forced. Runs a final full check R_C(n) = R_D(n) for all
/// n <= horizon. Requires horizon >= m; spec elements must lie in (0, m].
ForcingOutcome forced_extension(std::uint64_t m, const IntersectionSpec& spec,
                                std::uint64_t horizon);

/// Same, with the default horizon 2m (equality on [0, 2m] is equality
/// everywhere for subsets of [0, m]).
ForcingOutcome forced_extension(std::uint64_t m, const IntersectionSpec& spec);

/// Enumerates every assignment of [1, m] to C / D / both that is consistent
/// with `spec`, keeping those with 0 in C and R_C(n) = R_D(n) for all
/// n <= horizon. Pure brute force over 2^(free positions) assignments with a
/// pair-scan equality check; the independent oracle for forced_extension and
/// the sweeps. Throws CapExceeded when m > cap.
std::vector<PartitionPair> exhaustive_search(
    std::uint64_t m, const IntersectionSpec& spec, std::uint64_t horizon,
    std::uint64_t cap = kDefaultBruteForceCap);

struct Theorem3Hit {
  std::uint64_t m;
  bool matches_thue_morse;  // solution equals (A_l, B_l) for l = log2(m+1)
};

struct Theorem3Report {
  std::uint64_t m_max = 0;
  std::vector<Theorem3Hit> hits;
  /// Hits occur exactly at m = 2^l - 1 and every hit matches (A_l, B_l).
  bool conforms = false;
};

/// Runs forced_extension(m, empty, 2m) for every m <= m_max.
Theorem3Report classify_theorem3(std::uint64_t m_max);

struct Theorem6Hit {
  std::uint64_t m;
  std::uint64_t r;
  bool matches_chen_lev;  // pair equals chen_lev_pair(l) at the expected cell
};

struct Theorem6Report {
  std::uint64_t m_max = 0;
  std::vector<Theorem6Hit> hits;
  /// Hits occur exactly at (2^(2l+1)-2, 2^(2l)-1) and match chen_lev_pair(l).
  bool conforms = false;
};

/// Runs forced_extension(m, {r}, 2m) for every m <= m_max and r in (0, m].
/// Only r <= m/2 is searched directly; hits at r > m/2 follow by reflection.
Theorem6Report classify_theorem6(std::uint64_t m_max);

/// Least n in (m, 2m) with R_{A n [0,m]}(n) != R_{B n [0,m]}(n). Throws
/// std::invalid_argument when m = 2^l - 1 (no witness exists there).
std::optional<std::uint64_t> corollary1_witness(std::uint64_t m);

struct Claim34Hit {
  std::uint64_t m;
  bool in_evil;   // predecessors all evil (otherwise all odious)
  bool all_ones;  // m = 2^(u+1) - 1
};

struct Claim34Report {
  std::uint64_t m_max = 0;
  std::vector<Claim34Hit> hits;
  bool conforms = false;  // every hit has all_ones
};

/// For every M <= m_max, tests whether M-1, M-2, M-4, ..., M-2^u (with
/// u = floor(log2 M)) all lie in A, or all in B, and records the M where
/// either holds. Conforms when that happens only at M = 2^(u+1) - 1.
Claim34Report claim34_check(std::uint64_t m_max);

struct ProgressionReport {
  IntersectionSpec spec = IntersectionSpec::empty();
  std::uint64_t n_max = 0;
  /// Largest n such that some spec-consistent partition of [0, n_max]
  /// satisfies R_C(n') = R_D(n') for all n' <= n.
  std::uint64_t n_star = 0;
  IntSet witness_c;
  IntSet witness_d;
  std::uint64_t nodes = 0;
  std::uint64_t prunes = 0;
};

/// Depth-first search over assignments of [0, n_max] consistent with a
/// periodic spec. Positions in the prescribed progression go to both sets;
/// position 0 goes to C (the 0-in-C normalization); every other position
/// branches C first, then D, pruning at the first index whose finalized
/// counts disagree. Deterministic tie-breaking: the witness is the first
/// one reached in that order. Throws CapExceeded when n_max > cap.
ProgressionReport progression_search(const IntersectionSpec& spec,
                                     std::uint64_t n_max,
                                     std::uint64_t cap = kDefaultSearchCap);

}  // namespace repart
