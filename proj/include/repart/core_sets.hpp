#pragma once

// Finite sets of nonnegative integers over an explicit universe [0, bound],
// one bit per integer, plus the evil/odious (binary digit-sum parity)
// generators and the elementary transforms everything else is built from.

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace repart {

/// True iff n has an even number of 1 digits in binary (an "evil" number).
/// The evil numbers form the Thue-Morse set A; the odious numbers (odd digit
/// sum) form its complement B.
bool is_evil(std::uint64_t n) noexcept;

/// Set of nonnegative integers over the universe [0, bound], stored one bit
/// per integer in packed 64-bit words. Membership queries outside the
/// universe return false; operations whose result would exceed the universe
/// grow it instead of truncating.
///
/// Equality compares membership only: two sets with the same elements but
/// different universes compare equal.
class IntSet {
 public:
  /// Empty set over the degenerate universe [0, 0].
  IntSet();

  /// Empty set over [0, bound].
  explicit IntSet(std::uint64_t bound);

  static IntSet from_elements(std::span<const std::uint64_t> elems);
  static IntSet from_elements(std::initializer_list<std::uint64_t> elems);

  /// The full interval {lo, lo+1, ..., hi}. Requires lo <= hi.
  static IntSet interval(std::uint64_t lo, std::uint64_t hi);

  std::uint64_t bound() const noexcept { return bound_; }

  /// chi_S(n); false for every n beyond the universe.
  bool contains(std::uint64_t n) const noexcept;

  /// Adds n, growing the universe to [0, n] if needed.
  void insert(std::uint64_t n);

  /// Number of elements.
  std::size_t size() const noexcept;
  bool empty() const noexcept;

  /// Elements in increasing order.
  std::vector<std::uint64_t> elements() const;

  /// Packed membership words; bit k of word i is integer 64*i + k.
  /// Bits above bound() are always zero.
  std::span<const std::uint64_t> words() const noexcept { return words_; }

  /// Canonical text: strictly increasing comma-separated decimals ("" when
  /// empty).
  std::string to_text() const;

  /// Inverse of to_text(). Throws std::invalid_argument on malformed input
  /// or on a non-increasing element list.
  static IntSet parse_text(std::string_view text);

  friend bool operator==(const IntSet& a, const IntSet& b) noexcept;
  friend bool operator!=(const IntSet& a, const IntSet& b) noexcept
  {
    return !(a == b);
  }
  friend IntSet set_union(const IntSet& a, const IntSet& b);
  friend IntSet set_intersection(const IntSet& a, const IntSet& b);

 private:
  std::uint64_t bound_ = 0;
  std::vector<std::uint64_t> words_;
};

IntSet set_union(const IntSet& a, const IntSet& b);
IntSet set_intersection(const IntSet& a, const IntSet& b);

/// Least n on which the two sets' membership differs, if any.
std::optional<std::uint64_t> first_membership_difference(const IntSet& a,
                                                         const IntSet& b);

/// a + S = {a + s : s in S}, universe [0, S.bound() + a].
IntSet shift(const IntSet& s, std::uint64_t a);

/// m - S = {m - s : s in S}, universe [0, m]. Throws std::invalid_argument
/// if some member of S exceeds m.
IntSet reflect(const IntSet& s, std::uint64_t m);

/// A_l: the evil numbers in [0, 2^l - 1]. Requires 1 <= l <= 63.
IntSet evil_set(unsigned l);

/// B_l: the odious numbers in [0, 2^l - 1]. Requires 1 <= l <= 63.
IntSet odious_set(unsigned l);

/// Prescription for the intersection C cap D of a partition pair: either a
/// finite strictly increasing list {r_1, ..., r_s} with r_1 > 0, or an
/// arithmetic progression offset + period*N with period >= 2.
class IntersectionSpec {
 public:
  enum class Kind { kFinite, kPeriodic };

  static IntersectionSpec empty();
  static IntersectionSpec finite(std::vector<std::uint64_t> values);
  static IntersectionSpec periodic(std::uint64_t offset, std::uint64_t period);

  Kind kind() const noexcept { return kind_; }
  bool is_empty() const noexcept
  {
    return kind_ == Kind::kFinite && values_.empty();
  }

  /// Finite kind only.
  const std::vector<std::uint64_t>& finite_values() const;

  /// Periodic kind only.
  std::uint64_t offset() const;
  std::uint64_t period() const;

  /// The prescribed intersection restricted to [0, n_max].
  IntSet materialize(std::uint64_t n_max) const;

  /// "finite:r1,r2,..." (finite, possibly "finite:") or "periodic:r,p".
  std::string to_text() const;
  static IntersectionSpec parse_text(std::string_view text);

 private:
  IntersectionSpec() = default;

  Kind kind_ = Kind::kFinite;
  std::vector<std::uint64_t> values_;  // finite
  std::uint64_t offset_ = 0;           // periodic
  std::uint64_t period_ = 0;           // periodic
};

/// A pair (C, D) with C u D = [0, m], C n D prescribed by an
/// IntersectionSpec, and 0 in C. Construction validates all three
/// requirements and throws std::invalid_argument otherwise; a pair with
/// 0 in D only is rejected, never silently swapped.
class PartitionPair {
 public:
  PartitionPair(IntSet c, IntSet d, std::uint64_t m,
                IntersectionSpec intersection);

  const IntSet& c() const noexcept { return c_; }
  const IntSet& d() const noexcept { return d_; }
  std::uint64_t m() const noexcept { return m_; }
  const IntersectionSpec& intersection() const noexcept
  {
    return intersection_;
  }

 private:
  IntSet c_;
  IntSet d_;
  std::uint64_t m_;
  IntersectionSpec intersection_;
};

}  // namespace repart
