#include "repart/repfn.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <stdexcept>

namespace repart {

namespace {

constexpr std::uint64_t kWordBits = 64;

// Counter bit width: plane 4 + j is bit 4 + j of a count, so counts up to
// 2^31 fit. Desk-scale tables stop far below that.
constexpr unsigned kSpillPlanes = 28;

// Per-destination-word accumulator: 64 counters held as a carry-save ladder
// in registers (count bits 0..3) plus a small stack array of higher bit
// planes. Adding one 0/1 mask costs four logical steps; carries reach the
// stack array only once a lane passes 16.
struct LaneAccumulator {
  std::uint64_t ones = 0, twos = 0, fours = 0, eights = 0;
  std::uint64_t spill[kSpillPlanes] = {0};
  unsigned spill_top = 0;

  void spill_from(std::uint64_t carry)
  {
    unsigned j = 0;
    do {
      std::uint64_t t = spill[j];
      spill[j] = t ^ carry;
      carry &= t;
      ++j;
    } while (carry != 0 && j < kSpillPlanes);
    assert(carry == 0 && "count exceeded the accumulator width");
    if (j > spill_top) spill_top = j;
  }

  void add_mask(std::uint64_t a)
  {
    std::uint64_t c1 = ones & a;
    ones ^= a;
    std::uint64_t c2 = twos & c1;
    twos ^= c1;
    std::uint64_t c4 = fours & c2;
    fours ^= c2;
    std::uint64_t c8 = eights & c4;
    eights ^= c4;
    if (c8 != 0) spill_from(c8);
  }

  std::uint32_t lane(unsigned b) const
  {
    std::uint32_t v = static_cast<std::uint32_t>((ones >> b) & 1) |
                      static_cast<std::uint32_t>((twos >> b) & 1) << 1 |
                      static_cast<std::uint32_t>((fours >> b) & 1) << 2 |
                      static_cast<std::uint32_t>((eights >> b) & 1) << 3;
    for (unsigned j = 0; j < spill_top; ++j)
      v |= static_cast<std::uint32_t>((spill[j] >> b) & 1) << (j + 4);
    return v;
  }
};

inline void csa(std::uint64_t& high, std::uint64_t& low, std::uint64_t a,
                std::uint64_t b)
{
  std::uint64_t u = low ^ a;
  high = (low & a) | (u & b);
  low = u ^ b;
}

// Word-parallel convolution counts.
//
// Destination-major: for every destination word the counts of its 64 indices
// are accumulated in registers while the element list streams past; a
// Harley-Seal tree folds 16 shifted source words together before any carry
// can touch memory.
//
// triangle == false: out[n] = #{(s, t): s in shifts, t in src, s + t = n}.
// triangle == true (self-convolution): only pairs with t >= s are counted,
// i.e. out[n] = R(n) + [n even][n/2 in src], the upper triangle including
// the diagonal.
std::vector<std::uint32_t> conv_counts(std::span<const std::uint64_t> src,
                                       std::uint64_t src_bound,
                                       const std::vector<std::uint64_t>& shifts,
                                       std::uint64_t n_max, bool triangle)
{
  const std::size_t dst_words = static_cast<std::size_t>(n_max / kWordBits) + 1;
  const std::size_t src_words = static_cast<std::size_t>(src_bound / kWordBits) + 1;

  // Zero guard words below and above let the stitch read unconditionally.
  std::vector<std::uint64_t> padded(src_words + 2, 0);
  for (std::size_t i = 0; i < std::min(src.size(), src_words); ++i)
    padded[i + 1] = src[i];
  const std::uint64_t* base = padded.data();

  std::vector<std::uint32_t> out(n_max + 1, 0);

  std::size_t s_begin = 0;
  std::size_t s_cap_end = 0;
  std::size_t s_clip_begin = 0;
  for (std::size_t i = 0; i < dst_words; ++i) {
    const std::uint64_t word_base = kWordBits * i;
    // Shifts whose whole source window lies below this word are done for
    // good; shifts beyond the cap have not reached it yet. In the triangle
    // case shifts past s_clip_begin need their below-diagonal bits masked.
    // All three cursors only move forward.
    while (s_begin < shifts.size() && shifts[s_begin] + src_bound < word_base)
      ++s_begin;
    const std::uint64_t s_cap =
        triangle ? (word_base + kWordBits - 1) / 2 : word_base + kWordBits - 1;
    while (s_cap_end < shifts.size() && shifts[s_cap_end] <= s_cap) ++s_cap_end;
    if (triangle) {
      if (s_clip_begin < s_begin) s_clip_begin = s_begin;
      while (s_clip_begin < s_cap_end &&
             2 * shifts[s_clip_begin] <= word_base)
        ++s_clip_begin;
    }
    const std::size_t plain_end = triangle ? s_clip_begin : s_cap_end;

    LaneAccumulator acc;
    auto stitch = [base, i](std::uint64_t s) {
      const std::size_t k = i - static_cast<std::size_t>(s >> 6);
      const unsigned r = static_cast<unsigned>(s & 63);
      // ((lo >> 1) >> (63 - r)) is lo >> (64 - r), well-defined at r == 0.
      return (base[k + 1] << r) | ((base[k] >> 1) >> (63 - r));
    };

    std::size_t idx = s_begin;
    for (; idx + 16 <= plain_end; idx += 16) {
      std::uint64_t twos_a, twos_b, fours_a, fours_b, eights_a, eights_b,
          sixteens;
      csa(twos_a, acc.ones, stitch(shifts[idx]), stitch(shifts[idx + 1]));
      csa(twos_b, acc.ones, stitch(shifts[idx + 2]), stitch(shifts[idx + 3]));
      csa(fours_a, acc.twos, twos_a, twos_b);
      csa(twos_a, acc.ones, stitch(shifts[idx + 4]), stitch(shifts[idx + 5]));
      csa(twos_b, acc.ones, stitch(shifts[idx + 6]), stitch(shifts[idx + 7]));
      csa(fours_b, acc.twos, twos_a, twos_b);
      csa(eights_a, acc.fours, fours_a, fours_b);
      csa(twos_a, acc.ones, stitch(shifts[idx + 8]), stitch(shifts[idx + 9]));
      csa(twos_b, acc.ones, stitch(shifts[idx + 10]), stitch(shifts[idx + 11]));
      csa(fours_a, acc.twos, twos_a, twos_b);
      csa(twos_a, acc.ones, stitch(shifts[idx + 12]), stitch(shifts[idx + 13]));
      csa(twos_b, acc.ones, stitch(shifts[idx + 14]), stitch(shifts[idx + 15]));
      csa(fours_b, acc.twos, twos_a, twos_b);
      csa(eights_b, acc.fours, fours_a, fours_b);
      csa(sixteens, acc.eights, eights_a, eights_b);
      if (sixteens != 0) acc.spill_from(sixteens);
    }
    for (; idx < plain_end; ++idx) acc.add_mask(stitch(shifts[idx]));
    // Triangle tail: shifts with 2s > word_base keep only lanes n >= 2s.
    for (; idx < s_cap_end; ++idx) {
      const std::uint64_t s = shifts[idx];
      acc.add_mask(stitch(s) & (~std::uint64_t{0} << (2 * s - word_base)));
    }

    const std::uint64_t n_hi = std::min(n_max, word_base + kWordBits - 1);
    for (std::uint64_t n = word_base; n <= n_hi; ++n)
      out[n] = acc.lane(static_cast<unsigned>(n - word_base));
  }
  return out;
}

}  // namespace

std::uint64_t repfn_point(const IntSet& s, std::uint64_t n)
{
  std::uint64_t count = 0;
  for (std::uint64_t a : s.elements()) {
    if (2 * a >= n) break;  // need a < n - a
    if (s.contains(n - a)) ++count;
  }
  return count;
}

RepTable repfn_table(const IntSet& s, std::uint64_t n_max)
{
  assert(n_max <= (std::uint64_t{1} << 24) &&
         "counts are 32-bit; desk-scale tables stop at 2^24");
  auto elems = s.elements();
  std::vector<std::uint32_t> upper =
      conv_counts(s.words(), s.bound(), elems, n_max, /*triangle=*/true);

  RepTable table;
  table.values.resize(n_max + 1);
  for (std::uint64_t n = 0; n <= n_max; ++n) {
    std::uint32_t t = upper[n];
    if (n % 2 == 0 && s.contains(n / 2)) {
      assert(t >= 1);
      t -= 1;  // remove the diagonal pair (n/2, n/2)
    }
    table.values[n] = t;
  }
  return table;
}

RepTable cross_rep_table(const IntSet& s, const IntSet& t,
                         std::uint64_t n_max)
{
  assert(n_max <= (std::uint64_t{1} << 24));
  // The convolution is symmetric; iterate the sparser side as shifts.
  const IntSet& shifts_set = s.size() <= t.size() ? s : t;
  const IntSet& src_set = s.size() <= t.size() ? t : s;

  auto shifts = shifts_set.elements();
  while (!shifts.empty() && shifts.back() > n_max) shifts.pop_back();

  RepTable table;
  table.values = conv_counts(src_set.words(), src_set.bound(), shifts, n_max,
                             /*triangle=*/false);
  return table;
}

std::optional<std::uint64_t> first_mismatch(const IntSet& c, const IntSet& d,
                                            std::uint64_t n_max)
{
  RepTable rc = repfn_table(c, n_max);
  RepTable rd = repfn_table(d, n_max);
  for (std::uint64_t n = 0; n <= n_max; ++n)
    if (rc.values[n] != rd.values[n]) return n;
  return std::nullopt;
}

}  // namespace repart
