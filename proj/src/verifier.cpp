#include "repart/verifier.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <cstring>

#include "repart/constructions.hpp"
#include "repart/repfn.hpp"

namespace repart {

namespace {

// Rejects prescriptions the forcing argument cannot handle: anything
// containing 0 (then 0 would lie in D) or a finite element beyond m.
IntSet materialize_for_interval(const IntersectionSpec& spec, std::uint64_t m)
{
  if (spec.kind() == IntersectionSpec::Kind::kFinite) {
    for (std::uint64_t v : spec.finite_values())
      if (v > m)
        throw std::invalid_argument("intersection element " +
                                    std::to_string(v) + " lies outside (0, " +
                                    std::to_string(m) + "]");
  }
  IntSet inter = spec.materialize(m);
  if (inter.contains(0))
    throw std::invalid_argument(
        "intersection containing 0 is not admissible here (0 must lie in C "
        "only)");
  return inter;
}

}  // namespace

ForcingOutcome forced_extension(std::uint64_t m, const IntersectionSpec& spec)
{
  return forced_extension(m, spec, 2 * m);
}

ForcingOutcome forced_extension(std::uint64_t m, const IntersectionSpec& spec,
                                std::uint64_t horizon)
{
  if (m == 0) throw std::invalid_argument("forced_extension: m must be >= 1");
  if (horizon < m)
    throw std::invalid_argument("forced_extension: horizon must be >= m");
  IntSet inter = materialize_for_interval(spec, m);

  // rc/rd are the running pair counts over the decided prefix; once every
  // position is decided they are the complete tables up to the horizon.
  std::vector<std::uint32_t> rc(horizon + 1, 0);
  std::vector<std::uint32_t> rd(horizon + 1, 0);
  std::vector<std::uint64_t> c_elems;
  std::vector<std::uint64_t> d_elems;
  c_elems.reserve(m + 1);
  d_elems.reserve(m + 1);

  auto add = [horizon](std::vector<std::uint32_t>& table,
                       std::vector<std::uint64_t>& elems, std::uint64_t v) {
    for (std::uint64_t e : elems) {
      std::uint64_t s = e + v;
      if (s > horizon) break;  // elems ascend
      table[s] += 1;
    }
    elems.push_back(v);
  };

  add(rc, c_elems, 0);
  for (std::uint64_t v = 1; v <= m; ++v) {
    // R_D(v) is final (0 is never in D, so both parts of any pair are < v);
    // R_C(v) = rc[v] + chi_C(v) via the pair (0, v).
    std::int64_t forced =
        static_cast<std::int64_t>(rd[v]) - static_cast<std::int64_t>(rc[v]);
    if (forced < 0 || forced > 1)
      return {ForcingOutcome::Status::kContradiction, std::nullopt, v};
    const bool in_c = forced == 1;
    const bool in_both = inter.contains(v);
    if (in_both && !in_c)
      return {ForcingOutcome::Status::kContradiction, std::nullopt, v};
    if (in_c) add(rc, c_elems, v);
    if (!in_c || in_both) add(rd, d_elems, v);
  }

  for (std::uint64_t n = 0; n <= horizon; ++n)
    if (rc[n] != rd[n])
      return {ForcingOutcome::Status::kContradiction, std::nullopt, n};

  IntSet c = IntSet::from_elements(c_elems);
  IntSet d = IntSet::from_elements(d_elems);
  PartitionPair pair(std::move(c), std::move(d), m, spec);
  return {ForcingOutcome::Status::kUnique, std::move(pair), std::nullopt};
}

namespace {

// Pair-scan equality check on word-sized sets, deliberately independent of
// the convolution fast path.
bool masks_rep_equal(std::uint64_t cmask, std::uint64_t dmask,
                     std::uint64_t horizon)
{
  std::uint8_t rc[128];
  std::uint8_t rd[128];
  assert(horizon < 128);
  std::memset(rc, 0, horizon + 1);
  std::memset(rd, 0, horizon + 1);

  std::uint64_t elems[64];
  auto scan = [&](std::uint64_t mask, std::uint8_t* table) {
    unsigned count = 0;
    while (mask != 0) {
      elems[count++] = static_cast<unsigned>(std::countr_zero(mask));
      mask &= mask - 1;
    }
    for (unsigned i = 0; i < count; ++i)
      for (unsigned j = i + 1; j < count; ++j) {
        std::uint64_t s = elems[i] + elems[j];
        if (s <= horizon) table[s] += 1;
      }
  };
  scan(cmask, rc);
  scan(dmask, rd);
  return std::memcmp(rc, rd, horizon + 1) == 0;
}

PartitionPair pair_from_masks(std::uint64_t cmask, std::uint64_t dmask,
                              std::uint64_t m, const IntersectionSpec& spec)
{
  IntSet c(m);
  IntSet d(m);
  for (std::uint64_t v = 0; v <= m; ++v) {
    if ((cmask >> v) & 1) c.insert(v);
    if ((dmask >> v) & 1) d.insert(v);
  }
  return PartitionPair(std::move(c), std::move(d), m, spec);
}

}  // namespace

std::vector<PartitionPair> exhaustive_search(std::uint64_t m,
                                             const IntersectionSpec& spec,
                                             std::uint64_t horizon,
                                             std::uint64_t cap)
{
  if (m == 0) throw std::invalid_argument("exhaustive_search: m must be >= 1");
  // single-word assignment masks carry the whole interval
  if (m > cap || m > 62)
    throw CapExceeded("exhaustive_search: m=" + std::to_string(m) +
                      " exceeds the brute-force cap " +
                      std::to_string(std::min<std::uint64_t>(cap, 62)));
  IntSet inter = materialize_for_interval(spec, m);

  std::uint64_t both_mask = 0;
  for (std::uint64_t v : inter.elements()) both_mask |= std::uint64_t{1} << v;

  std::vector<unsigned> free_positions;
  for (std::uint64_t v = 1; v <= m; ++v)
    if (!inter.contains(v)) free_positions.push_back(static_cast<unsigned>(v));

  const std::uint64_t horizon_eff = std::min(horizon, 2 * m);
  const std::uint64_t base_c = 1 | both_mask;  // 0 in C always
  const std::uint64_t base_d = both_mask;

  std::vector<PartitionPair> survivors;
  const std::uint64_t total = std::uint64_t{1} << free_positions.size();
  for (std::uint64_t assignment = 0; assignment < total; ++assignment) {
    std::uint64_t cmask = base_c;
    std::uint64_t dmask = base_d;
    for (std::size_t j = 0; j < free_positions.size(); ++j) {
      if ((assignment >> j) & 1)
        cmask |= std::uint64_t{1} << free_positions[j];
      else
        dmask |= std::uint64_t{1} << free_positions[j];
    }
    if (masks_rep_equal(cmask, dmask, horizon_eff))
      survivors.push_back(pair_from_masks(cmask, dmask, m, spec));
  }
  return survivors;
}

Theorem3Report classify_theorem3(std::uint64_t m_max)
{
  Theorem3Report report;
  report.m_max = m_max;
  report.conforms = true;
  for (std::uint64_t m = 1; m <= m_max; ++m) {
    ForcingOutcome outcome = forced_extension(m, IntersectionSpec::empty());
    const bool expected_hit = std::has_single_bit(m + 1);
    if (!outcome.unique()) {
      if (expected_hit) report.conforms = false;
      continue;
    }
    bool matches = false;
    if (expected_hit) {
      unsigned l = static_cast<unsigned>(std::bit_width(m));  // m = 2^l - 1
      matches = outcome.pair->c() == evil_set(l) &&
                outcome.pair->d() == odious_set(l);
    }
    report.hits.push_back({m, matches});
    if (!expected_hit || !matches) report.conforms = false;
  }
  return report;
}

Theorem6Report classify_theorem6(std::uint64_t m_max)
{
  Theorem6Report report;
  report.m_max = m_max;
  report.conforms = true;

  auto is_expected_cell = [](std::uint64_t m, std::uint64_t r) {
    // (m, r) = (2^(2l+1) - 2, 2^(2l) - 1) for some l >= 1
    if (m != 2 * r) return false;
    if (!std::has_single_bit(r + 1)) return false;
    unsigned bits = static_cast<unsigned>(std::bit_width(r));
    return bits >= 2 && bits % 2 == 0;
  };

  for (std::uint64_t m = 1; m <= m_max; ++m) {
    std::vector<Theorem6Hit> hits_for_m;
    for (std::uint64_t r = 1; 2 * r <= m; ++r) {
      ForcingOutcome outcome =
          forced_extension(m, IntersectionSpec::finite({r}));
      if (!outcome.unique()) continue;

      bool matches = false;
      if (is_expected_cell(m, r)) {
        unsigned l = static_cast<unsigned>(std::bit_width(r)) / 2;
        PartitionPair expected = chen_lev_pair(l);
        matches = outcome.pair->c() == expected.c() &&
                  outcome.pair->d() == expected.d();
      }
      hits_for_m.push_back({m, r, matches});

      // Reflection closure: r' = m - r is a hit exactly when r is. The
      // expected cells are self-mirrored (m = 2r), so any asymmetric hit is
      // already nonconforming.
      if (m - r != r) hits_for_m.push_back({m, m - r, false});
    }
    std::sort(hits_for_m.begin(), hits_for_m.end(),
              [](const Theorem6Hit& a, const Theorem6Hit& b) { return a.r < b.r; });
    for (const Theorem6Hit& hit : hits_for_m) {
      report.hits.push_back(hit);
      if (!is_expected_cell(hit.m, hit.r) || !hit.matches_chen_lev)
        report.conforms = false;
    }
  }

  // Every expected cell within range must actually have been hit.
  for (unsigned l = 1;; ++l) {
    std::uint64_t m = (std::uint64_t{1} << (2 * l + 1)) - 2;
    if (m > m_max) break;
    std::uint64_t r = (std::uint64_t{1} << (2 * l)) - 1;
    bool found = false;
    for (const Theorem6Hit& hit : report.hits)
      if (hit.m == m && hit.r == r && hit.matches_chen_lev) found = true;
    if (!found) report.conforms = false;
  }
  return report;
}

std::optional<std::uint64_t> corollary1_witness(std::uint64_t m)
{
  if (m == 0 || std::has_single_bit(m + 1))
    throw std::invalid_argument(
        "corollary1_witness: no witness exists for m = 2^l - 1");
  PartitionPair prefix = dombi_partition(m);
  auto witness = first_mismatch(prefix.c(), prefix.d(), 2 * m);
  assert(!witness || (*witness > m && *witness < 2 * m));
  return witness;
}

Claim34Report claim34_check(std::uint64_t m_max)
{
  Claim34Report report;
  report.m_max = m_max;
  report.conforms = true;
  for (std::uint64_t big_m = 1; big_m <= m_max; ++big_m) {
    const unsigned u = static_cast<unsigned>(std::bit_width(big_m)) - 1;
    bool all_evil = true;
    bool all_odious = true;
    for (unsigned i = 0; i <= u; ++i) {
      const bool evil = is_evil(big_m - (std::uint64_t{1} << i));
      all_evil &= evil;
      all_odious &= !evil;
    }
    if (!all_evil && !all_odious) continue;
    const bool all_ones = big_m == (std::uint64_t{1} << (u + 1)) - 1;
    report.hits.push_back({big_m, all_evil, all_ones});
    if (!all_ones) report.conforms = false;
  }
  return report;
}

namespace {

enum class Cell : std::uint8_t { kUndecided, kC, kD, kBoth };

struct ProgressionSearcher {
  std::uint64_t n_max;
  IntSet inter;
  std::vector<Cell> assign;
  std::vector<std::uint64_t> c_elems;
  std::vector<std::uint64_t> d_elems;
  std::vector<std::uint32_t> rc;
  std::vector<std::uint32_t> rd;

  std::int64_t best = -1;
  std::vector<Cell> best_assign;
  std::uint64_t nodes = 0;
  std::uint64_t prunes = 0;

  explicit ProgressionSearcher(std::uint64_t n, IntSet intersection)
      : n_max(n), inter(std::move(intersection)), assign(n + 1, Cell::kUndecided),
        rc(n + 1, 0), rd(n + 1, 0)
  {
  }

  void add(std::vector<std::uint32_t>& table, std::vector<std::uint64_t>& elems,
           std::uint64_t v)
  {
    for (std::uint64_t e : elems) {
      std::uint64_t s = e + v;
      if (s <= n_max) table[s] += 1;
    }
    elems.push_back(v);
  }

  void remove(std::vector<std::uint32_t>& table,
              std::vector<std::uint64_t>& elems, std::uint64_t v)
  {
    elems.pop_back();
    for (std::uint64_t e : elems) {
      std::uint64_t s = e + v;
      if (s <= n_max) table[s] -= 1;
    }
  }

  void apply(std::uint64_t v, Cell cell)
  {
    assign[v] = cell;
    if (cell == Cell::kC || cell == Cell::kBoth) add(rc, c_elems, v);
    if (cell == Cell::kD || cell == Cell::kBoth) add(rd, d_elems, v);
  }

  void undo(std::uint64_t v, Cell cell)
  {
    if (cell == Cell::kD || cell == Cell::kBoth) remove(rd, d_elems, v);
    if (cell == Cell::kC || cell == Cell::kBoth) remove(rc, c_elems, v);
    assign[v] = Cell::kUndecided;
  }

  void record_best(std::int64_t depth)
  {
    if (depth <= best) return;
    best = depth;
    best_assign = assign;
  }

  // Returns true when a branch valid through n_max has been found; nothing
  // can beat that, so the search unwinds.
  bool dfs(std::uint64_t v)
  {
    if (v > n_max) {
      record_best(static_cast<std::int64_t>(n_max));
      return true;
    }
    Cell options[2];
    unsigned option_count;
    if (inter.contains(v)) {
      options[0] = Cell::kBoth;
      option_count = 1;
    } else if (v == 0) {
      options[0] = Cell::kC;  // the 0-in-C normalization
      option_count = 1;
    } else {
      options[0] = Cell::kC;
      options[1] = Cell::kD;
      option_count = 2;
    }
    for (unsigned i = 0; i < option_count; ++i) {
      apply(v, options[i]);
      ++nodes;
      // Index v is final once position v is decided: any later element only
      // contributes to sums above v.
      if (rc[v] == rd[v]) {
        if (dfs(v + 1)) {
          undo(v, options[i]);
          return true;
        }
      } else {
        ++prunes;
        record_best(static_cast<std::int64_t>(v) - 1);
      }
      undo(v, options[i]);
    }
    return false;
  }
};

}  // namespace

ProgressionReport progression_search(const IntersectionSpec& spec,
                                     std::uint64_t n_max, std::uint64_t cap)
{
  if (spec.kind() != IntersectionSpec::Kind::kPeriodic)
    throw std::invalid_argument(
        "progression_search: spec must be periodic (finite prescriptions go "
        "through forced_extension)");
  if (n_max > cap)
    throw CapExceeded("progression_search: N=" + std::to_string(n_max) +
                      " exceeds the search cap " + std::to_string(cap));

  ProgressionSearcher searcher(n_max, spec.materialize(n_max));
  searcher.dfs(0);
  assert(searcher.best >= 0);

  ProgressionReport report;
  report.spec = spec;
  report.n_max = n_max;
  report.n_star = static_cast<std::uint64_t>(searcher.best);
  report.nodes = searcher.nodes;
  report.prunes = searcher.prunes;

  // Pad the best branch to a full spec-consistent partition of [0, n_max];
  // positions past the decided prefix cannot change counts at or below the
  // reported depth.
  IntSet c(n_max);
  IntSet d(n_max);
  for (std::uint64_t v = 0; v <= n_max; ++v) {
    Cell cell = searcher.best_assign[v];
    if (cell == Cell::kUndecided)
      cell = searcher.inter.contains(v) ? Cell::kBoth : Cell::kC;
    if (cell == Cell::kC || cell == Cell::kBoth) c.insert(v);
    if (cell == Cell::kD || cell == Cell::kBoth) d.insert(v);
  }
  report.witness_c = std::move(c);
  report.witness_d = std::move(d);
  return report;
}

}  // namespace repart
