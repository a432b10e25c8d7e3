#include "repart/core_sets.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <stdexcept>

namespace repart {

namespace {

constexpr std::uint64_t kWordBits = 64;

std::size_t words_for(std::uint64_t bound)
{
  return static_cast<std::size_t>(bound / kWordBits) + 1;
}

std::uint64_t word_at(std::span<const std::uint64_t> words, std::size_t i)
{
  return i < words.size() ? words[i] : 0;
}

}  // namespace

bool is_evil(std::uint64_t n) noexcept
{
  return (std::popcount(n) & 1) == 0;
}

IntSet::IntSet() : words_(1, 0) {}

IntSet::IntSet(std::uint64_t bound) : bound_(bound), words_(words_for(bound), 0)
{
}

IntSet IntSet::from_elements(std::span<const std::uint64_t> elems)
{
  IntSet s;
  for (std::uint64_t e : elems) s.insert(e);
  return s;
}

IntSet IntSet::from_elements(std::initializer_list<std::uint64_t> elems)
{
  IntSet s;
  for (std::uint64_t e : elems) s.insert(e);
  return s;
}

IntSet IntSet::interval(std::uint64_t lo, std::uint64_t hi)
{
  if (lo > hi) throw std::invalid_argument("IntSet::interval: lo > hi");
  IntSet s(hi);
  for (std::uint64_t w = lo / kWordBits; w <= hi / kWordBits; ++w) {
    std::uint64_t mask = ~std::uint64_t{0};
    if (w == lo / kWordBits) mask &= ~std::uint64_t{0} << (lo % kWordBits);
    if (w == hi / kWordBits)
      mask &= ~std::uint64_t{0} >> (kWordBits - 1 - hi % kWordBits);
    s.words_[w] |= mask;
  }
  return s;
}

bool IntSet::contains(std::uint64_t n) const noexcept
{
  if (n > bound_) return false;
  return (words_[n / kWordBits] >> (n % kWordBits)) & 1;
}

void IntSet::insert(std::uint64_t n)
{
  if (n > bound_) {
    bound_ = n;
    words_.resize(words_for(bound_), 0);
  }
  words_[n / kWordBits] |= std::uint64_t{1} << (n % kWordBits);
}

std::size_t IntSet::size() const noexcept
{
  std::size_t total = 0;
  for (std::uint64_t w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

bool IntSet::empty() const noexcept
{
  for (std::uint64_t w : words_)
    if (w != 0) return false;
  return true;
}

std::vector<std::uint64_t> IntSet::elements() const
{
  std::vector<std::uint64_t> out;
  out.reserve(size());
  for (std::size_t i = 0; i < words_.size(); ++i) {
    std::uint64_t w = words_[i];
    while (w != 0) {
      unsigned b = static_cast<unsigned>(std::countr_zero(w));
      out.push_back(i * kWordBits + b);
      w &= w - 1;
    }
  }
  return out;
}

std::string IntSet::to_text() const
{
  std::string out;
  bool first = true;
  for (std::uint64_t e : elements()) {
    if (!first) out.push_back(',');
    out += std::to_string(e);
    first = false;
  }
  return out;
}

IntSet IntSet::parse_text(std::string_view text)
{
  IntSet s;
  if (text.empty()) return s;
  std::optional<std::uint64_t> prev;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string_view tok =
        text.substr(pos, comma == std::string_view::npos ? std::string_view::npos
                                                         : comma - pos);
    std::uint64_t value = 0;
    const char* begin = tok.data();
    const char* end = tok.data() + tok.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end || tok.empty())
      throw std::invalid_argument("IntSet::parse_text: malformed element '" +
                                  std::string(tok) + "'");
    if (prev && value <= *prev)
      throw std::invalid_argument(
          "IntSet::parse_text: elements must be strictly increasing");
    s.insert(value);
    prev = value;
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return s;
}

bool operator==(const IntSet& a, const IntSet& b) noexcept
{
  std::size_t n = std::max(a.words_.size(), b.words_.size());
  for (std::size_t i = 0; i < n; ++i)
    if (word_at(a.words_, i) != word_at(b.words_, i)) return false;
  return true;
}

IntSet set_union(const IntSet& a, const IntSet& b)
{
  IntSet result(std::max(a.bound(), b.bound()));
  for (std::size_t i = 0; i < result.words_.size(); ++i)
    result.words_[i] = word_at(a.words_, i) | word_at(b.words_, i);
  return result;
}

IntSet set_intersection(const IntSet& a, const IntSet& b)
{
  IntSet result(std::max(a.bound(), b.bound()));
  std::size_t n = std::min(a.words_.size(), b.words_.size());
  for (std::size_t i = 0; i < n; ++i)
    result.words_[i] = a.words_[i] & b.words_[i];
  return result;
}

std::optional<std::uint64_t> first_membership_difference(const IntSet& a,
                                                         const IntSet& b)
{
  auto wa = a.words();
  auto wb = b.words();
  std::size_t n = std::max(wa.size(), wb.size());
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t diff = word_at(wa, i) ^ word_at(wb, i);
    if (diff != 0)
      return i * kWordBits + static_cast<unsigned>(std::countr_zero(diff));
  }
  return std::nullopt;
}

IntSet shift(const IntSet& s, std::uint64_t a)
{
  if (s.bound() > ~std::uint64_t{0} - a)
    throw std::invalid_argument("shift: universe bound overflows");
  IntSet out(s.bound() + a);
  for (std::uint64_t e : s.elements()) out.insert(e + a);
  return out;
}

IntSet reflect(const IntSet& s, std::uint64_t m)
{
  IntSet out(m);
  auto elems = s.elements();
  if (!elems.empty() && elems.back() > m)
    throw std::invalid_argument("reflect: member " +
                                std::to_string(elems.back()) + " exceeds m=" +
                                std::to_string(m));
  for (std::uint64_t e : elems) out.insert(m - e);
  return out;
}

IntSet evil_set(unsigned l)
{
  if (l < 1 || l > 63)
    throw std::invalid_argument("evil_set: l must be in [1, 63]");
  std::uint64_t top = (std::uint64_t{1} << l) - 1;
  IntSet s(top);
  for (std::uint64_t n = 0; n <= top; ++n)
    if (is_evil(n)) s.insert(n);
  return s;
}

IntSet odious_set(unsigned l)
{
  if (l < 1 || l > 63)
    throw std::invalid_argument("odious_set: l must be in [1, 63]");
  std::uint64_t top = (std::uint64_t{1} << l) - 1;
  IntSet s(top);
  for (std::uint64_t n = 0; n <= top; ++n)
    if (!is_evil(n)) s.insert(n);
  return s;
}

IntersectionSpec IntersectionSpec::empty()
{
  IntersectionSpec spec;
  spec.kind_ = Kind::kFinite;
  return spec;
}

IntersectionSpec IntersectionSpec::finite(std::vector<std::uint64_t> values)
{
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] == 0)
      throw std::invalid_argument("IntersectionSpec: finite lists exclude 0");
    if (i > 0 && values[i] <= values[i - 1])
      throw std::invalid_argument(
          "IntersectionSpec: finite list must be strictly increasing");
  }
  IntersectionSpec spec;
  spec.kind_ = Kind::kFinite;
  spec.values_ = std::move(values);
  return spec;
}

IntersectionSpec IntersectionSpec::periodic(std::uint64_t offset,
                                            std::uint64_t period)
{
  if (period < 2)
    throw std::invalid_argument("IntersectionSpec: period must be >= 2");
  IntersectionSpec spec;
  spec.kind_ = Kind::kPeriodic;
  spec.offset_ = offset;
  spec.period_ = period;
  return spec;
}

const std::vector<std::uint64_t>& IntersectionSpec::finite_values() const
{
  if (kind_ != Kind::kFinite)
    throw std::logic_error("IntersectionSpec: not a finite spec");
  return values_;
}

std::uint64_t IntersectionSpec::offset() const
{
  if (kind_ != Kind::kPeriodic)
    throw std::logic_error("IntersectionSpec: not a periodic spec");
  return offset_;
}

std::uint64_t IntersectionSpec::period() const
{
  if (kind_ != Kind::kPeriodic)
    throw std::logic_error("IntersectionSpec: not a periodic spec");
  return period_;
}

IntSet IntersectionSpec::materialize(std::uint64_t n_max) const
{
  IntSet out(n_max);
  if (kind_ == Kind::kFinite) {
    for (std::uint64_t v : values_)
      if (v <= n_max) out.insert(v);
  } else {
    for (std::uint64_t v = offset_; v <= n_max; v += period_) out.insert(v);
  }
  return out;
}

std::string IntersectionSpec::to_text() const
{
  if (kind_ == Kind::kFinite) {
    std::string out = "finite:";
    for (std::size_t i = 0; i < values_.size(); ++i) {
      if (i > 0) out.push_back(',');
      out += std::to_string(values_[i]);
    }
    return out;
  }
  return "periodic:" + std::to_string(offset_) + "," + std::to_string(period_);
}

IntersectionSpec IntersectionSpec::parse_text(std::string_view text)
{
  constexpr std::string_view kFinitePrefix = "finite:";
  constexpr std::string_view kPeriodicPrefix = "periodic:";
  if (text.substr(0, kFinitePrefix.size()) == kFinitePrefix) {
    std::string_view rest = text.substr(kFinitePrefix.size());
    if (rest.empty()) return empty();
    return finite(IntSet::parse_text(rest).elements());
  }
  if (text.substr(0, kPeriodicPrefix.size()) == kPeriodicPrefix) {
    std::string_view rest = text.substr(kPeriodicPrefix.size());
    std::size_t comma = rest.find(',');
    if (comma == std::string_view::npos)
      throw std::invalid_argument(
          "IntersectionSpec: periodic spec needs 'periodic:offset,period'");
    auto parse_u64 = [](std::string_view tok) {
      std::uint64_t v = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (ec != std::errc{} || ptr != tok.data() + tok.size() || tok.empty())
        throw std::invalid_argument("IntersectionSpec: malformed number '" +
                                    std::string(tok) + "'");
      return v;
    };
    return periodic(parse_u64(rest.substr(0, comma)),
                    parse_u64(rest.substr(comma + 1)));
  }
  throw std::invalid_argument(
      "IntersectionSpec: expected 'finite:...' or 'periodic:...'");
}

PartitionPair::PartitionPair(IntSet c, IntSet d, std::uint64_t m,
                             IntersectionSpec intersection)
    : c_(std::move(c)), d_(std::move(d)), m_(m),
      intersection_(std::move(intersection))
{
  if (!c_.contains(0))
    throw std::invalid_argument("PartitionPair: 0 must belong to C");
  IntSet cover = set_union(c_, d_);
  IntSet full = IntSet::interval(0, m_);
  if (auto diff = first_membership_difference(cover, full))
    throw std::invalid_argument("PartitionPair: C u D != [0, m], first "
                                "offending index " +
                                std::to_string(*diff));
  IntSet common = set_intersection(c_, d_);
  IntSet prescribed = intersection_.materialize(m_);
  if (auto diff = first_membership_difference(common, prescribed))
    throw std::invalid_argument(
        "PartitionPair: C n D differs from the prescribed intersection at " +
        std::to_string(*diff));
}

}  // namespace repart
