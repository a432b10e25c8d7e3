#include "repart/genfun.hpp"

#include <cassert>
#include <stdexcept>

#include "repart/repfn.hpp"

namespace repart {

IntPolynomial::IntPolynomial(std::vector<std::int64_t> coeffs)
    : coeffs_(std::move(coeffs))
{
  trim();
}

void IntPolynomial::trim()
{
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::monomial(std::int64_t coeff, std::size_t degree)
{
  if (coeff == 0) return {};
  std::vector<std::int64_t> c(degree + 1, 0);
  c[degree] = coeff;
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::all_ones(std::size_t degree)
{
  return IntPolynomial(std::vector<std::int64_t>(degree + 1, 1));
}

IntPolynomial IntPolynomial::substituted_square() const
{
  if (is_zero()) return {};
  std::vector<std::int64_t> c(2 * (coeffs_.size() - 1) + 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[2 * i] = coeffs_[i];
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::shifted(std::size_t k) const
{
  if (is_zero()) return {};
  std::vector<std::int64_t> c(coeffs_.size() + k, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i + k] = coeffs_[i];
  return IntPolynomial(std::move(c));
}

std::vector<std::pair<std::size_t, std::int64_t>> IntPolynomial::nonzero_terms()
    const
{
  std::vector<std::pair<std::size_t, std::int64_t>> out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) out.emplace_back(i, coeffs_[i]);
  return out;
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b)
{
  std::vector<std::int64_t> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
  return IntPolynomial(std::move(c));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b)
{
  std::vector<std::int64_t> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
  return IntPolynomial(std::move(c));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b)
{
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<std::int64_t> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPolynomial(std::move(c));
}

IntPolynomial operator*(std::int64_t k, const IntPolynomial& p)
{
  std::vector<std::int64_t> c(p.coeffs_);
  for (auto& v : c) v *= k;
  return IntPolynomial(std::move(c));
}

IntPolynomial charpoly(const IntSet& s, std::uint64_t m)
{
  std::vector<std::int64_t> c(m + 1, 0);
  for (std::uint64_t e : s.elements()) {
    if (e > m)
      throw std::invalid_argument("charpoly: member " + std::to_string(e) +
                                  " exceeds m=" + std::to_string(m));
    c[e] = 1;
  }
  return IntPolynomial(std::move(c));
}

IntPolynomial eq3_residual(const IntSet& c, const IntSet& d, std::uint64_t m,
                           std::uint64_t r)
{
  IntPolynomial pc = charpoly(c, m);
  IntPolynomial pd = charpoly(d, m);
  IntPolynomial ones = IntPolynomial::all_ones(m);
  return pd - (ones - pc + IntPolynomial::monomial(1, r));
}

std::optional<std::uint64_t> eq4_check(const IntSet& s, std::uint64_t n_max)
{
  IntPolynomial p = charpoly(s, s.bound());
  IntPolynomial numerator = p * p - p.substituted_square();
  RepTable table = repfn_table(s, n_max);
  for (std::uint64_t n = 0; n <= n_max; ++n) {
    std::int64_t lhs2 = numerator.coeff(n);
    assert(lhs2 % 2 == 0);
    if (lhs2 != 2 * static_cast<std::int64_t>(table.values[n])) return n;
  }
  return std::nullopt;
}

IntPolynomial eq5_residual(const IntSet& c, std::uint64_t m, std::uint64_t r)
{
  IntPolynomial pc = charpoly(c, m);
  IntPolynomial ones = IntPolynomial::all_ones(m);
  IntPolynomial even_ones = ones.substituted_square();  // (1-x^(2m+2))/(1-x^2)
  IntPolynomial xr = IntPolynomial::monomial(1, r);

  IntPolynomial lhs = 2 * pc.substituted_square();
  IntPolynomial rhs = even_ones + 2 * (pc * ones) - ones * ones -
                      2 * (xr * ones) + 2 * (xr * pc);
  return lhs - rhs;
}

CoefficientRelationsReport coefficient_relations_check(const IntSet& c,
                                                       std::uint64_t m,
                                                       std::uint64_t r)
{
  if (r == 0 || r % 2 == 0)
    throw std::invalid_argument("coefficient_relations_check: r must be odd");
  CoefficientRelationsReport report;
  auto chi = [&](std::uint64_t n) -> std::int64_t { return c.contains(n) ? 1 : 0; };

  for (std::uint64_t k = r + 1; k < 2 * r && k <= m; k += 2) {
    // k even since r is odd
    std::int64_t lhs = chi(k / 2);
    std::int64_t rhs = chi(k) + chi(k - r) - chi(k - 1 - r);
    if (lhs != rhs) {
      report.all_hold = false;
      report.violations.push_back({"parity", k});
    }
  }

  std::int64_t prefix = 0;
  for (std::uint64_t i = 0; i <= r; ++i) prefix += chi(i);
  if (2 * prefix != static_cast<std::int64_t>(r) + 1) {
    report.all_hold = false;
    report.violations.push_back({"sum", r});
  }

  if (chi((r - 1) / 2) != 0) {
    report.all_hold = false;
    report.violations.push_back({"midpoint", (r - 1) / 2});
  }
  return report;
}

}  // namespace repart
