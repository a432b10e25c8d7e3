#pragma once

// Exact integer-polynomial engine: characteristic polynomials p_S(x) and the
// algebraic identities that re-derive cover structure and representation
// equality independently of the combinatorial code path. Geometric factors
// such as (1 - x^(m+1))/(1 - x) are always expanded to their exact
// polynomial form; nothing is ever divided or rounded.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "repart/core_sets.hpp"

namespace repart {

/// Integer-coefficient polynomial, coefficients indexed from degree 0.
/// Canonical form trims trailing zeros; the zero polynomial has no terms.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<std::int64_t> coeffs);

  static IntPolynomial monomial(std::int64_t coeff, std::size_t degree);
  /// 1 + x + ... + x^degree.
  static IntPolynomial all_ones(std::size_t degree);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Degree of the polynomial; -1 for the zero polynomial.
  std::int64_t degree() const noexcept
  {
    return static_cast<std::int64_t>(coeffs_.size()) - 1;
  }
  std::int64_t coeff(std::size_t i) const noexcept
  {
    return i < coeffs_.size() ? coeffs_[i] : 0;
  }
  const std::vector<std::int64_t>& coeffs() const noexcept { return coeffs_; }

  /// p(x^2): coefficient i moves to 2i.
  IntPolynomial substituted_square() const;
  /// p * x^k.
  IntPolynomial shifted(std::size_t k) const;

  /// Nonzero (degree, value) terms in degree order; the shape residual
  /// reports are rendered from.
  std::vector<std::pair<std::size_t, std::int64_t>> nonzero_terms() const;

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(std::int64_t k, const IntPolynomial& p);
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b)
  {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  void trim();
  std::vector<std::int64_t> coeffs_;
};

/// p_S(x) = sum chi_S(i) x^i for i <= m. Throws std::invalid_argument when
/// S has a member beyond m.
IntPolynomial charpoly(const IntSet& s, std::uint64_t m);

/// p_D - ((1 + x + ... + x^m) - p_C + x^r): the zero polynomial exactly when
/// C u D = [0, m] with C n D = {r}.
IntPolynomial eq3_residual(const IntSet& c, const IntSet& d, std::uint64_t m,
                           std::uint64_t r);

/// Compares the coefficients of (p_S(x)^2 - p_S(x^2)) / 2 against the
/// convolution table R_S(0..n_max); returns the first disagreeing index or
/// nullopt. The halving is exact: the numerator has even coefficients.
std::optional<std::uint64_t> eq4_check(const IntSet& s, std::uint64_t n_max);

/// LHS - RHS of
///   2 p_C(x^2) = (1-x^(2m+2))/(1-x^2) + 2 p_C(x) (1-x^(m+1))/(1-x)
///                - ((1-x^(m+1))/(1-x))^2 - 2 x^r (1-x^(m+1))/(1-x)
///                + 2 x^r p_C(x),
/// all geometric factors expanded exactly. Zero exactly when the pair
/// (C, D) coupled through the cover relation has R_C = R_D.
IntPolynomial eq5_residual(const IntSet& c, std::uint64_t m, std::uint64_t r);

struct RelationViolation {
  std::string relation;  // "parity", "sum" or "midpoint"
  std::uint64_t index;
};

struct CoefficientRelationsReport {
  bool all_hold = true;
  std::vector<RelationViolation> violations;
};

/// For an odd-r solution pair: checks chi_C(k/2) = chi_C(k) + chi_C(k-r) -
/// chi_C(k-1-r) at every even k with r <= k < 2r, the prefix-sum identity
/// 2 * sum_{i<=r} chi_C(i) = r + 1, and chi_C((r-1)/2) = 0. Requires r odd.
CoefficientRelationsReport coefficient_relations_check(const IntSet& c,
                                                       std::uint64_t m,
                                                       std::uint64_t r);

}  // namespace repart
