#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <vector>

namespace supertree {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Dense univariate polynomial with exact integer coefficients, stored low
/// degree first. The zero polynomial has degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<BigInt> coeffs);

  static Polynomial monomial(BigInt c, int degree);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const BigInt& leading() const { return coeffs_.back(); }
  BigInt coefficient(int d) const;
  const std::vector<BigInt>& coefficients() const noexcept { return coeffs_; }

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

  Polynomial derivative() const;
  Polynomial shifted(int k) const;  // multiply by x^k
  Polynomial scaled(const BigInt& c) const;

  Rational evaluate(const Rational& x) const;
  int sign_at(const Rational& x) const;
  int sign_at_infinity() const;

  /// Divides out the (positive) content; the sign of every value is kept.
  Polynomial primitive() const;

  /// Upper bound (exclusive) on the absolute value of every real root.
  BigInt root_bound() const;

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

/// Quotient and remainder of a / b, each scaled by a positive constant so
/// that they have integer coefficients.
struct DivisionResult {
  Polynomial quotient;
  Polynomial remainder;
};
DivisionResult divide_scaled(const Polynomial& a, const Polynomial& b);

/// Primitive gcd with positive leading coefficient; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// a / b for b dividing a over the rationals; exact when b is primitive.
Polynomial exact_quotient(const Polynomial& a, const Polynomial& b);

/// Square-free decomposition: p = c * prod_i factors[i]^(i+1) with every
/// factor square-free, primitive and pairwise coprime.
std::vector<Polynomial> squarefree_factors(const Polynomial& p);

/// Product of the square-free factors of odd multiplicity: the points where
/// p changes sign are exactly the real roots of this polynomial.
Polynomial sign_change_part(const Polynomial& p);

/// Sturm chain of p, used to count distinct real roots in half-open intervals.
class SturmSequence {
 public:
  explicit SturmSequence(const Polynomial& p);

  int variations_at(const Rational& x) const;
  int variations_at_infinity() const;

  /// Distinct real roots in (a, b].
  int count_roots(const Rational& a, const Rational& b) const;
  /// Distinct real roots in (a, +inf).
  int count_roots_above(const Rational& a) const;

  /// Square-free part of the input (same distinct roots), primitive.
  const Polynomial& base() const { return chain_.front(); }

 private:
  std::vector<Polynomial> chain_;
};

/// Interval (lo, hi] that contains the largest real root of a polynomial and
/// no other root; `exact` is set when the root is the rational `hi`.
struct RootBracket {
  Rational lo;
  Rational hi;
  bool exact = false;
};

/// Brackets the largest real root of p lying in (lo, hi]; returns nothing if
/// there is none. `hi` must exceed every real root. Bisects at dyadic
/// midpoints until hi - lo <= width and the root is isolated.
std::optional<RootBracket> bracket_largest_root(const Polynomial& p, Rational lo, Rational hi,
                                                const Rational& width);

/// One bisection step that keeps the largest root of p inside the bracket.
RootBracket refine(const Polynomial& p, const SturmSequence& sturm, RootBracket bracket);

double to_double(const Rational& q);

}  // namespace supertree
