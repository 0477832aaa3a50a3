#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace coxgrowth {

/// Dense univariate polynomial with arbitrary-precision integer coefficients.
/// coefficients()[k] is the coefficient of t^k; the zero polynomial is empty
/// and the highest stored coefficient is never zero.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  IntPolynomial(std::initializer_list<long> coeffs);
  explicit IntPolynomial(std::vector<mpz_class> coeffs);

  static IntPolynomial constant(const mpz_class& c);
  /// c * t^degree
  static IntPolynomial monomial(const mpz_class& c, int degree);

  const std::vector<mpz_class>& coefficients() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  /// Coefficient of t^k; zero beyond the degree.
  mpz_class coeff(int k) const;
  const mpz_class& leading() const { return coeffs_.back(); }
  /// Index of the lowest nonzero coefficient; -1 for zero.
  int valuation() const noexcept;

  /// gcd of the coefficients, nonnegative; 0 for the zero polynomial.
  mpz_class content() const;
  IntPolynomial primitive_part() const;

  IntPolynomial operator-() const;
  IntPolynomial& operator+=(const IntPolynomial& o);
  IntPolynomial& operator-=(const IntPolynomial& o);
  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  IntPolynomial scaled(const mpz_class& c) const;
  /// Divides every coefficient by c; throws if any division is inexact.
  IntPolynomial divided_exactly(const mpz_class& c) const;
  IntPolynomial shifted(int k) const;
  /// t^deg * p(1/t).
  IntPolynomial reversed() const;

  bool operator==(const IntPolynomial& o) const { return coeffs_ == o.coeffs_; }

  mpq_class evaluate(const mpq_class& x) const;

  /// "1 + 2*t - t^3"; "0" for zero.
  std::string to_string() const;

 private:
  void trim();
  std::vector<mpz_class> coeffs_;
};

/// lc(b)^(deg a - deg b + 1) * a mod b.
IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b);
/// Exact quotient a / b over Z[t]; throws std::domain_error if b does not
/// divide a.
IntPolynomial exact_quotient(const IntPolynomial& a, const IntPolynomial& b);
/// Primitive gcd with positive leading coefficient (gcd over Q, normalized).
IntPolynomial primitive_gcd(const IntPolynomial& a, const IntPolynomial& b);

/// Exact k-th power-series coefficients c_0..c_N.
struct SeriesTruncation {
  std::vector<mpz_class> coefficients;

  bool operator==(const SeriesTruncation&) const = default;
  /// "[c0, c1, ..., cN]"
  std::string to_string() const;
};

/// Cauchy product truncated to the shorter length.
SeriesTruncation cauchy_product(const SeriesTruncation& a, const SeriesTruncation& b);

/// Reduced quotient of integer polynomials in canonical form: numerator and
/// denominator share no factor over Q, their joint coefficient content is 1,
/// and the lowest-order nonzero coefficient of the denominator is positive.
/// Equal functions therefore have identical fields.
class RationalFunction {
 public:
  /// The zero function 0/1.
  RationalFunction();
  RationalFunction(const IntPolynomial& p);  // NOLINT: polynomials embed
  RationalFunction(IntPolynomial numerator, IntPolynomial denominator);
  static RationalFunction constant(long c);

  const IntPolynomial& numerator() const noexcept { return num_; }
  const IntPolynomial& denominator() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_polynomial() const;

  RationalFunction operator-() const;
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  /// Throws std::domain_error when b is zero.
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction reciprocal() const;

  bool operator==(const RationalFunction&) const = default;

  mpq_class evaluate(const mpq_class& x) const;

  /// "(n0 + n1*t + ...) / (d0 + d1*t + ...)"
  std::string to_string() const;

 private:
  void canonicalize();
  IntPolynomial num_;
  IntPolynomial den_;
};

/// Power-series coefficients of r at t = 0 up to t^n. Throws
/// std::domain_error if the denominator vanishes at 0 or a coefficient is not
/// an integer.
SeriesTruncation series_expand(const RationalFunction& r, int n);

/// r(1/t), with powers of t cleared into numerator or denominator.
RationalFunction substitute_t_inverse(const RationalFunction& r);

}  // namespace coxgrowth
