#pragma once

#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "spectree/rational.hpp"

namespace spectree {

/// Dense univariate polynomial with arbitrary-precision integer
/// coefficients, stored in ascending degree with no trailing zeros.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> ascending);
  IntPolynomial(std::initializer_list<long> ascending);

  static IntPolynomial constant(const BigInt& c);
  static IntPolynomial monomial(const BigInt& c, int degree);
  static IntPolynomial x() { return monomial(1, 1); }
  /// x - root
  static IntPolynomial linear(long root) { return IntPolynomial{-root, 1}; }

  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  const std::vector<BigInt>& coefficients() const noexcept { return c_; }
  /// Coefficient of x^i, zero beyond the degree.
  BigInt coeff(int i) const;
  const BigInt& leading() const { return c_.back(); }

  IntPolynomial derivative() const;
  /// gcd of the coefficients, positive (zero for the zero polynomial).
  BigInt content() const;
  /// Divided by its content, leading coefficient made positive.
  IntPolynomial primitive_part() const;

  Rational eval(const Rational& x) const;
  /// Exact sign of p(x) in {-1, 0, 1}.
  int eval_sign(const Rational& x) const;
  double eval(double x) const;

  IntPolynomial& operator+=(const IntPolynomial& o);
  IntPolynomial& operator-=(const IntPolynomial& o);
  IntPolynomial& operator*=(const IntPolynomial& o);
  IntPolynomial& operator*=(const BigInt& k);

  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(IntPolynomial a, const BigInt& k) { return a *= k; }
  friend IntPolynomial operator-(IntPolynomial a);
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.c_ == b.c_; }

 private:
  void trim();
  std::vector<BigInt> c_;
};

IntPolynomial pow(const IntPolynomial& p, int e);

/// r with lc(b)^e * a = q*b + r, deg r < deg b, scaled by a positive
/// factor so that r has the sign of the true remainder over Q.
IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b);
/// a / b when b divides a over Z; throws std::domain_error otherwise.
IntPolynomial divide_exact(const IntPolynomial& a, const IntPolynomial& b);
/// Primitive gcd with positive leading coefficient.
IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b);

/// Comma-separated ascending coefficients, e.g. "-6,17,-8,1".
std::string to_string(const IntPolynomial& p);
IntPolynomial parse_polynomial(std::string_view text);
/// Conventional rendering, e.g. "x^3 - 8x^2 + 17x - 6".
std::string to_pretty(const IntPolynomial& p);

}  // namespace spectree
