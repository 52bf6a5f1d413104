#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace ss4 {

using Rational = mpq_class;

/// Integer polynomial Phi_N, the N-th cyclotomic polynomial, as coefficients
/// in increasing degree. Computed by exact division of x^N - 1 by the product
/// of Phi_d over proper divisors d of N; results are cached per N.
const std::vector<mpz_class>& cyclotomic_polynomial(int n);

/// Euler totient, the degree of Phi_N.
int totient(int n);

/// An element of the cyclotomic field Q(zeta_N), stored as the unique
/// representative of degree < phi(N) modulo Phi_N. Equality, printing and
/// hashing are therefore canonical. Mixed-order arithmetic embeds both
/// operands into Q(zeta_lcm) via zeta_M -> zeta_N^(N/M).
class Cyclotomic {
 public:
  Cyclotomic() : order_(1) {}
  explicit Cyclotomic(int order) : order_(order) { check_order(); }
  Cyclotomic(int order, std::vector<Rational> coeffs);

  static Cyclotomic from_rational(const Rational& q, int order = 1);
  static Cyclotomic integer(long v, int order = 1);
  /// zeta_N^e with e taken mod N (negative e allowed).
  static Cyclotomic zeta_pow(int order, long e);

  int order() const { return order_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_rational() const { return coeffs_.size() <= 1; }
  /// The constant coefficient; only meaningful when is_rational().
  Rational rational_part() const;

  /// Image under zeta_M -> zeta_N^(N/M); requires order() | new_order.
  Cyclotomic embedded(int new_order) const;

  Cyclotomic operator-() const;
  Cyclotomic operator+(const Cyclotomic& rhs) const;
  Cyclotomic operator-(const Cyclotomic& rhs) const;
  Cyclotomic operator*(const Cyclotomic& rhs) const;
  Cyclotomic& operator+=(const Cyclotomic& rhs);
  Cyclotomic& operator-=(const Cyclotomic& rhs);
  Cyclotomic& operator*=(const Cyclotomic& rhs);

  /// Multiplicative inverse via the extended Euclidean algorithm against
  /// Phi_N over Q. Throws on zero.
  Cyclotomic inverse() const;

  bool operator==(const Cyclotomic& rhs) const;
  bool operator!=(const Cyclotomic& rhs) const { return !(*this == rhs); }

  /// Display form: `1/2 [N=1]`, `(-1/3) + (2)*z^1 [N=4]`, `0 [N=3]`.
  std::string str() const;
  /// Compact literal for data files: `1/2`, `-1/3+2*z^1`, `0`.
  std::string literal() const;
  /// Parses the literal grammar (display parentheses also accepted).
  static Cyclotomic parse(const std::string& text, int order);

 private:
  void check_order() const;
  void reduce();  // mod Phi_N, then trim trailing zeros

  int order_;
  std::vector<Rational> coeffs_;  // increasing degree, no trailing zeros
};

Cyclotomic operator*(const Rational& q, const Cyclotomic& c);

}  // namespace ss4
