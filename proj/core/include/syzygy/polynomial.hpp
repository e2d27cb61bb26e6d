#pragma once
// Dense univariate polynomials over Z and Q, coefficients in ascending degree.
#include <string>
#include <vector>

#include "syzygy/exact_arith.hpp"

namespace syzygy {

struct RatPolynomial;

struct IntPolynomial {
  std::vector<BigInt> c;  // c[i] is the coefficient of x^i

  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs);
  static IntPolynomial from_descending(const std::vector<BigInt>& coeffs);

  int degree() const;  // -1 for the zero polynomial
  bool is_zero() const { return c.empty(); }
  const BigInt& leading() const;
  BigInt content() const;
  IntPolynomial primitive_part() const;  // positive leading coefficient
  BigInt eval(const BigInt& x) const;
  RatPolynomial to_rat() const;
  std::string to_string(char var = 'x') const;
  void trim();
  bool operator==(const IntPolynomial&) const = default;
};

struct RatPolynomial {
  std::vector<BigRational> c;

  RatPolynomial() = default;
  explicit RatPolynomial(std::vector<BigRational> coeffs);

  int degree() const;
  bool is_zero() const { return c.empty(); }
  const BigRational& leading() const;
  BigRational eval(const BigRational& x) const;
  RatPolynomial monic() const;
  // Scales by the lcm of denominators and removes content.
  IntPolynomial primitive_integral() const;
  void trim();
  bool operator==(const RatPolynomial&) const = default;
};

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
RatPolynomial operator+(const RatPolynomial& a, const RatPolynomial& b);
RatPolynomial operator-(const RatPolynomial& a, const RatPolynomial& b);
RatPolynomial operator*(const RatPolynomial& a, const RatPolynomial& b);
RatPolynomial operator*(const BigRational& s, const RatPolynomial& a);

struct RatDivision {
  RatPolynomial quotient, remainder;
};
RatDivision divmod(const RatPolynomial& a, const RatPolynomial& b);
// Monic gcd (zero if both are zero).
RatPolynomial gcd(const RatPolynomial& a, const RatPolynomial& b);
RatPolynomial derivative(const RatPolynomial& a);
IntPolynomial derivative(const IntPolynomial& a);
// Exact division over Z; throws InternalError if b does not divide a.
IntPolynomial exact_divide(const IntPolynomial& a, const IntPolynomial& b);

using RatMatrix = std::vector<std::vector<BigRational>>;
BigRational determinant(RatMatrix m);
RatMatrix sylvester_matrix(const RatPolynomial& f, const RatPolynomial& g);
BigRational resultant(const RatPolynomial& f, const RatPolynomial& g);
BigRational discriminant(const RatPolynomial& f);
bool is_squarefree(const RatPolynomial& f);
// Number of distinct real roots (Sturm sequence).
int count_real_roots(const RatPolynomial& f);

}  // namespace syzygy
