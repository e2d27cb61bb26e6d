#pragma once
// Exact arithmetic in Q(zeta_N), elements stored as sum_k c_k zeta_N^k.
#include <vector>

#include "syzygy/exact_arith.hpp"
#include "syzygy/polynomial.hpp"

namespace syzygy {

IntPolynomial cyclotomic_polynomial(int n);

class Cyclotomic {
 public:
  explicit Cyclotomic(int order = 1);
  static Cyclotomic root(int order, long angle);  // zeta_order^angle

  int order() const { return n_; }
  void add_root(long angle, const BigRational& coeff);
  Cyclotomic operator+(const Cyclotomic& o) const;
  Cyclotomic operator-(const Cyclotomic& o) const;
  Cyclotomic operator*(const Cyclotomic& o) const;
  Cyclotomic scaled(const BigRational& s) const;
  Cyclotomic conj() const;
  // Canonical remainder modulo Phi_N (degree < phi(N)).
  std::vector<BigRational> canonical() const;
  bool is_zero() const;
  bool is_rational() const;
  // Throws InternalError when not rational.
  BigRational rational_value() const;
  // |z|^2 = z * conj(z); always a totally real element, often rational.
  Cyclotomic norm_squared() const { return *this * conj(); }
  double real_approx() const;
  double imag_approx() const;
  bool operator==(const Cyclotomic& o) const;

 private:
  int n_;
  std::vector<BigRational> c_;  // size n_
};

}  // namespace syzygy
