#pragma once
// Binary forms of degree 2, 4, 6: invariants, covariants, SL2(Z) action.
#include <array>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <vector>

#include "syzygy/exact_arith.hpp"
#include "syzygy/polynomial.hpp"

namespace syzygy {

// c[i] is the coefficient of x^(d-i) y^i.
template <class C>
struct BinaryForm {
  std::vector<C> c;

  BinaryForm() = default;
  explicit BinaryForm(std::vector<C> coeffs) : c(std::move(coeffs)) {}

  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const {
    for (const auto& x : c)
      if (x != 0) return false;
    return true;
  }
  bool operator==(const BinaryForm&) const = default;
};

using RatForm = BinaryForm<BigRational>;
using SexticForm = RatForm;

struct UnimodularMatrix {
  BigInt m11 = 1, m12 = 0, m21 = 0, m22 = 1;

  static UnimodularMatrix identity() { return {}; }
  static UnimodularMatrix from(long a, long b, long c, long d);
  BigInt det() const { return m11 * m22 - m12 * m21; }
  UnimodularMatrix inverse() const;
  UnimodularMatrix operator*(const UnimodularMatrix& o) const;
  UnimodularMatrix operator-() const;
  bool operator==(const UnimodularMatrix&) const = default;
  bool operator<(const UnimodularMatrix& o) const;
  std::string to_string() const;
};

// Throws InvalidInput unless det == 1.
void require_unimodular(const UnimodularMatrix& m);

struct MordellCoefficients {
  BigRational a, b, c, d, e;
};

class QuarticForm {
 public:
  QuarticForm();  // x^4
  QuarticForm(BigInt p0, BigInt p1, BigInt p2, BigInt p3, BigInt p4);
  explicit QuarticForm(const std::array<BigInt, 5>& p);
  static QuarticForm from_longs(long p0, long p1, long p2, long p3, long p4);
  // "p0,p1,p2,p3,p4"
  static QuarticForm parse(std::string_view text);

  const std::array<BigInt, 5>& coeffs() const { return p_; }
  const BigInt& operator[](std::size_t i) const { return p_[i]; }
  MordellCoefficients mordell() const;
  RatForm as_rat() const;
  BinaryForm<BigInt> as_int() const;

  const BigRational& I() const { return cache().I; }
  const BigRational& J() const { return cache().J; }
  const BigRational& discriminant() const { return cache().disc; }
  const RatForm& hessian() const { return cache().H; }
  const SexticForm& jacobian() const { return cache().T; }

  BigInt evaluate(const BigInt& m1, const BigInt& m2) const;
  BigInt height() const;  // sum of |p_i|
  std::string to_string() const;         // "p0,p1,p2,p3,p4"
  std::string pretty() const;            // polynomial in x, y

  bool operator==(const QuarticForm& o) const { return p_ == o.p_; }
  bool operator<(const QuarticForm& o) const { return p_ < o.p_; }

 private:
  struct Cache {
    BigRational I, J, disc;
    RatForm H;
    SexticForm T;
  };
  const Cache& cache() const;

  std::array<BigInt, 5> p_;
  struct Lazy {
    std::once_flag once;
    Cache value;
  };
  std::shared_ptr<Lazy> lazy_;
};

struct QuadForm {
  BigInt a, b, c;

  static QuadForm parse(std::string_view text);  // "a,b,c"
  BigInt discriminant() const { return b * b - 4 * a * c; }
  bool positive_definite() const { return discriminant() < 0 && a > 0; }
  BigInt evaluate(const BigInt& u, const BigInt& v) const { return a * u * u + b * u * v + c * v * v; }
  BinaryForm<BigInt> as_form() const { return BinaryForm<BigInt>({a, b, c}); }
  std::string to_string() const;
  std::string pretty(char x = 'u', char y = 'v') const;
  bool operator==(const QuadForm&) const = default;
};

// --- generic form arithmetic ---
template <class C>
C evaluate(const BinaryForm<C>& f, const C& x, const C& y);
RatForm to_rat(const BinaryForm<BigInt>& f);
RatForm add(const RatForm& f, const RatForm& g);
RatForm sub(const RatForm& f, const RatForm& g);
RatForm mul(const RatForm& f, const RatForm& g);
RatForm scale(const BigRational& s, const RatForm& f);
RatForm partial_x(const RatForm& f);
RatForm partial_y(const RatForm& f);
RatForm act(const UnimodularMatrix& m, const RatForm& f);
BinaryForm<BigInt> act(const UnimodularMatrix& m, const BinaryForm<BigInt>& f);
std::string pretty(const RatForm& f);
// f(x, 1) as a univariate polynomial.
RatPolynomial dehomogenize(const RatForm& f);
// Smallest positive integer d with d*f integral.
BigInt denominator_lcm(const RatForm& f);

// --- quartic operations ---
BigRational invariant_I(const QuarticForm& f);
BigRational invariant_J(const QuarticForm& f);
BigRational discriminant(const QuarticForm& f);
RatForm hessian(const QuarticForm& f);
RatForm hessian(const RatForm& f);
SexticForm jacobian_covariant(const QuarticForm& f);
SexticForm jacobian_covariant(const RatForm& f);
bool verify_syzygy(const QuarticForm& f);
// Checks T^2 = -4H^3 + I*H*F^2 - J*F^3 for caller-supplied H, T.
bool verify_syzygy(const RatForm& f, const RatForm& h, const SexticForm& t, const BigRational& I, const BigRational& J);
QuarticForm sl2_act(const UnimodularMatrix& m, const QuarticForm& f);
BigInt evaluate(const QuarticForm& f, const BigInt& m1, const BigInt& m2);
BigRational evaluate(const RatForm& f, const BigInt& m1, const BigInt& m2);
BigRational resultant(const RatForm& f, const RatForm& g);
bool is_squarefree(const RatForm& f);
bool is_squarefree(const QuarticForm& f);

template <class C>
C evaluate(const BinaryForm<C>& f, const C& x, const C& y) {
  C r = 0;
  const int d = f.degree();
  C ypow = 1;
  std::vector<C> xp(static_cast<std::size_t>(d + 1), C(1));
  for (int i = 1; i <= d; ++i) xp[static_cast<std::size_t>(i)] = xp[static_cast<std::size_t>(i - 1)] * x;
  for (int i = 0; i <= d; ++i) {
    r += f.c[static_cast<std::size_t>(i)] * xp[static_cast<std::size_t>(d - i)] * ypow;
    ypow *= y;
  }
  return r;
}

}  // namespace syzygy
