#pragma once
// Exact integer/rational substrate backed by GMP.
#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace syzygy {

using BigInt = mpz_class;
using BigRational = mpq_class;

BigInt parse_bigint(std::string_view text);
// Accepts "n", "n/d" (d != 0); result is canonicalized.
BigRational parse_rational(std::string_view text);
std::string to_string(const BigInt& n);
std::string to_string(const BigRational& q);

BigRational make_rational(const BigInt& num, const BigInt& den);
bool is_integer(const BigRational& q);
// Throws InternalError when q is not an integer.
BigInt to_integer(const BigRational& q);
// Throws InvalidInput when out of range.
std::int64_t to_i64(const BigInt& n);
bool fits_i64(const BigInt& n);

struct PrimePower {
  BigInt prime;
  unsigned exponent = 0;
  bool operator==(const PrimePower&) const = default;
};
using Factorization = std::vector<PrimePower>;

bool is_prime(const BigInt& n);
// Fast path for |n| < 10^12 (trial division by the cached prime table).
std::vector<std::pair<std::int64_t, unsigned>> factorize_small(std::int64_t n);
Factorization factorize(const BigInt& n);
BigInt factorization_product(const Factorization& f);
std::vector<BigInt> prime_divisors(const BigInt& n);
// Positive divisors of |n| in increasing order; n != 0.
std::vector<BigInt> divisors(const BigInt& n);
int mobius(const BigInt& n);
unsigned valuation(const BigInt& n, const BigInt& p);
int valuation(const BigRational& q, const BigInt& p);

int kronecker(const BigInt& a, const BigInt& n);
int kronecker(std::int64_t a, std::int64_t n);

struct SqrtResult {
  BigInt root;
  bool exact = false;
};
SqrtResult int_sqrt(const BigInt& n);

struct SquarefreeSplit {
  BigInt s;  // squarefree, carries the sign of n
  BigInt f;  // positive, n = s * f^2
};
SquarefreeSplit squarefree_part(const BigInt& n);

bool is_square(const BigInt& n);
bool is_rational_square(const BigRational& q);
// Discriminant of Q(sqrt(d)) for non-square d != 0; 1 for squares.
BigInt fundamental_discriminant(const BigInt& d);
BigInt fundamental_discriminant(const BigRational& d);
bool is_fundamental_discriminant(const BigInt& d);

// Primes below limit (sieve of Eratosthenes).
std::vector<std::uint32_t> primes_up_to(std::uint32_t limit);

}  // namespace syzygy
