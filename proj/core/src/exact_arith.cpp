#include "syzygy/exact_arith.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "syzygy/error.hpp"

namespace syzygy {

namespace {

constexpr std::uint32_t kTrialLimit = 1000000;

const std::vector<std::uint32_t>& trial_primes() {
  static const std::vector<std::uint32_t> table = primes_up_to(kTrialLimit);
  return table;
}

bool valid_integer_text(std::string_view t) {
  if (t.empty()) return false;
  std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
  if (i == t.size()) return false;
  return std::all_of(t.begin() + static_cast<std::ptrdiff_t>(i), t.end(),
                     [](char c) { return c >= '0' && c <= '9'; });
}

std::string_view trim(std::string_view t) {
  while (!t.empty() && (t.front() == ' ' || t.front() == '\t')) t.remove_prefix(1);
  while (!t.empty() && (t.back() == ' ' || t.back() == '\t' || t.back() == '\r')) t.remove_suffix(1);
  return t;
}

bool miller_rabin_round(const BigInt& n, const BigInt& d, unsigned s, unsigned long base) {
  BigInt a = base;
  BigInt x;
  mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  BigInt nm1 = n - 1;
  if (x == 1 || x == nm1) return true;
  for (unsigned r = 1; r < s; ++r) {
    x = (x * x) % n;
    if (x == nm1) return true;
  }
  return false;
}

// Brent's variant; returns a nontrivial factor of composite n (odd, not a prime power of a tiny prime).
BigInt pollard_rho(const BigInt& n) {
  for (unsigned long c = 1;; ++c) {
    BigInt y = 2, x, g = 1, q = 1, ys;
    unsigned long r = 1;
    const unsigned long m = 128;
    auto f = [&](const BigInt& v) { return BigInt((v * v + c) % n); };
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = f(y);
      unsigned long k = 0;
      do {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          BigInt diff = abs(x - y);
          q = (q * diff) % n;
        }
        g = gcd(q, n);
        k += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = gcd(BigInt(abs(x - ys)), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_rec(const BigInt& n, std::vector<BigInt>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  BigInt root;
  mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
  if (root * root == n) {
    factor_rec(root, out);
    factor_rec(root, out);
    return;
  }
  BigInt d = pollard_rho(n);
  factor_rec(d, out);
  factor_rec(BigInt(n / d), out);
}

}  // namespace

BigInt parse_bigint(std::string_view text) {
  text = trim(text);
  if (!valid_integer_text(text)) throw InvalidInput("malformed integer: '" + std::string(text) + "'");
  std::string s(text[0] == '+' ? text.substr(1) : text);
  return BigInt(s, 10);
}

BigRational parse_rational(std::string_view text) {
  text = trim(text);
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return BigRational(parse_bigint(text));
  BigInt num = parse_bigint(text.substr(0, slash));
  std::string_view den_text = trim(text.substr(slash + 1));
  if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+'))
    throw InvalidInput("malformed rational: '" + std::string(text) + "'");
  BigInt den = parse_bigint(den_text);
  if (den == 0) throw InvalidInput("zero denominator: '" + std::string(text) + "'");
  return make_rational(num, den);
}

std::string to_string(const BigInt& n) { return n.get_str(10); }

std::string to_string(const BigRational& q) { return q.get_str(10); }

BigRational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw InvalidInput("zero denominator");
  BigRational q(num, den);
  q.canonicalize();
  return q;
}

bool is_integer(const BigRational& q) { return q.get_den() == 1; }

BigInt to_integer(const BigRational& q) {
  if (!is_integer(q)) throw InternalError("expected integer, got " + to_string(q));
  return q.get_num();
}

bool fits_i64(const BigInt& n) {
  static const BigInt lo(std::to_string(std::numeric_limits<std::int64_t>::min()));
  static const BigInt hi(std::to_string(std::numeric_limits<std::int64_t>::max()));
  return n >= lo && n <= hi;
}

std::int64_t to_i64(const BigInt& n) {
  if (!fits_i64(n)) throw InvalidInput("integer out of 64-bit range: " + to_string(n));
  return std::stoll(n.get_str());
}

std::vector<std::uint32_t> primes_up_to(std::uint32_t limit) {
  std::vector<std::uint32_t> out;
  if (limit < 2) return out;
  std::vector<bool> composite(limit + 1, false);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    out.push_back(static_cast<std::uint32_t>(i));
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return out;
}

bool is_prime(const BigInt& n) {
  if (n < 2) return false;
  static constexpr unsigned long small[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
  for (unsigned long p : small) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  BigInt d = n - 1;
  unsigned s = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++s;
  }
  // The first 13 prime bases are deterministic below 3.3e24.
  for (unsigned long p : small)
    if (!miller_rabin_round(n, d, s, p)) return false;
  static const BigInt deterministic_bound("3317044064679887385961981");
  if (n < deterministic_bound) return true;
  return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

std::vector<std::pair<std::int64_t, unsigned>> factorize_small(std::int64_t n) {
  if (n == 0) throw InvalidInput("factorize: n must be nonzero");
  if (n < 0) n = -n;
  if (n >= 1000000000000LL) {
    std::vector<std::pair<std::int64_t, unsigned>> out;
    for (const auto& pp : factorize(BigInt(std::to_string(n)))) out.emplace_back(to_i64(pp.prime), pp.exponent);
    return out;
  }
  std::vector<std::pair<std::int64_t, unsigned>> out;
  for (std::uint32_t p : trial_primes()) {
    std::int64_t pp = p;
    if (pp * pp > n) break;
    if (n % pp) continue;
    unsigned e = 0;
    while (n % pp == 0) {
      n /= pp;
      ++e;
    }
    out.emplace_back(pp, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

Factorization factorize(const BigInt& n_in) {
  if (n_in == 0) throw InvalidInput("factorize: n must be nonzero");
  BigInt n = abs(n_in);
  Factorization out;
  for (std::uint32_t p : trial_primes()) {
    if (BigInt(p) * p > n) break;
    if (n % p != 0) continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.push_back({BigInt(p), e});
  }
  if (n > 1) {
    std::vector<BigInt> rest;
    factor_rec(n, rest);
    std::sort(rest.begin(), rest.end());
    for (const auto& p : rest) {
      if (!out.empty() && out.back().prime == p)
        ++out.back().exponent;
      else
        out.push_back({p, 1});
    }
  }
  return out;
}

BigInt factorization_product(const Factorization& f) {
  BigInt r = 1;
  for (const auto& [p, e] : f) {
    BigInt pe;
    mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
    r *= pe;
  }
  return r;
}

std::vector<BigInt> prime_divisors(const BigInt& n) {
  std::vector<BigInt> out;
  if (n == 0) return out;
  for (const auto& pp : factorize(n)) out.push_back(pp.prime);
  return out;
}

std::vector<BigInt> divisors(const BigInt& n) {
  std::vector<BigInt> out{1};
  for (const auto& [p, e] : factorize(n)) {
    std::size_t base = out.size();
    BigInt pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

int mobius(const BigInt& n) {
  int mu = 1;
  for (const auto& pp : factorize(n)) {
    if (pp.exponent > 1) return 0;
    mu = -mu;
  }
  return mu;
}

unsigned valuation(const BigInt& n, const BigInt& p) {
  if (n == 0) throw InvalidInput("valuation of zero");
  unsigned v = 0;
  BigInt m = n;
  while (m % p == 0) {
    m /= p;
    ++v;
  }
  return v;
}

int valuation(const BigRational& q, const BigInt& p) {
  if (q == 0) throw InvalidInput("valuation of zero");
  return static_cast<int>(valuation(q.get_num(), p)) - static_cast<int>(valuation(q.get_den(), p));
}

int kronecker(const BigInt& a, const BigInt& n) { return mpz_kronecker(a.get_mpz_t(), n.get_mpz_t()); }

int kronecker(std::int64_t a, std::int64_t n) {
  if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
  int result = 1;
  if (n < 0) {
    n = -n;
    if (a < 0) result = -result;
  }
  int twos = 0;
  while ((n & 1) == 0) {
    n >>= 1;
    ++twos;
  }
  if (twos > 0) {
    if ((a & 1) == 0) return 0;
    int am8 = static_cast<int>(((a % 8) + 8) % 8);
    if ((twos & 1) && (am8 == 3 || am8 == 5)) result = -result;
  }
  // Jacobi symbol (a | n) for odd n > 0.
  std::int64_t m = n;
  std::int64_t b = ((a % m) + m) % m;
  while (b != 0) {
    while ((b & 1) == 0) {
      b >>= 1;
      std::int64_t r = m % 8;
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(b, m);
    if (b % 4 == 3 && m % 4 == 3) result = -result;
    b %= m;
  }
  return m == 1 ? result : 0;
}

SqrtResult int_sqrt(const BigInt& n) {
  if (n < 0) throw InvalidInput("int_sqrt of negative number");
  SqrtResult r;
  BigInt rem;
  mpz_sqrtrem(r.root.get_mpz_t(), rem.get_mpz_t(), n.get_mpz_t());
  r.exact = (rem == 0);
  return r;
}

SquarefreeSplit squarefree_part(const BigInt& n) {
  if (n == 0) throw InvalidInput("squarefree_part of zero");
  SquarefreeSplit r{BigInt(sgn(n)), BigInt(1)};
  for (const auto& [p, e] : factorize(n)) {
    if (e % 2) r.s *= p;
    BigInt pk;
    mpz_pow_ui(pk.get_mpz_t(), p.get_mpz_t(), e / 2);
    r.f *= pk;
  }
  return r;
}

bool is_square(const BigInt& n) { return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0; }

bool is_rational_square(const BigRational& q) { return is_square(q.get_num()) && is_square(q.get_den()); }

BigInt fundamental_discriminant(const BigInt& d) {
  if (d == 0) throw InvalidInput("fundamental_discriminant of zero");
  BigInt s = squarefree_part(d).s;
  if (s == 1) return 1;
  BigInt m = ((s % 4) + 4) % 4;
  return m == 1 ? s : BigInt(4 * s);
}

BigInt fundamental_discriminant(const BigRational& d) {
  return fundamental_discriminant(BigInt(d.get_num() * d.get_den()));
}

bool is_fundamental_discriminant(const BigInt& d) {
  if (d == 0 || d == 1) return false;
  return fundamental_discriminant(d) == d;
}

}  // namespace syzygy
