#include <doctest.h>

#include <random>

#include "syzygy/cyclotomic.hpp"
#include "syzygy/error.hpp"
#include "syzygy/exact_arith.hpp"

using namespace syzygy;

TEST_SUITE("exact_arith") {
  TEST_CASE("rational parsing canonicalizes and rejects junk") {
    CHECK(parse_rational("3/6") == BigRational(1, 2));
    CHECK(parse_rational("-97/48") == BigRational(-97, 48));
    CHECK(parse_rational(" 12 ") == 12);
    CHECK_THROWS_AS(parse_rational("1/0"), InvalidInput);
    CHECK_THROWS_AS(parse_rational("4/x"), InvalidInput);
    CHECK_THROWS_AS(parse_rational("1/-2"), InvalidInput);
    CHECK_THROWS_AS(parse_bigint(""), InvalidInput);
  }

  TEST_CASE("factorization round-trips") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> d(2, 2000000000L);
    for (int i = 0; i < 300; ++i) {
      BigInt n(d(rng));
      n *= d(rng);
      auto f = factorize(n);
      CHECK(factorization_product(f) == n);
      for (const auto& pp : f) CHECK(is_prime(pp.prime));
    }
    auto small = factorize_small(-360);
    CHECK(small == std::vector<std::pair<std::int64_t, unsigned>>{{2, 3}, {3, 2}, {5, 1}});
  }

  TEST_CASE("kronecker agrees with Euler's criterion") {
    for (std::int64_t p : {3, 5, 7, 11, 13, 101, 1009}) {
      for (std::int64_t a = -30; a <= 30; ++a) {
        BigInt e;
        BigInt base = ((a % p) + p) % p;
        mpz_powm_ui(e.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>((p - 1) / 2), BigInt(p).get_mpz_t());
        int euler = base == 0 ? 0 : (e == 1 ? 1 : -1);
        CHECK(kronecker(a, p) == euler);
      }
    }
    CHECK(kronecker(-4, 2) == 0);
    CHECK(kronecker(5, 2) == -1);
    CHECK(kronecker(-23, 2) == 1);
  }

  TEST_CASE("square and discriminant helpers") {
    CHECK(is_square(BigInt(144)));
    CHECK_FALSE(is_square(BigInt(-4)));
    CHECK(int_sqrt(BigInt(150)).root == 12);
    CHECK(is_rational_square(BigRational(9, 49)));
    CHECK(fundamental_discriminant(BigInt(-80)) == -20);
    CHECK(fundamental_discriminant(BigInt(-1)) == -4);
    CHECK(fundamental_discriminant(BigInt(2)) == 8);
    CHECK(fundamental_discriminant(BigRational(3, 2)) == 24);
    CHECK(is_fundamental_discriminant(BigInt(-23)));
    CHECK_FALSE(is_fundamental_discriminant(BigInt(-16)));
    auto s = squarefree_part(BigInt(-72));
    CHECK(s.s == -2);
    CHECK(s.f == 6);
    CHECK(mobius(BigInt(30)) == -1);
    CHECK(mobius(BigInt(12)) == 0);
    CHECK(divisors(BigInt(12)).size() == 6);
  }

  TEST_CASE("cyclotomic arithmetic") {
    Cyclotomic s = Cyclotomic::root(3, 1) + Cyclotomic::root(3, 2);
    CHECK(s.is_rational());
    CHECK(s.rational_value() == -1);
    Cyclotomic one_plus = Cyclotomic::root(3, 0) + Cyclotomic::root(3, 1);
    CHECK(one_plus.norm_squared().rational_value() == 1);
    CHECK(Cyclotomic::root(4, 1).conj() == Cyclotomic::root(4, 3));
    CHECK_THROWS_AS(Cyclotomic::root(3, 1).rational_value(), InternalError);
    CHECK(cyclotomic_polynomial(4) == IntPolynomial(std::vector<BigInt>{1, 0, 1}));
  }
}
