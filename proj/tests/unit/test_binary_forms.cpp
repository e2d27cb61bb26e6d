#include <numeric>
#include <doctest.h>

#include <random>

#include "syzygy/binary_forms.hpp"
#include "syzygy/error.hpp"

using namespace syzygy;

TEST_SUITE("binary_forms") {
  TEST_CASE("invariants of known quartics") {
    auto f = QuarticForm::from_longs(1, 0, 0, 0, 4);
    CHECK(f.I() == 4);
    CHECK(f.J() == 0);
    auto g = QuarticForm::from_longs(1, 0, 6, 0, 1);
    CHECK(g.I() == 4);
    CHECK(g.J() == 0);
    auto h = QuarticForm::from_longs(2, 0, 5, 0, 3);
    CHECK(h.I() == BigRational(97, 12));
    CHECK(h.J() == BigRational(955, 216));
    CHECK(f.discriminant() == f.I() * f.I() * f.I() - 27 * f.J() * f.J());
  }

  TEST_CASE("syzygy holds for random quartics") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> d(-50, 50);
    for (int i = 0; i < 200; ++i) CHECK(verify_syzygy(QuarticForm::from_longs(d(rng), d(rng), d(rng), d(rng), d(rng))));
  }

  TEST_CASE("SL2 action preserves invariants and evaluation") {
    std::mt19937_64 rng(12);
    std::uniform_int_distribution<long> d(-9, 9);
    for (int i = 0; i < 100; ++i) {
      auto f = QuarticForm::from_longs(d(rng), d(rng), d(rng), d(rng), d(rng));
      long a = d(rng), b = d(rng);
      if (std::gcd(a, b) != 1) continue;
      // complete (a b; c d) to determinant 1
      BigInt g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), BigInt(a).get_mpz_t(), BigInt(b).get_mpz_t());
      UnimodularMatrix m{BigInt(a), BigInt(b), -t, s};
      REQUIRE(m.det() == 1);
      auto g2 = sl2_act(m, f);
      CHECK(g2.I() == f.I());
      CHECK(g2.J() == f.J());
      auto mi = m.inverse();
      CHECK(sl2_act(mi, g2) == f);
    }
    CHECK_THROWS_AS(require_unimodular(UnimodularMatrix::from(2, 0, 0, 1)), InvalidInput);
  }

  TEST_CASE("quadratic form parsing") {
    auto q = QuadForm::parse("1,0,5");
    CHECK(q.discriminant() == -20);
    CHECK(q.positive_definite());
    CHECK(q.evaluate(2, 2) == 24);
    CHECK_THROWS_AS(QuadForm::parse("1,2"), InvalidInput);
    CHECK(QuarticForm::parse("1,0,6,0,1") == QuarticForm::from_longs(1, 0, 6, 0, 1));
  }
}
