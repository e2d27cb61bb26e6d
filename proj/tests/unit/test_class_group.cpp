#include <numeric>
#include <doctest.h>

#include "syzygy/class_group.hpp"
#include "syzygy/error.hpp"

using namespace syzygy;

TEST_SUITE("class_group") {
  TEST_CASE("class numbers") {
    CHECK(class_group(-3).order() == 1);
    CHECK(class_group(-4).order() == 1);
    CHECK(class_group(-20).order() == 2);
    CHECK(class_group(-23).order() == 3);
    CHECK(class_group(-47).order() == 5);
    CHECK(class_group(-84).order() == 4);
    CHECK(class_group(-4).units() == 4);
    CHECK(class_group(-3).units() == 6);
    CHECK_THROWS_AS(class_group(5), InvalidInput);
    CHECK_THROWS_AS(class_group(-5), InvalidInput);
  }

  TEST_CASE("composition forms a group") {
    for (long D : {-23L, -47L, -84L, -71L}) {
      auto t = class_group(D);
      const auto h = t.order();
      for (std::size_t a = 0; a < h; ++a) {
        CHECK(t.compose(a, t.identity()) == a);
        CHECK(t.compose(a, t.inverse(a)) == t.identity());
        for (std::size_t b = 0; b < h; ++b) {
          CHECK(t.compose(a, b) == t.compose(b, a));
          for (std::size_t c = 0; c < h; ++c) CHECK(t.compose(t.compose(a, b), c) == t.compose(a, t.compose(b, c)));
        }
      }
    }
    CHECK(compose(QuadForm{2, 1, 3}, QuadForm{2, -1, 3}) == QuadForm{1, 1, 6});
  }

  TEST_CASE("characters are orthogonal homomorphisms") {
    for (long D : {-23L, -47L, -84L}) {
      auto t = class_group(D);
      CHECK(t.characters().size() == t.order());
      for (const auto& psi : t.characters()) {
        for (std::size_t a = 0; a < t.order(); ++a)
          for (std::size_t b = 0; b < t.order(); ++b)
            CHECK(psi.value(t.compose(a, b)) == psi.value(a) * psi.value(b));
        Cyclotomic s(psi.modulus);
        for (std::size_t a = 0; a < t.order(); ++a) s = s + psi.value(a);
        CHECK(s.rational_value() == (psi.order == 1 ? static_cast<long>(t.order()) : 0));
      }
    }
  }

  TEST_CASE("representation numbers: lattice vs ideals") {
    CHECK(r_Q_lattice(QuadForm{1, 0, 1}, 5) == 8);
    CHECK(r_Q_lattice(QuadForm{1, 0, 1}, 3) == 0);
    for (long D : {-4L, -20L, -23L, -47L}) {
      auto t = class_group(D);
      for (std::size_t k = 0; k < t.order(); ++k) {
        auto table = r_Q_table(t.forms()[k], 2000);
        for (long n = 1; n <= 2000; ++n)
          if (std::gcd(n, -D) == 1) CHECK(table[static_cast<std::size_t>(n)] == r_Q_ideal(t, k, n));
      }
    }
  }

  TEST_CASE("Eisenstein and cuspidal parts") {
    auto t = class_group(-23);
    CHECK(eisenstein_coeff(t, 0, 2) == BigRational(4, 3));
    CHECK(cuspidal_coeff(t, 0, 2) == BigRational(-4, 3));
    for (long D : {-20L, -23L, -47L})
      for (std::size_t k = 0; k < class_group(D).order(); ++k) {
        auto tb = class_group(D);
        for (long n = 1; n <= 300; ++n) {
          auto e = eisenstein_coeff(tb, k, n);
          CHECK(e == eisenstein_coeff_characters(tb, k, n));
          CHECK(e + cuspidal_coeff(tb, k, n) == r_Q_lattice(tb.forms()[k], n));
        }
      }
    CHECK(class_group(-20).characters().size() == 2);
    for (const auto& c : class_group(-20).characters()) CHECK(c.is_real());
  }

  TEST_CASE("genus theory") {
    CHECK(prime_discriminants(-20) == std::vector<BigInt>{-4, 5});
    CHECK(genus_pairs(-20).size() == 4);
    CHECK(canonical_genus_pairs(-20).size() == 2);
    CHECK(canonical_genus_pairs(-23).size() == 1);
    auto t = class_group(-20);
    CHECK(genus_character_value({-4, 5}, t, 0) == 1);
    CHECK(genus_character_value({-4, 5}, t, 1) == -1);
    CHECK(eisenstein_multiplicativity_check(-4, 5, 3, 7));
    CHECK(eisenstein_epsilon(1, -4, 25) == 3);
  }

  TEST_CASE("ideal counts sum over classes") {
    auto t = class_group(-23);
    for (long n = 1; n <= 200; ++n) {
      auto c = t.ideal_class_counts(n);
      long total = 0;
      for (auto x : c) total += x;
      BigInt expect = 0;
      for (const auto& d : divisors(n)) expect += kronecker(BigInt(-23), d);
      CHECK(total == expect);
    }
  }
}
