#include <doctest.h>

#include <random>

#include "syzygy/error.hpp"
#include "syzygy/galois_tools.hpp"

using namespace syzygy;

namespace {
IntPolynomial P(std::vector<BigInt> desc) { return IntPolynomial::from_descending(desc); }
std::vector<BigInt> V(std::initializer_list<long> xs) {
  std::vector<BigInt> v;
  for (long x : xs) v.emplace_back(x);
  return v;
}
}  // namespace

TEST_SUITE("galois_tools") {
  TEST_CASE("factorization over Z") {
    auto f = factor_over_Z(P({1, 0, 0, 0, 4}));
    CHECK(f.factors.size() == 2);
    auto g = factor_over_Z(P({2, 0, -5, 0, 3}));
    CHECK(g.factors.size() == 3);
    auto h = factor_over_Z(P({1, 0, 0, 0, 0, 0, -1}));
    CHECK(h.factors.size() == 4);
    CHECK(is_irreducible(P({1, 0, 0, 1, 1})));
    CHECK_FALSE(is_irreducible(P({1, 0, 5, 0, 6})));
  }

  TEST_CASE("factorization is a product decomposition") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long> d(-6, 6);
    for (int i = 0; i < 60; ++i) {
      IntPolynomial a = P({1, d(rng), d(rng)}), b = P({d(rng) == 0 ? 1 : 2, d(rng), d(rng), d(rng)});
      auto prod = a * b;
      auto f = factor_over_Z(prod);
      IntPolynomial back(std::vector<BigInt>{f.content});
      for (const auto& x : f.factors) back = back * x;
      CHECK(back == prod);
    }
  }

  TEST_CASE("Galois groups of quartics") {
    CHECK(quartic_galois_group(P({1, 0, 6, 0, 1})) == GaloisTag::V4);
    CHECK(quartic_galois_group(P({1, 0, 0, 1, 1})) == GaloisTag::S4);
    CHECK(quartic_galois_group(P({1, 0, 0, 0, 2})) == GaloisTag::D4);
    CHECK(quartic_galois_group(P({1, 0, -4, 0, 2})) == GaloisTag::C4);
    CHECK(quartic_galois_group(P({1, 0, 5, 0, 5})) == GaloisTag::C4);
    CHECK(quartic_galois_group(P({1, 0, 0, -8, 12})) == GaloisTag::A4);
    CHECK_THROWS_AS(quartic_galois_group(P({1, 0, 0, 0, 4})), InvalidInput);
  }

  TEST_CASE("quadratic subfields") {
    CHECK(quadratic_subfields(P({1, 0, 6, 0, 1})) == V({-8, -4, 8}));
    CHECK(quadratic_subfields(P({1, 0, 0, 1, 1})) == V({229}));
    CHECK(quadratic_subfields(P({1, 0, -4, 0, 2})) == V({8}));
    CHECK(quadratic_subfields(P({1, 0, 0, -8, 12})).empty());
    CHECK(quadratic_subfields(P({1, 0, 0, 0, 4})) == V({-4}));
    CHECK(quadratic_subfields(P({1, 0, 5, 0, 6})) == V({-8, -3, 24}));
    for (const auto& c : splitting_field_profile(P({1, 0, 0, 0, 2})).certificates) CHECK(c.check());
  }

  TEST_CASE("beta exponents and Picard ranks") {
    CHECK(beta_exponent(QuarticForm::from_longs(1, 0, 0, 0, 4), QuadForm{1, 0, 1}) == 2);
    CHECK(beta_exponent(QuarticForm::from_longs(2, 0, 5, 0, 3), QuadForm{1, 0, 1}) == 1);
    CHECK(beta_exponent(QuarticForm::from_longs(1, 0, 6, 0, 1), QuadForm{1, 0, 5}) == 0);
    CHECK(picard_rank(-1, 0, QuadForm{1, 0, 1}) == 5);
    CHECK(picard_rank(-1, 0, QuadForm{1, 0, 5}) == 4);
    CHECK(picard_rank(0, 1, QuadForm{1, 0, 1}) == 4);
    auto r = picard_analysis(BigRational(-97, 48), BigRational(955, 864), QuadForm{1, 0, 1});
    CHECK(r.rank == r.rank_by_substitution);
  }

  TEST_CASE("root counts agree with direct evaluation") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long> d(-20, 20);
    for (int i = 0; i < 80; ++i) {
      IntPolynomial f = P({d(rng) == 0 ? 1 : d(rng), d(rng), d(rng), d(rng)});
      f.trim();
      if (f.is_zero()) continue;
      for (long p : {2L, 3L, 5L, 7L, 31L, 101L}) {
        long direct = 0;
        for (long a = 0; a < p; ++a) direct += (f.eval(BigInt(a)) % p == 0);
        CHECK(local_root_count(f, p) == direct);
      }
    }
    CHECK(local_root_count(P({1, 0, 1}), 5) == 2);
    CHECK(local_root_count(P({1, 0, 1}), 3) == 0);
    CHECK(local_root_count(P({1, 1, 1}), 3) == 1);
    CHECK_THROWS_AS(local_root_count(P({1, 0, 1}), 4), InvalidInput);
  }

  TEST_CASE("genus cuspidality check") {
    auto t = class_group(-23);
    auto k = splitting_field_profile(P({1, 0, 0, 0, 4}));
    for (const auto& xi : t.characters()) {
      auto c = genus_cuspidality_check(t, xi, k);
      if (xi.order == 3)
        CHECK(c.verdict == CuspidalityVerdict::SavingsConditionMet);
      else
        CHECK(c.verdict == CuspidalityVerdict::Undecided);
    }
  }
}
