#include <numeric>
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "syzygy/error.hpp"
#include "syzygy/experiment_lab.hpp"

using namespace syzygy;

namespace {
ExperimentSpec spec(BinaryForm<BigInt> F, QuadForm q) {
  ExperimentSpec s;
  s.F = std::move(F);
  s.Q = q;
  return s;
}
const BinaryForm<BigInt> kQuartic({1, 0, 0, 0, 4});
}  // namespace

TEST_SUITE("experiment_lab") {
  TEST_CASE("correlation sum basics") {
    auto s = spec(kQuartic, QuadForm{1, 0, 1});
    CHECK(correlation_sum(s, 0) == 0);
    // independent double loop
    BigInt direct = 0;
    for (long x = 0; x <= 3; ++x)
      for (long y = 0; y <= 3; ++y)
        if (std::gcd(x, y) == 1) direct += r_Q_lattice(QuadForm{1, 0, 1}, x * x * x * x + 4 * y * y * y * y);
    CHECK(correlation_sum(s, 3) == direct);
    CHECK(correlation_sum(s, 3) == 112);
    BigInt prev = 0;
    for (long X = 1; X <= 30; ++X) {
      auto v = correlation_sum(s, X);
      CHECK(v >= prev);
      prev = v;
    }
    auto r = s;
    r.M = 3;
    r.alpha1 = 1;
    r.alpha2 = 2;
    CHECK(correlation_sum(r, 40) <= correlation_sum(s, 40));
  }

  TEST_CASE("Eisenstein sum for a single genus") {
    auto s = spec(kQuartic, QuadForm{1, 0, 1});
    for (long X : {5, 17, 33}) CHECK(4 * eisenstein_sum(s, X, 1, -4) == correlation_sum(s, X));
    CHECK_THROWS_AS(eisenstein_sum(s, 5, 1, -3), InvalidInput);
  }

  TEST_CASE("cuspidal sums vanish without order-3 characters") {
    auto s = spec(kQuartic, QuadForm{1, 0, 5});
    auto t = class_group(-20);
    for (const auto& psi : t.characters()) CHECK(psi.is_real());
    auto r = recombination_check(s, 25);
    CHECK(r.cuspidal_part == 0);
    CHECK(r.holds);
  }

  TEST_CASE("recombination for discriminant -23") {
    for (auto F : {kQuartic, BinaryForm<BigInt>({1, 1, 6})})
      for (auto q : {QuadForm{1, 1, 6}, QuadForm{2, 1, 3}})
        for (long M : {1L, 3L}) {
          auto s = spec(F, q);
          s.M = M;
          s.alpha1 = M == 3 ? 2 : 0;
          s.alpha2 = M == 3 ? 1 : 0;
          auto r = recombination_check(s, 20);
          CHECK(r.holds);
          CHECK(r.eisenstein_part + r.cuspidal_part == BigRational(r.direct));
        }
  }

  TEST_CASE("exponent fit recovers planted exponents") {
    std::vector<std::int64_t> grid;
    for (std::int64_t X = 32; X <= 1 << 20; X *= 2) grid.push_back(X);
    for (int beta : {0, 1, 2}) {
      std::vector<double> v;
      for (auto X : grid) v.push_back(3.0 * double(X) * double(X) * std::pow(std::log(double(X)), beta));
      auto f = fit_log_exponent(grid, v);
      CHECK(std::fabs(f.beta - beta) < 0.05);
      CHECK(f.rms < 1e-9);
    }
    CHECK_THROWS_AS(fit_log_exponent({10, 20, 40}, {1, 2, 3}), InvalidInput);
    CHECK_THROWS_AS(fit_log_exponent({10, 20, 40, 80, 160}, {1, 2, 0, 3, 4}), InvalidInput);
  }

  TEST_CASE("Hecke sums") {
    auto t = class_group(-23);
    IntPolynomial id(std::vector<BigInt>{0, 1});
    CHECK(hecke_l1_sum(t, t.characters()[0], id, 0).l1 == 0);
    // trivial character: total ideal counts
    const long X = 500;
    auto h = hecke_l1_sum(t, t.characters()[0], id, X);
    long total = 0;
    for (long n = 1; n <= X; ++n)
      for (std::size_t k = 0; k < t.order(); ++k) total += r_Q_lattice(t.forms()[k], n);
    CHECK(h.l1 == doctest::Approx(double(total) / t.units()));
    // conjugate characters agree exactly
    std::size_t a = 0, b = 0;
    for (std::size_t k = 0; k < t.characters().size(); ++k)
      if (t.characters()[k].order == 3) (a ? b : a) = k;
    auto ha = hecke_l1_sum(t, t.characters()[a], id, 3000);
    auto hb = hecke_l1_sum(t, t.characters()[b], id, 3000);
    CHECK(ha.l2 == hb.l2);
    CHECK(ha.l1 == doctest::Approx(hb.l1));
    auto series = hecke_l1_series(t, t.characters()[a], id, {100, 1000, 10000});
    CHECK(series[1].l1 / 1000 < series[0].l1 / 100);
    CHECK(series[2].l1 / 10000 < series[1].l1 / 1000);
    CHECK(series[0].l1 <= series[1].l1);
  }

  TEST_CASE("Eisenstein partial sums for -4") {
    auto t = class_group(-4);
    long lhs_num = 0;
    BigRational lhs = 0;
    for (long n = 1; n <= 400; ++n) {
      lhs += eisenstein_coeff(t, 0, n);
      for (long d = 1; d <= n; ++d)
        if (n % d == 0) lhs_num += 4 * kronecker(-4, d);
    }
    CHECK(lhs == lhs_num);
  }

  TEST_CASE("Nair right-hand side") {
    IntPolynomial id(std::vector<BigInt>{0, 1});
    CHECK(nair_rhs(id, [](std::int64_t) { return 1.0; }, 1000) == doctest::Approx(1000.0));
    double prev = 2;
    for (long X : {100, 1000, 10000}) {
      double v = nair_rhs(id, [](std::int64_t) { return 0.0; }, X) / X;
      CHECK(v < prev);
      // Mertens: sum 1/p = log log X + 0.2615 + o(1)
      CHECK(v * std::log(double(X)) == doctest::Approx(std::exp(-0.2615)).epsilon(0.05));
      prev = v;
    }
  }

  TEST_CASE("appendix constants") {
    auto d = delta_inf();
    CHECK(std::fabs(d.value - 0.067) <= 0.001);
    CHECK(delta_integrand(0) == doctest::Approx(0.125));
    CHECK(delta_integrand(1e-6) == doctest::Approx(0.125));
    CHECK(*dihedral_g(3).exact == BigRational(2, 3));
    CHECK(*dihedral_g(4).exact == BigRational(1, 2));
    CHECK_FALSE(dihedral_g(5).exact.has_value());
    CHECK(std::fabs(dihedral_g(10000).value - 2 / std::numbers::pi) < 1e-3);
    auto rep = dihedral_sup_check(200);
    CHECK(rep.within_bound);
    CHECK(rep.argmax == 3);
  }

  TEST_CASE("config parsing") {
    auto s = parse_experiment_config(
        "# comment\nform = 1,0,0,0,4\nquad = 1,0,1\nregion = 0,1,0,1/2\nmodulus = 3\nresidue = 1,2\ngrid_max = 256\n");
    CHECK(s.F == kQuartic);
    CHECK(s.region.area() == BigRational(1, 2));
    CHECK(s.grid == std::vector<std::int64_t>{32, 64, 128, 256});
    CHECK(s.M == 3);
    CHECK_THROWS_AS(parse_experiment_config("form = 1,0,1\nmodulus = 0\n"), InvalidInput);
    CHECK_THROWS_AS(parse_experiment_config("residue = 3,0\nmodulus = 3\n"), InvalidInput);
    CHECK_THROWS_AS(parse_experiment_config("region = 0,0,0,1\n"), InvalidInput);
    CHECK_THROWS_AS(parse_experiment_config("colour = blue\n"), InvalidInput);
    CHECK_THROWS_AS(parse_experiment_config("grid = 10,5\n"), InvalidInput);
  }

  TEST_CASE("series csv") {
    auto s = spec(kQuartic, QuadForm{1, 0, 1});
    s.grid = {4, 8, 16, 32, 64};
    auto r = correlation_series(s);
    REQUIRE(r.fit.has_value());
    CHECK(r.to_csv().rfind("X,value,normalized\n4,", 0) == 0);
    CHECK(r.exact.size() == 5);
  }
}
