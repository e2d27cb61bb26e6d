#include "verify.hpp"

#include <random>
#include <sstream>

#include "syzygy/class_group.hpp"
#include "syzygy/experiment_lab.hpp"
#include "syzygy/galois_tools.hpp"
#include "syzygy/point_enum.hpp"
#include "syzygy/quartic_classes.hpp"

namespace syzygy {

namespace {

template <class F>
VerifyResult check(const std::string& name, F&& body) {
  VerifyResult r{name, false, ""};
  try {
    r.detail = body(r.passed);
  } catch (const std::exception& e) {
    r.passed = false;
    r.detail = std::string("exception: ") + e.what();
  }
  return r;
}

}  // namespace

std::vector<VerifyResult> run_verification(bool quick, unsigned threads) {
  std::vector<VerifyResult> out;

  out.push_back(check("syzygy identity", [&](bool& ok) {
    std::mt19937_64 rng(20240611);
    std::uniform_int_distribution<long> d(-50, 50);
    const int n = quick ? 200 : 1000;
    int bad = 0;
    for (int i = 0; i < n; ++i)
      if (!verify_syzygy(QuarticForm::from_longs(d(rng), d(rng), d(rng), d(rng), d(rng)))) ++bad;
    ok = bad == 0;
    return std::to_string(n - bad) + "/" + std::to_string(n) + " random quartics";
  }));

  out.push_back(check("r_Q lattice vs ideal route", [&](bool& ok) {
    const long limit = quick ? 500 : 10000;
    long compared = 0, bad = 0;
    for (long D : {-4L, -20L, -23L, -47L}) {
      auto t = class_group(D);
      for (std::size_t k = 0; k < t.order(); ++k) {
        auto table = r_Q_table(t.forms()[k], limit);
        for (long n = 1; n <= limit; ++n) {
          if (std::gcd(n, -D) != 1) continue;
          ++compared;
          if (table[static_cast<std::size_t>(n)] != r_Q_ideal(t, k, n)) ++bad;
        }
      }
    }
    ok = bad == 0;
    return std::to_string(compared) + " values, " + std::to_string(bad) + " mismatches";
  }));

  out.push_back(check("Eisenstein/cuspidal split", [&](bool& ok) {
    const long limit = quick ? 200 : 1000;
    long bad = 0;
    for (long D : {-20L, -23L, -47L}) {
      auto t = class_group(D);
      for (std::size_t k = 0; k < t.order(); ++k)
        for (long n = 1; n <= limit; ++n) {
          if (std::gcd(n, -D) != 1) continue;
          BigRational e = eisenstein_coeff(t, k, n);
          if (e != eisenstein_coeff_characters(t, k, n)) ++bad;
          if (e + cuspidal_coeff(t, k, n) != r_Q_lattice(t.forms()[k], n)) ++bad;
        }
    }
    ok = bad == 0;
    return std::to_string(bad) + " failures for n <= " + std::to_string(limit);
  }));

  out.push_back(check("syzygy count vs brute force", [&](bool& ok) {
    ClassSearchOptions o;
    o.threads = threads;
    auto classes = enumerate_classes(4, 0, quick ? 12 : 40, o);
    std::ostringstream s;
    ok = true;
    CountOptions co;
    co.threads = threads;
    for (auto q : {QuadForm{1, 0, 1}, QuadForm{1, 0, 5}}) {
      SurfaceSpec surf{-1, 0, q};
      for (long T : quick ? std::vector<long>{2, 3, 5, 10} : std::vector<long>{2, 3, 5, 10, 20}) {
        auto a = count_points_syzygy(surf, classes, T, co);
        auto b = count_points_bruteforce(surf, T, co);
        bool same = a.N == b.N && a.points.size() == b.points.size();
        for (std::size_t i = 0; same && i < a.points.size(); ++i) same = a.points[i].same_point(b.points[i]);
        ok = ok && same;
        s << q.to_string() << "@" << T << "=" << to_string(a.N) << (same ? " " : "(!) ");
      }
    }
    return s.str();
  }));

  out.push_back(check("recombination", [&](bool& ok) {
    ok = true;
    long n = 0;
    for (auto F : {BinaryForm<BigInt>({1, 0, 0, 0, 4}), BinaryForm<BigInt>({1, 1, 6})})
      for (auto q : {QuadForm{1, 1, 6}, QuadForm{2, 1, 3}})
        for (long M : {1L, 3L}) {
          ExperimentSpec s;
          s.F = F;
          s.Q = q;
          s.M = M;
          s.alpha1 = M == 3 ? 1 : 0;
          s.alpha2 = M == 3 ? 2 : 0;
          s.threads = threads;
          ok = ok && recombination_check(s, quick ? 15 : 40).holds;
          ++n;
        }
    return std::to_string(n) + " configurations";
  }));

  out.push_back(check("Hecke conjugate symmetry", [&](bool& ok) {
    auto t = class_group(-23);
    IntPolynomial P(std::vector<BigInt>{0, 1});
    auto a = hecke_l1_sum(t, t.characters()[1], P, 2000);
    auto b = hecke_l1_sum(t, t.characters()[2], P, 2000);
    ok = a.l2 == b.l2 && t.characters()[1].order == 3;
    return "sum |lambda|^2 to 2000 = " + to_string(a.l2.rational_value());
  }));

  out.push_back(check("quadratic subfields", [&](bool& ok) {
    auto v = quadratic_subfields(IntPolynomial::from_descending({1, 0, 6, 0, 1}));
    auto w = quadratic_subfields(IntPolynomial::from_descending({1, 0, 0, 1, 1}));
    ok = v == std::vector<BigInt>{-8, -4, 8} && w == std::vector<BigInt>{229};
    return "x^4+6x^2+1 and x^4+x+1";
  }));

  return out;
}

}  // namespace syzygy
