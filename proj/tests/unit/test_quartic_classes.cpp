#include <numeric>
#include <doctest.h>

#include "syzygy/error.hpp"
#include "syzygy/quartic_classes.hpp"

using namespace syzygy;

namespace {
const ClassSet& duke_classes() {
  static const ClassSet s = enumerate_classes(4, 0, 12);
  return s;
}
}  // namespace

TEST_SUITE("quartic_classes") {
  TEST_CASE("class set for (4,0) contains both classical representatives") {
    const auto& s = duke_classes();
    CHECK(s.lattice == FormLattice::Mordell);
    for (const auto& c : s.classes) {
      CHECK(c.form.I() == 4);
      CHECK(c.form.J() == 0);
      CHECK(in_lattice(c.form, FormLattice::Mordell));
      CHECK(c.aut_order() >= 2);
    }
    for (auto ref : {QuarticForm::from_longs(1, 0, 0, 0, 4), QuarticForm::from_longs(1, 0, 6, 0, 1)}) {
      bool found = false;
      for (const auto& c : s.classes)
        if (auto w = are_equivalent(ref, c.form)) {
          CHECK(sl2_act(*w, ref) == c.form);
          found = true;
        }
      CHECK(found);
    }
  }

  TEST_CASE("representatives are pairwise inequivalent") {
    const auto& s = duke_classes();
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t j = i + 1; j < s.size(); ++j) CHECK_FALSE(are_equivalent(s.classes[i].form, s.classes[j].form, 8));
  }

  TEST_CASE("automorphisms fix the form") {
    for (const auto& c : duke_classes().classes)
      for (const auto& m : c.automorphisms) {
        CHECK(m.det() == 1);
        CHECK(sl2_act(m, c.form) == c.form);
      }
  }

  TEST_CASE("serialization round-trips and detects damage") {
    const auto& s = duke_classes();
    auto text = serialize_class_set(s);
    auto back = parse_class_set(text);
    CHECK(back.representatives() == s.representatives());
    CHECK(back.lattice == s.lattice);
    CHECK(serialize_class_set(back) == text);
    CHECK_THROWS_AS(parse_class_set("garbage"), CacheCorruption);
    CHECK_THROWS_AS(parse_class_set(text.substr(0, text.size() / 2)), CacheCorruption);
  }

  TEST_CASE("lattice selection") {
    CHECK(resolve_lattice(FormLattice::Auto, 4, 0) == FormLattice::Mordell);
    CHECK(resolve_lattice(FormLattice::Auto, BigRational(97, 12), BigRational(955, 216)) == FormLattice::Integral);
    CHECK(parse_lattice(lattice_name(FormLattice::Integral)) == FormLattice::Integral);
    CHECK_THROWS_AS(parse_lattice("hexagonal"), InvalidInput);
    CHECK_FALSE(in_lattice(QuarticForm::from_longs(0, 1, 0, 0, 1), FormLattice::Mordell));
  }

  TEST_CASE("admissibility agrees with its local definition") {
    auto f = QuarticForm::from_longs(1, 0, 0, 0, 4);
    auto r = admissible_residues(f);
    auto primes = admissibility_primes(f);
    for (long a = -12; a <= 12; ++a)
      for (long b = -12; b <= 12; ++b) {
        bool local = true;
        for (const auto& p : primes) local = local && admissible_at(f, p, a, b);
        CHECK(r.contains(BigInt(a), BigInt(b)) == local);
        CHECK(is_admissible_pair(f, a, b) == (local && std::gcd(a, b) == 1));
      }
  }

  TEST_CASE("definiteness") {
    CHECK(definiteness(QuarticForm::from_longs(1, 0, 0, 0, 4)) == Definiteness::PositiveDefinite);
    CHECK(definiteness(QuarticForm::from_longs(-1, 0, -6, 0, -1)) == Definiteness::NegativeDefinite);
    CHECK(definiteness(QuarticForm::from_longs(0, 4, 0, -4, 0)) == Definiteness::Indefinite);
  }

  TEST_CASE("reduction is an equivalence") {
    auto f = sl2_act(UnimodularMatrix::from(3, 2, 4, 3), QuarticForm::from_longs(1, 0, 6, 0, 1));
    auto r = reduce_quartic(f);
    CHECK(sl2_act(r.witness, f) == r.form);
    CHECK(r.form.height() <= f.height());
  }
}
