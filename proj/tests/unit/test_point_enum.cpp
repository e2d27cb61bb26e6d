#include <doctest.h>

#include "syzygy/error.hpp"
#include "syzygy/point_enum.hpp"

using namespace syzygy;

namespace {
const ClassSet& classes40() {
  static const ClassSet s = enumerate_classes(4, 0, 40);
  return s;
}
}  // namespace

TEST_SUITE("point_enum") {
  TEST_CASE("syzygy and brute force produce identical point lists") {
    for (auto q : {QuadForm{1, 0, 1}, QuadForm{1, 0, 5}}) {
      SurfaceSpec s{-1, 0, q};
      for (long T : {2, 3, 5, 10}) {
        auto a = count_points_syzygy(s, classes40(), T);
        auto b = count_points_bruteforce(s, T);
        CHECK(a.N == b.N);
        REQUIRE(a.points.size() == b.points.size());
        for (std::size_t i = 0; i < a.points.size(); ++i) CHECK(a.points[i].same_point(b.points[i]));
        for (const auto& p : a.points) CHECK(on_surface(s, p));
      }
    }
  }

  TEST_CASE("known counts") {
    SurfaceSpec s{-1, 0, QuadForm{1, 0, 1}};
    CHECK(count_points_syzygy(s, classes40(), 0).N == 0);
    CHECK(count_points_syzygy(s, classes40(), 3).N == 16);
    CHECK(count_points_syzygy(s, classes40(), 10).N == 96);
    SurfaceSpec s5{-1, 0, QuadForm{1, 0, 5}};
    CHECK(count_points_syzygy(s5, classes40(), 5).N == 12);
  }

  TEST_CASE("counts are monotone in T") {
    SurfaceSpec s{-1, 0, QuadForm{1, 0, 5}};
    BigInt prev = 0;
    for (long T = 1; T <= 12; ++T) {
      auto n = count_points_syzygy(s, classes40(), T, {0, false}).N;
      CHECK(n >= prev);
      prev = n;
    }
  }

  TEST_CASE("Duke map lands on the curve") {
    auto f = QuarticForm::from_longs(1, 0, 0, 0, 4);
    auto img = duke_map(f, 1, 1);
    CHECK(img.n == 5);
    CHECK(img.y * img.y == img.x * img.x * img.x - img.x * img.n * img.n);
    CHECK_THROWS_AS(duke_map(f, 0, 0), InvalidInput);
  }

  TEST_CASE("v_count matches the point list") {
    SurfaceSpec s{-1, 0, QuadForm{1, 0, 1}};
    CHECK(v_count(s, classes40(), 5, 3) == 2);
  }

  TEST_CASE("invalid surfaces are rejected") {
    CHECK_THROWS_AS((SurfaceSpec{0, 0, QuadForm{1, 0, 1}}.validate()), InvalidInput);
    CHECK_THROWS_AS((SurfaceSpec{-1, 0, QuadForm{1, 0, -1}}.validate()), InvalidInput);
    CHECK_THROWS_AS(count_points_bruteforce(SurfaceSpec{-1, 0, QuadForm{1, 0, 1}}, BigInt(200000)), InvalidInput);
  }

  TEST_CASE("csv output is stable") {
    SurfaceSpec s{-1, 0, QuadForm{1, 0, 1}};
    auto a = count_points_syzygy(s, classes40(), 5);
    auto csv = points_to_csv(a.points);
    CHECK(csv.rfind("x,y,u,v,n,class_index,m1,m2\n", 0) == 0);
    CHECK(csv == points_to_csv(count_points_syzygy(s, classes40(), 5).points));
  }
}
