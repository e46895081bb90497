#include <cmath>
#include <random>

#include <doctest.h>

#include "honeylab/geometry.hpp"
#include "test_support.hpp"

using namespace honeylab;

namespace {
constexpr double kPi = 3.14159265358979323846;

ConvexPolygon square2() {  // vertices (+-1, +-1)
  return canonicalize({{1, 1}, {-1, 1}, {-1, -1}, {1, -1}});
}

ConvexPolygon diamond() { return canonicalize({{1, 0}, {0, 1}, {-1, 0}, {0, -1}}); }
}  // namespace

TEST_CASE("canonicalize removes collinear points and fixes orientation") {
  const ConvexPolygon tri = canonicalize({{0, 0}, {1, 0}, {2, 0}, {1, 1}});
  REQUIRE(tri.size() == 3);
  CHECK(tri.vertices[0].x == doctest::Approx(0.0));
  CHECK(area(tri) == doctest::Approx(1.0));

  const ConvexPolygon cw = canonicalize({{0, 0}, {0, 1}, {1, 1}, {1, 0}});  // clockwise input
  REQUIRE(cw.size() == 4);
  double twice = 0.0;
  for (int i = 0; i < cw.size(); ++i) twice += cross(cw.vertex(i), cw.vertex(i + 1));
  CHECK(twice > 0.0);  // counterclockwise after cleanup
  CHECK(cw.vertices[0].x == doctest::Approx(0.0));
  CHECK(cw.vertices[0].y == doctest::Approx(0.0));

  CHECK_THROWS_AS(canonicalize({{0, 0}, {1, 0}, {2, 0}}), Error);
  try {
    canonicalize({{0, 0}, {1, 0}, {2, 0}});
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DegenerateInput);
  }
}

TEST_CASE("canonicalize is idempotent") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const ConvexPolygon P = testsupport::random_convex_polygon(rng, 12);
    const ConvexPolygon Q = canonicalize(P.vertices);
    REQUIRE(Q.size() == P.size());
    for (int i = 0; i < P.size(); ++i) {
      CHECK(Q.vertex(i).x == doctest::Approx(P.vertex(i).x).epsilon(1e-12));
      CHECK(Q.vertex(i).y == doctest::Approx(P.vertex(i).y).epsilon(1e-12));
    }
  }
}

TEST_CASE("area on reference shapes") {
  CHECK(area(canonicalize({{0, 0}, {1, 0}, {1, 1}, {0, 1}})) == doctest::Approx(1.0));
  CHECK(area(regular_gon(6)) == doctest::Approx(6.0 * std::tan(kPi / 6.0)));
  CHECK(area(canonicalize({{0, 0}, {2, 0}, {1, 1}})) == doctest::Approx(1.0));
}

TEST_CASE("polar dual of the square is the diamond") {
  const ConvexPolygon dual = polar_dual(square2());
  REQUIRE(dual.size() == 4);
  CHECK(hausdorff_distance(dual, diamond()) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("disk approximation is nearly self-dual") {
  const ConvexPolygon disk = disk_approximation(4096);
  CHECK(hausdorff_distance(disk, polar_dual(disk)) < 1e-5);
}

TEST_CASE("polar dual is an involution") {
  const ConvexPolygon tri = canonicalize({{-0.4, -0.3}, {1.5, -0.2}, {0.1, 1.1}});
  const ConvexPolygon back = polar_dual(polar_dual(tri));
  CHECK(hausdorff_distance(tri, back) < 1e-9);

  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 20; ++trial) {
    const ConvexPolygon P = testsupport::random_convex_polygon(rng, 10, 0.6, 1.4);
    CHECK(hausdorff_distance(P, polar_dual(polar_dual(P))) < 1e-8);
  }
}

TEST_CASE("polar dual needs the origin strictly inside") {
  const ConvexPolygon off = canonicalize({{1, 1}, {2, 1}, {1.5, 2}});
  CHECK_THROWS_AS(polar_dual(off), Error);
}

TEST_CASE("polar dual reverses inclusion") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 10; ++trial) {
    ConvexPolygon K = testsupport::random_convex_polygon(rng, 10, 0.5, 1.0);
    K = translate(K, -1.0 * centroid(K));  // duality needs the origin interior
    const ConvexPolygon L = scale(K, 1.5);  // K subset of L
    const ConvexPolygon Ld = polar_dual(L), Kd = polar_dual(K);
    for (const Point2& v : Ld.vertices) CHECK(contains(Kd, v, 1e-9));
  }
}

TEST_CASE("rotate preserves area and known images") {
  const ConvexPolygon d = diamond();
  CHECK(hausdorff_distance(rotate(d, kPi / 2.0), d) < 1e-12);
  const ConvexPolygon sq = rotate(square2(), kPi / 4.0);
  CHECK(hausdorff_distance(sq, scale(diamond(), std::sqrt(2.0))) < 1e-12);

  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 10; ++trial) {
    const ConvexPolygon P = testsupport::random_convex_polygon(rng, 9);
    const double theta = 0.1 + 0.37 * trial;
    CHECK(area(rotate(P, theta)) == doctest::Approx(area(P)).epsilon(1e-12));
    CHECK(inradius(rotate(P, theta)) == doctest::Approx(inradius(P)).epsilon(1e-10));
    CHECK(circumradius(rotate(P, theta)) == doctest::Approx(circumradius(P)).epsilon(1e-10));
    CHECK(min_width(rotate(P, theta)) == doctest::Approx(min_width(P)).epsilon(1e-10));
  }
}

TEST_CASE("hausdorff distance reference values") {
  const ConvexPolygon disk = disk_approximation(4096);
  CHECK(hausdorff_distance(square2(), square2()) == doctest::Approx(0.0));
  CHECK(hausdorff_distance(square2(), disk) == doctest::Approx(std::sqrt(2.0) - 1.0).epsilon(1e-4));
  CHECK(hausdorff_distance(disk, scale(disk, 1.001)) == doctest::Approx(0.001).epsilon(1e-6));
}

TEST_CASE("inradius, circumradius and width on reference shapes") {
  const ConvexPolygon unit = canonicalize({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  CHECK(inradius(unit) == doctest::Approx(0.5));
  CHECK(circumradius(unit) == doctest::Approx(std::sqrt(2.0) / 2.0));
  CHECK(min_width(unit) == doctest::Approx(1.0));

  const ConvexPolygon hex = regular_gon(6);
  CHECK(inradius(hex) == doctest::Approx(1.0));
  CHECK(circumradius(hex) == doctest::Approx(2.0 / std::sqrt(3.0)));
}

TEST_CASE("inradius dominates a third of the width") {
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 50; ++trial) {
    const ConvexPolygon P = testsupport::random_convex_polygon(rng, 14, 0.2, 1.6);
    const double ir = inradius(P), cr = circumradius(P), w = min_width(P);
    CHECK(ir > 0.0);
    CHECK(ir <= cr + 1e-12);
    CHECK(w <= 2.0 * cr + 1e-12);
    CHECK(ir >= w / 3.0 - 1e-12);
  }
}

TEST_CASE("support function basics") {
  const ConvexPolygon sq = square2();
  CHECK(support_function(sq, {1, 0}) == doctest::Approx(1.0));
  CHECK(support_function(sq, {1, 1}) == doctest::Approx(2.0));
  CHECK(support_function(sq, {2, 2}) == doctest::Approx(4.0));  // positive homogeneity
  CHECK_THROWS_AS(support_function(sq, {0, 0}), Error);
}

TEST_CASE("regular gon construction and regularity check") {
  for (int m : {3, 4, 6, 9}) {
    const ConvexPolygon P = regular_gon(m, 2.0, 0.4);
    REQUIRE(P.size() == m);
    CHECK(inradius(P) == doctest::Approx(2.0));
    CHECK(is_regular(P));
  }
  CHECK_FALSE(is_regular(canonicalize({{0, 0}, {3, 0}, {1, 1}})));
  CHECK(is_origin_symmetric(square2()));
  CHECK_FALSE(is_origin_symmetric(canonicalize({{-0.4, -0.3}, {1.5, -0.2}, {0.1, 1.1}})));
}

TEST_CASE("containment and distance queries") {
  const ConvexPolygon sq = square2();
  CHECK(contains(sq, {0.3, -0.9}));
  CHECK_FALSE(contains(sq, {1.2, 0.0}));
  CHECK(distance_to(sq, {0.0, 0.0}) == doctest::Approx(0.0));
  CHECK(distance_to(sq, {2.0, 0.0}) == doctest::Approx(1.0));
  CHECK(distance_to(sq, {2.0, 2.0}) == doctest::Approx(std::sqrt(2.0)));
}
