#include <cmath>
#include <random>

#include <doctest.h>

#include "honeylab/tilings.hpp"
#include "test_support.hpp"

using namespace honeylab;

namespace {
constexpr double kPi = 3.14159265358979323846;

NormDisk euclid() { return NormDisk(disk_approximation(4096), {}, "euclid"); }

NormDisk square_norm() {
  return NormDisk(canonicalize({{1, 1}, {-1, 1}, {-1, -1}, {1, -1}}), {}, "linf");
}
}  // namespace

TEST_CASE("lattice patches have unit-area cells filling the window") {
  for (Prototype proto : {Prototype::Square, Prototype::Triangle, Prototype::Hexagon}) {
    const TilingPatch patch = build_lattice_patch(proto, 12.0);
    REQUIRE(!patch.cells.empty());
    for (const ConvexPolygon& cell : patch.cells)
      CHECK(area(cell) == doctest::Approx(1.0).epsilon(1e-9));
    // Enough cells to fill most of the R = 12 disk.
    CHECK(static_cast<int>(patch.cells.size()) > 300);
  }
}

TEST_CASE("window averages reproduce the flat-count statistics") {
  const NormDisk M = euclid();
  const TilingPatch sq = build_lattice_patch(Prototype::Square, 30.0);
  const AverageSeries sides = window_average(sq, M, StatKind::Sides, 0.0, {10.0, 20.0, 30.0});
  for (double v : sides.values) CHECK(v == doctest::Approx(4.0));
  const AverageSeries p2 = window_average(sq, M, StatKind::PoweredPerimeter, 2.0, {30.0});
  CHECK(p2.values[0] == doctest::Approx(16.0).epsilon(1e-6));

  const TilingPatch tri = build_lattice_patch(Prototype::Triangle, 30.0);
  const AverageSeries tri_sides = window_average(tri, M, StatKind::Sides, 0.0, {30.0});
  CHECK(tri_sides.values[0] == doctest::Approx(3.0));
  const AverageSeries tri_p2 = window_average(tri, M, StatKind::PoweredPerimeter, 2.0, {30.0});
  CHECK(tri_p2.values[0] == doctest::Approx(12.0 * std::sqrt(3.0)).epsilon(1e-6));

  const TilingPatch hex = build_lattice_patch(Prototype::Hexagon, 30.0);
  const AverageSeries hex_sides = window_average(hex, M, StatKind::Sides, 0.0, {30.0});
  CHECK(hex_sides.values[0] == doctest::Approx(6.0));
}

TEST_CASE("hex tiling of the Euclidean norm attains the honeycomb bound") {
  const NormDisk M = euclid();
  const double bound = honeycomb_bound(M, 1.0);
  CHECK(bound == doctest::Approx(8.0 * std::sqrt(3.0)).epsilon(1e-4));
  const TilingPatch hex = build_hex_tiling(M, 30.0);
  for (const ConvexPolygon& cell : hex.cells)
    CHECK(area(cell) == doctest::Approx(1.0).epsilon(1e-9));
  const AverageSeries p2 = window_average(hex, M, StatKind::PoweredPerimeter, 2.0, {30.0});
  CHECK(p2.values[0] == doctest::Approx(bound).epsilon(1e-4));
  // For the Euclidean norm the optimal cells are regular hexagons, up to the
  // angular quantization of the 4096-gon disk approximation (~2e-3).
  CHECK(is_regular(hex.cells.front(), Tolerance{1e-2, 1e-2}));
}

TEST_CASE("hex tiling of the max norm tiles by diamonds and attains its bound") {
  const NormDisk M = square_norm();
  const double bound = honeycomb_bound(M, 1.0);
  CHECK(bound == doctest::Approx(8.0).epsilon(1e-9));  // 4 * area of minimal hexagon = 4 * 2
  const TilingPatch patch = build_hex_tiling(M, 25.0);
  REQUIRE(!patch.cells.empty());
  CHECK(patch.cells.front().size() == 4);  // isoperimetrix is a 4-gon here
  const AverageSeries p2 = window_average(patch, M, StatKind::PoweredPerimeter, 2.0, {25.0});
  CHECK(p2.values[0] == doctest::Approx(bound).epsilon(1e-9));
}

TEST_CASE("custom prototypes that do not tile are rejected") {
  const ConvexPolygon unit = canonicalize({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  CHECK_THROWS_AS(build_custom_lattice_patch(unit, {3, 0}, {0, 3}, false, 10.0), Error);
  const ConvexPolygon penta = regular_gon(5);
  CHECK_THROWS_AS(build_custom_lattice_patch(penta, {2, 0}, {0, 2}, false, 10.0), Error);
}

TEST_CASE("window averages reject empty windows and bad stats input") {
  const TilingPatch sq = build_lattice_patch(Prototype::Square, 10.0);
  CHECK_THROWS_AS(window_average(sq, euclid(), StatKind::Sides, 0.0, {0.3}), Error);
  const AverageSeries one = window_average(sq, euclid(), StatKind::Sides, 0.0, {0.8});
  CHECK(one.cell_counts[0] == 1);  // only the origin cell fits
  CHECK(one.values[0] == doctest::Approx(4.0));
}

TEST_CASE("jittered voronoi patches stay hexagonal on average") {
  const TilingPatch patch = build_jittered_voronoi_patch(16.0, 0.3, 42);
  REQUIRE(static_cast<int>(patch.cells.size()) > 200);
  const AverageSeries sides = window_average(patch, euclid(), StatKind::Sides, 0.0, {16.0});
  CHECK(sides.values[0] == doctest::Approx(6.0).epsilon(0.02));
  CHECK_THROWS_AS(build_jittered_voronoi_patch(16.0, 0.6, 42), Error);

  // Zero jitter gives the regular hexagonal Voronoi diagram.
  const TilingPatch flat = build_jittered_voronoi_patch(10.0, 0.0, 1);
  for (const ConvexPolygon& cell : flat.cells) CHECK(cell.size() == 6);
}

TEST_CASE("voronoi construction is deterministic in the seed") {
  const TilingPatch a = build_jittered_voronoi_patch(8.0, 0.25, 9);
  const TilingPatch b = build_jittered_voronoi_patch(8.0, 0.25, 9);
  REQUIRE(a.cells.size() == b.cells.size());
  for (size_t i = 0; i < a.cells.size(); ++i)
    CHECK(hausdorff_distance(a.cells[i], b.cells[i]) == doctest::Approx(0.0));
  const TilingPatch c = build_jittered_voronoi_patch(8.0, 0.25, 10);
  double moved = 0.0;
  for (size_t i = 0; i < std::min(a.cells.size(), c.cells.size()); ++i)
    moved += hausdorff_distance(a.cells[i], c.cells[i]);
  CHECK(moved > 1e-3);  // different seed, different jitter
}

TEST_CASE("patches cover the window without overlap") {
  std::mt19937_64 rng(55);
  std::uniform_real_distribution<double> coord(-5.0, 5.0);
  for (const TilingPatch& patch : {build_lattice_patch(Prototype::Triangle, 10.0),
                                   build_jittered_voronoi_patch(10.0, 0.2, 3)}) {
    for (int trial = 0; trial < 200; ++trial) {
      const Point2 p{coord(rng), coord(rng)};
      int strict = 0, weak = 0;
      for (const ConvexPolygon& cell : patch.cells) {
        if (contains(cell, p, -1e-9)) ++strict;
        if (contains(cell, p, 1e-9)) ++weak;
      }
      CHECK(strict <= 1);
      CHECK(weak >= 1);
    }
  }
}

TEST_CASE("chakerian identity cases") {
  const NormDisk M = euclid();
  const ConvexPolygon sq = canonicalize({{1, 1}, {-1, 1}, {-1, -1}, {1, -1}});
  const ChakerianTerms eq = chakerian_gap(M, sq);
  CHECK(eq.mixed_perimeter == doctest::Approx(8.0).epsilon(1e-6));
  CHECK(eq.cell_area == doctest::Approx(4.0));
  CHECK(eq.dual_area == doctest::Approx(4.0).epsilon(1e-6));
  CHECK(std::fabs(eq.gap) < 1e-4 * 64.0);

  const ConvexPolygon rect = canonicalize({{1, 0.5}, {-1, 0.5}, {-1, -0.5}, {1, -0.5}});
  const ChakerianTerms pos = chakerian_gap(M, rect);
  CHECK(pos.mixed_perimeter == doctest::Approx(6.0).epsilon(1e-6));
  CHECK(pos.cell_area == doctest::Approx(2.0));
  CHECK(pos.dual_area == doctest::Approx(4.0).epsilon(1e-6));
  CHECK(pos.gap == doctest::Approx(4.0).epsilon(1e-4));
}

TEST_CASE("chakerian gap is nonnegative on random pairs") {
  std::mt19937_64 rng(56);
  for (int trial = 0; trial < 60; ++trial) {
    const NormDisk M(testsupport::random_symmetric_polygon(rng, 7), {}, "rand");
    const ConvexPolygon K = testsupport::random_convex_polygon(rng, 9);
    const ChakerianTerms t = chakerian_gap(M, K);
    CHECK(t.gap >= -1e-9 * t.mixed_perimeter * t.mixed_perimeter);
  }
}

TEST_CASE("normality constants on reference patches") {
  const TilingPatch sq = build_lattice_patch(Prototype::Square, 8.0);
  const NormalityConstants nc = normality_constants(sq);
  CHECK(nc.min_inradius == doctest::Approx(0.5));
  CHECK(nc.max_circumradius == doctest::Approx(std::sqrt(2.0) / 2.0));
  CHECK(nc.neighbor_bound == doctest::Approx(17.0));
  CHECK(nc.max_neighbors == 8);  // 4 edge + 4 corner neighbors
  CHECK(nc.max_neighbors <= nc.neighbor_bound);

  const TilingPatch hex = build_hex_tiling(euclid(), 8.0);
  CHECK(normality_constants(hex).max_neighbors == 6);

  TilingPatch single;
  single.cells.push_back(canonicalize({{0, 0}, {1, 0}, {1, 1}, {0, 1}}));
  single.window_radius = 2.0;
  CHECK(normality_constants(single).max_neighbors == 0);

  const TilingPatch vor = build_jittered_voronoi_patch(10.0, 0.3, 4);
  const NormalityConstants vn = normality_constants(vor);
  CHECK(vn.max_neighbors <= vn.neighbor_bound);
}

TEST_CASE("boundary cell counts grow linearly") {
  const TilingPatch sq = build_lattice_patch(Prototype::Square, 25.0);
  const int at5 = boundary_cell_count(sq, 5.0), at10 = boundary_cell_count(sq, 10.0);
  const double ratio = static_cast<double>(at10) / at5;
  CHECK(ratio >= 1.5);
  CHECK(ratio <= 2.5);
  CHECK(boundary_cell_count(sq, 0.2) >= 1);
  const TilingPatch hex = build_hex_tiling(euclid(), 25.0);
  const double per_r = static_cast<double>(boundary_cell_count(hex, 20.0)) / 20.0;
  CHECK(per_r > 2.0);
  CHECK(per_r < 12.0);
}

TEST_CASE("squares-only construction milestones") {
  const SteinhausRun aa = steinhaus_run("AA");
  CHECK(static_cast<int>(aa.patch.cells.size()) == 9);
  double total = 0.0;
  for (const ConvexPolygon& cell : aa.patch.cells) total += area(cell);
  CHECK(total == doctest::Approx(18.0 * 18.0));  // union is the side-18 square

  const SteinhausRun run = steinhaus_run("AAB");
  REQUIRE(run.milestones.size() == 1);
  CHECK(run.milestones[0].radius == doctest::Approx(9.5));
  CHECK(run.milestones[0].cells == 9);
  CHECK(run.milestones[0].average == doctest::Approx(76.0 / 9.0).epsilon(1e-12));
  CHECK(static_cast<int>(run.patch.cells.size()) == 9 + 4 * 9 + 4);

  const AverageSeries replay =
      window_average_square(run.patch, euclid(), StatKind::Sides, 0.0, {9.5});
  CHECK(replay.values[0] == doctest::Approx(76.0 / 9.0).epsilon(1e-12));

  CHECK_THROWS_AS(steinhaus_run("AXB"), Error);
}

TEST_CASE("square window averages on plain lattices") {
  const TilingPatch sq = build_lattice_patch(Prototype::Square, 20.0);
  const AverageSeries s = window_average_square(sq, euclid(), StatKind::Sides, 0.0, {5.5, 10.5});
  for (double v : s.values) CHECK(v == doctest::Approx(4.0));
}

TEST_CASE("greedy schedule keeps every milestone above the target") {
  const SteinhausRun run = steinhaus_greedy(8.0, 3);
  REQUIRE(static_cast<int>(run.milestones.size()) == 3);
  for (const SteinhausMilestone& ms : run.milestones) CHECK(ms.average > 8.0);
  CHECK(run.schedule.find('B') != std::string::npos);
}
