#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "honeylab/norm_disk.hpp"

namespace honeylab {

// A finite patch of a tiling: explicit convex cells plus the generation
// window.  Cells are stored in full; window selection happens at query time.
struct TilingPatch {
  std::vector<ConvexPolygon> cells;
  double window_radius = 0.0;
  std::string source;
};

enum class Prototype { Square, Triangle, Hexagon, Custom };

// Lattice tiling by translates of the minimum-area origin-symmetric hexagon
// circumscribed about the isoperimetrix of M, rescaled to unit cell area.
// Lattice vectors are a1+a2 and a2+a3 for consecutive edge vectors a_i.
TilingPatch build_hex_tiling(const NormDisk& M, double R, Tolerance tol = {});

// Unit-area cell lattices for the standard prototypes, or a custom prototype
// cell repeated along two lattice vectors (with optional point reflection for
// odd copies, as needed for triangles).  Coverage is spot-checked; failures
// raise NonTilingPrototype.
TilingPatch build_lattice_patch(Prototype proto, double R, Tolerance tol = {});
TilingPatch build_custom_lattice_patch(const ConvexPolygon& cell, Point2 v1, Point2 v2,
                                       bool reflect_odd, double R, Tolerance tol = {});

// Voronoi cells of a hexagonal point lattice jittered by `jitter` times the
// site spacing (deterministic per-site hashing from `seed`).
TilingPatch build_jittered_voronoi_patch(double R, double jitter, std::uint64_t seed,
                                         Tolerance tol = {});

enum class StatKind {
  PoweredPerimeter,    // mean of perimeter^alpha (alpha = 2 gives the honeycomb statistic)
  LogPerimeter,        // mean of log(perimeter)
  Sides,               // mean side count, with split-segment convention
  IsoperimetricRatio,  // mean of perimeter^2 / area
};

struct AverageSeries {
  StatKind kind = StatKind::PoweredPerimeter;
  double alpha = 2.0;
  std::vector<double> radii;
  std::vector<double> values;
  std::vector<int> cell_counts;
};

// Averages the statistic over cells whose vertices all lie in the closed disk
// of radius R (for each R in radii).  Perimeters are measured in the norm M.
// Throws EmptyWindow if no cell qualifies at some radius.
AverageSeries window_average(const TilingPatch& patch, const NormDisk& M, StatKind kind,
                             double alpha, const std::vector<double>& radii);

// Same, but the window is the square [-R, R]^2 (used by the squares-only
// construction below).
AverageSeries window_average_square(const TilingPatch& patch, const NormDisk& M, StatKind kind,
                                    double alpha, const std::vector<double>& radii);

// Certified lower bound 4^alpha * A(6)^alpha for the average of
// perimeter^(2 alpha) over admissible tilings (log form at alpha = 0), where
// A(6) is the minimum hexagon area about the isoperimetrix of M.
double honeycomb_bound(const NormDisk& M, double alpha, Tolerance tol = {});

// Sharpened isoperimetric terms for one cell: L = M-perimeter of K, F = area
// of K, dual_area = area of the polygon circumscribed about the isoperimetrix
// with K's outer normals.  gap = L^2 - 4 * dual_area * F >= 0, with equality
// iff K is homothetic to that circumscribed polygon.
struct ChakerianTerms {
  double mixed_perimeter = 0.0;
  double cell_area = 0.0;
  double dual_area = 0.0;
  double gap = 0.0;
};

ChakerianTerms chakerian_gap(const NormDisk& M, const ConvexPolygon& K, Tolerance tol = {});

// Patch-wide normality data: cell in/circumradius extremes, the resulting
// neighbor-count bound 9*Rhat^2/rhat^2 - 1, and the observed maximum number
// of neighbors (cells sharing at least a boundary point).
struct NormalityConstants {
  double min_inradius = 0.0;
  double max_circumradius = 0.0;
  double neighbor_bound = 0.0;
  int max_neighbors = 0;
};

NormalityConstants normality_constants(const TilingPatch& patch);

// Number of cells whose closure meets the circle of radius R.
int boundary_cell_count(const TilingPatch& patch, double R);

// Side count of one cell under the split-segment convention: boundary
// segments are split at every vertex of every other cell lying on them.
int side_count(const TilingPatch& patch, int cell_index, Tolerance tol = {});

// Squares-only construction with unbounded side averages.  Schedule letters:
//   A: wrap the current square union N*S in four congruent rectangles
//      (pinwheel), tripling N;
//   B: wrap it in a ring of 4N+4 unit squares, raising N by 2.
// Milestones are recorded at each B step: the side-count average over cells
// inside the square window of half-width N_before_B + 1/2.
struct SteinhausMilestone {
  int schedule_index = 0;  // position of the B step in the schedule
  double radius = 0.0;
  double average = 0.0;
  int cells = 0;
};

struct SteinhausRun {
  TilingPatch patch;
  std::string schedule;
  std::vector<SteinhausMilestone> milestones;
};

SteinhausRun steinhaus_run(const std::string& schedule);

// Greedy schedule: repeat A until a B step would push the milestone average
// above nu, then take the B step; stop after `milestones` milestones.
SteinhausRun steinhaus_greedy(double nu, int milestones);

}  // namespace honeylab
