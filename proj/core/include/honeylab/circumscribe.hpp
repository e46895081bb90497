#pragma once

#include <string>
#include <vector>

#include "honeylab/geometry.hpp"

namespace honeylab {

// Minimum-area convex n-gon circumscribed about a convex polygon K.
//
// flush_edges[i] is the edge index of K contained in side i of the returned
// polygon, or -1 for a side that only touches K at a vertex ("slack" side).
// At most one side is slack (none when n >= number of edges of K).
struct CircumscribeResult {
  ConvexPolygon polygon;
  double min_area = 0.0;
  std::vector<int> flush_edges;
  bool slack_side_used = false;
};

// Exact solver.  n >= 3; for n >= edge count it returns K itself.
CircumscribeResult min_area_circumscribed(const ConvexPolygon& K, int n, Tolerance tol = {});

// Restriction to origin-symmetric circumscribed polygons (n even, K origin
// symmetric).  For even n this matches the unrestricted minimum.
CircumscribeResult min_area_symmetric_circumscribed(const ConvexPolygon& K, int n,
                                                    Tolerance tol = {});

// values[n - n_min] = minimum circumscribed n-gon area; constant and equal to
// disk_area once n reaches the edge count of the source polygon.
struct DowkerTable {
  std::string disk_id;
  int n_min = 3;
  int n_max = 0;
  std::vector<double> values;
  double disk_area = 0.0;
  Tolerance tol;

  bool covers(int n) const { return n >= n_min && n <= n_max; }
  double value(int n) const;
};

DowkerTable dowker_table(const ConvexPolygon& K, int n_max, Tolerance tol = {},
                         const std::string& disk_id = "");

// Closed-form reference value for the regular 2k-gon circumscribed about the
// unit circle (independent oracle for the geometric solver).
double regular_gon_reference_area(int k, int n);

// Closed-form circumscribed n-gon area for the Euclidean unit disk.
double disk_reference_area(int n);

}  // namespace honeylab
