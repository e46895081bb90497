#pragma once

// Internal helpers shared by inradius and the Voronoi patch builder; not part
// of the installed API.

#include <vector>

#include "honeylab/geometry.hpp"

namespace honeylab::detail {

// Closed half-plane {x : <normal, x> <= offset}.  The normal need not be unit
// length for clipping, but the deque intersection below expects unit normals.
struct HalfPlane {
  Point2 normal;
  double offset = 0.0;
};

// Clips a convex polygon (vertex loop) by one half-plane; may return fewer
// than three vertices when the intersection degenerates.
std::vector<Point2> clip_by_halfplane(const std::vector<Point2>& poly, const HalfPlane& h,
                                      double eps = 1e-12);

// Intersection of half-planes via the sorted deque sweep.  Returns the vertex
// loop of the (bounded) intersection, or an empty vector when the interior is
// empty.  Callers must ensure boundedness (normals spanning all directions or
// explicit box constraints).
std::vector<Point2> intersect_halfplanes(std::vector<HalfPlane> planes, double eps = 1e-12);

}  // namespace honeylab::detail
