#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "honeylab/errors.hpp"

namespace honeylab {

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

inline Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
inline Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
inline Point2 operator-(Point2 a) { return {-a.x, -a.y}; }
inline Point2 operator*(double s, Point2 a) { return {s * a.x, s * a.y}; }
inline Point2 operator*(Point2 a, double s) { return {s * a.x, s * a.y}; }

inline double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point2 a) { return std::hypot(a.x, a.y); }
inline double norm_sq(Point2 a) { return a.x * a.x + a.y * a.y; }
inline double dist(Point2 a, Point2 b) { return norm(a - b); }

// Counterclockwise rotation about the origin.
inline Point2 rotated(Point2 p, double angle) {
  const double c = std::cos(angle), s = std::sin(angle);
  return {c * p.x - s * p.y, s * p.x + c * p.y};
}

// Left-hand normal of a direction vector (rotation by +pi/2).
inline Point2 perp(Point2 p) { return {-p.y, p.x}; }

// Relative/absolute tolerance pair used across the library.  Comparisons use
// |a - b| <= max(abs, rel * max(|a|, |b|)).
struct Tolerance {
  double rel = 1e-9;
  double abs = 1e-12;

  bool close(double a, double b) const {
    return std::fabs(a - b) <= std::fmax(abs, rel * std::fmax(std::fabs(a), std::fabs(b)));
  }
};

// Convex polygon in canonical form: vertices are counterclockwise, strictly
// convex (no repeated or collinear triples), starting at the lexicographically
// smallest vertex (smallest x, then smallest y).
struct ConvexPolygon {
  std::vector<Point2> vertices;

  int size() const { return static_cast<int>(vertices.size()); }
  // Cyclic accessors; i may be any integer-ish index in [-size, 2*size).
  Point2 vertex(int i) const {
    const int m = size();
    return vertices[static_cast<size_t>(((i % m) + m) % m)];
  }
  Point2 edge_vector(int i) const { return vertex(i + 1) - vertex(i); }
  // Outward unit normal of edge i (from vertex i to vertex i+1).
  Point2 edge_normal(int i) const {
    Point2 e = edge_vector(i);
    const double len = norm(e);
    return {e.y / len, -e.x / len};
  }
};

// Convex hull + cleanup of an arbitrary point set.  Throws DegenerateInput if
// fewer than three non-collinear points survive at the given tolerance.
ConvexPolygon canonicalize(const std::vector<Point2>& points, Tolerance tol = {});

// Restores the canonical start/orientation of an already-convex vertex list.
ConvexPolygon recanonicalize(const ConvexPolygon& poly, Tolerance tol = {});

double area(const ConvexPolygon& poly);
double perimeter(const ConvexPolygon& poly);
Point2 centroid(const ConvexPolygon& poly);

ConvexPolygon translate(const ConvexPolygon& poly, Point2 shift);
ConvexPolygon scale(const ConvexPolygon& poly, double factor);
ConvexPolygon rotate(const ConvexPolygon& poly, double angle);
ConvexPolygon point_reflect(const ConvexPolygon& poly, Point2 center);

// Support function h(P, u) = max_{v in P} <v, u>.  Throws ZeroDirection.
double support_function(const ConvexPolygon& poly, Point2 direction);

// Polar dual {u : <u, v> <= 1 for all v in P}.  Requires the origin strictly
// inside; vertices of the dual correspond to edges of P.
ConvexPolygon polar_dual(const ConvexPolygon& poly, Tolerance tol = {});

bool contains(const ConvexPolygon& poly, Point2 p, double eps = 1e-12);

// Euclidean distance from p to the polygon (0 when p lies inside).
double distance_to(const ConvexPolygon& poly, Point2 p);

// Exact for convex polygons: attained at a vertex of one body against the
// other.  A support-grid sample is mixed in as a cheap lower-bound cross-check.
double hausdorff_distance(const ConvexPolygon& a, const ConvexPolygon& b);

// Radius of the largest inscribed circle (Chebyshev radius), via a small
// linear program over the edge half-planes.
double inradius(const ConvexPolygon& poly);

// Radius of the smallest enclosing circle (Welzl's algorithm).
double circumradius(const ConvexPolygon& poly);

// Smallest width over all directions; attained at an edge normal.
double min_width(const ConvexPolygon& poly);

// True when all edge lengths and all turning angles agree within tol, i.e.
// the polygon is regular (possibly rotated/scaled).
bool is_regular(const ConvexPolygon& poly, Tolerance tol = {});

// True when the polygon equals its own point reflection through the origin.
bool is_origin_symmetric(const ConvexPolygon& poly, Tolerance tol = {});

// Regular m-gon with given inradius (circumscribed about the circle of that
// radius), first edge normal pointing along +x rotated by `phase`.
ConvexPolygon regular_gon(int sides, double in_radius = 1.0, double phase = 0.0);

// Regular m-gon approximation of the unit circle (vertices on the circle).
ConvexPolygon disk_approximation(int sides = 4096);

// Axis-aligned ellipse sampled at `sides` boundary points.
ConvexPolygon ellipse_approximation(double semi_x, double semi_y, int sides = 4096);

}  // namespace honeylab
