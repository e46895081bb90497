#pragma once

#include <string>
#include <vector>

#include "honeylab/geometry.hpp"

namespace honeylab {

// Unit disk of a polygonal norm: an origin-symmetric convex polygon together
// with precomputed edge half-plane data, so gauge evaluations are O(log m).
//
// Construction canonicalizes the polygon, verifies the origin is strictly
// interior and that vertices pair up antipodally, then symmetrizes each pair
// (v_i, v_{i+m/2}) -> +/-(v_i - v_{i+m/2})/2 to remove input noise.
class NormDisk {
 public:
  explicit NormDisk(const ConvexPolygon& disk, Tolerance tol = {}, std::string id = "");

  const ConvexPolygon& polygon() const { return disk_; }
  const std::string& id() const { return id_; }
  Tolerance tolerance() const { return tol_; }
  int sides() const { return disk_.size(); }

  // gauge(p) = inf {lambda > 0 : p in lambda * disk}; 0 at the origin.
  double gauge(Point2 p) const;

  double area() const { return area_; }

 private:
  ConvexPolygon disk_;
  std::string id_;
  Tolerance tol_;
  double area_ = 0.0;
  // Edge half-planes: disk = {x : <normal_[i], x> <= offset_[i]}, offset_ > 0.
  std::vector<Point2> normal_;
  std::vector<double> offset_;
  // Vertex angles (strictly increasing after re-basing at wrap_) for sector lookup.
  std::vector<double> vertex_angle_;
  int wrap_ = 0;
  int sector_of(Point2 p) const;
};

double gauge_norm(const NormDisk& M, Point2 p);

// Perimeter of K measured in the norm with unit disk M (sum of gauge lengths
// of the edges of K).
double m_perimeter(const NormDisk& M, const ConvexPolygon& K);

// The isoperimetrix: polar dual rotated by +pi/2.  For origin-symmetric disks
// the rotate/polar order does not matter; this library fixes rotate(polar(M)).
NormDisk isoperimetrix(const NormDisk& M, Tolerance tol = {});

}  // namespace honeylab
