#include "honeylab/norm_disk.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace honeylab {

NormDisk::NormDisk(const ConvexPolygon& disk, Tolerance tol, std::string id)
    : id_(std::move(id)), tol_(tol) {
  disk_ = canonicalize(disk.vertices, tol);
  const int m = disk_.size();
  if (m % 2 != 0)
    fail(ErrorCode::DegenerateInput, "norm disk must be origin-symmetric (odd vertex count)");
  // Point reflection maps the vertex cycle onto itself shifted by m/2, so the
  // antipode of vertex i must be vertex i + m/2.  Average the pairs to strip
  // input noise, then rebuild.
  std::vector<Point2> sym(static_cast<size_t>(m));
  double scale = 0.0;
  for (const Point2& v : disk_.vertices) scale = std::fmax(scale, norm(v));
  for (int i = 0; i < m / 2; ++i) {
    const Point2 v = disk_.vertex(i), w = disk_.vertex(i + m / 2);
    if (norm(v + w) > std::fmax(tol.abs, 1e4 * tol.rel * scale))
      fail(ErrorCode::DegenerateInput, "norm disk must be origin-symmetric");
    const Point2 h = 0.5 * (v - w);
    sym[static_cast<size_t>(i)] = h;
    sym[static_cast<size_t>(i + m / 2)] = -h;
  }
  disk_ = canonicalize(sym, tol);

  const int ms = disk_.size();
  normal_.resize(static_cast<size_t>(ms));
  offset_.resize(static_cast<size_t>(ms));
  for (int i = 0; i < ms; ++i) {
    const Point2 n = disk_.edge_normal(i);
    const double c = dot(n, disk_.vertex(i));
    if (!(c > 0.0))
      fail(ErrorCode::OriginNotInterior, "origin must be strictly inside the norm disk");
    normal_[static_cast<size_t>(i)] = n;
    offset_[static_cast<size_t>(i)] = c;
  }
  // Vertex angles re-based so the lookup array is strictly increasing; the
  // original index is wrap_ + position (mod m).
  vertex_angle_.resize(static_cast<size_t>(ms));
  std::vector<double> raw(static_cast<size_t>(ms));
  for (int i = 0; i < ms; ++i) {
    const Point2 v = disk_.vertex(i);
    raw[static_cast<size_t>(i)] = std::atan2(v.y, v.x);
  }
  wrap_ = 0;
  for (int i = 1; i < ms; ++i)
    if (raw[static_cast<size_t>(i)] < raw[static_cast<size_t>(i - 1)]) {
      wrap_ = i;
      break;
    }
  for (int pos = 0; pos < ms; ++pos)
    vertex_angle_[static_cast<size_t>(pos)] = raw[static_cast<size_t>((wrap_ + pos) % ms)];
  area_ = honeylab::area(disk_);
}

int NormDisk::sector_of(Point2 p) const {
  // Index i such that p's direction falls in the cone of edge (v_i, v_{i+1}).
  const int m = disk_.size();
  const double phi = std::atan2(p.y, p.x);
  if (phi < vertex_angle_[0]) return (wrap_ + m - 1) % m;
  const auto it = std::upper_bound(vertex_angle_.begin(), vertex_angle_.end(), phi);
  const int pos = static_cast<int>(it - vertex_angle_.begin()) - 1;
  return (wrap_ + pos) % m;
}

double NormDisk::gauge(Point2 p) const {
  if (p.x == 0.0 && p.y == 0.0) return 0.0;
  const int m = disk_.size();
  const int s = sector_of(p);
  double best = 0.0;
  // The sector formula can land one edge off at angle ties; checking the two
  // neighbours keeps the max exact (the gauge is max_i <n_i, p>/c_i).
  for (int d = -1; d <= 1; ++d) {
    const int i = ((s + d) % m + m) % m;
    best = std::fmax(best, dot(normal_[static_cast<size_t>(i)], p) / offset_[static_cast<size_t>(i)]);
  }
  return best;
}

double gauge_norm(const NormDisk& M, Point2 p) { return M.gauge(p); }

double m_perimeter(const NormDisk& M, const ConvexPolygon& K) {
  double total = 0.0;
  const int m = K.size();
  for (int i = 0; i < m; ++i) total += M.gauge(K.edge_vector(i));
  return total;
}

NormDisk isoperimetrix(const NormDisk& M, Tolerance tol) {
  const ConvexPolygon dual = polar_dual(M.polygon(), tol);
  const ConvexPolygon rotated = rotate(dual, std::numbers::pi / 2.0);
  std::string id = M.id().empty() ? std::string() : M.id() + ":iso";
  return NormDisk(rotated, tol, id);
}

}  // namespace honeylab
