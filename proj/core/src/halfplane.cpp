#include "halfplane.hpp"

#include <algorithm>
#include <cmath>
#include <deque>

namespace honeylab::detail {

namespace {

// Intersection point of the boundary lines of two half-planes.
bool line_intersect(const HalfPlane& a, const HalfPlane& b, Point2* out) {
  const double det = cross(a.normal, b.normal);
  if (std::fabs(det) < 1e-15) return false;
  out->x = (a.offset * b.normal.y - b.offset * a.normal.y) / det;
  out->y = (a.normal.x * b.offset - b.normal.x * a.offset) / det;
  return true;
}

bool violates(const HalfPlane& h, Point2 p, double eps) {
  return dot(h.normal, p) > h.offset + eps;
}

}  // namespace

std::vector<Point2> clip_by_halfplane(const std::vector<Point2>& poly, const HalfPlane& h,
                                      double eps) {
  std::vector<Point2> out;
  const int n = static_cast<int>(poly.size());
  out.reserve(poly.size() + 1);
  for (int i = 0; i < n; ++i) {
    const Point2 cur = poly[static_cast<size_t>(i)];
    const Point2 nxt = poly[static_cast<size_t>((i + 1) % n)];
    const double dc = dot(h.normal, cur) - h.offset;
    const double dn = dot(h.normal, nxt) - h.offset;
    if (dc <= eps) out.push_back(cur);
    if ((dc < -eps && dn > eps) || (dc > eps && dn < -eps)) {
      const double t = dc / (dc - dn);
      out.push_back(cur + t * (nxt - cur));
    }
  }
  return out;
}

std::vector<Point2> intersect_halfplanes(std::vector<HalfPlane> planes, double eps) {
  // Sort by normal angle; among parallel planes keep the most restrictive.
  auto angle = [](const HalfPlane& h) { return std::atan2(h.normal.y, h.normal.x); };
  std::sort(planes.begin(), planes.end(), [&](const HalfPlane& a, const HalfPlane& b) {
    const double aa = angle(a), ab = angle(b);
    if (std::fabs(aa - ab) > 1e-14) return aa < ab;
    return a.offset < b.offset;
  });
  std::vector<HalfPlane> uniq;
  for (const HalfPlane& h : planes) {
    if (!uniq.empty() && std::fabs(angle(uniq.back()) - angle(h)) <= 1e-14) continue;
    uniq.push_back(h);
  }
  if (uniq.size() < 3) return {};

  std::deque<HalfPlane> dq;
  std::deque<Point2> pts;  // pts[i] = intersection of dq[i] and dq[i+1]
  for (const HalfPlane& h : uniq) {
    while (!pts.empty() && violates(h, pts.back(), eps)) {
      dq.pop_back();
      pts.pop_back();
    }
    while (!pts.empty() && violates(h, pts.front(), eps)) {
      dq.pop_front();
      pts.pop_front();
    }
    if (!dq.empty()) {
      Point2 p;
      if (!line_intersect(dq.back(), h, &p)) {
        // Antiparallel normals with no overlap means an empty strip.
        if (dot(dq.back().normal, h.normal) < 0) return {};
        continue;
      }
      pts.push_back(p);
    }
    dq.push_back(h);
  }
  // Close the loop: trim entries cut off by the wrap-around constraint.
  while (pts.size() >= 1 && violates(dq.front(), pts.back(), eps)) {
    dq.pop_back();
    pts.pop_back();
  }
  while (pts.size() >= 1 && violates(dq.back(), pts.front(), eps)) {
    dq.pop_front();
    pts.pop_front();
  }
  if (dq.size() < 3) return {};
  Point2 wrap;
  if (!line_intersect(dq.back(), dq.front(), &wrap)) return {};
  std::vector<Point2> loop(pts.begin(), pts.end());
  loop.push_back(wrap);
  // Reject slivers with no interior.
  double a2 = 0.0;
  for (size_t i = 0; i + 1 < loop.size(); ++i)
    a2 += cross(loop[i] - loop[0], loop[i + 1] - loop[0]);
  if (a2 <= eps) return {};
  return loop;
}

}  // namespace honeylab::detail
