#include "honeylab/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "halfplane.hpp"

namespace honeylab {

namespace {

constexpr double kPi = std::numbers::pi;

bool lex_less(Point2 a, Point2 b) {
  if (a.x != b.x) return a.x < b.x;
  return a.y < b.y;
}

// Collinearity threshold for three consecutive hull points, scaled by the
// adjacent segment lengths so it is invariant under uniform scaling.
double turn_eps(Point2 a, Point2 b, Point2 c, Tolerance tol) {
  return std::fmax(tol.abs, tol.rel * dist(a, b) * dist(b, c));
}

}  // namespace

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DegenerateInput: return "DegenerateInput";
    case ErrorCode::OriginNotInterior: return "OriginNotInterior";
    case ErrorCode::ZeroDirection: return "ZeroDirection";
    case ErrorCode::InvalidN: return "InvalidN";
    case ErrorCode::OddN: return "OddN";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::InsufficientTable: return "InsufficientTable";
    case ErrorCode::EmptyWindow: return "EmptyWindow";
    case ErrorCode::NonTilingPrototype: return "NonTilingPrototype";
    case ErrorCode::UnboundedKStar: return "UnboundedKStar";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
  }
  return "UnknownError";
}

void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

ConvexPolygon canonicalize(const std::vector<Point2>& points, Tolerance tol) {
  if (points.size() < 3) fail(ErrorCode::DegenerateInput, "need at least 3 points");
  std::vector<Point2> pts = points;
  std::sort(pts.begin(), pts.end(), lex_less);
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [&](Point2 a, Point2 b) {
                          return dist(a, b) <= std::fmax(tol.abs, tol.rel * norm(a));
                        }),
            pts.end());
  if (pts.size() < 3) fail(ErrorCode::DegenerateInput, "fewer than 3 distinct points");

  // Andrew's monotone chain, dropping collinear points at tolerance.
  auto build = [&](bool upper) {
    std::vector<Point2> chain;
    for (size_t idx = 0; idx < pts.size(); ++idx) {
      Point2 p = pts[upper ? pts.size() - 1 - idx : idx];
      while (chain.size() >= 2) {
        Point2 a = chain[chain.size() - 2], b = chain.back();
        if (cross(b - a, p - b) > turn_eps(a, b, p, tol)) break;
        chain.pop_back();
      }
      chain.push_back(p);
    }
    return chain;
  };
  std::vector<Point2> lower = build(false), upper = build(true);
  std::vector<Point2> hull(lower.begin(), lower.end() - 1);
  hull.insert(hull.end(), upper.begin(), upper.end() - 1);
  if (hull.size() < 3) fail(ErrorCode::DegenerateInput, "points are collinear at tolerance");

  // The seam vertices can leave near-collinear triples; sweep until stable.
  bool changed = true;
  while (changed && hull.size() > 3) {
    changed = false;
    for (size_t i = 0; i < hull.size() && hull.size() > 3; ++i) {
      Point2 a = hull[(i + hull.size() - 1) % hull.size()];
      Point2 b = hull[i];
      Point2 c = hull[(i + 1) % hull.size()];
      if (cross(b - a, c - b) <= turn_eps(a, b, c, tol)) {
        hull.erase(hull.begin() + static_cast<long>(i));
        changed = true;
        break;
      }
    }
  }

  ConvexPolygon poly{std::move(hull)};
  return recanonicalize(poly, tol);
}

ConvexPolygon recanonicalize(const ConvexPolygon& poly, Tolerance) {
  if (poly.size() < 3) fail(ErrorCode::DegenerateInput, "polygon with fewer than 3 vertices");
  std::vector<Point2> v = poly.vertices;
  double a2 = 0.0;
  for (size_t i = 0; i < v.size(); ++i) a2 += cross(v[i], v[(i + 1) % v.size()]);
  if (a2 < 0) std::reverse(v.begin(), v.end());
  size_t start = 0;
  for (size_t i = 1; i < v.size(); ++i)
    if (lex_less(v[i], v[start])) start = i;
  std::rotate(v.begin(), v.begin() + static_cast<long>(start), v.end());
  return ConvexPolygon{std::move(v)};
}

double area(const ConvexPolygon& poly) {
  double a2 = 0.0;
  const auto& v = poly.vertices;
  for (size_t i = 0; i < v.size(); ++i) a2 += cross(v[i], v[(i + 1) % v.size()]);
  return 0.5 * a2;
}

double perimeter(const ConvexPolygon& poly) {
  double p = 0.0;
  const auto& v = poly.vertices;
  for (size_t i = 0; i < v.size(); ++i) p += dist(v[i], v[(i + 1) % v.size()]);
  return p;
}

Point2 centroid(const ConvexPolygon& poly) {
  const auto& v = poly.vertices;
  double a2 = 0.0;
  Point2 c{0.0, 0.0};
  for (size_t i = 0; i < v.size(); ++i) {
    const double w = cross(v[i], v[(i + 1) % v.size()]);
    a2 += w;
    c = c + w * (v[i] + v[(i + 1) % v.size()]);
  }
  return (1.0 / (3.0 * a2)) * c;
}

ConvexPolygon translate(const ConvexPolygon& poly, Point2 shift) {
  ConvexPolygon out = poly;
  for (Point2& p : out.vertices) p = p + shift;
  return out;
}

ConvexPolygon scale(const ConvexPolygon& poly, double factor) {
  if (!(factor > 0.0)) fail(ErrorCode::OutOfRange, "scale factor must be positive");
  ConvexPolygon out = poly;
  for (Point2& p : out.vertices) p = factor * p;
  return out;
}

ConvexPolygon rotate(const ConvexPolygon& poly, double angle) {
  ConvexPolygon out = poly;
  for (Point2& p : out.vertices) p = rotated(p, angle);
  return recanonicalize(out);
}

ConvexPolygon point_reflect(const ConvexPolygon& poly, Point2 center) {
  ConvexPolygon out = poly;
  for (Point2& p : out.vertices) p = 2.0 * center - p;
  return recanonicalize(out);
}

double support_function(const ConvexPolygon& poly, Point2 direction) {
  if (norm(direction) < 1e-300) fail(ErrorCode::ZeroDirection, "support of zero direction");
  double best = -1e300;
  for (const Point2& v : poly.vertices) best = std::fmax(best, dot(v, direction));
  return best;
}

ConvexPolygon polar_dual(const ConvexPolygon& poly, Tolerance tol) {
  const int m = poly.size();
  std::vector<Point2> dual;
  dual.reserve(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) {
    const Point2 a = poly.vertex(i), b = poly.vertex(i + 1);
    const double det = cross(a, b);
    if (det <= std::fmax(tol.abs, tol.rel * norm(a) * norm(b)))
      fail(ErrorCode::OriginNotInterior, "polar dual needs the origin strictly inside");
    // Unique u with <u,a> = <u,b> = 1: the dual vertex of edge (a, b).
    dual.push_back({(b.y - a.y) / det, (a.x - b.x) / det});
  }
  return canonicalize(dual, tol);
}

bool contains(const ConvexPolygon& poly, Point2 p, double eps) {
  const int m = poly.size();
  for (int i = 0; i < m; ++i) {
    const Point2 a = poly.vertex(i);
    if (cross(poly.vertex(i + 1) - a, p - a) < -eps) return false;
  }
  return true;
}

namespace {

double point_segment_dist(Point2 p, Point2 a, Point2 b) {
  const Point2 ab = b - a;
  const double len2 = norm_sq(ab);
  if (len2 == 0.0) return dist(p, a);
  const double t = std::clamp(dot(p - a, ab) / len2, 0.0, 1.0);
  return dist(p, a + t * ab);
}

}  // namespace

double distance_to(const ConvexPolygon& poly, Point2 p) {
  if (contains(poly, p, 0.0)) return 0.0;
  double best = 1e300;
  const int m = poly.size();
  for (int i = 0; i < m; ++i)
    best = std::fmin(best, point_segment_dist(p, poly.vertex(i), poly.vertex(i + 1)));
  return best;
}

double hausdorff_distance(const ConvexPolygon& a, const ConvexPolygon& b) {
  // For convex bodies the directed distance max_{p in A} d(p, B) is attained
  // at a vertex of A, so the vertex sweep below is exact.  The support-grid
  // term is a lower bound (error O(diam / grid^2) per direction gap) kept as
  // a cheap cross-check; the maximum of all three is returned.
  double h = 0.0;
  for (const Point2& v : a.vertices) h = std::fmax(h, distance_to(b, v));
  for (const Point2& v : b.vertices) h = std::fmax(h, distance_to(a, v));

  constexpr int kGrid = 4096;
  double hs = 0.0;
  for (int i = 0; i < kGrid; ++i) {
    const double t = 2.0 * kPi * i / kGrid;
    const Point2 u{std::cos(t), std::sin(t)};
    hs = std::fmax(hs, std::fabs(support_function(a, u) - support_function(b, u)));
  }
  return std::fmax(h, hs);
}

double min_width(const ConvexPolygon& poly) {
  // The minimum width of a convex polygon is attained with one of the two
  // parallel support lines flush against an edge.
  const int m = poly.size();
  double best = 1e300;
  for (int i = 0; i < m; ++i) {
    const Point2 u = poly.edge_normal(i);
    best = std::fmin(best, support_function(poly, u) + support_function(poly, -u));
  }
  return best;
}

double inradius(const ConvexPolygon& poly) {
  // Bisection on the shrink offset r: the erosion {x : <n_i, x> <= b_i - r}
  // is nonempty exactly for r <= inradius.
  const int m = poly.size();
  std::vector<detail::HalfPlane> planes(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) {
    const Point2 n = poly.edge_normal(i);
    planes[static_cast<size_t>(i)] = {n, dot(n, poly.vertex(i))};
  }
  auto feasible = [&](double r) {
    std::vector<detail::HalfPlane> shifted = planes;
    for (auto& h : shifted) h.offset -= r;
    return !detail::intersect_halfplanes(std::move(shifted)).empty();
  };
  double lo = 0.0, hi = 0.5 * min_width(poly) * (1.0 + 1e-12) + 1e-30;
  if (feasible(hi)) return hi;
  for (int it = 0; it < 100 && hi - lo > 1e-14 * hi + 1e-300; ++it) {
    const double mid = 0.5 * (lo + hi);
    (feasible(mid) ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

namespace {

struct Circle {
  Point2 c;
  double r2 = -1.0;  // squared radius, negative means empty
  bool covers(Point2 p) const { return norm_sq(p - c) <= r2 * (1.0 + 1e-12) + 1e-300; }
};

Circle circle2(Point2 a, Point2 b) {
  const Point2 c = 0.5 * (a + b);
  return {c, norm_sq(a - c)};
}

Circle circle3(Point2 a, Point2 b, Point2 c) {
  const Point2 ab = b - a, ac = c - a;
  const double d = 2.0 * cross(ab, ac);
  if (std::fabs(d) < 1e-30) {  // collinear fallback: widest pair
    Circle best = circle2(a, b);
    for (const Circle& cand : {circle2(a, c), circle2(b, c)})
      if (cand.r2 > best.r2) best = cand;
    return best;
  }
  const double na = norm_sq(ab), nc = norm_sq(ac);
  const Point2 center{a.x + (ac.y * na - ab.y * nc) / d, a.y + (ab.x * nc - ac.x * na) / d};
  return {center, norm_sq(a - center)};
}

// Welzl's move-to-front minimum enclosing circle.
Circle welzl(std::vector<Point2> pts) {
  std::mt19937 rng(0x5eed);
  std::shuffle(pts.begin(), pts.end(), rng);
  Circle c{pts[0], 0.0};
  const size_t n = pts.size();
  for (size_t i = 1; i < n; ++i) {
    if (c.covers(pts[i])) continue;
    c = {pts[i], 0.0};
    for (size_t j = 0; j < i; ++j) {
      if (c.covers(pts[j])) continue;
      c = circle2(pts[i], pts[j]);
      for (size_t k = 0; k < j; ++k) {
        if (c.covers(pts[k])) continue;
        c = circle3(pts[i], pts[j], pts[k]);
      }
    }
  }
  return c;
}

}  // namespace

double circumradius(const ConvexPolygon& poly) {
  return std::sqrt(welzl(poly.vertices).r2);
}

bool is_regular(const ConvexPolygon& poly, Tolerance tol) {
  const int m = poly.size();
  double mean_len = perimeter(poly) / m;
  const double target_turn = 2.0 * kPi / m;
  for (int i = 0; i < m; ++i) {
    const Point2 e0 = poly.edge_vector(i), e1 = poly.edge_vector(i + 1);
    if (std::fabs(norm(e0) - mean_len) > tol.rel * mean_len + tol.abs) return false;
    const double turn = std::atan2(cross(e0, e1), dot(e0, e1));
    if (std::fabs(turn - target_turn) > tol.rel * target_turn + tol.abs) return false;
  }
  return true;
}

bool is_origin_symmetric(const ConvexPolygon& poly, Tolerance tol) {
  const int m = poly.size();
  if (m % 2 != 0) return false;
  for (int i = 0; i < m / 2; ++i) {
    const Point2 v = poly.vertex(i), w = poly.vertex(i + m / 2);
    if (norm(v + w) > std::fmax(tol.abs, tol.rel * norm(v))) return false;
  }
  return true;
}

ConvexPolygon regular_gon(int sides, double in_radius, double phase) {
  if (sides < 3) fail(ErrorCode::InvalidN, "regular polygon needs at least 3 sides");
  if (!(in_radius > 0.0)) fail(ErrorCode::OutOfRange, "inradius must be positive");
  const double rv = in_radius / std::cos(kPi / sides);
  std::vector<Point2> v(static_cast<size_t>(sides));
  for (int i = 0; i < sides; ++i) {
    const double t = phase + (2.0 * i + 1.0) * kPi / sides;
    v[static_cast<size_t>(i)] = {rv * std::cos(t), rv * std::sin(t)};
  }
  return recanonicalize(ConvexPolygon{std::move(v)});
}

ConvexPolygon disk_approximation(int sides) {
  if (sides < 8) fail(ErrorCode::InvalidN, "disk approximation needs at least 8 sides");
  std::vector<Point2> v(static_cast<size_t>(sides));
  for (int i = 0; i < sides; ++i) {
    const double t = 2.0 * kPi * i / sides;
    v[static_cast<size_t>(i)] = {std::cos(t), std::sin(t)};
  }
  return recanonicalize(ConvexPolygon{std::move(v)});
}

ConvexPolygon ellipse_approximation(double semi_x, double semi_y, int sides) {
  if (!(semi_x > 0.0) || !(semi_y > 0.0)) fail(ErrorCode::OutOfRange, "semi-axes must be positive");
  if (sides < 8) fail(ErrorCode::InvalidN, "ellipse approximation needs at least 8 sides");
  std::vector<Point2> v(static_cast<size_t>(sides));
  for (int i = 0; i < sides; ++i) {
    const double t = 2.0 * kPi * i / sides;
    v[static_cast<size_t>(i)] = {semi_x * std::cos(t), semi_y * std::sin(t)};
  }
  return recanonicalize(ConvexPolygon{std::move(v)});
}

}  // namespace honeylab
