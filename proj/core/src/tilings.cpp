#include "honeylab/tilings.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <memory>
#include <numbers>
#include <unordered_map>

#include "honeylab/circumscribe.hpp"
#include "../src/halfplane.hpp"

namespace honeylab {

namespace {

constexpr double kPi = std::numbers::pi;

struct BBox {
  double xlo = 0.0, xhi = 0.0, ylo = 0.0, yhi = 0.0;
};

BBox bbox_of(const ConvexPolygon& P) {
  BBox b{P.vertices[0].x, P.vertices[0].x, P.vertices[0].y, P.vertices[0].y};
  for (const Point2& v : P.vertices) {
    b.xlo = std::min(b.xlo, v.x);
    b.xhi = std::max(b.xhi, v.x);
    b.ylo = std::min(b.ylo, v.y);
    b.yhi = std::max(b.yhi, v.y);
  }
  return b;
}

bool bbox_near(const BBox& a, const BBox& b, double pad) {
  return a.xlo <= b.xhi + pad && b.xlo <= a.xhi + pad && a.ylo <= b.yhi + pad &&
         b.ylo <= a.yhi + pad;
}

double cell_diameter(const ConvexPolygon& P) {
  const BBox b = bbox_of(P);
  return std::hypot(b.xhi - b.xlo, b.yhi - b.ylo);
}

// Uniform grid over cell bounding boxes; buckets are keyed by integer grid
// coordinates.  Queries return candidate cell indices near a box.
class PatchIndex {
 public:
  explicit PatchIndex(const TilingPatch& patch) {
    boxes_.reserve(patch.cells.size());
    double max_extent = 1e-9;
    for (const ConvexPolygon& c : patch.cells) {
      const BBox b = bbox_of(c);
      boxes_.push_back(b);
      max_extent = std::max({max_extent, b.xhi - b.xlo, b.yhi - b.ylo});
    }
    step_ = max_extent;
    for (int i = 0; i < static_cast<int>(boxes_.size()); ++i) {
      const BBox& b = boxes_[static_cast<size_t>(i)];
      for (long long gx = key(b.xlo); gx <= key(b.xhi); ++gx)
        for (long long gy = key(b.ylo); gy <= key(b.yhi); ++gy)
          buckets_[pack(gx, gy)].push_back(i);
    }
  }

  const BBox& box(int i) const { return boxes_[static_cast<size_t>(i)]; }

  std::vector<int> near(const BBox& b, double pad) const {
    std::vector<int> out;
    for (long long gx = key(b.xlo - pad); gx <= key(b.xhi + pad); ++gx)
      for (long long gy = key(b.ylo - pad); gy <= key(b.yhi + pad); ++gy) {
        const auto it = buckets_.find(pack(gx, gy));
        if (it == buckets_.end()) continue;
        out.insert(out.end(), it->second.begin(), it->second.end());
      }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

 private:
  long long key(double x) const { return static_cast<long long>(std::floor(x / step_)); }
  static long long pack(long long gx, long long gy) {
    return gx * 0x100000000ll + (gy & 0xffffffffll);
  }
  double step_ = 1.0;
  std::vector<BBox> boxes_;
  std::unordered_map<long long, std::vector<int>> buckets_;
};

// Enumerate lattice translates i*v1 + j*v2 with |site| <= reach and append a
// copy of each prototype cell (already positioned relative to the site).
template <typename Emit>
void for_each_site(Point2 v1, Point2 v2, double reach, Emit&& emit) {
  const double det = cross(v1, v2);
  if (std::fabs(det) < 1e-12) fail(ErrorCode::DegenerateInput, "lattice vectors are parallel");
  const int imax = static_cast<int>(std::ceil(reach * norm(v2) / std::fabs(det))) + 1;
  const int jmax = static_cast<int>(std::ceil(reach * norm(v1) / std::fabs(det))) + 1;
  for (int i = -imax; i <= imax; ++i)
    for (int j = -jmax; j <= jmax; ++j) {
      const Point2 site = static_cast<double>(i) * v1 + static_cast<double>(j) * v2;
      if (norm(site) <= reach) emit(site);
    }
}

void spot_check_tiling(const ConvexPolygon& cell, Point2 v1, Point2 v2, bool reflect_odd,
                       Tolerance tol) {
  const double det = std::fabs(cross(v1, v2));
  const double cells_per_site = reflect_odd ? 2.0 : 1.0;
  const double expect = cells_per_site * area(cell);
  if (std::fabs(det - expect) > 1e-9 * std::max(det, expect))
    fail(ErrorCode::NonTilingPrototype, "lattice cell area does not match prototype area");
  // Overlap probe: the prototype centroid must not land inside any nearby copy.
  const Point2 c0 = centroid(cell);
  const ConvexPolygon mirrored =
      reflect_odd ? point_reflect(cell, 0.5 * (v1 + v2)) : ConvexPolygon{};
  for (int i = -2; i <= 2; ++i)
    for (int j = -2; j <= 2; ++j) {
      const Point2 site = static_cast<double>(i) * v1 + static_cast<double>(j) * v2;
      const double eps = std::fmax(tol.abs, tol.rel * cell_diameter(cell));
      if (!(i == 0 && j == 0) && contains(translate(cell, site), c0, -eps))
        fail(ErrorCode::NonTilingPrototype, "prototype copies overlap");
      if (reflect_odd && contains(translate(mirrored, site), c0, -eps))
        fail(ErrorCode::NonTilingPrototype, "prototype copies overlap");
    }
}

TilingPatch lattice_patch(const ConvexPolygon& cell, Point2 v1, Point2 v2, bool reflect_odd,
                          double R, Tolerance tol, std::string source) {
  spot_check_tiling(cell, v1, v2, reflect_odd, tol);
  const double d = cell_diameter(cell);
  TilingPatch patch;
  patch.window_radius = R;
  patch.source = std::move(source);
  const ConvexPolygon mirrored =
      reflect_odd ? point_reflect(cell, 0.5 * (v1 + v2)) : ConvexPolygon{};
  for_each_site(v1, v2, R + 3.0 * d + norm(v1) + norm(v2), [&](Point2 site) {
    patch.cells.push_back(translate(cell, site));
    if (reflect_odd) patch.cells.push_back(translate(mirrored, site));
  });
  if (patch.cells.empty()) fail(ErrorCode::EmptyWindow, "window contains no cells");
  return patch;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

double hash_unit(std::uint64_t seed, std::int64_t i, std::int64_t j, int lane) {
  std::uint64_t h = seed;
  h = splitmix64(h ^ static_cast<std::uint64_t>(i) * 0xD1B54A32D192ED03ull);
  h = splitmix64(h ^ static_cast<std::uint64_t>(j) * 0x8CB92BA72F3D8DD7ull);
  h = splitmix64(h ^ static_cast<std::uint64_t>(lane));
  return (static_cast<double>(h >> 11) * 0x1.0p-53) - 0.5;  // uniform in [-1/2, 1/2)
}

}  // namespace

TilingPatch build_hex_tiling(const NormDisk& M, double R, Tolerance tol) {
  const NormDisk iso = isoperimetrix(M);
  ConvexPolygon hex;
  if (iso.polygon().size() <= 6)
    hex = iso.polygon();
  else
    hex = min_area_symmetric_circumscribed(iso.polygon(), 6, tol).polygon;
  hex = canonicalize(hex.vertices, tol);
  hex = scale(hex, 1.0 / std::sqrt(area(hex)));
  Point2 v1, v2;
  if (hex.size() == 6) {
    const Point2 a1 = hex.edge_vector(0), a2 = hex.edge_vector(1), a3 = hex.edge_vector(2);
    v1 = a1 + a2;
    v2 = a2 + a3;
  } else if (hex.size() == 4) {
    v1 = hex.edge_vector(0);  // parallelogram cell: its own edges tile
    v2 = hex.edge_vector(1);
  } else {
    fail(ErrorCode::NonTilingPrototype, "circumscribed cell is not a tiling hexagon");
  }
  return lattice_patch(hex, v1, v2, false, R, tol, "hex:" + M.id());
}

TilingPatch build_lattice_patch(Prototype proto, double R, Tolerance tol) {
  switch (proto) {
    case Prototype::Square: {
      const ConvexPolygon cell =
          canonicalize({{-0.5, -0.5}, {0.5, -0.5}, {0.5, 0.5}, {-0.5, 0.5}}, tol);
      return lattice_patch(cell, {1.0, 0.0}, {0.0, 1.0}, false, R, tol, "lattice:square");
    }
    case Prototype::Triangle: {
      const double side = std::sqrt(4.0 / std::sqrt(3.0));  // unit-area equilateral
      const double h = side * std::sqrt(3.0) / 2.0;
      const ConvexPolygon cell =
          canonicalize({{0.0, 0.0}, {side, 0.0}, {side / 2.0, h}}, tol);
      return lattice_patch(cell, {side, 0.0}, {side / 2.0, h}, true, R, tol,
                           "lattice:triangle");
    }
    case Prototype::Hexagon: {
      ConvexPolygon cell = regular_gon(6, 1.0, 0.0);
      cell = scale(cell, 1.0 / std::sqrt(area(cell)));
      const Point2 a1 = cell.edge_vector(0), a2 = cell.edge_vector(1), a3 = cell.edge_vector(2);
      return lattice_patch(cell, a1 + a2, a2 + a3, false, R, tol, "lattice:hexagon");
    }
    case Prototype::Custom:
      fail(ErrorCode::NonTilingPrototype, "custom prototype needs explicit lattice vectors");
  }
  fail(ErrorCode::NonTilingPrototype, "unknown prototype");
}

TilingPatch build_custom_lattice_patch(const ConvexPolygon& cell, Point2 v1, Point2 v2,
                                       bool reflect_odd, double R, Tolerance tol) {
  const ConvexPolygon c = canonicalize(cell.vertices, tol);
  return lattice_patch(c, v1, v2, reflect_odd, R, tol, "lattice:custom");
}

TilingPatch build_jittered_voronoi_patch(double R, double jitter, std::uint64_t seed,
                                         Tolerance tol) {
  if (jitter < 0.0 || jitter > 0.49)
    fail(ErrorCode::OutOfRange, "jitter must lie in [0, 0.49]");
  // Hexagonal site lattice with one site per unit area.
  const double d = std::sqrt(2.0 / std::sqrt(3.0));
  const Point2 u1{d, 0.0}, u2{d / 2.0, d * std::sqrt(3.0) / 2.0};
  struct Site {
    Point2 p;
    bool owner;  // build a cell for this site (vs neighbour support only)
  };
  std::vector<Site> sites;
  const double build_reach = R + 3.0 * d;
  for_each_site(u1, u2, R + 7.0 * d, [&](Point2 base) {
    // Recover integer coordinates for deterministic per-site jitter.
    const double det = cross(u1, u2);
    const std::int64_t i = std::llround(cross(base, u2) / det);
    const std::int64_t j = std::llround(cross(u1, base) / det);
    const Point2 off{jitter * d * hash_unit(seed, i, j, 0),
                     jitter * d * hash_unit(seed, i, j, 1)};
    const Point2 p = base + off;
    sites.push_back({p, norm(base) <= build_reach});
  });
  TilingPatch patch;
  patch.window_radius = R;
  patch.source = "voronoi";
  // Bucket sites so each cell only sees nearby bisectors.
  const double box = 4.0 * d;
  std::unordered_map<long long, std::vector<int>> grid;
  // Integer bucket coordinates; offsets below stay in integer arithmetic so a
  // site sitting exactly on a bucket boundary cannot skip a neighbour bucket.
  auto bucket_x = [&](Point2 p) { return static_cast<long long>(std::floor(p.x / box)); };
  auto bucket_y = [&](Point2 p) { return static_cast<long long>(std::floor(p.y / box)); };
  auto gkey = [](long long gx, long long gy) {
    return gx * 0x100000000ll + (gy & 0xffffffffll);
  };
  for (int i = 0; i < static_cast<int>(sites.size()); ++i)
    grid[gkey(bucket_x(sites[static_cast<size_t>(i)].p),
              bucket_y(sites[static_cast<size_t>(i)].p))]
        .push_back(i);
  for (const Site& s : sites) {
    if (!s.owner) continue;
    std::vector<detail::HalfPlane> planes;
    // Seed box bounds the cell before bisectors are applied.
    planes.push_back({{1.0, 0.0}, s.p.x + box});
    planes.push_back({{-1.0, 0.0}, -s.p.x + box});
    planes.push_back({{0.0, 1.0}, s.p.y + box});
    planes.push_back({{0.0, -1.0}, -s.p.y + box});
    const long long sgx = bucket_x(s.p), sgy = bucket_y(s.p);
    for (long long dx = -2; dx <= 2; ++dx)
      for (long long dy = -2; dy <= 2; ++dy) {
        const auto it = grid.find(gkey(sgx + dx, sgy + dy));
        if (it == grid.end()) continue;
        for (int ti : it->second) {
          const Point2 diff = sites[static_cast<size_t>(ti)].p - s.p;
          const double dist = norm(diff);
          if (dist < 1e-12 || dist > 2.0 * box) continue;
          planes.push_back({(1.0 / dist) * diff,
                            0.5 * (dot(sites[static_cast<size_t>(ti)].p,
                                       sites[static_cast<size_t>(ti)].p) -
                                   dot(s.p, s.p)) /
                                dist});
        }
      }
    const std::vector<Point2> loop = detail::intersect_halfplanes(planes);
    // Concurrent bisectors (exact lattice, zero jitter) leave stray edges of
    // rounding length; collapse anything far below the site spacing.
    const Tolerance cell_tol{tol.rel, std::max(tol.abs, 1e-7 * d)};
    if (loop.size() >= 3) patch.cells.push_back(canonicalize(loop, cell_tol));
  }
  if (patch.cells.empty()) fail(ErrorCode::EmptyWindow, "window contains no cells");
  return patch;
}

namespace {

// Split-segment side count; candidates come from the patch index.
int side_count_impl(const TilingPatch& patch, const PatchIndex& index, int cell_index,
                    Tolerance tol) {
  const ConvexPolygon& P = patch.cells[static_cast<size_t>(cell_index)];
  const BBox& pb = index.box(cell_index);
  const double scale0 = cell_diameter(P);
  const double eps = std::fmax(tol.abs, tol.rel * scale0);
  int count = P.size();
  std::vector<std::vector<double>> splits(static_cast<size_t>(P.size()));
  for (int q : index.near(pb, eps)) {
    if (q == cell_index) continue;
    const ConvexPolygon& Q = patch.cells[static_cast<size_t>(q)];
    if (!bbox_near(pb, index.box(q), eps)) continue;
    for (const Point2& w : Q.vertices) {
      for (int e = 0; e < P.size(); ++e) {
        const Point2 a = P.vertex(e), b = P.vertex(e + 1);
        const Point2 ev = b - a;
        const double len = norm(ev);
        if (std::fabs(cross(ev, w - a)) > eps * len) continue;
        const double t = dot(w - a, ev) / (len * len);
        if (t * len <= eps || (1.0 - t) * len <= eps) continue;  // endpoint, not a split
        splits[static_cast<size_t>(e)].push_back(t);
      }
    }
  }
  for (size_t e = 0; e < splits.size(); ++e) {
    std::vector<double>& ts = splits[e];
    if (ts.empty()) continue;
    std::sort(ts.begin(), ts.end());
    const double len = norm(P.vertex(static_cast<int>(e) + 1) - P.vertex(static_cast<int>(e)));
    int distinct = 1;
    for (size_t i = 1; i < ts.size(); ++i)
      if ((ts[i] - ts[i - 1]) * len > eps) ++distinct;
    count += distinct;
  }
  return count;
}

template <typename InWindow>
AverageSeries window_average_impl(const TilingPatch& patch, const NormDisk& M, StatKind kind,
                                  double alpha, const std::vector<double>& radii,
                                  InWindow&& in_window) {
  AverageSeries series;
  series.kind = kind;
  series.alpha = alpha;
  std::vector<double> stat_cache(patch.cells.size(),
                                 std::numeric_limits<double>::quiet_NaN());
  std::unique_ptr<PatchIndex> index;  // built only when side counts are needed
  if (kind == StatKind::Sides) index = std::make_unique<PatchIndex>(patch);
  auto cell_statistic = [&](int i) {
    const ConvexPolygon& cell = patch.cells[static_cast<size_t>(i)];
    switch (kind) {
      case StatKind::PoweredPerimeter:
        return std::pow(m_perimeter(M, cell), alpha);
      case StatKind::LogPerimeter:
        return std::log(m_perimeter(M, cell));
      case StatKind::Sides:
        return static_cast<double>(side_count_impl(patch, *index, i, Tolerance{}));
      case StatKind::IsoperimetricRatio: {
        const double p = m_perimeter(M, cell);
        return p * p / area(cell);
      }
    }
    fail(ErrorCode::OutOfRange, "unknown statistic");
  };
  for (double R : radii) {
    double sum = 0.0;
    int count = 0;
    for (int i = 0; i < static_cast<int>(patch.cells.size()); ++i) {
      bool inside = true;
      for (const Point2& v : patch.cells[static_cast<size_t>(i)].vertices)
        if (!in_window(v, R)) {
          inside = false;
          break;
        }
      if (!inside) continue;
      double& cached = stat_cache[static_cast<size_t>(i)];
      if (std::isnan(cached)) cached = cell_statistic(i);
      sum += cached;
      ++count;
    }
    if (count == 0) fail(ErrorCode::EmptyWindow, "no cell fits inside the window");
    series.radii.push_back(R);
    series.values.push_back(sum / count);
    series.cell_counts.push_back(count);
  }
  return series;
}

}  // namespace

AverageSeries window_average(const TilingPatch& patch, const NormDisk& M, StatKind kind,
                             double alpha, const std::vector<double>& radii) {
  return window_average_impl(patch, M, kind, alpha, radii, [](Point2 v, double R) {
    return norm(v) <= R * (1.0 + 1e-12) + 1e-12;
  });
}

AverageSeries window_average_square(const TilingPatch& patch, const NormDisk& M, StatKind kind,
                                    double alpha, const std::vector<double>& radii) {
  return window_average_impl(patch, M, kind, alpha, radii, [](Point2 v, double R) {
    const double lim = R * (1.0 + 1e-12) + 1e-12;
    return std::fabs(v.x) <= lim && std::fabs(v.y) <= lim;
  });
}

double honeycomb_bound(const NormDisk& M, double alpha, Tolerance tol) {
  if (alpha < 0.0) fail(ErrorCode::OutOfRange, "alpha must be >= 0");
  const NormDisk iso = isoperimetrix(M);
  const double a6 = min_area_circumscribed(iso.polygon(), 6, tol).min_area;
  return alpha == 0.0 ? std::log(4.0 * a6) : std::pow(4.0 * a6, alpha);
}

ChakerianTerms chakerian_gap(const NormDisk& M, const ConvexPolygon& K, Tolerance tol) {
  const ConvexPolygon P = canonicalize(K.vertices, tol);
  const NormDisk iso = isoperimetrix(M);
  ChakerianTerms terms;
  terms.mixed_perimeter = m_perimeter(M, P);
  terms.cell_area = area(P);
  // Tangent polygon: support lines of the isoperimetrix in K's normal
  // directions, intersected consecutively.
  const int n = P.size();
  std::vector<Point2> normals(static_cast<size_t>(n));
  std::vector<double> offsets(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    const Point2 u = P.edge_normal(i);
    normals[static_cast<size_t>(i)] = u;
    offsets[static_cast<size_t>(i)] = support_function(iso.polygon(), u);
  }
  std::vector<Point2> verts(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    const Point2 u1 = normals[static_cast<size_t>(i)];
    const Point2 u2 = normals[static_cast<size_t>((i + 1) % n)];
    const double det = cross(u1, u2);
    if (std::fabs(det) < 1e-12)
      fail(ErrorCode::UnboundedKStar, "consecutive normals nearly parallel");
    const double c1 = offsets[static_cast<size_t>(i)];
    const double c2 = offsets[static_cast<size_t>((i + 1) % n)];
    verts[static_cast<size_t>(i)] = {(c1 * u2.y - c2 * u1.y) / det,
                                     (u1.x * c2 - u2.x * c1) / det};
  }
  terms.dual_area = area(ConvexPolygon{verts});
  terms.gap = terms.mixed_perimeter * terms.mixed_perimeter -
              4.0 * terms.dual_area * terms.cell_area;
  return terms;
}

NormalityConstants normality_constants(const TilingPatch& patch) {
  if (patch.cells.empty()) fail(ErrorCode::EmptyWindow, "patch has no cells");
  NormalityConstants nc;
  nc.min_inradius = std::numeric_limits<double>::infinity();
  nc.max_circumradius = 0.0;
  std::vector<BBox> boxes;
  boxes.reserve(patch.cells.size());
  for (const ConvexPolygon& c : patch.cells) {
    nc.min_inradius = std::min(nc.min_inradius, inradius(c));
    nc.max_circumradius = std::max(nc.max_circumradius, circumradius(c));
    boxes.push_back(bbox_of(c));
  }
  nc.neighbor_bound =
      9.0 * nc.max_circumradius * nc.max_circumradius / (nc.min_inradius * nc.min_inradius) -
      1.0;
  const double eps = 1e-9 * nc.max_circumradius;
  const PatchIndex index(patch);
  const int N = static_cast<int>(patch.cells.size());
  for (int i = 0; i < N; ++i) {
    int neighbors = 0;
    for (int j : index.near(boxes[static_cast<size_t>(i)], eps)) {
      if (i == j || !bbox_near(boxes[static_cast<size_t>(i)], boxes[static_cast<size_t>(j)], eps))
        continue;
      // Tiles touch iff a vertex of one lies on the other.
      bool touch = false;
      for (const Point2& v : patch.cells[static_cast<size_t>(j)].vertices)
        if (distance_to(patch.cells[static_cast<size_t>(i)], v) <= eps) {
          touch = true;
          break;
        }
      if (!touch)
        for (const Point2& v : patch.cells[static_cast<size_t>(i)].vertices)
          if (distance_to(patch.cells[static_cast<size_t>(j)], v) <= eps) {
            touch = true;
            break;
          }
      if (touch) ++neighbors;
    }
    nc.max_neighbors = std::max(nc.max_neighbors, neighbors);
  }
  return nc;
}

int boundary_cell_count(const TilingPatch& patch, double R) {
  int count = 0;
  const double eps = 1e-9 * std::fmax(R, 1.0);
  for (const ConvexPolygon& c : patch.cells) {
    double far = 0.0;
    for (const Point2& v : c.vertices) far = std::max(far, norm(v));
    const double near = distance_to(c, Point2{0.0, 0.0});
    if (near <= R + eps && far >= R - eps) ++count;
  }
  return count;
}

int side_count(const TilingPatch& patch, int cell_index, Tolerance tol) {
  if (cell_index < 0 || cell_index >= static_cast<int>(patch.cells.size()))
    fail(ErrorCode::OutOfRange, "cell index outside patch");
  const PatchIndex index(patch);
  return side_count_impl(patch, index, cell_index, tol);
}

// ---------------------------------------------------------------------------
// Squares-only construction.
// ---------------------------------------------------------------------------
namespace {

ConvexPolygon rect_cell(double x0, double y0, double x1, double y1) {
  return ConvexPolygon{{{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}}};
}

struct SteinState {
  std::vector<ConvexPolygon> cells;
  long long N = 1;  // current assembly is the square [-N, N]^2
};

SteinState stein_init() {
  SteinState st;
  st.cells.push_back(rect_cell(-1.0, -1.0, 1.0, 1.0));
  st.N = 1;
  return st;
}

// Pinwheel wrap: four 2N x 4N rectangles turn [-N,N]^2 into [-3N,3N]^2.
void stein_step_a(SteinState& st) {
  const double N = static_cast<double>(st.N);
  st.cells.push_back(rect_cell(-3.0 * N, N, N, 3.0 * N));        // top
  st.cells.push_back(rect_cell(N, -N, 3.0 * N, 3.0 * N));        // right
  st.cells.push_back(rect_cell(-N, -3.0 * N, 3.0 * N, -N));      // bottom
  st.cells.push_back(rect_cell(-3.0 * N, -3.0 * N, -N, N));      // left
  st.N *= 3;
}

// Ring wrap: 4N+4 side-2 squares turn [-N,N]^2 into [-N-2,N+2]^2.
void stein_step_b(SteinState& st) {
  const long long N = st.N;
  for (long long x = -N - 2; x < N + 2; x += 2) {
    st.cells.push_back(rect_cell(static_cast<double>(x), static_cast<double>(N),
                                 static_cast<double>(x + 2), static_cast<double>(N + 2)));
    st.cells.push_back(rect_cell(static_cast<double>(-x - 2), static_cast<double>(-N - 2),
                                 static_cast<double>(-x), static_cast<double>(-N)));
  }
  for (long long y = -N; y < N; y += 2) {
    st.cells.push_back(rect_cell(static_cast<double>(N), static_cast<double>(y),
                                 static_cast<double>(N + 2), static_cast<double>(y + 2)));
    st.cells.push_back(rect_cell(static_cast<double>(-N - 2), static_cast<double>(-y - 2),
                                 static_cast<double>(-N), static_cast<double>(-y)));
  }
  st.N += 2;
}

TilingPatch stein_patch(const SteinState& st, const std::string& source) {
  TilingPatch patch;
  patch.cells = st.cells;
  patch.window_radius = static_cast<double>(st.N);
  patch.source = source;
  return patch;
}

SteinhausMilestone stein_milestone(const SteinState& st, long long n_before, int index) {
  const TilingPatch patch = stein_patch(st, "steinhaus");
  const PatchIndex pidx(patch);
  const double r = static_cast<double>(n_before) + 0.5;
  double sum = 0.0;
  int count = 0;
  for (int i = 0; i < static_cast<int>(patch.cells.size()); ++i) {
    bool inside = true;
    for (const Point2& v : patch.cells[static_cast<size_t>(i)].vertices)
      if (std::fabs(v.x) > r || std::fabs(v.y) > r) {
        inside = false;
        break;
      }
    if (!inside) continue;
    sum += side_count_impl(patch, pidx, i, Tolerance{});
    ++count;
  }
  SteinhausMilestone ms;
  ms.schedule_index = index;
  ms.radius = r;
  ms.average = count > 0 ? sum / count : 0.0;
  ms.cells = count;
  if (count == 0) fail(ErrorCode::EmptyWindow, "milestone window is empty");
  return ms;
}

}  // namespace

SteinhausRun steinhaus_run(const std::string& schedule) {
  SteinState st = stein_init();
  SteinhausRun run;
  run.schedule = schedule;
  for (size_t k = 0; k < schedule.size(); ++k) {
    const char c = schedule[k];
    if (c == 'A' || c == 'a') {
      stein_step_a(st);
    } else if (c == 'B' || c == 'b') {
      const long long n_before = st.N;
      stein_step_b(st);
      run.milestones.push_back(stein_milestone(st, n_before, static_cast<int>(k)));
    } else {
      fail(ErrorCode::ParseError, "schedule letters must be A or B");
    }
  }
  run.patch = stein_patch(st, "steinhaus:" + schedule);
  return run;
}

SteinhausRun steinhaus_greedy(double nu, int milestones) {
  if (milestones < 1) fail(ErrorCode::OutOfRange, "need at least one milestone");
  SteinState st = stein_init();
  std::string schedule;
  SteinhausRun run;
  int recorded = 0;
  int streak = 0;  // A steps since the last B
  while (recorded < milestones) {
    // Tentative B from the current state.
    SteinState probe = st;
    const long long n_before = probe.N;
    stein_step_b(probe);
    const SteinhausMilestone ms =
        stein_milestone(probe, n_before, static_cast<int>(schedule.size()));
    if (ms.average <= nu && streak < 8) {
      // Not yet above the target: another pinwheel layer raises the average.
      stein_step_a(st);
      schedule.push_back('A');
      ++streak;
      continue;
    }
    st = std::move(probe);
    schedule.push_back('B');
    run.milestones.push_back(ms);
    ++recorded;
    streak = 0;
  }
  run.schedule = schedule;
  run.patch = stein_patch(st, "steinhaus:" + schedule);
  return run;
}

}  // namespace honeylab
