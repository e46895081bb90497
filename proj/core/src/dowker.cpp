#include "honeylab/dowker.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace honeylab {

namespace {

// Margins are compared against -1e-9 scaled by the hexagon anchor value; the
// log form (alpha == 0) shares the same scale so near-zero anchors do not
// inflate the tolerance.
double margin_threshold(const DowkerTable& table, double alpha) {
  const double a6 = table.value(6);
  return -1e-9 * std::pow(a6, std::max(alpha, 1.0));
}

double transform(double area, double alpha) {
  return alpha == 0.0 ? std::log(area) : std::pow(area, alpha);
}

void finalize(DowkerReport& report) {
  report.worst_margin = std::numeric_limits<double>::infinity();
  for (const DowkerMargin& m : report.margins) {
    if (m.value < report.worst_margin) {
      report.worst_margin = m.value;
      report.worst = m;
    }
    if (std::fabs(m.value) <= 10.0 * std::fabs(report.threshold))
      report.borderline.push_back(m);
  }
  report.verdict = report.worst_margin >= report.threshold;
}

}  // namespace

DowkerReport check_alpha_dowker(const DowkerTable& table, double alpha, Tolerance tol) {
  (void)tol;
  if (alpha < 0.0) fail(ErrorCode::OutOfRange, "alpha must be >= 0");
  if (!table.covers(6)) fail(ErrorCode::InsufficientTable, "table must cover n = 6");
  if (table.n_max - table.n_min < 2)
    fail(ErrorCode::InsufficientTable, "convexity needs at least three table entries");
  DowkerReport report;
  report.property = alpha == 0.0 ? DowkerProperty::LogConvexity : DowkerProperty::AlphaConvexity;
  report.alpha = alpha;
  report.threshold = margin_threshold(table, alpha);
  for (int n = table.n_min + 1; n <= table.n_max - 1; ++n) {
    const double g0 = transform(table.value(n - 1), alpha);
    const double g1 = transform(table.value(n), alpha);
    const double g2 = transform(table.value(n + 1), alpha);
    report.margins.push_back({n - 1, n, g0 + g2 - 2.0 * g1});
  }
  finalize(report);
  return report;
}

DowkerReport check_weak_alpha_dowker(const DowkerTable& table, double alpha, int m,
                                     Tolerance tol) {
  (void)tol;
  if (alpha < 0.0) fail(ErrorCode::OutOfRange, "alpha must be >= 0");
  if (m < 3 || m > 5) fail(ErrorCode::OutOfRange, "anchor m must be 3, 4 or 5");
  if (!table.covers(m) || !table.covers(6) || table.n_max < 7)
    fail(ErrorCode::InsufficientTable, "table must cover the anchor, 6 and some n > 6");
  DowkerReport report;
  report.property = DowkerProperty::WeakAlpha;
  report.alpha = alpha;
  report.threshold = margin_threshold(table, alpha);
  const double gm = transform(table.value(m), alpha);
  const double g6 = transform(table.value(6), alpha);
  for (int n = 7; n <= table.n_max; ++n) {
    const double gn = transform(table.value(n), alpha);
    const double lam = static_cast<double>(n - 6) / static_cast<double>(n - m);
    const double mu = static_cast<double>(6 - m) / static_cast<double>(n - m);
    report.margins.push_back({m, n, lam * gm + mu * gn - g6});
  }
  finalize(report);
  return report;
}

DowkerReport check_weak_alpha_dowker_all(const DowkerTable& table, double alpha,
                                         Tolerance tol) {
  DowkerReport report;
  report.property = DowkerProperty::WeakAlpha;
  report.alpha = alpha;
  report.threshold = margin_threshold(table, alpha);
  for (int m = 3; m <= 5; ++m) {
    const DowkerReport one = check_weak_alpha_dowker(table, alpha, m, tol);
    report.margins.insert(report.margins.end(), one.margins.begin(), one.margins.end());
  }
  finalize(report);
  return report;
}

HoneycombCertificate honeycomb_certificate(const NormDisk& M, double alpha, int n_max,
                                           Tolerance tol) {
  if (alpha < 0.0) fail(ErrorCode::OutOfRange, "alpha must be >= 0");
  const NormDisk iso = isoperimetrix(M);
  HoneycombCertificate cert;
  cert.norm_id = M.id();
  cert.alpha = alpha;
  cert.isoperimetrix_disk = iso.polygon();
  const int cap = n_max > 0 ? n_max : std::max(iso.polygon().size(), 8);
  if (cap < 7) fail(ErrorCode::InvalidN, "certificate needs a table up to n >= 7");
  cert.table = dowker_table(iso.polygon(), cap, tol, M.id() + ":iso");
  cert.hexagon = min_area_circumscribed(iso.polygon(), 6, tol).polygon;
  cert.certified = true;
  for (int m = 3; m <= 5; ++m) {
    cert.weak_reports.push_back(check_weak_alpha_dowker(cert.table, alpha, m, tol));
    cert.certified = cert.certified && cert.weak_reports.back().verdict;
  }
  const double a6 = cert.table.value(6);
  cert.bound_value = alpha == 0.0 ? std::log(4.0 * a6) : std::pow(4.0 * a6, alpha);
  return cert;
}

double stability_epsilon0() {
  const double s5 = std::sqrt(disk_reference_area(5));
  const double s6 = std::sqrt(disk_reference_area(6));
  const double s7 = std::sqrt(disk_reference_area(7));
  return (s5 + s7 - 2.0 * s6) / (s5 + s7 + 2.0 * s6);
}

StabilityGate check_stability_gate(const NormDisk& M, Tolerance tol) {
  (void)tol;
  StabilityGate gate;
  gate.eps0 = stability_epsilon0();
  // Mean support over all directions is perimeter / 2pi (it is 1 for the unit
  // disk), so this scale matches mean widths before comparing shapes.
  const ConvexPolygon& P = M.polygon();
  const double scale_factor = 2.0 * std::numbers::pi / perimeter(P);
  gate.applied_scale = scale_factor;
  // Hausdorff distance to the unit disk = sup over directions of
  // |support - 1|: the max of support is at a vertex, the min at an edge foot.
  double above = 0.0, below = 0.0;
  for (int i = 0; i < P.size(); ++i) {
    const Point2 v = scale_factor * P.vertex(i);
    above = std::max(above, norm(v) - 1.0);
    const Point2 a = scale_factor * P.vertex(i), b = scale_factor * P.vertex(i + 1);
    const Point2 e = b - a;
    const double foot = cross(a, b) / norm(e);  // distance from origin to edge line
    below = std::max(below, 1.0 - foot);
  }
  gate.distance = std::max(above, below);
  gate.within = gate.distance <= gate.eps0;
  return gate;
}

std::optional<double> estimate_min_weak_alpha(const DowkerTable& table, Tolerance tol) {
  auto passes = [&](double alpha) {
    return check_weak_alpha_dowker_all(table, alpha, tol).verdict;
  };
  if (passes(0.0)) return 0.0;
  if (!passes(4.0)) return std::nullopt;
  double lo = 0.0, hi = 4.0;
  while (hi - lo > 1e-6) {
    const double mid = 0.5 * (lo + hi);
    (passes(mid) ? hi : lo) = mid;
  }
  return hi;
}

std::vector<DowkerMargin> log_convexity_scan(const DowkerTable& table, int n_from, int n_to) {
  if (n_from > n_to) fail(ErrorCode::OutOfRange, "empty scan range");
  if (!table.covers(n_from - 1) || !table.covers(n_to + 1))
    fail(ErrorCode::InsufficientTable, "scan needs entries one beyond each end");
  std::vector<DowkerMargin> out;
  for (int n = n_from; n <= n_to; ++n) {
    const double g0 = std::log(table.value(n - 1));
    const double g1 = std::log(table.value(n));
    const double g2 = std::log(table.value(n + 1));
    out.push_back({n - 1, n, g0 + g2 - 2.0 * g1});
  }
  return out;
}

}  // namespace honeylab
