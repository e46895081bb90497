#pragma once

#include <optional>
#include <string>
#include <vector>

#include "honeylab/circumscribe.hpp"
#include "honeylab/norm_disk.hpp"

namespace honeylab {

enum class DowkerProperty {
  AlphaConvexity,   // {A(n)^alpha} convex in n (alpha > 0)
  LogConvexity,     // {log A(n)} convex in n (the alpha -> 0 limit)
  WeakAlpha,        // chord inequality anchored at n = 6
};

// One checked inequality instance.  Sequence checks use (m = n-1, n, n+1) and
// report the middle index in `n`; weak checks report the pair (m, n).
struct DowkerMargin {
  int m = 0;
  int n = 0;
  double value = 0.0;
};

struct DowkerReport {
  DowkerProperty property = DowkerProperty::AlphaConvexity;
  double alpha = 1.0;
  bool verdict = false;
  std::vector<DowkerMargin> margins;
  DowkerMargin worst;
  double worst_margin = 0.0;
  // Margins within 10x of the acceptance threshold; callers surface these as
  // WARN lines so borderline verdicts are visible.
  std::vector<DowkerMargin> borderline;
  double threshold = 0.0;
};

// Convexity of {A(n)^alpha} (alpha > 0) or {log A(n)} (alpha == 0) over the
// whole table.  Margins below -1e-9 * A(6)^max(alpha,1) flip the verdict.
DowkerReport check_alpha_dowker(const DowkerTable& table, double alpha, Tolerance tol = {});

// Weak alpha-Dowker chord inequality for one anchor 3 <= m <= 5:
//   ((n-6)/(n-m)) A^alpha(m) + ((6-m)/(n-m)) A^alpha(n) >= A^alpha(6)
// for all 6 < n <= n_max (log form when alpha == 0).
DowkerReport check_weak_alpha_dowker(const DowkerTable& table, double alpha, int m,
                                     Tolerance tol = {});

// All three anchors m = 3, 4, 5 combined into one report.
DowkerReport check_weak_alpha_dowker_all(const DowkerTable& table, double alpha,
                                         Tolerance tol = {});

struct HoneycombCertificate {
  std::string norm_id;
  double alpha = 0.5;
  bool certified = false;
  // Certified bound: averages of perimeter^(2*alpha) over admissible tilings
  // are at least 4^alpha * A(6)^alpha (log form when alpha == 0).
  double bound_value = 0.0;
  ConvexPolygon isoperimetrix_disk;
  ConvexPolygon hexagon;  // minimum-area hexagon about the isoperimetrix
  DowkerTable table;
  std::vector<DowkerReport> weak_reports;  // anchors m = 3, 4, 5
};

// Finite verification pipeline for a polygonal norm disk: isoperimetrix ->
// circumscribed-area table up to its edge count -> weak alpha-Dowker check.
// n_max = 0 selects max(edge count, 8) automatically.
HoneycombCertificate honeycomb_certificate(const NormDisk& M, double alpha, int n_max = 0,
                                           Tolerance tol = {});

// Stability radius for the Euclidean disk at alpha = 1/2, from the closed-form
// circumscribed areas at n = 5, 6, 7.
double stability_epsilon0();

struct StabilityGate {
  bool within = false;
  double distance = 0.0;  // Hausdorff distance after mean-support rescale
  double eps0 = 0.0;
  double applied_scale = 1.0;
};

// Rescales M so its mean support matches the unit disk's, then compares the
// Hausdorff distance against epsilon0.
StabilityGate check_stability_gate(const NormDisk& M, Tolerance tol = {});

// Smallest alpha in [0, 4] whose weak alpha-Dowker check passes (bisection to
// 1e-6); nullopt when even alpha = 4 fails.
std::optional<double> estimate_min_weak_alpha(const DowkerTable& table, Tolerance tol = {});

// Second differences of log A(n) for n in [n_from, n_to]; the table must
// cover [n_from - 1, n_to + 1].
std::vector<DowkerMargin> log_convexity_scan(const DowkerTable& table, int n_from, int n_to);

}  // namespace honeylab
