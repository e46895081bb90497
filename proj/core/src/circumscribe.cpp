#include "honeylab/circumscribe.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace honeylab {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();
// Two support lines close the region between them only when their normal
// angles differ by strictly less than pi.
constexpr double kAngleSlack = 1e-12;

// ---------------------------------------------------------------------------
// Edge-line table with O(1) "ear" areas.
//
// Choosing a cyclic subset of edges of K and extending their lines yields a
// circumscribed polygon; its area exceeds area(K) by one "ear" per pair of
// cyclically consecutive chosen edges.  ear(i, j) is the area enclosed by the
// boundary chain of K from the head of edge i to the tail of edge j and the
// two extended edge lines.  Indices live in [0, 2m) so chains can wrap once.
// ---------------------------------------------------------------------------
struct EarTable {
  int m = 0;
  std::vector<Point2> vert;     // size 2m+1 (vertex i of K at i and i+m)
  std::vector<Point2> dir;      // edge direction, size 2m
  std::vector<double> theta;    // edge normal angle, increasing, size 2m+1
  std::vector<double> pcross;   // prefix sums of cross(v_t, v_{t+1})
  std::vector<int> gap_low;     // smallest feasible predecessor index, size 2m+1
  double polygon_area = 0.0;

  explicit EarTable(const ConvexPolygon& K) {
    m = K.size();
    vert.resize(static_cast<size_t>(2 * m + 1));
    dir.resize(static_cast<size_t>(2 * m));
    theta.resize(static_cast<size_t>(2 * m + 1));
    pcross.assign(static_cast<size_t>(2 * m + 1), 0.0);
    for (int i = 0; i <= 2 * m; ++i) vert[static_cast<size_t>(i)] = K.vertex(i % m);
    for (int i = 0; i < 2 * m; ++i)
      dir[static_cast<size_t>(i)] = vert[static_cast<size_t>(i + 1)] - vert[static_cast<size_t>(i)];
    const double base = std::atan2(-dir[0].x, dir[0].y);  // outward normal of edge 0
    double prev = base;
    for (int i = 0; i < m; ++i) {
      const Point2 d = dir[static_cast<size_t>(i)];
      double a = std::atan2(-d.x, d.y);
      while (a < prev) a += 2.0 * kPi;
      theta[static_cast<size_t>(i)] = a;
      prev = a;
    }
    for (int i = m; i <= 2 * m; ++i)
      theta[static_cast<size_t>(i)] = theta[static_cast<size_t>(i - m)] + 2.0 * kPi;
    for (int i = 0; i < 2 * m; ++i)
      pcross[static_cast<size_t>(i + 1)] =
          pcross[static_cast<size_t>(i)] +
          cross(vert[static_cast<size_t>(i)], vert[static_cast<size_t>(i + 1)]);
    polygon_area = 0.5 * pcross[static_cast<size_t>(m)];

    gap_low.resize(static_cast<size_t>(2 * m + 1));
    int lo = 0;
    for (int j = 0; j <= 2 * m; ++j) {
      while (theta[static_cast<size_t>(j)] - theta[static_cast<size_t>(lo)] >= kPi - kAngleSlack)
        ++lo;
      gap_low[static_cast<size_t>(j)] = lo;
    }
  }

  bool pair_ok(int i, int j) const {
    return i < j && theta[static_cast<size_t>(j)] - theta[static_cast<size_t>(i)] < kPi - kAngleSlack;
  }

  // Intersection of the extended lines of edges i and j.
  Point2 line_intersect(int i, int j) const {
    const Point2 a = vert[static_cast<size_t>(i)], da = dir[static_cast<size_t>(i)];
    const Point2 b = vert[static_cast<size_t>(j)], db = dir[static_cast<size_t>(j)];
    const double s = cross(b - a, db) / cross(da, db);
    return a + s * da;
  }

  // i < j <= i + m, pair_ok(i, j) assumed.
  double ear(int i, int j) const {
    if (j == i + 1) return 0.0;  // adjacent edges share a vertex
    const Point2 w = line_intersect(i, j);
    const double loop = (pcross[static_cast<size_t>(j)] - pcross[static_cast<size_t>(i + 1)]) +
                        cross(vert[static_cast<size_t>(j)], w) +
                        cross(w, vert[static_cast<size_t>(i + 1)]);
    return -0.5 * loop;  // the loop runs clockwise around the ear
  }
};

// ---------------------------------------------------------------------------
// Anchored flush chains.
//
// A flush chain is f = c_0 < c_1 < ... < c_{n-1} < f + span with every
// consecutive pair (and the wrap pair (c_{n-1}, f + span)) feasible; its cost
// is the sum of ears.  The ear cost satisfies the Monge inequality
// ear(i,j) + ear(i',j') <= ear(i,j') + ear(i',j) for i <= i', j <= j' (the
// classical uncrossing bound for circumscribed tangent lines), which makes
// per-layer argmins monotone; the layer fill below exploits that, and the
// anchor search reuses optimal chains of outer anchors as corridors.
// ---------------------------------------------------------------------------
struct ChainSolution {
  double cost = kInf;
  std::vector<int> chain;  // absolute positions, chain[0] = anchor
};

class AnchorSolver {
 public:
  AnchorSolver(const EarTable& E, int n, int span)
      : E_(E),
        n_(n),
        span_(span),
        dp_(static_cast<size_t>(n) * static_cast<size_t>(span), kInf),
        par_(static_cast<size_t>(n) * static_cast<size_t>(span), -1) {}

  // lo/hi: inclusive corridor bounds per layer (ignored for layer 0).  The
  // scratch rows are reused across calls; every cell a layer reads was
  // written by the previous layer's fill because the read window equals the
  // previous write window exactly.
  ChainSolution solve(int f, const std::vector<int>& lo, const std::vector<int>& hi) const {
    dp(0, 0) = 0.0;
    for (int t = 1; t < n_; ++t) {
      const int el = std::max(lo[static_cast<size_t>(t)], f + t);
      const int eh = std::min(hi[static_cast<size_t>(t)], f + span_ - (n_ - t));
      if (el > eh) return ChainSolution{};  // corridor collapsed: no chain
      int al, ah;
      if (t == 1) {
        al = ah = f;  // layer 0 holds the anchor only
      } else {
        al = std::max(lo[static_cast<size_t>(t - 1)], f + t - 1);
        ah = std::min(hi[static_cast<size_t>(t - 1)], f + span_ - (n_ - t + 1));
      }
      fill_layer(t, f, el, eh, al, ah);
    }
    // Close the cycle against the wrapped anchor at f + span.
    ChainSolution best;
    const int wrap_pos = f + span_;
    const int el = std::max(lo[static_cast<size_t>(n_ - 1)], E_.gap_low[static_cast<size_t>(wrap_pos)]);
    const int eh = std::min(hi[static_cast<size_t>(n_ - 1)], wrap_pos - 1);
    int tail = -1;
    for (int e = std::max(el, f + n_ - 1); e <= eh; ++e) {
      const double base = (n_ == 1) ? (e == f ? 0.0 : kInf) : dp(n_ - 1, e - f);
      if (base == kInf) continue;
      const double total = base + E_.ear(e, wrap_pos);
      if (total < best.cost) {
        best.cost = total;
        tail = e;
      }
    }
    if (tail < 0) return best;
    std::vector<int> chain(static_cast<size_t>(n_));
    int e = tail;
    for (int t = n_ - 1; t >= 1; --t) {
      chain[static_cast<size_t>(t)] = e;
      e = par(t, e - f);
    }
    chain[0] = f;
    best.chain = std::move(chain);
    return best;
  }

  std::vector<int> full_lo(int f) const {
    std::vector<int> lo(static_cast<size_t>(n_));
    for (int t = 0; t < n_; ++t) lo[static_cast<size_t>(t)] = f + t;
    return lo;
  }
  std::vector<int> full_hi(int f) const {
    std::vector<int> hi(static_cast<size_t>(n_));
    for (int t = 0; t < n_; ++t) hi[static_cast<size_t>(t)] = f + span_ - (n_ - t);
    return hi;
  }

 private:
  double& dp(int t, int off) const {
    return dp_[static_cast<size_t>(t) * static_cast<size_t>(span_) + static_cast<size_t>(off)];
  }
  int& par(int t, int off) const {
    return par_[static_cast<size_t>(t) * static_cast<size_t>(span_) + static_cast<size_t>(off)];
  }

  // Monotone-argmin divide and conquer over one DP layer.
  void fill_layer(int t, int f, int el, int eh, int al, int ah) const {
    if (el > eh) return;
    const int em = el + (eh - el) / 2;
    const int cl = std::max(al, E_.gap_low[static_cast<size_t>(em)]);
    const int ch = std::min(ah, em - 1);
    double best = kInf;
    int arg = -1;
    for (int e2 = cl; e2 <= ch; ++e2) {
      const double b = dp(t - 1, e2 - f);
      if (b == kInf) continue;
      const double c = b + E_.ear(e2, em);
      if (c < best) {
        best = c;
        arg = e2;
      }
    }
    dp(t, em - f) = best;
    par(t, em - f) = arg;
    const int left_hi = (arg >= 0) ? arg : ah;
    const int right_lo = (arg >= 0) ? arg : al;
    fill_layer(t, f, el, em - 1, al, left_hi);
    fill_layer(t, f, em + 1, eh, right_lo, ah);
  }

  const EarTable& E_;
  int n_;
  int span_;
  mutable std::vector<double> dp_;
  mutable std::vector<int> par_;
};

bool chain_lex_less(const std::vector<int>& a, const std::vector<int>& b, int m) {
  std::vector<int> sa, sb;
  for (int v : a) sa.push_back(v % m);
  for (int v : b) sb.push_back(v % m);
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  return sa < sb;
}

void merge_best(ChainSolution& best, const ChainSolution& cand, int m) {
  if (cand.cost == kInf) return;
  if (cand.cost < best.cost ||
      (cand.cost == best.cost && !best.chain.empty() && chain_lex_less(cand.chain, best.chain, m)))
    best = cand;
}

// Anchor divide and conquer: optimal chains move monotonically with the
// anchor, so the chains found at the interval ends bound the search corridor
// for the midpoint anchor.
void anchor_rec(const AnchorSolver& solver, const EarTable& E, int n, int fl, int fr,
                const std::vector<int>& CL, const std::vector<int>& CR, ChainSolution& best) {
  if (fr - fl <= 1) return;
  const int fm = fl + (fr - fl) / 2;
  std::vector<int> lo(static_cast<size_t>(n)), hi(static_cast<size_t>(n));
  for (int t = 0; t < n; ++t) {
    lo[static_cast<size_t>(t)] = CL.empty() ? fm + t : std::max(CL[static_cast<size_t>(t)], fm + t);
    hi[static_cast<size_t>(t)] = CR.empty() ? fm + E.m - (n - t)
                                            : std::min(CR[static_cast<size_t>(t)], fm + E.m - (n - t));
  }
  const ChainSolution sol = solver.solve(fm, lo, hi);
  merge_best(best, sol, E.m);
  anchor_rec(solver, E, n, fl, fm, CL, sol.chain.empty() ? CR : sol.chain, best);
  anchor_rec(solver, E, n, fm, fr, sol.chain.empty() ? CL : sol.chain, CR, best);
}

// Best flush chain over all anchors.  Some chosen edge always has its normal
// in [theta_0, theta_0 + pi) (consecutive chosen normals are < pi apart), so
// anchors beyond that half-turn are redundant.  Regular polygons are anchor
// invariant: anchor 0 suffices.
ChainSolution best_flush_cycle(const EarTable& E, int n, bool regular) {
  AnchorSolver solver(E, n, E.m);
  if (regular) return solver.solve(0, solver.full_lo(0), solver.full_hi(0));
  int h = 1;
  while (h < E.m && E.theta[static_cast<size_t>(h)] - E.theta[0] < kPi - kAngleSlack) ++h;
  ChainSolution best;
  const ChainSolution first = solver.solve(0, solver.full_lo(0), solver.full_hi(0));
  merge_best(best, first, E.m);
  if (h >= 2) {
    const ChainSolution last =
        solver.solve(h - 1, solver.full_lo(h - 1), solver.full_hi(h - 1));
    merge_best(best, last, E.m);
    anchor_rec(solver, E, n, 0, h - 1,
               first.chain.empty() ? std::vector<int>() : first.chain,
               last.chain.empty() ? std::vector<int>() : last.chain, best);
  }
  return best;
}

// ---------------------------------------------------------------------------
// Vertex-tangent ("slack") sides.
//
// A candidate with one non-flush side touches K at a vertex v between flush
// neighbours p (before v) and s (after v).  The two ears around the tangent
// line are evaluated in O(1); the area is unimodal in the line angle, so a
// golden-section search over the admissible angle window is exact enough at
// 1e-12 angular width.
// ---------------------------------------------------------------------------
struct SlackGeometry {
  const EarTable& E;

  // Ear area between flush edge p and the tangent line at vertex index v
  // (absolute position, p < v <= p + m), for tangent direction angle phi.
  // Returns the pair (ear before v, ear after v) against flush edge s >= v.
  double ears(int p, int v, int s, double phi) const {
    const Point2 tangent_dir{-std::sin(phi), std::cos(phi)};  // normal at angle phi
    const Point2 vv = E.vert[static_cast<size_t>(v)];
    // Intersections of the tangent line with the two flush edge lines.
    const Point2 a1 = E.vert[static_cast<size_t>(p)], d1 = E.dir[static_cast<size_t>(p)];
    const Point2 a2 = E.vert[static_cast<size_t>(s)], d2 = E.dir[static_cast<size_t>(s)];
    const double c1 = cross(d1, tangent_dir), c2 = cross(d2, tangent_dir);
    if (std::fabs(c1) < 1e-300 || std::fabs(c2) < 1e-300) return kInf;
    const Point2 w1 = a1 + (cross(vv - a1, tangent_dir) / c1) * d1;
    const Point2 w2 = a2 + (cross(vv - a2, tangent_dir) / c2) * d2;
    // Ear 1: chain head(p) .. v, then back along the tangent to w1.
    const double loop1 = (E.pcross[static_cast<size_t>(v)] - E.pcross[static_cast<size_t>(p + 1)]) +
                         cross(E.vert[static_cast<size_t>(v)], w1) +
                         cross(w1, E.vert[static_cast<size_t>(p + 1)]);
    // Ear 2: chain v .. tail(s), then back along edge s's line to w2.
    const double loop2 = (E.pcross[static_cast<size_t>(s)] - E.pcross[static_cast<size_t>(v)]) +
                         cross(E.vert[static_cast<size_t>(s)], w2) +
                         cross(w2, E.vert[static_cast<size_t>(v)]);
    return -0.5 * (loop1 + loop2);
  }

  // Admissible angle window for the tangent at vertex v with neighbours p, s.
  // Works in unwrapped angles: edges v-1 and v bound the vertex cone.
  bool window(int p, int v, int s, double* lo, double* hi) const {
    const double a = unwrapped_theta(v - 1);
    const double b = unwrapped_theta(v);
    const double tp = unwrapped_theta_at(p);
    const double ts = unwrapped_theta_at(s);
    *lo = std::fmax(a, ts - kPi) + kAngleSlack;
    *hi = std::fmin(b, tp + kPi) - kAngleSlack;
    return *lo < *hi;
  }

  double unwrapped_theta(int idx) const {
    // theta is stored for [0, 2m]; indices may step one below 0.
    if (idx >= 0) return E.theta[static_cast<size_t>(idx)];
    return E.theta[static_cast<size_t>(idx + E.m)] - 2.0 * kPi;
  }
  double unwrapped_theta_at(int idx) const { return E.theta[static_cast<size_t>(idx)]; }

  // Golden-section minimisation of the two-ear area over the angle window.
  double optimise(int p, int v, int s, double* best_phi) const {
    double lo, hi;
    if (!window(p, v, s, &lo, &hi)) return kInf;
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo, b = hi;
    double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
    double f1 = ears(p, v, s, x1), f2 = ears(p, v, s, x2);
    while (b - a > 1e-12) {
      if (f1 <= f2) {
        b = x2;
        x2 = x1;
        f2 = f1;
        x1 = b - gr * (b - a);
        f1 = ears(p, v, s, x1);
      } else {
        a = x1;
        x1 = x2;
        f1 = f2;
        x2 = a + gr * (b - a);
        f2 = ears(p, v, s, x2);
      }
    }
    const double mid = 0.5 * (a + b);
    const double fm = ears(p, v, s, mid);
    if (best_phi) *best_phi = mid;
    return fm;
  }
};

struct SlackCandidate {
  double cost = kInf;          // total ear cost of the full cycle
  int vertex = -1;             // tangency vertex (absolute position)
  double phi = 0.0;            // tangent normal angle
  std::vector<int> flush;      // the n-1 flush positions, ascending from s
};

// Exact vertex-tangent scan: path DP anchored at each first flush edge s
// after the tangency vertex.  Used for small edge counts.
void slack_scan_exact(const EarTable& E, int n_lo, int n_hi,
                      std::vector<SlackCandidate>& best_by_n) {
  const int m = E.m;
  const int layers = n_hi - 1;  // flush edges in a slack cycle of size n
  SlackGeometry geom{E};
  std::vector<std::vector<double>> dp(static_cast<size_t>(layers + 1),
                                      std::vector<double>(static_cast<size_t>(2 * m), kInf));
  std::vector<std::vector<int>> par(static_cast<size_t>(layers + 1),
                                    std::vector<int>(static_cast<size_t>(2 * m), -1));
  for (int s = 0; s < m; ++s) {
    for (int t = 1; t <= layers; ++t)
      std::fill(dp[static_cast<size_t>(t)].begin(), dp[static_cast<size_t>(t)].end(), kInf);
    dp[1][static_cast<size_t>(s)] = 0.0;
    par[1][static_cast<size_t>(s)] = -1;
    for (int t = 2; t <= layers; ++t) {
      for (int e = s + t - 1; e < s + m && e < 2 * m; ++e) {
        double best = kInf;
        int arg = -1;
        const int cl = std::max(s, E.gap_low[static_cast<size_t>(e)]);
        for (int e2 = cl; e2 < e; ++e2) {
          const double b = dp[static_cast<size_t>(t - 1)][static_cast<size_t>(e2)];
          if (b == kInf) continue;
          const double c = b + E.ear(e2, e);
          if (c < best) {
            best = c;
            arg = e2;
          }
        }
        dp[static_cast<size_t>(t)][static_cast<size_t>(e)] = best;
        par[static_cast<size_t>(t)][static_cast<size_t>(e)] = arg;
      }
    }
    // Tangency vertices v <= s: the slack side sits between flush p (last
    // chain edge, wrapped) and flush s.  v ranges over the wrap gap.
    for (int n = n_lo; n <= n_hi; ++n) {
      const int t = n - 1;
      if (t < 1) continue;
      for (int p = s + t - 1; p < s + m && p < 2 * m; ++p) {
        const double base = dp[static_cast<size_t>(t)][static_cast<size_t>(p)];
        if (base == kInf) continue;
        // Tangency vertices between edge p and the wrapped edge s + m.
        for (int v = p + 1; v <= s + m; ++v) {
          const double slack = geom.optimise(p, v, s + m, nullptr);
          if (slack == kInf) continue;
          const double total = base + slack;
          SlackCandidate& cur = best_by_n[static_cast<size_t>(n)];
          if (total < cur.cost) {
            cur.cost = total;
            cur.vertex = v % m;
            geom.optimise(p, v, s + m, &cur.phi);
            // Recover flush positions.
            std::vector<int> flush(static_cast<size_t>(t));
            int e = p;
            for (int tt = t; tt >= 1; --tt) {
              flush[static_cast<size_t>(tt - 1)] = e;
              e = par[static_cast<size_t>(tt)][static_cast<size_t>(e)];
            }
            cur.flush = std::move(flush);
          }
        }
      }
    }
  }
}

// Localized vertex-tangent pass for dense polygons: take the best flush
// (n-1)-chain and splice a vertex tangent into each of its gaps.
void slack_from_chain(const EarTable& E, const ChainSolution& chain_nm1, int n,
                      std::vector<SlackCandidate>& best_by_n) {
  if (chain_nm1.cost == kInf || chain_nm1.chain.empty()) return;
  const int m = E.m;
  SlackGeometry geom{E};
  const int t = n - 1;
  const std::vector<int>& c = chain_nm1.chain;
  for (int g = 0; g < t; ++g) {
    const int p = c[static_cast<size_t>(g)];
    const int s = (g + 1 < t) ? c[static_cast<size_t>(g + 1)] : c[0] + m;
    const double gap_ear = E.ear(p, s);
    for (int v = p + 1; v <= s; ++v) {
      const double slack = geom.optimise(p, v, s, nullptr);
      if (slack == kInf) continue;
      const double total = chain_nm1.cost - gap_ear + slack;
      SlackCandidate& cur = best_by_n[static_cast<size_t>(n)];
      if (total < cur.cost) {
        cur.cost = total;
        cur.vertex = v % m;
        geom.optimise(p, v, s, &cur.phi);
        std::vector<int> flush;
        for (int idx = g + 1; idx < t; ++idx) flush.push_back(c[static_cast<size_t>(idx)]);
        for (int idx = 0; idx <= g; ++idx) flush.push_back(c[static_cast<size_t>(idx)] + m);
        cur.flush = std::move(flush);
      }
    }
  }
}

// ---------------------------------------------------------------------------
// Result assembly.
// ---------------------------------------------------------------------------
struct Line {
  Point2 point;
  Point2 direction;
  int source_edge = -1;  // -1 for a vertex tangent
};

Point2 intersect_lines(const Line& a, const Line& b) {
  const double s = cross(b.point - a.point, b.direction) / cross(a.direction, b.direction);
  return a.point + s * a.direction;
}

CircumscribeResult assemble(const ConvexPolygon& K, const std::vector<Line>& lines,
                            double min_area) {
  const int n = static_cast<int>(lines.size());
  std::vector<Point2> verts(static_cast<size_t>(n));
  std::vector<int> flush(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    verts[static_cast<size_t>(i)] = intersect_lines(lines[static_cast<size_t>(i)],
                                                    lines[static_cast<size_t>((i + 1) % n)]);
    // Side i of the polygon (vertex i -> i+1) lies on line i+1.
    flush[static_cast<size_t>(i)] = lines[static_cast<size_t>((i + 1) % n)].source_edge;
  }
  // Canonical start without dropping vertices, keeping sides aligned.
  int start = 0;
  for (int i = 1; i < n; ++i) {
    const Point2 a = verts[static_cast<size_t>(i)], b = verts[static_cast<size_t>(start)];
    if (a.x < b.x || (a.x == b.x && a.y < b.y)) start = i;
  }
  std::rotate(verts.begin(), verts.begin() + start, verts.end());
  std::rotate(flush.begin(), flush.begin() + start, flush.end());
  CircumscribeResult res;
  res.polygon = ConvexPolygon{std::move(verts)};
  res.min_area = min_area;
  res.flush_edges = std::move(flush);
  res.slack_side_used = false;
  for (int fe : res.flush_edges)
    if (fe < 0) res.slack_side_used = true;
  (void)K;
  return res;
}

CircumscribeResult result_from_flush(const ConvexPolygon& K, const EarTable& E,
                                     const ChainSolution& sol) {
  std::vector<Line> lines;
  lines.reserve(sol.chain.size());
  for (int c : sol.chain) {
    const int e = c % E.m;
    lines.push_back({E.vert[static_cast<size_t>(e)], E.dir[static_cast<size_t>(e)], e});
  }
  return assemble(K, lines, E.polygon_area + sol.cost);
}

CircumscribeResult result_from_slack(const ConvexPolygon& K, const EarTable& E,
                                     const SlackCandidate& cand) {
  std::vector<Line> lines;
  for (int c : cand.flush) {
    const int e = c % E.m;
    lines.push_back({E.vert[static_cast<size_t>(e)], E.dir[static_cast<size_t>(e)], e});
  }
  // Insert the tangent line after the last flush edge (it precedes the wrap).
  const Point2 v = E.vert[static_cast<size_t>(cand.vertex)];
  lines.push_back({v, {-std::sin(cand.phi), std::cos(cand.phi)}, -1});
  return assemble(K, lines, E.polygon_area + cand.cost);
}

// ---------------------------------------------------------------------------
// Triangles (n = 3).
//
// The flush chain DP can be infeasible for n = 3 (a square admits no three
// edge lines with pairwise normal gaps < pi), and the optimum may need
// vertex-tangent sides.  A minimum triangle always admits a configuration
// with at least one side flush and every side's midpoint on K; for a side
// tangent at a vertex only, that vertex must be the side's midpoint.  This
// pins down closed forms for the remaining patterns:
//   (base flush e, A tangent at va, B flush b): reflect the base line
//     through va; the image meets line b at the far endpoint of side A.
//   (base flush e, A tangent at va, B tangent at vb): va and vb must be
//     equidistant from the base line; the apex runs along a parallel line
//     and the area is a quadratic in that one parameter.
// ---------------------------------------------------------------------------
struct TriangleCandidate {
  double area = kInf;
  std::vector<Line> lines;
};

// Support check: a tangent with normal angle phi supports K at vertex v iff
// phi lies in v's normal cone.
bool in_vertex_cone(const EarTable& E, int v, double phi) {
  SlackGeometry geom{E};
  const double a = geom.unwrapped_theta(v - 1), b = E.theta[static_cast<size_t>(v)];
  double p = phi;
  while (p < a) p += 2.0 * kPi;
  while (p > a + 2.0 * kPi) p -= 2.0 * kPi;
  return p >= a - 1e-12 && p <= b + 1e-12;
}

double tri_area(Point2 a, Point2 b, Point2 c) { return 0.5 * std::fabs(cross(b - a, c - a)); }

// Angles of the three line normals must have pairwise cyclic gaps < pi.
bool normals_span(double t0, double t1, double t2) {
  double a[3] = {t0, t1, t2};
  std::sort(a, a + 3);
  const double g0 = a[1] - a[0], g1 = a[2] - a[1], g2 = 2.0 * kPi - (a[2] - a[0]);
  return g0 > kAngleSlack && g1 > kAngleSlack && g2 > kAngleSlack && g0 < kPi - kAngleSlack &&
         g1 < kPi - kAngleSlack && g2 < kPi - kAngleSlack;
}

double normal_angle(Point2 direction) { return std::atan2(-direction.x, direction.y); }

void consider_triangle(const EarTable& E, const std::vector<Line>& lines,
                       TriangleCandidate& best) {
  const double t0 = normal_angle(lines[0].direction);
  const double t1 = normal_angle(lines[1].direction);
  const double t2 = normal_angle(lines[2].direction);
  if (!normals_span(t0, t1, t2)) return;
  const Point2 p01 = intersect_lines(lines[0], lines[1]);
  const Point2 p12 = intersect_lines(lines[1], lines[2]);
  const Point2 p20 = intersect_lines(lines[2], lines[0]);
  const double a = tri_area(p01, p12, p20);
  if (a < best.area) {
    best.area = a;
    // Order the lines counterclockwise by normal angle for assembly.
    std::vector<Line> ordered = lines;
    std::sort(ordered.begin(), ordered.end(), [](const Line& x, const Line& y) {
      return normal_angle(x.direction) < normal_angle(y.direction);
    });
    best.lines = ordered;
  }
}

void triangle_patterns(const EarTable& E, const std::vector<int>& base_edges,
                       const std::vector<int>& va_set, const std::vector<int>& vb_or_b_set,
                       TriangleCandidate& best) {
  const int m = E.m;
  for (int e : base_edges) {
    const Line base{E.vert[static_cast<size_t>(e)], E.dir[static_cast<size_t>(e)], e};
    const Point2 nb = perp(base.direction);  // inward-ish; only offsets matter
    const double cb = dot(nb, base.point);
    for (int va : va_set) {
      const Point2 pva = E.vert[static_cast<size_t>(va)];
      // --- pattern (flush base, tangent at va, flush at b) ---
      for (int b : vb_or_b_set) {
        if (b == e) continue;
        const Line lb{E.vert[static_cast<size_t>(b)], E.dir[static_cast<size_t>(b)], b};
        // Reflect line b through va, intersect with the base line: that is the
        // base-side endpoint of side A; A runs through va.
        const Point2 nl = perp(lb.direction);
        const double cl = dot(nl, lb.point);
        const double cref = 2.0 * dot(nl, pva) - cl;  // reflected line offset
        const double det = cross(nb, nl);
        if (std::fabs(det) < 1e-14) continue;
        // Solve nb.w = cb, nl.w = cref.
        const Point2 w1{(cb * nl.y - cref * nb.y) / det, (nb.x * cref - nl.x * cb) / det};
        const Point2 d = pva - w1;
        if (norm(d) < 1e-14) continue;
        // Orientation is settled by trying both signs against the cone.
        for (int sign = 0; sign < 2; ++sign) {
          const Point2 dd = sign ? -1.0 * d : d;
          const double phi = normal_angle(dd);
          if (!in_vertex_cone(E, va, phi)) continue;
          consider_triangle(E, {base, {pva, dd, -1}, lb}, best);
        }
      }
      // --- pattern (flush base, tangents at va and vb) ---
      for (int vb : vb_or_b_set) {
        if (vb == va) continue;
        const Point2 pvb = E.vert[static_cast<size_t>(vb)];
        const double da = dot(nb, pva), db = dot(nb, pvb);
        const double scale = std::fabs(cb) + std::fabs(da) + std::fabs(db);
        if (std::fabs(da - db) > 1e-9 * (scale + 1.0)) continue;
        // Apex runs on the line nb.w = 2*da - cb; area is quadratic in the
        // position along it.  Candidates: parabola vertex + cone limits.
        const double capex = 2.0 * da - cb;
        const Point2 w0 = ((capex - cb) / dot(nb, nb)) * nb + base.point;  // foot on apex line
        const Point2 dirl = base.direction;
        auto apex_at = [&](double t) { return w0 + t * dirl; };
        auto area_at = [&](double t) {
          const Point2 w = apex_at(t);
          const Point2 u1 = 2.0 * pva - w;  // base endpoint under A
          const Point2 u3 = 2.0 * pvb - w;  // base endpoint under B
          return tri_area(w, u1, u3);
        };
        // area(t) = |q(t)|/2 with q quadratic; minimise on a coarse bracket
        // then refine by golden section (the support windows clip invalid t).
        double tlo = -4.0 * (norm(pva) + norm(pvb) + norm(w0) + 1.0);
        double thi = -tlo;
        const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
        for (int it = 0; it < 200; ++it) {
          const double x1 = thi - gr * (thi - tlo), x2 = tlo + gr * (thi - tlo);
          if (area_at(x1) <= area_at(x2))
            thi = x2;
          else
            tlo = x1;
        }
        const double t = 0.5 * (tlo + thi);
        const Point2 w = apex_at(t);
        const Point2 dA = pva - w, dB = w - pvb;
        if (norm(dA) < 1e-14 || norm(dB) < 1e-14) continue;
        for (int sa = 0; sa < 2; ++sa)
          for (int sb = 0; sb < 2; ++sb) {
            const Point2 ddA = sa ? -1.0 * dA : dA;
            const Point2 ddB = sb ? -1.0 * dB : dB;
            if (!in_vertex_cone(E, va, normal_angle(ddA))) continue;
            if (!in_vertex_cone(E, vb, normal_angle(ddB))) continue;
            consider_triangle(E, {base, {pva, ddA, -1}, {pvb, ddB, -1}}, best);
          }
      }
    }
  }
}

CircumscribeResult solve_triangle(const ConvexPolygon& K, const EarTable& E, bool regular) {
  const int m = E.m;
  TriangleCandidate best;

  // All-flush candidates via the chain solver.
  const ChainSolution flush = best_flush_cycle(E, 3, regular);
  CircumscribeResult flush_res;
  bool have_flush = flush.cost != kInf;
  if (have_flush) flush_res = result_from_flush(K, E, flush);

  std::vector<int> all(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) all[static_cast<size_t>(i)] = i;

  if (m <= 192) {
    triangle_patterns(E, all, all, all, best);
  } else {
    // Dense polygons: search windows around the flush optimum (roles rotate
    // through all three chain slots).  Regular inputs keep a base at edge 0.
    std::vector<int> bases, vset;
    auto add_window = [&](std::vector<int>& dst, int center, int w) {
      for (int d = -w; d <= w; ++d) dst.push_back(((center + d) % m + m) % m);
    };
    const int W = 48;
    if (have_flush) {
      for (int c : flush.chain) {
        add_window(bases, c % m, W);
        add_window(vset, c % m, W);
      }
    }
    if (regular) add_window(bases, 0, W);
    std::sort(bases.begin(), bases.end());
    bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
    std::sort(vset.begin(), vset.end());
    vset.erase(std::unique(vset.begin(), vset.end()), vset.end());
    triangle_patterns(E, bases, vset, vset, best);
  }

  if (have_flush && flush_res.min_area <= best.area)
    return flush_res;
  if (best.area == kInf) {
    if (have_flush) return flush_res;
    fail(ErrorCode::DegenerateInput, "no circumscribed triangle found");
  }
  return assemble(K, best.lines, best.area);
}

bool chain_feasible_for_slack(int n, int m) { return n >= 4 && n - 1 <= m; }

}  // namespace

double DowkerTable::value(int n) const {
  if (!covers(n)) fail(ErrorCode::OutOfRange, "table does not cover requested n");
  return values[static_cast<size_t>(n - n_min)];
}

double disk_reference_area(int n) {
  if (n < 3) fail(ErrorCode::InvalidN, "need n >= 3");
  return n * std::tan(kPi / n);
}

double regular_gon_reference_area(int k, int n) {
  if (k < 2) fail(ErrorCode::InvalidN, "need k >= 2");
  if (n < 3 || n > 2 * k) fail(ErrorCode::OutOfRange, "need 3 <= n <= 2k");
  const int sides = 2 * k;
  if (n == sides) return sides * std::tan(kPi / sides);
  if (n == 3) {
    const int q = sides / 3, r = sides % 3;
    if (r == 0) return 3.0 * std::tan(kPi / 3.0);
    const double c = 2.0 / std::pow(std::cos(kPi / sides), 2);
    if (r == 1) return c * (2.0 * std::sin(q * kPi / k) + std::sin((q + 1) * kPi / k));
    return c * (std::sin(q * kPi / k) + 2.0 * std::sin((q + 1) * kPi / k));
  }
  const int q = sides / n, r = sides % n;
  return (n - r) * std::tan(kPi * q / sides) + r * std::tan(kPi * (q + 1) / sides);
}

namespace {

CircumscribeResult identity_result(const ConvexPolygon& K) {
  CircumscribeResult res;
  res.polygon = K;
  res.min_area = area(K);
  res.flush_edges.resize(static_cast<size_t>(K.size()));
  for (int i = 0; i < K.size(); ++i) res.flush_edges[static_cast<size_t>(i)] = i;
  res.slack_side_used = false;
  return res;
}

// Shared driver: best circumscribed n-gon given a prebuilt ear table.  The
// optional previous-chain argument feeds the localized slack pass for dense
// polygons (used by the table builder to avoid recomputing chains).
CircumscribeResult solve_one(const ConvexPolygon& K, const EarTable& E, int n, bool regular,
                             bool symmetric, const ChainSolution* chain_nm1_hint) {
  const int m = E.m;
  if (n >= m) return identity_result(K);
  if (n == 3) return solve_triangle(K, E, regular);

  const ChainSolution flush = best_flush_cycle(E, n, regular);

  // Vertex-tangent pass.  Skipped when a flush optimum is guaranteed:
  // regular disks (n >= 4) and origin-symmetric disks at even n.
  const bool skip_slack = regular || (symmetric && n % 2 == 0);
  SlackCandidate slack;
  if (!skip_slack && chain_feasible_for_slack(n, m)) {
    std::vector<SlackCandidate> by_n(static_cast<size_t>(n + 1));
    if (m <= 96) {
      slack_scan_exact(E, n, n, by_n);
    } else {
      ChainSolution prev;
      if (chain_nm1_hint != nullptr)
        prev = *chain_nm1_hint;
      else if (n - 1 >= 3)
        prev = best_flush_cycle(E, n - 1, regular);
      slack_from_chain(E, prev, n, by_n);
    }
    slack = by_n[static_cast<size_t>(n)];
  }

  if (flush.cost == kInf && slack.cost == kInf)
    fail(ErrorCode::DegenerateInput, "no circumscribed polygon found");
  if (slack.cost < flush.cost) return result_from_slack(K, E, slack);
  return result_from_flush(K, E, flush);
}

}  // namespace

CircumscribeResult min_area_circumscribed(const ConvexPolygon& K, int n, Tolerance tol) {
  if (n < 3) fail(ErrorCode::InvalidN, "need n >= 3");
  const ConvexPolygon P = canonicalize(K.vertices, tol);
  if (n >= P.size()) return identity_result(P);
  const EarTable E(P);
  const bool regular = is_regular(P, tol);
  const bool symmetric = is_origin_symmetric(P, tol);
  return solve_one(P, E, n, regular, symmetric, nullptr);
}

CircumscribeResult min_area_symmetric_circumscribed(const ConvexPolygon& K, int n,
                                                    Tolerance tol) {
  if (n < 4) fail(ErrorCode::InvalidN, "need n >= 4");
  if (n % 2 != 0) fail(ErrorCode::OddN, "symmetric circumscription needs even n");
  const ConvexPolygon P = canonicalize(K.vertices, tol);
  if (!is_origin_symmetric(P, tol))
    fail(ErrorCode::DegenerateInput, "polygon must be origin-symmetric");
  if (n >= P.size()) return identity_result(P);
  const EarTable E(P);
  const int m = E.m;
  const int half = n / 2;
  const bool regular = is_regular(P, tol);

  // Choose half/2 edges in a half cycle; the other half is the antipodal
  // copy.  Same chain machinery with span m/2 and doubled cost.
  AnchorSolver solver(E, half, m / 2);
  ChainSolution best;
  if (regular) {
    best = solver.solve(0, solver.full_lo(0), solver.full_hi(0));
  } else {
    const int h = m / 2;
    const ChainSolution first = solver.solve(0, solver.full_lo(0), solver.full_hi(0));
    merge_best(best, first, m);
    if (h >= 2) {
      const ChainSolution last = solver.solve(h - 1, solver.full_lo(h - 1), solver.full_hi(h - 1));
      merge_best(best, last, m);
      struct Rec {
        const AnchorSolver& sv;
        const EarTable& E;
        int n;
        ChainSolution& best;
        void operator()(int fl, int fr, const std::vector<int>& CL, const std::vector<int>& CR) {
          if (fr - fl <= 1) return;
          const int fm = fl + (fr - fl) / 2;
          std::vector<int> lo(static_cast<size_t>(n)), hi(static_cast<size_t>(n));
          for (int t = 0; t < n; ++t) {
            lo[static_cast<size_t>(t)] =
                CL.empty() ? fm + t : std::max(CL[static_cast<size_t>(t)], fm + t);
            hi[static_cast<size_t>(t)] = CR.empty()
                                             ? fm + E.m / 2 - (n - t)
                                             : std::min(CR[static_cast<size_t>(t)], fm + E.m / 2 - (n - t));
          }
          const ChainSolution sol = sv.solve(fm, lo, hi);
          merge_best(best, sol, E.m);
          (*this)(fl, fm, CL, sol.chain.empty() ? CR : sol.chain);
          (*this)(fm, fr, sol.chain.empty() ? CL : sol.chain, CR);
        }
      } rec{solver, E, half, best};
      rec(0, h - 1, first.chain, last.chain);
    }
  }
  if (best.cost == kInf) fail(ErrorCode::DegenerateInput, "no symmetric circumscribed polygon");

  std::vector<Line> lines;
  for (int c : best.chain) {
    const int e = c % m;
    lines.push_back({E.vert[static_cast<size_t>(e)], E.dir[static_cast<size_t>(e)], e});
  }
  for (int c : best.chain) {
    const int e = (c + m / 2) % m;
    lines.push_back({E.vert[static_cast<size_t>(e)], E.dir[static_cast<size_t>(e)], e});
  }
  return assemble(P, lines, E.polygon_area + 2.0 * best.cost);
}

DowkerTable dowker_table(const ConvexPolygon& K, int n_max, Tolerance tol,
                         const std::string& disk_id) {
  if (n_max < 3) fail(ErrorCode::InvalidN, "table needs n_max >= 3");
  const ConvexPolygon P = canonicalize(K.vertices, tol);
  const EarTable E(P);
  const bool regular = is_regular(P, tol);
  const bool symmetric = is_origin_symmetric(P, tol);

  DowkerTable table;
  table.disk_id = disk_id;
  table.n_min = 3;
  table.n_max = n_max;
  table.disk_area = E.polygon_area;
  table.tol = tol;
  table.values.resize(static_cast<size_t>(n_max - 2));

  ChainSolution prev_chain;  // flush chain for n-1, feeds the localized slack pass
  for (int n = 3; n <= n_max; ++n) {
    if (n >= P.size()) {
      table.values[static_cast<size_t>(n - 3)] = E.polygon_area;
      continue;
    }
    if (n == 3) {
      table.values[0] = solve_triangle(P, E, regular).min_area;
      if (P.size() > 96 && !regular && !symmetric)
        prev_chain = best_flush_cycle(E, 3, regular);  // seed for n = 4 tangent pass
      continue;
    }
    const ChainSolution flush = best_flush_cycle(E, n, regular);
    double value = E.polygon_area + flush.cost;
    const bool skip_slack = regular || (symmetric && n % 2 == 0);
    if (!skip_slack && chain_feasible_for_slack(n, P.size())) {
      std::vector<SlackCandidate> by_n(static_cast<size_t>(n + 1));
      if (P.size() <= 96)
        slack_scan_exact(E, n, n, by_n);
      else
        slack_from_chain(E, prev_chain, n, by_n);
      if (by_n[static_cast<size_t>(n)].cost + E.polygon_area < value)
        value = by_n[static_cast<size_t>(n)].cost + E.polygon_area;
    }
    table.values[static_cast<size_t>(n - 3)] = value;
    prev_chain = flush;
  }
  return table;
}

}  // namespace honeylab
