#include <cmath>
#include <cstdio>

#include <doctest.h>

#include "honeylab/dowker.hpp"
#include "test_support.hpp"

using namespace honeylab;

namespace {
constexpr double kPi = 3.14159265358979323846;

DowkerTable regular_table(int k, int n_max_cap = 0) {
  const int n_max = n_max_cap > 0 ? n_max_cap : 2 * k;
  return dowker_table(regular_gon(2 * k), std::max(n_max, 8), {}, "regular");
}
}  // namespace

TEST_CASE("stability constant value and purity") {
  const double e0 = stability_epsilon0();
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", e0);
  CHECK(std::string(buf) == "0.002623");
  CHECK(e0 > 0.0);
  CHECK(e0 < 1.0);
  CHECK(stability_epsilon0() == e0);  // bit-identical on repeat
  const double a5 = 5.0 * std::tan(kPi / 5.0), a6 = 6.0 * std::tan(kPi / 6.0),
               a7 = 7.0 * std::tan(kPi / 7.0);
  const double expect = (std::sqrt(a5) + std::sqrt(a7) - 2.0 * std::sqrt(a6)) /
                        (std::sqrt(a5) + std::sqrt(a7) + 2.0 * std::sqrt(a6));
  CHECK(e0 == doctest::Approx(expect).epsilon(1e-15));
}

TEST_CASE("weak check on the octagon fails with the known margin") {
  const DowkerTable table = regular_table(4);
  const DowkerReport rep = check_weak_alpha_dowker(table, 0.5, 5);
  CHECK_FALSE(rep.verdict);
  double margin57 = 0.0;
  for (const DowkerMargin& m : rep.margins)
    if (m.m == 5 && m.n == 7) margin57 = m.value;
  const double expect = 0.5 * (std::sqrt(table.value(5)) + std::sqrt(table.value(7))) -
                        std::sqrt(table.value(6));
  CHECK(margin57 == doctest::Approx(expect).epsilon(1e-12));
  CHECK(margin57 == doctest::Approx(-5.5e-4).epsilon(0.05));
  CHECK(rep.worst_margin <= margin57);
}

TEST_CASE("weak check passes on the hexagon and the square") {
  CHECK(check_weak_alpha_dowker_all(regular_table(3), 0.5).verdict);
  CHECK(check_weak_alpha_dowker_all(regular_table(2), 0.5).verdict);
}

TEST_CASE("weak check follows from convexity plus monotonicity at alpha = 1") {
  const DowkerTable disk = dowker_table(disk_approximation(512), 12, {}, "disk");
  CHECK(check_alpha_dowker(disk, 1.0).verdict);
  CHECK(check_weak_alpha_dowker_all(disk, 1.0).verdict);
}

TEST_CASE("alpha convexity fails below 1 for flat-tailed polygon tables") {
  const DowkerTable table = regular_table(5);
  const DowkerReport rep = check_alpha_dowker(table, 0.5);
  CHECK_FALSE(rep.verdict);
  // The flat tail A(2k-1) > A(2k) = A(2k+1)... breaks convexity at n = 2k-1
  // for any alpha; with the table capped at 2k the worst sits at n = 2k - 1.
  CHECK(rep.worst.n == 9);
  const DowkerReport log_rep = check_alpha_dowker(table, 0.0);
  CHECK_FALSE(log_rep.verdict);
}

TEST_CASE("constant tables are convex with zero margins") {
  DowkerTable table;
  table.n_min = 3;
  table.n_max = 10;
  table.values.assign(8, 2.5);
  table.disk_area = 2.5;
  const DowkerReport rep = check_alpha_dowker(table, 0.7);
  CHECK(rep.verdict);
  for (const DowkerMargin& m : rep.margins) CHECK(m.value == doctest::Approx(0.0));
  CHECK(check_weak_alpha_dowker_all(table, 0.7).verdict);
}

TEST_CASE("margins are reproducible from the table") {
  const DowkerTable table = regular_table(6);
  const double alpha = 0.5;
  const DowkerReport rep = check_weak_alpha_dowker_all(table, alpha);
  for (const DowkerMargin& mg : rep.margins) {
    const double lam = static_cast<double>(mg.n - 6) / (mg.n - mg.m);
    const double mu = static_cast<double>(6 - mg.m) / (mg.n - mg.m);
    const double expect = lam * std::pow(table.value(mg.m), alpha) +
                          mu * std::pow(table.value(mg.n), alpha) -
                          std::pow(table.value(6), alpha);
    CHECK(mg.value == doctest::Approx(expect).epsilon(1e-15));
  }
  double worst = rep.margins.front().value;
  for (const DowkerMargin& mg : rep.margins) worst = std::min(worst, mg.value);
  CHECK(rep.worst_margin == doctest::Approx(worst));
}

TEST_CASE("insufficient tables are rejected") {
  DowkerTable table;
  table.n_min = 3;
  table.n_max = 6;  // weak check needs entries beyond 6
  table.values.assign(4, 1.0);
  table.disk_area = 1.0;
  CHECK_THROWS_AS(check_weak_alpha_dowker_all(table, 0.5), Error);
  DowkerTable tiny;
  tiny.n_min = 3;
  tiny.n_max = 4;
  tiny.values.assign(2, 1.0);
  tiny.disk_area = 1.0;
  CHECK_THROWS_AS(check_alpha_dowker(tiny, 1.0), Error);
  CHECK_THROWS_AS(log_convexity_scan(regular_table(4), 4, 8), Error);  // needs n = 9
}

TEST_CASE("honeycomb certificates for regular norms") {
  const NormDisk twelve(scale(regular_gon(12), std::cos(kPi / 12.0)), {}, "12gon");
  const HoneycombCertificate cert12 = honeycomb_certificate(twelve, 0.5);
  CHECK(cert12.certified);
  CHECK(cert12.hexagon.size() == 6);
  CHECK(is_origin_symmetric(cert12.hexagon, Tolerance{1e-7, 1e-7}));
  CHECK(area(cert12.hexagon) == doctest::Approx(cert12.table.value(6)).epsilon(1e-9));
  CHECK(cert12.bound_value ==
        doctest::Approx(std::sqrt(4.0 * cert12.table.value(6))).epsilon(1e-12));

  const NormDisk ten(scale(regular_gon(10), std::cos(kPi / 10.0)), {}, "10gon");
  CHECK_FALSE(honeycomb_certificate(ten, 0.5).certified);

  const NormDisk sq(regular_gon(4), {}, "square");
  CHECK(honeycomb_certificate(sq, 0.0).certified);
  CHECK(honeycomb_certificate(sq, 1.0).certified);
}

TEST_CASE("stability gate accepts near disks and rejects the square") {
  const NormDisk euclid(disk_approximation(4096), {}, "euclid");
  const StabilityGate near = check_stability_gate(euclid);
  CHECK(near.within);
  CHECK(near.distance < 1e-5);
  CHECK(near.eps0 == doctest::Approx(stability_epsilon0()));

  const NormDisk gon100(regular_gon(100), {}, "100gon");
  const StabilityGate mid = check_stability_gate(gon100);
  CHECK(mid.within);
  CHECK(mid.distance < 1e-3);

  const NormDisk sq(regular_gon(4), {}, "square");
  const StabilityGate far = check_stability_gate(sq);
  CHECK_FALSE(far.within);
  CHECK(far.distance == doctest::Approx(0.414).epsilon(0.15));
}

TEST_CASE("estimate of the smallest passing alpha") {
  const DowkerTable disk = dowker_table(disk_approximation(512), 12, {}, "disk");
  const auto a_disk = estimate_min_weak_alpha(disk);
  REQUIRE(a_disk.has_value());
  CHECK(*a_disk <= 1e-6);

  const DowkerTable oct = regular_table(4);
  const auto a_oct = estimate_min_weak_alpha(oct);
  REQUIRE(a_oct.has_value());
  CHECK(*a_oct > 0.5);
  CHECK(*a_oct <= 1.0 + 1e-6);
  CHECK(check_weak_alpha_dowker_all(oct, *a_oct).verdict);
  CHECK_FALSE(check_weak_alpha_dowker_all(oct, *a_oct - 1e-4).verdict);

  const auto a_hex = estimate_min_weak_alpha(regular_table(3));
  REQUIRE(a_hex.has_value());
  CHECK(*a_hex == doctest::Approx(0.0));
}

TEST_CASE("weak verdicts are monotone in alpha") {
  const DowkerTable oct = regular_table(4);
  bool seen_pass = false;
  for (double alpha : {0.0, 0.25, 0.5, 0.75, 1.0, 1.5, 2.0}) {
    const bool pass = check_weak_alpha_dowker_all(oct, alpha).verdict;
    if (seen_pass) CHECK(pass);  // once passing, stays passing
    seen_pass = seen_pass || pass;
  }
  CHECK(seen_pass);
}

TEST_CASE("log convexity scan on the disk is nonnegative") {
  const DowkerTable disk = dowker_table(disk_approximation(2048), 41, {}, "disk");
  for (const DowkerMargin& m : log_convexity_scan(disk, 10, 40)) CHECK(m.value >= -1e-7);
  // Constant tail: margins exactly zero.
  const DowkerTable hexa = regular_table(3, 12);
  for (const DowkerMargin& m : log_convexity_scan(hexa, 8, 11))
    CHECK(m.value == doctest::Approx(0.0));
}
