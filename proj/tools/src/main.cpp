#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "honeylab/dowker.hpp"
#include "honeylab/io.hpp"
#include "honeylab/tilings.hpp"
#include "honeylab/version.hpp"

namespace {

using honeylab::ConvexPolygon;
using honeylab::NormDisk;
using honeylab::Tolerance;
using Json = nlohmann::ordered_json;

int thread_budget() {
  if (const char* env = std::getenv("HONEYLAB_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  const unsigned hc = std::thread::hardware_concurrency();
  return hc ? static_cast<int>(hc) : 1;
}

// Index-ordered parallel map; results land by key so output order never
// depends on scheduling.
template <typename Fn>
void parallel_for(int count, Fn&& fn) {
  const int workers = std::min(thread_budget(), count);
  if (workers <= 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(workers));
  for (int t = 0; t < workers; ++t)
    pool.emplace_back([&] {
      for (int i; (i = next.fetch_add(1)) < count;) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!first_error) first_error = std::current_exception();
          return;
        }
      }
    });
  for (std::thread& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) honeylab::fail(honeylab::ErrorCode::IoError, "cannot write " + path);
  return out;
}

void write_json_report(const std::string& path, const Json& doc) {
  if (path.empty()) return;
  std::ofstream out = open_output(path);
  out << doc.dump(2) << "\n";
}

Json polygon_json(const ConvexPolygon& poly) {
  Json arr = Json::array();
  for (int i = 0; i < poly.size(); ++i)
    arr.push_back({poly.vertex(i).x, poly.vertex(i).y});
  return Json{{"vertices", arr}};
}

Json margin_json(const honeylab::DowkerMargin& m) {
  return Json{{"m", m.m}, {"n", m.n}, {"margin", m.value}};
}

Json report_json(const honeylab::DowkerReport& rep) {
  const char* prop = "alpha_convexity";
  if (rep.property == honeylab::DowkerProperty::LogConvexity) prop = "log_convexity";
  if (rep.property == honeylab::DowkerProperty::WeakAlpha) prop = "weak_alpha";
  Json j{{"property", prop},
         {"alpha", rep.alpha},
         {"verdict", rep.verdict},
         {"threshold", rep.threshold},
         {"worst", margin_json(rep.worst)}};
  Json margins = Json::array();
  for (const auto& m : rep.margins) margins.push_back(margin_json(m));
  j["margins"] = margins;
  Json border = Json::array();
  for (const auto& m : rep.borderline) border.push_back(margin_json(m));
  j["borderline"] = border;
  return j;
}

// Reads a table CSV produced by write_table_csv ('#' comments, n,A rows).
honeylab::DowkerTable read_table_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) honeylab::fail(honeylab::ErrorCode::IoError, "cannot open " + path);
  honeylab::DowkerTable table;
  table.disk_id = path;
  std::string line;
  bool have_first = false;
  int expected = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') {
      const auto pos = line.find("disk_area=");
      if (pos != std::string::npos)
        table.disk_area = std::strtod(line.c_str() + pos + 10, nullptr);
      continue;
    }
    if (line.compare(0, 2, "n,") == 0) continue;  // header row
    int n = 0;
    double value = 0.0;
    if (std::sscanf(line.c_str(), "%d,%lf", &n, &value) != 2)
      honeylab::fail(honeylab::ErrorCode::ParseError, "bad CSV row: " + line);
    if (!have_first) {
      table.n_min = n;
      expected = n;
      have_first = true;
    }
    if (n != expected)
      honeylab::fail(honeylab::ErrorCode::ParseError, "table rows must cover consecutive n");
    table.values.push_back(value);
    table.n_max = n;
    ++expected;
  }
  if (!have_first) honeylab::fail(honeylab::ErrorCode::ParseError, "empty table CSV");
  return table;
}

std::vector<double> parse_radii(const std::string& csv, double fallback_max) {
  std::vector<double> out;
  if (csv.empty()) {
    out = {fallback_max / 4.0, fallback_max / 2.0, fallback_max};
    return out;
  }
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(std::strtod(item.c_str(), nullptr));
  if (out.empty()) honeylab::fail(honeylab::ErrorCode::ParseError, "no radii given");
  return out;
}

struct CommonOpts {
  double rel_tol = 1e-9;
  double abs_tol = 1e-12;
  bool reproducible = false;
  Tolerance tol() const { return Tolerance{rel_tol, abs_tol}; }
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--rel-tol", opts.rel_tol, "relative tolerance")->check(CLI::PositiveNumber);
  cmd->add_option("--abs-tol", opts.abs_tol, "absolute tolerance")->check(CLI::PositiveNumber);
  cmd->add_flag("--reproducible", opts.reproducible,
                "omit timestamps so outputs are byte-stable");
}

Json config_echo(const CLI::App* cmd) {
  Json cfg;
  cfg["command"] = cmd->get_name();
  for (const CLI::Option* opt : cmd->get_options()) {
    if (opt->get_name().empty() || opt->count() == 0) continue;
    const auto& results = opt->results();
    if (results.size() == 1)
      cfg[opt->get_name()] = results[0];
    else if (!results.empty())
      cfg[opt->get_name()] = results;
    else
      cfg[opt->get_name()] = true;
  }
  return cfg;
}

Json base_report(const CLI::App* cmd) {
  return Json{{"tool", "honeylab"}, {"version", honeylab::kVersion}, {"config", config_echo(cmd)}};
}

// Polygon output with the version/config stamp; readers only look at the
// "vertices" key, so stamped files still round-trip as norm-disk inputs.
void write_stamped_polygon(std::ostream& out, const CLI::App* cmd, const ConvexPolygon& poly) {
  Json j = base_report(cmd);
  j["vertices"] = polygon_json(poly)["vertices"];
  out << j.dump(2) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"honeylab: honeycomb certificates, circumscribed-polygon tables and tiling "
               "averages for polygonal normed planes"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(honeylab::kVersion));

  // --- isoperimetrix ---------------------------------------------------
  auto* iso_cmd = app.add_subcommand("isoperimetrix", "isoperimetrix of a norm disk");
  std::string iso_in, iso_out, iso_svg;
  CommonOpts iso_opts;
  iso_cmd->add_option("--in", iso_in, "norm disk JSON")->required();
  iso_cmd->add_option("--out", iso_out, "output polygon JSON");
  iso_cmd->add_option("--svg", iso_svg, "render disk and isoperimetrix");
  add_common(iso_cmd, iso_opts);

  // --- circumscribe -----------------------------------------------------
  auto* circ_cmd = app.add_subcommand("circumscribe", "minimum-area circumscribed n-gon");
  std::string circ_in, circ_out, circ_json;
  int circ_n = 6;
  bool circ_symmetric = false;
  CommonOpts circ_opts;
  circ_cmd->add_option("--in", circ_in, "polygon JSON")->required();
  circ_cmd->add_option("--n", circ_n, "target side count")->required()->check(CLI::Range(3, 4096));
  circ_cmd->add_flag("--symmetric", circ_symmetric, "restrict to origin-symmetric results");
  circ_cmd->add_option("--out", circ_out, "output polygon JSON");
  circ_cmd->add_option("--json", circ_json, "report JSON");
  add_common(circ_cmd, circ_opts);

  // --- dowker-table ------------------------------------------------------
  auto* table_cmd = app.add_subcommand("dowker-table", "circumscribed-area table A_K(n)");
  std::string table_in, table_csv;
  int table_nmax = 12;
  CommonOpts table_opts;
  table_cmd->add_option("--in", table_in, "polygon JSON")->required();
  table_cmd->add_option("--nmax", table_nmax, "largest n")->required()->check(CLI::Range(6, 512));
  table_cmd->add_option("--csv", table_csv, "output CSV")->required();
  add_common(table_cmd, table_opts);

  // --- dowker-check -------------------------------------------------------
  auto* check_cmd = app.add_subcommand("dowker-check", "convexity / weak chord checks on a table");
  std::string check_table, check_json, check_property = "weak";
  double check_alpha = 0.5;
  int check_anchor = 0;
  CommonOpts check_opts;
  check_cmd->add_option("--table", check_table, "table CSV from dowker-table")->required();
  check_cmd->add_option("--property", check_property, "weak | alpha | log")
      ->check(CLI::IsMember({"weak", "alpha", "log"}));
  check_cmd->add_option("--alpha", check_alpha, "exponent")->check(CLI::Range(0.0, 8.0));
  check_cmd->add_option("--anchor", check_anchor, "weak anchor m (0 = all of 3,4,5)")
      ->check(CLI::Range(0, 5));
  check_cmd->add_option("--json", check_json, "report JSON");
  add_common(check_cmd, check_opts);

  // --- honeycomb -----------------------------------------------------------
  auto* cert_cmd = app.add_subcommand("honeycomb", "honeycomb certificate for a norm disk");
  std::string cert_in, cert_json, cert_svg;
  double cert_alpha = 0.5;
  int cert_nmax = 0;
  CommonOpts cert_opts;
  cert_cmd->add_option("--in", cert_in, "norm disk JSON")->required();
  cert_cmd->add_option("--alpha", cert_alpha, "exponent")->check(CLI::Range(0.0, 8.0));
  cert_cmd->add_option("--nmax", cert_nmax, "table size override (0 = auto)")
      ->check(CLI::Range(0, 512));
  cert_cmd->add_option("--json", cert_json, "certificate JSON");
  cert_cmd->add_option("--svg", cert_svg, "render isoperimetrix and minimal hexagon");
  add_common(cert_cmd, cert_opts);

  // --- stability -------------------------------------------------------------
  auto* stab_cmd = app.add_subcommand("stability", "disk-closeness gate for the stability regime");
  std::string stab_in, stab_json;
  CommonOpts stab_opts;
  stab_cmd->add_option("--in", stab_in, "norm disk JSON")->required();
  stab_cmd->add_option("--json", stab_json, "report JSON");
  add_common(stab_cmd, stab_opts);

  // --- tiling -------------------------------------------------------------
  auto* til_cmd = app.add_subcommand("tiling", "window averages over tiling patches");
  std::string til_proto = "hex", til_norm, til_csv, til_svg, til_radii, til_schedule = "AAB";
  double til_R = 50.0, til_alpha = 2.0, til_jitter = 0.3;
  std::uint64_t til_seed = 1;
  std::string til_stat = "p2";
  CommonOpts til_opts;
  til_cmd->add_option("--proto", til_proto, "hex | square | triangle | voronoi | steinhaus")
      ->check(CLI::IsMember({"hex", "square", "triangle", "voronoi", "steinhaus"}));
  til_cmd->add_option("--norm", til_norm, "norm disk JSON (defaults to Euclidean)");
  til_cmd->add_option("--R", til_R, "window radius")
      ->check(CLI::Range(1e-9, 1e4));
  til_cmd->add_option("--stat", til_stat, "p2 | log | sides | iso")
      ->check(CLI::IsMember({"p2", "log", "sides", "iso"}));
  til_cmd->add_option("--alpha", til_alpha, "perimeter exponent for --stat p2");
  til_cmd->add_option("--radii", til_radii, "comma-separated window radii (default R/4,R/2,R)");
  til_cmd->add_option("--schedule", til_schedule, "steinhaus schedule (proto=steinhaus)");
  til_cmd->add_option("--jitter", til_jitter, "voronoi jitter fraction")
      ->check(CLI::Range(0.0, 0.49));
  til_cmd->add_option("--seed", til_seed, "voronoi jitter seed");
  til_cmd->add_option("--csv", til_csv, "series CSV");
  til_cmd->add_option("--svg", til_svg, "patch SVG");
  add_common(til_cmd, til_opts);

  // --- steinhaus ----------------------------------------------------------
  auto* st_cmd = app.add_subcommand("steinhaus", "squares-only construction milestones");
  std::string st_schedule, st_csv, st_svg;
  double st_nu = 8.0;
  int st_milestones = 3;
  bool st_greedy = false;
  CommonOpts st_opts;
  st_cmd->add_option("--schedule", st_schedule, "explicit A/B schedule");
  st_cmd->add_flag("--greedy", st_greedy, "choose the schedule greedily against --nu");
  st_cmd->add_option("--nu", st_nu, "greedy target average");
  st_cmd->add_option("--milestones", st_milestones, "greedy milestone count")
      ->check(CLI::Range(1, 8));
  st_cmd->add_option("--csv", st_csv, "milestones CSV");
  st_cmd->add_option("--svg", st_svg, "patch SVG");
  add_common(st_cmd, st_opts);

  // --- sweep -----------------------------------------------------------------
  auto* sweep_cmd = app.add_subcommand("sweep", "weak chord verdicts for regular 2k-gon norms");
  int sweep_kmin = 2, sweep_kmax = 30;
  double sweep_alpha = 0.5;
  std::string sweep_csv;
  CommonOpts sweep_opts;
  sweep_cmd->add_option("--kmin", sweep_kmin, "first k")->check(CLI::Range(2, 64));
  sweep_cmd->add_option("--kmax", sweep_kmax, "last k")->check(CLI::Range(2, 64));
  sweep_cmd->add_option("--alpha", sweep_alpha, "exponent")->check(CLI::Range(0.0, 8.0));
  sweep_cmd->add_option("--csv", sweep_csv, "output CSV");
  add_common(sweep_cmd, sweep_opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (iso_cmd->parsed()) {
      const Tolerance tol = iso_opts.tol();
      const NormDisk M(honeylab::read_polygon_json_file(iso_in, tol), tol, iso_in);
      const NormDisk iso = honeylab::isoperimetrix(M);
      if (!iso_out.empty()) {
        std::ofstream out = open_output(iso_out);
        write_stamped_polygon(out, iso_cmd, iso.polygon());
      } else {
        write_stamped_polygon(std::cout, iso_cmd, iso.polygon());
      }
      if (!iso_svg.empty()) {
        std::ofstream out = open_output(iso_svg);
        honeylab::write_polygons_svg(out, {M.polygon(), iso.polygon()}, iso_opts.reproducible);
      }
      return 0;
    }

    if (circ_cmd->parsed()) {
      const Tolerance tol = circ_opts.tol();
      const ConvexPolygon K = honeylab::read_polygon_json_file(circ_in, tol);
      const honeylab::CircumscribeResult res =
          circ_symmetric ? honeylab::min_area_symmetric_circumscribed(K, circ_n, tol)
                         : honeylab::min_area_circumscribed(K, circ_n, tol);
      if (!circ_out.empty()) {
        std::ofstream out = open_output(circ_out);
        write_stamped_polygon(out, circ_cmd, res.polygon);
      } else {
        write_stamped_polygon(std::cout, circ_cmd, res.polygon);
      }
      if (!circ_json.empty()) {
        Json j = base_report(circ_cmd);
        j["min_area"] = res.min_area;
        j["slack_side_used"] = res.slack_side_used;
        j["flush_edges"] = res.flush_edges;
        j["polygon"] = polygon_json(res.polygon);
        write_json_report(circ_json, j);
      }
      return 0;
    }

    if (table_cmd->parsed()) {
      const Tolerance tol = table_opts.tol();
      const ConvexPolygon K = honeylab::read_polygon_json_file(table_in, tol);
      const honeylab::DowkerTable table = honeylab::dowker_table(K, table_nmax, tol, table_in);
      std::ofstream out = open_output(table_csv);
      honeylab::write_table_csv(out, table);
      return 0;
    }

    if (check_cmd->parsed()) {
      const Tolerance tol = check_opts.tol();
      const honeylab::DowkerTable table = read_table_csv(check_table);
      honeylab::DowkerReport rep;
      if (check_property == "alpha")
        rep = honeylab::check_alpha_dowker(table, check_alpha, tol);
      else if (check_property == "log")
        rep = honeylab::check_alpha_dowker(table, 0.0, tol);
      else if (check_anchor == 0)
        rep = honeylab::check_weak_alpha_dowker_all(table, check_alpha, tol);
      else
        rep = honeylab::check_weak_alpha_dowker(table, check_alpha, check_anchor, tol);
      Json j = base_report(check_cmd);
      j["report"] = report_json(rep);
      write_json_report(check_json, j);
      std::printf("%s alpha=%s verdict=%s worst=(%d,%d) margin=%s\n", check_property.c_str(),
                  honeylab::format_double(rep.alpha).c_str(), rep.verdict ? "PASS" : "FAIL",
                  rep.worst.m, rep.worst.n, honeylab::format_double(rep.worst_margin).c_str());
      for (const auto& b : rep.borderline)
        std::printf("WARN borderline margin (%d,%d) = %s\n", b.m, b.n,
                    honeylab::format_double(b.value).c_str());
      return rep.verdict ? 0 : 1;
    }

    if (cert_cmd->parsed()) {
      const Tolerance tol = cert_opts.tol();
      const NormDisk M(honeylab::read_polygon_json_file(cert_in, tol), tol, cert_in);
      const honeylab::HoneycombCertificate cert =
          honeylab::honeycomb_certificate(M, cert_alpha, cert_nmax, tol);
      Json j = base_report(cert_cmd);
      j["norm_id"] = cert.norm_id;
      j["alpha"] = cert.alpha;
      j["certified"] = cert.certified;
      j["bound_value"] = cert.bound_value;
      Json tbl = Json::array();
      for (int n = cert.table.n_min; n <= cert.table.n_max; ++n)
        tbl.push_back({{"n", n}, {"area", cert.table.value(n)}});
      j["table"] = tbl;
      Json reps = Json::array();
      for (const auto& rep : cert.weak_reports) reps.push_back(report_json(rep));
      j["weak_reports"] = reps;
      j["isoperimetrix"] = polygon_json(cert.isoperimetrix_disk);
      j["hexagon"] = polygon_json(cert.hexagon);
      write_json_report(cert_json, j);
      std::printf("%s: honeycomb %s (alpha=%s, bound=%s)\n", cert.norm_id.c_str(),
                  cert.certified ? "CERTIFIED" : "NOT_CERTIFIED",
                  honeylab::format_double(cert.alpha).c_str(),
                  honeylab::format_double(cert.bound_value).c_str());
      for (const auto& rep : cert.weak_reports)
        if (!rep.verdict)
          std::printf("  anchor m=%d fails at (m,n)=(%d,%d) margin=%s\n", rep.worst.m,
                      rep.worst.m, rep.worst.n,
                      honeylab::format_double(rep.worst_margin).c_str());
      if (!cert_svg.empty()) {
        std::ofstream out = open_output(cert_svg);
        honeylab::write_polygons_svg(out, {cert.isoperimetrix_disk, cert.hexagon},
                                     cert_opts.reproducible);
      }
      return cert.certified ? 0 : 1;
    }

    if (stab_cmd->parsed()) {
      const Tolerance tol = stab_opts.tol();
      const NormDisk M(honeylab::read_polygon_json_file(stab_in, tol), tol, stab_in);
      const honeylab::StabilityGate gate = honeylab::check_stability_gate(M, tol);
      std::printf("epsilon0 = %.6f\n", gate.eps0);
      std::printf("distance = %s (scale %s) -> %s\n",
                  honeylab::format_double(gate.distance).c_str(),
                  honeylab::format_double(gate.applied_scale).c_str(),
                  gate.within ? "WITHIN" : "OUTSIDE");
      if (!stab_json.empty()) {
        Json j = base_report(stab_cmd);
        j["eps0"] = gate.eps0;
        j["distance"] = gate.distance;
        j["applied_scale"] = gate.applied_scale;
        j["within"] = gate.within;
        write_json_report(stab_json, j);
      }
      return gate.within ? 0 : 1;
    }

    if (til_cmd->parsed()) {
      const Tolerance tol = til_opts.tol();
      const NormDisk M = til_norm.empty()
                             ? NormDisk(honeylab::disk_approximation(4096), tol, "euclidean")
                             : NormDisk(honeylab::read_polygon_json_file(til_norm, tol), tol,
                                        til_norm);
      honeylab::TilingPatch patch;
      bool square_window = false;
      if (til_proto == "hex")
        patch = honeylab::build_hex_tiling(M, til_R, tol);
      else if (til_proto == "square")
        patch = honeylab::build_lattice_patch(honeylab::Prototype::Square, til_R, tol);
      else if (til_proto == "triangle")
        patch = honeylab::build_lattice_patch(honeylab::Prototype::Triangle, til_R, tol);
      else if (til_proto == "voronoi")
        patch = honeylab::build_jittered_voronoi_patch(til_R, til_jitter, til_seed, tol);
      else {
        patch = honeylab::steinhaus_run(til_schedule).patch;
        square_window = true;
      }
      honeylab::StatKind kind = honeylab::StatKind::PoweredPerimeter;
      double alpha = til_alpha;
      if (til_stat == "log") kind = honeylab::StatKind::LogPerimeter;
      if (til_stat == "sides") kind = honeylab::StatKind::Sides;
      if (til_stat == "iso") kind = honeylab::StatKind::IsoperimetricRatio;
      const std::vector<double> radii = parse_radii(til_radii, til_R);
      const honeylab::AverageSeries series =
          square_window ? honeylab::window_average_square(patch, M, kind, alpha, radii)
                        : honeylab::window_average(patch, M, kind, alpha, radii);
      if (!til_csv.empty()) {
        std::ofstream out = open_output(til_csv);
        honeylab::write_series_csv(out, series);
      } else {
        honeylab::write_series_csv(std::cout, series);
      }
      if (!til_svg.empty()) {
        std::ofstream out = open_output(til_svg);
        honeylab::write_patch_svg(out, patch, til_R, til_opts.reproducible);
      }
      return 0;
    }

    if (st_cmd->parsed()) {
      if (st_schedule.empty() && !st_greedy)
        honeylab::fail(honeylab::ErrorCode::ParseError, "need --schedule or --greedy");
      const honeylab::SteinhausRun run = st_greedy
                                             ? honeylab::steinhaus_greedy(st_nu, st_milestones)
                                             : honeylab::steinhaus_run(st_schedule);
      std::ostringstream csv;
      csv << "# honeylab " << honeylab::kVersion << "\n";
      csv << "# schedule=" << run.schedule << "\n";
      csv << "index,radius,cells,average\n";
      for (const auto& ms : run.milestones)
        csv << ms.schedule_index << ',' << honeylab::format_double(ms.radius) << ',' << ms.cells
            << ',' << honeylab::format_double(ms.average) << "\n";
      if (!st_csv.empty()) {
        std::ofstream out = open_output(st_csv);
        out << csv.str();
      } else {
        std::cout << csv.str();
      }
      if (!st_svg.empty()) {
        std::ofstream out = open_output(st_svg);
        honeylab::write_patch_svg(out, run.patch, run.patch.window_radius,
                                  st_opts.reproducible);
      }
      return 0;
    }

    if (sweep_cmd->parsed()) {
      if (sweep_kmin > sweep_kmax)
        honeylab::fail(honeylab::ErrorCode::OutOfRange, "kmin must not exceed kmax");
      const Tolerance tol = sweep_opts.tol();
      const int count = sweep_kmax - sweep_kmin + 1;
      struct Row {
        int k = 0;
        bool verdict = false;
        honeylab::DowkerMargin worst;
        double worst_margin = 0.0;
      };
      std::vector<Row> rows(static_cast<size_t>(count));
      parallel_for(count, [&](int idx) {
        const int k = sweep_kmin + idx;
        const ConvexPolygon K = honeylab::regular_gon(2 * k, 1.0, 0.0);
        const honeylab::DowkerTable table =
            honeylab::dowker_table(K, std::max(2 * k, 8), tol, "regular");
        const honeylab::DowkerReport rep =
            honeylab::check_weak_alpha_dowker_all(table, sweep_alpha, tol);
        rows[static_cast<size_t>(idx)] = {k, rep.verdict, rep.worst, rep.worst_margin};
      });
      std::ostringstream csv;
      csv << "# honeylab " << honeylab::kVersion << "\n";
      csv << "# alpha=" << honeylab::format_double(sweep_alpha) << "\n";
      csv << "k,verdict,worst_margin,witness_m,witness_n\n";
      for (const Row& row : rows)
        csv << row.k << ',' << (row.verdict ? "true" : "false") << ','
            << honeylab::format_double(row.worst_margin) << ',' << row.worst.m << ','
            << row.worst.n << "\n";
      if (!sweep_csv.empty()) {
        std::ofstream out = open_output(sweep_csv);
        out << csv.str();
      } else {
        std::cout << csv.str();
      }
      return 0;
    }
  } catch (const honeylab::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 2;
}
