#include "honeylab/io.hpp"

#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <ostream>

#include <json.hpp>

#include "honeylab/version.hpp"

namespace honeylab {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  std::string s(buf);
  for (char& c : s)  // guard against an unexpected locale decimal comma
    if (c == ',') c = '.';
  return s;
}

ConvexPolygon read_polygon_json(std::istream& in, Tolerance tol) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::ParseError, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("vertices") || !doc["vertices"].is_array())
    fail(ErrorCode::ParseError, "expected an object with a \"vertices\" array");
  std::vector<Point2> pts;
  for (const auto& item : doc["vertices"]) {
    if (!item.is_array() || item.size() != 2 || !item[0].is_number() || !item[1].is_number())
      fail(ErrorCode::ParseError, "each vertex must be a [x, y] number pair");
    pts.push_back({item[0].get<double>(), item[1].get<double>()});
  }
  return canonicalize(pts, tol);
}

ConvexPolygon read_polygon_json_file(const std::string& path, Tolerance tol) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::IoError, "cannot open " + path);
  return read_polygon_json(in, tol);
}

void write_polygon_json(std::ostream& out, const ConvexPolygon& poly) {
  out << "{\"vertices\": [";
  for (int i = 0; i < poly.size(); ++i) {
    if (i) out << ", ";
    out << '[' << format_double(poly.vertex(i).x) << ", " << format_double(poly.vertex(i).y)
        << ']';
  }
  out << "]}\n";
}

void write_table_csv(std::ostream& out, const DowkerTable& table) {
  out << "# honeylab " << kVersion << "\n";
  out << "# disk=" << table.disk_id << " disk_area=" << format_double(table.disk_area)
      << " n_min=" << table.n_min << " n_max=" << table.n_max << "\n";
  out << "n,A_K(n)\n";
  for (int n = table.n_min; n <= table.n_max; ++n)
    out << n << ',' << format_double(table.value(n)) << "\n";
}

void write_series_csv(std::ostream& out, const AverageSeries& series) {
  const char* kind = "p2";
  switch (series.kind) {
    case StatKind::PoweredPerimeter: kind = "powered_perimeter"; break;
    case StatKind::LogPerimeter: kind = "log_perimeter"; break;
    case StatKind::Sides: kind = "sides"; break;
    case StatKind::IsoperimetricRatio: kind = "iso_ratio"; break;
  }
  out << "# honeylab " << kVersion << "\n";
  out << "# stat=" << kind << " alpha=" << format_double(series.alpha) << "\n";
  out << "R,count,value\n";
  for (size_t i = 0; i < series.radii.size(); ++i)
    out << format_double(series.radii[i]) << ',' << series.cell_counts[i] << ','
        << format_double(series.values[i]) << "\n";
}

namespace {

void svg_open(std::ostream& out, double xlo, double ylo, double w, double h,
              bool reproducible) {
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<!-- honeylab " << kVersion;
  if (!reproducible) {
    char stamp[64] = {0};
    std::time_t t = std::time(nullptr);
    std::tm tmv{};
    gmtime_r(&t, &tmv);
    std::strftime(stamp, sizeof stamp, " %Y-%m-%dT%H:%M:%SZ", &tmv);
    out << stamp;
  }
  out << " -->\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << format_double(xlo) << ' '
      << format_double(ylo) << ' ' << format_double(w) << ' ' << format_double(h) << "\">\n";
}

void svg_polygon(std::ostream& out, const ConvexPolygon& poly, const char* stroke,
                 double stroke_width) {
  out << "  <polygon points=\"";
  for (int i = 0; i < poly.size(); ++i) {
    if (i) out << ' ';
    // SVG y grows downward; flip so the picture matches the math orientation.
    out << format_double(poly.vertex(i).x) << ',' << format_double(-poly.vertex(i).y);
  }
  out << "\" fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\""
      << format_double(stroke_width) << "\"/>\n";
}

}  // namespace

void write_patch_svg(std::ostream& out, const TilingPatch& patch, double R, bool reproducible) {
  const double pad = 0.05 * R + 1.0;
  svg_open(out, -R - pad, -R - pad, 2.0 * (R + pad), 2.0 * (R + pad), reproducible);
  const double sw = std::fmax(R / 400.0, 0.01);
  for (const ConvexPolygon& cell : patch.cells) svg_polygon(out, cell, "black", sw);
  out << "  <circle cx=\"0\" cy=\"0\" r=\"" << format_double(R)
      << "\" fill=\"none\" stroke=\"red\" stroke-width=\"" << format_double(2.0 * sw)
      << "\"/>\n";
  out << "</svg>\n";
}

void write_polygons_svg(std::ostream& out, const std::vector<ConvexPolygon>& polys,
                        bool reproducible) {
  double ext = 1.0;
  for (const ConvexPolygon& p : polys)
    for (const Point2& v : p.vertices) ext = std::fmax(ext, std::fmax(std::fabs(v.x), std::fabs(v.y)));
  const double pad = 0.1 * ext;
  svg_open(out, -ext - pad, -ext - pad, 2.0 * (ext + pad), 2.0 * (ext + pad), reproducible);
  static const char* colors[] = {"black", "red", "blue", "green", "orange", "purple"};
  for (size_t i = 0; i < polys.size(); ++i)
    svg_polygon(out, polys[i], colors[i % 6], ext / 200.0);
  out << "</svg>\n";
}

}  // namespace honeylab
