#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "honeylab/circumscribe.hpp"
#include "honeylab/geometry.hpp"
#include "honeylab/tilings.hpp"

namespace honeylab {

// Doubles are rendered with 12 significant digits, '.' decimal separator,
// independent of locale.
std::string format_double(double v);

// Polygon JSON: {"vertices": [[x, y], ...]}.
ConvexPolygon read_polygon_json(std::istream& in, Tolerance tol = {});
ConvexPolygon read_polygon_json_file(const std::string& path, Tolerance tol = {});
void write_polygon_json(std::ostream& out, const ConvexPolygon& poly);

void write_table_csv(std::ostream& out, const DowkerTable& table);
void write_series_csv(std::ostream& out, const AverageSeries& series);

// Simple SVG rendering of a patch (cells plus the window circle).  The
// timestamp comment is omitted when `reproducible` is set.
void write_patch_svg(std::ostream& out, const TilingPatch& patch, double R, bool reproducible);
void write_polygons_svg(std::ostream& out, const std::vector<ConvexPolygon>& polys,
                        bool reproducible);

}  // namespace honeylab
