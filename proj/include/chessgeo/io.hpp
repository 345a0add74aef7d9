#pragma once

#include <chessgeo/common.hpp>
#include <chessgeo/geodesic.hpp>
#include <chessgeo/homog.hpp>
#include <chessgeo/normlen.hpp>

#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace chessgeo::io {

/// Locale-independent, 12 significant decimal digits.
std::string format_number(double v);

void write_critical_table_csv(std::ostream& os,
                              const normlen::CriticalTable& table);

using Series = std::vector<std::pair<double, double>>;

void write_series_csv(std::ostream& os, const Series& series,
                      const std::string& x_name, const std::string& y_name);
/// 512x512 line plot of a sampled function (axes plus polyline).
void write_series_svg(std::ostream& os, const Series& series);

const char* regime_name(geodesic::Regime regime);

/// {"regime": ..., "length": ..., "breakpoints": [[x, y], ...]};
/// an "error_bound" field is added in the oracle regime.
void write_geodesic_json(std::ostream& os, const geodesic::GeodesicResult& g);
/// Chessboard background plus the path, in a 512x512 viewport.
void write_geodesic_svg(std::ostream& os, const geodesic::GeodesicResult& g);

void write_unit_ball_csv(std::ostream& os, const homog::UnitBall& ball);
/// Unit circle overlay, boundary path, and shaded covered cones for the
/// cone-only regime. Fixed 512x512 viewport.
void write_unit_ball_svg(std::ostream& os, const homog::UnitBall& ball);

}  // namespace chessgeo::io
