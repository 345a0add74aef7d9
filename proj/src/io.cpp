#include <chessgeo/io.hpp>

#include <array>
#include <charconv>
#include <cmath>
#include <cstddef>

namespace chessgeo::io {

namespace {

constexpr int kViewport = 512;

std::string num(double v) { return format_number(v); }

// Map math coordinates into the SVG viewport (y axis flipped).
struct Frame {
  double x0, y0, scale;
  double px(double x) const { return (x - x0) * scale; }
  double py(double y) const { return kViewport - (y - y0) * scale; }
};

void svg_open(std::ostream& os) {
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kViewport
     << "\" height=\"" << kViewport << "\" viewBox=\"0 0 " << kViewport << " "
     << kViewport << "\">\n";
}

void svg_line(std::ostream& os, double x1, double y1, double x2, double y2,
              const char* stroke, const char* extra = "") {
  os << "<line x1=\"" << num(x1) << "\" y1=\"" << num(y1) << "\" x2=\""
     << num(x2) << "\" y2=\"" << num(y2) << "\" stroke=\"" << stroke << "\""
     << extra << "/>\n";
}

void svg_polyline(std::ostream& os, const Frame& f, const Polyline& points,
                  const char* stroke, const char* extra = "") {
  os << "<polyline fill=\"none\" stroke=\"" << stroke << "\"" << extra
     << " points=\"";
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (i > 0) {
      os << ' ';
    }
    os << num(f.px(points[i].x())) << ',' << num(f.py(points[i].y()));
  }
  os << "\"/>\n";
}

}  // namespace

std::string format_number(double v) {
  if (v == 0.0) {
    v = 0.0;  // normalize -0
  }
  std::array<char, 64> buf;
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v,
                                 std::chars_format::general, 12);
  return std::string(buf.data(), res.ptr);
}

void write_critical_table_csv(std::ostream& os,
                              const normlen::CriticalTable& table) {
  os << "k,beta_c\n";
  for (const auto& entry : table.entries) {
    os << entry.k << ',' << num(entry.beta_c) << '\n';
  }
}

void write_series_csv(std::ostream& os, const Series& series,
                      const std::string& x_name, const std::string& y_name) {
  os << x_name << ',' << y_name << '\n';
  for (const auto& [x, y] : series) {
    os << num(x) << ',' << num(y) << '\n';
  }
}

void write_series_svg(std::ostream& os, const Series& series) {
  svg_open(os);
  const double margin = 48.0;
  double xlo = 0.0, xhi = 1.0, ylo = 0.0, yhi = 1.0;
  if (!series.empty()) {
    xlo = xhi = series.front().first;
    ylo = yhi = series.front().second;
    for (const auto& [x, y] : series) {
      xlo = std::min(xlo, x);
      xhi = std::max(xhi, x);
      ylo = std::min(ylo, y);
      yhi = std::max(yhi, y);
    }
  }
  if (xhi - xlo < 1e-12) {
    xhi = xlo + 1.0;
  }
  if (yhi - ylo < 1e-12) {
    yhi = ylo + 1.0;
  }
  const double inner = kViewport - 2.0 * margin;
  const double sx = inner / (xhi - xlo);
  const double sy = inner / (yhi - ylo);
  const auto px = [&](double x) { return margin + (x - xlo) * sx; };
  const auto py = [&](double y) { return kViewport - margin - (y - ylo) * sy; };

  // Axes at x = 0 / y = 0 when visible, else along the frame edge.
  const double ax = (xlo <= 0.0 && 0.0 <= xhi) ? px(0.0) : margin;
  const double ay = (ylo <= 0.0 && 0.0 <= yhi) ? py(0.0) : kViewport - margin;
  svg_line(os, margin, ay, kViewport - margin, ay, "black");
  svg_line(os, ax, margin, ax, kViewport - margin, "black");

  os << "<polyline fill=\"none\" stroke=\"crimson\" stroke-width=\"1.5\" "
        "points=\"";
  for (std::size_t i = 0; i < series.size(); ++i) {
    if (i > 0) {
      os << ' ';
    }
    os << num(px(series[i].first)) << ',' << num(py(series[i].second));
  }
  os << "\"/>\n</svg>\n";
}

const char* regime_name(geodesic::Regime regime) {
  switch (regime) {
    case geodesic::Regime::Octagon:
      return "octagon";
    case geodesic::Regime::S3:
      return "s3";
    case geodesic::Regime::Oracle:
      return "oracle";
  }
  return "unknown";
}

void write_geodesic_json(std::ostream& os, const geodesic::GeodesicResult& g) {
  os << "{\"regime\":\"" << regime_name(g.regime) << "\",\"length\":"
     << num(g.optical_length);
  if (g.regime == geodesic::Regime::Oracle) {
    os << ",\"error_bound\":" << num(g.error_bound);
  }
  os << ",\"breakpoints\":[";
  for (std::size_t i = 0; i < g.breakpoints.size(); ++i) {
    if (i > 0) {
      os << ',';
    }
    os << '[' << num(g.breakpoints[i].x()) << ',' << num(g.breakpoints[i].y())
       << ']';
  }
  os << "]}\n";
}

void write_geodesic_svg(std::ostream& os, const geodesic::GeodesicResult& g) {
  double xlo = 0, xhi = 1, ylo = 0, yhi = 1;
  if (!g.breakpoints.empty()) {
    xlo = xhi = g.breakpoints.front().x();
    ylo = yhi = g.breakpoints.front().y();
    for (const Point& p : g.breakpoints) {
      xlo = std::min(xlo, p.x());
      xhi = std::max(xhi, p.x());
      ylo = std::min(ylo, p.y());
      yhi = std::max(yhi, p.y());
    }
  }
  const auto gx0 = std::floor(xlo) - 1.0;
  const auto gx1 = std::ceil(xhi) + 1.0;
  const auto gy0 = std::floor(ylo) - 1.0;
  const auto gy1 = std::ceil(yhi) + 1.0;
  const double scale =
      (kViewport - 32.0) / std::max(gx1 - gx0, gy1 - gy0);
  const Frame f{gx0 - 16.0 / scale, gy0 - 16.0 / scale, scale};

  svg_open(os);
  for (double iy = gy0; iy < gy1; iy += 1.0) {
    for (double ix = gx0; ix < gx1; ix += 1.0) {
      if (!geodesic::is_dark_square(static_cast<std::int64_t>(ix),
                                    static_cast<std::int64_t>(iy))) {
        continue;
      }
      os << "<rect x=\"" << num(f.px(ix)) << "\" y=\"" << num(f.py(iy + 1.0))
         << "\" width=\"" << num(scale) << "\" height=\"" << num(scale)
         << "\" fill=\"#d0d7e4\"/>\n";
    }
  }
  for (double ix = gx0; ix <= gx1; ix += 1.0) {
    svg_line(os, f.px(ix), f.py(gy0), f.px(ix), f.py(gy1), "#99a");
  }
  for (double iy = gy0; iy <= gy1; iy += 1.0) {
    svg_line(os, f.px(gx0), f.py(iy), f.px(gx1), f.py(iy), "#99a");
  }
  svg_polyline(os, f, g.breakpoints, "crimson", " stroke-width=\"2\"");
  os << "</svg>\n";
}

void write_unit_ball_csv(std::ostream& os, const homog::UnitBall& ball) {
  os << "x,y\n";
  for (const auto& v : ball.vertices) {
    os << num(v.p.x()) << ',' << num(v.p.y()) << '\n';
  }
}

void write_unit_ball_svg(std::ostream& os, const homog::UnitBall& ball) {
  const double radius = 200.0;
  const double c = kViewport / 2.0;
  const auto px = [&](double x) { return c + radius * x; };
  const auto py = [&](double y) { return c - radius * y; };

  svg_open(os);
  os << "<circle cx=\"" << num(c) << "\" cy=\"" << num(c) << "\" r=\""
     << num(radius) << "\" fill=\"none\" stroke=\"#888\"/>\n";

  const auto& vs = ball.vertices;
  if (ball.coverage == Coverage::Full) {
    os << "<path fill=\"#e8eef9\" stroke=\"navy\" stroke-width=\"1.5\" d=\"";
    for (std::size_t i = 0; i < vs.size(); ++i) {
      os << (i == 0 ? 'M' : 'L') << num(px(vs[i].p.x())) << ' '
         << num(py(vs[i].p.y()));
    }
    os << "Z\"/>\n</svg>\n";
    return;
  }

  // Cone-only: shade the covered cones, draw the known flat faces; gaps sit
  // between consecutive coverage-edge vertices.
  const auto is_gap = [&](std::size_t i) {
    const std::size_t j = (i + 1) % vs.size();
    return vs[i].kind == homog::VertexKind::CoverageEdge &&
           vs[j].kind == homog::VertexKind::CoverageEdge;
  };
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (is_gap(i)) {
      continue;
    }
    const std::size_t j = (i + 1) % vs.size();
    os << "<path fill=\"#e8eef9\" stroke=\"none\" d=\"M" << num(c) << ' '
       << num(c) << 'L' << num(px(vs[i].p.x())) << ' ' << num(py(vs[i].p.y()))
       << 'L' << num(px(vs[j].p.x())) << ' ' << num(py(vs[j].p.y()))
       << "Z\"/>\n";
  }
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (is_gap(i)) {
      continue;
    }
    const std::size_t j = (i + 1) % vs.size();
    svg_line(os, px(vs[i].p.x()), py(vs[i].p.y()), px(vs[j].p.x()),
             py(vs[j].p.y()), "navy", " stroke-width=\"1.5\"");
  }
  os << "</svg>\n";
}

}  // namespace chessgeo::io
