#include <chessgeo/geodesic.hpp>

#include <chessgeo/errors.hpp>
#include <chessgeo/normlen.hpp>
#include <chessgeo/snell.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <queue>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

namespace chessgeo::geodesic {

namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;
/// Discretization allowance of the oracle at refinement 64, calibrated by a
/// refinement-doubling study on unit-scale targets; scales as 1/N^2.
constexpr double kOracleTol64 = 5e-3;

bool near_integer(double v) { return std::abs(v - std::round(v)) < 1e-9; }

bool is_light_vertex_point(const Point& p) {
  if (!near_integer(p.x()) || !near_integer(p.y())) {
    return false;
  }
  const auto ix = std::llround(p.x());
  const auto iy = std::llround(p.y());
  return (ix - iy) % 2 == 0;
}

void require_light_vertex(const Point& p, const char* who) {
  if (!is_light_vertex_point(p)) {
    throw DomainError(std::string(who) + ": point is not a light vertex");
  }
}

double square_weight_at(const Point& p, double beta) {
  if (near_integer(p.x()) || near_integer(p.y())) {
    return 1.0;  // square sides are light
  }
  const auto ix = static_cast<std::int64_t>(std::floor(p.x()));
  const auto iy = static_cast<std::int64_t>(std::floor(p.y()));
  return is_dark_square(ix, iy) ? beta : 1.0;
}

double oracle_error_bound(double length, int refinement) {
  const double scale = 64.0 / refinement;
  return kOracleTol64 * scale * scale * std::max(1.0, length / 3.0);
}

}  // namespace

bool is_dark_square(std::int64_t ix, std::int64_t iy) {
  return (ix + iy) % 2 != 0;
}

double optical_length(const Polyline& polyline, double beta) {
  if (!(beta >= 1.0)) {
    throw DomainError("optical_length: beta must be >= 1");
  }
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < polyline.size(); ++i) {
    const Point a = polyline[i];
    const Point d = polyline[i + 1] - a;
    const double len = d.norm();
    if (len == 0.0) {
      continue;
    }
    std::vector<double> cuts = {0.0, 1.0};
    const auto add_crossings = [&](double start, double delta) {
      if (delta == 0.0) {
        return;
      }
      const double lo = std::min(start, start + delta);
      const double hi = std::max(start, start + delta);
      for (double k = std::ceil(lo); k <= std::floor(hi); k += 1.0) {
        const double t = (k - start) / delta;
        if (t > 1e-12 && t < 1.0 - 1e-12) {
          cuts.push_back(t);
        }
      }
    };
    add_crossings(a.x(), d.x());
    add_crossings(a.y(), d.y());
    std::sort(cuts.begin(), cuts.end());
    for (std::size_t j = 0; j + 1 < cuts.size(); ++j) {
      const Point mid = a + 0.5 * (cuts[j] + cuts[j + 1]) * d;
      total += square_weight_at(mid, beta) * (cuts[j + 1] - cuts[j]) * len;
    }
  }
  return total;
}

Thickness strip_thickness(double x0, double tau, std::int64_t row) {
  if (!(tau >= 0.0)) {
    throw DomainError("strip_thickness: tau must be non-negative");
  }
  Thickness th;
  double x = x0;
  double remaining = tau;
  while (remaining > 1e-15) {
    const double fx = std::floor(x);
    const double next = (x == fx) ? x + 1.0 : fx + 1.0;
    const double w = std::min(remaining, next - x);
    const auto col = static_cast<std::int64_t>(std::floor(x + 0.5 * w));
    if (is_dark_square(col, row)) {
      th.dark += w;
    } else {
      th.light += w;
    }
    x += w;
    remaining -= w;
  }
  return th;
}

S3Path s3_path(double beta, const Point& anchor) {
  if (!(beta > 1.0)) {
    throw DomainError("s3_path: beta must be > 1");
  }
  require_light_vertex(anchor, "s3_path");
  const snell::StripSpec spec{2.0, 1.0, 1.0, beta};
  S3Path s3;
  s3.anchor = anchor;
  s3.sigma3 = snell::solve_sigma(spec);
  s3.lambda3 = normlen::norm_len(2.0, beta);
  s3.Lambda3 = s3.lambda3 + 2.0 + kSqrt2;
  s3.breakpoints = snell::snell_polyline(anchor, spec, snell::Medium::Light);
  return s3;
}

GeodesicResult geodesic_to_light_vertex(int n, int j, double beta) {
  if (n < 0 || j < 0) {
    throw DomainError("geodesic_to_light_vertex: n, j must be non-negative");
  }
  if (!(beta >= std::sqrt(1.5))) {
    throw UnsupportedRegimeError(
        "geodesic_to_light_vertex: no closed form for beta < sqrt(3/2); "
        "use the oracle");
  }
  const double x = 2.0 * n + j;
  const double y = j;

  GeodesicResult g;
  if (beta >= normlen::beta_c0()) {
    g.regime = Regime::Octagon;
    g.optical_length = x + (kSqrt2 - 1.0) * y;
    g.breakpoints.emplace_back(0.0, 0.0);
    if (j > 0) {
      g.breakpoints.emplace_back(y, y);
    }
    if (x > y) {
      g.breakpoints.emplace_back(x, y);
    }
    return g;
  }

  // Maximal number of three-column refracted pieces, then diagonals, then
  // horizontal unit segments.
  g.regime = Regime::S3;
  const int t = std::min(j, n);
  const int d = j - t;
  const int r = 2 * (n - t);
  const S3Path proto = s3_path(beta, Point(0.0, 0.0));
  g.optical_length = t * proto.Lambda3 + r + d * kSqrt2;

  g.breakpoints.emplace_back(0.0, 0.0);
  Point cursor(0.0, 0.0);
  for (int i = 0; i < t; ++i) {
    const Point offset(3.0 * i, static_cast<double>(i));
    for (std::size_t k = 1; k < proto.breakpoints.size(); ++k) {
      g.breakpoints.push_back(proto.breakpoints[k] + offset);
    }
    cursor = g.breakpoints.back();
  }
  if (d > 0) {
    cursor += Point(d, d);
    g.breakpoints.push_back(cursor);
  }
  if (r > 0) {
    cursor += Point(r, 0.0);
    g.breakpoints.push_back(cursor);
  }
  return g;
}

double counterexample_curve(double beta, double t) {
  if (!(beta > 1.0) || !(beta < std::sqrt(1.5))) {
    throw DomainError(
        "counterexample_curve: beta must lie in (1, sqrt(3/2))");
  }
  if (!(t >= 0.0) || !(t <= 1.0)) {
    throw DomainError("counterexample_curve: t must lie in [0, 1]");
  }
  return normlen::norm_len(t, beta) + normlen::norm_len(2.0 - t, beta);
}

double tilde_beta() {
  const auto psi = [](double b) {
    const double b2 = b * b;
    return 2.0 * std::sqrt((3.0 - 2.0 * b2) / (2.0 * b2 - 1.0)) +
           std::sqrt((3.0 - 2.0 * b2) / (4.0 * b2 - 3.0)) - 1.0;
  };
  double lo = 1.0 + 1e-12;        // psi > 0 here
  double hi = std::sqrt(1.5) - 1e-12;  // psi -> -1 at sqrt(3/2)
  while (hi - lo > 1e-13) {
    const double mid = 0.5 * (lo + hi);
    if (psi(mid) > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// ---------------------------------------------------------------------------
// Brute-force oracle: Dijkstra over boundary nodes of the unit squares.
// ---------------------------------------------------------------------------

namespace {

struct WindowSpec {
  bool cone = false;
  // Cone: y in [y0, y1], x in [y + c0, y + c1]. Rectangle: [x0,x1] x [y0,y1].
  double x0 = 0, x1 = 0, y0 = 0, y1 = 0, c0 = 0, c1 = 0;
};

constexpr double kGeomEps = 1e-12;

// Positive-measure overlap, weakened to touching along degenerate dimensions
// so segment-shaped windows still pick up their neighbouring squares.
bool overlap(double lo1, double hi1, double lo2, double hi2, bool degenerate) {
  const double lo = std::max(lo1, lo2);
  const double hi = std::min(hi1, hi2);
  return degenerate ? hi >= lo - kGeomEps : hi > lo + kGeomEps;
}

bool include_square(const WindowSpec& w, std::int64_t ix, std::int64_t iy) {
  const double sx = static_cast<double>(ix);
  const double sy = static_cast<double>(iy);
  if (!w.cone) {
    const bool dx = w.x1 - w.x0 < kGeomEps;
    const bool dy = w.y1 - w.y0 < kGeomEps;
    return overlap(w.x0, w.x1, sx, sx + 1.0, dx) &&
           overlap(w.y0, w.y1, sy, sy + 1.0, dy);
  }
  const bool dy = w.y1 - w.y0 < kGeomEps;
  const bool dc = w.c1 - w.c0 < kGeomEps;
  const double ylo = std::max(w.y0, sy);
  const double yhi = std::min(w.y1, sy + 1.0);
  if (dy ? yhi < ylo - kGeomEps : yhi <= ylo + kGeomEps) {
    return false;
  }
  return overlap(ylo + w.c0, yhi + w.c1, sx, sx + 1.0, dc);
}

WindowSpec make_window(const Point& a, const Point& b,
                       const OracleOptions& options) {
  OracleWindow mode = options.window;
  const bool cone_ok = is_light_vertex_point(a) && is_light_vertex_point(b) &&
                       b.y() >= a.y() && b.x() - b.y() >= a.x() - a.y();
  if (mode == OracleWindow::Auto) {
    mode = cone_ok ? OracleWindow::Cone : OracleWindow::Rectangle;
  }
  WindowSpec w;
  if (mode == OracleWindow::Cone) {
    if (!cone_ok) {
      throw DomainError(
          "oracle: cone window requires ordered light-vertex endpoints");
    }
    w.cone = true;
    w.y0 = a.y();
    w.y1 = b.y();
    w.c0 = a.x() - a.y();
    w.c1 = b.x() - b.y();
    return w;
  }
  w.cone = false;
  w.x0 = std::min(a.x(), b.x()) - options.pad;
  w.x1 = std::max(a.x(), b.x()) + options.pad;
  w.y0 = std::min(a.y(), b.y()) - options.pad;
  w.y1 = std::max(a.y(), b.y()) + options.pad;
  return w;
}

// Sides of unit squares are identified by orientation and their lower-left
// scaled endpoint.
enum class SideKind : std::uint8_t { Horizontal, Vertical };

std::uint64_t pack_key(std::int64_t sx, std::int64_t sy, std::uint64_t tag) {
  const auto ux = static_cast<std::uint64_t>(sx + (std::int64_t{1} << 30));
  const auto uy = static_cast<std::uint64_t>(sy + (std::int64_t{1} << 30));
  return (tag << 62) | (ux << 31) | uy;
}

struct OracleGraph {
  int refinement;
  double beta;
  std::vector<Point> pos;
  std::unordered_map<std::uint64_t, int> node_index;  // scaled coordinates
  std::vector<std::vector<int>> square_nodes;
  std::vector<double> square_weight;
  std::vector<std::vector<int>> side_nodes;
  std::vector<std::vector<int>> node_squares;
  std::vector<std::vector<int>> node_sides;

  int node_at(std::int64_t sx, std::int64_t sy) {
    const auto key = pack_key(sx, sy, 0);
    const auto it = node_index.find(key);
    if (it != node_index.end()) {
      return it->second;
    }
    const int id = static_cast<int>(pos.size());
    const double n = refinement;
    pos.emplace_back(sx / n, sy / n);
    node_index.emplace(key, id);
    return id;
  }
};

OracleGraph build_graph(const Point& a, const Point& b, double beta,
                        int refinement, const OracleOptions& options) {
  const WindowSpec window = make_window(a, b, options);

  // Candidate square range, generously rounded outward.
  const double ylo = window.y0;
  const double yhi = window.y1;
  double xlo, xhi;
  if (window.cone) {
    xlo = ylo + window.c0;
    xhi = yhi + window.c1;
  } else {
    xlo = window.x0;
    xhi = window.x1;
  }
  const auto iy_lo = static_cast<std::int64_t>(std::floor(ylo)) - 1;
  const auto iy_hi = static_cast<std::int64_t>(std::floor(yhi)) + 1;
  const auto ix_lo = static_cast<std::int64_t>(std::floor(xlo)) - 1;
  const auto ix_hi = static_cast<std::int64_t>(std::floor(xhi)) + 1;

  std::vector<std::pair<std::int64_t, std::int64_t>> squares;
  for (std::int64_t iy = iy_lo; iy <= iy_hi; ++iy) {
    for (std::int64_t ix = ix_lo; ix <= ix_hi; ++ix) {
      if (include_square(window, ix, iy)) {
        squares.emplace_back(ix, iy);
      }
    }
  }
  if (squares.empty()) {
    throw DomainError("oracle: empty search window");
  }

  const int N = refinement;
  const std::size_t node_estimate = squares.size() * 2 * (N + 1);
  if (node_estimate > options.node_cap) {
    throw ResourceError("oracle: window too large for the node cap");
  }

  OracleGraph g;
  g.refinement = N;
  g.beta = beta;
  g.square_nodes.resize(squares.size());
  g.square_weight.resize(squares.size());

  std::unordered_map<std::uint64_t, int> side_index;
  const auto side_at = [&](SideKind kind, std::int64_t sx, std::int64_t sy) {
    const auto key =
        pack_key(sx, sy, kind == SideKind::Horizontal ? 1 : 2);
    const auto it = side_index.find(key);
    if (it != side_index.end()) {
      return it->second;
    }
    const int id = static_cast<int>(g.side_nodes.size());
    side_index.emplace(key, id);
    std::vector<int> nodes;
    nodes.reserve(N + 1);
    for (int s = 0; s <= N; ++s) {
      if (kind == SideKind::Horizontal) {
        nodes.push_back(g.node_at(sx + s, sy));
      } else {
        nodes.push_back(g.node_at(sx, sy + s));
      }
    }
    g.side_nodes.push_back(std::move(nodes));
    return id;
  };

  for (std::size_t si = 0; si < squares.size(); ++si) {
    const auto [ix, iy] = squares[si];
    g.square_weight[si] = is_dark_square(ix, iy) ? beta : 1.0;
    const std::int64_t sx = ix * N;
    const std::int64_t sy = iy * N;
    const int bottom = side_at(SideKind::Horizontal, sx, sy);
    const int top = side_at(SideKind::Horizontal, sx, sy + N);
    const int left = side_at(SideKind::Vertical, sx, sy);
    const int right = side_at(SideKind::Vertical, sx + N, sy);

    auto& nodes = g.square_nodes[si];
    nodes.reserve(4 * N);
    nodes.insert(nodes.end(), g.side_nodes[bottom].begin(),
                 g.side_nodes[bottom].end());
    nodes.insert(nodes.end(), g.side_nodes[top].begin(),
                 g.side_nodes[top].end());
    nodes.insert(nodes.end(), g.side_nodes[left].begin() + 1,
                 g.side_nodes[left].end() - 1);
    nodes.insert(nodes.end(), g.side_nodes[right].begin() + 1,
                 g.side_nodes[right].end() - 1);
  }

  if (g.pos.size() > options.node_cap) {
    throw ResourceError("oracle: node cap exceeded");
  }

  g.node_squares.resize(g.pos.size());
  for (std::size_t si = 0; si < squares.size(); ++si) {
    for (const int v : g.square_nodes[si]) {
      g.node_squares[v].push_back(static_cast<int>(si));
    }
  }
  g.node_sides.resize(g.pos.size());
  for (std::size_t li = 0; li < g.side_nodes.size(); ++li) {
    for (const int v : g.side_nodes[li]) {
      g.node_sides[v].push_back(static_cast<int>(li));
    }
  }
  return g;
}

int locate_node(const OracleGraph& g, const Point& p, const char* who) {
  const double sxd = p.x() * g.refinement;
  const double syd = p.y() * g.refinement;
  if (!near_integer(sxd) || !near_integer(syd)) {
    throw DomainError(std::string(who) +
                      ": endpoint not representable at this refinement");
  }
  const auto key = pack_key(std::llround(sxd), std::llround(syd), 0);
  const auto it = g.node_index.find(key);
  if (it == g.node_index.end()) {
    throw DomainError(std::string(who) + ": endpoint outside the window");
  }
  return it->second;
}

struct SearchResult {
  double distance = 0.0;
  Polyline path;
};

SearchResult dijkstra(const OracleGraph& g, int src, int dst) {
  const auto n = g.pos.size();
  std::vector<double> dist(n, std::numeric_limits<double>::infinity());
  std::vector<int> parent(n, -1);
  using Item = std::pair<double, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  dist[src] = 0.0;
  queue.emplace(0.0, src);

  while (!queue.empty()) {
    const auto [du, u] = queue.top();
    queue.pop();
    if (du != dist[u]) {
      continue;  // stale entry
    }
    if (u == dst) {
      break;
    }
    const Point pu = g.pos[u];
    const auto relax = [&](int v, double factor) {
      const double nd = du + factor * (g.pos[v] - pu).norm();
      if (nd < dist[v]) {
        dist[v] = nd;
        parent[v] = u;
        queue.emplace(nd, v);
      }
    };
    for (const int si : g.node_squares[u]) {
      const double w = g.square_weight[si];
      for (const int v : g.square_nodes[si]) {
        relax(v, w);
      }
    }
    for (const int li : g.node_sides[u]) {
      for (const int v : g.side_nodes[li]) {
        relax(v, 1.0);
      }
    }
  }

  if (!std::isfinite(dist[dst])) {
    throw std::logic_error("oracle: target unreachable inside the window");
  }

  SearchResult out;
  out.distance = dist[dst];
  Polyline reversed;
  for (int v = dst; v != -1; v = parent[v]) {
    reversed.push_back(g.pos[v]);
  }
  std::reverse(reversed.begin(), reversed.end());
  // Merge collinear runs.
  for (const Point& p : reversed) {
    const auto sz = out.path.size();
    if (sz >= 2) {
      const Point d1 = out.path[sz - 1] - out.path[sz - 2];
      const Point d2 = p - out.path[sz - 1];
      if (std::abs(d1.x() * d2.y() - d1.y() * d2.x()) < 1e-12 &&
          d1.dot(d2) > 0.0) {
        out.path.back() = p;
        continue;
      }
    }
    out.path.push_back(p);
  }
  return out;
}

void check_oracle_args(double beta, int refinement) {
  if (!(beta > 1.0)) {
    throw DomainError("oracle: beta must be > 1");
  }
  if (refinement < 2) {
    throw DomainError("oracle: refinement must be at least 2");
  }
}

}  // namespace

double oracle_distance(const Point& a, const Point& b, double beta,
                       int refinement, const OracleOptions& options) {
  check_oracle_args(beta, refinement);
  const OracleGraph g = build_graph(a, b, beta, refinement, options);
  return dijkstra(g, locate_node(g, a, "oracle"), locate_node(g, b, "oracle"))
      .distance;
}

GeodesicResult oracle_geodesic(const Point& a, const Point& b, double beta,
                               int refinement, const OracleOptions& options) {
  check_oracle_args(beta, refinement);
  const OracleGraph g = build_graph(a, b, beta, refinement, options);
  const SearchResult r =
      dijkstra(g, locate_node(g, a, "oracle"), locate_node(g, b, "oracle"));
  GeodesicResult out;
  out.regime = Regime::Oracle;
  out.optical_length = r.distance;
  out.breakpoints = r.path;
  out.error_bound = oracle_error_bound(r.distance, refinement);
  return out;
}

}  // namespace chessgeo::geodesic
