#pragma once

#include <chessgeo/common.hpp>

#include <cstddef>
#include <cstdint>

namespace chessgeo::geodesic {

/// Integer point (2n+j, j) on the light diagonal y = x - 2n.
struct LightVertex {
  int n = 0;
  int j = 0;

  Point point() const { return Point(2.0 * n + j, static_cast<double>(j)); }
};

enum class Regime { Octagon, S3, Oracle };

struct GeodesicResult {
  Polyline breakpoints;
  double optical_length = 0.0;
  Regime regime = Regime::Octagon;
  /// Reported only in the oracle regime (discretization upper-bound slack).
  double error_bound = 0.0;
};

/// Refracted path from a light vertex (2m+k, k) to (2m+k+3, k+1): two light
/// columns and one dark column. sigma3 solves
/// 2s/sqrt(1-s^2) + s/sqrt(beta^2-s^2) = 1; Lambda3 = lambda3 + 2 + sqrt(2).
struct S3Path {
  Point anchor;
  double sigma3 = 0.0;
  double lambda3 = 0.0;
  double Lambda3 = 0.0;
  Polyline breakpoints;
};

S3Path s3_path(double beta, const Point& anchor);

/// Explicit geodesic from the origin to the light vertex (2n+j, j).
/// Closed forms exist only for beta >= sqrt(3/2); below that an
/// UnsupportedRegimeError directs the caller to oracle_geodesic.
GeodesicResult geodesic_to_light_vertex(int n, int j, double beta);

enum class OracleWindow {
  Auto,       ///< cone for light-vertex pairs, rectangle otherwise
  Cone,       ///< parallelogram between the endpoint light diagonals
  Rectangle,  ///< axis-aligned bounding box of the endpoints
};

struct OracleOptions {
  OracleWindow window = OracleWindow::Auto;
  /// Extra rings of squares around the window (for cross-checking that the
  /// window restriction does not change the answer).
  int pad = 0;
  std::size_t node_cap = 400000;
};

/// Brute-force shortest path in the chessboard metric over a graph with
/// `refinement` subdivisions per unit square side. Nodes live on square
/// boundaries only (geodesics are straight inside squares); corners are
/// always nodes, so diagonal/side paths are exact at any refinement.
/// Returns an upper bound on the true distance, non-increasing under
/// refinement doubling.
double oracle_distance(const Point& a, const Point& b, double beta,
                       int refinement, const OracleOptions& options = {});

/// Same search, returning the minimizing polyline (collinear runs merged).
GeodesicResult oracle_geodesic(const Point& a, const Point& b, double beta,
                               int refinement,
                               const OracleOptions& options = {});

/// L(t) = l(t, beta) + l(2-t, beta) for t in [0, 1]: normalized length of the
/// two-leg path through (1+t, 1) joining (0,0) to (4,2).
double counterexample_curve(double beta, double t);

/// Root in (1, sqrt(3/2)) of
/// psi(b) = 2*sqrt((3-2b^2)/(2b^2-1)) + sqrt((3-2b^2)/(4b^2-3)) - 1.
/// Below this index the diagonal-then-refract path to (4,2) stops being
/// optimal.
double tilde_beta();

/// Square (ix, iy) = [ix, ix+1] x [iy, iy+1] holds dark material iff
/// ix + iy is odd.
bool is_dark_square(std::int64_t ix, std::int64_t iy);

/// Optical length of a polyline in the standard chessboard: segments are
/// split at grid lines and weighted 1 (light squares and all square sides)
/// or beta (dark square interiors).
double optical_length(const Polyline& polyline, double beta);

struct Thickness {
  double light = 0.0;
  double dark = 0.0;
};

/// Light/dark thicknesses crossed between x0 and x0 + tau in the horizontal
/// strip row <= y <= row + 1.
Thickness strip_thickness(double x0, double tau, std::int64_t row);

}  // namespace chessgeo::geodesic
