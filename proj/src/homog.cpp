#include <chessgeo/homog.hpp>

#include <chessgeo/errors.hpp>
#include <chessgeo/geodesic.hpp>
#include <chessgeo/normlen.hpp>

#include <cmath>
#include <numbers>

namespace chessgeo::homog {

namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;
const double kSqrt32 = std::sqrt(1.5);

struct Reduced {
  double M;
  double m;
};

// By the axis/diagonal symmetries of the metric, only max/min of the
// absolute coordinates matter.
Reduced reduce(double x, double y) {
  const double ax = std::abs(x);
  const double ay = std::abs(y);
  return Reduced{std::max(ax, ay), std::min(ax, ay)};
}

bool near_integer(double v) { return std::abs(v - std::round(v)) < 1e-9; }

}  // namespace

FinslerMetric FinslerMetric::make(double beta) {
  if (!(beta > 1.0)) {
    throw DomainError("FinslerMetric: beta must be > 1");
  }
  FinslerMetric fm;
  fm.beta = beta;
  fm.regime =
      beta >= kSqrt32 ? MetricRegime::ClosedForm : MetricRegime::ConeOnly;
  fm.lambda3 = normlen::norm_len(2.0, beta);
  fm.Lambda3 = fm.lambda3 + 2.0 + kSqrt2;
  fm.kc = normlen::k_c(beta);
  fm.l_min = normlen::norm_len(2.0 * fm.kc, beta);
  return fm;
}

double phi(double x, double y, double beta) {
  if (!(beta >= kSqrt32)) {
    throw UnsupportedRegimeError(
        "phi: closed form requires beta >= sqrt(3/2); use phi_on_cone or "
        "phi_estimate");
  }
  const Reduced r = reduce(x, y);
  if (beta >= normlen::beta_c0()) {
    return r.M + (kSqrt2 - 1.0) * r.m;
  }
  const double L3 = normlen::norm_len(2.0, beta) + 2.0 + kSqrt2;
  if (3.0 * r.m <= r.M) {
    return r.M + (L3 - 3.0) * r.m;
  }
  return 0.5 * (L3 - kSqrt2) * r.M + 0.5 * (3.0 * kSqrt2 - L3) * r.m;
}

double phi_on_cone(double x, double y, double beta) {
  if (!(beta > 1.0)) {
    throw DomainError("phi_on_cone: beta must be > 1");
  }
  const Reduced r = reduce(x, y);
  const int kc = normlen::k_c(beta);
  if (!((2.0 * kc + 1.0) * r.m <= r.M)) {
    throw CoverageError("phi_on_cone: direction outside the covered cones");
  }
  return r.M + (normlen::norm_len(2.0 * kc, beta) + kSqrt2 - 1.0) * r.m;
}

PhiEstimate phi_estimate(double x, double y, double beta, int scale,
                         int refinement) {
  if (!(beta > 1.0)) {
    throw DomainError("phi_estimate: beta must be > 1");
  }
  if (scale < 2) {
    throw DomainError("phi_estimate: scale must be at least 2");
  }
  const Reduced r = reduce(x, y);
  if (r.M == 0.0) {
    throw DomainError("phi_estimate: zero direction");
  }

  const double zx = r.M * scale;
  const double zy = r.m * scale;
  Point target;
  if (near_integer(zx) && near_integer(zy)) {
    // The scaled direction is a grid corner; use it as-is (square sides are
    // light, so axis targets are measured exactly).
    target = Point(std::round(zx), std::round(zy));
  } else {
    // Floor construction: snap down to the light vertex (2n+j, j).
    const double j = std::floor(zy + 1e-12);
    const double n = std::floor(0.5 * (zx - j) + 1e-12);
    target = Point(2.0 * n + j, j);
  }

  const geodesic::GeodesicResult g =
      geodesic::oracle_geodesic(Point(0.0, 0.0), target, beta, refinement);

  PhiEstimate est;
  est.value = g.optical_length / scale;
  est.error_bound = std::sqrt(5.0) / scale + g.error_bound / scale;
  est.conjectural =
      beta < kSqrt32 && (2.0 * normlen::k_c(beta) + 1.0) * r.m > r.M;
  return est;
}

UnitBall unit_ball(double beta) {
  if (!(beta > 1.0)) {
    throw DomainError("unit_ball: beta must be > 1");
  }
  UnitBall ball;
  ball.beta = beta;
  const auto add = [&ball](double x, double y, VertexKind kind) {
    ball.vertices.push_back(BallVertex{Point(x, y), kind});
  };
  const double s = 1.0 / kSqrt2;

  if (beta >= normlen::beta_c0()) {
    ball.coverage = Coverage::Full;
    add(1, 0, VertexKind::Corner);
    add(s, s, VertexKind::Corner);
    add(0, 1, VertexKind::Corner);
    add(-s, s, VertexKind::Corner);
    add(-1, 0, VertexKind::Corner);
    add(-s, -s, VertexKind::Corner);
    add(0, -1, VertexKind::Corner);
    add(s, -s, VertexKind::Corner);
    return ball;
  }

  if (beta >= kSqrt32) {
    ball.coverage = Coverage::Full;
    const double L3 = normlen::norm_len(2.0, beta) + 2.0 + kSqrt2;
    const double a = 3.0 / L3;
    const double b = 1.0 / L3;
    add(1, 0, VertexKind::Corner);
    add(a, b, VertexKind::Corner);
    add(s, s, VertexKind::Corner);
    add(b, a, VertexKind::Corner);
    add(0, 1, VertexKind::Corner);
    add(-b, a, VertexKind::Corner);
    add(-s, s, VertexKind::Corner);
    add(-a, b, VertexKind::Corner);
    add(-1, 0, VertexKind::Corner);
    add(-a, -b, VertexKind::Corner);
    add(-s, -s, VertexKind::Corner);
    add(-b, -a, VertexKind::Corner);
    add(0, -1, VertexKind::Corner);
    add(b, -a, VertexKind::Corner);
    add(s, -s, VertexKind::Corner);
    add(a, -b, VertexKind::Corner);
    return ball;
  }

  // Known boundary only on the cones K|y| <= |x| and K|x| <= |y|:
  // flat faces meeting at the axis corners, truncated at the cone edges.
  ball.coverage = Coverage::ConeOnly;
  const int kc = normlen::k_c(beta);
  const double K = 2.0 * kc + 1.0;
  const double c = normlen::norm_len(2.0 * kc, beta) + kSqrt2 - 1.0;
  const double e = 1.0 / (K + c);
  const double Ke = K * e;
  add(1, 0, VertexKind::Corner);
  add(Ke, e, VertexKind::CoverageEdge);
  add(e, Ke, VertexKind::CoverageEdge);
  add(0, 1, VertexKind::Corner);
  add(-e, Ke, VertexKind::CoverageEdge);
  add(-Ke, e, VertexKind::CoverageEdge);
  add(-1, 0, VertexKind::Corner);
  add(-Ke, -e, VertexKind::CoverageEdge);
  add(-e, -Ke, VertexKind::CoverageEdge);
  add(0, -1, VertexKind::Corner);
  add(e, -Ke, VertexKind::CoverageEdge);
  add(Ke, -e, VertexKind::CoverageEdge);
  return ball;
}

}  // namespace chessgeo::homog
