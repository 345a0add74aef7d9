#pragma once

#include <chessgeo/common.hpp>

#include <vector>

namespace chessgeo::homog {

enum class MetricRegime {
  ClosedForm,  ///< beta >= sqrt(3/2): phi known everywhere
  ConeOnly,    ///< beta <  sqrt(3/2): phi known only on two cones
};

/// Cached per-beta quantities of the homogenized metric.
struct FinslerMetric {
  double beta = 1.0;
  MetricRegime regime = MetricRegime::ClosedForm;
  double lambda3 = 0.0;  ///< l(2, beta)
  double Lambda3 = 0.0;  ///< lambda3 + 2 + sqrt(2)
  int kc = 0;            ///< k_c(beta)
  double l_min = 0.0;    ///< l(2*k_c(beta), beta)

  static FinslerMetric make(double beta);
};

/// Homogenized metric for beta >= sqrt(3/2). With M = max(|x|,|y|),
/// m = min(|x|,|y|):
///   beta >= beta_c0:           M + (sqrt(2)-1)*m
///   sqrt(3/2) <= beta <= beta_c0:  M + (Lambda3-3)*m        if 3m <= M
///                              (Lambda3-sqrt(2))/2*M
///                               + (3*sqrt(2)-Lambda3)/2*m   if 3m >= M
double phi(double x, double y, double beta);

/// Metric on the cones (2*k_c+1)|y| <= |x| or (2*k_c+1)|x| <= |y|, valid for
/// every beta > 1: M + (l(2*k_c, beta) + sqrt(2) - 1)*m.
/// Throws CoverageError outside both cones.
double phi_on_cone(double x, double y, double beta);

struct PhiEstimate {
  double value = 0.0;
  double error_bound = 0.0;
  /// True when no closed form covers the direction (beta < sqrt(3/2) and the
  /// direction lies outside both cones): the value has a stated error bar
  /// but no exact reference.
  bool conjectural = false;
};

/// Numeric estimate of phi along any direction: the target is scaled by
/// `scale`, rounded down to a light vertex, and measured by the oracle.
/// The reported bound is sqrt(5)/scale plus the oracle's discretization
/// allowance at the given refinement.
PhiEstimate phi_estimate(double x, double y, double beta, int scale,
                         int refinement = 64);

enum class Coverage { Full, ConeOnly };

enum class VertexKind {
  Corner,        ///< two faces meet at an angle
  CoverageEdge,  ///< a known flat face stops here; the boundary continues
                 ///< into uncharted directions
};

struct BallVertex {
  Point p;
  VertexKind kind = VertexKind::Corner;
};

/// Boundary of {phi_beta = 1}, counterclockwise starting at (1, 0).
/// Full coverage: a convex polygon (octagon for beta >= beta_c0, irregular
/// 16-gon for sqrt(3/2) <= beta < beta_c0). Cone-only coverage: four arcs of
/// two flat faces each, centered at (+-1,0) and (0,+-1); consecutive
/// CoverageEdge vertices mark the gaps between arcs.
struct UnitBall {
  double beta = 1.0;
  Coverage coverage = Coverage::Full;
  std::vector<BallVertex> vertices;
};

UnitBall unit_ball(double beta);

}  // namespace chessgeo::homog
