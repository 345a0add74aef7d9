#pragma once

#include <chessgeo/common.hpp>

namespace chessgeo::snell {

/// Residual tolerance for the refraction constraint solver.
inline constexpr double kTolSigma = 1e-12;
/// Tolerance for polyline-vs-closed-form optical length agreement.
inline constexpr double kTolLen = 1e-9;

enum class Medium { Light, Dark };

/// One refracted path instance in a layered (vertical strip) medium:
/// p = light thickness, q = dark thickness, h = vertical rise, beta = index.
///
/// Valid instances have p >= 0, q >= 0, p + q > 0, 0 < h <= 1, beta >= 1.
/// beta == 1 (uniform medium) and p == 0 / q == 0 (single medium) are legal
/// degenerate cases with straight-segment closed forms.
struct StripSpec {
  double p = 0.0;
  double q = 0.0;
  double h = 1.0;
  double beta = 1.0;

  void validate() const;  // throws DomainError
};

struct SnellSolution {
  double sigma;   ///< sine of the light-side incidence angle
  double length;  ///< optical length of the refracted path
};

/// Sine sigma of the light-side angle, implicitly defined by
///   p*s/sqrt(1-s^2) + q*s/sqrt(beta^2-s^2) = h.
/// The residual is strictly increasing in s, so bisection on [0, 1) is safe.
/// With p == 0 the light-side sine is virtual and may exceed 1 (it stays
/// below beta).
double solve_sigma(const StripSpec& spec);

/// Optical length p/sqrt(1-sigma^2) + beta^2*q/sqrt(beta^2-sigma^2).
/// Always between the Euclidean distance and beta times it.
double snell_length(const StripSpec& spec);

SnellSolution solve(const StripSpec& spec);

struct Partials {
  double dp;  ///< dL/dp = sqrt(1-sigma^2)
  double dq;  ///< dL/dq = sqrt(beta^2-sigma^2)
};

Partials snell_partials(const StripSpec& spec);

/// Breakpoints of the refracted path through consecutive unit-width columns,
/// starting at `start` on a column boundary. Columns alternate between media
/// beginning with `first`; the last column may be partial. The (p, q) fields
/// of `spec` must match the thicknesses implied by that alternation.
Polyline snell_polyline(const Point& start, const StripSpec& spec,
                        Medium first);

}  // namespace chessgeo::snell
