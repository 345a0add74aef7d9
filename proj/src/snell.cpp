#include <chessgeo/snell.hpp>

#include <chessgeo/errors.hpp>

#include <cmath>
#include <string>

namespace chessgeo::snell {

namespace {

double residual(double s, const StripSpec& spec) {
  return spec.p * s / std::sqrt(1.0 - s * s) +
         spec.q * s / std::sqrt(spec.beta * spec.beta - s * s) - spec.h;
}

}  // namespace

void StripSpec::validate() const {
  if (!(p >= 0.0) || !(q >= 0.0)) {
    throw DomainError("StripSpec: thicknesses must be non-negative");
  }
  if (!(p + q > 0.0)) {
    throw DomainError("StripSpec: p + q must be positive");
  }
  if (!(h > 0.0) || !(h <= 1.0)) {
    throw DomainError("StripSpec: height must lie in (0, 1]");
  }
  if (!(beta >= 1.0)) {
    throw DomainError("StripSpec: refractive index must be >= 1");
  }
}

double solve_sigma(const StripSpec& spec) {
  spec.validate();
  // Single-medium and uniform-medium cases are straight segments.
  if (spec.q == 0.0) {
    return spec.h / std::hypot(spec.p, spec.h);
  }
  if (spec.p == 0.0) {
    // Virtual light-side sine beta*sin(theta2); below the beta pole since
    // h <= 1.
    return spec.beta * spec.h / std::hypot(spec.q, spec.h);
  }
  if (spec.beta == 1.0) {
    return spec.h / std::hypot(spec.p + spec.q, spec.h);
  }

  double lo = 0.0;
  double hi = 1.0 - 1e-14;  // residual has a pole at s = 1 when p > 0
  for (int i = 0; i < 200 && hi - lo > 1e-17; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double r = residual(mid, spec);
    if (std::abs(r) <= kTolSigma) {
      return mid;
    }
    if (r < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double snell_length(const StripSpec& spec) {
  spec.validate();
  if (spec.q == 0.0) {
    return std::hypot(spec.p, spec.h);
  }
  if (spec.p == 0.0) {
    return spec.beta * std::hypot(spec.q, spec.h);
  }
  if (spec.beta == 1.0) {
    return std::hypot(spec.p + spec.q, spec.h);
  }
  const double s = solve_sigma(spec);
  const double b2 = spec.beta * spec.beta;
  return spec.p / std::sqrt(1.0 - s * s) + b2 * spec.q / std::sqrt(b2 - s * s);
}

SnellSolution solve(const StripSpec& spec) {
  return SnellSolution{solve_sigma(spec), snell_length(spec)};
}

Partials snell_partials(const StripSpec& spec) {
  const double s = solve_sigma(spec);
  return Partials{std::sqrt(1.0 - s * s),
                  std::sqrt(spec.beta * spec.beta - s * s)};
}

Polyline snell_polyline(const Point& start, const StripSpec& spec,
                        Medium first) {
  const double s = solve_sigma(spec);
  const double tau = spec.p + spec.q;

  // Implied light/dark split of the alternating unit columns.
  double implied_p = 0.0;
  double implied_q = 0.0;
  {
    double left = tau;
    Medium medium = first;
    while (left > 0.0) {
      const double w = std::min(left, 1.0);
      (medium == Medium::Light ? implied_p : implied_q) += w;
      left -= w;
      medium = medium == Medium::Light ? Medium::Dark : Medium::Light;
    }
  }
  if (std::abs(implied_p - spec.p) > 1e-9 ||
      std::abs(implied_q - spec.q) > 1e-9) {
    throw DomainError(
        "snell_polyline: (p, q) inconsistent with alternating unit columns");
  }

  const double slope_light = s / std::sqrt(1.0 - s * s);
  const double slope_dark =
      s / std::sqrt(spec.beta * spec.beta - s * s);

  Polyline points;
  points.push_back(start);
  double left = tau;
  double x = start.x();
  double y = start.y();
  Medium medium = first;
  while (left > 1e-15) {
    const double w = std::min(left, 1.0);
    x += w;
    y += w * (medium == Medium::Light ? slope_light : slope_dark);
    points.emplace_back(x, y);
    left -= w;
    medium = medium == Medium::Light ? Medium::Dark : Medium::Light;
  }
  return points;
}

}  // namespace chessgeo::snell
