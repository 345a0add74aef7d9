#include <chessgeo/normlen.hpp>

#include <chessgeo/errors.hpp>
#include <chessgeo/snell.hpp>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace chessgeo::normlen {

namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;
const double kSqrt32 = std::sqrt(1.5);

bool is_integer(double t) { return t == std::floor(t); }

bool floor_is_odd(double t) { return std::fmod(std::floor(t), 2.0) != 0.0; }

snell::StripSpec strip_spec(double t, double beta) {
  return snell::StripSpec{p_of_t(t), q_of_t(t), 1.0, beta};
}

void check_beta(double beta, double min_beta, const char* who) {
  if (!(beta >= min_beta)) {
    throw DomainError(std::string(who) + ": beta out of domain");
  }
}

}  // namespace

double q_of_t(double t) {
  if (!(t >= 0.0)) {
    throw DomainError("q_of_t: t must be non-negative");
  }
  const double ft = std::floor(t);
  if (floor_is_odd(t)) {
    return std::floor(t + 1.0) / 2.0;
  }
  return t - ft / 2.0;
}

double p_of_t(double t) { return t + 1.0 - q_of_t(t); }

double sigma_hat(double t, double beta) {
  check_beta(beta, 1.0, "sigma_hat");
  return snell::solve_sigma(strip_spec(t, beta));
}

double norm_len(double t, double beta) {
  check_beta(beta, 1.0, "norm_len");
  return snell::snell_length(strip_spec(t, beta)) - t - kSqrt2;
}

double norm_len_deriv(double t, double beta) {
  if (!(t > 0.0)) {
    throw DomainError("norm_len_deriv: t must be positive");
  }
  if (is_integer(t)) {
    throw DomainError(
        "norm_len_deriv: derivative jumps at integer t; pass a Side");
  }
  const double s = sigma_hat(t, beta);
  if (floor_is_odd(t)) {  // light interval
    return std::sqrt(1.0 - s * s) - 1.0;
  }
  return std::sqrt(beta * beta - s * s) - 1.0;  // dark interval
}

double norm_len_deriv(double t, double beta, Side side) {
  if (!is_integer(t)) {
    return norm_len_deriv(t, beta);
  }
  if (side == Side::Left && !(t > 0.0)) {
    throw DomainError("norm_len_deriv: no left derivative at t = 0");
  }
  const double s = sigma_hat(t, beta);
  // The regime of the adjacent open interval; sigma_hat is continuous.
  const bool light = side == Side::Right ? floor_is_odd(t + 0.5)
                                         : floor_is_odd(t - 0.5);
  if (light) {
    return std::sqrt(1.0 - s * s) - 1.0;
  }
  return std::sqrt(beta * beta - s * s) - 1.0;
}

double t_zero(double beta) {
  if (!(beta > 1.0) || !(beta < kSqrt32)) {
    throw DomainError("t_zero: defined only for 1 < beta < sqrt(3/2)");
  }
  const double target = std::sqrt(beta * beta - 1.0);  // below 1/sqrt(2)
  double lo = 0.0;
  double hi = 2.0;
  while (sigma_hat(hi, beta) > target) {
    lo = hi;
    hi *= 2.0;
    if (hi > 1e9) {
      throw std::logic_error("t_zero: bracket growth failed");
    }
  }
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double s = sigma_hat(mid, beta);
    if (std::abs(s - target) <= snell::kTolSigma || hi - lo < 1e-14) {
      return mid;
    }
    if (s > target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double delta(int k, double beta) {
  if (k < 0) {
    throw DomainError("delta: k must be non-negative");
  }
  check_beta(beta, 1.0, "delta");
  return norm_len(2.0 * k + 2.0, beta) - norm_len(2.0 * k, beta);
}

double beta_c(int k) {
  if (k < 0) {
    throw DomainError("beta_c: k must be non-negative");
  }
  double lo = 1.0 + 1e-9;
  double hi = kSqrt2;
  if (!(delta(k, lo) < 0.0) || !(delta(k, hi) > 0.0)) {
    throw std::logic_error("beta_c: bracket does not straddle the root");
  }
  while (hi - lo > 1e-13) {
    const double mid = 0.5 * (lo + hi);
    if (delta(k, mid) < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double beta_c0() {
  static const double value = beta_c(0);
  return value;
}

int k_c(double beta) {
  if (!(beta > 1.0)) {
    throw DomainError("k_c: beta must be > 1");
  }
  // delta(k, beta) > 0 is guaranteed once k + 1 > (sqrt(2)-1)/(beta-1).
  const int cap =
      static_cast<int>(std::ceil((kSqrt2 - 1.0) / (beta - 1.0))) + 2;
  for (int k = 0; k <= cap; ++k) {
    if (delta(k, beta) > 0.0) {
      return k;
    }
  }
  throw std::logic_error("k_c: no positive delta below the theoretical cap");
}

double tilde_norm_len(double t, double beta, double h) {
  const double q = q_of_t(t);
  const double p = t + h - q;
  if (!(p >= 0.0)) {
    throw DomainError("tilde_norm_len: implied light thickness is negative");
  }
  const snell::StripSpec spec{p, q, h, beta};
  return snell::snell_length(spec) - t - h * kSqrt2;
}

double tilde_norm_len_dh(double t, double beta, double h) {
  const double q = q_of_t(t);
  const double p = t + h - q;
  if (!(p >= 0.0)) {
    throw DomainError("tilde_norm_len_dh: implied light thickness is negative");
  }
  const snell::StripSpec spec{p, q, h, beta};
  const double s = snell::solve_sigma(spec);
  return std::sqrt(1.0 - s * s) + s - kSqrt2;
}

CriticalTable CriticalTable::compute(int max_k) {
  if (max_k < 0) {
    throw DomainError("CriticalTable: max_k must be non-negative");
  }
  CriticalTable table;
  table.entries.reserve(static_cast<std::size_t>(max_k) + 1);
  for (int k = 0; k <= max_k; ++k) {
    table.entries.push_back(Entry{k, beta_c(k)});
  }
  return table;
}

}  // namespace chessgeo::normlen
