#pragma once

#include <iosfwd>
#include <vector>

namespace chessgeo::normlen {

/// Residual tolerance on delta(k, .) at a computed critical beta.
inline constexpr double kTolDelta = 1e-10;

/// Dark thickness crossed by the strip path for horizontal excess t >= 0:
/// floor(t+1)/2 when floor(t) is odd, t - floor(t)/2 when floor(t) is even.
double q_of_t(double t);
/// Light thickness, p = t + 1 - q(t).
double p_of_t(double t);

/// Sine of the light-side angle for the strip path of excess t, height 1.
/// Strictly decreasing in t from sigma_hat(0, beta) = 1/sqrt(2).
double sigma_hat(double t, double beta);

/// Normalized length l(t, beta): optical length of the strip path minus the
/// best light-only length t + sqrt(2). l(0, beta) = 0 for every beta.
double norm_len(double t, double beta);

enum class Side { Left, Right };

/// dl/dt at non-integer t: sqrt(1-sigma^2)-1 on light intervals (floor(t)
/// odd), sqrt(beta^2-sigma^2)-1 on dark intervals (floor(t) even).
/// Throws at integer t; the derivative jumps there, use the Side overload.
double norm_len_deriv(double t, double beta);
/// One-sided derivative: picks the regime of the interval on the given side
/// of t. Side::Left requires t > 0.
double norm_len_deriv(double t, double beta, Side side);

/// The unique t0 > 0 with sigma_hat(t0, beta) = sqrt(beta^2 - 1).
/// Defined only for 1 < beta < sqrt(3/2).
double t_zero(double beta);

/// delta(k, beta) = l(2k+2, beta) - l(2k, beta); beta >= 1.
/// Strictly increasing in both k and beta; negative at beta = 1, positive at
/// beta = sqrt(2).
double delta(int k, double beta);

/// The unique root of beta -> delta(k, beta) in (1, sqrt(2)).
/// Satisfies 1 < beta_c(k) < 1 + (sqrt(2)-1)/(k+1) and decreases to 1.
double beta_c(int k);

/// beta_c(0), computed once and cached (separates the octagon regime from
/// the three-column-path regime).
double beta_c0();

/// k_c(beta) = min{ k : delta(k, beta) > 0 }, beta > 1.
int k_c(double beta);

/// Generalized normalized length of a strip path climbing only height
/// h in (0, 1]: light thickness p = t + h - q(t), normalization t + h*sqrt(2).
double tilde_norm_len(double t, double beta, double h);
/// d/dh of the above: sqrt(1-sigma^2) + sigma - sqrt(2); negative for t > 0,
/// h in (0, 1).
double tilde_norm_len_dh(double t, double beta, double h);

struct CriticalTable {
  struct Entry {
    int k;
    double beta_c;
  };
  std::vector<Entry> entries;

  static CriticalTable compute(int max_k);
};

}  // namespace chessgeo::normlen
