#include <doctest.h>

#include <chessgeo/errors.hpp>
#include <chessgeo/normlen.hpp>

#include <cmath>
#include <numbers>
#include <random>

using chessgeo::DomainError;
using namespace chessgeo::normlen;

namespace {
constexpr double kSqrt2 = std::numbers::sqrt2;
const double kSqrt32 = std::sqrt(1.5);
}  // namespace

TEST_CASE("q_of_t and p_of_t") {
  CHECK(q_of_t(0.0) == 0.0);
  CHECK(p_of_t(0.0) == 1.0);
  CHECK(q_of_t(1.0) == 1.0);
  CHECK(p_of_t(1.0) == 1.0);
  CHECK(q_of_t(2.5) == 1.5);
  CHECK(p_of_t(2.5) == 2.0);
  CHECK(q_of_t(2.0) == 1.0);
  CHECK(q_of_t(3.0) == 2.0);
  CHECK_THROWS_AS(q_of_t(-0.1), DomainError);

  std::mt19937 rng(3);
  std::uniform_real_distribution<double> u(0.0, 20.0);
  for (int i = 0; i < 200; ++i) {
    const double t = u(rng);
    CHECK(p_of_t(t) + q_of_t(t) == doctest::Approx(t + 1.0).epsilon(1e-14));
    CHECK(q_of_t(t) >= 0.0);
    CHECK(p_of_t(t) >= 0.0);
  }
}

TEST_CASE("sigma_hat") {
  for (const double beta : {1.0, 1.1, 1.5, 2.0, 3.0}) {
    CHECK(sigma_hat(0.0, beta) == doctest::Approx(1.0 / kSqrt2).epsilon(1e-13));
  }
  // uniform-medium closed form
  for (const double t : {0.3, 1.0, 2.7, 5.5}) {
    CHECK(sigma_hat(t, 1.0) ==
          doctest::Approx(1.0 / std::hypot(1.0 + t, 1.0)).epsilon(1e-13));
  }
  // shared fixture with the strip solver
  CHECK(sigma_hat(2.0, 1.5) == doctest::Approx(0.354037648564).epsilon(5e-12));

  SUBCASE("monotone in t, monotone in beta, above the uniform value") {
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> ut(0.01, 8.0);
    std::uniform_real_distribution<double> ub(1.01, 2.5);
    for (int i = 0; i < 100; ++i) {
      const double t = ut(rng);
      const double beta = ub(rng);
      CHECK(sigma_hat(t + 0.3, beta) < sigma_hat(t, beta));
      CHECK(sigma_hat(t, beta + 0.2) > sigma_hat(t, beta));
      CHECK(sigma_hat(t, beta) > 1.0 / std::hypot(1.0 + t, 1.0));
    }
  }
}

TEST_CASE("norm_len basics") {
  for (const double beta : {1.0, 1.2, 1.5, 2.0}) {
    CHECK(std::abs(norm_len(0.0, beta)) < 1e-13);
  }
  CHECK(norm_len(2.0, 1.5) == doctest::Approx(0.267906867122).epsilon(1e-11));
  CHECK(std::abs(norm_len(2.0, beta_c0())) < 1e-10);
  // 12-digit regression for the first critical index
  CHECK(beta_c0() == doctest::Approx(1.24084305632).epsilon(1e-10));
}

TEST_CASE("norm_len is strictly convex on each regime interval") {
  for (const double beta : {1.1, 1.3, 1.7}) {
    for (int base = 0; base < 6; ++base) {
      const double a = base + 0.2;
      const double b = base + 0.5;
      const double c = base + 0.8;
      const double mid = norm_len(b, beta);
      CHECK(mid < 0.5 * (norm_len(a, beta) + norm_len(c, beta)));
    }
  }
}

TEST_CASE("norm_len_deriv") {
  // light intervals descend with slope in (-1, 0)
  for (const double beta : {1.2, 1.5, 2.0}) {
    const double d = norm_len_deriv(1.5, beta);
    CHECK(d > -1.0);
    CHECK(d < 0.0);
  }
  // dark intervals ascend once beta is at least sqrt(3/2)
  for (const double beta : {kSqrt32, 1.3, 2.0}) {
    CHECK(norm_len_deriv(0.5, beta) > 0.0);
  }

  SUBCASE("finite differences away from integers") {
    const double step = 1e-5;
    for (const auto [t, beta] : {std::pair{1.5, 1.3}, {0.4, 1.1}, {3.3, 1.8}}) {
      const double fd =
          (norm_len(t + step, beta) - norm_len(t - step, beta)) / (2 * step);
      CHECK(std::abs(norm_len_deriv(t, beta) - fd) <= 1e-6);
    }
  }

  SUBCASE("integer t needs an explicit side") {
    CHECK_THROWS_AS(norm_len_deriv(2.0, 1.3), DomainError);
    CHECK_THROWS_AS(norm_len_deriv(0.0, 1.3, Side::Left), DomainError);
    // one-sided limits agree with the adjacent interval formulas
    const double right = norm_len_deriv(2.0, 1.3, Side::Right);
    const double left = norm_len_deriv(2.0, 1.3, Side::Left);
    CHECK(right > left);  // jump up into the dark interval
    const double s = sigma_hat(2.0, 1.3);
    CHECK(left ==
          doctest::Approx(std::sqrt(1.0 - s * s) - 1.0).epsilon(1e-13));
    CHECK(right ==
          doctest::Approx(std::sqrt(1.3 * 1.3 - s * s) - 1.0).epsilon(1e-13));
  }
}

TEST_CASE("t_zero") {
  const double t0 = t_zero(1.2);
  CHECK(t0 == doctest::Approx(0.171250513327).epsilon(1e-9));
  CHECK(std::abs(sigma_hat(t0, 1.2) - std::sqrt(1.2 * 1.2 - 1.0)) < 1e-10);

  CHECK(t_zero(1.01) == doctest::Approx(6.01263981102).epsilon(1e-9));
  // t0 grows as beta drops toward 1
  CHECK(t_zero(1.01) > t_zero(1.05));
  CHECK(t_zero(1.05) > t_zero(1.2));
  // near the upper end of the regime t0 collapses to 0
  CHECK(t_zero(1.2247) < 0.01);

  CHECK_THROWS_AS(t_zero(1.0), DomainError);
  CHECK_THROWS_AS(t_zero(kSqrt32), DomainError);
  CHECK_THROWS_AS(t_zero(1.5), DomainError);
}

TEST_CASE("delta") {
  // closed form in the uniform medium
  for (int k = 0; k <= 50; ++k) {
    const double closed = std::sqrt(1.0 + (2.0 * k + 3.0) * (2.0 * k + 3.0)) -
                          std::sqrt(1.0 + (2.0 * k + 1.0) * (2.0 * k + 1.0)) -
                          2.0;
    CHECK(std::abs(delta(k, 1.0) - closed) <= 1e-12);
  }
  CHECK(delta(0, 1.0) ==
        doctest::Approx(std::sqrt(10.0) - kSqrt2 - 2.0).epsilon(1e-13));
  CHECK(std::abs(delta(0, beta_c0())) < 1e-10);

  // large-k behaviour: (beta-1) - beta/(2(beta+1)k^2) up to O(1/k^3)
  const double beta = 1.5;
  const double asym = (beta - 1.0) - beta / (2.0 * (beta + 1.0)) / 1e6;
  CHECK(std::abs(delta(1000, beta) - asym) < 2e-9);
  CHECK(delta(1000, beta) == doctest::Approx(0.499999700659).epsilon(1e-11));

  SUBCASE("monotone in k and beta, signs at the interval ends") {
    for (const double b : {1.05, 1.2, 1.41}) {
      for (int k = 0; k < 8; ++k) {
        CHECK(delta(k + 1, b) > delta(k, b));
        CHECK(delta(k, b + 0.05) > delta(k, b));
        CHECK(delta(k, 1.0) < 0.0);
        CHECK(delta(k, kSqrt2) > 0.0);
      }
    }
  }
}

TEST_CASE("beta_c") {
  const double table[8] = {1.24084, 1.06413, 1.02820, 1.01577,
                           1.01006, 1.00698, 1.00512, 1.00392};
  double prev = kSqrt2;
  for (int k = 0; k < 8; ++k) {
    const double bc = beta_c(k);
    CHECK(std::abs(bc - table[k]) <= 5e-6);
    CHECK(bc < prev);                              // strictly decreasing
    CHECK(bc > 1.0);
    CHECK(bc < 1.0 + (kSqrt2 - 1.0) / (k + 1.0));  // the a-priori bound
    CHECK(std::abs(delta(k, bc)) <= kTolDelta);
    prev = bc;
  }
  CHECK(beta_c(1) < kSqrt32);
  CHECK(kSqrt32 < beta_c(0));
}

TEST_CASE("k_c") {
  CHECK(k_c(1.3) == 0);
  CHECK(k_c(1.1) == 1);
  CHECK(k_c(1.05) == 2);
  CHECK(k_c(1.5) == 0);
  CHECK(k_c(1.009) == 5);
  // k_c steps down by one when beta crosses a critical index
  CHECK(k_c(beta_c(1) - 1e-6) == 2);
  CHECK(k_c(beta_c(1) + 1e-6) == 1);
  CHECK_THROWS_AS(k_c(1.0), DomainError);
  CHECK_THROWS_AS(k_c(0.8), DomainError);
}

TEST_CASE("tilde_norm_len") {
  // h = 1 reduces to the plain normalized length
  for (const auto [t, beta] : {std::pair{0.5, 1.2}, {2.0, 1.5}, {3.7, 1.1}}) {
    CHECK(tilde_norm_len(t, beta, 1.0) ==
          doctest::Approx(norm_len(t, beta)).epsilon(1e-13));
  }

  SUBCASE("descends in h") {
    std::mt19937 rng(23);
    std::uniform_real_distribution<double> ut(0.1, 6.0);
    std::uniform_real_distribution<double> uh(0.05, 0.95);
    std::uniform_real_distribution<double> ub(1.05, 2.5);
    for (int i = 0; i < 100; ++i) {
      CHECK(tilde_norm_len_dh(ut(rng), ub(rng), uh(rng)) < 0.0);
    }
  }

  SUBCASE("height derivative matches finite differences") {
    const double step = 1e-5;
    const double fd = (tilde_norm_len(1.5, 1.3, 0.5 + step) -
                       tilde_norm_len(1.5, 1.3, 0.5 - step)) /
                      (2 * step);
    CHECK(std::abs(tilde_norm_len_dh(1.5, 1.3, 0.5) - fd) <= 1e-6);
  }

  SUBCASE("strictly convex in h") {
    for (const double t : {0.8, 2.3, 4.1}) {
      const double lo = tilde_norm_len(t, 1.2, 0.3);
      const double mid = tilde_norm_len(t, 1.2, 0.5);
      const double hi = tilde_norm_len(t, 1.2, 0.7);
      CHECK(mid < 0.5 * (lo + hi));
    }
  }

  CHECK_THROWS_AS(tilde_norm_len(1.0, 1.2, 0.0), DomainError);
  CHECK_THROWS_AS(tilde_norm_len(1.0, 1.2, 1.5), DomainError);
}

TEST_CASE("global minimum sits at an even integer") {
  for (const double beta : {1.23, 1.1}) {
    const int kc = k_c(beta);
    double best_t = 0.0;
    double best = norm_len(0.0, beta);
    for (double t = 1e-3; t <= 2.0 * kc + 6.0; t += 1e-3) {
      const double v = norm_len(t, beta);
      if (v < best) {
        best = v;
        best_t = t;
      }
    }
    CHECK(std::abs(best_t - 2.0 * kc) <= 2e-3);
  }
}

TEST_CASE("critical table") {
  const auto table = CriticalTable::compute(3);
  REQUIRE(table.entries.size() == 4);
  CHECK(table.entries[0].k == 0);
  CHECK(table.entries[3].k == 3);
  CHECK(table.entries[0].beta_c == doctest::Approx(1.24084).epsilon(1e-5));
  CHECK_THROWS_AS(CriticalTable::compute(-1), DomainError);
}
