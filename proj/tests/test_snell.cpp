#include <doctest.h>

#include <chessgeo/errors.hpp>
#include <chessgeo/geodesic.hpp>
#include <chessgeo/snell.hpp>

#include <cmath>
#include <numbers>
#include <random>

using chessgeo::DomainError;
using chessgeo::Point;
using namespace chessgeo::snell;

namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;

// Independent check: plain sign-based bisection on the raw constraint,
// written without reference to the solver under test.
double reference_sigma(double p, double q, double h, double beta) {
  const auto residual = [&](long double s) {
    return static_cast<double>(p * s / std::sqrt(1.0L - s * s) +
                               q * s / std::sqrt(beta * beta - s * s) - h);
  };
  long double lo = 0.0L;
  long double hi = 1.0L - 1e-16L;
  for (int i = 0; i < 120; ++i) {
    const long double mid = (lo + hi) / 2;
    (residual(mid) < 0 ? lo : hi) = mid;
  }
  return static_cast<double>((lo + hi) / 2);
}

}  // namespace

TEST_CASE("solve_sigma closed forms") {
  // single light square crossed diagonally
  CHECK(solve_sigma({1, 0, 1, 2}) == doctest::Approx(1.0 / kSqrt2).epsilon(1e-14));
  // uniform medium: straight segment
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> u(0.1, 4.0);
  for (int i = 0; i < 20; ++i) {
    const double p = u(rng), q = u(rng);
    const double h = 0.1 + 0.9 * (i / 20.0);
    const double expect = h / std::hypot(p + q, h);
    CHECK(solve_sigma({p, q, h, 1.0}) == doctest::Approx(expect).epsilon(1e-14));
  }
}

TEST_CASE("solve_sigma matches the independent bisection fixture") {
  const StripSpec spec{2, 1, 1, 1.5};
  const double s = solve_sigma(spec);
  // regression value, frozen at 12 digits
  CHECK(s == doctest::Approx(0.354037648564).epsilon(5e-12));
  CHECK(std::abs(s - reference_sigma(2, 1, 1, 1.5)) < 1e-11);
  // the defining residual
  const double res = 2 * s / std::sqrt(1 - s * s) +
                     s / std::sqrt(1.5 * 1.5 - s * s) - 1.0;
  CHECK(std::abs(res) <= kTolSigma);
}

TEST_CASE("solve_sigma rejects invalid specs") {
  CHECK_THROWS_AS(solve_sigma({0, 0, 1, 2}), DomainError);
  CHECK_THROWS_AS(solve_sigma({1, 1, 0, 2}), DomainError);
  CHECK_THROWS_AS(solve_sigma({1, 1, 1.5, 2}), DomainError);  // h > 1
  CHECK_THROWS_AS(solve_sigma({1, 1, -0.5, 2}), DomainError);
  CHECK_THROWS_AS(solve_sigma({-1, 1, 1, 2}), DomainError);
  CHECK_THROWS_AS(solve_sigma({1, 1, 1, 0.5}), DomainError);  // beta < 1
}

TEST_CASE("snell_length closed forms and bounds") {
  CHECK(snell_length({1, 0, 1, 2}) == doctest::Approx(kSqrt2).epsilon(1e-14));
  CHECK(snell_length({1, 0, 1, 1.2}) == doctest::Approx(kSqrt2).epsilon(1e-14));
  CHECK(snell_length({3, 2, 0.7, 1}) ==
        doctest::Approx(std::hypot(5.0, 0.7)).epsilon(1e-14));
  CHECK(snell_length({2, 1, 1, 1.5}) ==
        doctest::Approx(3.68212042949).epsilon(1e-11));

  std::mt19937 rng(11);
  std::uniform_real_distribution<double> u(0.1, 5.0);
  std::uniform_real_distribution<double> uh(0.05, 1.0);
  std::uniform_real_distribution<double> ub(1.0001, 3.0);
  for (int i = 0; i < 200; ++i) {
    const StripSpec spec{u(rng), u(rng), uh(rng), ub(rng)};
    const double len = snell_length(spec);
    const double euclid = std::hypot(spec.p + spec.q, spec.h);
    CHECK(len >= euclid - 1e-12);
    CHECK(len <= spec.beta * euclid + 1e-12);
  }
}

TEST_CASE("optical length increases with the dark share at fixed thickness") {
  std::mt19937 rng(13);
  std::uniform_real_distribution<double> u(0.2, 4.0);
  std::uniform_real_distribution<double> uh(0.1, 1.0);
  std::uniform_real_distribution<double> ub(1.05, 2.5);
  for (int i = 0; i < 100; ++i) {
    const double tau = u(rng);
    const double h = uh(rng);
    const double beta = ub(rng);
    const double q1 = 0.2 * tau;
    const double q2 = 0.7 * tau;
    CHECK(snell_length({tau - q2, q2, h, beta}) >
          snell_length({tau - q1, q1, h, beta}));
  }
}

TEST_CASE("solve_sigma monotone in p, q, h") {
  std::mt19937 rng(17);
  std::uniform_real_distribution<double> u(0.2, 4.0);
  std::uniform_real_distribution<double> uh(0.1, 0.9);
  std::uniform_real_distribution<double> ub(1.05, 2.5);
  for (int i = 0; i < 100; ++i) {
    const StripSpec spec{u(rng), u(rng), uh(rng), ub(rng)};
    const double s = solve_sigma(spec);
    StripSpec more_p = spec;
    more_p.p += 0.5;
    StripSpec more_q = spec;
    more_q.q += 0.5;
    StripSpec more_h = spec;
    more_h.h = spec.h + 0.05;
    CHECK(solve_sigma(more_p) < s);
    CHECK(solve_sigma(more_q) < s);
    CHECK(solve_sigma(more_h) > s);
  }
}

TEST_CASE("snell_partials") {
  const auto trivial = snell_partials({1, 0, 1, 2});
  CHECK(trivial.dp == doctest::Approx(1.0 / kSqrt2).epsilon(1e-14));
  CHECK(trivial.dq == doctest::Approx(std::sqrt(3.5)).epsilon(1e-14));

  // uniform medium: both partials equal the direction cosine
  const auto uniform = snell_partials({2, 3, 0.4, 1});
  const double expect = 5.0 / std::hypot(5.0, 0.4);
  CHECK(uniform.dp == doctest::Approx(expect).epsilon(1e-14));
  CHECK(uniform.dq == doctest::Approx(expect).epsilon(1e-14));

  // central finite differences over a random sweep
  std::mt19937 rng(19);
  std::uniform_real_distribution<double> u(0.1, 5.0);
  std::uniform_real_distribution<double> uh(0.05, 1.0);
  std::uniform_real_distribution<double> ub(1.001, 3.0);
  const double step = 1e-5;
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const StripSpec spec{u(rng), u(rng), uh(rng), ub(rng)};
    const auto grad = snell_partials(spec);
    StripSpec sp = spec, sm = spec;
    sp.p += step;
    sm.p -= step;
    const double fd_p = (snell_length(sp) - snell_length(sm)) / (2 * step);
    StripSpec sq = spec, sr = spec;
    sq.q += step;
    sr.q -= step;
    const double fd_q = (snell_length(sq) - snell_length(sr)) / (2 * step);
    worst = std::max({worst, std::abs(fd_p - grad.dp), std::abs(fd_q - grad.dq)});
  }
  CHECK(worst <= 1e-6);
}

TEST_CASE("snell_polyline") {
  SUBCASE("single light column is one straight segment") {
    const auto pl = snell_polyline(Point(0, 0), {1, 0, 1, 2}, Medium::Light);
    REQUIRE(pl.size() == 2);
    CHECK(pl[0].norm() == 0.0);
    CHECK((pl[1] - Point(1, 1)).norm() < 1e-12);
  }

  SUBCASE("uniform medium gives collinear breakpoints") {
    const auto pl = snell_polyline(Point(0, 0), {2, 1, 1, 1}, Medium::Light);
    REQUIRE(pl.size() == 4);
    for (std::size_t i = 0; i < pl.size(); ++i) {
      CHECK(std::abs(pl[i].y() - pl[i].x() / 3.0) < 1e-12);
    }
  }

  SUBCASE("three-column refraction fixture") {
    const StripSpec spec{2, 1, 1, 1.5};
    const auto pl = snell_polyline(Point(0, 0), spec, Medium::Light);
    REQUIRE(pl.size() == 4);
    CHECK(pl[1].y() == doctest::Approx(0.378556296565).epsilon(1e-11));
    CHECK(pl[2].y() == doctest::Approx(0.621443703435).epsilon(1e-11));
    CHECK(std::abs(pl[3].y() - 1.0) <= kTolLen);
    CHECK(std::abs(pl[3].x() - 3.0) < 1e-12);

    // measuring the polyline in the chessboard agrees with the closed form
    const double measured = chessgeo::geodesic::optical_length(pl, spec.beta);
    CHECK(std::abs(measured - snell_length(spec)) <= kTolLen);
  }

  SUBCASE("inconsistent thickness split is rejected") {
    CHECK_THROWS_AS(snell_polyline(Point(0, 0), {3, 0, 1, 1.5}, Medium::Light),
                    DomainError);
  }
}
