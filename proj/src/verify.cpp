#include <chessgeo/verify.hpp>

#include <chessgeo/geodesic.hpp>
#include <chessgeo/homog.hpp>
#include <chessgeo/io.hpp>
#include <chessgeo/normlen.hpp>
#include <chessgeo/snell.hpp>

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

namespace chessgeo::verify {

namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

CheckResult critical_beta_table() {
  const auto start = std::chrono::steady_clock::now();
  constexpr std::array<double, 8> reference = {1.24084, 1.06413, 1.02820,
                                               1.01577, 1.01006, 1.00698,
                                               1.00512, 1.00392};
  double worst = 0.0;
  for (int k = 0; k < 8; ++k) {
    worst = std::max(worst, std::abs(normlen::beta_c(k) - reference[k]));
  }
  const double elapsed = seconds_since(start);
  std::ostringstream detail;
  detail << "k=0..7 vs 5-digit reference, " << io::format_number(elapsed)
         << " s";
  return {"critical-beta-table", worst <= 5e-6 && elapsed < 5.0, worst,
          detail.str()};
}

CheckResult uniform_medium_delta() {
  double worst = 0.0;
  for (int k = 0; k <= 50; ++k) {
    const double closed = std::sqrt(1.0 + (2.0 * k + 3.0) * (2.0 * k + 3.0)) -
                          std::sqrt(1.0 + (2.0 * k + 1.0) * (2.0 * k + 1.0)) -
                          2.0;
    worst = std::max(worst, std::abs(normlen::delta(k, 1.0) - closed));
  }
  return {"uniform-medium-delta-closed-form", worst <= 1e-12, worst,
          "k=0..50 at beta=1"};
}

CheckResult delta_asymptotics() {
  bool pass = true;
  double worst = 0.0;
  std::ostringstream detail;
  detail << "k^3-scaled remainder ratios k=400/k=200:";
  for (const double beta : {1.1, 1.5, 2.0}) {
    const auto scaled_rem = [beta](int k) {
      const double asym =
          (beta - 1.0) - beta / (2.0 * (beta + 1.0)) / (double(k) * k);
      return std::abs(normlen::delta(k, beta) - asym) * std::pow(double(k), 3);
    };
    const double ratio = scaled_rem(400) / scaled_rem(200);
    pass = pass && ratio >= 0.3 && ratio <= 3.0;
    worst = std::max(worst, std::abs(ratio - 1.0));
    detail << ' ' << io::format_number(ratio);
  }
  return {"delta-large-k-asymptotics", pass, worst, detail.str()};
}

CheckResult counterexample_root() {
  const double tb = geodesic::tilde_beta();
  const double root_err = std::abs(tb - 1.17868);

  const double base = geodesic::counterexample_curve(1.1, 0.0);
  double best_drop = 0.0;
  for (double t = 1e-3; t < 0.1; t += 1e-3) {
    best_drop =
        std::min(best_drop, geodesic::counterexample_curve(1.1, t) - base);
  }
  std::ostringstream detail;
  detail << "root=" << io::format_number(tb)
         << ", best descent=" << io::format_number(best_drop);
  return {"counterexample-root-and-descent",
          root_err <= 5e-6 && best_drop < 0.0, root_err, detail.str()};
}

CheckResult gradient_checks() {
  std::mt19937 rng(20240517);
  std::uniform_real_distribution<double> upq(0.1, 5.0);
  std::uniform_real_distribution<double> uh(0.05, 1.0);
  std::uniform_real_distribution<double> ubeta(1.001, 3.0);
  const double step = 1e-5;
  double worst = 0.0;

  for (int i = 0; i < 100; ++i) {
    const snell::StripSpec spec{upq(rng), upq(rng), uh(rng), ubeta(rng)};
    const auto grad = snell::snell_partials(spec);
    auto perturbed = [&](double dp, double dq) {
      snell::StripSpec s = spec;
      s.p += dp;
      s.q += dq;
      return snell::snell_length(s);
    };
    const double fd_p =
        (perturbed(step, 0.0) - perturbed(-step, 0.0)) / (2.0 * step);
    const double fd_q =
        (perturbed(0.0, step) - perturbed(0.0, -step)) / (2.0 * step);
    worst = std::max({worst, std::abs(fd_p - grad.dp),
                      std::abs(fd_q - grad.dq)});
  }

  std::uniform_real_distribution<double> ut(0.1, 6.0);
  std::uniform_real_distribution<double> uh2(0.01, 0.99);
  for (int i = 0; i < 100; ++i) {
    const double t = ut(rng);
    const double h = uh2(rng);
    const double beta = ubeta(rng);
    const double fd = (normlen::tilde_norm_len(t, beta, h + step) -
                       normlen::tilde_norm_len(t, beta, h - step)) /
                      (2.0 * step);
    worst = std::max(worst, std::abs(fd - normlen::tilde_norm_len_dh(t, beta, h)));
  }
  return {"gradient-finite-difference", worst <= 1e-6, worst,
          "100 strip specs + 100 height derivatives"};
}

CheckResult oracle_equivalence() {
  const auto start = std::chrono::steady_clock::now();
  const std::array<std::pair<int, int>, 4> targets = {
      std::pair{1, 1}, {1, 2}, {2, 1}, {2, 3}};  // (3,1) (4,2) (5,1) (7,3)
  bool pass = true;
  double worst = 0.0;
  for (const double beta : {1.25, 1.3, 1.5, 2.0}) {
    for (const auto& [n, j] : targets) {
      const double closed =
          geodesic::geodesic_to_light_vertex(n, j, beta).optical_length;
      const Point b(2.0 * n + j, j);
      const double d64 =
          geodesic::oracle_distance(Point(0, 0), b, beta, 64);
      const double d128 =
          geodesic::oracle_distance(Point(0, 0), b, beta, 128);
      const double gap64 = std::abs(d64 - closed);
      const double gap128 = std::abs(d128 - closed);
      pass = pass && gap64 <= 5e-3 && gap128 <= gap64 + 1e-12;
      worst = std::max(worst, gap64);
    }
  }
  const double elapsed = seconds_since(start);
  pass = pass && elapsed < 60.0;
  std::ostringstream detail;
  detail << "4 betas x 4 targets, N=64 then 128, "
         << io::format_number(elapsed) << " s";
  return {"oracle-vs-closed-form", pass, worst, detail.str()};
}

bool convex_ccw(const homog::UnitBall& ball) {
  const auto& vs = ball.vertices;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const Point a = vs[i].p;
    const Point b = vs[(i + 1) % vs.size()].p;
    const Point c = vs[(i + 2) % vs.size()].p;
    const double cross =
        (b.x() - a.x()) * (c.y() - b.y()) - (b.y() - a.y()) * (c.x() - b.x());
    if (cross <= 0.0) {
      return false;
    }
  }
  return true;
}

bool has_face_and_corner(const homog::UnitBall& ball) {
  const auto& vs = ball.vertices;
  bool face = false;
  bool corner = false;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const Point a = vs[i].p;
    const Point b = vs[(i + 1) % vs.size()].p;
    const Point c = vs[(i + 2) % vs.size()].p;
    if ((b - a).norm() > 1e-9) {
      face = true;
    }
    const Point d1 = (b - a).normalized();
    const Point d2 = (c - b).normalized();
    if (std::abs(d1.x() * d2.y() - d1.y() * d2.x()) > 1e-9) {
      corner = true;
    }
  }
  return face && corner;
}

CheckResult unit_ball_polygons() {
  const auto octagon = homog::unit_ball(1.5);
  const auto hexadecagon = homog::unit_ball(1.23);
  double worst = 0.0;
  bool pass = octagon.vertices.size() == 8 && hexadecagon.vertices.size() == 16;
  if (pass) {
    worst = std::max(worst, (octagon.vertices[0].p - Point(1, 0)).norm());
    worst = std::max(
        worst,
        (octagon.vertices[1].p - Point(1.0 / kSqrt2, 1.0 / kSqrt2)).norm());
    pass = worst <= 1e-12;
    pass = pass && convex_ccw(octagon) && convex_ccw(hexadecagon);
    pass = pass && has_face_and_corner(octagon) &&
           has_face_and_corner(hexadecagon);
  }
  std::ostringstream detail;
  detail << octagon.vertices.size() << " + " << hexadecagon.vertices.size()
         << " vertices, convexity and face/corner structure";
  return {"unit-ball-polygons", pass, worst, detail.str()};
}

CheckResult minimum_structure() {
  bool pass = true;
  double worst = 0.0;
  std::ostringstream detail;
  detail << "grid minimizers:";
  for (const double beta : {1.26, 1.23, 1.2, 1.1, 1.05, 1.009}) {
    const int kc = normlen::k_c(beta);
    const double hi = 2.0 * kc + 6.0;
    double best_t = 0.0;
    double best = normlen::norm_len(0.0, beta);
    for (double t = 1e-3; t <= hi + 1e-9; t += 1e-3) {
      const double v = normlen::norm_len(t, beta);
      if (v < best) {
        best = v;
        best_t = t;
      }
    }
    const double err = std::abs(best_t - 2.0 * kc);
    pass = pass && err <= 2e-3;
    worst = std::max(worst, err);
    detail << ' ' << io::format_number(best_t);
  }
  return {"normalized-length-minimum-structure", pass, worst, detail.str()};
}

CheckResult interior_minimum_dominated() {
  bool pass = true;
  double worst = -1.0;
  for (const double beta : {1.01, 1.05, 1.1, 1.2}) {
    const double t0 = normlen::t_zero(beta);
    int k0 = 0;
    while (!(t0 <= 2.0 * k0 + 2.0)) {
      ++k0;
    }
    const double margin = normlen::norm_len(2.0 * k0 + 2.0, beta) -
                          normlen::norm_len(t0, beta);
    pass = pass && margin <= 1e-10;
    worst = std::max(worst, margin);
  }
  return {"interior-minimum-dominated", pass, worst,
          "l(2k0+2) <= l(t0) at four betas below sqrt(3/2)"};
}

CheckResult homogenization_consistency() {
  const auto est = homog::phi_estimate(1.0, 1.0, 1.5, 8, 64);
  const double est_err = std::abs(est.value - kSqrt2);
  bool pass = est_err <= std::sqrt(5.0) / 8.0 + 5e-3;

  std::mt19937 rng(987654);
  std::uniform_real_distribution<double> ubeta(std::sqrt(1.5), 2.2);
  std::uniform_real_distribution<double> uM(0.1, 5.0);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const double beta = ubeta(rng);
    const int kc = normlen::k_c(beta);
    const double M = uM(rng);
    const double m = u01(rng) * M / (2.0 * kc + 1.0);
    const double diff =
        std::abs(homog::phi(M, m, beta) - homog::phi_on_cone(M, m, beta));
    worst = std::max(worst, diff);
  }
  pass = pass && worst <= 1e-12;
  std::ostringstream detail;
  detail << "estimate err=" << io::format_number(est_err)
         << ", cone-vs-closed-form max diff=" << io::format_number(worst);
  return {"homogenization-consistency", pass, std::max(est_err, worst),
          detail.str()};
}

}  // namespace

std::vector<CheckResult> run_acceptance() {
  std::vector<CheckResult> results;
  results.push_back(critical_beta_table());
  results.push_back(uniform_medium_delta());
  results.push_back(delta_asymptotics());
  results.push_back(counterexample_root());
  results.push_back(gradient_checks());
  results.push_back(oracle_equivalence());
  results.push_back(unit_ball_polygons());
  results.push_back(minimum_structure());
  results.push_back(interior_minimum_dominated());
  results.push_back(homogenization_consistency());
  return results;
}

bool run_acceptance(std::ostream& os) {
  bool all = true;
  const auto results = run_acceptance();
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& r = results[i];
    all = all && r.pass;
    os << (r.pass ? "[PASS] " : "[FAIL] ") << (i + 1) << ' ' << r.name
       << "  residual=" << io::format_number(r.residual) << "  (" << r.detail
       << ")\n";
  }
  return all;
}

}  // namespace chessgeo::verify
