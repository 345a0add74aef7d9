#include <CLI11.hpp>

#include <chessgeo/errors.hpp>
#include <chessgeo/geodesic.hpp>
#include <chessgeo/homog.hpp>
#include <chessgeo/io.hpp>
#include <chessgeo/normlen.hpp>
#include <chessgeo/verify.hpp>

#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>

namespace {

using chessgeo::Point;

void emit(const std::string& path,
          const std::function<void(std::ostream&)>& writer) {
  if (path.empty()) {
    writer(std::cout);
    return;
  }
  std::ofstream os(path);
  if (!os) {
    throw chessgeo::DomainError("cannot open output file: " + path);
  }
  writer(os);
}

void write_phi_result(std::ostream& os, const std::string& format,
                      double value, const std::string& method,
                      double error_bound, bool conjectural) {
  if (format == "csv") {
    os << "value,method,error_bound,conjectural\n"
       << chessgeo::io::format_number(value) << ',' << method << ','
       << chessgeo::io::format_number(error_bound) << ','
       << (conjectural ? 1 : 0) << '\n';
    return;
  }
  os << "{\"value\":" << chessgeo::io::format_number(value) << ",\"method\":\""
     << method << "\",\"error_bound\":"
     << chessgeo::io::format_number(error_bound)
     << ",\"conjectural\":" << (conjectural ? "true" : "false") << "}\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Snell paths, critical thresholds, geodesics and the homogenized "
      "metric of the two-valued chessboard medium"};
  app.require_subcommand(1);

  std::string out_path;
  app.add_option("--out", out_path, "Write output to this file instead of stdout")
      ->capture_default_str();

  // betac
  auto* cmd_betac = app.add_subcommand("betac", "Critical indices beta_c(k)");
  int max_k = 7;
  cmd_betac->add_option("--max-k", max_k, "Largest k in the table")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();

  // normlen
  auto* cmd_normlen =
      app.add_subcommand("normlen", "Sample the normalized length l(t, beta)");
  double nl_beta = 1.5;
  double t_max = 8.0;
  double step = 1e-3;
  std::string nl_format = "csv";
  cmd_normlen->add_option("--beta", nl_beta, "Refractive index")->required();
  cmd_normlen->add_option("--t-max", t_max, "Upper end of the t range")
      ->capture_default_str();
  cmd_normlen->add_option("--step", step, "Sampling step")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd_normlen->add_option("--format", nl_format, "csv or svg")
      ->check(CLI::IsMember({"csv", "svg"}))
      ->capture_default_str();

  // delta
  auto* cmd_delta =
      app.add_subcommand("delta", "Increments delta(k, beta) of l(2k, beta)");
  double d_beta = 1.5;
  int d_max_k = 7;
  cmd_delta->add_option("--beta", d_beta, "Refractive index")->required();
  cmd_delta->add_option("--max-k", d_max_k, "Largest k")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();

  // kc
  auto* cmd_kc = app.add_subcommand("kc", "Critical index k_c(beta)");
  double kc_beta = 1.5;
  cmd_kc->add_option("--beta", kc_beta, "Refractive index")->required();

  // geodesic
  auto* cmd_geo =
      app.add_subcommand("geodesic", "Geodesic to the light vertex (2n+j, j)");
  int geo_n = 0;
  int geo_j = 0;
  double geo_beta = 1.5;
  int geo_oracle = 0;
  std::string geo_format = "json";
  cmd_geo->add_option("n", geo_n, "Diagonal index")
      ->required()
      ->check(CLI::NonNegativeNumber);
  cmd_geo->add_option("j", geo_j, "Height")
      ->required()
      ->check(CLI::NonNegativeNumber);
  cmd_geo->add_option("--beta", geo_beta, "Refractive index")->required();
  cmd_geo->add_option("--oracle", geo_oracle,
                      "Use the brute-force oracle at this refinement");
  cmd_geo->add_option("--format", geo_format, "json or svg")
      ->check(CLI::IsMember({"json", "svg"}))
      ->capture_default_str();

  // phi
  auto* cmd_phi =
      app.add_subcommand("phi", "Homogenized metric along a direction");
  double phi_x = 1.0;
  double phi_y = 0.0;
  double phi_beta = 1.5;
  int phi_scale = 16;
  int phi_oracle = 64;
  std::string phi_format = "json";
  cmd_phi->add_option("x", phi_x, "Direction x")->required();
  cmd_phi->add_option("y", phi_y, "Direction y")->required();
  cmd_phi->add_option("--beta", phi_beta, "Refractive index")->required();
  cmd_phi->add_option("--scale", phi_scale, "Rationalization scale")
      ->capture_default_str();
  cmd_phi->add_option("--oracle", phi_oracle, "Oracle refinement")
      ->capture_default_str();
  cmd_phi->add_option("--format", phi_format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();

  // ball
  auto* cmd_ball = app.add_subcommand("ball", "Unit ball of the metric");
  double ball_beta = 1.5;
  std::string ball_format = "svg";
  cmd_ball->add_option("--beta", ball_beta, "Refractive index")->required();
  cmd_ball->add_option("--format", ball_format, "svg or csv")
      ->check(CLI::IsMember({"svg", "csv"}))
      ->capture_default_str();

  // verify
  auto* cmd_verify =
      app.add_subcommand("verify", "Run the full verification suite");

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_betac->parsed()) {
      const auto table = chessgeo::normlen::CriticalTable::compute(max_k);
      emit(out_path, [&](std::ostream& os) {
        chessgeo::io::write_critical_table_csv(os, table);
      });
    } else if (cmd_normlen->parsed()) {
      chessgeo::io::Series series;
      for (double t = 0.0; t <= t_max + 1e-12; t += step) {
        series.emplace_back(t, chessgeo::normlen::norm_len(t, nl_beta));
      }
      emit(out_path, [&](std::ostream& os) {
        if (nl_format == "svg") {
          chessgeo::io::write_series_svg(os, series);
        } else {
          chessgeo::io::write_series_csv(os, series, "t", "l");
        }
      });
    } else if (cmd_delta->parsed()) {
      emit(out_path, [&](std::ostream& os) {
        os << "k,delta\n";
        for (int k = 0; k <= d_max_k; ++k) {
          os << k << ','
             << chessgeo::io::format_number(chessgeo::normlen::delta(k, d_beta))
             << '\n';
        }
      });
    } else if (cmd_kc->parsed()) {
      emit(out_path, [&](std::ostream& os) {
        os << chessgeo::normlen::k_c(kc_beta) << '\n';
      });
    } else if (cmd_geo->parsed()) {
      chessgeo::geodesic::GeodesicResult result;
      if (geo_oracle > 0) {
        const Point target(2.0 * geo_n + geo_j, geo_j);
        result = chessgeo::geodesic::oracle_geodesic(Point(0, 0), target,
                                                     geo_beta, geo_oracle);
      } else {
        result =
            chessgeo::geodesic::geodesic_to_light_vertex(geo_n, geo_j, geo_beta);
      }
      emit(out_path, [&](std::ostream& os) {
        if (geo_format == "svg") {
          chessgeo::io::write_geodesic_svg(os, result);
        } else {
          chessgeo::io::write_geodesic_json(os, result);
        }
      });
    } else if (cmd_phi->parsed()) {
      const double sqrt32 = std::sqrt(1.5);
      if (phi_beta >= sqrt32) {
        const double v = chessgeo::homog::phi(phi_x, phi_y, phi_beta);
        emit(out_path, [&](std::ostream& os) {
          write_phi_result(os, phi_format, v, "closed-form", 0.0, false);
        });
      } else {
        try {
          const double v =
              chessgeo::homog::phi_on_cone(phi_x, phi_y, phi_beta);
          emit(out_path, [&](std::ostream& os) {
            write_phi_result(os, phi_format, v, "cone", 0.0, false);
          });
        } catch (const chessgeo::CoverageError&) {
          const auto est = chessgeo::homog::phi_estimate(
              phi_x, phi_y, phi_beta, phi_scale, phi_oracle);
          emit(out_path, [&](std::ostream& os) {
            write_phi_result(os, phi_format, est.value, "estimate",
                             est.error_bound, est.conjectural);
          });
        }
      }
    } else if (cmd_ball->parsed()) {
      const auto ball = chessgeo::homog::unit_ball(ball_beta);
      emit(out_path, [&](std::ostream& os) {
        if (ball_format == "csv") {
          chessgeo::io::write_unit_ball_csv(os, ball);
        } else {
          chessgeo::io::write_unit_ball_svg(os, ball);
        }
      });
    } else if (cmd_verify->parsed()) {
      if (!chessgeo::verify::run_acceptance(std::cout)) {
        return 2;
      }
    }
  } catch (const chessgeo::UnsupportedRegimeError& e) {
    std::cerr << "error: " << e.what() << " (pass --oracle N)\n";
    return 1;
  } catch (const chessgeo::DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const chessgeo::ResourceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
