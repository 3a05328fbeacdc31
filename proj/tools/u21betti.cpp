// u21betti: Poincare polynomials and Euler characteristics of U(2,1) and
// SU(2,1) representation-space components.
//
// Exit codes: 0 ok, 1 verify found failing checks, 2 usage or validation
// error, 3 internal consistency failure.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "u21/error.hpp"
#include "u21/json_io.hpp"
#include "u21/moduli.hpp"
#include "u21/render.hpp"
#include "u21/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

u21::IntRange parse_range(const std::string& text) {
  try {
    const auto dots = text.find("..");
    std::size_t used = 0;
    if (dots == std::string::npos) {
      long v = std::stol(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return {v, v};
    }
    const std::string lo = text.substr(0, dots);
    const std::string hi = text.substr(dots + 2);
    long a = std::stol(lo, &used);
    if (used != lo.size()) throw std::invalid_argument(text);
    long b = std::stol(hi, &used);
    if (used != hi.size()) throw std::invalid_argument(text);
    return {a, b};
  } catch (const std::logic_error&) {
    throw u21::Error(u21::ErrorCode::InvalidArgument, "bad range '" + text + "', expected N or LO..HI");
  }
}

int report_error(const std::string& name, const std::string& message, u21::OutputFormat fmt, int code) {
  if (fmt == u21::OutputFormat::Json) {
    std::cout << u21::dump(u21::Json{{"error", name}, {"message", message}});
  } else {
    std::cerr << "error: " << name << ": " << message << "\n";
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Betti numbers of U(2,1) and SU(2,1) representation spaces"};
  app.require_subcommand(1);

  int genus = 2;
  long d1 = 0;
  long d2 = 0;
  long degree = 1;
  bool fixed_det = false;
  std::string format = "text";
  std::string genus_range;
  std::string degree_range;
  std::string csv_path;

  const std::vector<std::string> formats{"text", "json", "latex", "csv"};
  auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--fixed-det", fixed_det, "Fixed determinant (SU(2,1)) component");
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember(formats));
  };

  auto* poincare = app.add_subcommand("poincare", "Poincare polynomial of the component M_{d1,d2}");
  poincare->add_option("--genus,-g", genus, "Genus of the surface")->required();
  poincare->add_option("--d1", d1, "Degree of the rank-2 summand")->required();
  poincare->add_option("--d2", d2, "Degree of the line summand")->required();
  add_common(poincare);

  auto* components = app.add_subcommand("components", "All components for a given total degree");
  components->add_option("--genus,-g", genus, "Genus of the surface")->required();
  components->add_option("--degree,-d", degree, "Total degree d = d1 + d2")->required();
  add_common(components);

  auto* euler = app.add_subcommand("euler", "Euler characteristic of the component M_{d1,d2}");
  euler->add_option("--genus,-g", genus, "Genus of the surface")->required();
  euler->add_option("--d1", d1, "Degree of the rank-2 summand")->required();
  euler->add_option("--d2", d2, "Degree of the line summand")->required();
  add_common(euler);

  auto* verify = app.add_subcommand("verify", "Run every consistency check over a parameter sweep");
  verify->add_option("--genus,-g", genus_range, "Genus range, N or LO..HI")->required();
  verify->add_option("--degree,-d", degree_range, "Degree range, N or LO..HI")->required();
  verify->add_option("--csv", csv_path, "Also write every computed polynomial to this CSV file");
  add_common(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  const u21::OutputFormat fmt = u21::parse_format(format);
  const u21::Determinant det = fixed_det ? u21::Determinant::Fixed : u21::Determinant::Free;

  try {
    if (poincare->parsed()) {
      std::cout << u21::render_report(u21::component_poincare({genus, d1, d2, det}), fmt);
    } else if (euler->parsed()) {
      std::cout << u21::render_euler(u21::component_poincare({genus, d1, d2, det}), fmt);
    } else if (components->parsed()) {
      std::vector<u21::ComponentReport> reports;
      for (long c2 : u21::enumerate_components(genus, degree)) {
        reports.push_back(u21::component_poincare({genus, degree - c2, c2, det}));
      }
      std::cout << u21::render_components(genus, degree, det, reports, fmt);
    } else if (verify->parsed()) {
      const u21::SweepSpec spec{parse_range(genus_range), parse_range(degree_range), det};
      const u21::SweepResult result = u21::run_sweep(spec);
      std::cout << u21::render_sweep(result, fmt);
      if (!csv_path.empty()) {
        std::ofstream out(csv_path, std::ios::binary);
        if (!out) return report_error("IOError", "cannot write " + csv_path, fmt, kExitUsage);
        out << u21::sweep_polynomials_csv(result);
      }
      return result.ok() ? kExitOk : kExitVerifyFailed;
    }
  } catch (const u21::Error& e) {
    return report_error(std::string(e.name()), e.message(), fmt, e.is_validation() ? kExitUsage : kExitInternal);
  } catch (const std::exception& e) {
    return report_error("InternalError", e.what(), fmt, kExitInternal);
  }
  return kExitOk;
}
