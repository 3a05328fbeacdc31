#include "u21/render.hpp"

#include <sstream>

#include "u21/error.hpp"
#include "u21/json_io.hpp"

namespace u21 {

namespace {

bool is_fixed(const ModuliParams& p) { return p.det == Determinant::Fixed; }

std::string space_name(const ModuliParams& p, bool latex) {
  const std::string sub = std::to_string(p.d1) + "," + std::to_string(p.d2);
  if (!latex) return (is_fixed(p) ? "M~_{" : "M_{") + sub + "}";
  return (is_fixed(p) ? "\\widetilde{\\mathcal{M}}_{" : "\\mathcal{M}_{") + sub + "}";
}

// Shared term writer: mult joins coefficient and power, pow_open/pow_close
// wrap the exponent.
std::string poly_terms(const LaurentPoly& p, const char* mult, const char* pow_open, const char* pow_close) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (long e = p.min_exp(); e <= p.max_exp(); ++e) {
    Integer c = p.coeff(e);
    if (c == 0) continue;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    Integer mag = abs(c);
    if (e == 0) {
      os << to_decimal(mag);
      continue;
    }
    if (mag != 1) os << to_decimal(mag) << mult;
    os << "t";
    if (e != 1) os << pow_open << e << pow_close;
  }
  return os.str();
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string csv_opt(const std::optional<long>& v) { return v ? std::to_string(*v) : ""; }

}  // namespace

OutputFormat parse_format(std::string_view name) {
  if (name == "text") return OutputFormat::Text;
  if (name == "json") return OutputFormat::Json;
  if (name == "latex") return OutputFormat::Latex;
  if (name == "csv") return OutputFormat::Csv;
  throw Error(ErrorCode::InvalidArgument, "unknown format '" + std::string(name) + "'");
}

std::string poly_text(const LaurentPoly& p) { return poly_terms(p, "*", "^", ""); }

std::string poly_latex(const LaurentPoly& p) { return poly_terms(p, "\\,", "^{", "}"); }

std::string poly_csv(const LaurentPoly& p) {
  std::string out;
  for (const auto& c : p.coeffs()) {
    if (!out.empty()) out += ';';
    out += to_decimal(c);
  }
  return out;
}

std::string render_report(const ComponentReport& r, OutputFormat fmt) {
  std::ostringstream os;
  switch (fmt) {
    case OutputFormat::Json:
      return dump(to_json(r));
    case OutputFormat::Latex:
      os << "P_{t}(" << space_name(r.params, true) << ") = " << poly_latex(r.poincare) << "\n";
      return os.str();
    case OutputFormat::Csv:
      os << "kind,m1,m2,morse_index,dim_critical,dim_downflow,min_exp,coeffs\n";
      for (const auto& c : r.criticals) {
        os << kind_name(c.kind) << "," << csv_opt(c.m1) << "," << csv_opt(c.m2) << "," << c.morse_index << ","
           << c.dim_critical << "," << c.dim_downflow << "," << c.poincare.min_exp() << "," << poly_csv(c.poincare)
           << "\n";
      }
      os << "total,,,,,," << r.poincare.min_exp() << "," << poly_csv(r.poincare) << "\n";
      return os.str();
    case OutputFormat::Text:
      break;
  }

  const auto& n = r.normalized;
  os << "component " << space_name(r.params, false) << "  genus " << r.params.g << "  determinant "
     << (is_fixed(r.params) ? "fixed" : "free") << "\n";
  os << "normalized: d = " << n.d << ", d2 = " << n.d2 << " (dualized: " << yes_no(n.dualized)
     << ", tensor shift: " << n.tensor_shift << ")\n";
  os << "critical submanifolds: " << r.criticals.size() << "\n";
  for (const auto& c : r.criticals) {
    os << "  " << kind_name(c.kind);
    if (c.m2) os << " m1=" << *c.m1 << " m2=" << *c.m2;
    os << "  index " << c.morse_index << "  dim " << c.dim_critical << "  downflow " << c.dim_downflow << "\n";
    if (c.triple) {
      os << "    triple: alpha = " << c.triple->alpha << ", (rank " << c.triple->rank_e1 << ", degree "
         << c.triple->deg_e1 << ") <- (rank " << c.triple->rank_e2 << ", degree " << c.triple->deg_e2 << ")\n";
    }
    os << "    P = " << poly_text(c.poincare) << "\n";
  }
  os << "poincare: " << poly_text(r.poincare) << "\n";
  os << "euler: " << to_decimal(r.euler) << "\n";
  long passed = 0;
  for (const auto& c : r.checks) passed += c.pass ? 1 : 0;
  os << "checks: " << passed << "/" << r.checks.size() << " pass\n";
  for (const auto& c : r.checks) os << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.name << "\n";
  return os.str();
}

std::string render_components(int g, long d, Determinant det, const std::vector<ComponentReport>& reports,
                              OutputFormat fmt) {
  std::ostringstream os;
  switch (fmt) {
    case OutputFormat::Json: {
      Json comps = Json::array();
      for (const auto& r : reports) comps.push_back(to_json(r));
      return dump(Json{{"genus", g}, {"degree", d}, {"fixed_det", det == Determinant::Fixed},
                       {"components", std::move(comps)}});
    }
    case OutputFormat::Latex:
      for (const auto& r : reports) os << "P_{t}(" << space_name(r.params, true) << ") = " << poly_latex(r.poincare) << "\n";
      return os.str();
    case OutputFormat::Csv:
      os << "genus,degree,d1,d2,fixed_det,criticals,euler,min_exp,coeffs\n";
      for (const auto& r : reports) {
        os << g << "," << d << "," << r.params.d1 << "," << r.params.d2 << "," << (is_fixed(r.params) ? 1 : 0) << ","
           << r.criticals.size() << "," << to_decimal(r.euler) << "," << r.poincare.min_exp() << ","
           << poly_csv(r.poincare) << "\n";
      }
      return os.str();
    case OutputFormat::Text:
      break;
  }
  os << "genus " << g << ", degree " << d << ", determinant " << (det == Determinant::Fixed ? "fixed" : "free") << ": "
     << reports.size() << " components\n";
  for (const auto& r : reports) {
    os << "  " << space_name(r.params, false) << "  d2 = " << r.params.d2 << "  criticals " << r.criticals.size()
       << "  euler " << to_decimal(r.euler) << "\n    P = " << poly_text(r.poincare) << "\n";
  }
  return os.str();
}

std::string render_euler(const ComponentReport& r, OutputFormat fmt) {
  std::ostringstream os;
  switch (fmt) {
    case OutputFormat::Json: {
      Json j{{"params", to_json(r.params)}, {"euler", to_decimal(r.euler)}};
      if (is_fixed(r.params)) j["euler_closed_form"] = to_decimal(euler_fixed_closed_form(r.params));
      return dump(j);
    }
    case OutputFormat::Latex:
      os << "\\chi(" << space_name(r.params, true) << ") = " << to_decimal(r.euler) << "\n";
      return os.str();
    case OutputFormat::Csv:
      os << "genus,d1,d2,fixed_det,euler\n"
         << r.params.g << "," << r.params.d1 << "," << r.params.d2 << "," << (is_fixed(r.params) ? 1 : 0) << ","
         << to_decimal(r.euler) << "\n";
      return os.str();
    case OutputFormat::Text:
      os << to_decimal(r.euler) << "\n";
      return os.str();
  }
  return os.str();
}

std::string render_sweep(const SweepResult& s, OutputFormat fmt) {
  std::ostringstream os;
  const bool fixed = s.spec.det == Determinant::Fixed;
  auto failure_place = [](const SweepFailure& f) {
    return std::to_string(f.g) + "," + (f.d ? std::to_string(*f.d) : "-") + "," + (f.d2 ? std::to_string(*f.d2) : "-");
  };
  switch (fmt) {
    case OutputFormat::Json: {
      Json counts = Json::array();
      for (const auto& [name, c] : s.counts) counts.push_back(Json{{"name", name}, {"pass", c.pass}, {"fail", c.fail}});
      Json failures = Json::array();
      for (const auto& f : s.failures) {
        failures.push_back(Json{{"genus", f.g},
                                {"d", f.d ? Json(*f.d) : Json(nullptr)},
                                {"d2", f.d2 ? Json(*f.d2) : Json(nullptr)},
                                {"check", f.check},
                                {"detail", f.detail}});
      }
      Json skipped = Json::array();
      for (const auto& [g, d] : s.skipped) skipped.push_back(Json{{"genus", g}, {"d", d}});
      Json euler = Json::array();
      for (const auto& r : s.reports) {
        euler.push_back(Json{{"genus", r.params.g}, {"d1", r.params.d1}, {"d2", r.params.d2}, {"euler", to_decimal(r.euler)}});
      }
      return dump(Json{{"genus", {s.spec.genus.lo, s.spec.genus.hi}},
                       {"degree", {s.spec.degree.lo, s.spec.degree.hi}},
                       {"fixed_det", fixed},
                       {"ok", s.ok()},
                       {"components", s.reports.size()},
                       {"checks", std::move(counts)},
                       {"failures", std::move(failures)},
                       {"skipped", std::move(skipped)},
                       {"euler", std::move(euler)}});
    }
    case OutputFormat::Csv:
      os << "check,pass,fail\n";
      for (const auto& [name, c] : s.counts) os << name << "," << c.pass << "," << c.fail << "\n";
      return os.str();
    case OutputFormat::Latex:
      os << "\\begin{tabular}{lrr}\n\\hline\ncheck & pass & fail \\\\\n\\hline\n";
      for (const auto& [name, c] : s.counts) {
        std::string escaped;
        for (char ch : name) escaped += (ch == '_') ? std::string("\\_") : std::string(1, ch);
        os << escaped << " & " << c.pass << " & " << c.fail << " \\\\\n";
      }
      os << "\\hline\n\\end{tabular}\n";
      return os.str();
    case OutputFormat::Text:
      break;
  }
  os << "sweep genus " << s.spec.genus.lo << ".." << s.spec.genus.hi << ", degree " << s.spec.degree.lo << ".."
     << s.spec.degree.hi << ", determinant " << (fixed ? "fixed" : "free") << "\n";
  os << "components: " << s.reports.size() << ", skipped (g,d) with 3 | d: " << s.skipped.size() << "\n";
  for (const auto& [name, c] : s.counts) os << "  " << name << ": " << c.pass << " pass, " << c.fail << " fail\n";
  if (fixed) {
    for (const auto& r : s.reports) {
      os << "  euler " << space_name(r.params, false) << " (g=" << r.params.g << "): " << to_decimal(r.euler) << "\n";
    }
  }
  if (s.ok()) {
    os << "result: all checks pass\n";
  } else {
    os << "result: " << s.failures.size() << " failures\n";
    for (const auto& f : s.failures) {
      os << "  (" << failure_place(f) << ") " << f.check;
      if (!f.detail.empty()) os << ": " << f.detail;
      os << "\n";
    }
  }
  return os.str();
}

std::string sweep_polynomials_csv(const SweepResult& s) {
  std::ostringstream os;
  os << "genus,d1,d2,fixed_det,kind,m2,morse_index,min_exp,coeffs\n";
  for (const auto& r : s.reports) {
    const std::string prefix = std::to_string(r.params.g) + "," + std::to_string(r.params.d1) + "," +
                               std::to_string(r.params.d2) + "," + (is_fixed(r.params) ? "1" : "0") + ",";
    for (const auto& c : r.criticals) {
      os << prefix << kind_name(c.kind) << "," << csv_opt(c.m2) << "," << c.morse_index << "," << c.poincare.min_exp()
         << "," << poly_csv(c.poincare) << "\n";
    }
    os << prefix << "total,,," << r.poincare.min_exp() << "," << poly_csv(r.poincare) << "\n";
  }
  return os.str();
}

}  // namespace u21
