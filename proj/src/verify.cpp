#include "u21/verify.hpp"

#include <algorithm>
#include <tuple>

#include "u21/error.hpp"
#include "u21/parallel.hpp"
#include "u21/symprod.hpp"

namespace u21 {

namespace {

struct Unit {
  int g = 0;
  long d = 0;
  long d2 = 0;
};

struct UnitOutcome {
  std::optional<ComponentReport> report;
  std::vector<CheckResult> checks;
  std::string error_name;
  std::string error_detail;
};

// Only the covering term of the fixed length-3 polynomials survives:
// -(3^{2g} - 1) (1 + t)^{2g} sum t^{index + m1 + m2} C(2g-2, m1) C(2g-2, m2).
LaurentPoly expected_torsion_defect(const ComponentReport& r) {
  const long g = r.params.g;
  LaurentPoly sum;
  for (const auto& c : r.criticals) {
    if (c.kind != CriticalKind::Length3) continue;
    sum += LaurentPoly::monomial(binom(2 * g - 2, *c.m1) * binom(2 * g - 2, *c.m2), c.morse_index + *c.m1 + *c.m2);
  }
  const Integer scale = ipow(3, 2UL * static_cast<unsigned long>(g)) - 1;
  return LaurentPoly(Integer(-scale)) * one_plus_t_pow(2UL * static_cast<unsigned long>(g)) * sum;
}

UnitOutcome evaluate(const Unit& u, Determinant det) {
  UnitOutcome out;
  const ModuliParams p{u.g, u.d - u.d2, u.d2, det};
  try {
    ComponentReport report = component_poincare(p);
    out.checks = report.checks;

    const ComponentReport dual = component_poincare(dual_params(p));
    out.checks.push_back({"duality_invariance", dual.poincare == report.poincare});

    bool index_positive = true;
    for (const auto& c : report.criticals) {
      if (c.kind == CriticalKind::Length3) index_positive = index_positive && c.morse_index >= 2;
    }
    out.checks.push_back({"length3_index_positive", index_positive});

    out.checks.push_back({"length2_torsion_trivial", length2_torsion_defect(p.g, p.d1, p.d2).is_zero()});
    out.checks.push_back({"torsion_defect_formula",
                          torsion_action_defect(p.g, p.d1, p.d2) == expected_torsion_defect(report)});
    out.report = std::move(report);
  } catch (const Error& e) {
    out.error_name = std::string(e.name());
    out.error_detail = e.what();
  }
  return out;
}

}  // namespace

long macdonald_sweep_limit(int g) { return std::max(20L, 4L * g - 4); }

SweepResult run_sweep(const SweepSpec& spec) {
  if (spec.genus.empty() || spec.degree.empty()) throw Error(ErrorCode::InvalidArgument, "empty sweep range");
  if (spec.genus.lo < 2) throw Error(ErrorCode::GenusTooSmall, "sweep genus range must start at 2 or above");

  SweepResult result;
  result.spec = spec;

  std::vector<Unit> units;
  for (long g = spec.genus.lo; g <= spec.genus.hi; ++g) {
    for (long d = spec.degree.lo; d <= spec.degree.hi; ++d) {
      if (d % 3 == 0) {
        result.skipped.emplace_back(static_cast<int>(g), d);
        continue;
      }
      for (long d2 : enumerate_components(static_cast<int>(g), d)) units.push_back({static_cast<int>(g), d, d2});
    }
  }

  auto record = [&](const std::string& name, bool pass, int g, std::optional<long> d, std::optional<long> d2,
                    const std::string& detail) {
    auto& count = result.counts[name];
    if (pass) {
      ++count.pass;
    } else {
      ++count.fail;
      result.failures.push_back({g, d, d2, name, detail});
    }
  };

  for (long g = spec.genus.lo; g <= spec.genus.hi; ++g) {
    const int genus = static_cast<int>(g);
    for (long m = 0; m <= macdonald_sweep_limit(genus); ++m) {
      const LaurentPoly p = macdonald_poincare(m, genus);
      record("macdonald_euler_identity", macdonald_euler_check({m, genus}), genus, std::nullopt, std::nullopt,
             "m = " + std::to_string(m));
      const bool shape = p.min_exp() == 0 && p.max_exp() == 2 * m && p.is_palindromic() &&
                         std::all_of(p.coeffs().begin(), p.coeffs().end(), [](const Integer& c) { return c > 0; });
      record("macdonald_palindromic", shape, genus, std::nullopt, std::nullopt, "m = " + std::to_string(m));
    }
  }

  const auto outcomes = parallel_map(units, [&](const Unit& u) { return evaluate(u, spec.det); });

  for (std::size_t k = 0; k < units.size(); ++k) {
    const Unit& u = units[k];
    const UnitOutcome& o = outcomes[k];
    if (!o.error_name.empty()) {
      record(o.error_name, false, u.g, u.d, u.d2, o.error_detail);
      continue;
    }
    for (const auto& c : o.checks) record(c.name, c.pass, u.g, u.d, u.d2, "");
    result.reports.push_back(*o.report);
  }
  return result;
}

}  // namespace u21
