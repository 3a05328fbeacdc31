#ifndef U21_MODULI_HPP
#define U21_MODULI_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "u21/critical.hpp"
#include "u21/integer.hpp"
#include "u21/laurent_poly.hpp"

namespace u21 {

/// Topological invariants of a component M_{d1,d2}: genus g, degree d1 of the
/// rank-2 summand and d2 of the line summand.
struct ModuliParams {
  int g = 2;
  long d1 = 0;
  long d2 = 0;
  Determinant det = Determinant::Free;
  friend bool operator==(const ModuliParams&, const ModuliParams&) = default;
};

/// (g, d, d2) after moving to the representative with 3 d2 - d > 0.
/// dualized: (d, d2) -> (-d, -d2) was applied; then tensoring by a degree
/// tensor_shift line bundle: (d, d2) -> (d + 3k, d2 + k).
struct NormalizedParams {
  int g = 2;
  long d = 0;
  long d2 = 0;
  bool dualized = false;
  long tensor_shift = 0;
  friend bool operator==(const NormalizedParams&, const NormalizedParams&) = default;
};

enum class CriticalKind { Length2, Length3 };

constexpr std::string_view kind_name(CriticalKind k) { return k == CriticalKind::Length2 ? "N2" : "N3"; }

struct CriticalReport {
  CriticalKind kind = CriticalKind::Length2;
  std::optional<long> m1;
  std::optional<long> m2;
  long morse_index = 0;
  long dim_critical = 0;
  long dim_downflow = 0;
  ChainType chain;
  std::optional<TripleData> triple;
  LaurentPoly poincare;
  friend bool operator==(const CriticalReport&, const CriticalReport&) = default;
};

struct CheckResult {
  std::string name;
  bool pass = false;
  friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

struct ComponentReport {
  ModuliParams params;
  NormalizedParams normalized;
  std::vector<CriticalReport> criticals;
  LaurentPoly poincare;
  Integer euler;
  std::vector<CheckResult> checks;

  bool all_checks_pass() const;
  friend bool operator==(const ComponentReport&, const ComponentReport&) = default;
};

/// Validates Toledo, coprimality and genus, and normalizes to 3 d2 - d > 0.
/// Throws GenusTooSmall, NotCoprime or ToledoViolated.
NormalizedParams validate(const ModuliParams& p);

/// All d2 with d/3 - (g - 1) <= d2 <= d/3 + (g - 1): one component each.
std::vector<long> enumerate_components(int g, long d);

/// The dual component's labels (-d1, -d2).
ModuliParams dual_params(const ModuliParams& p);

/// Poincare polynomial of a component assembled from its critical
/// submanifolds, with internal consistency checks recorded in the report.
/// Throws on validation errors, and NonZeroRemainder / NegativeCoefficient /
/// EulerMismatch when the formulas are internally inconsistent.
ComponentReport component_poincare(const ModuliParams& p);

/// sum over criticals of t^{morse_index} P(critical)
LaurentPoly resum_criticals(const std::vector<CriticalReport>& criticals);

/// Euler characteristic of a fixed-determinant component from the closed
/// binomial sum. The determinant flag of p is ignored.
Integer euler_fixed_closed_form(const ModuliParams& p);

/// P(M_{d1,d2}) - (1 + t)^{2g} P(fixed-determinant M_{d1,d2}). Nonzero
/// means the 3-torsion points act non-trivially on rational cohomology.
LaurentPoly torsion_action_defect(int g, long d1, long d2);

/// The length-2 part of the defect: P(N^2) - (1 + t)^{2g} P(fixed N^2).
LaurentPoly length2_torsion_defect(int g, long d1, long d2);

}  // namespace u21

#endif  // U21_MODULI_HPP
