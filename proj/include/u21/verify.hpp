#ifndef U21_VERIFY_HPP
#define U21_VERIFY_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "u21/moduli.hpp"

namespace u21 {

struct IntRange {
  long lo = 0;
  long hi = -1;
  bool empty() const { return lo > hi; }
};

struct SweepSpec {
  IntRange genus;
  IntRange degree;
  Determinant det = Determinant::Free;
};

struct CheckCount {
  long pass = 0;
  long fail = 0;
};

struct SweepFailure {
  int g = 0;
  std::optional<long> d;
  std::optional<long> d2;
  std::string check;
  std::string detail;
};

struct SweepResult {
  SweepSpec spec;
  std::map<std::string, CheckCount> counts;
  std::vector<SweepFailure> failures;
  /// (g, d) pairs skipped because 3 divides d.
  std::vector<std::pair<int, long>> skipped;
  /// Successfully computed components, ordered by (g, d, d2).
  std::vector<ComponentReport> reports;

  bool ok() const { return failures.empty(); }
};

/// Largest symmetric-product order checked per genus by the sweep.
long macdonald_sweep_limit(int g);

/// Runs every invariant across the sweep. Components are evaluated on a
/// worker pool; the result is independent of thread count. Throws
/// InvalidArgument for an empty range or a genus below 2.
SweepResult run_sweep(const SweepSpec& spec);

}  // namespace u21

#endif  // U21_VERIFY_HPP
