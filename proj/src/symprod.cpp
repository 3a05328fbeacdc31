#include "u21/symprod.hpp"

#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "u21/error.hpp"

namespace u21 {

namespace {

void check_query(long m, int g) {
  if (g < 2) throw Error(ErrorCode::GenusTooSmall, "genus must be at least 2, got " + std::to_string(g));
  if (m < 0) throw Error(ErrorCode::InvalidArgument, "symmetric product order must be non-negative");
}

class MacdonaldCache {
 public:
  LaurentPoly get(long m, int g) {
    std::lock_guard lock(mutex_);
    auto& row = table_[g];
    if (static_cast<long>(row.size()) <= m) {
      SeriesX s = macdonald_series(g, static_cast<std::size_t>(m));
      row.assign(s.coeffs().begin(), s.coeffs().end());
    }
    return row[static_cast<std::size_t>(m)];
  }

 private:
  std::mutex mutex_;
  std::map<int, std::vector<LaurentPoly>> table_;
};

MacdonaldCache& cache() {
  static MacdonaldCache instance;
  return instance;
}

}  // namespace

SeriesX macdonald_series(int g, std::size_t trunc) {
  check_query(0, g);
  const LaurentPoly t = LaurentPoly::t();
  return series_binom_power(t, 2UL * static_cast<unsigned long>(g), trunc) * series_geometric(1, trunc) *
         series_geometric(t * t, trunc);
}

LaurentPoly macdonald_poincare(const SymProdQuery& q) {
  check_query(q.m, q.g);
  return cache().get(q.m, q.g);
}

bool macdonald_euler_check(const SymProdQuery& q) {
  Integer lhs = macdonald_poincare(q).eval_int(-1);
  Integer rhs = binom(2L * q.g - 2, q.m);
  if (q.m % 2 != 0) rhs = -rhs;
  return lhs == rhs;
}

}  // namespace u21
