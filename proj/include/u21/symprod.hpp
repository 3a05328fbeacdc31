#ifndef U21_SYMPROD_HPP
#define U21_SYMPROD_HPP

#include <cstddef>

#include "u21/integer.hpp"
#include "u21/laurent_poly.hpp"
#include "u21/series.hpp"

namespace u21 {

/// Symmetric product S^m X of a genus-g curve.
struct SymProdQuery {
  long m = 0;
  int g = 2;
};

/// Macdonald's generating function (1 + x t)^{2g} / ((1 - x)(1 - x t^2)),
/// expanded to order trunc.
SeriesX macdonald_series(int g, std::size_t trunc);

/// Poincare polynomial of S^m X, i.e. the x^m coefficient of
/// macdonald_series. Memoized per genus; safe to call from several threads.
LaurentPoly macdonald_poincare(const SymProdQuery& q);
inline LaurentPoly macdonald_poincare(long m, int g) { return macdonald_poincare(SymProdQuery{m, g}); }

/// C(n, k), zero when k is out of [0, n].
inline Integer binom(long n, long k) { return binomial(n, k); }

/// P_t(S^m X) at t = -1 equals (-1)^m C(2g - 2, m).
bool macdonald_euler_check(const SymProdQuery& q);

}  // namespace u21

#endif  // U21_SYMPROD_HPP
