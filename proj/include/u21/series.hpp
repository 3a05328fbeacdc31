#ifndef U21_SERIES_HPP
#define U21_SERIES_HPP

#include <cstddef>
#include <vector>

#include "u21/laurent_poly.hpp"

namespace u21 {

/// Power series in x truncated after x^trunc, with Laurent polynomial
/// coefficients in t. Binary operations truncate to the smaller order.
class SeriesX {
 public:
  /// The zero series at order trunc.
  explicit SeriesX(std::size_t trunc);
  /// coeffs[k] multiplies x^k; trunc() == coeffs.size() - 1. Must be non-empty.
  explicit SeriesX(std::vector<LaurentPoly> coeffs);

  static SeriesX constant(const LaurentPoly& value, std::size_t trunc);

  std::size_t trunc() const noexcept { return coeffs_.size() - 1; }
  std::span<const LaurentPoly> coeffs() const noexcept { return coeffs_; }

  /// Coefficient of x^i; throws TruncationExceeded outside [0, trunc].
  const LaurentPoly& coeff(long i) const;

  SeriesX truncated(std::size_t trunc) const;

  SeriesX operator-() const;
  friend SeriesX operator+(const SeriesX& lhs, const SeriesX& rhs);
  friend SeriesX operator-(const SeriesX& lhs, const SeriesX& rhs);
  friend SeriesX operator*(const SeriesX& lhs, const SeriesX& rhs);
  friend SeriesX operator*(const LaurentPoly& scalar, const SeriesX& rhs);
  friend bool operator==(const SeriesX&, const SeriesX&) = default;

 private:
  std::vector<LaurentPoly> coeffs_;
};

inline LaurentPoly coeff_x(const SeriesX& s, long i) { return s.coeff(i); }

/// 1 / (1 - x * ratio), expanded to order trunc: coefficient of x^k is ratio^k.
SeriesX series_geometric(const LaurentPoly& ratio, std::size_t trunc);

/// (1 + x * inner)^n, expanded to order trunc: coefficient of x^k is C(n, k) inner^k.
SeriesX series_binom_power(const LaurentPoly& inner, unsigned long n, std::size_t trunc);

}  // namespace u21

#endif  // U21_SERIES_HPP
