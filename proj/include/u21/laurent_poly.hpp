#ifndef U21_LAURENT_POLY_HPP
#define U21_LAURENT_POLY_HPP

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "u21/integer.hpp"

namespace u21 {

/// Laurent polynomial in one variable t with arbitrary-precision integer
/// coefficients, stored densely from the lowest exponent present.
///
/// Canonical form: the first and last stored coefficients are nonzero. The
/// zero polynomial has no coefficients and min_exp() == 0. Every constructor
/// and operation returns canonical values, so operator== is structural.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(const Integer& constant);  // NOLINT: implicit scalar promotion
  LaurentPoly(long constant) : LaurentPoly(Integer(constant)) {}  // NOLINT
  LaurentPoly(int constant) : LaurentPoly(Integer(constant)) {}   // NOLINT

  /// Coefficient of t^(min_exp + k) is coeffs[k]; the input need not be trimmed.
  LaurentPoly(long min_exp, std::vector<Integer> coeffs);
  LaurentPoly(long min_exp, std::initializer_list<long> coeffs);

  static LaurentPoly monomial(const Integer& coeff, long exponent);
  /// The variable t itself.
  static LaurentPoly t() { return monomial(1, 1); }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  long min_exp() const noexcept { return min_exp_; }
  /// Highest exponent present; min_exp() - 1 for the zero polynomial.
  long max_exp() const noexcept { return min_exp_ + static_cast<long>(coeffs_.size()) - 1; }
  std::span<const Integer> coeffs() const noexcept { return coeffs_; }
  std::size_t term_count() const noexcept { return coeffs_.size(); }

  /// Coefficient of t^exponent (zero outside the stored range).
  Integer coeff(long exponent) const;

  /// Exact value at an integer point. Any t0 is accepted when no negative
  /// exponents are present; otherwise only t0 = +-1 has an integer value.
  Integer eval_int(long t0) const;

  /// Multiplication by t^shift.
  LaurentPoly shifted(long shift) const;
  LaurentPoly pow(unsigned long exponent) const;

  bool is_palindromic() const;
  bool has_nonnegative_coeffs() const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const LaurentPoly& rhs);

  friend LaurentPoly operator+(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs += rhs; }
  friend LaurentPoly operator-(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs -= rhs; }
  friend LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs);
  friend bool operator==(const LaurentPoly& lhs, const LaurentPoly& rhs) {
    return lhs.min_exp_ == rhs.min_exp_ && lhs.coeffs_ == rhs.coeffs_;
  }

 private:
  void canonicalize();

  long min_exp_ = 0;
  std::vector<Integer> coeffs_;
};

/// Quotient q with q * den == num exactly. Throws NonZeroRemainder when den
/// does not divide num in Z[t, 1/t] and DivisionByZero when den is zero.
LaurentPoly exact_div(const LaurentPoly& num, const LaurentPoly& den);

/// (1 + t)^n
LaurentPoly one_plus_t_pow(unsigned long n);

}  // namespace u21

#endif  // U21_LAURENT_POLY_HPP
