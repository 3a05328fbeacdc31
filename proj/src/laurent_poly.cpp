#include "u21/laurent_poly.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "u21/error.hpp"

namespace u21 {

LaurentPoly::LaurentPoly(const Integer& constant) : LaurentPoly(0, std::vector<Integer>{constant}) {}

LaurentPoly::LaurentPoly(long min_exp, std::vector<Integer> coeffs)
    : min_exp_(min_exp), coeffs_(std::move(coeffs)) {
  canonicalize();
}

LaurentPoly::LaurentPoly(long min_exp, std::initializer_list<long> coeffs) : min_exp_(min_exp) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  canonicalize();
}

LaurentPoly LaurentPoly::monomial(const Integer& coeff, long exponent) {
  return LaurentPoly(exponent, std::vector<Integer>{coeff});
}

void LaurentPoly::canonicalize() {
  auto last = std::find_if(coeffs_.rbegin(), coeffs_.rend(), [](const Integer& c) { return c != 0; });
  coeffs_.erase(last.base(), coeffs_.end());
  auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return c != 0; });
  min_exp_ += static_cast<long>(first - coeffs_.begin());
  coeffs_.erase(coeffs_.begin(), first);
  if (coeffs_.empty()) min_exp_ = 0;
}

Integer LaurentPoly::coeff(long exponent) const {
  if (exponent < min_exp_ || exponent > max_exp()) return 0;
  return coeffs_[static_cast<std::size_t>(exponent - min_exp_)];
}

Integer LaurentPoly::eval_int(long t0) const {
  if (is_zero()) return 0;
  if (min_exp_ < 0 && t0 != 1 && t0 != -1) {
    throw Error(ErrorCode::UndefinedEvaluation,
                "cannot evaluate a polynomial with negative exponents at t = " + std::to_string(t0));
  }
  if (t0 == 1 || t0 == -1) {
    Integer sum = 0;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      bool odd = ((min_exp_ + static_cast<long>(k)) % 2) != 0;
      if (t0 == -1 && odd)
        sum -= coeffs_[k];
      else
        sum += coeffs_[k];
    }
    return sum;
  }
  // Horner from the top, then the t^min_exp factor.
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t0 + *it;
  return acc * ipow(t0, static_cast<unsigned long>(min_exp_));
}

LaurentPoly LaurentPoly::shifted(long shift) const {
  LaurentPoly out = *this;
  if (!out.is_zero()) out.min_exp_ += shift;
  return out;
}

LaurentPoly LaurentPoly::pow(unsigned long exponent) const {
  LaurentPoly result(1);
  LaurentPoly base = *this;
  while (exponent > 0) {
    if (exponent & 1UL) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

bool LaurentPoly::is_palindromic() const {
  return std::equal(coeffs_.begin(), coeffs_.begin() + static_cast<long>(coeffs_.size() / 2),
                    coeffs_.rbegin());
}

bool LaurentPoly::has_nonnegative_coeffs() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return c >= 0; });
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  long lo = std::min(min_exp_, rhs.min_exp_);
  long hi = std::max(max_exp(), rhs.max_exp());
  std::vector<Integer> sum(static_cast<std::size_t>(hi - lo + 1));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) sum[static_cast<std::size_t>(min_exp_ - lo) + k] = coeffs_[k];
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k)
    sum[static_cast<std::size_t>(rhs.min_exp_ - lo) + k] += rhs.coeffs_[k];
  min_exp_ = lo;
  coeffs_ = std::move(sum);
  canonicalize();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) { return *this += -rhs; }

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) { return *this = *this * rhs; }

LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<Integer> prod(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      mpz_addmul(prod[i + j].get_mpz_t(), lhs.coeffs_[i].get_mpz_t(), rhs.coeffs_[j].get_mpz_t());
    }
  }
  return LaurentPoly(lhs.min_exp_ + rhs.min_exp_, std::move(prod));
}

LaurentPoly exact_div(const LaurentPoly& num, const LaurentPoly& den) {
  if (den.is_zero()) throw Error(ErrorCode::DivisionByZero, "exact_div by the zero polynomial");
  if (num.is_zero()) return {};

  // Long division from the low end: den's lowest coefficient is nonzero, so
  // each quotient term is forced, and an inexact integer step means no
  // quotient exists in Z[t, 1/t].
  auto den_c = den.coeffs();
  std::size_t den_len = den_c.size();
  if (num.term_count() < den_len) {
    throw Error(ErrorCode::NonZeroRemainder, "divisor has wider support than dividend");
  }
  std::vector<Integer> rem(num.coeffs().begin(), num.coeffs().end());
  std::size_t q_len = rem.size() - den_len + 1;
  std::vector<Integer> quot(q_len);
  for (std::size_t k = 0; k < q_len; ++k) {
    if (rem[k] == 0) continue;
    if (!mpz_divisible_p(rem[k].get_mpz_t(), den_c[0].get_mpz_t())) {
      throw Error(ErrorCode::NonZeroRemainder, "inexact coefficient division");
    }
    mpz_divexact(quot[k].get_mpz_t(), rem[k].get_mpz_t(), den_c[0].get_mpz_t());
    for (std::size_t j = 0; j < den_len; ++j) {
      mpz_submul(rem[k + j].get_mpz_t(), quot[k].get_mpz_t(), den_c[j].get_mpz_t());
    }
  }
  for (std::size_t k = q_len; k < rem.size(); ++k) {
    if (rem[k] != 0) throw Error(ErrorCode::NonZeroRemainder, "division leaves a nonzero remainder");
  }
  return LaurentPoly(num.min_exp() - den.min_exp(), std::move(quot));
}

LaurentPoly one_plus_t_pow(unsigned long n) {
  std::vector<Integer> c(n + 1);
  for (unsigned long k = 0; k <= n; ++k) c[k] = binomial(static_cast<long>(n), static_cast<long>(k));
  return LaurentPoly(0, std::move(c));
}

}  // namespace u21
