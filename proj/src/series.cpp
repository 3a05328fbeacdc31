#include "u21/series.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "u21/error.hpp"

namespace u21 {

SeriesX::SeriesX(std::size_t trunc) : coeffs_(trunc + 1) {}

SeriesX::SeriesX(std::vector<LaurentPoly> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw Error(ErrorCode::InvalidArgument, "a series needs at least the x^0 coefficient");
}

SeriesX SeriesX::constant(const LaurentPoly& value, std::size_t trunc) {
  SeriesX out(trunc);
  out.coeffs_[0] = value;
  return out;
}

const LaurentPoly& SeriesX::coeff(long i) const {
  if (i < 0 || static_cast<std::size_t>(i) > trunc()) {
    throw Error(ErrorCode::TruncationExceeded,
                "x^" + std::to_string(i) + " requested from a series truncated at x^" + std::to_string(trunc()));
  }
  return coeffs_[static_cast<std::size_t>(i)];
}

SeriesX SeriesX::truncated(std::size_t trunc) const {
  if (trunc > this->trunc()) throw Error(ErrorCode::TruncationExceeded, "cannot extend a truncated series");
  return SeriesX(std::vector<LaurentPoly>(coeffs_.begin(), coeffs_.begin() + static_cast<long>(trunc) + 1));
}

SeriesX SeriesX::operator-() const {
  SeriesX out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

SeriesX operator+(const SeriesX& lhs, const SeriesX& rhs) {
  SeriesX out(std::min(lhs.trunc(), rhs.trunc()));
  for (std::size_t k = 0; k <= out.trunc(); ++k) out.coeffs_[k] = lhs.coeffs_[k] + rhs.coeffs_[k];
  return out;
}

SeriesX operator-(const SeriesX& lhs, const SeriesX& rhs) { return lhs + (-rhs); }

SeriesX operator*(const SeriesX& lhs, const SeriesX& rhs) {
  SeriesX out(std::min(lhs.trunc(), rhs.trunc()));
  for (std::size_t i = 0; i <= out.trunc(); ++i) {
    if (lhs.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; i + j <= out.trunc(); ++j) out.coeffs_[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  }
  return out;
}

SeriesX operator*(const LaurentPoly& scalar, const SeriesX& rhs) {
  SeriesX out = rhs;
  for (auto& c : out.coeffs_) c = scalar * c;
  return out;
}

SeriesX series_geometric(const LaurentPoly& ratio, std::size_t trunc) {
  std::vector<LaurentPoly> c;
  c.reserve(trunc + 1);
  c.emplace_back(1);
  for (std::size_t k = 1; k <= trunc; ++k) c.push_back(c.back() * ratio);
  return SeriesX(std::move(c));
}

SeriesX series_binom_power(const LaurentPoly& inner, unsigned long n, std::size_t trunc) {
  std::vector<LaurentPoly> c;
  c.reserve(trunc + 1);
  LaurentPoly power(1);
  for (std::size_t k = 0; k <= trunc; ++k) {
    c.push_back(LaurentPoly(binomial(static_cast<long>(n), static_cast<long>(k))) * power);
    power *= inner;
  }
  return SeriesX(std::move(c));
}

}  // namespace u21
