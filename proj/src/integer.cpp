#include "u21/integer.hpp"

#include <cctype>

#include "u21/error.hpp"

namespace u21 {

Integer parse_decimal(std::string_view text) {
  std::string_view digits = text;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  bool ok = !digits.empty();
  for (char c : digits) ok = ok && std::isdigit(static_cast<unsigned char>(c));
  if (!ok) throw Error(ErrorCode::InvalidArgument, "not a decimal integer: '" + std::string(text) + "'");
  std::string owned(text.front() == '+' ? text.substr(1) : text);
  return Integer(owned, 10);
}

Integer binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

Integer ipow(long base, unsigned long exponent) {
  Integer out;
  Integer b = base;
  mpz_pow_ui(out.get_mpz_t(), b.get_mpz_t(), exponent);
  return out;
}

}  // namespace u21
