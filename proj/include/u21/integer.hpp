#ifndef U21_INTEGER_HPP
#define U21_INTEGER_HPP

#include <string>
#include <string_view>

#include <gmpxx.h>

namespace u21 {

using Integer = mpz_class;

inline std::string to_decimal(const Integer& value) { return value.get_str(10); }

// Throws u21::Error(InvalidArgument) on anything that is not an optionally
// signed run of decimal digits.
Integer parse_decimal(std::string_view text);

Integer binomial(long n, long k);

Integer ipow(long base, unsigned long exponent);

}  // namespace u21

#endif  // U21_INTEGER_HPP
