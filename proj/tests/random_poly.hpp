#ifndef U21_TESTS_RANDOM_POLY_HPP
#define U21_TESTS_RANDOM_POLY_HPP

#include <random>
#include <string>
#include <vector>

#include "u21/laurent_poly.hpp"
#include "u21/series.hpp"

namespace testgen {

// Random Laurent polynomial with some coefficients well past 64 bits.
inline u21::LaurentPoly laurent(std::mt19937_64& rng, int max_terms = 7) {
  std::uniform_int_distribution<int> len(0, max_terms);
  std::uniform_int_distribution<long> lo(-5, 5);
  std::uniform_int_distribution<long> small(-20, 20);
  std::bernoulli_distribution big(0.2);
  std::vector<u21::Integer> c(static_cast<std::size_t>(len(rng)));
  for (auto& v : c) {
    v = small(rng);
    if (big(rng)) v *= u21::Integer("123456789012345678901234567890");
  }
  return u21::LaurentPoly(lo(rng), std::move(c));
}

inline u21::SeriesX series(std::mt19937_64& rng, std::size_t trunc) {
  std::vector<u21::LaurentPoly> c;
  for (std::size_t k = 0; k <= trunc; ++k) c.push_back(laurent(rng, 4));
  return u21::SeriesX(std::move(c));
}

}  // namespace testgen

#endif  // U21_TESTS_RANDOM_POLY_HPP
