#include "u21/critical.hpp"

#include <string>

#include "u21/error.hpp"
#include "u21/series.hpp"
#include "u21/symprod.hpp"

namespace u21 {

namespace {

long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

long sign_pow(long k) { return (k % 2 == 0) ? 1 : -1; }

// (g-1) rk U_k + (-1)^{k+1} deg U_k
long weighted_term(const ChainType& c, int k) {
  RankDegree u = u_rank_deg(c, k);
  return (c.g - 1) * u.rank + sign_pow(k + 1) * u.degree;
}

std::string triple_text(int g, long d, long d2) {
  return "(g=" + std::to_string(g) + ", d=" + std::to_string(d) + ", d2=" + std::to_string(d2) + ")";
}

}  // namespace

void validate_chain(const ChainType& c) {
  if (c.g < 2) throw Error(ErrorCode::InvalidChain, "chain genus must be at least 2");
  if (c.steps.size() < 2) throw Error(ErrorCode::InvalidChain, "chain must have length at least 2");
  for (const auto& s : c.steps) {
    if (s.rank <= 0) throw Error(ErrorCode::InvalidChain, "chain ranks must be positive");
  }
}

RankDegree u_rank_deg(const ChainType& c, int k) {
  validate_chain(c);
  RankDegree out;
  const long m = static_cast<long>(c.steps.size());
  for (long j = 0; j < m; ++j) {
    long i = j + k;
    if (i < 0 || i >= m) continue;
    const auto& src = c.steps[static_cast<std::size_t>(j)];
    const auto& dst = c.steps[static_cast<std::size_t>(i)];
    out.rank += src.rank * dst.rank;
    out.degree += src.rank * dst.degree - dst.rank * src.degree;
  }
  return out;
}

long morse_index(const ChainType& c) {
  validate_chain(c);
  const int m = static_cast<int>(c.steps.size());
  long sum = 0;
  for (int k = 2; k <= m - 1; ++k) sum += weighted_term(c, k);
  return 2 * sum;
}

long dim_critical(const ChainType& c) {
  RankDegree u0 = u_rank_deg(c, 0);
  RankDegree u1 = u_rank_deg(c, 1);
  return 1 + (c.g - 1) * (u1.rank + u0.rank) + u1.degree - u0.degree;
}

long dim_downflow(const ChainType& c) {
  validate_chain(c);
  const int m = static_cast<int>(c.steps.size());
  long sum = 0;
  for (int k = 0; k <= m - 1; ++k) sum += weighted_term(c, k);
  return 1 + sum;
}

ChainType Length3Invariants::chain() const {
  return ChainType{g, {{1, delta1}, {1, delta2}, {1, delta3}}};
}

bool Length3Invariants::satisfies_implied_bounds() const {
  // delta3 < d/3 and delta2 + delta3 < 2d/3, cleared of denominators.
  return m1 >= 0 && m2 >= 0 && 3 * delta3 < d && 3 * (delta2 + delta3) < 2 * d &&
         delta1 + delta2 + delta3 == d && m1 == m2 + 3 * d2 - d;
}

void require_normalized(int g, long d, long d2) {
  if (g < 2) throw Error(ErrorCode::GenusTooSmall, "genus must be at least 2, got " + std::to_string(g));
  if (d % 3 == 0) throw Error(ErrorCode::NotCoprime, "degree " + std::to_string(d) + " is divisible by 3");
  if (3 * d2 - d <= 0 || 3 * d2 > d + 3L * (g - 1)) {
    throw Error(ErrorCode::NotNormalized, triple_text(g, d, d2) + " is outside d/3 < d2 <= d/3 + g - 1");
  }
}

long length3_top_index(int g, long d, long d2) { return floor_div(2 * d, 3) - 2 * d2 + 2L * g - 2; }

std::vector<Length3Invariants> enumerate_length3(int g, long d, long d2) {
  require_normalized(g, d, d2);
  std::vector<Length3Invariants> out;
  const long top = length3_top_index(g, d, d2);
  for (long m2 = 0; m2 <= top; ++m2) {
    Length3Invariants inv;
    inv.g = g;
    inv.d = d;
    inv.d2 = d2;
    inv.m2 = m2;
    inv.m1 = m2 + 3 * d2 - d;
    inv.delta2 = d2;
    inv.delta1 = 2L * g - 2 + d2 - inv.m1;
    inv.delta3 = m2 - 2L * g + 2 + d2;
    out.push_back(inv);
  }
  return out;
}

long morse_index_length3(int g, long d, long d2, long m2) { return 2 * (5L * g - 5 + d - 3 * d2 - 2 * m2); }

ChainType length2_chain(int g, long d, long d2) { return ChainType{g, {{1, d2}, {2, d - d2}}}; }

TripleData length2_triple(int g, long d, long d2) {
  return TripleData{2L * g - 2, 2, 4L * g - 4 + (d - d2), 1, d2};
}

LaurentPoly n2_poincare(int g, long d, long d2, Determinant det) {
  require_normalized(g, d, d2);
  const long i = length3_top_index(g, d, d2);
  const auto trunc = static_cast<std::size_t>(i);
  const LaurentPoly t = LaurentPoly::t();

  long first_exp = 0;
  if (det == Determinant::Free) {
    const long deg_v = 4L * g - 4 + d - 3 * d2;
    first_exp = 2 * deg_v + 2L * g - 2 - 4 * i;
  } else {
    first_exp = 10L * g - 10 + 2 * d - 6 * d2 - 4 * i;
  }

  // t^a / (x t^4 - 1)  = -t^a     * sum_k x^k t^{4k}
  // t^b / (x - t^2)    =  t^{b-2} * sum_k x^k t^{-2k}
  SeriesX bracket = LaurentPoly::monomial(-1, first_exp) * series_geometric(t.pow(4), trunc) +
                    LaurentPoly::monomial(1, 2 * i) * series_geometric(LaurentPoly::monomial(1, -2), trunc);
  LaurentPoly extracted = coeff_x(bracket * macdonald_series(g, trunc), i);

  const unsigned long prefactor_power = (det == Determinant::Free ? 4UL : 2UL) * static_cast<unsigned long>(g);
  LaurentPoly numerator = one_plus_t_pow(prefactor_power) * extracted;
  LaurentPoly result = exact_div(numerator, LaurentPoly(0, {1, 0, -1}));

  if (result.min_exp() < 0 || !result.has_nonnegative_coeffs()) {
    throw Error(ErrorCode::NegativeCoefficient,
                "length-2 Poincare polynomial for " + triple_text(g, d, d2) + " is not a non-negative polynomial");
  }
  return result;
}

LaurentPoly n3_poincare(const Length3Invariants& inv, Determinant det) {
  LaurentPoly sym = macdonald_poincare(inv.m1, inv.g) * macdonald_poincare(inv.m2, inv.g);
  if (det == Determinant::Free) return one_plus_t_pow(2UL * static_cast<unsigned long>(inv.g)) * sym;
  Integer covering = binom(2L * inv.g - 2, inv.m1) * binom(2L * inv.g - 2, inv.m2) *
                     (ipow(3, 2UL * static_cast<unsigned long>(inv.g)) - 1);
  return sym + LaurentPoly::monomial(covering, inv.m1 + inv.m2);
}

}  // namespace u21
