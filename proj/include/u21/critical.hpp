#ifndef U21_CRITICAL_HPP
#define U21_CRITICAL_HPP

#include <vector>

#include "u21/laurent_poly.hpp"

namespace u21 {

enum class Determinant { Free, Fixed };

/// One piece F_i of a variation of Hodge structure F_1 + ... + F_m.
struct ChainStep {
  long rank = 1;
  long degree = 0;
  friend bool operator==(const ChainStep&, const ChainStep&) = default;
};

struct ChainType {
  int g = 2;
  std::vector<ChainStep> steps;
  friend bool operator==(const ChainType&, const ChainType&) = default;
};

struct RankDegree {
  long rank = 0;
  long degree = 0;
  friend bool operator==(const RankDegree&, const RankDegree&) = default;
};

/// Throws InvalidChain unless g >= 2, length >= 2 and all ranks are positive.
void validate_chain(const ChainType& c);

/// Rank and degree of U_k = sum over i - j = k of Hom(F_j, F_i).
RankDegree u_rank_deg(const ChainType& c, int k);

/// Real Morse index: 2 * sum_{k=2}^{m-1} ((g-1) rk U_k + (-1)^{k+1} deg U_k).
long morse_index(const ChainType& c);

/// Complex dimension of the critical submanifold through the chain.
long dim_critical(const ChainType& c);

/// Complex dimension of the downward Morse flow; equals
/// dim_critical + morse_index / 2.
long dim_downflow(const ChainType& c);

/// Degrees of the three line bundles in a length-3 critical chain together
/// with the divisor degrees m1, m2 of the two Higgs field components.
struct Length3Invariants {
  int g = 2;
  long d = 0;
  long d2 = 0;
  long delta1 = 0;
  long delta2 = 0;
  long delta3 = 0;
  long m1 = 0;
  long m2 = 0;

  ChainType chain() const;

  /// m1 >= 0, delta3 < d/3 and delta2 + delta3 < 2d/3. These follow from
  /// m2 >= 0 and the m2 upper bound, so a false here is a bug.
  bool satisfies_implied_bounds() const;

  friend bool operator==(const Length3Invariants&, const Length3Invariants&) = default;
};

/// Throws GenusTooSmall / NotCoprime / NotNormalized unless (g, d, d2)
/// satisfies g >= 2, (d, 3) = 1 and d/3 < d2 <= d/3 + g - 1.
void require_normalized(int g, long d, long d2);

/// floor(2d/3) - 2 d2 + 2g - 2: the largest admissible m2, and the x-power
/// extracted for the length-2 polynomial.
long length3_top_index(int g, long d, long d2);

/// One entry per m2 in [0, length3_top_index].
std::vector<Length3Invariants> enumerate_length3(int g, long d, long d2);

/// 2 (5g - 5 + d - 3 d2 - 2 m2)
long morse_index_length3(int g, long d, long d2, long m2);

/// Length-2 chain F_1 = E_2 (line bundle of degree d2), F_2 = E_1 (rank 2,
/// degree d - d2).
ChainType length2_chain(int g, long d, long d2);

/// Holomorphic-triple data of the length-2 critical submanifold. No stability
/// computation is done; this is descriptive only.
struct TripleData {
  long alpha = 0;
  long rank_e1 = 2;
  long deg_e1 = 0;
  long rank_e2 = 1;
  long deg_e2 = 0;
  friend bool operator==(const TripleData&, const TripleData&) = default;
};
TripleData length2_triple(int g, long d, long d2);

/// Poincare polynomial of the length-2 critical submanifold: the x^i
/// coefficient of the bracketed generating function, times (1+t)^{4g}
/// (or (1+t)^{2g} for fixed determinant), divided by 1 - t^2.
LaurentPoly n2_poincare(int g, long d, long d2, Determinant det);

/// Poincare polynomial of the length-3 critical submanifold.
LaurentPoly n3_poincare(const Length3Invariants& inv, Determinant det);

}  // namespace u21

#endif  // U21_CRITICAL_HPP
