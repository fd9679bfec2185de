#pragma once

#include "birat/monomial_pair.hpp"

namespace birat {

struct IntegralRelation {
  bool found = false;
  int degree = 0;                  // the n in f^n + c_{n-1} f^{n-1} + ... + c_0 = 0
  std::vector<Polynomial> coeffs;  // c_0 .. c_{n-1} as elements of B, each in the subalgebra
};

/// Searches a monic integral relation for f over the subalgebra of B
/// generated by `gens`: degree n <= degree_bound, coefficients of
/// expression degree <= coeff_degree_bound in the generators. Pure linear
/// algebra over Q on truncated bases; exhaustion is reported, not treated
/// as a disproof.
IntegralRelation integral_element_test(const Polynomial& f, const std::vector<Polynomial>& gens,
                                       const RingPresentation& B, int degree_bound,
                                       int coeff_degree_bound = -1);

inline IntegralRelation integral_element_test(const Polynomial& f, const PairOfRings& over,
                                              int degree_bound) {
  return integral_element_test(f, over.A_gens(), over.B(), degree_bound);
}

enum class AdicVerdict { kAdic, kNotAdic, kUnknown };

struct AdicResult {
  AdicVerdict verdict = AdicVerdict::kUnknown;
  int bound = 0;
  /// kAdic: one integral relation per target variable.
  std::vector<IntegralRelation> relations;
  /// kNotAdic: index of the witness probe valuation whose pullback is
  /// bounded (so the pull back map cannot land in Val).
  int witness_probe = -1;
};

class Valuation;  // maps.hpp / valuation.hpp

/// Decides whether B (x) A' -> B' is integral, searching relations with
/// coefficient degree <= degree_bound. A negative answer is certified only
/// through a valuation witness; bare search exhaustion yields kUnknown.
AdicResult is_adic(const PairHom& hom, int degree_bound,
                   const std::vector<Valuation>& witness_probes = {});

struct NormalizationResult {
  PairOfRings pair;
  /// General path is a sound under-approximation within the degree bound.
  bool bounded = true;
};

/// Relative normalization (B, Nor_B A), general path: A-generators grow by
/// every B-variable monomial up to the degree bound that admits an integral
/// relation, iterated to a fixpoint.
NormalizationResult relative_normalization(const PairOfRings& p, int degree_bound);

struct MonomialNormalizationResult {
  MonomialPair saturated;
  PairOfRings pair;  // converted presentation with the saturated A
  bool certified = false;
};

/// Exact path for monomial pairs via semigroup saturation.
MonomialNormalizationResult relative_normalization(const MonomialPair& mp,
                                                   int multiplier_bound = 12,
                                                   int power_bound = 12);

}  // namespace birat
