#pragma once

#include "birat/pair.hpp"

namespace birat {

using LatticeVector = std::vector<long long>;

/// Exactly computable sub-universe: B = Q[M] and A = Q[N] for affine
/// semigroups N <= M inside Z^rank. Convertible to a PairOfRings through
/// binomial (toric) relations.
struct MonomialPair {
  int rank = 0;
  std::vector<LatticeVector> M_gens;
  std::vector<LatticeVector> N_gens;
};

/// Is `target` a natural-number combination of `gens`? Bounded search on
/// the total multiplier.
bool in_semigroup(const LatticeVector& target, const std::vector<LatticeVector>& gens,
                  int multiplier_bound = 24);

/// Checks the stored invariant: every N generator lies in the semigroup
/// spanned by the M generators.
PairDiagnostics validate_monomial_pair(const MonomialPair& mp, int multiplier_bound = 24);

struct MonomialPairConversion {
  PairOfRings pair;
  /// Exponent vectors in the y-variables realizing each M generator
  /// (the variables themselves) and each N generator.
  std::vector<Polynomial> N_monomials;
};

/// Presents Q[M] as Q[y1..ys]/I_M with y_i -> t^{m_i}; I_M is the toric
/// ideal, computed by elimination with an inverted auxiliary variable so
/// that negative exponents are handled. A-generators become y-monomials
/// representing the N generators.
MonomialPairConversion monomial_pair_to_pair(const MonomialPair& mp, int multiplier_bound = 24);

struct MonomialNormalization {
  std::vector<LatticeVector> nor_gens;  // generators of Nor_B A as a semigroup over N
  bool certified = false;               // saturation verified within the search box
};

/// Exact relative normalization on the monomial path: Nor is generated by
/// the m in the M-semigroup with k*m in the N-semigroup for some k >= 1.
/// Search is bounded; the certificate says saturation holds within the box.
MonomialNormalization monomial_normalization(const MonomialPair& mp, int multiplier_bound = 12,
                                             int power_bound = 12);

}  // namespace birat
