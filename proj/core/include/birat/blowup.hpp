#pragma once

#include "birat/domain.hpp"
#include "birat/integral.hpp"

namespace birat {

/// Finite A-module E inside B driving a relative blow up. The generators
/// must span the unit ideal of B (so the charts cover) and 1 must lie in E
/// as an A-module element; a unit combination is detected by a bounded
/// linear search when 1 is not listed literally.
class ModuleE {
 public:
  ModuleE(PairOfRings pair, std::vector<Polynomial> gens, bool check = true,
          int degree_bound = 4);

  const PairOfRings& pair() const { return pair_; }
  const std::vector<Polynomial>& gens() const { return gens_; }

 private:
  PairOfRings pair_;
  std::vector<Polynomial> gens_;
};

/// E^d: all degree-d products of the generators, duplicates pruned by
/// normal form. E^0 = {1}.
ModuleE power(const ModuleE& E, int d);

/// Affine chart of Proj at a generator: (B_{b_i}, phi_i(A)[{b_j/b_i}_j]).
struct Chart {
  int index = -1;
  Polynomial generator;
  LocalizedPair loc;
  RationalDomain domain;  // X({b_j}_j / b_i), the chart's locus in Val
};

/// One chart per non-nilpotent generator.
std::vector<Chart> charts(const ModuleE& E);

/// Generators of h^{-1}(E) on the target pair: the h-images of the E
/// generators, as an A'-module generator list. Contravariance bookkeeping:
/// the pairs-of-schemes arrow runs against the ring map, so the module on
/// h's source pair of rings is pulled to h's target pair of rings.
ModuleE inverse_image_module(const PairHom& h, const ModuleE& E);

/// E_i = b_i * A_i on the chart: every b_j / b_i lies in the chart algebra.
bool is_invertible_on_chart(const ModuleE& E, const Chart& c);

struct ChartFactor {
  int chart_index;
  PairHom hom;  // chart pair -> target of h
};

struct FactorizationResult {
  bool ok = false;
  std::string error;
  std::vector<ChartFactor> factors;
};

/// Universal property instance: when the inverse image module is principal
/// on the target (generated by a single h(b_i) with the quotients landing
/// in A'), h factors through the chart of b_i. Every admissible chart is
/// emitted and checked to reproduce h after composing with the chart
/// inclusion.
FactorizationResult universal_factorization(const PairHom& h, const ModuleE& E,
                                            int degree_bound = 4);

/// E' * E'': all pairwise products, pruned.
ModuleE compose_modules(const ModuleE& E1, const ModuleE& E2);

struct NorBlowupReport {
  bool agree = true;
  int chart = -1;
  std::string detail;
};

/// Chart-by-chart comparison of (normalize, then blow up with the module
/// over the normalized pair) against (blow up, then normalize each chart),
/// by mutual subalgebra membership of the generator sets.
NorBlowupReport nor_blowup_commutes(const PairOfRings& p, const ModuleE& E, int degree_bound);

/// Exact monomial path: charts of a monomial pair at monomial generators
/// stay monomial, so both sides go through semigroup saturation.
NorBlowupReport nor_blowup_commutes(const MonomialPair& mp,
                                    const std::vector<LatticeVector>& E_exponents,
                                    int multiplier_bound = 10, int power_bound = 10);

}  // namespace birat
