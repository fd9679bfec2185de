#pragma once

#include "birat/valuation.hpp"

namespace birat {

/// Rational domain X({a_1..a_n}/b) of Val(B,A): the locus
/// nu(a_i) >= nu(b) != ZERO. The defining data must generate the unit
/// ideal and the denominator must not be nilpotent, otherwise the locus
/// is empty and the localized pair degenerates.
class RationalDomain {
 public:
  RationalDomain(PairOfRings pair, std::vector<Polynomial> numerators, Polynomial denominator,
                 bool check = true);

  const PairOfRings& pair() const { return pair_; }
  const std::vector<Polynomial>& numerators() const { return numerators_; }
  const Polynomial& denominator() const { return denominator_; }

  /// The full space X({1}/1).
  static RationalDomain whole(const PairOfRings& pair);

 private:
  PairOfRings pair_;
  std::vector<Polynomial> numerators_;
  Polynomial denominator_;
};

struct LocalizedPair {
  PairOfRings pair;        // (B_b, phi_b(A)[a_i/b])
  PairHom inclusion;       // phi_b: (B,A) -> localized pair
  std::size_t t_index;     // index of the inverse variable
};

/// (B_b, phi_b(A)[a_1/b, ..., a_n/b]) with the Rabinowitsch variable t and
/// A-generators = images of the old ones plus a_i * t.
LocalizedPair to_pair(const RationalDomain& d);

/// nu(a_i) >= nu(b) for all i and nu(b) != ZERO.
bool membership(const Valuation& v, const RationalDomain& d);

/// Product description of the intersection: denominators are prepended to
/// the numerator lists, numerators of the result are all pairwise
/// products, the denominator is the product of denominators.
RationalDomain intersect(const RationalDomain& d1, const RationalDomain& d2);

struct Covering {
  PairOfRings base;
  std::vector<RationalDomain> domains;
};

struct RefinedCovering {
  Covering cover;
  std::vector<int> assignment;       // output domain -> index of the input it refines
  std::vector<Polynomial> products;  // the generating set T = { a_alpha }
};

/// The I/I' product refinement: with paper indexing a_1 = denominator per
/// input domain, I = prod {1..n_i}, I' = tuples with some r_i = 1,
/// a_alpha the coordinatewise products. Output domains are
/// X({a_beta}_{beta in I'} / a_alpha) for alpha in I', each contained in
/// the input whose index has r_i = 1.
RefinedCovering refine_cover(const Covering& c);

/// Value of an element of the localized ring B_b under a valuation on B:
/// write h = sum c_d t^d, lift g = sum c_d b^{k-d} with k the t-degree,
/// then nu(h) = nu(g) - k nu(b). Requires nu(b) != ZERO.
ValueVector localized_value(const Valuation& v, const Polynomial& b_element,
                            const LocalizedPair& loc, const Polynomial& h);

/// Inner rational-domain data over to_pair(outer), given in the localized
/// ring's variables.
struct InnerSpec {
  std::vector<Polynomial> numerators;  // elements of the localized ring
  Polynomial denominator;
};

/// Transitivity: a rational domain of a rational domain is a rational
/// domain of the base. Implements the four constructive cases, clearing
/// denominators through the Rabinowitsch relation; the result is a single
/// domain assembled with intersect().
RationalDomain flatten(const RationalDomain& outer, const InnerSpec& inner);

}  // namespace birat
