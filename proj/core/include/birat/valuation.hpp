#pragma once

#include <memory>
#include <variant>

#include "birat/pair.hpp"
#include "birat/value.hpp"

namespace birat {

class Valuation;

/// Trivial valuation attached to a prime ideal: ZERO on the prime, the
/// group zero of the trivial group elsewhere.
struct TrivialData {
  std::vector<Polynomial> prime_gens;
  GroebnerBasis prime_gb;  // relations + prime
};

/// Gauss valuation from one Z^r weight per variable. Admitted only when
/// the ring's relations are empty or binomial with weight-balanced sides
/// (w.u = w.v for every relation x^u - c x^v); the ring is then graded by
/// the weights and the min formula is well defined on normal forms.
struct WeightData {
  int rank = 0;
  std::vector<ValueVector> weights;  // one per ring variable
};

/// Valuation with enlarged kernel: ZERO on the prime, a weight valuation
/// on the quotient elsewhere. residue_images present the map B -> B/p on
/// variables, quotient_lifts pick preimages of the quotient variables.
struct CompositeData {
  std::vector<Polynomial> prime_gens;
  GroebnerBasis prime_gb;
  std::shared_ptr<const RingPresentation> quotient;
  std::vector<Polynomial> residue_images;  // per B-variable, in the quotient ring
  std::vector<Polynomial> quotient_lifts;  // per quotient variable, in B
  WeightData inner;
};

/// Lazy pullback v o phi. `cutoff` stores a pending primary
/// specialization: finite values of level < cutoff become ZERO (cutoff 1
/// keeps everything). Specializations of pullbacks are held lazily because
/// the image subalgebra rarely admits a weight presentation.
struct PullbackData {
  std::shared_ptr<const PairHom> hom;
  std::shared_ptr<const Valuation> inner;
  int cutoff = 1;
};

class Valuation {
 public:
  using Node = std::variant<TrivialData, WeightData, CompositeData, PullbackData>;

  static Valuation trivial(const RingPresentation& B, const std::vector<Polynomial>& prime_gens);
  static Valuation weight(const RingPresentation& B, std::vector<ValueVector> weights);
  static Valuation composite(const RingPresentation& B, CompositeData data);
  static Valuation pullback_node(const RingPresentation& B, PullbackData data);

  const RingPresentation& ring() const { return *ring_; }
  const Node& node() const { return node_; }
  int rank() const;

  bool is_trivial() const { return std::holds_alternative<TrivialData>(node_); }
  bool is_weight() const { return std::holds_alternative<WeightData>(node_); }
  bool is_composite() const { return std::holds_alternative<CompositeData>(node_); }
  bool is_pullback() const { return std::holds_alternative<PullbackData>(node_); }

 private:
  Valuation(std::shared_ptr<const RingPresentation> B, Node node)
      : ring_(std::move(B)), node_(std::move(node)) {}

  std::shared_ptr<const RingPresentation> ring_;
  Node node_;
};

/// Gauss evaluation: ZERO on kernel elements, otherwise the lex-min weight
/// over the monomials of the canonical representative.
ValueVector evaluate(const Valuation& v, const Polynomial& f);

/// nu(a) >= 0 or ZERO on every A-generator. Generators suffice: values of
/// products add and values of sums are bounded below by the min, so the
/// whole of A inherits nonnegativity from its generators.
bool is_A_valuation(const Valuation& v, const PairOfRings& p);

struct KernelResult {
  std::vector<Polynomial> gens;  // prime generators in B (relations not repeated)
  GroebnerBasis gb;              // relations + prime, for membership tests
  bool exact = true;             // false when a degree bound was involved
};

/// Kernel ideal. Exact for trivial/weight/composite nodes and for plain
/// pullbacks (elimination); degree-bounded linear algebra for pullbacks
/// carrying a cutoff.
KernelResult kernel(const Valuation& v, int degree_bound = 6);

/// Minimal level among lex-negative elements of the achievable value
/// semigroup (natural combinations of the generator values); rank+1 when
/// only zero is nonpositive (the spec's "infinity"). Exact rational cone
/// feasibility underneath. For pullbacks the semigroup is generated by the
/// values of the variable images; this is still exact for the retraction:
/// any value nu(phi(f)) <= 0 is sandwiched between a monomial value m0 <= 0
/// and 0, and convexity in lex order forces its level to be >= the minimal
/// generator level.
int cgamma_level(const Valuation& v);

/// rank+1 stands for "infinity" in cgamma_level and specialization levels.
inline int level_infinity(const Valuation& v) { return v.rank() + 1; }

/// Generator values of the achievable semigroup (ZERO entries dropped).
std::vector<ValueVector> semigroup_generators(const Valuation& v);

struct InValVerdict {
  bool value = false;
  /// Weight/trivial/composite value semigroups are known exactly; for
  /// pullbacks the verdict compares generator semigroups only and a
  /// positive answer may be optimistic ("semigroup-approximate"). Negative
  /// answers are always sound.
  bool exact = true;
};

/// Membership in Val(B, A): the valuation is unbounded, equivalently the
/// convex subgroup generated by the nonpositive values is everything,
/// equivalently cgamma_level equals the minimal achievable level.
InValVerdict in_val(const Valuation& v, const PairOfRings& p);

/// Truncation to the convex subgroup of levels >= j: values of level < j
/// become ZERO. Defined (a valuation) iff j <= cgamma_level. j = 1 returns
/// v itself; j = rank+1 kills every nonzero value.
Valuation primary_specialize(const Valuation& v, int j, int degree_bound = 6);

/// All distinct primary specializations, ordered from v down to the
/// minimal one (the retraction target).
std::vector<Valuation> primary_specializations(const Valuation& v, const PairOfRings& p,
                                               int degree_bound = 6);

/// Minimal primary specialization; lands in Val(B, A).
Valuation retract(const Valuation& v, const PairOfRings& p, int degree_bound = 6);

/// Lazy pullback along a homomorphism of pairs.
Valuation pullback(const PairHom& hom, const Valuation& v);

/// retract(pullback(phi, v)) - the map on points realizing the bir functor.
Valuation bir_map(const PairHom& hom, const Valuation& v, int degree_bound = 6);

/// num/den lies in the semi-valuation ring S_v: nu(num) >= nu(den) or
/// nu(num) = ZERO. The denominator must stay outside the kernel.
bool semi_val_membership(const Valuation& v, const Polynomial& num, const Polynomial& den);

/// Extensional comparison on a witness set: ZERO patterns agree and the
/// value order agrees on every witness pair. Equivalent valuations of
/// different ranks (truncations) compare equal.
bool same_valuation_on(const Valuation& a, const Valuation& b,
                       const std::vector<Polynomial>& witnesses);

/// Default witness set: variables, their pairwise products, A-generators.
std::vector<Polynomial> default_witnesses(const PairOfRings& p);

enum class MonomialFilter { kNonpositive, kLevelAtLeast };

/// The obstruction part of f: the component of its canonical image whose
/// monomial values violate the filter target. For kNonpositive the result
/// vanishes iff nu(f) > 0 or ZERO; for kLevelAtLeast(j) it vanishes iff
/// the value of f is killed by a cutoff at level j (or f is in the
/// kernel). Linear in f, which is what the bounded kernel and tau
/// computations exploit.
Polynomial filtered_image(const Valuation& v, const Polynomial& f, MonomialFilter filter,
                          int filter_level = 1);

}  // namespace birat
