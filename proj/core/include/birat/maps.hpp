#pragma once

#include "birat/valuation.hpp"

namespace birat {

/// sigma(p): the trivial valuation at a proper prime; always lands in Val.
Valuation sigma(const PairOfRings& pair, const std::vector<Polynomial>& prime_gens);

struct TauResult {
  ContextPtr tag_ctx;              // tag variables of A's own presentation
  std::vector<std::string> tags;
  GroebnerBasis A_relations;       // the presentation ideal of A
  GroebnerBasis ideal;             // tau(v) = Phi^{-1}(m_v), includes A_relations
  bool exact = true;               // false when the degree-bounded search was used
};

/// tau(v) = { a in A : nu(a) > 0 or ZERO }, the pullback of the maximal
/// ideal of the valuation ring, returned in A's own tag presentation.
/// Trivial valuations go through pure elimination and are exact; the
/// other kinds add a degree-bounded linear search on top of the
/// presentation ideal.
TauResult tau(const Valuation& v, const PairOfRings& pair, int degree_bound = 4);

struct StalkLocality {
  bool local = true;
  /// Kernel generator of the source valuation whose image stays outside
  /// the target kernel (so the induced map of M-stalks B_q -> B'_p sends
  /// the maximal ideal somewhere invertible).
  std::optional<Polynomial> witness;
};

/// Checks whether the induced homomorphism of M-stalks along `hom`, from
/// the stalk at w = bir(hom)(v) to the stalk at v, is local.
StalkLocality m_stalk_locality(const PairHom& hom, const Valuation& v, const Valuation& w,
                               int degree_bound = 6);

}  // namespace birat
