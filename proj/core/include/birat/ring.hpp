#pragma once

#include "birat/groebner.hpp"

namespace birat {

/// B = Q[x1..xn]/I, the ideal stored as a reduced basis. The ring must be
/// nonzero (1 not in I).
class RingPresentation {
 public:
  RingPresentation(ContextPtr ctx, GroebnerBasis relations)
      : ctx_(std::move(ctx)), relations_(std::move(relations)) {
    if (relations_.is_unit()) throw Error("zero ring: 1 lies in the relation ideal");
  }

  /// Free polynomial ring.
  static RingPresentation free_ring(ContextPtr ctx) {
    GroebnerBasis none(ctx, MonomialOrder::grevlex());
    return RingPresentation(std::move(ctx), std::move(none));
  }

  static RingPresentation quotient(ContextPtr ctx, const std::vector<Polynomial>& relations) {
    if (relations.empty()) return free_ring(std::move(ctx));
    return RingPresentation(ctx, buchberger(relations, MonomialOrder::grevlex()));
  }

  const ContextPtr& context() const { return ctx_; }
  const GroebnerBasis& relations() const { return relations_; }
  std::size_t var_count() const { return ctx_->size(); }

  Polynomial nf(const Polynomial& f) const { return normal_form(f, relations_); }
  bool is_zero_element(const Polynomial& f) const { return nf(f).is_zero(); }
  Polynomial var(std::size_t i) const { return Polynomial::variable(ctx_, i); }
  Polynomial one() const { return Polynomial::constant(ctx_, 1); }
  Polynomial parse(const std::string& text) const { return nf(parse_polynomial(ctx_, text)); }

  bool operator==(const RingPresentation& other) const {
    return same_context(ctx_, other.ctx_) && relations_ == other.relations_;
  }

 private:
  ContextPtr ctx_;
  GroebnerBasis relations_;
};

struct LocalizationResult {
  RingPresentation ring;   // B with one fresh variable t and relation t*b - 1
  std::size_t inverse_var; // index of t in the new context
};

/// Bounded nilpotency check: some power b^k, k <= bound, reduces to zero.
/// Exceeding the bound counts as "presumed not nilpotent".
bool is_nilpotent(const RingPresentation& B, const Polynomial& b, int bound = 32);

/// Rabinowitsch presentation of B_b. Throws on nilpotent b: a rational
/// domain with nilpotent denominator is empty.
LocalizationResult localize(const RingPresentation& B, const Polynomial& b, int nilpotency_bound = 32);

}  // namespace birat
