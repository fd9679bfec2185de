#pragma once

#include <optional>

#include "birat/polynomial.hpp"

namespace birat {

/// Reduced Groebner basis: leading coefficients 1, no generator term
/// divisible by another generator's leading term. Uniquely determined by
/// the ideal and the order, so permuting input generators cannot change it.
class GroebnerBasis {
 public:
  GroebnerBasis(ContextPtr ctx, MonomialOrder ord)
      : ctx_(std::move(ctx)), ord_(ord) {}
  GroebnerBasis(ContextPtr ctx, MonomialOrder ord, std::vector<Polynomial> gens)
      : ctx_(std::move(ctx)), ord_(ord), gens_(std::move(gens)) {}

  const ContextPtr& context() const { return ctx_; }
  const MonomialOrder& order() const { return ord_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  bool empty() const { return gens_.empty(); }

  bool is_unit() const {
    return gens_.size() == 1 && gens_.front().is_one();
  }

  bool operator==(const GroebnerBasis& other) const {
    return same_context(ctx_, other.ctx_) && gens_ == other.gens_;
  }

 private:
  ContextPtr ctx_;
  MonomialOrder ord_;
  std::vector<Polynomial> gens_;
};

/// Unique remainder of f modulo gb under the stored order. The result has
/// no term divisible by any leading term of gb.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb);

/// Reduced Groebner basis of the generated ideal.
GroebnerBasis buchberger(const std::vector<Polynomial>& generators, const MonomialOrder& ord);

/// True iff 1 lies in the ideal generated by `generators` together with the
/// ambient relations.
bool is_unit_ideal(const std::vector<Polynomial>& generators, const GroebnerBasis& relations);
bool is_unit_ideal(const std::vector<Polynomial>& generators, const ContextPtr& ctx);

/// Groebner basis of relations + extra generators, same order.
GroebnerBasis extend_basis(const GroebnerBasis& relations, const std::vector<Polynomial>& extra);

/// f in ideal?
inline bool in_ideal(const Polynomial& f, const GroebnerBasis& gb) {
  return normal_form(f, gb).is_zero();
}

/// Containment of ideals given by reduced bases over the same context.
bool ideal_contains(const GroebnerBasis& big, const GroebnerBasis& small);

struct SubalgebraResult {
  bool member = false;
  /// On success: a witness polynomial in tag variables y1..yk with
  /// witness(g1,...,gk) = f modulo the ideal.
  std::optional<Polynomial> witness;
};

/// Decides membership of f in the Q-subalgebra of B = Q[x]/I generated by
/// `gens`. Tag-variable elimination: compute a basis of I + (y_i - g_i)
/// under a block order eliminating x; f is in the subalgebra iff its normal
/// form only involves the tags.
SubalgebraResult subalgebra_membership(const Polynomial& f,
                                       const std::vector<Polynomial>& gens,
                                       const GroebnerBasis& relations);

/// Presentation ideal of the subalgebra Q[gens] of B = Q[x]/I in tag
/// variables: the kernel of Q[y] -> B, y_i -> g_i. Tag names are y1..yk
/// unless supplied.
GroebnerBasis subalgebra_relations(const std::vector<Polynomial>& gens,
                                   const GroebnerBasis& relations,
                                   const std::vector<std::string>& tag_names = {});

/// Keeps the basis elements supported entirely on the last
/// (size - eliminated) variables and rewrites them in `small_ctx`.
std::vector<Polynomial> eliminate_prefix(const GroebnerBasis& gb, std::size_t eliminated,
                                         const ContextPtr& small_ctx);

}  // namespace birat
