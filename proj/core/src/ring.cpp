#include "birat/ring.hpp"

namespace birat {

bool is_nilpotent(const RingPresentation& B, const Polynomial& b, int bound) {
  Polynomial p = B.nf(b);
  if (p.is_zero()) return true;
  Polynomial power = p;
  for (int k = 1; k <= bound; ++k) {
    if (power.is_zero()) return true;
    power = B.nf(power * p);
  }
  return power.is_zero();
}

LocalizationResult localize(const RingPresentation& B, const Polynomial& b, int nilpotency_bound) {
  if (is_nilpotent(B, b, nilpotency_bound))
    throw Error("localize: denominator " + b.to_string() + " is nilpotent");

  std::vector<std::string> names = B.context()->names();
  std::string t = fresh_var_name(*B.context(), "t");
  names.push_back(t);
  ContextPtr ctx = make_context(names);
  std::size_t t_idx = ctx->size() - 1;

  std::vector<Polynomial> rels;
  for (const auto& r : B.relations().generators()) rels.push_back(r.lift_to(ctx));
  rels.push_back(Polynomial::variable(ctx, t_idx) * b.lift_to(ctx) - Polynomial::constant(ctx, 1));
  return LocalizationResult{RingPresentation::quotient(ctx, rels), t_idx};
}

}  // namespace birat
