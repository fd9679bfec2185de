#include "birat/domain.hpp"

namespace birat {

RationalDomain::RationalDomain(PairOfRings pair, std::vector<Polynomial> numerators,
                               Polynomial denominator, bool check)
    : pair_(std::move(pair)) {
  const RingPresentation& B = pair_.B();
  denominator_ = B.nf(denominator);
  for (const auto& a : numerators) {
    Polynomial n = B.nf(a);
    bool dup = false;
    for (const auto& have : numerators_)
      if (have == n) {
        dup = true;
        break;
      }
    if (!dup) numerators_.push_back(std::move(n));
  }
  if (check) {
    if (is_nilpotent(B, denominator_))
      throw Error("rational domain: nilpotent denominator (the locus is empty)");
    std::vector<Polynomial> all = numerators_;
    all.push_back(denominator_);
    if (!is_unit_ideal(all, B.relations()))
      throw Error("rational domain: defining elements do not generate the unit ideal");
  }
}

RationalDomain RationalDomain::whole(const PairOfRings& pair) {
  return RationalDomain(pair, {pair.B().one()}, pair.B().one());
}

LocalizedPair to_pair(const RationalDomain& d) {
  const PairOfRings& base = d.pair();
  LocalizationResult loc = localize(base.B(), d.denominator());
  const ContextPtr& ctx = loc.ring.context();
  Polynomial t = Polynomial::variable(ctx, loc.inverse_var);

  std::vector<Polynomial> A_gens;
  for (const auto& a : base.A_gens()) A_gens.push_back(loc.ring.nf(a.lift_to(ctx)));
  for (const auto& a : d.numerators()) A_gens.push_back(loc.ring.nf(a.lift_to(ctx) * t));
  PairOfRings localized(loc.ring, std::move(A_gens));

  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < base.B().var_count(); ++i)
    images.push_back(base.B().var(i).lift_to(ctx));
  PairHom inclusion(base, localized, std::move(images));
  return LocalizedPair{std::move(localized), std::move(inclusion), loc.inverse_var};
}

bool membership(const Valuation& v, const RationalDomain& d) {
  ValueVector bv = evaluate(v, d.denominator());
  if (bv.zero_sym) return false;
  for (const auto& a : d.numerators()) {
    ValueVector av = evaluate(v, a);
    if (compare(av, bv) < 0) return false;
  }
  return true;
}

namespace {

// Paper indexing: the denominator leads the list, numerators follow.
std::vector<Polynomial> combined_list(const RationalDomain& d) {
  std::vector<Polynomial> out = {d.denominator()};
  for (const auto& a : d.numerators()) {
    if (a == d.denominator()) continue;
    out.push_back(a);
  }
  return out;
}

}  // namespace

RationalDomain intersect(const RationalDomain& d1, const RationalDomain& d2) {
  if (!same_context(d1.pair().B().context(), d2.pair().B().context()))
    throw Error("intersect: domains over different rings");
  const RingPresentation& B = d1.pair().B();
  std::vector<Polynomial> l1 = combined_list(d1);
  std::vector<Polynomial> l2 = combined_list(d2);
  std::vector<Polynomial> numerators;
  for (const auto& a : l1)
    for (const auto& b : l2) numerators.push_back(B.nf(a * b));
  Polynomial den = B.nf(d1.denominator() * d2.denominator());
  return RationalDomain(d1.pair(), std::move(numerators), std::move(den));
}

RefinedCovering refine_cover(const Covering& c) {
  if (c.domains.empty()) throw Error("refine_cover: empty covering");
  const RingPresentation& B = c.base.B();
  std::vector<std::vector<Polynomial>> lists;
  for (const auto& d : c.domains) lists.push_back(combined_list(d));

  // enumerate I = prod {0..n_i-1}; I' = tuples with some r_i = 0
  std::vector<std::size_t> idx(lists.size(), 0);
  std::vector<std::pair<std::vector<std::size_t>, Polynomial>> iprime;
  while (true) {
    bool in_iprime = false;
    for (std::size_t r : idx)
      if (r == 0) in_iprime = true;
    if (in_iprime) {
      Polynomial prod = B.one();
      for (std::size_t i = 0; i < lists.size(); ++i) prod = B.nf(prod * lists[i][idx[i]]);
      iprime.emplace_back(idx, std::move(prod));
    }
    std::size_t i = 0;
    while (i < lists.size()) {
      if (++idx[i] < lists[i].size()) break;
      idx[i] = 0;
      ++i;
    }
    if (i == lists.size()) break;
  }

  std::vector<Polynomial> products;
  for (const auto& [tuple, prod] : iprime) {
    bool dup = false;
    for (const auto& have : products)
      if (have == prod) {
        dup = true;
        break;
      }
    if (!dup) products.push_back(prod);
  }
  if (!is_unit_ideal(products, B.relations()))
    throw Error("refine_cover: the product set misses the unit ideal (input was not a cover)");

  RefinedCovering out{Covering{c.base, {}}, {}, products};
  std::vector<Polynomial> seen_dens;
  for (const auto& [tuple, prod] : iprime) {
    bool dup = false;
    for (const auto& have : seen_dens)
      if (have == prod) {
        dup = true;
        break;
      }
    if (dup) continue;
    seen_dens.push_back(prod);
    out.cover.domains.emplace_back(c.base, products, prod);
    int assigned = -1;
    for (std::size_t i = 0; i < tuple.size(); ++i)
      if (tuple[i] == 0) {
        assigned = static_cast<int>(i);
        break;
      }
    out.assignment.push_back(assigned);
  }
  return out;
}

ValueVector localized_value(const Valuation& v, const Polynomial& b_element,
                            const LocalizedPair& loc, const Polynomial& h) {
  ValueVector bv = evaluate(v, b_element);
  if (bv.zero_sym) throw Error("localized_value: denominator lies in the kernel");
  Polynomial p = loc.pair.B().nf(h);
  if (p.is_zero()) return ValueVector::zero_symbol(v.rank());

  const std::size_t ti = loc.t_index;
  int k = 0;
  for (const auto& [m, c] : p.terms()) k = std::max(k, m.exps[ti]);

  // g = sum over terms c * x^m * b^{k-d}; then nu(h) = nu(g) - k nu(b)
  const ContextPtr& base_ctx = b_element.context();
  Polynomial g = Polynomial::zero(base_ctx);
  for (const auto& [m, c] : p.terms()) {
    int d = m.exps[ti];
    Monomial base_m(base_ctx->size());
    for (std::size_t i = 0; i < base_ctx->size(); ++i) base_m.exps[i] = m.exps[i];
    Polynomial term = Polynomial::monomial(base_ctx, base_m, c) * b_element.pow(k - d);
    g = g + term;
  }
  ValueVector gv = evaluate(v, g);
  if (gv.zero_sym) return gv;
  ValueVector shift = bv.scaled(k);
  ValueVector out = gv;
  for (std::size_t i = 0; i < out.entries.size(); ++i) out.entries[i] -= shift.entries[i];
  return out;
}

namespace {

// g in B and k >= 0 with phi_b(g) = b^k h, by clearing t through tb = 1.
std::pair<Polynomial, int> lift_localized(const RationalDomain& outer, const LocalizedPair& loc,
                                          const Polynomial& h) {
  const Polynomial& b = outer.denominator();
  const ContextPtr& base_ctx = outer.pair().B().context();
  Polynomial p = loc.pair.B().nf(h);
  const std::size_t ti = loc.t_index;
  int k = 0;
  for (const auto& [m, c] : p.terms()) k = std::max(k, m.exps[ti]);
  Polynomial g = Polynomial::zero(base_ctx);
  for (const auto& [m, c] : p.terms()) {
    int d = m.exps[ti];
    Monomial base_m(base_ctx->size());
    for (std::size_t i = 0; i < base_ctx->size(); ++i) base_m.exps[i] = m.exps[i];
    g = g + Polynomial::monomial(base_ctx, base_m, c) * b.pow(k - d);
  }
  return {outer.pair().B().nf(g), k};
}

}  // namespace

RationalDomain flatten(const RationalDomain& outer, const InnerSpec& inner) {
  const PairOfRings& base = outer.pair();
  const RingPresentation& B = base.B();
  LocalizedPair loc = to_pair(outer);
  const Polynomial& b = outer.denominator();

  Polynomial inner_den = loc.pair.B().nf(inner.denominator);
  std::vector<Polynomial> inner_nums;
  for (const auto& h : inner.numerators) inner_nums.push_back(loc.pair.B().nf(h));

  bool den_is_one = inner_den.is_one();
  bool outer_is_plain = b.is_one();

  // Case 1: both denominators are 1 - plain union of the conditions.
  if (outer_is_plain && den_is_one) {
    std::vector<Polynomial> nums = outer.numerators();
    for (const auto& h : inner_nums) {
      auto [g, k] = lift_localized(outer, loc, h);
      nums.push_back(g);
    }
    return RationalDomain(base, std::move(nums), B.one());
  }

  // Case 2: inner = X'({1}/h).
  if (inner_nums.size() == 1 && inner_nums.front().is_one()) {
    auto [g, k] = lift_localized(outer, loc, inner_den);
    RationalDomain cond(base, {B.nf(b.pow(k)), B.one()}, g);
    return intersect(outer, cond);
  }

  // Case 3: inner = X'({h_j}/1).
  if (den_is_one) {
    RationalDomain acc = outer;
    for (const auto& h : inner_nums) {
      auto [g, k] = lift_localized(outer, loc, h);
      RationalDomain cond(base, {g, B.one()}, B.nf(b.pow(k)));
      acc = intersect(acc, cond);
    }
    return acc;
  }

  // Case 4: decompose through X'({1}/f), then add each h_j/f <= 1.
  auto [gf, kf] = lift_localized(outer, loc, inner_den);
  RationalDomain acc = intersect(outer, RationalDomain(base, {B.nf(b.pow(kf)), B.one()}, gf));
  for (const auto& h : inner_nums) {
    auto [gj, kj] = lift_localized(outer, loc, h);
    // v(h_j) <= v(f) reads v(g_j b^{kf}) <= v(g_f b^{kj})
    RationalDomain cond(base, {B.nf(gj * b.pow(kf)), B.one()}, B.nf(gf * b.pow(kj)));
    acc = intersect(acc, cond);
  }
  return acc;
}

}  // namespace birat
