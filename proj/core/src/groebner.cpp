#include "birat/groebner.hpp"

#include <algorithm>
#include <deque>

namespace birat {

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) {
  if (!same_context(f.context(), gb.context())) throw Error("normal_form: context mismatch");
  const auto& ord = gb.order();
  Polynomial p = f;
  Polynomial remainder(f.context());
  while (!p.is_zero()) {
    auto [lm, lc] = p.leading_term(ord);
    bool reduced = false;
    for (const Polynomial& g : gb.generators()) {
      auto [gm, gc] = g.leading_term(ord);
      if (gm.divides(lm)) {
        Rational factor = lc / gc;
        p = p - g.scaled(factor) * Polynomial::monomial(p.context(), lm / gm, 1);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      remainder.add_term(lm, lc);
      Polynomial lt = Polynomial::monomial(p.context(), lm, lc);
      p = p - lt;
    }
  }
  return remainder;
}

namespace {

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& ord) {
  auto [fm, fc] = f.leading_term(ord);
  auto [gm, gc] = g.leading_term(ord);
  Monomial l = lcm(fm, gm);
  Polynomial a = Polynomial::monomial(f.context(), l / fm, Rational(1) / fc);
  Polynomial b = Polynomial::monomial(f.context(), l / gm, Rational(1) / gc);
  return f * a - g * b;
}

// Full inter-reduction; returns the reduced basis sorted by leading
// monomial descending (canonical because reduced bases are unique).
std::vector<Polynomial> reduce_basis(std::vector<Polynomial> basis, const MonomialOrder& ord,
                                     const ContextPtr& ctx) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      Polynomial g = basis[i];
      std::vector<Polynomial> others;
      others.reserve(basis.size() - 1);
      for (std::size_t j = 0; j < basis.size(); ++j)
        if (j != i) others.push_back(basis[j]);
      GroebnerBasis rest(ctx, ord, std::move(others));
      Polynomial r = normal_form(g, rest);
      if (r != g) changed = true;
      if (r.is_zero()) {
        basis.erase(basis.begin() + static_cast<long>(i));
        --i;
      } else {
        basis[i] = r;
      }
    }
  }
  for (Polynomial& g : basis) {
    auto [m, c] = g.leading_term(ord);
    g = g.scaled(Rational(1) / c);
  }
  std::sort(basis.begin(), basis.end(), [&](const Polynomial& a, const Polynomial& b) {
    return ord.greater(a.leading_term(ord).first, b.leading_term(ord).first);
  });
  return basis;
}

}  // namespace

GroebnerBasis buchberger(const std::vector<Polynomial>& generators, const MonomialOrder& ord) {
  ContextPtr ctx;
  for (const auto& g : generators) {
    if (!ctx) ctx = g.context();
    if (!same_context(ctx, g.context())) throw Error("buchberger: context mismatch");
  }
  if (!ctx) return GroebnerBasis(make_context({}), ord);

  std::vector<Polynomial> basis;
  for (const auto& g : generators)
    if (!g.is_zero()) basis.push_back(g);
  if (basis.empty()) return GroebnerBasis(ctx, ord);

  std::deque<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) pairs.emplace_back(i, j);

  while (!pairs.empty()) {
    auto [i, j] = pairs.front();
    pairs.pop_front();
    Monomial mi = basis[i].leading_term(ord).first;
    Monomial mj = basis[j].leading_term(ord).first;
    // Buchberger's first criterion: coprime leading monomials.
    bool coprime = true;
    for (std::size_t k = 0; k < mi.exps.size(); ++k)
      if (mi.exps[k] > 0 && mj.exps[k] > 0) {
        coprime = false;
        break;
      }
    if (coprime) continue;

    Polynomial s = s_polynomial(basis[i], basis[j], ord);
    Polynomial r = normal_form(s, GroebnerBasis(ctx, ord, basis));
    if (!r.is_zero()) {
      basis.push_back(r);
      for (std::size_t k = 0; k + 1 < basis.size(); ++k) pairs.emplace_back(k, basis.size() - 1);
      if (r.is_constant()) break;  // unit ideal, no point continuing
    }
  }

  // Unit ideal short-circuit.
  for (const auto& g : basis)
    if (!g.is_zero() && g.is_constant())
      return GroebnerBasis(ctx, ord, {Polynomial::constant(ctx, 1)});

  return GroebnerBasis(ctx, ord, reduce_basis(std::move(basis), ord, ctx));
}

bool is_unit_ideal(const std::vector<Polynomial>& generators, const GroebnerBasis& relations) {
  std::vector<Polynomial> all = relations.generators();
  for (const auto& g : generators) all.push_back(g);
  return buchberger(all, relations.order()).is_unit();
}

bool is_unit_ideal(const std::vector<Polynomial>& generators, const ContextPtr& ctx) {
  GroebnerBasis none(ctx, MonomialOrder::grevlex());
  return is_unit_ideal(generators, none);
}

GroebnerBasis extend_basis(const GroebnerBasis& relations, const std::vector<Polynomial>& extra) {
  std::vector<Polynomial> all = relations.generators();
  for (const auto& g : extra) all.push_back(g);
  if (all.empty()) return GroebnerBasis(relations.context(), relations.order());
  return buchberger(all, relations.order());
}

bool ideal_contains(const GroebnerBasis& big, const GroebnerBasis& small) {
  for (const auto& g : small.generators())
    if (!in_ideal(g, big)) return false;
  return true;
}

namespace {

// Shared tool for subalgebra questions: context x-vars then tag vars,
// basis of I + (y_i - g_i) under the x-eliminating block order.
struct TagSetup {
  ContextPtr big_ctx;
  ContextPtr tag_ctx;
  GroebnerBasis basis;
  std::size_t nx;
};

TagSetup make_tag_setup(const std::vector<Polynomial>& gens, const GroebnerBasis& relations,
                        std::vector<std::string> tag_names) {
  const ContextPtr& ctx = relations.context();
  std::size_t nx = ctx->size();
  if (tag_names.empty()) {
    for (std::size_t i = 0; i < gens.size(); ++i) {
      std::string stem = "y" + std::to_string(i + 1);
      // avoid collisions with ambient variable names
      while (ctx->index_of(stem) >= 0) stem = "_" + stem;
      tag_names.push_back(stem);
    }
  }
  if (tag_names.size() != gens.size()) throw Error("tag name count mismatch");

  std::vector<std::string> all_names = ctx->names();
  for (const auto& n : tag_names) all_names.push_back(n);
  ContextPtr big = make_context(all_names);

  MonomialOrder ord = MonomialOrder::block(static_cast<int>(nx));
  std::vector<Polynomial> ideal;
  for (const auto& r : relations.generators()) ideal.push_back(r.lift_to(big));
  for (std::size_t i = 0; i < gens.size(); ++i) {
    Polynomial y = Polynomial::variable(big, nx + i);
    ideal.push_back(y - gens[i].lift_to(big));
  }
  GroebnerBasis gb = ideal.empty() ? GroebnerBasis(big, ord) : buchberger(ideal, ord);
  return TagSetup{big, make_context({tag_names.begin(), tag_names.end()}), std::move(gb), nx};
}

bool uses_prefix(const Polynomial& p, std::size_t nx) {
  for (const auto& [m, c] : p.terms())
    for (std::size_t i = 0; i < nx; ++i)
      if (m.exps[i] > 0) return true;
  return false;
}

}  // namespace

SubalgebraResult subalgebra_membership(const Polynomial& f, const std::vector<Polynomial>& gens,
                                       const GroebnerBasis& relations) {
  TagSetup setup = make_tag_setup(gens, relations, {});
  Polynomial nf = normal_form(f.lift_to(setup.big_ctx), setup.basis);
  SubalgebraResult res;
  if (uses_prefix(nf, setup.nx)) return res;
  res.member = true;
  // project onto the tag context
  Polynomial w(setup.tag_ctx);
  for (const auto& [m, c] : nf.terms()) {
    Monomial mm(setup.tag_ctx->size());
    for (std::size_t i = 0; i < setup.tag_ctx->size(); ++i) mm.exps[i] = m.exps[setup.nx + i];
    w.add_term(mm, c);
  }
  res.witness = w;
  return res;
}

GroebnerBasis subalgebra_relations(const std::vector<Polynomial>& gens,
                                   const GroebnerBasis& relations,
                                   const std::vector<std::string>& tag_names) {
  TagSetup setup = make_tag_setup(gens, relations, tag_names);
  std::vector<Polynomial> kept = eliminate_prefix(setup.basis, setup.nx, setup.tag_ctx);
  MonomialOrder ord = MonomialOrder::grevlex();
  if (kept.empty()) return GroebnerBasis(setup.tag_ctx, ord);
  return buchberger(kept, ord);
}

std::vector<Polynomial> eliminate_prefix(const GroebnerBasis& gb, std::size_t eliminated,
                                         const ContextPtr& small_ctx) {
  std::vector<Polynomial> out;
  for (const auto& g : gb.generators()) {
    if (uses_prefix(g, eliminated)) continue;
    Polynomial p(small_ctx);
    for (const auto& [m, c] : g.terms()) {
      Monomial mm(small_ctx->size());
      for (std::size_t i = 0; i < small_ctx->size(); ++i) mm.exps[i] = m.exps[eliminated + i];
      p.add_term(mm, c);
    }
    out.push_back(p);
  }
  return out;
}

}  // namespace birat
