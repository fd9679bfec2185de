#include "birat/maps.hpp"

#include <map>

#include "birat/linalg.hpp"

namespace birat {

Valuation sigma(const PairOfRings& pair, const std::vector<Polynomial>& prime_gens) {
  return Valuation::trivial(pair.B(), prime_gens);  // throws on improper ideals
}

namespace {

std::vector<std::string> make_tags(const PairOfRings& pair) {
  std::vector<std::string> tags;
  for (std::size_t i = 0; i < pair.A_gens().size(); ++i) {
    std::string t = "y" + std::to_string(i + 1);
    while (pair.B().context()->index_of(t) >= 0) t = "_" + t;
    tags.push_back(t);
  }
  return tags;
}

// Monomials in the tag variables up to the degree bound.
std::vector<Monomial> tag_monomials(std::size_t n, int degree) {
  std::vector<Monomial> out;
  std::vector<int> e(n, 0);
  while (true) {
    out.emplace_back(std::vector<int>(e.begin(), e.end()));
    std::size_t i = 0;
    while (i < n) {
      int total = 0;
      for (std::size_t k = 0; k < n; ++k) total += e[k];
      if (total < degree) {
        ++e[i];
        break;
      }
      e[i] = 0;
      ++i;
    }
    if (i == n) break;
  }
  return out;
}

}  // namespace

TauResult tau(const Valuation& v, const PairOfRings& pair, int degree_bound) {
  if (!is_A_valuation(v, pair)) throw Error("tau: not an A-valuation on this pair");
  std::vector<std::string> tags = make_tags(pair);
  GroebnerBasis J = pair.A_relations(tags);
  ContextPtr tag_ctx = J.context();

  std::vector<Polynomial> gens = J.generators();
  bool exact;

  if (const auto* t = std::get_if<TrivialData>(&v.node())) {
    // pure elimination: tau = { a in A : a in p }, the kernel of
    // Q[y] -> B/p, y_i -> a_i
    GroebnerBasis mod_p(v.ring().context(), t->prime_gb.order(), t->prime_gb.generators());
    GroebnerBasis contracted = subalgebra_relations(pair.A_gens(), mod_p, tags);
    for (const auto& g : contracted.generators()) gens.push_back(g.lift_to(tag_ctx));
    exact = true;
  } else {
    // degree-bounded: tag expressions g with nu(g(a)) > 0 or ZERO form the
    // kernel of the linear map g -> filtered_image(v, g(a..), nonpositive)
    std::vector<Monomial> mus = tag_monomials(tags.size(), degree_bound);
    std::vector<Polynomial> images;
    images.reserve(mus.size());
    for (const auto& mu : mus) {
      Polynomial in_B = pair.B().one();
      for (std::size_t i = 0; i < tags.size(); ++i)
        if (mu.exps[i] > 0) in_B = pair.B().nf(in_B * pair.A_gens()[i].pow(mu.exps[i]));
      images.push_back(filtered_image(v, in_B, MonomialFilter::kNonpositive));
    }
    std::map<Monomial, std::size_t, MonomialLexLess> idx;
    for (const auto& img : images)
      for (const auto& [m, c] : img.terms())
        if (!idx.count(m)) idx.emplace(m, idx.size());
    QMatrix A(idx.size(), QVector(mus.size(), Rational(0)));
    for (std::size_t j = 0; j < images.size(); ++j)
      for (const auto& [m, c] : images[j].terms()) A[idx.at(m)][j] = c;
    for (const auto& combo : kernel_basis(A)) {
      Polynomial p(tag_ctx);
      for (std::size_t j = 0; j < mus.size(); ++j)
        if (combo[j] != 0) p.add_term(mus[j], combo[j]);
      if (!p.is_zero()) gens.push_back(p);
    }
    exact = false;
  }

  GroebnerBasis ideal = gens.empty() ? GroebnerBasis(tag_ctx, MonomialOrder::grevlex())
                                     : buchberger(gens, MonomialOrder::grevlex());
  return TauResult{tag_ctx, std::move(tags), std::move(J), std::move(ideal), exact};
}

StalkLocality m_stalk_locality(const PairHom& hom, const Valuation& v, const Valuation& w,
                               int degree_bound) {
  StalkLocality out;
  KernelResult kw = kernel(w, degree_bound);
  for (const auto& f : kw.gens) {
    ValueVector val = evaluate(v, hom.apply(f));
    if (!val.zero_sym) {
      out.local = false;
      out.witness = f;
      return out;
    }
  }
  return out;
}

}  // namespace birat
