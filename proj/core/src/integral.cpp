#include "birat/integral.hpp"

#include <map>

#include "birat/linalg.hpp"
#include "birat/valuation.hpp"

namespace birat {

namespace {

// All products of `gens` of total degree <= bound, in normal form, deduped.
std::vector<Polynomial> generator_monomials(const std::vector<Polynomial>& gens,
                                            const RingPresentation& B, int bound) {
  std::vector<Polynomial> out = {B.one()};
  std::vector<Polynomial> layer = {B.one()};
  for (int d = 1; d <= bound; ++d) {
    std::vector<Polynomial> next;
    for (const auto& p : layer) {
      for (const auto& g : gens) {
        Polynomial q = B.nf(p * g);
        if (q.is_zero()) continue;
        bool seen = false;
        for (const auto& have : out)
          if (have == q) {
            seen = true;
            break;
          }
        if (!seen) {
          out.push_back(q);
          next.push_back(q);
        }
      }
    }
    layer = std::move(next);
    if (layer.empty()) break;
  }
  return out;
}

// Column index for each monomial appearing across the given elements.
std::map<Monomial, std::size_t, MonomialLexLess> index_monomials(
    const std::vector<Polynomial>& elems) {
  std::map<Monomial, std::size_t, MonomialLexLess> idx;
  for (const auto& p : elems)
    for (const auto& [m, c] : p.terms())
      if (!idx.count(m)) idx.emplace(m, idx.size());
  return idx;
}

}  // namespace

IntegralRelation integral_element_test(const Polynomial& f, const std::vector<Polynomial>& gens,
                                       const RingPresentation& B, int degree_bound,
                                       int coeff_degree_bound) {
  if (coeff_degree_bound < 0) coeff_degree_bound = degree_bound;
  Polynomial fn = B.nf(f);
  std::vector<Polynomial> basis = generator_monomials(gens, B, coeff_degree_bound);

  std::vector<Polynomial> powers = {B.one()};  // f^0, f^1, ...
  for (int n = 1; n <= degree_bound; ++n) {
    powers.push_back(B.nf(powers.back() * fn));

    // unknowns: one coefficient per (power i < n, basis element)
    std::vector<Polynomial> columns;
    for (int i = 0; i < n; ++i)
      for (const auto& mu : basis) columns.push_back(B.nf(mu * powers[static_cast<std::size_t>(i)]));

    std::vector<Polynomial> all = columns;
    all.push_back(powers.back());
    auto idx = index_monomials(all);

    QMatrix A(idx.size(), QVector(columns.size(), Rational(0)));
    QVector b(idx.size(), Rational(0));
    for (std::size_t j = 0; j < columns.size(); ++j)
      for (const auto& [m, c] : columns[j].terms()) A[idx.at(m)][j] = c;
    for (const auto& [m, c] : powers.back().terms()) b[idx.at(m)] = -c;

    auto sol = solve_linear(A, b);
    if (!sol) continue;

    IntegralRelation rel;
    rel.found = true;
    rel.degree = n;
    std::size_t col = 0;
    for (int i = 0; i < n; ++i) {
      Polynomial ci = Polynomial::zero(B.context());
      for (const auto& mu : basis) {
        if ((*sol)[col] != 0) ci = ci + mu.scaled((*sol)[col]);
        ++col;
      }
      rel.coeffs.push_back(B.nf(ci));
    }
    return rel;
  }
  IntegralRelation rel;
  rel.degree = degree_bound;
  return rel;
}

AdicResult is_adic(const PairHom& hom, int degree_bound,
                   const std::vector<Valuation>& witness_probes) {
  AdicResult res;
  res.bound = degree_bound;

  // image of B (x)_A A' in B': generated by the variable images and A'.
  std::vector<Polynomial> image_gens = hom.images();
  for (const auto& a : hom.target().A_gens()) image_gens.push_back(a);

  const RingPresentation& Bp = hom.target().B();
  bool all_found = true;
  std::vector<IntegralRelation> rels;
  for (std::size_t j = 0; j < Bp.var_count(); ++j) {
    IntegralRelation r = integral_element_test(Bp.var(j), image_gens, Bp, degree_bound);
    if (!r.found) all_found = false;
    rels.push_back(std::move(r));
    if (!all_found) break;
  }
  if (all_found) {
    res.verdict = AdicVerdict::kAdic;
    res.relations = std::move(rels);
    return res;
  }

  // Exhausted search is no disproof; look for a valuation witness whose
  // pullback is bounded.
  for (std::size_t i = 0; i < witness_probes.size(); ++i) {
    const Valuation& v = witness_probes[i];
    if (!is_A_valuation(v, hom.target())) continue;
    if (!in_val(v, hom.target()).value) continue;
    Valuation pulled = pullback(hom, v);
    InValVerdict verdict = in_val(pulled, hom.source());
    if (!verdict.value) {
      // a "no" from the semigroup comparison is sound even when flagged
      // approximate: extra achievable values only lower the minimal level
      res.verdict = AdicVerdict::kNotAdic;
      res.witness_probe = static_cast<int>(i);
      return res;
    }
  }
  res.verdict = AdicVerdict::kUnknown;
  return res;
}

NormalizationResult relative_normalization(const PairOfRings& p, int degree_bound) {
  const RingPresentation& B = p.B();
  std::vector<Polynomial> var_gens;
  for (std::size_t i = 0; i < B.var_count(); ++i) var_gens.push_back(B.var(i));
  std::vector<Polynomial> candidates = generator_monomials(var_gens, B, degree_bound);

  std::vector<Polynomial> A_gens = p.A_gens();
  bool grew = true;
  while (grew) {
    grew = false;
    GroebnerBasis rel = B.relations();
    for (const auto& cand : candidates) {
      if (cand.is_constant()) continue;
      if (subalgebra_membership(cand, A_gens, rel).member) continue;
      IntegralRelation r = integral_element_test(cand, A_gens, B, degree_bound);
      if (r.found) {
        A_gens.push_back(cand);
        grew = true;
      }
    }
  }

  // prune: drop generators already inside the subalgebra of the others
  for (std::size_t i = 0; i < A_gens.size();) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < A_gens.size(); ++j)
      if (j != i) others.push_back(A_gens[j]);
    if (subalgebra_membership(A_gens[i], others, B.relations()).member)
      A_gens.erase(A_gens.begin() + static_cast<long>(i));
    else
      ++i;
  }
  return NormalizationResult{PairOfRings(B, std::move(A_gens)), true};
}

MonomialNormalizationResult relative_normalization(const MonomialPair& mp, int multiplier_bound,
                                                   int power_bound) {
  MonomialNormalization nor = monomial_normalization(mp, multiplier_bound, power_bound);
  MonomialPair sat{mp.rank, mp.M_gens, nor.nor_gens};
  MonomialPairConversion conv = monomial_pair_to_pair(sat, multiplier_bound * power_bound);
  return MonomialNormalizationResult{std::move(sat), std::move(conv.pair), nor.certified};
}

}  // namespace birat
