#include "birat/blowup.hpp"

#include <map>

#include "birat/linalg.hpp"

namespace birat {

namespace {

// Monomials in `gens` of total degree <= bound, in normal form, deduped.
std::vector<Polynomial> coefficient_monomials(const std::vector<Polynomial>& gens,
                                              const RingPresentation& B, int bound) {
  std::vector<Polynomial> out = {B.one()};
  std::vector<Polynomial> layer = {B.one()};
  for (int d = 1; d <= bound; ++d) {
    std::vector<Polynomial> next;
    for (const auto& p : layer)
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
    layer = std::move(next);
    if (layer.empty()) break;
  }
  return out;
}

// Solves target = sum_k lambda_k mu_k * scale for mu_k in the coefficient
// monomials; used for A-module membership questions.
std::optional<Polynomial> module_coefficient(const Polynomial& target, const Polynomial& scale,
                                             const std::vector<Polynomial>& A_monomials,
                                             const RingPresentation& B) {
  std::vector<Polynomial> cols;
  for (const auto& mu : A_monomials) cols.push_back(B.nf(mu * scale));
  std::map<Monomial, std::size_t, MonomialLexLess> idx;
  for (const auto& p : cols)
    for (const auto& [m, c] : p.terms())
      if (!idx.count(m)) idx.emplace(m, idx.size());
  Polynomial t = B.nf(target);
  for (const auto& [m, c] : t.terms())
    if (!idx.count(m)) idx.emplace(m, idx.size());
  QMatrix A(idx.size(), QVector(cols.size(), Rational(0)));
  QVector b(idx.size(), Rational(0));
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (const auto& [m, c] : cols[j].terms()) A[idx.at(m)][j] = c;
  for (const auto& [m, c] : t.terms()) b[idx.at(m)] = c;
  auto sol = solve_linear(A, b);
  if (!sol) return std::nullopt;
  Polynomial coeff = Polynomial::zero(B.context());
  for (std::size_t j = 0; j < A_monomials.size(); ++j)
    if ((*sol)[j] != 0) coeff = coeff + A_monomials[j].scaled((*sol)[j]);
  return B.nf(coeff);
}

}  // namespace

ModuleE::ModuleE(PairOfRings pair, std::vector<Polynomial> gens, bool check, int degree_bound)
    : pair_(std::move(pair)) {
  const RingPresentation& B = pair_.B();
  for (const auto& g : gens) {
    Polynomial n = B.nf(g);
    if (n.is_zero()) continue;
    bool dup = false;
    for (const auto& have : gens_)
      if (have == n) {
        dup = true;
        break;
      }
    if (!dup) gens_.push_back(std::move(n));
  }
  if (!check) return;
  if (gens_.empty()) throw Error("module: no generators");
  if (!is_unit_ideal(gens_, B.relations()))
    throw Error("module: generators do not span the unit ideal (charts would not cover)");
  bool has_one = false;
  for (const auto& g : gens_)
    if (g.is_one()) has_one = true;
  if (!has_one) {
    // bounded search for an A-combination sum a_i b_i = 1
    std::vector<Polynomial> A_monomials =
        coefficient_monomials(pair_.A_gens(), B, degree_bound);
    std::vector<Polynomial> cols;
    for (const auto& mu : A_monomials)
      for (const auto& g : gens_) cols.push_back(B.nf(mu * g));
    std::map<Monomial, std::size_t, MonomialLexLess> idx;
    for (const auto& p : cols)
      for (const auto& [m, c] : p.terms())
        if (!idx.count(m)) idx.emplace(m, idx.size());
    Monomial one_m(B.var_count());
    if (!idx.count(one_m)) idx.emplace(one_m, idx.size());
    QMatrix A(idx.size(), QVector(cols.size(), Rational(0)));
    QVector b(idx.size(), Rational(0));
    for (std::size_t j = 0; j < cols.size(); ++j)
      for (const auto& [m, c] : cols[j].terms()) A[idx.at(m)][j] = c;
    b[idx.at(one_m)] = 1;
    if (!solve_linear(A, b))
      throw Error("module: 1 is not a detected A-combination of the generators");
  }
}

ModuleE power(const ModuleE& E, int d) {
  if (d < 0) throw Error("power: negative degree");
  const RingPresentation& B = E.pair().B();
  if (d == 0) return ModuleE(E.pair(), {B.one()}, false);
  std::vector<Polynomial> current = {B.one()};
  for (int k = 0; k < d; ++k) {
    std::vector<Polynomial> next;
    for (const auto& p : current)
      for (const auto& g : E.gens()) {
        Polynomial q = B.nf(p * g);
        bool seen = false;
        for (const auto& have : next)
          if (have == q) {
            seen = true;
            break;
          }
        if (!seen && !q.is_zero()) next.push_back(q);
      }
    current = std::move(next);
  }
  return ModuleE(E.pair(), std::move(current), false);
}

std::vector<Chart> charts(const ModuleE& E) {
  std::vector<Chart> out;
  const PairOfRings& base = E.pair();
  for (std::size_t i = 0; i < E.gens().size(); ++i) {
    const Polynomial& b = E.gens()[i];
    if (is_nilpotent(base.B(), b)) continue;  // empty locus, no chart
    RationalDomain dom(base, E.gens(), b);
    out.push_back(Chart{static_cast<int>(i), b, to_pair(dom), std::move(dom)});
  }
  return out;
}

ModuleE inverse_image_module(const PairHom& h, const ModuleE& E) {
  if (!same_context(E.pair().B().context(), h.source().B().context()))
    throw Error("inverse_image_module: module does not live on the source pair");
  std::vector<Polynomial> images;
  for (const auto& g : E.gens()) images.push_back(h.apply(g));
  return ModuleE(h.target(), std::move(images), false);
}

bool is_invertible_on_chart(const ModuleE& E, const Chart& c) {
  const RingPresentation& L = c.loc.pair.B();
  const ContextPtr& ctx = L.context();
  Polynomial t = Polynomial::variable(ctx, c.loc.t_index);
  for (const auto& b : E.gens()) {
    Polynomial quotient = L.nf(b.lift_to(ctx) * t);
    if (!subalgebra_membership(quotient, c.loc.pair.A_gens(), L.relations()).member) return false;
  }
  return true;
}

FactorizationResult universal_factorization(const PairHom& h, const ModuleE& E,
                                            int degree_bound) {
  FactorizationResult res;
  if (!same_context(E.pair().B().context(), h.source().B().context()))
    throw Error("universal_factorization: module and hom disagree on the source");
  const PairOfRings& target = h.target();
  const RingPresentation& Bp = target.B();
  std::vector<Polynomial> s;
  for (const auto& g : E.gens()) s.push_back(h.apply(g));
  std::vector<Polynomial> A_monomials = coefficient_monomials(target.A_gens(), Bp, degree_bound);

  std::vector<Polynomial> var_gens;
  for (std::size_t k = 0; k < Bp.var_count(); ++k) var_gens.push_back(Bp.var(k));
  std::vector<Polynomial> B_monomials = coefficient_monomials(var_gens, Bp, degree_bound);

  std::vector<Chart> ch = charts(E);
  for (const Chart& c : ch) {
    std::size_t i = static_cast<std::size_t>(c.index);
    // the image of b_i must be a unit in B' for Y' -> Y to land in the chart
    auto inverse = module_coefficient(Bp.one(), s[i], B_monomials, Bp);
    if (!inverse) continue;
    // principality: every s_j = s_i * (element of A')
    bool principal = true;
    for (std::size_t j = 0; j < s.size(); ++j) {
      if (j == i) continue;
      if (!module_coefficient(s[j], s[i], A_monomials, Bp)) {
        principal = false;
        break;
      }
    }
    if (!principal) continue;

    // chart hom: base variables through h, the inverse variable to 1/s_i
    std::vector<Polynomial> images;
    const ContextPtr& cctx = c.loc.pair.B().context();
    for (std::size_t k = 0; k < cctx->size(); ++k) {
      if (k == c.loc.t_index) {
        images.push_back(*inverse);
      } else {
        const std::string& name = cctx->name(k);
        int src_idx = h.source().B().context()->index_of(name);
        if (src_idx < 0) throw Error("universal_factorization: unexpected chart variable");
        images.push_back(h.images()[static_cast<std::size_t>(src_idx)]);
      }
    }
    PairHom psi(c.loc.pair, target, std::move(images));
    if (!psi.validate().ok) continue;
    // the factorization must reproduce h through the chart inclusion
    PairHom roundtrip = compose(psi, c.loc.inclusion);
    if (!(roundtrip == h)) continue;
    res.factors.push_back(ChartFactor{c.index, std::move(psi)});
  }
  if (res.factors.empty()) {
    res.ok = false;
    res.error = "not invertible: the inverse image module is principal on no chart";
  } else {
    res.ok = true;
  }
  return res;
}

ModuleE compose_modules(const ModuleE& E1, const ModuleE& E2) {
  if (!same_context(E1.pair().B().context(), E2.pair().B().context()))
    throw Error("compose_modules: different pairs");
  const RingPresentation& B = E1.pair().B();
  std::vector<Polynomial> prods;
  for (const auto& a : E1.gens())
    for (const auto& b : E2.gens()) prods.push_back(B.nf(a * b));
  return ModuleE(E1.pair(), std::move(prods), false);
}

NorBlowupReport nor_blowup_commutes(const PairOfRings& p, const ModuleE& E, int degree_bound) {
  NorBlowupReport rep;
  NormalizationResult nor = relative_normalization(p, degree_bound);
  ModuleE E_nor(nor.pair, E.gens(), false);

  std::vector<Chart> side1 = charts(E);       // blow up the raw pair
  std::vector<Chart> side2 = charts(E_nor);   // blow up the normalized pair
  if (side1.size() != side2.size()) {
    rep.agree = false;
    rep.detail = "chart counts differ";
    return rep;
  }
  for (std::size_t i = 0; i < side1.size(); ++i) {
    // blow up then normalize
    NormalizationResult n1 = relative_normalization(side1[i].loc.pair, degree_bound);
    const std::vector<Polynomial>& gens1 = n1.pair.A_gens();
    const std::vector<Polynomial>& gens2 = side2[i].loc.pair.A_gens();
    const GroebnerBasis& rels = side1[i].loc.pair.B().relations();
    if (!same_subalgebra(gens1, gens2, rels)) {
      rep.agree = false;
      rep.chart = static_cast<int>(i);
      rep.detail = "chart subalgebras differ";
      return rep;
    }
  }
  return rep;
}

NorBlowupReport nor_blowup_commutes(const MonomialPair& mp,
                                    const std::vector<LatticeVector>& E_exponents,
                                    int multiplier_bound, int power_bound) {
  NorBlowupReport rep;
  auto chart_of = [&](const MonomialPair& base, std::size_t i) {
    MonomialPair chart;
    chart.rank = base.rank;
    chart.M_gens = base.M_gens;
    LatticeVector neg = E_exponents[i];
    for (auto& e : neg) e = -e;
    chart.M_gens.push_back(neg);
    chart.N_gens = base.N_gens;
    for (std::size_t j = 0; j < E_exponents.size(); ++j) {
      if (j == i) continue;
      LatticeVector diff(E_exponents[j].size());
      for (std::size_t k = 0; k < diff.size(); ++k)
        diff[k] = E_exponents[j][k] - E_exponents[i][k];
      chart.N_gens.push_back(diff);
    }
    return chart;
  };

  MonomialNormalization base_nor = monomial_normalization(mp, multiplier_bound, power_bound);
  MonomialPair normalized{mp.rank, mp.M_gens, base_nor.nor_gens};

  int bound = multiplier_bound * power_bound;
  for (std::size_t i = 0; i < E_exponents.size(); ++i) {
    // side 1: chart of the raw pair, then saturate
    MonomialNormalization n1 =
        monomial_normalization(chart_of(mp, i), multiplier_bound, power_bound);
    // side 2: chart of the saturated pair
    MonomialPair side2 = chart_of(normalized, i);
    // mutual semigroup membership of the generator lists
    for (const auto& g : n1.nor_gens)
      if (!in_semigroup(g, side2.N_gens, bound)) {
        rep.agree = false;
        rep.chart = static_cast<int>(i);
        rep.detail = "saturated chart generator missing on the normalize-first side";
        return rep;
      }
    for (const auto& g : side2.N_gens)
      if (!in_semigroup(g, n1.nor_gens, bound)) {
        rep.agree = false;
        rep.chart = static_cast<int>(i);
        rep.detail = "normalize-first chart generator missing on the saturate-after side";
        return rep;
      }
  }
  return rep;
}

}  // namespace birat
