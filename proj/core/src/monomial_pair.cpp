#include "birat/monomial_pair.hpp"

#include <set>

#include "birat/linalg.hpp"

namespace birat {

namespace {

// Rational relaxation: does the cone of gens[from..] contain target?
bool cone_contains(const LatticeVector& target, const std::vector<LatticeVector>& gens,
                   std::size_t from) {
  std::size_t n = gens.size() - from;
  std::size_t r = target.size();
  if (n == 0) {
    for (long long t : target)
      if (t != 0) return false;
    return true;
  }
  QMatrix A;
  QVector b;
  for (std::size_t i = 0; i < n; ++i) {
    QVector row(n, Rational(0));
    row[i] = -1;
    A.push_back(std::move(row));
    b.push_back(Rational(0));
  }
  for (std::size_t k = 0; k < r; ++k) {
    QVector row(n), neg(n);
    for (std::size_t i = 0; i < n; ++i) {
      row[i] = Rational(static_cast<long>(gens[from + i][k]));
      neg[i] = -row[i];
    }
    A.push_back(row);
    b.push_back(Rational(static_cast<long>(target[k])));
    A.push_back(neg);
    b.push_back(Rational(static_cast<long>(-target[k])));
  }
  return fm_feasible(std::move(A), std::move(b));
}

bool search(LatticeVector target, const std::vector<LatticeVector>& gens, std::size_t idx,
            int budget, std::vector<int>& coeffs) {
  bool zero = true;
  for (long long t : target)
    if (t != 0) {
      zero = false;
      break;
    }
  if (zero) {
    for (std::size_t j = idx; j < gens.size(); ++j) coeffs[j] = 0;
    return true;
  }
  if (idx == gens.size() || budget <= 0) return false;
  if (!cone_contains(target, gens, idx)) return false;
  LatticeVector t = target;
  for (int c = 0; c <= budget; ++c) {
    coeffs[idx] = c;
    if (search(t, gens, idx + 1, budget - c, coeffs)) return true;
    for (std::size_t k = 0; k < t.size(); ++k) t[k] -= gens[idx][k];
  }
  return false;
}

std::optional<std::vector<int>> semigroup_witness(const LatticeVector& target,
                                                  const std::vector<LatticeVector>& gens,
                                                  int multiplier_bound) {
  std::vector<int> coeffs(gens.size(), 0);
  LatticeVector t = target;
  if (search(std::move(t), gens, 0, multiplier_bound, coeffs)) return coeffs;
  return std::nullopt;
}

}  // namespace

bool in_semigroup(const LatticeVector& target, const std::vector<LatticeVector>& gens,
                  int multiplier_bound) {
  return semigroup_witness(target, gens, multiplier_bound).has_value();
}

PairDiagnostics validate_monomial_pair(const MonomialPair& mp, int multiplier_bound) {
  PairDiagnostics d;
  for (const auto& g : mp.M_gens)
    if (static_cast<int>(g.size()) != mp.rank) {
      d.ok = false;
      d.notes.push_back("M generator of wrong rank");
    }
  for (const auto& g : mp.N_gens) {
    if (static_cast<int>(g.size()) != mp.rank) {
      d.ok = false;
      d.notes.push_back("N generator of wrong rank");
      continue;
    }
    if (!in_semigroup(g, mp.M_gens, multiplier_bound)) {
      d.ok = false;
      d.notes.push_back("N generator is not a natural combination of M generators");
    }
  }
  return d;
}

MonomialPairConversion monomial_pair_to_pair(const MonomialPair& mp, int multiplier_bound) {
  std::size_t s = mp.M_gens.size();
  std::size_t n = static_cast<std::size_t>(mp.rank);

  // t_1..t_n, t_inv, then y_1..y_s; eliminate the t-block.
  std::vector<std::string> names;
  for (std::size_t k = 0; k < n; ++k) names.push_back("_t" + std::to_string(k + 1));
  names.push_back("_tinv");
  for (std::size_t i = 0; i < s; ++i) names.push_back("u" + std::to_string(i + 1));
  ContextPtr big = make_context(names);
  std::size_t y0 = n + 1;

  auto t_power = [&](const LatticeVector& m, bool positive_part) {
    Monomial mono(big->size());
    for (std::size_t k = 0; k < n; ++k) {
      long long e = m[k];
      if (positive_part && e > 0) mono.exps[k] = static_cast<int>(e);
      if (!positive_part && e < 0) mono.exps[k] = static_cast<int>(-e);
    }
    return Polynomial::monomial(big, mono, 1);
  };

  std::vector<Polynomial> ideal;
  for (std::size_t i = 0; i < s; ++i) {
    Polynomial yi = Polynomial::variable(big, y0 + i);
    ideal.push_back(yi * t_power(mp.M_gens[i], false) - t_power(mp.M_gens[i], true));
  }
  {
    Monomial all(big->size());
    for (std::size_t k = 0; k <= n; ++k) all.exps[k] = 1;
    ideal.push_back(Polynomial::monomial(big, all, 1) - Polynomial::constant(big, 1));
  }
  GroebnerBasis gb = buchberger(ideal, MonomialOrder::block(static_cast<int>(n + 1)));

  std::vector<std::string> y_names(names.begin() + static_cast<long>(y0), names.end());
  ContextPtr y_ctx = make_context(y_names);
  std::vector<Polynomial> toric = eliminate_prefix(gb, y0, y_ctx);
  RingPresentation B = RingPresentation::quotient(y_ctx, toric);

  std::vector<Polynomial> A_gens;
  std::vector<Polynomial> N_monomials;
  for (const auto& ng : mp.N_gens) {
    auto w = semigroup_witness(ng, mp.M_gens, multiplier_bound);
    if (!w) throw Error("monomial pair: N generator outside the M semigroup");
    Monomial mono(y_ctx->size());
    for (std::size_t i = 0; i < s; ++i) mono.exps[i] = (*w)[i];
    Polynomial p = B.nf(Polynomial::monomial(y_ctx, mono, 1));
    A_gens.push_back(p);
    N_monomials.push_back(p);
  }
  return MonomialPairConversion{PairOfRings(std::move(B), std::move(A_gens)),
                                std::move(N_monomials)};
}

MonomialNormalization monomial_normalization(const MonomialPair& mp, int multiplier_bound,
                                             int power_bound) {
  // Every M-semigroup element reachable inside the step box.
  std::set<LatticeVector> reachable;
  std::set<LatticeVector> frontier;
  LatticeVector zero(static_cast<std::size_t>(mp.rank), 0);
  frontier.insert(zero);
  for (int step = 0; step < multiplier_bound; ++step) {
    std::set<LatticeVector> next;
    for (const auto& v : frontier) {
      for (const auto& g : mp.M_gens) {
        LatticeVector w = v;
        for (std::size_t k = 0; k < w.size(); ++k) w[k] += g[k];
        if (!reachable.count(w) && w != zero) {
          reachable.insert(w);
          next.insert(w);
        }
      }
    }
    frontier = std::move(next);
    if (frontier.empty()) break;
  }

  int inner_bound = multiplier_bound * power_bound;
  auto saturated = [&](const LatticeVector& m) {
    for (int k = 1; k <= power_bound; ++k) {
      LatticeVector km(m.size());
      for (std::size_t j = 0; j < m.size(); ++j) km[j] = static_cast<long long>(k) * m[j];
      if (in_semigroup(km, mp.N_gens, inner_bound)) return true;
    }
    return false;
  };

  std::vector<LatticeVector> sat_elements;
  for (const auto& m : reachable)
    if (saturated(m)) sat_elements.push_back(m);

  // Greedy generating set, smallest elements first.
  std::sort(sat_elements.begin(), sat_elements.end(), [](const LatticeVector& a, const LatticeVector& b) {
    long long na = 0, nb = 0;
    for (long long x : a) na += x < 0 ? -x : x;
    for (long long x : b) nb += x < 0 ? -x : x;
    if (na != nb) return na < nb;
    return a < b;
  });
  MonomialNormalization out;
  for (const auto& m : sat_elements) {
    if (!in_semigroup(m, out.nor_gens, inner_bound)) out.nor_gens.push_back(m);
  }

  // Certificate: inside the box, the generated semigroup matches the
  // saturation predicate exactly.
  out.certified = true;
  for (const auto& m : reachable) {
    bool in_nor = in_semigroup(m, out.nor_gens, inner_bound);
    if (in_nor != saturated(m)) {
      out.certified = false;
      break;
    }
  }
  return out;
}

}  // namespace birat
