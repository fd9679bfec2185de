#include "birat/sheaf.hpp"

#include <map>

#include "birat/linalg.hpp"

namespace birat {

SheafSections sheaf_sections(const RationalDomain& d, int degree_bound) {
  LocalizedPair loc = to_pair(d);
  NormalizationResult nor = relative_normalization(loc.pair, degree_bound);
  return SheafSections{d, loc.pair.B(), nor.pair.A_gens(), nor.bounded};
}

namespace {

// Maps a section of B_{b_i} into the overlap ring B_{b_i b_j}:
// base variables go to themselves, t_i goes to (other denominator) * t.
Polynomial restrict_to_overlap(const Polynomial& section, const LocalizedPair& from,
                               const Polynomial& other_den, const LocalizedPair& overlap) {
  const ContextPtr& octx = overlap.pair.B().context();
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < from.pair.B().var_count(); ++i) {
    if (i == from.t_index) {
      images.push_back(overlap.pair.B().nf(other_den.lift_to(octx) *
                                           Polynomial::variable(octx, overlap.t_index)));
    } else {
      const std::string& name = from.pair.B().context()->name(i);
      int idx = octx->index_of(name);
      if (idx < 0) throw Error("overlap restriction: missing variable " + name);
      images.push_back(Polynomial::variable(octx, static_cast<std::size_t>(idx)));
    }
  }
  return overlap.pair.B().nf(section.substitute(images));
}

}  // namespace

EqualizerOutcome sheaf_equalizer_check(const Covering& c, const std::vector<Polynomial>& sections,
                                       int degree_bound) {
  if (sections.size() != c.domains.size())
    throw Error("sheaf_equalizer_check: one section per covering element required");
  EqualizerOutcome out;

  std::vector<LocalizedPair> locs;
  for (const auto& d : c.domains) locs.push_back(to_pair(d));

  // pairwise restriction agreement
  for (std::size_t i = 0; i < c.domains.size(); ++i) {
    for (std::size_t j = i + 1; j < c.domains.size(); ++j) {
      RationalDomain overlap_dom = intersect(c.domains[i], c.domains[j]);
      LocalizedPair overlap = to_pair(overlap_dom);
      Polynomial ri =
          restrict_to_overlap(sections[i], locs[i], c.domains[j].denominator(), overlap);
      Polynomial rj =
          restrict_to_overlap(sections[j], locs[j], c.domains[i].denominator(), overlap);
      Polynomial diff = overlap.pair.B().nf(ri - rj);
      if (!diff.is_zero()) {
        out.status = EqualizerOutcome::Status::kMismatch;
        out.mismatch_i = static_cast<int>(i);
        out.mismatch_j = static_cast<int>(j);
        out.mismatch_witness = diff;
        return out;
      }
    }
  }

  // glue: search s in B of bounded degree with s|_{V_i} = s_i for every i
  const RingPresentation& B = c.base.B();
  std::vector<Monomial> ansatz;
  {
    std::vector<int> e(B.var_count(), 0);
    while (true) {
      Monomial m{std::vector<int>(e.begin(), e.end())};
      Polynomial p = Polynomial::monomial(B.context(), m, 1);
      if (B.nf(p) == p) ansatz.push_back(m);
      std::size_t i = 0;
      while (i < B.var_count()) {
        int total = 0;
        for (std::size_t k = 0; k < B.var_count(); ++k) total += e[k];
        if (total < degree_bound) {
          ++e[i];
          break;
        }
        e[i] = 0;
        ++i;
      }
      if (i == B.var_count()) break;
    }
  }

  // columns: ansatz monomials mapped into each localized ring; rhs: s_i
  QMatrix A;
  QVector rhs;
  for (std::size_t i = 0; i < locs.size(); ++i) {
    const RingPresentation& L = locs[i].pair.B();
    std::vector<Polynomial> cols;
    for (const auto& m : ansatz)
      cols.push_back(L.nf(Polynomial::monomial(B.context(), m, 1).lift_to(L.context())));
    Polynomial target = L.nf(sections[i]);
    std::map<Monomial, std::size_t, MonomialLexLess> idx;
    for (const auto& p : cols)
      for (const auto& [m, cf] : p.terms())
        if (!idx.count(m)) idx.emplace(m, idx.size());
    for (const auto& [m, cf] : target.terms())
      if (!idx.count(m)) idx.emplace(m, idx.size());
    std::size_t row0 = A.size();
    for (std::size_t r = 0; r < idx.size(); ++r) A.emplace_back(ansatz.size(), Rational(0));
    rhs.resize(A.size(), Rational(0));
    for (std::size_t jcol = 0; jcol < cols.size(); ++jcol)
      for (const auto& [m, cf] : cols[jcol].terms()) A[row0 + idx.at(m)][jcol] = cf;
    for (const auto& [m, cf] : target.terms()) rhs[row0 + idx.at(m)] = cf;
  }

  auto sol = solve_linear(A, rhs);
  if (!sol) {
    out.status = EqualizerOutcome::Status::kNoBoundedGluing;
    return out;
  }
  Polynomial s = Polynomial::zero(B.context());
  for (std::size_t j = 0; j < ansatz.size(); ++j)
    if ((*sol)[j] != 0) s.add_term(ansatz[j], (*sol)[j]);
  s = B.nf(s);

  out.status = EqualizerOutcome::Status::kGlued;
  out.glued = s;
  NormalizationResult base_nor = relative_normalization(c.base, degree_bound);
  out.glued_in_O = s.is_constant() ||
                   subalgebra_membership(s, base_nor.pair.A_gens(), B.relations()).member;
  return out;
}

}  // namespace birat
