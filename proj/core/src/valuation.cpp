#include "birat/valuation.hpp"

#include <map>
#include <sstream>

#include "birat/linalg.hpp"

namespace birat {

// ---------------------------------------------------------------------------
// ValueVector

std::string ValueVector::to_string() const {
  if (zero_sym) return "ZERO";
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) out << ",";
    out << entries[i];
  }
  out << ")";
  return out.str();
}

int compare(const ValueVector& a, const ValueVector& b) {
  if (a.zero_sym && b.zero_sym) return 0;
  if (a.zero_sym) return 1;
  if (b.zero_sym) return -1;
  if (a.entries.size() != b.entries.size()) throw Error("value rank mismatch");
  for (std::size_t i = 0; i < a.entries.size(); ++i) {
    if (a.entries[i] != b.entries[i]) return a.entries[i] > b.entries[i] ? 1 : -1;
  }
  return 0;
}

int level(const ValueVector& v) {
  if (v.zero_sym) throw Error("level of the ZERO symbol");
  for (std::size_t i = 0; i < v.entries.size(); ++i)
    if (v.entries[i] != 0) return static_cast<int>(i) + 1;
  return v.rank() + 1;
}

const ValueVector& lex_min(const ValueVector& a, const ValueVector& b) {
  return compare(a, b) <= 0 ? a : b;
}

// ---------------------------------------------------------------------------
// Construction

namespace {

ValueVector mono_weight(const WeightData& w, const Monomial& m) {
  ValueVector acc = ValueVector::group_zero(w.rank);
  for (std::size_t i = 0; i < m.exps.size(); ++i)
    if (m.exps[i] != 0) acc = acc + w.weights[i].scaled(m.exps[i]);
  return acc;
}

// Relations must be empty or binomial with weight-balanced sides; the ring
// is then graded by the weights and Gauss evaluation on normal forms is
// well defined.
void check_weight_admissible(const RingPresentation& B, const WeightData& w) {
  if (w.weights.size() != B.var_count()) throw Error("weight valuation: one weight per variable");
  for (const auto& wt : w.weights) {
    if (wt.zero_sym) throw Error("weight valuation: weights must be finite");
    if (wt.rank() != w.rank) throw Error("weight valuation: rank mismatch");
  }
  for (const auto& rel : B.relations().generators()) {
    if (rel.term_count() != 2)
      throw Error("weight valuation requires binomial relations, got: " + rel.to_string());
    auto it = rel.terms().begin();
    const Monomial& m1 = it->first;
    const Monomial& m2 = std::next(it)->first;
    if (!(mono_weight(w, m1) == mono_weight(w, m2)))
      throw Error("weight valuation: relation " + rel.to_string() + " is not weight-balanced");
  }
}

}  // namespace

Valuation Valuation::trivial(const RingPresentation& B, const std::vector<Polynomial>& prime_gens) {
  std::vector<Polynomial> gens;
  for (const auto& g : prime_gens) {
    Polynomial n = B.nf(g);
    if (!n.is_zero()) gens.push_back(n);
  }
  GroebnerBasis gb = extend_basis(B.relations(), gens);
  if (gb.is_unit()) throw Error("trivial valuation: the ideal is not proper");
  TrivialData data{std::move(gens), std::move(gb)};
  return Valuation(std::make_shared<const RingPresentation>(B), Node(std::move(data)));
}

Valuation Valuation::weight(const RingPresentation& B, std::vector<ValueVector> weights) {
  WeightData data;
  data.rank = weights.empty() ? 0 : weights.front().rank();
  data.weights = std::move(weights);
  check_weight_admissible(B, data);
  return Valuation(std::make_shared<const RingPresentation>(B), Node(std::move(data)));
}

Valuation Valuation::composite(const RingPresentation& B, CompositeData data) {
  if (data.prime_gb.is_unit()) throw Error("composite valuation: improper prime");
  check_weight_admissible(*data.quotient, data.inner);
  if (data.residue_images.size() != B.var_count())
    throw Error("composite valuation: one residue image per variable");
  return Valuation(std::make_shared<const RingPresentation>(B), Node(std::move(data)));
}

Valuation Valuation::pullback_node(const RingPresentation& B, PullbackData data) {
  if (!data.hom || !data.inner) throw Error("pullback valuation: missing pieces");
  return Valuation(std::make_shared<const RingPresentation>(B), Node(std::move(data)));
}

int Valuation::rank() const {
  if (auto* w = std::get_if<WeightData>(&node_)) return w->rank;
  if (auto* c = std::get_if<CompositeData>(&node_)) return c->inner.rank;
  if (auto* p = std::get_if<PullbackData>(&node_)) return p->inner->rank();
  return 0;
}

// ---------------------------------------------------------------------------
// Evaluation

ValueVector evaluate(const Valuation& v, const Polynomial& f) {
  const int r = v.rank();
  if (const auto* t = std::get_if<TrivialData>(&v.node())) {
    return normal_form(f, t->prime_gb).is_zero() ? ValueVector::zero_symbol(0)
                                                 : ValueVector::group_zero(0);
  }
  if (const auto* w = std::get_if<WeightData>(&v.node())) {
    Polynomial p = v.ring().nf(f);
    if (p.is_zero()) return ValueVector::zero_symbol(r);
    bool first = true;
    ValueVector best = ValueVector::group_zero(r);
    for (const auto& [m, c] : p.terms()) {
      ValueVector wm = mono_weight(*w, m);
      if (first || compare(wm, best) < 0) best = wm;
      first = false;
    }
    return best;
  }
  if (const auto* c = std::get_if<CompositeData>(&v.node())) {
    if (normal_form(f, c->prime_gb).is_zero()) return ValueVector::zero_symbol(r);
    Polynomial residue = c->quotient->nf(f.substitute(c->residue_images));
    if (residue.is_zero()) return ValueVector::zero_symbol(r);
    bool first = true;
    ValueVector best = ValueVector::group_zero(r);
    for (const auto& [m, cf] : residue.terms()) {
      ValueVector wm = mono_weight(c->inner, m);
      if (first || compare(wm, best) < 0) best = wm;
      first = false;
    }
    return best;
  }
  const auto& pb = std::get<PullbackData>(v.node());
  ValueVector val = evaluate(*pb.inner, pb.hom->apply(f));
  if (!val.zero_sym && level(val) < pb.cutoff) return ValueVector::zero_symbol(r);
  return val;
}

bool is_A_valuation(const Valuation& v, const PairOfRings& p) {
  if (!same_context(v.ring().context(), p.B().context()))
    throw Error("is_A_valuation: valuation and pair live on different rings");
  for (const auto& a : p.A_gens()) {
    ValueVector val = evaluate(v, a);
    if (!val.zero_sym && !lex_nonnegative(val)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Filtered images (the linear backbone of tau and the bounded kernels)

namespace {

Polynomial filter_by_weight(const WeightData& w, const Polynomial& img, MonomialFilter filter,
                            int filter_level) {
  Polynomial kept(img.context());
  for (const auto& [m, c] : img.terms()) {
    ValueVector wm = mono_weight(w, m);
    bool keep = filter == MonomialFilter::kNonpositive
                    ? (wm.is_group_zero() || lex_negative(wm))
                    : level(wm) >= filter_level;
    if (keep) kept.add_term(m, c);
  }
  return kept;
}

}  // namespace

Polynomial filtered_image(const Valuation& v, const Polynomial& f, MonomialFilter filter,
                          int filter_level) {
  if (const auto* t = std::get_if<TrivialData>(&v.node())) {
    // every monomial has value 0; both filters keep everything
    return normal_form(f, t->prime_gb);
  }
  if (const auto* w = std::get_if<WeightData>(&v.node())) {
    return filter_by_weight(*w, v.ring().nf(f), filter, filter_level);
  }
  if (const auto* c = std::get_if<CompositeData>(&v.node())) {
    if (normal_form(f, c->prime_gb).is_zero()) return Polynomial::zero(c->quotient->context());
    Polynomial residue = c->quotient->nf(f.substitute(c->residue_images));
    return filter_by_weight(c->inner, residue, filter, filter_level);
  }
  const auto& pb = std::get<PullbackData>(v.node());
  int effective = filter == MonomialFilter::kLevelAtLeast ? std::max(filter_level, pb.cutoff)
                                                          : filter_level;
  return filtered_image(*pb.inner, pb.hom->apply(f), filter, effective);
}

// ---------------------------------------------------------------------------
// Kernels

namespace {

// Embeds p (polynomial over `small`) into `big`, variable i -> offset + i.
Polynomial embed(const Polynomial& p, const ContextPtr& big, std::size_t offset) {
  Polynomial r(big);
  for (const auto& [m, c] : p.terms()) {
    Monomial mm(big->size());
    for (std::size_t i = 0; i < m.exps.size(); ++i) mm.exps[offset + i] = m.exps[i];
    r.add_term(mm, c);
  }
  return r;
}

// phi^{-1}(K): target relations + K + graph ideal, target block eliminated.
std::vector<Polynomial> preimage_ideal(const PairHom& hom, const std::vector<Polynomial>& K) {
  const ContextPtr& src = hom.source().B().context();
  const ContextPtr& tgt = hom.target().B().context();
  std::vector<std::string> names;
  for (std::size_t i = 0; i < tgt->size(); ++i) names.push_back("_pb" + std::to_string(i + 1));
  for (const auto& n : src->names()) names.push_back(n);
  ContextPtr big = make_context(names);

  std::vector<Polynomial> ideal;
  for (const auto& g : hom.target().B().relations().generators()) ideal.push_back(embed(g, big, 0));
  for (const auto& g : K) ideal.push_back(embed(g, big, 0));
  for (std::size_t i = 0; i < src->size(); ++i) {
    Polynomial xi = Polynomial::variable(big, tgt->size() + i);
    ideal.push_back(xi - embed(hom.images()[i], big, 0));
  }
  GroebnerBasis gb = buchberger(ideal, MonomialOrder::block(static_cast<int>(tgt->size())));
  return eliminate_prefix(gb, tgt->size(), src);
}

// Standard monomials of B up to the given total degree.
std::vector<Polynomial> standard_monomials(const RingPresentation& B, int degree) {
  std::vector<Polynomial> out;
  std::size_t n = B.var_count();
  std::vector<int> e(n, 0);
  while (true) {
    Monomial mono{std::vector<int>(e.begin(), e.end())};
    Polynomial p = Polynomial::monomial(B.context(), mono, 1);
    if (B.nf(p) == p) out.push_back(p);
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

// Kernel of the linear map m -> filtered_image(v, m, filter, level) on the
// span of the standard monomials of degree <= degree_bound.
std::vector<Polynomial> filtered_linear_kernel(const Valuation& v, MonomialFilter filter,
                                               int filter_level, int degree_bound) {
  std::vector<Polynomial> basis = standard_monomials(v.ring(), degree_bound);
  std::vector<Polynomial> images;
  images.reserve(basis.size());
  for (const auto& m : basis) images.push_back(filtered_image(v, m, filter, filter_level));

  std::map<Monomial, std::size_t, MonomialLexLess> idx;
  for (const auto& img : images)
    for (const auto& [m, c] : img.terms())
      if (!idx.count(m)) idx.emplace(m, idx.size());

  QMatrix A(idx.size(), QVector(basis.size(), Rational(0)));
  for (std::size_t j = 0; j < images.size(); ++j)
    for (const auto& [m, c] : images[j].terms()) A[idx.at(m)][j] = c;

  std::vector<Polynomial> out;
  for (const auto& combo : kernel_basis(A)) {
    Polynomial p = Polynomial::zero(v.ring().context());
    for (std::size_t j = 0; j < basis.size(); ++j)
      if (combo[j] != 0) p = p + basis[j].scaled(combo[j]);
    if (!p.is_zero()) out.push_back(v.ring().nf(p));
  }
  return out;
}

}  // namespace

KernelResult kernel(const Valuation& v, int degree_bound) {
  if (const auto* t = std::get_if<TrivialData>(&v.node()))
    return KernelResult{t->prime_gens, t->prime_gb, true};
  if (std::get_if<WeightData>(&v.node()))
    return KernelResult{{}, v.ring().relations(), true};
  if (const auto* c = std::get_if<CompositeData>(&v.node()))
    return KernelResult{c->prime_gens, c->prime_gb, true};

  const auto& pb = std::get<PullbackData>(v.node());
  KernelResult inner = kernel(*pb.inner, degree_bound);
  std::vector<Polynomial> gens = preimage_ideal(*pb.hom, inner.gens);
  bool exact = inner.exact;
  if (pb.cutoff > 1) {
    // the cutoff enlarges the kernel by everything whose value dies;
    // that set is an ideal and is cut out by a linear condition on the
    // canonical image, so a degree-bounded basis is available
    for (auto& g : filtered_linear_kernel(v, MonomialFilter::kLevelAtLeast, pb.cutoff, degree_bound))
      gens.push_back(std::move(g));
    exact = false;
  }
  // normal-form the generators and drop zeros
  std::vector<Polynomial> cleaned;
  for (const auto& g : gens) {
    Polynomial n = v.ring().nf(g);
    if (!n.is_zero()) cleaned.push_back(n);
  }
  GroebnerBasis gb = extend_basis(v.ring().relations(), cleaned);
  return KernelResult{std::move(cleaned), std::move(gb), exact};
}

// ---------------------------------------------------------------------------
// Boundedness structure

std::vector<ValueVector> semigroup_generators(const Valuation& v) {
  std::vector<ValueVector> gens;
  if (std::get_if<TrivialData>(&v.node())) return gens;
  if (const auto* w = std::get_if<WeightData>(&v.node())) return w->weights;
  if (const auto* c = std::get_if<CompositeData>(&v.node())) return c->inner.weights;
  const auto& pb = std::get<PullbackData>(v.node());
  for (std::size_t i = 0; i < v.ring().var_count(); ++i) {
    ValueVector val = evaluate(v, v.ring().var(i));
    if (!val.zero_sym) gens.push_back(std::move(val));
  }
  return gens;
}

int cgamma_level(const Valuation& v) {
  std::vector<ValueVector> gens = semigroup_generators(v);
  std::vector<std::vector<long long>> raw;
  for (const auto& g : gens) raw.push_back(g.entries);
  int r = v.rank();
  for (int j = 1; j <= r; ++j)
    if (cone_has_negative_at_level(raw, j)) return j;
  return r + 1;
}

InValVerdict in_val(const Valuation& v, const PairOfRings& p) {
  if (!is_A_valuation(v, p)) throw Error("in_val: not an A-valuation on this pair");
  std::vector<ValueVector> gens = semigroup_generators(v);
  int r = v.rank();
  int jmin = r + 1;
  for (const auto& g : gens)
    if (!g.is_group_zero()) jmin = std::min(jmin, level(g));
  int jstar = cgamma_level(v);
  return InValVerdict{jstar == jmin, !v.is_pullback()};
}

// ---------------------------------------------------------------------------
// Primary specialization

namespace {

Valuation specialize_weightlike(const RingPresentation& B,
                                const std::vector<Polynomial>& base_prime,
                                const RingPresentation& carrier,
                                const std::vector<Polynomial>& residue_images,
                                const std::vector<Polynomial>& carrier_lifts,
                                const WeightData& w, int j) {
  const int r = w.rank;
  std::vector<std::size_t> killed, surviving;
  for (std::size_t i = 0; i < carrier.var_count(); ++i) {
    const ValueVector& wt = w.weights[i];
    int lv = wt.is_group_zero() ? r + 1 : level(wt);
    (lv < j ? killed : surviving).push_back(i);
  }

  std::vector<Polynomial> prime = base_prime;
  for (std::size_t i : killed) prime.push_back(B.nf(carrier_lifts[i]));

  const int new_rank = r - j + 1;
  // surviving weights have level >= j, so they stay nonzero after the
  // projection exactly when they were nonzero before
  bool any_nonzero_survivor = false;
  for (std::size_t i : surviving)
    if (!w.weights[i].is_group_zero()) any_nonzero_survivor = true;

  if (j == r + 1 || surviving.empty() || !any_nonzero_survivor)
    return Valuation::trivial(B, prime);

  // quotient of the carrier by the killed variables
  std::vector<std::string> names;
  for (std::size_t i : surviving) names.push_back(carrier.context()->name(i));
  ContextPtr qctx = make_context(names);
  std::vector<Polynomial> subst;  // carrier variable -> quotient image
  {
    std::size_t pos = 0;
    for (std::size_t i = 0; i < carrier.var_count(); ++i) {
      bool is_killed = std::find(killed.begin(), killed.end(), i) != killed.end();
      if (is_killed) {
        subst.push_back(Polynomial::zero(qctx));
      } else {
        subst.push_back(Polynomial::variable(qctx, pos));
        ++pos;
      }
    }
  }
  std::vector<Polynomial> qrels;
  for (const auto& rel : carrier.relations().generators()) {
    Polynomial s = rel.substitute(subst);
    if (!s.is_zero()) qrels.push_back(s);
  }
  RingPresentation quotient = RingPresentation::quotient(qctx, qrels);

  WeightData inner;
  inner.rank = new_rank;
  for (std::size_t i : surviving) {
    std::vector<long long> e(w.weights[i].entries.begin() + (j - 1), w.weights[i].entries.end());
    inner.weights.push_back(ValueVector::of(std::move(e)));
  }

  GroebnerBasis prime_gb = extend_basis(B.relations(), prime);
  if (prime_gb.is_unit()) throw Error("primary specialization produced an improper prime");
  CompositeData data{prime, std::move(prime_gb),
                     std::make_shared<const RingPresentation>(quotient),
                     {}, {}, std::move(inner)};
  // residue map B -> quotient: old residue images pushed through subst
  for (const auto& img : residue_images)
    data.residue_images.push_back(quotient.nf(img.substitute(subst)));
  for (std::size_t i : surviving) data.quotient_lifts.push_back(B.nf(carrier_lifts[i]));
  return Valuation::composite(B, std::move(data));
}

}  // namespace

Valuation primary_specialize(const Valuation& v, int j, int degree_bound) {
  const int r = v.rank();
  if (j < 1 || j > r + 1) throw Error("primary_specialize: level out of range");
  int jstar = cgamma_level(v);
  if (j > jstar)
    throw Error("primary_specialize: level " + std::to_string(j) +
                " does not contain the convex subgroup generated by the nonpositive values (max " +
                std::to_string(jstar) + ")");
  if (j == 1) return v;

  if (std::get_if<TrivialData>(&v.node())) return v;

  if (const auto* w = std::get_if<WeightData>(&v.node())) {
    const RingPresentation& B = v.ring();
    std::vector<Polynomial> ids;  // carrier = B itself, residue = identity
    std::vector<Polynomial> lifts;
    for (std::size_t i = 0; i < B.var_count(); ++i) {
      ids.push_back(B.var(i));
      lifts.push_back(B.var(i));
    }
    // no killed variables at all: just project the ranks
    bool none_killed = true;
    for (const auto& wt : w->weights)
      if (!wt.is_group_zero() && level(wt) < j) none_killed = false;
    if (none_killed && j <= r) {
      WeightData projected;
      projected.rank = r - j + 1;
      for (const auto& wt : w->weights) {
        std::vector<long long> e(wt.entries.begin() + (j - 1), wt.entries.end());
        projected.weights.push_back(ValueVector::of(std::move(e)));
      }
      return Valuation::weight(B, std::move(projected.weights));
    }
    return specialize_weightlike(B, {}, B, ids, lifts, *w, j);
  }

  if (const auto* c = std::get_if<CompositeData>(&v.node())) {
    return specialize_weightlike(v.ring(), c->prime_gens, *c->quotient, c->residue_images,
                                 c->quotient_lifts, c->inner, j);
  }

  const auto& pb = std::get<PullbackData>(v.node());
  int cutoff = std::max(pb.cutoff, j);
  if (cutoff >= r + 1) {
    // everything nonzero dies: materialize the trivial valuation at the
    // enlarged kernel (degree-bounded computation, see kernel())
    PullbackData full = pb;
    full.cutoff = r + 1;
    Valuation lazy = Valuation::pullback_node(v.ring(), std::move(full));
    KernelResult k = kernel(lazy, degree_bound);
    return Valuation::trivial(v.ring(), k.gens);
  }
  PullbackData bumped = pb;
  bumped.cutoff = cutoff;
  return Valuation::pullback_node(v.ring(), std::move(bumped));
}

std::vector<Valuation> primary_specializations(const Valuation& v, const PairOfRings& p,
                                               int degree_bound) {
  if (!is_A_valuation(v, p)) throw Error("primary_specializations: not an A-valuation");
  int jstar = cgamma_level(v);
  int top = std::min(jstar, v.rank() + 1);
  std::vector<Polynomial> witnesses = default_witnesses(p);
  std::vector<Valuation> out;
  for (int j = 1; j <= top; ++j) {
    Valuation s = primary_specialize(v, j, degree_bound);
    if (!out.empty() && same_valuation_on(out.back(), s, witnesses)) continue;
    out.push_back(std::move(s));
  }
  return out;
}

Valuation retract(const Valuation& v, const PairOfRings& p, int degree_bound) {
  if (!is_A_valuation(v, p)) throw Error("retract: not an A-valuation");
  int jstar = cgamma_level(v);
  return primary_specialize(v, std::min(jstar, v.rank() + 1), degree_bound);
}

Valuation pullback(const PairHom& hom, const Valuation& v) {
  if (!same_context(v.ring().context(), hom.target().B().context()))
    throw Error("pullback: valuation does not live on the target ring");
  PullbackData data;
  data.hom = std::make_shared<const PairHom>(hom);
  data.inner = std::make_shared<const Valuation>(v);
  data.cutoff = 1;
  return Valuation::pullback_node(hom.source().B(), std::move(data));
}

Valuation bir_map(const PairHom& hom, const Valuation& v, int degree_bound) {
  return retract(pullback(hom, v), hom.source(), degree_bound);
}

bool semi_val_membership(const Valuation& v, const Polynomial& num, const Polynomial& den) {
  ValueVector dv = evaluate(v, den);
  if (dv.zero_sym) throw Error("semi_val_membership: denominator lies in the kernel");
  ValueVector nv = evaluate(v, num);
  if (nv.zero_sym) return true;
  return compare(nv, dv) >= 0;
}

bool same_valuation_on(const Valuation& a, const Valuation& b,
                       const std::vector<Polynomial>& witnesses) {
  std::vector<ValueVector> va, vb;
  va.reserve(witnesses.size());
  vb.reserve(witnesses.size());
  for (const auto& f : witnesses) {
    va.push_back(evaluate(a, f));
    vb.push_back(evaluate(b, f));
  }
  for (std::size_t i = 0; i < witnesses.size(); ++i)
    if (va[i].zero_sym != vb[i].zero_sym) return false;
  for (std::size_t i = 0; i < witnesses.size(); ++i)
    for (std::size_t j = i + 1; j < witnesses.size(); ++j) {
      if (va[i].zero_sym || va[j].zero_sym) continue;
      int ca = compare(va[i], va[j]);
      int cb = compare(vb[i], vb[j]);
      if ((ca < 0) != (cb < 0) || (ca > 0) != (cb > 0)) return false;
    }
  // also pin the sign against the group zero
  for (std::size_t i = 0; i < witnesses.size(); ++i) {
    if (va[i].zero_sym) continue;
    bool pa = lex_positive(va[i]) && !va[i].is_group_zero();
    bool pb = lex_positive(vb[i]) && !vb[i].is_group_zero();
    bool za = va[i].is_group_zero(), zb = vb[i].is_group_zero();
    if (pa != pb || za != zb) return false;
  }
  return true;
}

std::vector<Polynomial> default_witnesses(const PairOfRings& p) {
  std::vector<Polynomial> out;
  const RingPresentation& B = p.B();
  for (std::size_t i = 0; i < B.var_count(); ++i) out.push_back(B.var(i));
  for (std::size_t i = 0; i < B.var_count(); ++i)
    for (std::size_t j = i; j < B.var_count(); ++j) out.push_back(B.nf(B.var(i) * B.var(j)));
  for (const auto& a : p.A_gens()) out.push_back(a);
  // drop zero entries (possible in quotient rings)
  std::vector<Polynomial> cleaned;
  for (auto& f : out)
    if (!f.is_zero()) cleaned.push_back(std::move(f));
  return cleaned;
}

}  // namespace birat
