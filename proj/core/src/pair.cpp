#include "birat/pair.hpp"

namespace birat {

PairOfRings::PairOfRings(RingPresentation B, std::vector<Polynomial> A_gens)
    : B_(std::move(B)) {
  for (auto& g : A_gens) {
    Polynomial n = B_.nf(g);
    if (n.is_zero() || n.is_constant()) continue;
    bool dup = false;
    for (const auto& have : A_gens_)
      if (have == n) {
        dup = true;
        break;
      }
    if (!dup) A_gens_.push_back(std::move(n));
  }
}

PairOfRings PairOfRings::full(RingPresentation B) {
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < B.var_count(); ++i) gens.push_back(B.var(i));
  return PairOfRings(std::move(B), std::move(gens));
}

GroebnerBasis PairOfRings::A_relations(const std::vector<std::string>& tag_names) const {
  return subalgebra_relations(A_gens_, B_.relations(), tag_names);
}

PairDiagnostics validate_pair(const PairOfRings& p) {
  PairDiagnostics d;
  for (const auto& g : p.A_gens()) {
    if (!same_context(g.context(), p.B().context())) {
      d.ok = false;
      d.notes.push_back("A-generator context mismatch");
    }
  }
  return d;
}

PairHom::PairHom(PairOfRings source, PairOfRings target, std::vector<Polynomial> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
  if (images_.size() != source_.B().var_count())
    throw Error("PairHom: one image per source variable required");
  for (auto& p : images_) p = target_.B().nf(p);
}

PairHom PairHom::identity(const PairOfRings& p) {
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < p.B().var_count(); ++i) images.push_back(p.B().var(i));
  return PairHom(p, p, std::move(images));
}

Polynomial PairHom::apply(const Polynomial& f) const {
  if (!same_context(f.context(), source_.B().context()))
    throw Error("PairHom::apply: element not in the source ring");
  return target_.B().nf(f.substitute(images_));
}

PairDiagnostics PairHom::validate() const {
  PairDiagnostics d;
  for (const auto& r : source_.B().relations().generators()) {
    if (!apply(r).is_zero()) {
      d.ok = false;
      d.notes.push_back("relation " + r.to_string() + " does not map to zero");
    }
  }
  for (const auto& a : source_.A_gens()) {
    if (!target_.in_A(apply(a))) {
      d.ok = false;
      d.notes.push_back("A-generator " + a.to_string() + " does not map into A'");
    }
  }
  return d;
}

bool PairHom::operator==(const PairHom& other) const {
  if (!same_context(source_.B().context(), other.source_.B().context())) return false;
  if (!same_context(target_.B().context(), other.target_.B().context())) return false;
  return images_ == other.images_;
}

PairHom compose(const PairHom& g, const PairHom& f) {
  if (!same_context(f.target().B().context(), g.source().B().context()))
    throw Error("compose: target of f is not the source of g");
  std::vector<Polynomial> images;
  for (const auto& im : f.images()) images.push_back(g.apply(im));
  return PairHom(f.source(), g.target(), std::move(images));
}

bool same_pair(const PairOfRings& a, const PairOfRings& b) {
  if (!same_context(a.B().context(), b.B().context())) return false;
  if (!(a.B().relations() == b.B().relations())) return false;
  return same_subalgebra(a.A_gens(), b.A_gens(), a.B().relations());
}

bool same_subalgebra(const std::vector<Polynomial>& gens_a, const std::vector<Polynomial>& gens_b,
                     const GroebnerBasis& relations) {
  for (const auto& g : gens_a)
    if (!subalgebra_membership(g, gens_b, relations).member) return false;
  for (const auto& g : gens_b)
    if (!subalgebra_membership(g, gens_a, relations).member) return false;
  return true;
}

}  // namespace birat
