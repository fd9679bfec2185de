#pragma once

#include "birat/ring.hpp"

namespace birat {

/// A pair of rings (B, A): B with a distinguished subring A, given by a
/// finite list of generators over Q. A-generators are stored in normal form
/// with zeros and constants dropped (Q is always contained in A).
class PairOfRings {
 public:
  PairOfRings(RingPresentation B, std::vector<Polynomial> A_gens);

  const RingPresentation& B() const { return B_; }
  const std::vector<Polynomial>& A_gens() const { return A_gens_; }

  /// The pair (B, B).
  static PairOfRings full(RingPresentation B);

  /// Presentation ideal of A in tag variables.
  GroebnerBasis A_relations(const std::vector<std::string>& tag_names = {}) const;

  bool in_A(const Polynomial& f) const {
    return subalgebra_membership(f, A_gens_, B_.relations()).member;
  }

 private:
  RingPresentation B_;
  std::vector<Polynomial> A_gens_;
};

struct PairDiagnostics {
  bool ok = true;
  std::vector<std::string> notes;
};

/// Invariant check: nonzero ring, generators well-formed. A is a generated
/// subring so A <= B holds by construction.
PairDiagnostics validate_pair(const PairOfRings& p);

/// Homomorphism of pairs: ring map B -> B' given variable-wise, with
/// phi(A) contained in A'.
class PairHom {
 public:
  PairHom(PairOfRings source, PairOfRings target, std::vector<Polynomial> images);

  const PairOfRings& source() const { return source_; }
  const PairOfRings& target() const { return target_; }
  const std::vector<Polynomial>& images() const { return images_; }

  static PairHom identity(const PairOfRings& p);

  Polynomial apply(const Polynomial& f) const;

  /// Checks both hom laws: relations map to zero, A-generators land in A'.
  PairDiagnostics validate() const;

  bool operator==(const PairHom& other) const;

 private:
  PairOfRings source_;
  PairOfRings target_;
  std::vector<Polynomial> images_;
};

/// g after f; defined when target(f) = source(g). Variable-wise
/// substitution with results in normal form.
PairHom compose(const PairHom& g, const PairHom& f);

bool same_pair(const PairOfRings& a, const PairOfRings& b);

/// Subring equality decided by mutual membership of generator lists.
bool same_subalgebra(const std::vector<Polynomial>& gens_a, const std::vector<Polynomial>& gens_b,
                     const GroebnerBasis& relations);

}  // namespace birat
