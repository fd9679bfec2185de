#pragma once

#include "birat/domain.hpp"
#include "birat/integral.hpp"

namespace birat {

/// Section data of the two structure sheaves over a rational domain:
/// M(U) = B_b and O(U) = Nor_{B_b} A' (the latter through the bounded
/// normalization path).
struct SheafSections {
  RationalDomain domain;
  RingPresentation M_ring;
  std::vector<Polynomial> O_gens;
  bool bounded = true;
};

SheafSections sheaf_sections(const RationalDomain& d, int degree_bound);

struct EqualizerOutcome {
  enum class Status { kGlued, kMismatch, kNoBoundedGluing };
  Status status = Status::kNoBoundedGluing;
  std::optional<Polynomial> glued;  // global M-section, an element of B
  bool glued_in_O = false;          // passes O-membership against Nor_B A
  int mismatch_i = -1;
  int mismatch_j = -1;
  std::optional<Polynomial> mismatch_witness;  // difference in the overlap ring
};

/// Finite-cover equalizer instance of the sheaf axiom: restrictions of the
/// candidate sections must agree on pairwise intersections (normal-form
/// equality in the intersected localization); on success a global section
/// in M(base) is recovered by a degree-bounded linear ansatz and tested
/// for O-membership. Sections come as elements of each domain's localized
/// ring, in the context produced by to_pair().
EqualizerOutcome sheaf_equalizer_check(const Covering& c, const std::vector<Polynomial>& sections,
                                       int degree_bound);

}  // namespace birat
