#pragma once

#include <random>

#include "birat/valuation.hpp"

namespace birat {

/// Finite set of concrete valuations on which set-level statements are
/// verified pointwise. Every probe is validated on construction: a
/// randomized spot check of the valuation axioms drops candidates whose
/// presentation fails them (non-prime trivial ideals, say).
struct ProbeCorpus {
  std::vector<Valuation> probes;
};

struct ProbeOptions {
  unsigned seed = 2024;
  int weight_range = 2;   // Gauss weights drawn from [-range, range]
  int max_rank = 2;
  std::size_t target_count = 24;
  int axiom_trials = 40;  // validation spot checks per candidate
};

ProbeCorpus default_probe_corpus(const PairOfRings& pair, const ProbeOptions& opt = {});

/// Random element with small coefficients, for axiom checks and witnesses.
Polynomial random_element(const RingPresentation& B, std::mt19937& rng, int degree = 2,
                          int terms = 3);

/// Spot check of the valuation axioms on random pairs:
/// nu(fg) = nu(f)+nu(g), nu(f+g) >= min, nu(1) = 0.
bool axioms_hold(const Valuation& v, std::mt19937& rng, int trials);

}  // namespace birat
