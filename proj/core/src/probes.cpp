#include "birat/probes.hpp"

namespace birat {

Polynomial random_element(const RingPresentation& B, std::mt19937& rng, int degree, int terms) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<int> expd(0, degree);
  Polynomial f = Polynomial::zero(B.context());
  for (int t = 0; t < terms; ++t) {
    Monomial m(B.var_count());
    int budget = degree;
    for (std::size_t i = 0; i < B.var_count(); ++i) {
      int e = expd(rng) % (budget + 1);
      m.exps[i] = e;
      budget -= e;
    }
    int c = coeff(rng);
    if (c != 0) f.add_term(m, c);
  }
  return B.nf(f);
}

bool axioms_hold(const Valuation& v, std::mt19937& rng, int trials) {
  const RingPresentation& B = v.ring();
  if (!evaluate(v, B.one()).is_group_zero()) return false;
  for (int t = 0; t < trials; ++t) {
    Polynomial f = random_element(B, rng);
    Polynomial g = random_element(B, rng);
    ValueVector vf = evaluate(v, f);
    ValueVector vg = evaluate(v, g);
    ValueVector vfg = evaluate(v, B.nf(f * g));
    if (vfg != vf + vg) return false;
    ValueVector vsum = evaluate(v, B.nf(f + g));
    ValueVector lower = vf.zero_sym ? vg : (vg.zero_sym ? vf : lex_min(vf, vg));
    if (compare(vsum, lower) < 0) return false;
  }
  return true;
}

namespace {

void push_if_valid(ProbeCorpus& corpus, Valuation v, std::mt19937& rng, int trials) {
  if (axioms_hold(v, rng, trials)) corpus.probes.push_back(std::move(v));
}

}  // namespace

ProbeCorpus default_probe_corpus(const PairOfRings& pair, const ProbeOptions& opt) {
  std::mt19937 rng(opt.seed);
  ProbeCorpus corpus;
  const RingPresentation& B = pair.B();
  std::size_t n = B.var_count();

  // trivial valuations over a prime sample: the zero ideal and variable
  // subsets, kept only when proper and passing the axiom spot check
  {
    std::vector<std::vector<std::size_t>> subsets = {{}};
    for (std::size_t i = 0; i < n; ++i) subsets.push_back({i});
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) subsets.push_back({i, j});
    for (const auto& sub : subsets) {
      std::vector<Polynomial> gens;
      for (std::size_t i : sub) gens.push_back(B.var(i));
      try {
        push_if_valid(corpus, Valuation::trivial(B, gens), rng, opt.axiom_trials);
      } catch (const Error&) {
        // improper ideal, skip
      }
      if (corpus.probes.size() >= opt.target_count) return corpus;
    }
  }

  // Gauss valuations from a weight grid, rank 1 then rank 2
  auto try_weight = [&](const std::vector<ValueVector>& ws) {
    try {
      push_if_valid(corpus, Valuation::weight(B, ws), rng, opt.axiom_trials);
    } catch (const Error&) {
      // relations not weight-balanced for this tuple, skip
    }
  };
  if (n > 0) {
    const int R = opt.weight_range;
    // rank 1: a deterministic sweep for small n, a sample otherwise
    if (n <= 2) {
      std::vector<long long> w(n, -R);
      while (true) {
        std::vector<ValueVector> ws;
        for (long long e : w) ws.push_back(ValueVector::of({e}));
        try_weight(ws);
        std::size_t i = 0;
        while (i < n && ++w[i] > R) {
          w[i] = -R;
          ++i;
        }
        if (i == n) break;
      }
    } else {
      std::uniform_int_distribution<long long> pick(-R, R);
      for (int t = 0; t < 12; ++t) {
        std::vector<ValueVector> ws;
        for (std::size_t i = 0; i < n; ++i) ws.push_back(ValueVector::of({pick(rng)}));
        try_weight(ws);
      }
    }
    // rank 2 samples
    if (opt.max_rank >= 2) {
      std::uniform_int_distribution<long long> pick(-R, R);
      for (int t = 0; t < 10; ++t) {
        std::vector<ValueVector> ws;
        for (std::size_t i = 0; i < n; ++i)
          ws.push_back(ValueVector::of({pick(rng), pick(rng)}));
        try_weight(ws);
      }
    }
  }

  // a few composite probes via admissible primary specializations
  std::vector<Valuation> weights;
  for (const auto& v : corpus.probes)
    if (v.is_weight() && v.rank() >= 2) weights.push_back(v);
  for (const auto& v : weights) {
    int jstar = cgamma_level(v);
    for (int j = 2; j <= std::min(jstar, v.rank() + 1); ++j) {
      try {
        push_if_valid(corpus, primary_specialize(v, j), rng, opt.axiom_trials);
      } catch (const Error&) {
      }
      if (corpus.probes.size() >= opt.target_count + 8) break;
    }
  }
  return corpus;
}

}  // namespace birat
