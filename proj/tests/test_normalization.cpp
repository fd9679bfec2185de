#include <doctest.h>

#include <random>

#include "birat/integral.hpp"

using namespace birat;

TEST_CASE("cusp normalizes to the full coordinate ring") {
  ContextPtr ct = make_context({"t"});
  RingPresentation B = RingPresentation::free_ring(ct);
  PairOfRings cusp(B, {parse_polynomial(ct, "t^2"), parse_polynomial(ct, "t^3")});

  NormalizationResult nor = relative_normalization(cusp, 3);
  // t is integral (t^2 lies in A), so Nor = Q[t]
  CHECK(subalgebra_membership(parse_polynomial(ct, "t"), nor.pair.A_gens(), B.relations()).member);
  CHECK(same_subalgebra(nor.pair.A_gens(), {parse_polynomial(ct, "t")}, B.relations()));
}

TEST_CASE("integrally closed pairs stay put") {
  ContextPtr cx = make_context({"x"});
  RingPresentation B = RingPresentation::free_ring(cx);
  PairOfRings full(B, {parse_polynomial(cx, "x")});
  NormalizationResult nor = relative_normalization(full, 3);
  CHECK(same_subalgebra(nor.pair.A_gens(), full.A_gens(), B.relations()));

  // idempotence on the cusp output as well
  ContextPtr ct = make_context({"t"});
  RingPresentation Bt = RingPresentation::free_ring(ct);
  PairOfRings cusp(Bt, {parse_polynomial(ct, "t^2"), parse_polynomial(ct, "t^3")});
  NormalizationResult once = relative_normalization(cusp, 3);
  NormalizationResult twice = relative_normalization(once.pair, 3);
  CHECK(same_subalgebra(once.pair.A_gens(), twice.pair.A_gens(), Bt.relations()));
}

TEST_CASE("monomial saturation: <2> inside <1>") {
  MonomialPair mp;
  mp.rank = 1;
  mp.M_gens = {{1}};
  mp.N_gens = {{2}};
  CHECK(validate_monomial_pair(mp).ok);

  MonomialNormalization nor = monomial_normalization(mp);
  CHECK(nor.certified);
  // 2 * (1) = (2) lies in N, so 1 generates the saturation
  CHECK(in_semigroup({1}, nor.nor_gens));
}

TEST_CASE("semigroup membership") {
  std::vector<LatticeVector> gens = {{2, 0}, {0, 3}, {1, 1}};
  CHECK(in_semigroup({3, 1}, gens));     // (2,0)+(1,1)
  CHECK(in_semigroup({0, 0}, gens));     // empty combination
  CHECK_FALSE(in_semigroup({1, 0}, gens));
  CHECK_FALSE(in_semigroup({0, -1}, gens));

  // mixed-sign generators
  std::vector<LatticeVector> laurent = {{1}, {-1}};
  CHECK(in_semigroup({-3}, laurent));
  CHECK(in_semigroup({5}, laurent));
}

TEST_CASE("toric conversion produces a prime binomial presentation") {
  MonomialPair mp;
  mp.rank = 1;
  mp.M_gens = {{2}, {3}};
  mp.N_gens = {{2}};
  MonomialPairConversion conv = monomial_pair_to_pair(mp);
  // Q[u1,u2]/(u1^3 - u2^2), the cuspidal cubic as a semigroup ring
  const auto& rels = conv.pair.B().relations().generators();
  REQUIRE(rels.size() == 1);
  CHECK(rels.front().term_count() == 2);
  CHECK(conv.pair.A_gens().size() == 1);
}

TEST_CASE("monomial and bounded general path agree on random monomial pairs") {
  std::mt19937 rng(23);
  std::uniform_int_distribution<long long> entry(-3, 3);
  std::uniform_int_distribution<int> rank_pick(1, 3);
  std::uniform_int_distribution<int> count_pick(1, 3);

  int agreed = 0;
  for (int trial = 0; agreed < 20 && trial < 200; ++trial) {
    MonomialPair mp;
    mp.rank = rank_pick(rng);
    int s = count_pick(rng);
    for (int i = 0; i < s; ++i) {
      LatticeVector g(static_cast<std::size_t>(mp.rank));
      for (auto& e : g) e = entry(rng);
      bool zero = true;
      for (long long e : g) zero = zero && e == 0;
      if (!zero) mp.M_gens.push_back(g);
    }
    if (mp.M_gens.empty()) continue;
    // N generated by sums of pairs of M generators (guaranteed inside M)
    std::uniform_int_distribution<std::size_t> pick(0, mp.M_gens.size() - 1);
    for (int i = 0; i < 2; ++i) {
      LatticeVector a = mp.M_gens[pick(rng)];
      const LatticeVector& b = mp.M_gens[pick(rng)];
      for (std::size_t k = 0; k < a.size(); ++k) a[k] += b[k];
      mp.N_gens.push_back(a);
    }
    try {
      MonomialNormalizationResult exact = relative_normalization(mp, 6, 6);
      if (!exact.certified) continue;

      MonomialPairConversion conv = monomial_pair_to_pair(mp, 36);
      NormalizationResult general = relative_normalization(conv.pair, 4);
      // exact saturation generators, re-expressed in the y-monomials,
      // must match the bounded path up to mutual membership
      CHECK(same_subalgebra(general.pair.A_gens(), exact.pair.A_gens(),
                            conv.pair.B().relations()));
      ++agreed;
    } catch (const Error&) {
      continue;  // witness bound exceeded while converting, skip this draw
    }
  }
  CHECK(agreed == 20);
}
