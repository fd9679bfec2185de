#include <doctest.h>

#include "birat/integral.hpp"
#include "birat/probes.hpp"

using namespace birat;

namespace {

PairOfRings q_x_pair() {
  ContextPtr cx = make_context({"x"});
  RingPresentation B = RingPresentation::free_ring(cx);
  return PairOfRings(B, {parse_polynomial(cx, "x")});
}

}  // namespace

TEST_CASE("validate_pair") {
  ContextPtr cx = make_context({"x"});
  RingPresentation B = RingPresentation::free_ring(cx);

  CHECK(validate_pair(PairOfRings(B, {parse_polynomial(cx, "x")})).ok);  // (B, B)
  CHECK(validate_pair(PairOfRings(B, {})).ok);                           // (Q[x], Q)

  // the zero ring is rejected at presentation time
  CHECK_THROWS_AS(RingPresentation::quotient(cx, {parse_polynomial(cx, "1")}), Error);
}

TEST_CASE("compose homs") {
  PairOfRings p = q_x_pair();
  const ContextPtr& cx = p.B().context();
  PairHom id = PairHom::identity(p);
  PairHom sq(p, p, {parse_polynomial(cx, "x^2")});
  PairHom cube(p, p, {parse_polynomial(cx, "x^3")});

  CHECK(compose(id, sq) == sq);
  CHECK(compose(sq, id) == sq);
  // x -> x^2 then x -> x^3 sends x to x^6
  CHECK(compose(cube, sq).images()[0] == parse_polynomial(cx, "x^6"));
  CHECK(compose(sq, cube).images()[0] == parse_polynomial(cx, "x^6"));

  // associativity
  PairHom f(p, p, {parse_polynomial(cx, "x^2 + x")});
  CHECK(compose(compose(cube, sq), f) == compose(cube, compose(sq, f)));
}

TEST_CASE("hom validation") {
  ContextPtr cx = make_context({"x"});
  RingPresentation B = RingPresentation::quotient(cx, {parse_polynomial(cx, "x^2")});
  RingPresentation C = RingPresentation::free_ring(cx);
  PairOfRings src(B, {});
  PairOfRings tgt(C, {});
  // x^2 = 0 must map to zero; x -> x fails, x -> 0 works
  PairHom bad(src, tgt, {parse_polynomial(cx, "x")});
  CHECK_FALSE(bad.validate().ok);
  PairHom good(src, tgt, {Polynomial::zero(cx)});
  CHECK(good.validate().ok);
}

TEST_CASE("integral element test") {
  ContextPtr ct = make_context({"t"});
  RingPresentation B = RingPresentation::free_ring(ct);

  // t over Q[t^2]: t^2 - (t^2) = 0
  IntegralRelation r =
      integral_element_test(parse_polynomial(ct, "t"), {parse_polynomial(ct, "t^2")}, B, 4);
  CHECK(r.found);
  CHECK(r.degree == 2);
  // verify the relation: f^n + sum c_i f^i = 0
  Polynomial f = parse_polynomial(ct, "t");
  Polynomial acc = f.pow(r.degree);
  for (int i = 0; i < r.degree; ++i)
    acc = acc + B.nf(r.coeffs[static_cast<std::size_t>(i)] * f.pow(i));
  CHECK(B.nf(acc).is_zero());

  // x over Q inside Q[x]: transcendental, never found
  ContextPtr cx = make_context({"x"});
  RingPresentation Bx = RingPresentation::free_ring(cx);
  CHECK_FALSE(integral_element_test(parse_polynomial(cx, "x"), {}, Bx, 5).found);

  // members of A are integral at degree 1
  IntegralRelation inA =
      integral_element_test(parse_polynomial(ct, "t^2"), {parse_polynomial(ct, "t^2")}, B, 3);
  CHECK(inA.found);
  CHECK(inA.degree == 1);
}

TEST_CASE("is_adic on the standard examples") {
  // localization data: (B, A) -> (B_b, A[a_i/b]) for unit-ideal data is
  // adic; here b = x, a = 1 - x
  ContextPtr cxy = make_context({"x", "y"});
  RingPresentation B = RingPresentation::free_ring(cxy);
  PairOfRings base(B, {});
  ContextPtr cloc = make_context({"x", "y", "t"});
  RingPresentation L = RingPresentation::quotient(cloc, {parse_polynomial(cloc, "t*x - 1")});
  PairOfRings loc(L, {L.nf(parse_polynomial(cloc, "t - x*t"))});
  PairHom phi(base, loc, {parse_polynomial(cloc, "x"), parse_polynomial(cloc, "y")});
  REQUIRE(phi.validate().ok);
  AdicResult adic = is_adic(phi, 4);
  CHECK(adic.verdict == AdicVerdict::kAdic);

  // identity is adic
  AdicResult idr = is_adic(PairHom::identity(base), 2);
  CHECK(idr.verdict == AdicVerdict::kAdic);

  // (Q[T],Q[T]) -> (Q[T,T^-1],Q[T]) is not adic; certified by a probe
  ContextPtr cT = make_context({"T"});
  RingPresentation BT = RingPresentation::free_ring(cT);
  PairOfRings src(BT, {parse_polynomial(cT, "T")});
  ContextPtr cTs = make_context({"T", "s"});
  RingPresentation BTs = RingPresentation::quotient(cTs, {parse_polynomial(cTs, "T*s - 1")});
  PairOfRings tgt(BTs, {parse_polynomial(cTs, "T")});
  PairHom incl(src, tgt, {parse_polynomial(cTs, "T")});
  REQUIRE(incl.validate().ok);

  ProbeCorpus probes = default_probe_corpus(tgt);
  AdicResult not_adic = is_adic(incl, 3, probes.probes);
  CHECK(not_adic.verdict == AdicVerdict::kNotAdic);
  CHECK(not_adic.witness_probe >= 0);
}

TEST_CASE("is_adic holds for randomized localization data") {
  // property from the localization lemma: the canonical map to the
  // localized pair is adic for unit-ideal data
  std::mt19937 rng(17);
  ContextPtr cxy = make_context({"x", "y"});
  RingPresentation B = RingPresentation::free_ring(cxy);
  PairOfRings base(B, {});
  int tested = 0;
  for (int trial = 0; tested < 50 && trial < 400; ++trial) {
    Polynomial b = random_element(B, rng, 1, 2);
    Polynomial a = random_element(B, rng, 1, 2);
    if (b.is_zero()) continue;
    std::vector<Polynomial> data = {b, a};
    if (!is_unit_ideal(data, B.relations())) continue;

    LocalizationResult lr = localize(B, b);
    const ContextPtr& lctx = lr.ring.context();
    Polynomial t = Polynomial::variable(lctx, lr.inverse_var);
    PairOfRings loc(lr.ring, {lr.ring.nf(a.lift_to(lctx) * t)});
    PairHom phi(base, loc, {parse_polynomial(lctx, "x"), parse_polynomial(lctx, "y")});
    if (!phi.validate().ok) continue;
    AdicResult r = is_adic(phi, 3);
    CHECK(r.verdict == AdicVerdict::kAdic);
    ++tested;
  }
  CHECK(tested == 50);
}
