#include <doctest.h>

#include <random>

#include "birat/domain.hpp"
#include "birat/probes.hpp"

using namespace birat;

namespace {

PairOfRings base_pair() {
  return PairOfRings(RingPresentation::free_ring(make_context({"x", "y"})), {});
}

// inner condition on the localized valuation, checked through lifts
bool inner_condition(const Valuation& v, const RationalDomain& outer, const LocalizedPair& loc,
                     const InnerSpec& inner) {
  ValueVector fv = localized_value(v, outer.denominator(), loc, inner.denominator);
  if (fv.zero_sym) return false;
  for (const auto& h : inner.numerators) {
    ValueVector hv = localized_value(v, outer.denominator(), loc, h);
    if (compare(hv, fv) < 0) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("domain construction guards") {
  PairOfRings p = base_pair();
  const ContextPtr& ctx = p.B().context();
  // (x, y) is not the unit ideal
  CHECK_THROWS_AS(RationalDomain(p, {parse_polynomial(ctx, "y")}, parse_polynomial(ctx, "x")),
                  Error);
  // nilpotent denominator
  ContextPtr cn = make_context({"e"});
  RingPresentation nil = RingPresentation::quotient(cn, {parse_polynomial(cn, "e^2")});
  PairOfRings pn(nil, {});
  CHECK_THROWS_AS(RationalDomain(pn, {parse_polynomial(cn, "1")}, parse_polynomial(cn, "e")),
                  Error);
}

TEST_CASE("to_pair on the worked examples") {
  PairOfRings p = base_pair();
  const ContextPtr& ctx = p.B().context();
  // X({x,y}/x) over (Q[x,y], Q): localized pair with A-gens {x*t, y*t} = {1, y*t}
  RationalDomain d(p, {parse_polynomial(ctx, "x"), parse_polynomial(ctx, "y")},
                   parse_polynomial(ctx, "x"));
  LocalizedPair loc = to_pair(d);
  CHECK(loc.pair.B().context()->names() == std::vector<std::string>{"x", "y", "t"});
  const ContextPtr& lctx = loc.pair.B().context();
  CHECK(subalgebra_membership(parse_polynomial(lctx, "y*t"), loc.pair.A_gens(),
                              loc.pair.B().relations())
            .member);
  CHECK(loc.inclusion.validate().ok);

  // denominator 1: same ring plus a redundant inverse of 1, A grows by the a_i
  RationalDomain d1(p, {parse_polynomial(ctx, "x")}, p.B().one());
  LocalizedPair loc1 = to_pair(d1);
  CHECK(subalgebra_membership(parse_polynomial(loc1.pair.B().context(), "x"),
                              loc1.pair.A_gens(), loc1.pair.B().relations())
            .member);

  // X({1}/a) for a in A is the tau-preimage of D(a): pair (B_a, A_a)
  PairOfRings withA(p.B(), {parse_polynomial(ctx, "x")});
  RationalDomain da(withA, {withA.B().one()}, parse_polynomial(ctx, "x"));
  LocalizedPair loca = to_pair(da);
  // A_a contains both x and 1/x
  const ContextPtr& actx = loca.pair.B().context();
  CHECK(subalgebra_membership(parse_polynomial(actx, "x"), loca.pair.A_gens(),
                              loca.pair.B().relations())
            .member);
  CHECK(subalgebra_membership(parse_polynomial(actx, "t"), loca.pair.A_gens(),
                              loca.pair.B().relations())
            .member);
}

TEST_CASE("membership") {
  PairOfRings p = base_pair();
  const ContextPtr& ctx = p.B().context();
  RationalDomain d(p, {parse_polynomial(ctx, "x"), parse_polynomial(ctx, "y")},
                   parse_polynomial(ctx, "x"));

  Valuation g = Valuation::weight(p.B(), {ValueVector::of({0}), ValueVector::of({1})});
  CHECK(membership(g, d));

  Valuation t = Valuation::trivial(p.B(), {parse_polynomial(ctx, "x")});
  CHECK_FALSE(membership(t, d));  // nu(x) = ZERO

  // every member satisfies nu(b) <= 0 (multiplicatively 1 <= v(b))
  ProbeCorpus corpus = default_probe_corpus(p);
  for (const auto& v : corpus.probes) {
    if (!membership(v, d)) continue;
    ValueVector bv = evaluate(v, d.denominator());
    CHECK(!lex_positive(bv));
  }
}

TEST_CASE("intersection worked example and membership law") {
  PairOfRings p = base_pair();
  const ContextPtr& ctx = p.B().context();
  Polynomial x = parse_polynomial(ctx, "x");
  Polynomial y = parse_polynomial(ctx, "y");
  RationalDomain dx(p, {x, y}, x);
  RationalDomain dy(p, {x, y}, y);
  RationalDomain both = intersect(dx, dy);

  CHECK(both.denominator() == parse_polynomial(ctx, "x*y"));
  // numerators are the pairwise products {x^2, xy, y^2}
  std::vector<std::string> nums;
  for (const auto& n : both.numerators()) nums.push_back(n.to_string());
  CHECK(std::find(nums.begin(), nums.end(), "x^2") != nums.end());
  CHECK(std::find(nums.begin(), nums.end(), "x*y") != nums.end());
  CHECK(std::find(nums.begin(), nums.end(), "y^2") != nums.end());

  ProbeCorpus corpus = default_probe_corpus(p);
  REQUIRE(corpus.probes.size() > 5);
  for (const auto& v : corpus.probes)
    CHECK(membership(v, both) == (membership(v, dx) && membership(v, dy)));

  // d cap d is membership-equivalent to d
  RationalDomain dd = intersect(dx, dx);
  for (const auto& v : corpus.probes) CHECK(membership(v, dd) == membership(v, dx));

  // X({x}/1) cap X({y}/1): conjunction of positivity conditions
  RationalDomain ux(p, {x}, p.B().one());
  RationalDomain uy(p, {y}, p.B().one());
  RationalDomain uxy = intersect(ux, uy);
  for (const auto& v : corpus.probes) {
    bool expect = !lex_negative(evaluate(v, x)) && !lex_negative(evaluate(v, y));
    CHECK(membership(v, uxy) == expect);
  }
}

TEST_CASE("refine_cover on the worked two-domain cover") {
  PairOfRings p = base_pair();
  const ContextPtr& ctx = p.B().context();
  Polynomial x = parse_polynomial(ctx, "x");
  Polynomial y = parse_polynomial(ctx, "y");
  Covering c{p, {RationalDomain(p, {x, y}, x), RationalDomain(p, {x, y}, y)}};

  RefinedCovering r = refine_cover(c);
  REQUIRE(r.cover.domains.size() == 3);
  // products T = {xy, x^2, y^2}
  std::vector<std::string> prods;
  for (const auto& q : r.products) prods.push_back(q.to_string());
  std::sort(prods.begin(), prods.end());
  CHECK(prods == std::vector<std::string>{"x*y", "x^2", "y^2"});

  // refinement and coverage on probes
  ProbeCorpus corpus = default_probe_corpus(p);
  for (const auto& v : corpus.probes) {
    bool in_input = membership(v, c.domains[0]) || membership(v, c.domains[1]);
    bool in_output = false;
    for (std::size_t i = 0; i < r.cover.domains.size(); ++i) {
      if (membership(v, r.cover.domains[i])) {
        in_output = true;
        // the assignment certifies the containment V_alpha <= U_i
        CHECK(membership(v, c.domains[static_cast<std::size_t>(r.assignment[i])]));
      }
    }
    CHECK(in_input == in_output);
  }

  // single-domain cover: I' has one tuple
  Covering single{p, {RationalDomain(p, {x}, p.B().one())}};
  RefinedCovering rs = refine_cover(single);
  CHECK(rs.cover.domains.size() == 1);
  CHECK(rs.assignment == std::vector<int>{0});

  // refinement is stable under a second refinement, up to probe membership
  RefinedCovering rr = refine_cover(r.cover);
  for (const auto& v : corpus.probes) {
    bool once = false, twice = false;
    for (const auto& d : r.cover.domains) once = once || membership(v, d);
    for (const auto& d : rr.cover.domains) twice = twice || membership(v, d);
    CHECK(once == twice);
  }
}

TEST_CASE("flatten case 1: trivial denominators") {
  PairOfRings p = base_pair();
  const ContextPtr& ctx = p.B().context();
  RationalDomain outer(p, {parse_polynomial(ctx, "x")}, p.B().one());
  LocalizedPair loc = to_pair(outer);
  const ContextPtr& lctx = loc.pair.B().context();
  InnerSpec inner{{parse_polynomial(lctx, "y")}, loc.pair.B().one()};

  RationalDomain flat = flatten(outer, inner);
  CHECK(flat.denominator().is_one());
  // X({x}/1) then {y}/1 gives X({x,y}/1)
  std::vector<std::string> nums;
  for (const auto& n : flat.numerators()) nums.push_back(n.to_string());
  CHECK(std::find(nums.begin(), nums.end(), "x") != nums.end());
  CHECK(std::find(nums.begin(), nums.end(), "y") != nums.end());
}

TEST_CASE("flatten case 2: inner X'({1}/h)") {
  PairOfRings p = base_pair();
  const ContextPtr& ctx = p.B().context();
  RationalDomain outer(p, {parse_polynomial(ctx, "x"), parse_polynomial(ctx, "y")},
                       parse_polynomial(ctx, "x"));
  LocalizedPair loc = to_pair(outer);
  const ContextPtr& lctx = loc.pair.B().context();
  // h = y*t lifts to g = y with k = 1
  InnerSpec inner{{loc.pair.B().one()}, parse_polynomial(lctx, "y*t")};
  RationalDomain flat = flatten(outer, inner);

  ProbeCorpus corpus = default_probe_corpus(p);
  for (const auto& v : corpus.probes) {
    bool expect = membership(v, outer) && inner_condition(v, outer, loc, inner);
    CHECK(membership(v, flat) == expect);
  }
}

TEST_CASE("flatten case 3 and the trivial inner domain") {
  PairOfRings p = base_pair();
  const ContextPtr& ctx = p.B().context();
  RationalDomain outer(p, {parse_polynomial(ctx, "x"), parse_polynomial(ctx, "y")},
                       parse_polynomial(ctx, "x"));
  LocalizedPair loc = to_pair(outer);
  const ContextPtr& lctx = loc.pair.B().context();

  InnerSpec inner{{parse_polynomial(lctx, "y*t")}, loc.pair.B().one()};
  RationalDomain flat = flatten(outer, inner);
  ProbeCorpus corpus = default_probe_corpus(p);
  for (const auto& v : corpus.probes) {
    bool expect = membership(v, outer) && inner_condition(v, outer, loc, inner);
    CHECK(membership(v, flat) == expect);
  }

  // trivial inner domain {1}/1 flattens to the outer domain
  InnerSpec triv{{loc.pair.B().one()}, loc.pair.B().one()};
  RationalDomain same = flatten(outer, triv);
  for (const auto& v : corpus.probes) CHECK(membership(v, same) == membership(v, outer));
}

TEST_CASE("flatten case 4: general inner data") {
  PairOfRings p = base_pair();
  const ContextPtr& ctx = p.B().context();
  RationalDomain outer(p, {parse_polynomial(ctx, "x"), parse_polynomial(ctx, "y")},
                       parse_polynomial(ctx, "x"));
  LocalizedPair loc = to_pair(outer);
  const ContextPtr& lctx = loc.pair.B().context();
  // inner numerators {y*t, 1}, denominator x (a unit-ideal family in B_x)
  InnerSpec inner{{parse_polynomial(lctx, "y*t"), loc.pair.B().one()},
                  parse_polynomial(lctx, "x")};
  RationalDomain flat = flatten(outer, inner);

  ProbeCorpus corpus = default_probe_corpus(p);
  for (const auto& v : corpus.probes) {
    bool expect = membership(v, outer) && inner_condition(v, outer, loc, inner);
    CHECK(membership(v, flat) == expect);
  }
}

TEST_CASE("flatten on randomized domain configurations") {
  PairOfRings p = base_pair();
  const ContextPtr& ctx = p.B().context();
  std::mt19937 rng(79);
  ProbeCorpus corpus = default_probe_corpus(p);
  std::uniform_int_distribution<int> shape(0, 2);

  int done = 0;
  for (int trial = 0; done < 20 && trial < 200; ++trial) {
    Polynomial b = random_element(p.B(), rng, 1, 2);
    Polynomial a = random_element(p.B(), rng, 1, 2);
    if (b.is_zero()) continue;
    std::vector<Polynomial> data = {a, b};
    if (!is_unit_ideal(data, p.B().relations())) continue;
    RationalDomain outer(p, {a}, b);
    LocalizedPair loc = to_pair(outer);
    const ContextPtr& lctx = loc.pair.B().context();

    Polynomial t = Polynomial::variable(lctx, loc.t_index);
    Polynomial h = loc.pair.B().nf(a.lift_to(lctx) * t);
    InnerSpec inner;
    switch (shape(rng)) {
      case 0:
        inner = InnerSpec{{loc.pair.B().one()}, h.is_zero() ? loc.pair.B().one() : h};
        break;
      case 1:
        inner = InnerSpec{{h}, loc.pair.B().one()};
        break;
      default:
        inner = InnerSpec{{h, loc.pair.B().one()}, t};
        break;
    }
    RationalDomain flat = [&]() -> RationalDomain {
      return flatten(outer, inner);
    }();
    for (const auto& v : corpus.probes) {
      bool expect = membership(v, outer) && inner_condition(v, outer, loc, inner);
      CHECK(membership(v, flat) == expect);
    }
    ++done;
  }
  CHECK(done == 20);
}
