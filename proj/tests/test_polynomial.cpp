#include <doctest.h>

#include <random>

#include "birat/polynomial.hpp"

using namespace birat;

TEST_CASE("parsing and canonical printing") {
  ContextPtr ctx = make_context({"x", "y"});
  Polynomial p = parse_polynomial(ctx, "3*x^2*y + y^2");
  CHECK(p.to_string() == "3*x^2*y + y^2");

  CHECK(parse_polynomial(ctx, "0").is_zero());
  CHECK(parse_polynomial(ctx, "x - x").is_zero());
  CHECK(parse_polynomial(ctx, "1/2*x + 1/2*x").to_string() == "x");
  CHECK(parse_polynomial(ctx, "-x + 2").to_string() == "-x + 2");
  CHECK(parse_polynomial(ctx, "y*x").to_string() == "x*y");
  CHECK(parse_polynomial(ctx, "2/4").to_string() == "1/2");

  CHECK_THROWS_AS(parse_polynomial(ctx, "z + 1"), Error);
  CHECK_THROWS_AS(parse_polynomial(ctx, ""), Error);
}

TEST_CASE("print/parse round trip is bit exact") {
  ContextPtr ctx = make_context({"x", "y", "z"});
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coeff(-9, 9);
  std::uniform_int_distribution<int> expo(0, 4);
  for (int trial = 0; trial < 200; ++trial) {
    Polynomial p(ctx);
    for (int t = 0; t < 5; ++t) {
      Monomial m(3);
      for (auto& e : m.exps) e = expo(rng);
      int c = coeff(rng);
      if (c) p.add_term(m, Rational(c, 1 + expo(rng)));
    }
    std::string s = p.to_string();
    Polynomial q = parse_polynomial(ctx, s);
    CHECK(q == p);
    CHECK(q.to_string() == s);
  }
}

TEST_CASE("arithmetic basics") {
  ContextPtr ctx = make_context({"x", "y"});
  Polynomial x = Polynomial::variable(ctx, 0);
  Polynomial y = Polynomial::variable(ctx, 1);
  CHECK((x + y) * (x - y) == x * x - y * y);
  CHECK((x + y).pow(2) == x * x + x * y.scaled(2) + y * y);
  CHECK((x - x).is_zero());
  CHECK(x.pow(0).is_one());

  Polynomial p = parse_polynomial(ctx, "x^2*y + 3*x");
  CHECK(p.total_degree() == 3);
  CHECK(p.degree_in(0) == 2);
  CHECK(p.degree_in(1) == 1);
}

TEST_CASE("substitution") {
  ContextPtr ctx = make_context({"x", "y"});
  ContextPtr tgt = make_context({"t"});
  Polynomial t = Polynomial::variable(tgt, 0);
  Polynomial p = parse_polynomial(ctx, "x^2 + y");
  Polynomial image = p.substitute({t, t * t});
  CHECK(image == parse_polynomial(tgt, "2*t^2"));
}

TEST_CASE("leading terms under the three orders") {
  ContextPtr ctx = make_context({"x", "y", "z"});
  Polynomial p = parse_polynomial(ctx, "x*y^2 + x^2 + z^3");
  auto [lex_m, lex_c] = p.leading_term(MonomialOrder::lex());
  CHECK(Polynomial::monomial(ctx, lex_m, 1).to_string() == "x^2");
  auto [grev_m, grev_c] = p.leading_term(MonomialOrder::grevlex());
  CHECK(Polynomial::monomial(ctx, grev_m, 1).to_string() == "x*y^2");
  // block order eliminating the first variable: higher x-degree dominates
  auto [blk_m, blk_c] = p.leading_term(MonomialOrder::block(1));
  CHECK(Polynomial::monomial(ctx, blk_m, 1).to_string() == "x^2");
}
