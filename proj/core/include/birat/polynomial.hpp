#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "birat/order.hpp"

namespace birat {

/// Multivariate polynomial over Q. Terms map monomials to nonzero
/// coefficients; zero coefficients are never stored. The serialized form
/// lists terms by descending total degree, ties broken by descending lex,
/// which makes printing bit-exact.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational, MonomialLexLess>;

  Polynomial() = default;
  explicit Polynomial(ContextPtr ctx) : ctx_(std::move(ctx)) {}

  static Polynomial zero(ContextPtr ctx) { return Polynomial(std::move(ctx)); }
  static Polynomial constant(ContextPtr ctx, const Rational& c);
  static Polynomial variable(ContextPtr ctx, std::size_t index);
  static Polynomial monomial(ContextPtr ctx, Monomial m, const Rational& c);

  const ContextPtr& context() const { return ctx_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
  }
  bool is_one() const;
  std::size_t term_count() const { return terms_.size(); }
  int total_degree() const;

  /// Degree in one variable.
  int degree_in(std::size_t var) const;

  Rational coeff(const Monomial& m) const;
  void add_term(const Monomial& m, const Rational& c);

  Polynomial operator+(const Polynomial& g) const;
  Polynomial operator-(const Polynomial& g) const;
  Polynomial operator*(const Polynomial& g) const;
  Polynomial operator-() const;
  Polynomial scaled(const Rational& c) const;
  Polynomial pow(int e) const;

  bool operator==(const Polynomial& g) const;
  bool operator!=(const Polynomial& g) const { return !(*this == g); }

  /// Leading term under the given order; polynomial must be nonzero.
  std::pair<Monomial, Rational> leading_term(const MonomialOrder& ord) const;

  /// Rewrites this polynomial in another context. Each variable of the
  /// current context must appear in `target`.
  Polynomial lift_to(const ContextPtr& target) const;

  /// Substitutes `images[i]` for variable i. All images share one context.
  Polynomial substitute(const std::vector<Polynomial>& images) const;

  std::string to_string() const;

 private:
  void check_ctx(const Polynomial& g) const;

  ContextPtr ctx_;
  TermMap terms_;
};

/// Parses the canonical grammar: terms `c*x^e*y^f` joined by `+`/`-`,
/// coefficients `p` or `p/q`. Variable names must come from `ctx`.
Polynomial parse_polynomial(const ContextPtr& ctx, const std::string& text);

}  // namespace birat
