#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

#include "birat/context.hpp"

namespace birat {

/// Exponent vector, one natural number per context variable.
struct Monomial {
  std::vector<int> exps;

  Monomial() = default;
  explicit Monomial(std::size_t n) : exps(n, 0) {}
  explicit Monomial(std::vector<int> e) : exps(std::move(e)) {}

  std::size_t size() const { return exps.size(); }
  int total_degree() const { return std::accumulate(exps.begin(), exps.end(), 0); }
  bool is_one() const {
    for (int e : exps)
      if (e != 0) return false;
    return true;
  }

  bool divides(const Monomial& m) const {
    for (std::size_t i = 0; i < exps.size(); ++i)
      if (exps[i] > m.exps[i]) return false;
    return true;
  }

  Monomial operator*(const Monomial& m) const {
    Monomial r(exps.size());
    for (std::size_t i = 0; i < exps.size(); ++i) r.exps[i] = exps[i] + m.exps[i];
    return r;
  }

  /// Quotient, assuming divisibility.
  Monomial operator/(const Monomial& m) const {
    Monomial r(exps.size());
    for (std::size_t i = 0; i < exps.size(); ++i) r.exps[i] = exps[i] - m.exps[i];
    return r;
  }

  bool operator==(const Monomial& m) const { return exps == m.exps; }
  bool operator!=(const Monomial& m) const { return exps != m.exps; }
};

inline Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r(a.exps.size());
  for (std::size_t i = 0; i < a.exps.size(); ++i) r.exps[i] = std::max(a.exps[i], b.exps[i]);
  return r;
}

/// Storage order for term maps: plain lex on exponent vectors. This is a
/// bookkeeping order only; semantic monomial orders live in order.hpp.
struct MonomialLexLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return a.exps < b.exps;
  }
};

}  // namespace birat
