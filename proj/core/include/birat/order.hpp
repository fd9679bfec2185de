#pragma once

#include "birat/monomial.hpp"

namespace birat {

/// Total order on monomials compatible with multiplication.
///
/// kBlock eliminates the first `split` variables: monomials are compared
/// graded-reverse-lex on the leading block first, then on the tail block.
/// Any monomial touching the leading block dominates every monomial that
/// does not, which is what elimination ideals need.
class MonomialOrder {
 public:
  enum Kind { kLex, kGrevlex, kBlock };

  static MonomialOrder lex() { return MonomialOrder(kLex, 0); }
  static MonomialOrder grevlex() { return MonomialOrder(kGrevlex, 0); }
  static MonomialOrder block(int split) { return MonomialOrder(kBlock, split); }

  Kind kind() const { return kind_; }
  int split() const { return split_; }

  // true when a > b
  bool greater(const Monomial& a, const Monomial& b) const {
    switch (kind_) {
      case kLex:
        return lex_greater(a.exps, b.exps, 0, a.exps.size());
      case kGrevlex:
        return grevlex_greater(a.exps, b.exps, 0, a.exps.size());
      case kBlock: {
        std::size_t s = static_cast<std::size_t>(split_);
        int c = grevlex_cmp(a.exps, b.exps, 0, s);
        if (c != 0) return c > 0;
        return grevlex_greater(a.exps, b.exps, s, a.exps.size());
      }
    }
    return false;
  }

  bool equal_keys(const Monomial& a, const Monomial& b) const { return a == b; }

  bool operator==(const MonomialOrder& o) const {
    return kind_ == o.kind_ && split_ == o.split_;
  }

 private:
  MonomialOrder(Kind k, int s) : kind_(k), split_(s) {}

  static bool lex_greater(const std::vector<int>& a, const std::vector<int>& b,
                          std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
      if (a[i] != b[i]) return a[i] > b[i];
    }
    return false;
  }

  static int grevlex_cmp(const std::vector<int>& a, const std::vector<int>& b,
                         std::size_t lo, std::size_t hi) {
    int da = 0, db = 0;
    for (std::size_t i = lo; i < hi; ++i) {
      da += a[i];
      db += b[i];
    }
    if (da != db) return da > db ? 1 : -1;
    // equal degree: last nonzero entry of a-b negative means a > b
    for (std::size_t i = hi; i-- > lo;) {
      if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    }
    return 0;
  }

  static bool grevlex_greater(const std::vector<int>& a, const std::vector<int>& b,
                              std::size_t lo, std::size_t hi) {
    return grevlex_cmp(a, b, lo, hi) > 0;
  }

  Kind kind_;
  int split_;
};

}  // namespace birat
