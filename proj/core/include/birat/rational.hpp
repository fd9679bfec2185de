#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace birat {

/// Exact rational coefficients. GMP keeps them canonical: reduced to lowest
/// terms, denominator positive, zero stored as 0/1.
using Rational = mpq_class;

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

inline Rational parse_rational(const std::string& text) {
  mpq_class q;
  if (q.set_str(text, 10) != 0) throw Error("bad rational literal: " + text);
  q.canonicalize();
  return q;
}

/// Prints "p" when the denominator is 1, "p/q" otherwise.
inline std::string to_string(const Rational& q) {
  return q.get_str();
}

}  // namespace birat
