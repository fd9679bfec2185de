#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "birat/rational.hpp"

namespace birat {

/// Additive value in Z^r under lex order (coordinate 0 most significant),
/// or the absorbing symbol ZERO for kernel elements.
///
/// Dictionary, fixed once for the whole library: the multiplicative
/// valuation v and the stored additive value nu satisfy
///     v(x) <= v(y)  <=>  nu(x) >= nu(y),
/// so "v(a) <= 1" reads "nu(a) >= 0", "v bounded above" reads "nu bounded
/// below", and the multiplicative absorbing 0 becomes the additive top
/// element ZERO (plus infinity).
struct ValueVector {
  bool zero_sym = false;
  std::vector<long long> entries;

  static ValueVector zero_symbol(int rank) {
    ValueVector v;
    v.zero_sym = true;
    v.entries.assign(static_cast<std::size_t>(rank), 0);
    return v;
  }
  static ValueVector of(std::vector<long long> e) {
    ValueVector v;
    v.entries = std::move(e);
    return v;
  }
  static ValueVector group_zero(int rank) {
    return of(std::vector<long long>(static_cast<std::size_t>(rank), 0));
  }

  int rank() const { return static_cast<int>(entries.size()); }

  bool is_group_zero() const {
    if (zero_sym) return false;
    for (long long e : entries)
      if (e != 0) return false;
    return true;
  }

  ValueVector operator+(const ValueVector& o) const {
    if (zero_sym || o.zero_sym) return zero_symbol(rank());
    ValueVector r = *this;
    for (std::size_t i = 0; i < entries.size(); ++i) r.entries[i] += o.entries[i];
    return r;
  }

  ValueVector scaled(long long k) const {
    if (zero_sym) return *this;
    ValueVector r = *this;
    for (auto& e : r.entries) e *= k;
    return r;
  }

  bool operator==(const ValueVector& o) const {
    if (zero_sym != o.zero_sym) return false;
    if (zero_sym) return true;
    return entries == o.entries;
  }
  bool operator!=(const ValueVector& o) const { return !(*this == o); }

  std::string to_string() const;
};

/// -1 / 0 / +1 with ZERO as the top element.
int compare(const ValueVector& a, const ValueVector& b);

inline bool lex_nonnegative(const ValueVector& v) {
  if (v.zero_sym) return true;
  for (long long e : v.entries) {
    if (e > 0) return true;
    if (e < 0) return false;
  }
  return true;
}

inline bool lex_negative(const ValueVector& v) { return !lex_nonnegative(v); }

inline bool lex_positive(const ValueVector& v) {
  if (v.zero_sym) return true;
  for (long long e : v.entries) {
    if (e > 0) return true;
    if (e < 0) return false;
  }
  return false;
}

/// 1-based index of the first nonzero coordinate; rank+1 for the zero
/// vector. Callers handle the ZERO symbol themselves.
int level(const ValueVector& v);

/// Lex min / termwise helpers used by Gauss evaluation.
const ValueVector& lex_min(const ValueVector& a, const ValueVector& b);

}  // namespace birat
