#pragma once

#include <optional>
#include <vector>

#include "birat/rational.hpp"

namespace birat {

using QVector = std::vector<Rational>;
using QMatrix = std::vector<QVector>;  // row major

/// One solution of A x = b, if any.
std::optional<QVector> solve_linear(const QMatrix& A, const QVector& b);

/// Basis of the null space of A.
std::vector<QVector> kernel_basis(const QMatrix& A);

/// Feasibility of { x : A x <= b } over the rationals, decided by
/// Fourier-Motzkin elimination. Row counts stay manageable at the
/// problem sizes this library targets (a handful of variables).
bool fm_feasible(QMatrix A, QVector b);

/// Does the rational cone generated by `gens` contain a vector that is
/// zero on coordinates [0, level-1) and strictly negative at level-1?
/// Scaling makes this equivalent to the same question for the natural-
/// combination semigroup.
bool cone_has_negative_at_level(const std::vector<std::vector<long long>>& gens, int level);

/// Same with "nonzero at level-1" (either sign).
bool cone_has_nonzero_at_level(const std::vector<std::vector<long long>>& gens, int level);

}  // namespace birat
