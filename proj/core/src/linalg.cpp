#include "birat/linalg.hpp"

namespace birat {

namespace {

// Row echelon form in place; returns pivot column per row.
std::vector<int> echelon(QMatrix& M) {
  std::vector<int> pivots;
  std::size_t rows = M.size();
  if (rows == 0) return pivots;
  std::size_t cols = M[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t sel = r;
    while (sel < rows && M[sel][c] == 0) ++sel;
    if (sel == rows) continue;
    std::swap(M[r], M[sel]);
    Rational inv = 1 / M[r][c];
    for (std::size_t j = c; j < cols; ++j) M[r][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || M[i][c] == 0) continue;
      Rational f = M[i][c];
      for (std::size_t j = c; j < cols; ++j) M[i][j] -= f * M[r][j];
    }
    pivots.push_back(static_cast<int>(c));
    ++r;
  }
  return pivots;
}

}  // namespace

std::optional<QVector> solve_linear(const QMatrix& A, const QVector& b) {
  std::size_t rows = A.size();
  std::size_t cols = rows == 0 ? 0 : A[0].size();
  QMatrix M(rows, QVector(cols + 1));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) M[i][j] = A[i][j];
    M[i][cols] = b[i];
  }
  std::vector<int> pivots = echelon(M);
  for (std::size_t i = pivots.size(); i < rows; ++i) {
    // fully reduced rows beyond the pivot count must be 0 = 0
    bool all_zero = true;
    for (std::size_t j = 0; j < cols; ++j)
      if (M[i][j] != 0) {
        all_zero = false;
        break;
      }
    if (all_zero && M[i][cols] != 0) return std::nullopt;
  }
  // inconsistency can also appear as a pivot in the rhs column
  for (std::size_t i = 0; i < pivots.size(); ++i)
    if (pivots[i] == static_cast<int>(cols)) return std::nullopt;

  QVector x(cols, Rational(0));
  for (std::size_t i = 0; i < pivots.size(); ++i) x[static_cast<std::size_t>(pivots[i])] = M[i][cols];
  // verify (cheap, sizes are small)
  for (std::size_t i = 0; i < rows; ++i) {
    Rational s = 0;
    for (std::size_t j = 0; j < cols; ++j) s += A[i][j] * x[j];
    if (s != b[i]) return std::nullopt;
  }
  return x;
}

std::vector<QVector> kernel_basis(const QMatrix& A) {
  std::size_t rows = A.size();
  std::size_t cols = rows == 0 ? 0 : A[0].size();
  QMatrix M = A;
  std::vector<int> pivots = echelon(M);
  std::vector<bool> is_pivot(cols, false);
  for (int p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;

  std::vector<QVector> basis;
  for (std::size_t free_c = 0; free_c < cols; ++free_c) {
    if (is_pivot[free_c]) continue;
    QVector v(cols, Rational(0));
    v[free_c] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      std::size_t pc = static_cast<std::size_t>(pivots[i]);
      v[pc] = -M[i][free_c];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

bool fm_feasible(QMatrix A, QVector b) {
  std::size_t cols = A.empty() ? 0 : A[0].size();
  for (std::size_t v = cols; v-- > 0;) {
    QMatrix nextA;
    QVector nextb;
    std::vector<std::size_t> pos, neg, zero;
    for (std::size_t i = 0; i < A.size(); ++i) {
      if (A[i][v] > 0)
        pos.push_back(i);
      else if (A[i][v] < 0)
        neg.push_back(i);
      else
        zero.push_back(i);
    }
    for (std::size_t i : zero) {
      QVector row(A[i].begin(), A[i].begin() + static_cast<long>(v));
      nextA.push_back(std::move(row));
      nextb.push_back(b[i]);
    }
    for (std::size_t ip : pos) {
      for (std::size_t in : neg) {
        // combine a_p/|a_p| and a_n/|a_n| rows
        Rational cp = A[ip][v];
        Rational cn = -A[in][v];
        QVector row(v);
        for (std::size_t j = 0; j < v; ++j) row[j] = A[ip][j] / cp + A[in][j] / cn;
        nextA.push_back(std::move(row));
        nextb.push_back(b[ip] / cp + b[in] / cn);
      }
    }
    A = std::move(nextA);
    b = std::move(nextb);
  }
  for (const Rational& rhs : b)
    if (rhs < 0) return false;
  return true;
}

namespace {

bool cone_feasible_at_level(const std::vector<std::vector<long long>>& gens, int level, int sign) {
  if (gens.empty()) return false;
  std::size_t n = gens.size();
  std::size_t r = gens[0].size();
  std::size_t lvl = static_cast<std::size_t>(level - 1);
  if (lvl >= r) return false;
  // variables c_1..c_n >= 0, sum c_i g_i zero before `level`,
  // sign * (coordinate at level-1) <= -1
  QMatrix A;
  QVector b;
  for (std::size_t i = 0; i < n; ++i) {
    QVector row(n, Rational(0));
    row[i] = -1;
    A.push_back(std::move(row));
    b.push_back(Rational(0));
  }
  for (std::size_t k = 0; k < lvl; ++k) {
    QVector row(n), neg(n);
    for (std::size_t i = 0; i < n; ++i) {
      row[i] = Rational(static_cast<long>(gens[i][k]));
      neg[i] = -row[i];
    }
    A.push_back(row);
    b.push_back(Rational(0));
    A.push_back(neg);
    b.push_back(Rational(0));
  }
  QVector row(n);
  for (std::size_t i = 0; i < n; ++i)
    row[i] = Rational(static_cast<long>(sign)) * Rational(static_cast<long>(gens[i][lvl]));
  A.push_back(std::move(row));
  b.push_back(Rational(-1));
  return fm_feasible(std::move(A), std::move(b));
}

}  // namespace

bool cone_has_negative_at_level(const std::vector<std::vector<long long>>& gens, int level) {
  return cone_feasible_at_level(gens, level, +1);
}

bool cone_has_nonzero_at_level(const std::vector<std::vector<long long>>& gens, int level) {
  return cone_feasible_at_level(gens, level, +1) || cone_feasible_at_level(gens, level, -1);
}

}  // namespace birat
