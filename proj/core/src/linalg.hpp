#pragma once

// Exact incremental row echelon form over Q, internal to the library.

#include <gmpxx.h>

#include <optional>
#include <vector>

namespace flagchow::detail {

using QVector = std::vector<mpq_class>;

/// Keeps the span of inserted vectors and, for each basis vector, its
/// expression in terms of the accepted inputs.
class EchelonBasis {
 public:
  explicit EchelonBasis(size_t dim) : dim_(dim) {}

  size_t rank() const { return rows_.size(); }
  size_t dim() const { return dim_; }

  /// Adds v if it is independent of the current span; returns whether it
  /// was accepted. Accepted vectors are numbered 0, 1, ... in order.
  bool insert(const QVector& v) {
    QVector r = v;
    QVector combo(rows_.size() + 1);
    combo.back() = 1;
    reduce(r, combo);
    size_t p = 0;
    while (p < dim_ && r[p] == 0) ++p;
    if (p == dim_) return false;
    const mpq_class inv = 1 / r[p];
    for (auto& x : r) x *= inv;
    for (auto& x : combo) x *= inv;
    for (auto& c : combos_) c.resize(rows_.size() + 1);
    rows_.push_back(std::move(r));
    combos_.push_back(std::move(combo));
    pivots_.push_back(p);
    return true;
  }

  bool contains(const QVector& v) const {
    QVector r = v;
    QVector combo(rows_.size());
    reduce(r, combo);
    for (const auto& x : r) {
      if (x != 0) return false;
    }
    return true;
  }

  /// Coefficients a with v = sum a_k accepted_k, or nullopt.
  std::optional<QVector> express(const QVector& v) const {
    QVector r = v;
    QVector combo(rows_.size());
    reduce(r, combo);
    for (const auto& x : r) {
      if (x != 0) return std::nullopt;
    }
    // r = v - sum t_k row_k = 0 where combo = -sum t_k combos_k
    for (auto& x : combo) x = -x;
    return combo;
  }

 private:
  // Subtracts multiples of the stored rows; combo accumulates the same
  // operation on expressions.
  void reduce(QVector& r, QVector& combo) const {
    for (size_t k = 0; k < rows_.size(); ++k) {
      const mpq_class f = r[pivots_[k]];
      if (f == 0) continue;
      for (size_t j = 0; j < dim_; ++j) {
        if (rows_[k][j] != 0) r[j] -= f * rows_[k][j];
      }
      for (size_t j = 0; j < combos_[k].size(); ++j) {
        if (combos_[k][j] != 0) combo[j] -= f * combos_[k][j];
      }
    }
  }

  size_t dim_;
  std::vector<QVector> rows_;
  std::vector<QVector> combos_;
  std::vector<size_t> pivots_;
};

/// Solves m x = b for square invertible m.
inline QVector solve_square(std::vector<QVector> m, QVector b) {
  const size_t n = b.size();
  for (size_t c = 0; c < n; ++c) {
    size_t piv = c;
    while (m[piv][c] == 0) ++piv;
    std::swap(m[piv], m[c]);
    std::swap(b[piv], b[c]);
    for (size_t r = 0; r < n; ++r) {
      if (r == c || m[r][c] == 0) continue;
      const mpq_class f = m[r][c] / m[c][c];
      for (size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
      b[r] -= f * b[c];
    }
  }
  for (size_t i = 0; i < n; ++i) b[i] /= m[i][i];
  return b;
}

}  // namespace flagchow::detail
