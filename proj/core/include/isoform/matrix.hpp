#pragma once

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "isoform/rational.hpp"

namespace isoform {

/// Dense rational matrix, row-major. Dimensions are fixed at construction
/// and must be positive.
class QMatrix {
public:
  QMatrix(int rows, int cols);
  QMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static QMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& at(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
  const Rational& at(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }

  QMatrix operator*(const QMatrix& o) const;
  std::vector<Rational> apply(const std::vector<Rational>& v) const;

  friend bool operator==(const QMatrix& a, const QMatrix& b);

  /// Unique byte encoding: dimensions plus the canonical string of every
  /// entry. Equal matrices produce identical bytes.
  std::string canonical_bytes() const;

private:
  int rows_;
  int cols_;
  std::vector<Rational> a_;
};

/// Reduced row-echelon form; idempotent and unique per row space.
QMatrix rref(const QMatrix& m);

/// Inverse of a square matrix, or nullopt when singular.
std::optional<QMatrix> inverse(const QMatrix& m);

}  // namespace isoform
