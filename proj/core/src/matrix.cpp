#include "isoform/matrix.hpp"

#include <utility>

#include "isoform/errors.hpp"

namespace isoform {

QMatrix::QMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows <= 0 || cols <= 0) throw ShapeMismatchError("QMatrix: dimensions must be positive");
  a_.assign(static_cast<std::size_t>(rows) * cols, Rational(0));
}

QMatrix::QMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : rows_(static_cast<int>(rows.size())), cols_(0) {
  if (rows_ == 0) throw ShapeMismatchError("QMatrix: dimensions must be positive");
  cols_ = static_cast<int>(rows.begin()->size());
  if (cols_ == 0) throw ShapeMismatchError("QMatrix: dimensions must be positive");
  a_.reserve(static_cast<std::size_t>(rows_) * cols_);
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != cols_)
      throw ShapeMismatchError("QMatrix: ragged initializer");
    for (const auto& x : r) a_.push_back(x);
  }
}

QMatrix QMatrix::identity(int n) {
  QMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Rational(1);
  return m;
}

QMatrix QMatrix::operator*(const QMatrix& o) const {
  if (cols_ != o.rows_)
    throw ShapeMismatchError("QMatrix::operator*: incompatible shapes");
  QMatrix out(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int k = 0; k < cols_; ++k) {
      const Rational& aik = at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) out.at(i, j) += aik * o.at(k, j);
    }
  }
  return out;
}

std::vector<Rational> QMatrix::apply(const std::vector<Rational>& v) const {
  if (static_cast<int>(v.size()) != cols_)
    throw ShapeMismatchError("QMatrix::apply: vector length mismatch");
  std::vector<Rational> out(rows_, Rational(0));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (!at(i, j).is_zero()) out[i] += at(i, j) * v[j];
  return out;
}

bool operator==(const QMatrix& a, const QMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
}

std::string QMatrix::canonical_bytes() const {
  std::string out = std::to_string(rows_) + "x" + std::to_string(cols_) + ":";
  for (const auto& x : a_) {
    out += x.str();
    out += ',';
  }
  return out;
}

QMatrix rref(const QMatrix& m) {
  QMatrix r = m;
  int pivot_row = 0;
  for (int col = 0; col < r.cols() && pivot_row < r.rows(); ++col) {
    int sel = -1;
    for (int i = pivot_row; i < r.rows(); ++i) {
      if (!r.at(i, col).is_zero()) {
        sel = i;
        break;
      }
    }
    if (sel < 0) continue;
    if (sel != pivot_row)
      for (int j = 0; j < r.cols(); ++j) std::swap(r.at(sel, j), r.at(pivot_row, j));
    Rational inv = Rational(1) / r.at(pivot_row, col);
    for (int j = 0; j < r.cols(); ++j) r.at(pivot_row, j) *= inv;
    for (int i = 0; i < r.rows(); ++i) {
      if (i == pivot_row || r.at(i, col).is_zero()) continue;
      Rational f = r.at(i, col);
      for (int j = 0; j < r.cols(); ++j) r.at(i, j) -= f * r.at(pivot_row, j);
    }
    ++pivot_row;
  }
  return r;
}

std::optional<QMatrix> inverse(const QMatrix& m) {
  if (m.rows() != m.cols()) throw ShapeMismatchError("inverse: matrix not square");
  int n = m.rows();
  QMatrix aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = Rational(1);
  }
  QMatrix r = rref(aug);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (r.at(i, j) != (i == j ? Rational(1) : Rational(0))) return std::nullopt;
  QMatrix out(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out.at(i, j) = r.at(i, n + j);
  return out;
}

}  // namespace isoform
