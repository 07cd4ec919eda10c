#include "isoform/subspace.hpp"

#include <algorithm>

#include "isoform/errors.hpp"

namespace isoform {

namespace {

BigInt lcm_big(const BigInt& a, const BigInt& b) {
  return a / boost::multiprecision::gcd(a, b) * b;
}

std::vector<BigInt> clear_denominators(const std::vector<Rational>& row) {
  BigInt l = 1;
  for (const auto& x : row) l = lcm_big(l, x.denominator());
  std::vector<BigInt> out;
  out.reserve(row.size());
  BigInt g = 0;
  for (const auto& x : row) {
    BigInt v = x.numerator() * (l / x.denominator());
    g = boost::multiprecision::gcd(g, v);
    out.push_back(std::move(v));
  }
  if (g > 1)
    for (auto& v : out) v /= g;
  return out;
}

}  // namespace

Subspace Subspace::span(int ambient_dim, const std::vector<std::vector<Rational>>& vectors) {
  if (ambient_dim <= 0) throw ShapeMismatchError("Subspace::span: ambient dimension must be positive");
  for (const auto& v : vectors)
    if (static_cast<int>(v.size()) != ambient_dim)
      throw ShapeMismatchError("Subspace::span: vector length does not match ambient dimension");

  Subspace s;
  s.ambient_ = ambient_dim;
  if (!vectors.empty()) {
    QMatrix m(static_cast<int>(vectors.size()), ambient_dim);
    for (int i = 0; i < static_cast<int>(vectors.size()); ++i)
      for (int j = 0; j < ambient_dim; ++j) m.at(i, j) = vectors[i][j];
    QMatrix r = rref(m);
    for (int i = 0; i < r.rows(); ++i) {
      std::vector<Rational> row(ambient_dim);
      bool zero = true;
      for (int j = 0; j < ambient_dim; ++j) {
        row[j] = r.at(i, j);
        zero = zero && row[j].is_zero();
      }
      if (!zero) s.rows_.push_back(std::move(row));
    }
  }
  s.finalize();
  return s;
}

Subspace Subspace::full(int ambient_dim) {
  std::vector<std::vector<Rational>> rows;
  rows.reserve(ambient_dim);
  for (int i = 0; i < ambient_dim; ++i) {
    std::vector<Rational> r(ambient_dim, Rational(0));
    r[i] = Rational(1);
    rows.push_back(std::move(r));
  }
  return span(ambient_dim, rows);
}

void Subspace::finalize() {
  pivots_.clear();
  for (const auto& row : rows_) {
    int p = 0;
    while (p < ambient_ && row[p].is_zero()) ++p;
    pivots_.push_back(p);
  }
  int_rows_.clear();
  for (const auto& row : rows_) int_rows_.push_back(clear_denominators(row));

  // Right-kernel basis from the RREF structure: one vector per free column.
  conormals_.clear();
  std::vector<int> pivot_of_col(ambient_, -1);
  for (int i = 0; i < dim(); ++i) pivot_of_col[pivots_[i]] = i;
  for (int c = 0; c < ambient_; ++c) {
    if (pivot_of_col[c] >= 0) continue;
    std::vector<Rational> y(ambient_, Rational(0));
    y[c] = Rational(1);
    for (int i = 0; i < dim(); ++i) y[pivots_[i]] = -rows_[i][c];
    conormals_.push_back(clear_denominators(y));
  }
}

bool Subspace::contains(const std::vector<Rational>& v) const {
  return coordinates_of(v).has_value();
}

std::optional<std::vector<Rational>> Subspace::coordinates_of(const std::vector<Rational>& v) const {
  if (static_cast<int>(v.size()) != ambient_)
    throw AmbientMismatchError("Subspace::coordinates_of: vector length mismatch");
  // In RREF every basis row is 1 on its own pivot column and 0 on the
  // others, so candidate coordinates read off the pivot entries.
  std::vector<Rational> coords(dim());
  for (int i = 0; i < dim(); ++i) coords[i] = v[pivots_[i]];
  for (int j = 0; j < ambient_; ++j) {
    Rational acc(0);
    for (int i = 0; i < dim(); ++i)
      if (!coords[i].is_zero()) acc += coords[i] * rows_[i][j];
    if (acc != v[j]) return std::nullopt;
  }
  return coords;
}

std::string Subspace::canonical_bytes() const {
  std::string out = std::to_string(ambient_) + "|" + std::to_string(dim()) + "|";
  for (const auto& row : rows_) {
    for (const auto& x : row) {
      out += x.str();
      out += ',';
    }
    out += ';';
  }
  return out;
}

bool subspace_equal(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw AmbientMismatchError("subspace_equal: ambient dimensions differ");
  return a.basis() == b.basis();
}

std::optional<QMatrix> restrict_to_subspace(const QMatrix& m, const Subspace& s) {
  if (m.rows() != m.cols() || m.rows() != s.ambient_dim())
    throw ShapeMismatchError("restrict_to_subspace: matrix side must equal ambient dimension");
  if (s.dim() == 0)
    throw ShapeMismatchError("restrict_to_subspace: zero subspace has no basis");
  QMatrix out(s.dim(), s.dim());
  for (int i = 0; i < s.dim(); ++i) {
    std::vector<Rational> image = m.apply(s.basis()[i]);
    auto coords = s.coordinates_of(image);
    if (!coords) return std::nullopt;
    for (int j = 0; j < s.dim(); ++j) out.at(j, i) = (*coords)[j];
  }
  return out;
}

}  // namespace isoform
