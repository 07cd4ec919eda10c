#pragma once

#include <optional>
#include <string>
#include <vector>

#include "isoform/matrix.hpp"
#include "isoform/rational.hpp"

namespace isoform {

/// Linear subspace of Q^n held in a canonical form: the basis rows are the
/// nonzero rows of the reduced row-echelon form of any spanning set, so two
/// subspaces are equal exactly when their stored bases are identical.
class Subspace {
public:
  /// Zero subspace of a zero-dimensional ambient space; a placeholder that
  /// no operation accepts.
  Subspace() = default;

  /// Canonicalizes the span of the given vectors. Vectors may be dependent.
  static Subspace span(int ambient_dim, const std::vector<std::vector<Rational>>& vectors);

  /// The whole coordinate space Q^n.
  static Subspace full(int ambient_dim);

  int ambient_dim() const { return ambient_; }
  int dim() const { return static_cast<int>(rows_.size()); }

  /// Canonical basis rows (RREF), each of length ambient_dim().
  const std::vector<std::vector<Rational>>& basis() const { return rows_; }

  /// Pivot column of each basis row.
  const std::vector<int>& pivots() const { return pivots_; }

  bool contains(const std::vector<Rational>& v) const;

  /// Coordinates of v in the canonical basis, or nullopt when v is outside
  /// the subspace.
  std::optional<std::vector<Rational>> coordinates_of(const std::vector<Rational>& v) const;

  /// Basis of the right kernel {y : B y = 0} of the basis matrix; a vector
  /// lies in the subspace iff it is orthogonal (standard dot) to every
  /// kernel row. Rows are scaled to integer entries.
  const std::vector<std::vector<BigInt>>& integer_conormals() const { return conormals_; }

  /// Basis rows with denominators cleared to primitive integer vectors.
  const std::vector<std::vector<BigInt>>& integer_basis() const { return int_rows_; }

  std::string canonical_bytes() const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.rows_ == b.rows_;
  }

private:
  void finalize();

  int ambient_ = 0;
  std::vector<std::vector<Rational>> rows_;
  std::vector<int> pivots_;
  std::vector<std::vector<BigInt>> int_rows_;
  std::vector<std::vector<BigInt>> conormals_;
};

/// True iff the two subspaces span the same space. Throws
/// AmbientMismatchError when the ambient dimensions differ.
bool subspace_equal(const Subspace& a, const Subspace& b);

/// Matrix of m restricted to s, written in s's canonical basis, when m maps
/// s into itself; nullopt otherwise. Throws ShapeMismatchError unless m is
/// square of side s.ambient_dim().
std::optional<QMatrix> restrict_to_subspace(const QMatrix& m, const Subspace& s);

}  // namespace isoform
