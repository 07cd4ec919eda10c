#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "isoform/errors.hpp"

namespace isoform {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

/// Label of one simple type, e.g. A2, D4, E6. Construction validates the
/// rank bounds of each family (A: >=1, B/C: >=2, D: >=3, E: 6..8, F: 4, G: 2).
struct SimpleType {
  Family family;
  int rank;

  SimpleType(Family f, int r);

  /// Parses labels such as "A2", "d4", "E6" (case-insensitive).
  static SimpleType parse(std::string_view s);

  std::string str() const;

  friend bool operator==(const SimpleType&, const SimpleType&) = default;
};

/// Root datum of one simple type: Cartan matrix, positive roots in the
/// simple-root basis, primitive degrees, and the Weyl group order.
///
/// The invariant inner product of two coordinate vectors x, y is
/// x^T (D C) y with D the integer symmetrizing diagonal, so every Weyl
/// element is an integer matrix in these coordinates.
struct RootSystem {
  SimpleType type;
  std::vector<std::vector<int>> cartan;          // C[i][i] = 2
  std::vector<std::vector<int>> positive_roots;  // simple-root coordinates
  std::vector<int> primitive_degrees;            // sorted odd integers
  long long weyl_order = 0;
  std::vector<long long> symmetrizer;               // diagonal D
  std::vector<std::vector<long long>> bilinear;      // B = D C, symmetric

  int rank() const { return type.rank; }

  /// True iff v (simple-root coordinates) is a root, positive or negative.
  bool is_root(const std::vector<int>& v) const;
};

RootSystem build_root_system(SimpleType t);

/// The odd degrees g_1..g_rank of the primitive generators of H*(G).
/// Satisfies prod (g+1)/2 = Weyl group order.
std::vector<int> primitive_degrees(SimpleType t);

/// prod (g+1)/2 over the primitive degrees.
long long weyl_order_formula(SimpleType t);

/// Compact connected group at the Lie-algebra level: a central torus plus
/// a list of simple factors. Degree-1 primitive entries account for the
/// central directions.
struct CompactAlgebra {
  int center_dim = 0;
  std::vector<SimpleType> factors;

  CompactAlgebra() = default;
  CompactAlgebra(int center, std::vector<SimpleType> f);
  explicit CompactAlgebra(SimpleType t) : factors{t} {}

  int rank() const;
  std::vector<int> primitive_degrees() const;  // sorted, {1}^center plus factors
  long long weyl_order() const;
  std::string str() const;

  friend bool operator==(const CompactAlgebra&, const CompactAlgebra&) = default;
};

}  // namespace isoform
