#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "isoform/root_system.hpp"
#include "isoform/subspace.hpp"

namespace isoform {

enum class Construction { fold, circle, regular, product, central, diagonal };

std::string construction_name(Construction c);

/// Subgroup cut out by a Dynkin-diagram automorphism of one simple type.
struct FoldSpec {
  SimpleType g_type;
  /// 1-based node images: permutation[i-1] is the image of node i. Must
  /// preserve the Cartan matrix.
  std::vector<int> permutation;
};

/// One-dimensional subtorus spanned by a rational direction.
struct CircleSpec {
  CompactAlgebra g;
  std::vector<Rational> direction;
  /// When set, direction is given in (n+1)-coordinate trace-zero form;
  /// only valid for a single centerless type-A factor.
  bool trace_zero = false;
};

/// Equal-rank subgroup: a reflection subsystem plus complementary central
/// directions.
struct RegularSpec {
  CompactAlgebra g;
  std::vector<std::vector<int>> sub_roots;  // full t_G coordinates
  int extra_center = 0;
};

/// One orbit of simple factors cyclically permuted by the automorphism: l
/// copies of the factor, with the l-fold return map acting as a diagram
/// automorphism on the first copy.
struct ProductBlockSpec {
  SimpleType factor;
  int copies = 1;
  std::vector<int> return_automorphism;  // empty means identity
};

struct ProductPermSpec {
  int center_dim = 0;
  std::vector<ProductBlockSpec> blocks;
};

using PairSpec = std::variant<FoldSpec, CircleSpec, RegularSpec, ProductPermSpec>;

/// A fully resolved pair (G, K): the exact Cartan-subspace embedding
/// t_K inside t_G together with K's primitive-degree multiset and Weyl
/// group order. Product pairs carry one PairData per block.
struct PairData {
  CompactAlgebra g;
  std::vector<int> k_degrees;  // sorted; degree-1 entries for central directions
  long long k_weyl_order = 1;
  std::vector<std::vector<int>> k_generator_roots;  // reflection roots, regular pairs
  Subspace tk;
  std::vector<PairData> blocks;  // nonempty only for product pairs
  Construction construction = Construction::fold;
  std::string provenance;
  std::string license;  // which structural guarantee makes this a Cartan pair
  std::optional<SimpleType> k_type;
  bool circle_central = false;
  bool circle_semisimple = false;

  int rank_g() const { return g.rank(); }
  int rank_k() const { return static_cast<int>(k_degrees.size()); }

  std::string canonical_bytes() const;
};

PairData resolve_fold(const FoldSpec& spec);
PairData resolve_circle(const CircleSpec& spec);
PairData resolve_regular(const RegularSpec& spec);
PairData resolve_product(const ProductPermSpec& spec);
PairData resolve(const PairSpec& spec);

/// Converts a trace-zero vector (x_1..x_{n+1}, sum 0) to simple-root
/// coordinates of A_n via partial sums.
std::vector<Rational> trace_zero_to_simple_coords(const std::vector<Rational>& v);

/// The permutation matrix on simple-root coordinates induced by a diagram
/// automorphism, after validation against the Cartan matrix.
QMatrix diagram_automorphism_matrix(const RootSystem& rs, const std::vector<int>& permutation);

}  // namespace isoform
