#pragma once

#include <vector>

#include "isoform/pairs.hpp"

namespace isoform {

/// Sorted multiset of positive odd degrees.
using DegreeMultiset = std::vector<int>;

/// a minus b as multisets; throws MultisetNotContainedError unless b is
/// contained in a. Both inputs and the result are sorted ascending.
DegreeMultiset multiset_difference(const DegreeMultiset& a, const DegreeMultiset& b);

/// Degrees of the primitive generators that survive to the quotient: the
/// primitives of G represented by K-basic forms.
///
/// Equal-rank pairs have an empty multiset. Fold and diagonal pairs get
/// the multiset difference of the G- and K-degrees. Circle pairs drop one
/// degree-1 entry when the direction meets the center, otherwise one
/// degree-3 entry: the definite quadratic invariant restricts nonzero to
/// every nonzero semisimple line, and every other primitive restricts
/// into the generated ideal.
DegreeMultiset samelson_degrees(const PairData& p);

/// dim im of the Weil homomorphism via the degree-pairing product
/// prod (g_j + 1)/(l_j + 1), pairing the non-surviving G-degrees with the
/// K-degrees, both sorted ascending. The result must be a positive
/// integer; NonIntegerProductError otherwise.
long long dim_image_weil(const DegreeMultiset& g_degrees, const DegreeMultiset& k_degrees,
                         const DegreeMultiset& samelson);

/// dim H*(G/K): the Weil-image dimension times 2^(number of surviving
/// primitives); products multiply over their blocks.
long long dim_cohomology_quotient(const PairData& p);

/// dim H*(G) = 2^rank.
long long dim_cohomology_group(const CompactAlgebra& a);

/// Equal-rank comparison of two subgroups sharing the same Cartan
/// subspace of the same ambient group.
struct TransferReport {
  long long dim_quotient_k = 0;  // dim H*(G/K)
  long long dim_quotient_h = 0;  // dim H*(G/H)
  long long weyl_k = 0;
  long long weyl_h = 0;
  bool samelson_equal = false;
};

/// Computes both quotient dimensions independently and checks
/// dim H*(G/K) * |W(K)|/|W(H)| = dim H*(G/H) as well as equality of the
/// surviving-degree multisets. Throws SubspaceMismatchError when the pairs
/// do not share ambient group and Cartan subspace, and
/// InternalInconsistencyError when the identity fails.
TransferReport equal_rank_transfer(const PairData& p_k, const PairData& p_h);

}  // namespace isoform
