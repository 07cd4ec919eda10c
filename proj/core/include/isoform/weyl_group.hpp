#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "isoform/matrix.hpp"
#include "isoform/root_system.hpp"
#include "isoform/subspace.hpp"

namespace isoform {

inline constexpr long long kDefaultWeylCap = 10'000'000;

/// A finite reflection group realized as integer matrices acting on the
/// ambient coordinate space (simple-root coordinates per factor, plus
/// pointwise-fixed central coordinates for product groups).
///
/// Elements are stored deduplicated in a deterministic order: by word
/// length in the generators, then lexicographically by matrix entries.
/// Element 0 is the identity. The set is closed under products and
/// inverses and every element permutes the ambient root set.
class WeylGroup {
public:
  int dim() const { return dim_; }
  std::size_t size() const { return size_; }

  /// Row-major dim() x dim() entries of element idx.
  std::span<const std::int8_t> element(std::size_t idx) const {
    std::size_t stride = static_cast<std::size_t>(dim_) * dim_;
    return {arena_.data() + idx * stride, stride};
  }

  QMatrix element_matrix(std::size_t idx) const;

  /// Indices of the generating reflections (empty for trivial groups).
  const std::vector<std::size_t>& generators() const { return generators_; }

  /// All roots of the ambient group, positive and negative, in full
  /// coordinates; empty for trivial (torus) groups.
  const std::vector<std::vector<int>>& roots() const { return roots_; }

  /// Invariant symmetric bilinear form on the ambient coordinates.
  const std::vector<std::vector<long long>>& bilinear() const { return bilinear_; }

  /// w(v) for element idx.
  std::vector<long long> apply(std::size_t idx, std::span<const long long> v) const;
  std::vector<Rational> apply(std::size_t idx, const std::vector<Rational>& v) const;

  /// Group of size 1 fixing every coordinate of a dim-dimensional space.
  static WeylGroup trivial(int dim);

private:
  WeylGroup() = default;

  int dim_ = 0;
  std::size_t size_ = 0;
  std::vector<std::int8_t> arena_;
  std::vector<std::size_t> generators_;
  std::vector<std::vector<int>> roots_;
  std::vector<std::vector<long long>> bilinear_;

  friend WeylGroup enumerate_weyl(const RootSystem& rs, long long cap);
  friend WeylGroup product_weyl(const std::vector<const WeylGroup*>& groups, long long cap);
};

/// Breadth-first closure of the simple reflections. Throws CapExceededError
/// when the formula order exceeds cap, before any enumeration work.
WeylGroup enumerate_weyl(const RootSystem& rs, long long cap = kDefaultWeylCap);

/// Block-diagonal product group; size is the product of the factor sizes.
/// The empty product is the trivial group on 0 coordinates.
WeylGroup product_weyl(const std::vector<const WeylGroup*>& groups,
                       long long cap = kDefaultWeylCap);

/// Ambient Weyl group of a compact algebra: identity on the central
/// coordinates, product of the factors' groups on the rest.
WeylGroup ambient_weyl(const CompactAlgebra& a, long long cap = kDefaultWeylCap);

/// Order of the subgroup generated by the reflections in the given roots.
/// Each root must belong to w's root set.
long long subgroup_order(const WeylGroup& w, const std::vector<std::vector<int>>& roots);

/// Order of the group generated by the reflections in the given roots,
/// computed by breadth-first closure. The roots must generate integral
/// reflection matrices with respect to the form.
long long reflection_closure_order(const std::vector<std::vector<long long>>& bilinear,
                                   const std::vector<std::vector<int>>& roots);

/// Reflection matrix of a root, integral in the ambient coordinates.
QMatrix reflection_matrix(const std::vector<std::vector<long long>>& bilinear,
                          const std::vector<int>& root);

/// The distinct restrictions to a stabilized subspace: the group
/// {w|_tk : w in W, w(tk) = tk} with duplicates removed.
struct RestrictionSet {
  Subspace subspace;
  std::vector<QMatrix> restrictions;

  std::size_t size() const { return restrictions.size(); }
};

/// Filters the group for elements mapping tk into itself and collects the
/// deduplicated restriction matrices in tk's canonical basis.
///
/// The result size is the number of connected components of the normalizer
/// N_G(T_K). Assumption behind the construction: every component of
/// N_G(T_K) contains an element normalizing the ambient maximal torus, so
/// restricting Weyl elements exhausts all restrictions; in the equal-rank
/// case this forces |result| = |W|, which the tests pin down.
RestrictionSet restriction_set(const WeylGroup& w, const Subspace& tk);

}  // namespace isoform
