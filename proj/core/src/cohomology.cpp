#include "isoform/cohomology.hpp"

#include <algorithm>

#include "isoform/errors.hpp"

namespace isoform {

namespace {

long long checked_pow2(int e) {
  if (e < 0 || e > 62) throw Error("checked_pow2: exponent out of range");
  return 1LL << e;
}

std::string multiset_str(const DegreeMultiset& m) {
  std::string out = "{";
  for (std::size_t i = 0; i < m.size(); ++i)
    out += (i ? "," : "") + std::to_string(m[i]);
  return out + "}";
}

}  // namespace

DegreeMultiset multiset_difference(const DegreeMultiset& a, const DegreeMultiset& b) {
  DegreeMultiset out;
  std::size_t i = 0, j = 0;
  while (i < a.size()) {
    if (j < b.size() && a[i] == b[j]) {
      ++i;
      ++j;
    } else if (j < b.size() && b[j] < a[i]) {
      throw MultisetNotContainedError("multiset_difference: " + multiset_str(b) +
                                      " not contained in " + multiset_str(a));
    } else {
      out.push_back(a[i]);
      ++i;
    }
  }
  if (j < b.size())
    throw MultisetNotContainedError("multiset_difference: " + multiset_str(b) +
                                    " not contained in " + multiset_str(a));
  return out;
}

DegreeMultiset samelson_degrees(const PairData& p) {
  DegreeMultiset g = p.g.primitive_degrees();
  switch (p.construction) {
    case Construction::regular:
    case Construction::central:
      return {};
    case Construction::fold:
    case Construction::diagonal:
      return multiset_difference(g, p.k_degrees);
    case Construction::circle: {
      int removed = p.circle_central ? 1 : 3;
      auto it = std::find(g.begin(), g.end(), removed);
      if (it == g.end())
        throw InternalInconsistencyError("samelson_degrees: no degree-" +
                                         std::to_string(removed) + " entry in " + multiset_str(g));
      g.erase(it);
      return g;
    }
    case Construction::product:
      throw UnsupportedPairError("samelson_degrees: product pairs reduce blockwise");
  }
  throw UnsupportedPairError("samelson_degrees: unsupported construction");
}

long long dim_image_weil(const DegreeMultiset& g_degrees, const DegreeMultiset& k_degrees,
                         const DegreeMultiset& samelson) {
  if (g_degrees.size() != k_degrees.size() + samelson.size())
    throw SizeMismatchError("dim_image_weil: |g| = " + std::to_string(g_degrees.size()) +
                            " but |k| + |samelson| = " +
                            std::to_string(k_degrees.size() + samelson.size()));
  DegreeMultiset paired = multiset_difference(g_degrees, samelson);
  // Both sides ascending; integrality of the full product is enforced, the
  // individual factors need not be integral.
  Rational product(1);
  for (std::size_t i = 0; i < paired.size(); ++i)
    product *= Rational(paired[i] + 1, k_degrees[i] + 1);
  if (!product.is_integer() || product <= Rational(0))
    throw NonIntegerProductError("dim_image_weil: degree pairing " + multiset_str(paired) +
                                 " over " + multiset_str(k_degrees) + " gives " + product.str());
  return product.as_int64();
}

long long dim_cohomology_quotient(const PairData& p) {
  if (p.construction == Construction::product) {
    long long dim = 1;
    for (const auto& b : p.blocks) {
      long long d = dim_cohomology_quotient(b);
      if (__builtin_mul_overflow(dim, d, &dim))
        throw Error("dim_cohomology_quotient: overflow");
    }
    return dim;
  }
  DegreeMultiset s = samelson_degrees(p);
  long long base = dim_image_weil(p.g.primitive_degrees(), p.k_degrees, s);
  long long out = 0;
  if (__builtin_mul_overflow(base, checked_pow2(static_cast<int>(s.size())), &out))
    throw Error("dim_cohomology_quotient: overflow");
  return out;
}

long long dim_cohomology_group(const CompactAlgebra& a) { return checked_pow2(a.rank()); }

TransferReport equal_rank_transfer(const PairData& p_k, const PairData& p_h) {
  if (!(p_k.g == p_h.g))
    throw SubspaceMismatchError("equal_rank_transfer: ambient groups differ: " + p_k.g.str() +
                                " vs " + p_h.g.str());
  if (!subspace_equal(p_k.tk, p_h.tk))
    throw SubspaceMismatchError("equal_rank_transfer: Cartan subspaces differ");

  TransferReport r;
  r.weyl_k = p_k.k_weyl_order;
  r.weyl_h = p_h.k_weyl_order;
  if (r.weyl_h <= 0 || r.weyl_k % r.weyl_h != 0)
    throw SubspaceMismatchError("equal_rank_transfer: |W(H)| does not divide |W(K)|");
  r.dim_quotient_k = dim_cohomology_quotient(p_k);
  r.dim_quotient_h = dim_cohomology_quotient(p_h);
  r.samelson_equal = samelson_degrees(p_k) == samelson_degrees(p_h);

  if (r.dim_quotient_k * (r.weyl_k / r.weyl_h) != r.dim_quotient_h)
    throw InternalInconsistencyError(
        "equal_rank_transfer: " + std::to_string(r.dim_quotient_k) + " * " +
        std::to_string(r.weyl_k) + "/" + std::to_string(r.weyl_h) +
        " != " + std::to_string(r.dim_quotient_h));
  if (!r.samelson_equal)
    throw InternalInconsistencyError("equal_rank_transfer: surviving degrees differ");
  return r;
}

}  // namespace isoform
