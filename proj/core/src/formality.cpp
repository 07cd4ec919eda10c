#include "isoform/formality.hpp"

#include <algorithm>

#include "isoform/errors.hpp"

namespace isoform {

namespace {

long long checked_pow2(int e) {
  if (e < 0 || e > 62) throw Error("checked_pow2: exponent out of range");
  return 1LL << e;
}

long long checked_mul(long long a, long long b) {
  long long out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw Error("analyze: overflow");
  return out;
}

FormalityReport analyze_irreducible(const PairData& p, const AnalyzeConfig& cfg) {
  FormalityReport r;
  r.construction = construction_name(p.construction);
  r.provenance = p.provenance;
  r.g = p.g;
  r.rank_g = p.rank_g();
  r.rank_k = p.rank_k();
  r.g_degrees = p.g.primitive_degrees();
  r.k_degrees = p.k_degrees;
  r.samelson = samelson_degrees(p);
  r.k_weyl_order = p.k_weyl_order;
  r.dim_image = dim_image_weil(r.g_degrees, r.k_degrees, r.samelson);
  r.dim_quotient = dim_cohomology_quotient(p);
  r.cartan_pair_license = p.license;

  if (p.construction == Construction::circle && p.circle_central && p.circle_semisimple)
    r.warnings.push_back(
        "mixed central/semisimple circle direction; degree-1 entry removed per the "
        "transgression criterion");

  bool fp_ran = false;
  try {
    WeylGroup w = ambient_weyl(p.g, cfg.cap);
    RestrictionSet h = restriction_set(w, p.tk);
    r.fp_h_size = static_cast<long long>(h.size());
    if (r.fp_h_size % p.k_weyl_order != 0)
      throw InternalInconsistencyError("analyze: |H| = " + std::to_string(r.fp_h_size) +
                                       " not divisible by |W(K)| = " +
                                       std::to_string(p.k_weyl_order));
    r.fp_components = r.fp_h_size / p.k_weyl_order;
    r.fp_dim = checked_mul(checked_pow2(r.rank_g - r.rank_k), r.fp_components);
    r.fp_available = true;
    fp_ran = true;
  } catch (const CapExceededError& e) {
    r.warnings.push_back(std::string("fixed-point enumeration skipped: ") + e.what());
  }

  if (fp_ran) {
    if (r.fp_dim > r.dim_quotient)
      throw InternalInconsistencyError(
          "analyze: localization bound violated: fixed-point dimension " +
          std::to_string(r.fp_dim) + " > " + std::to_string(r.dim_quotient));
    r.formal = (r.fp_dim == r.dim_quotient);
    r.fixed_set_connected = (r.fp_components == 1);
  } else {
    switch (p.construction) {
      case Construction::fold:
      case Construction::diagonal:
        r.formal = true;
        r.cartan_pair_license += " (fixed-point side unverified)";
        break;
      case Construction::regular: {
        // Equal rank: the stabilizer is all of W(G), so the component count
        // is |W(G)|/|W(K)| by the order formula without enumeration.
        r.formal = true;
        long long wg = p.g.weyl_order();
        if (wg % p.k_weyl_order == 0)
          r.fixed_set_connected = (wg / p.k_weyl_order == 1);
        r.warnings.push_back("component count from the Weyl order formula, not enumeration");
        break;
      }
      case Construction::central:
        r.formal = true;
        r.fixed_set_connected = true;
        break;
      case Construction::circle:
        break;  // genuinely unknown without the fixed-point side
      case Construction::product:
        throw InternalInconsistencyError("analyze_irreducible: product pair");
    }
  }

  // ncz via the dimension identity, cross-checked against
  // (formal and connected) whenever the fixed-point side exists.
  r.ncz = dim_cohomology_group(p.g) ==
          checked_mul(r.dim_quotient, checked_pow2(r.rank_k));
  if (fp_ran) {
    bool via_fixed_points = *r.formal && *r.fixed_set_connected;
    if (via_fixed_points != r.ncz)
      throw InternalInconsistencyError(
          "analyze: ncz dimension identity (" + std::to_string(r.ncz) +
          ") disagrees with formal+connected (" + std::to_string(via_fixed_points) + ")");
  } else if (p.construction == Construction::fold || p.construction == Construction::diagonal) {
    // formal known by the structure theorem; connectedness follows from ncz
    if (r.ncz) r.fixed_set_connected = true;
  }
  return r;
}

}  // namespace

long long fixed_point_components(const PairData& p, const WeylGroup& w) {
  RestrictionSet h = restriction_set(w, p.tk);
  long long size = static_cast<long long>(h.size());
  if (size % p.k_weyl_order != 0)
    throw InternalInconsistencyError("fixed_point_components: |H| = " + std::to_string(size) +
                                     " not divisible by |W(K)| = " +
                                     std::to_string(p.k_weyl_order));
  return size / p.k_weyl_order;
}

long long fixed_point_dim(const PairData& p, const WeylGroup& w) {
  return checked_mul(checked_pow2(p.rank_g() - p.rank_k()), fixed_point_components(p, w));
}

FormalityReport analyze(const PairData& p, const AnalyzeConfig& cfg) {
  if (p.construction != Construction::product) return analyze_irreducible(p, cfg);

  FormalityReport r;
  r.construction = construction_name(p.construction);
  r.provenance = p.provenance;
  r.g = p.g;
  r.rank_g = p.rank_g();
  r.rank_k = p.rank_k();
  r.g_degrees = p.g.primitive_degrees();
  r.k_degrees = p.k_degrees;
  r.k_weyl_order = p.k_weyl_order;
  r.cartan_pair_license = p.license;

  r.dim_image = 1;
  r.dim_quotient = 1;
  r.fp_available = true;
  r.fp_h_size = 1;
  r.fp_components = 1;
  r.fp_dim = 1;
  bool all_formal_known = true, any_formal_false = false;
  bool all_connected_known = true, any_disconnected = false;
  bool blocks_ncz = true;

  for (const auto& b : p.blocks) {
    FormalityReport br = analyze_irreducible(b, cfg);
    r.dim_image = checked_mul(r.dim_image, br.dim_image);
    r.dim_quotient = checked_mul(r.dim_quotient, br.dim_quotient);
    r.samelson.insert(r.samelson.end(), br.samelson.begin(), br.samelson.end());
    if (br.fp_available && r.fp_available) {
      r.fp_h_size = checked_mul(r.fp_h_size, br.fp_h_size);
      r.fp_components = checked_mul(r.fp_components, br.fp_components);
      r.fp_dim = checked_mul(r.fp_dim, br.fp_dim);
    } else {
      r.fp_available = false;
    }
    if (br.formal.has_value()) {
      any_formal_false = any_formal_false || !*br.formal;
    } else {
      all_formal_known = false;
    }
    if (br.fixed_set_connected.has_value()) {
      any_disconnected = any_disconnected || !*br.fixed_set_connected;
    } else {
      all_connected_known = false;
    }
    blocks_ncz = blocks_ncz && br.ncz;
    for (const auto& wmsg : br.warnings)
      r.warnings.push_back("[" + br.construction + "] " + wmsg);
    r.blocks.push_back(std::move(br));
  }
  std::sort(r.samelson.begin(), r.samelson.end());

  // Verdicts conjoin across blocks (Kunneth).
  if (any_formal_false)
    r.formal = false;
  else if (all_formal_known)
    r.formal = true;
  if (any_disconnected)
    r.fixed_set_connected = false;
  else if (all_connected_known)
    r.fixed_set_connected = true;

  if (r.fp_available) {
    if (r.fp_dim > r.dim_quotient)
      throw InternalInconsistencyError("analyze: localization bound violated for product pair");
    bool equality = (r.fp_dim == r.dim_quotient);
    if (r.formal.has_value() && *r.formal != equality)
      throw InternalInconsistencyError(
          "analyze: blockwise formality disagrees with the product dimension comparison");
    r.formal = equality;
  } else {
    r.fp_h_size = r.fp_components = r.fp_dim = 0;
  }

  r.ncz = dim_cohomology_group(p.g) == checked_mul(r.dim_quotient, checked_pow2(r.rank_k));
  if (r.ncz != blocks_ncz)
    throw InternalInconsistencyError(
        "analyze: product ncz identity disagrees with blockwise ncz");
  if (r.fp_available && r.formal.has_value() && r.fixed_set_connected.has_value()) {
    bool via_fixed_points = *r.formal && *r.fixed_set_connected;
    if (via_fixed_points != r.ncz)
      throw InternalInconsistencyError(
          "analyze: product ncz routes disagree (" + std::to_string(r.ncz) + " vs " +
          std::to_string(via_fixed_points) + ")");
  }
  return r;
}

}  // namespace isoform
