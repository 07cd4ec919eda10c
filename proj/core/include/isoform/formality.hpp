#pragma once

#include <optional>
#include <string>
#include <vector>

#include "isoform/cohomology.hpp"
#include "isoform/pairs.hpp"
#include "isoform/weyl_group.hpp"

namespace isoform {

struct AnalyzeConfig {
  long long cap = kDefaultWeylCap;
};

/// Full verdict record for one pair: the cohomology side, the fixed-point
/// side (when the Weyl enumeration fits under the cap), the formality and
/// ncz verdicts, and the licenses the verdicts rest on.
///
/// Invariants: fp_dim <= dim_quotient whenever computed (localization
/// bound); formal iff fp_dim == dim_quotient; ncz iff formal and connected
/// whenever the fixed-point data exists.
struct FormalityReport {
  std::string label;
  std::string construction;
  std::string provenance;
  CompactAlgebra g;
  int rank_g = 0;
  int rank_k = 0;
  std::vector<int> g_degrees;
  std::vector<int> k_degrees;
  std::vector<int> samelson;
  long long k_weyl_order = 1;
  long long dim_image = 1;    // Weil-image dimension (product over blocks)
  long long dim_quotient = 1; // dim H*(G/K)

  bool fp_available = false;
  long long fp_h_size = 0;      // |H|: distinct restrictions of stabilizing elements
  long long fp_components = 0;  // |H| / |W(K)|
  long long fp_dim = 0;         // 2^(rkG-rkK) * components

  std::optional<bool> formal;
  std::optional<bool> fixed_set_connected;
  bool ncz = false;
  std::string cartan_pair_license;
  std::vector<std::string> warnings;

  std::vector<FormalityReport> blocks;  // product pairs only
};

/// Number of components of the fixed-point set: |restriction set| divided
/// by |W(K)|; integrality is asserted.
long long fixed_point_components(const PairData& p, const WeylGroup& w);

/// 2^(rank G - rank K) times the component count.
long long fixed_point_dim(const PairData& p, const WeylGroup& w);

/// Runs the full comparison for one pair, enumerating the ambient Weyl
/// group per block when it fits under cfg.cap. A cap overflow downgrades
/// the fixed-point side to a warning; structural verdicts that do not need
/// it (equal rank, folds, the ncz dimension identity) are still filled in.
FormalityReport analyze(const PairData& p, const AnalyzeConfig& cfg = {});

}  // namespace isoform
