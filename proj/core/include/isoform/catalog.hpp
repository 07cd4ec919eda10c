#pragma once

#include <string>
#include <vector>

#include "isoform/pairs.hpp"

namespace isoform {

/// One classical pair shipped with the tool.
struct CatalogEntry {
  std::string label;
  std::string kind;  // fold | circle | regular | product
  PairSpec spec;
};

/// The built-in sweep: every diagram fold through rank 7 plus E6, the
/// triality fold, equal-rank samples, the classical circle examples, and
/// diagonal product pairs.
const std::vector<CatalogEntry>& builtin_catalog();

}  // namespace isoform
