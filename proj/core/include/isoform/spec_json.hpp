#pragma once

#include <string>

#include <json.hpp>

#include "isoform/formality.hpp"
#include "isoform/pairs.hpp"

namespace isoform {

/// A pair recipe as read from a UTF-8 JSON document.
struct PairDocument {
  PairSpec spec;
  std::string label;
};

/// Parses and schema-checks a pair-spec document. Unknown fields are
/// rejected. Throws SpecParseError with position/field context.
PairDocument parse_pair_document(const std::string& text);

/// Canonical JSON form of a report: fixed field order, integers and
/// strings only. Parsing the emitted text and re-serializing is
/// byte-identical.
nlohmann::ordered_json report_to_json(const FormalityReport& r);

/// Human-readable report. Every verdict line carries the license tag it
/// rests on; the last line compares the two sides of the formality
/// criterion.
std::string report_to_text(const FormalityReport& r);

}  // namespace isoform
