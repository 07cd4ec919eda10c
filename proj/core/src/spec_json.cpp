#include "isoform/spec_json.hpp"

#include <optional>
#include <set>
#include <sstream>

#include "isoform/errors.hpp"

namespace isoform {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

void require_keys(const json& obj, const std::string& where, const std::set<std::string>& allowed,
                  const std::set<std::string>& required) {
  if (!obj.is_object()) throw SpecParseError(where + ": expected an object");
  for (const auto& [key, value] : obj.items()) {
    (void)value;
    if (!allowed.count(key))
      throw SpecParseError(where + ": unknown field '" + key + "'");
  }
  for (const auto& key : required)
    if (!obj.contains(key)) throw SpecParseError(where + ": missing field '" + key + "'");
}

Rational rational_from(const json& v, const std::string& where) {
  if (v.is_number_integer()) return Rational(v.get<long long>());
  if (v.is_string()) {
    try {
      return Rational::parse(v.get<std::string>());
    } catch (const Error& e) {
      throw SpecParseError(where + ": " + e.what());
    }
  }
  throw SpecParseError(where + ": expected an integer or a rational string \"p/q\"");
}

SimpleType type_from(const json& v, const std::string& where) {
  if (!v.is_string()) throw SpecParseError(where + ": expected a type label string");
  try {
    return SimpleType::parse(v.get<std::string>());
  } catch (const InvalidTypeError& e) {
    throw SpecParseError(where + ": " + e.what());
  }
}

CompactAlgebra algebra_from(const json& v, const std::string& where) {
  if (v.is_string()) return CompactAlgebra(type_from(v, where));
  require_keys(v, where, {"center_dim", "factors"}, {"factors"});
  int center = 0;
  if (v.contains("center_dim")) {
    if (!v["center_dim"].is_number_integer() || v["center_dim"].get<long long>() < 0)
      throw SpecParseError(where + ".center_dim: expected a nonnegative integer");
    center = v["center_dim"].get<int>();
  }
  if (!v["factors"].is_array()) throw SpecParseError(where + ".factors: expected an array");
  std::vector<SimpleType> factors;
  for (const auto& f : v["factors"]) factors.push_back(type_from(f, where + ".factors"));
  return CompactAlgebra(center, std::move(factors));
}

std::vector<int> permutation_from(const json& v, const std::string& where) {
  if (!v.is_array()) throw SpecParseError(where + ": expected an array of node labels");
  std::vector<int> out;
  for (const auto& x : v) {
    if (!x.is_number_integer()) throw SpecParseError(where + ": expected integers");
    out.push_back(x.get<int>());
  }
  return out;
}

}  // namespace

PairDocument parse_pair_document(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SpecParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw SpecParseError("document: expected a JSON object");
  if (!doc.contains("construction") || !doc["construction"].is_string())
    throw SpecParseError("document: missing field 'construction'");
  std::string kind = doc["construction"].get<std::string>();

  std::string label;
  if (doc.contains("label")) {
    if (!doc["label"].is_string()) throw SpecParseError("label: expected a string");
    label = doc["label"].get<std::string>();
  }
  std::optional<PairSpec> parsed;

  if (kind == "fold") {
    require_keys(doc, "fold", {"construction", "label", "g_type", "permutation"}, {"g_type"});
    FoldSpec spec{type_from(doc["g_type"], "g_type"), {}};
    if (doc.contains("permutation"))
      spec.permutation = permutation_from(doc["permutation"], "permutation");
    parsed = std::move(spec);
  } else if (kind == "circle") {
    require_keys(doc, "circle", {"construction", "label", "g", "direction", "coords"},
                 {"g", "direction"});
    CircleSpec spec{algebra_from(doc["g"], "g"), {}, false};
    if (!doc["direction"].is_array())
      throw SpecParseError("direction: expected an array");
    for (const auto& x : doc["direction"])
      spec.direction.push_back(rational_from(x, "direction"));
    if (doc.contains("coords")) {
      std::string c = doc["coords"].get<std::string>();
      if (c == "trace_zero")
        spec.trace_zero = true;
      else if (c != "simple")
        throw SpecParseError("coords: expected \"simple\" or \"trace_zero\"");
    }
    parsed = std::move(spec);
  } else if (kind == "regular") {
    require_keys(doc, "regular", {"construction", "label", "g", "sub_roots", "extra_center"},
                 {"g"});
    RegularSpec spec{algebra_from(doc["g"], "g"), {}, 0};
    if (doc.contains("sub_roots")) {
      if (!doc["sub_roots"].is_array()) throw SpecParseError("sub_roots: expected an array");
      for (const auto& row : doc["sub_roots"]) {
        if (!row.is_array()) throw SpecParseError("sub_roots: expected arrays of integers");
        std::vector<int> r;
        for (const auto& x : row) {
          if (!x.is_number_integer()) throw SpecParseError("sub_roots: expected integers");
          r.push_back(x.get<int>());
        }
        spec.sub_roots.push_back(std::move(r));
      }
    }
    if (doc.contains("extra_center")) {
      if (!doc["extra_center"].is_number_integer() || doc["extra_center"].get<long long>() < 0)
        throw SpecParseError("extra_center: expected a nonnegative integer");
      spec.extra_center = doc["extra_center"].get<int>();
    }
    parsed = std::move(spec);
  } else if (kind == "product") {
    require_keys(doc, "product", {"construction", "label", "center_dim", "blocks"}, {});
    ProductPermSpec spec;
    if (doc.contains("center_dim")) {
      if (!doc["center_dim"].is_number_integer() || doc["center_dim"].get<long long>() < 0)
        throw SpecParseError("center_dim: expected a nonnegative integer");
      spec.center_dim = doc["center_dim"].get<int>();
    }
    if (doc.contains("blocks")) {
      if (!doc["blocks"].is_array()) throw SpecParseError("blocks: expected an array");
      for (const auto& b : doc["blocks"]) {
        require_keys(b, "blocks[]", {"factor", "copies", "return_automorphism"}, {"factor"});
        ProductBlockSpec blk{type_from(b["factor"], "blocks[].factor"), 1, {}};
        if (b.contains("copies")) {
          if (!b["copies"].is_number_integer() || b["copies"].get<long long>() < 1)
            throw SpecParseError("blocks[].copies: expected a positive integer");
          blk.copies = b["copies"].get<int>();
        }
        if (b.contains("return_automorphism"))
          blk.return_automorphism =
              permutation_from(b["return_automorphism"], "blocks[].return_automorphism");
        spec.blocks.push_back(std::move(blk));
      }
    }
    parsed = std::move(spec);
  } else {
    throw SpecParseError("construction: expected one of \"fold\", \"circle\", \"regular\", "
                         "\"product\", got \"" + kind + "\"");
  }
  return PairDocument{std::move(*parsed), std::move(label)};
}

namespace {

ordered_json algebra_to_json(const CompactAlgebra& a) {
  ordered_json g;
  g["center_dim"] = a.center_dim;
  ordered_json factors = ordered_json::array();
  for (const auto& t : a.factors) factors.push_back(t.str());
  g["factors"] = std::move(factors);
  return g;
}

}  // namespace

ordered_json report_to_json(const FormalityReport& r) {
  ordered_json j;
  j["label"] = r.label;
  j["construction"] = r.construction;
  j["g"] = algebra_to_json(r.g);
  j["rank_g"] = r.rank_g;
  j["rank_k"] = r.rank_k;
  j["g_degrees"] = r.g_degrees;
  j["k_degrees"] = r.k_degrees;
  j["samelson_degrees"] = r.samelson;
  j["k_weyl_order"] = r.k_weyl_order;
  j["dim_image_weil"] = r.dim_image;
  j["dim_quotient"] = r.dim_quotient;
  j["fp_available"] = r.fp_available;
  if (r.fp_available) {
    j["fp_h_size"] = r.fp_h_size;
    j["fp_components"] = r.fp_components;
    j["fp_dim"] = r.fp_dim;
  } else {
    j["fp_h_size"] = nullptr;
    j["fp_components"] = nullptr;
    j["fp_dim"] = nullptr;
  }
  if (r.formal.has_value())
    j["formal"] = *r.formal;
  else
    j["formal"] = nullptr;
  if (r.fixed_set_connected.has_value())
    j["fixed_set_connected"] = *r.fixed_set_connected;
  else
    j["fixed_set_connected"] = nullptr;
  j["ncz"] = r.ncz;
  j["cartan_pair_license"] = r.cartan_pair_license;
  j["warnings"] = r.warnings;
  ordered_json blocks = ordered_json::array();
  for (const auto& b : r.blocks) blocks.push_back(report_to_json(b));
  j["blocks"] = std::move(blocks);
  return j;
}

namespace {

std::string degrees_str(const std::vector<int>& d) {
  std::string out = "{";
  for (std::size_t i = 0; i < d.size(); ++i) out += (i ? "," : "") + std::to_string(d[i]);
  return out + "}";
}

std::string verdict_str(const std::optional<bool>& v) {
  if (!v.has_value()) return "UNKNOWN";
  return *v ? "YES" : "NO";
}

}  // namespace

std::string report_to_text(const FormalityReport& r) {
  std::ostringstream os;
  os << "pair: " << (r.label.empty() ? r.provenance : r.label) << "\n";
  os << "construction: " << r.construction << "  [" << r.provenance << "]\n";
  os << "G = " << r.g.str() << " (rank " << r.rank_g << "), rank K = " << r.rank_k
     << ", |W(K)| = " << r.k_weyl_order << "\n";
  os << "degrees: G " << degrees_str(r.g_degrees) << ", K " << degrees_str(r.k_degrees)
     << ", surviving " << degrees_str(r.samelson) << "\n";
  os << "dim H*(G/K) = " << r.dim_quotient << "  [weil-image " << r.dim_image << " x 2^"
     << r.samelson.size() << "]\n";
  if (r.fp_available) {
    os << "fixed-point side: |H| = " << r.fp_h_size << ", components = " << r.fp_components
       << ", dim = " << r.fp_dim << "  [normalizer-components / |W(K)|]\n";
  } else {
    os << "fixed-point side: unavailable  [enumeration capped]\n";
  }
  for (const auto& w : r.warnings) os << "warning: " << w << "\n";
  os << "cartan pair: YES  [" << r.cartan_pair_license << "]\n";
  os << "fixed set connected: " << verdict_str(r.fixed_set_connected) << "\n";
  os << "non-cohomologous to zero: " << (r.ncz ? "YES" : "NO") << "  [dimension-identity]\n";
  if (r.formal.has_value() && r.fp_available) {
    os << "equivariantly formal: " << (*r.formal ? "YES" : "NO") << " (" << r.dim_quotient
       << (*r.formal ? " = " : " ≠ ") << r.fp_dim << ")";
  } else if (r.formal.has_value()) {
    os << "equivariantly formal: " << (*r.formal ? "YES" : "NO") << " [" << r.cartan_pair_license
       << "]";
  } else {
    os << "equivariantly formal: UNKNOWN (fixed-point side unavailable)";
  }
  os << "\n";
  return os.str();
}

}  // namespace isoform
