#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "vclass/coaisle.hpp"
#include "vclass/filtrations.hpp"

namespace vclass {

using json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

// Schema problems are reported as SchemaError("<json pointer>: <message>").
Spectrum spectrum_from_json(const json& j, const std::string& ptr = "/spectrum");
json spectrum_to_json(const Spectrum& s);

// A system is a list of ["p","q"] pairs and lex families
// {"family":"full_lex"|"points","param":P}, where P is a range "[0,1/2]" or
// {"ranges":["[0,1/2]"],"finite":["1"],"geometric":{"start":"1","ratio":"1/2","limit":"0"}}.
AdmissibleSystem system_from_json(const Spectrum& s, const json& j, const std::string& ptr);
json system_to_json(const AdmissibleSystem& x);
ParamSet params_from_json(const json& j, const std::string& ptr);
json params_to_json(const ParamSet& p);

AdmissibleFiltration filtration_from_json(const Spectrum& s, const json& j, const std::string& ptr = "/filtration");
json filtration_to_json(const AdmissibleFiltration& f);

// A whole input file: a spectrum plus a filtration and/or a single system.
struct Document {
  Spectrum spectrum;
  std::optional<AdmissibleFiltration> filtration;
  std::optional<AdmissibleSystem> system;
  json paper_verdicts;  // null when absent
};

Document document_from_json(const json& j);
json document_to_json(const Document& d);
// Throws std::runtime_error on I/O failure and SchemaError on bad content.
Document read_document(const std::string& path);
json read_json_file(const std::string& path);

json filtration_report_to_json(const FiltrationReport& r);
json validation_to_json(const ValidationReport& r);
json classification_to_json(const ClassificationReport& r);
json chain_to_json(const EpiChain& ch);
json generators_to_json(const std::vector<GeneratorDescriptor>& gs);
json location_to_json(const Spectrum& s, const Location& loc);
json gaps_to_json(const Spectrum& s, const GapSet& gs);

}  // namespace vclass
