#pragma once

// Serialization: fan documents, the analysis report as JSON, and a
// line-oriented text form of the same data that parses back losslessly.

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "toricfold/classify.hpp"

namespace toricfold {

inline constexpr const char* kToolName = "toricfold";
inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kSchemaVersion = 1;

// Malformed fan document or report text.
class DocumentError : public Error {
 public:
  using Error::Error;
};

// {"name": optional string, "rays": [[x, y], ...]}. Ray validity is left to
// Fan2D::validate; only the shape of the document is checked here.
struct FanDocument {
  std::string name;
  std::vector<Vec2> rays;
};
FanDocument parse_fan_document(const std::string& text);
nlohmann::json fan_to_json(const Fan2D& f);

struct Provenance {
  std::string source;  // file path, catalog:<name> or random:<base>
  std::optional<std::uint64_t> seed;
};

nlohmann::json report_to_json(const FullReport& r, const Provenance& prov);

// One "pointer = value" line per leaf, where arrays of scalars count as
// leaves. Keys come out sorted, so the output is deterministic.
std::string json_to_text(const nlohmann::json& doc);
nlohmann::json json_from_text(const std::string& text);

}  // namespace toricfold
