#pragma once

#include "pext/diagnostic.hpp"

#include <json.hpp>

#include <string>

namespace pext::cli {

inline constexpr const char* kSchema = "pext.output/1";

using Json = nlohmann::ordered_json;

enum ExitCode : int {
  kExitSuccess = 0,
  kExitArgument = 2,
  kExitAssertion = 3,
  kExitCapacity = 4,
};

/// Result of one command. Counts inside `results` are always decimal strings.
struct OutputDocument {
  std::string command;
  Json inputs = Json::object();
  Json results = Json::object();
  Diagnostics diagnostics;

  Json to_json() const;
  /// Throws ArgumentError when the document does not follow the schema.
  static OutputDocument from_json(const Json& json);

  /// Pretty-printed JSON with a trailing newline; stable for equal documents.
  std::string dump_json() const;
  std::string render_text() const;

  bool operator==(const OutputDocument& other) const;
};

} // namespace pext::cli
