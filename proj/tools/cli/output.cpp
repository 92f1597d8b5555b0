#include "output.hpp"

#include "pext/types.hpp"

#include <sstream>

namespace pext::cli {

Json OutputDocument::to_json() const {
  Json diags = Json::array();
  for (const auto& d : diagnostics) diags.push_back({{"kind", d.kind}, {"subject", d.subject}, {"message", d.message}});
  return {
      {"schema", kSchema}, {"command", command}, {"inputs", inputs}, {"results", results}, {"diagnostics", diags},
  };
}

OutputDocument OutputDocument::from_json(const Json& json) {
  if (!json.is_object() || !json.contains("schema") || json.at("schema") != kSchema)
    throw ArgumentError("output document: missing or unsupported schema");
  for (const char* key : {"command", "inputs", "results", "diagnostics"})
    if (!json.contains(key)) throw ArgumentError(std::string("output document: missing field ") + key);
  OutputDocument doc;
  try {
    doc.command = json.at("command").get<std::string>();
    doc.inputs = json.at("inputs");
    doc.results = json.at("results");
    for (const auto& d : json.at("diagnostics"))
      doc.diagnostics.push_back(
          {d.at("kind").get<std::string>(), d.at("subject").get<std::string>(), d.at("message").get<std::string>()});
  } catch (const Json::exception& e) {
    throw ArgumentError(std::string("output document: ") + e.what());
  }
  if (!doc.inputs.is_object() || !doc.results.is_object())
    throw ArgumentError("output document: inputs and results must be objects");
  return doc;
}

std::string OutputDocument::dump_json() const { return to_json().dump(2) + "\n"; }

namespace {

std::string scalar(const Json& value) {
  if (value.is_string()) return value.get<std::string>();
  if (value.is_null()) return "-";
  return value.dump();
}

bool all_scalars(const Json& array) {
  for (const auto& v : array)
    if (v.is_structured()) return false;
  return true;
}

void render(std::ostringstream& out, const std::string& indent, const Json& object) {
  for (const auto& [key, value] : object.items()) {
    if (value.is_object()) {
      out << indent << key << ":\n";
      render(out, indent + "  ", value);
    } else if (value.is_array() && all_scalars(value)) {
      out << indent << key << ":";
      for (const auto& v : value) out << ' ' << scalar(v);
      out << '\n';
    } else if (value.is_array()) {
      out << indent << key << ":\n";
      for (const auto& item : value) {
        out << indent << "  -";
        if (item.is_object()) {
          for (const auto& [k, v] : item.items()) out << ' ' << k << '=' << (v.is_structured() ? v.dump() : scalar(v));
        } else {
          out << ' ' << scalar(item);
        }
        out << '\n';
      }
    } else {
      out << indent << key << ": " << scalar(value) << '\n';
    }
  }
}

} // namespace

std::string OutputDocument::render_text() const {
  std::ostringstream out;
  out << command;
  for (const auto& [key, value] : inputs.items()) out << ' ' << key << '=' << scalar(value);
  out << '\n';
  render(out, "  ", results);
  for (const auto& d : diagnostics) out << "  [" << d.kind << "] " << d.subject << ": " << d.message << '\n';
  return out.str();
}

bool OutputDocument::operator==(const OutputDocument& other) const {
  return command == other.command && inputs == other.inputs && results == other.results &&
         diagnostics == other.diagnostics;
}

} // namespace pext::cli
