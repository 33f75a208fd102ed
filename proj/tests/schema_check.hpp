#pragma once

// Small JSON Schema checker covering exactly the subset report.schema.json
// uses: type, enum, pattern, required, properties, additionalProperties,
// items, oneOf and "#/$defs/..." references. Returns a list of violations;
// empty means the document conforms.

#include <regex>
#include <string>
#include <vector>

#include "json.hpp"

namespace testsupport {

class SchemaChecker {
 public:
  using json = nlohmann::ordered_json;

  explicit SchemaChecker(json schema) : root_(std::move(schema)) {}

  std::vector<std::string> validate(const json& doc) const {
    std::vector<std::string> errors;
    check(root_, doc, "$", errors);
    return errors;
  }

 private:
  json root_;

  const json& resolve(const json& node) const {
    const json* cur = &node;
    while (cur->is_object() && cur->contains("$ref")) {
      const std::string ref = (*cur)["$ref"].get<std::string>();
      const std::string prefix = "#/$defs/";
      if (ref.rfind(prefix, 0) != 0)
        throw std::runtime_error("SchemaChecker: unsupported $ref '" + ref + "'");
      cur = &root_.at("$defs").at(ref.substr(prefix.size()));
    }
    return *cur;
  }

  static bool type_matches(const std::string& type, const json& doc) {
    if (type == "object") return doc.is_object();
    if (type == "array") return doc.is_array();
    if (type == "string") return doc.is_string();
    if (type == "boolean") return doc.is_boolean();
    if (type == "integer") return doc.is_number_integer();
    if (type == "number") return doc.is_number();
    throw std::runtime_error("SchemaChecker: unsupported type '" + type + "'");
  }

  void check(const json& schema_in, const json& doc, const std::string& path,
             std::vector<std::string>& errors) const {
    const json& schema = resolve(schema_in);

    if (schema.contains("oneOf")) {
      int matches = 0;
      for (const auto& branch : schema["oneOf"]) {
        std::vector<std::string> branch_errors;
        check(branch, doc, path, branch_errors);
        if (branch_errors.empty()) ++matches;
      }
      if (matches != 1)
        errors.push_back(path + ": " + std::to_string(matches) + " oneOf branches match");
      return;
    }

    if (schema.contains("enum")) {
      bool found = false;
      for (const auto& v : schema["enum"])
        if (v == doc) { found = true; break; }
      if (!found) errors.push_back(path + ": value not in enum");
      return;
    }

    if (schema.contains("type")) {
      const std::string type = schema["type"].get<std::string>();
      if (!type_matches(type, doc)) {
        errors.push_back(path + ": expected " + type);
        return;
      }
      if (type == "object") {
        if (schema.contains("required"))
          for (const auto& key : schema["required"])
            if (!doc.contains(key.get<std::string>()))
              errors.push_back(path + ": missing required key '" + key.get<std::string>() + "'");
        const json* props = schema.contains("properties") ? &schema["properties"] : nullptr;
        const bool closed =
            schema.contains("additionalProperties") && schema["additionalProperties"] == false;
        for (const auto& [key, value] : doc.items()) {
          if (props && props->contains(key)) check((*props)[key], value, path + "." + key, errors);
          else if (closed) errors.push_back(path + ": unexpected key '" + key + "'");
        }
      } else if (type == "array") {
        if (schema.contains("items")) {
          int i = 0;
          for (const auto& item : doc)
            check(schema["items"], item, path + "[" + std::to_string(i++) + "]", errors);
        }
      } else if (type == "string") {
        if (schema.contains("pattern")) {
          const std::regex re(schema["pattern"].get<std::string>());
          if (!std::regex_search(doc.get<std::string>(), re))
            errors.push_back(path + ": '" + doc.get<std::string>() + "' fails pattern");
        }
      }
    }
  }
};

}  // namespace testsupport
