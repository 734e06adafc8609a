#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <variant>
#include <vector>

namespace gabor::toml {

/// Value of the TOML subset used by run configurations: strings, numbers,
/// booleans and (possibly nested) arrays.
struct Value {
  std::variant<std::string, double, bool, std::vector<Value>> data;
  bool integer = false;
  int line = 0;

  bool is_string() const { return std::holds_alternative<std::string>(data); }
  bool is_number() const { return std::holds_alternative<double>(data); }
  bool is_bool() const { return std::holds_alternative<bool>(data); }
  bool is_array() const { return std::holds_alternative<std::vector<Value>>(data); }
};

/// Table name ("" for the root) -> key -> value.
using Document = std::map<std::string, std::map<std::string, Value>>;

Document parse(const std::string& text);
Document parse_file(const std::filesystem::path& path);

}  // namespace gabor::toml
