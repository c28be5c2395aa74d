#pragma once

#include <string>
#include <utility>

#include <json.hpp>

namespace sclkit {

/// One result record for the command line: insertion-ordered key/value pairs
/// rendered either as a single JSON line (machine consumption, byte-stable
/// for identical inputs) or as an aligned two-column table.
class Report {
public:
  explicit Report(std::string op) { obj_["op"] = std::move(op); }

  template <typename T>
  Report& set(const std::string& key, T&& value) {
    obj_[key] = std::forward<T>(value);
    return *this;
  }

  const nlohmann::ordered_json& json() const noexcept { return obj_; }

  std::string to_json_line() const;
  std::string to_table() const;

  /// "json" or "table".
  std::string render(const std::string& format) const;

private:
  nlohmann::ordered_json obj_;
};

}  // namespace sclkit
