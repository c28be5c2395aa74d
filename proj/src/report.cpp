#include "sclkit/report.hpp"

#include <algorithm>

#include "sclkit/errors.hpp"

namespace sclkit {

std::string Report::to_json_line() const { return obj_.dump() + "\n"; }

namespace {

std::string scalar_text(const nlohmann::ordered_json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

}  // namespace

std::string Report::to_table() const {
  std::size_t width = 0;
  for (const auto& item : obj_.items()) width = std::max(width, item.key().size());
  std::string out;
  for (const auto& item : obj_.items()) {
    out += item.key();
    out.append(width - item.key().size() + 2, ' ');
    out += scalar_text(item.value());
    out += "\n";
  }
  return out;
}

std::string Report::render(const std::string& format) const {
  if (format == "json") return to_json_line();
  if (format == "table") return to_table();
  throw DomainError("unknown output format '" + format + "' (expected json or table)");
}

}  // namespace sclkit
