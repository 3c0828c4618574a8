#include "idla/cli/envelope.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace idla::cli {

Field Field::decimal(double value) {
  if (!std::isfinite(value)) return Field(Kind::kText, value > 0 ? "inf" : (value < 0 ? "-inf" : "nan"));
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.12g", value);
  return Field(Kind::kDecimal, buffer);
}

nlohmann::ordered_json Field::to_json() const {
  switch (kind_) {
    case Kind::kNull: return nullptr;
    case Kind::kInteger: {
      if (text_.size() < 19) return std::stoll(text_);
      return text_;  // beyond 64-bit range: keep the digits exact
    }
    case Kind::kDecimal: return std::stod(text_);
    case Kind::kBoolean: return text_ == "true";
    case Kind::kRational:
    case Kind::kText: return text_;
  }
  return nullptr;
}

nlohmann::ordered_json OutputEnvelope::to_json() const {
  nlohmann::ordered_json doc;
  doc["format_version"] = kFormatVersion;
  doc["command"] = command;
  auto& params = doc["parameters"] = nlohmann::ordered_json::object();
  for (const auto& [key, value] : parameters) params[key] = value;
  if (!summary.empty()) {
    auto& block = doc["summary"] = nlohmann::ordered_json::object();
    for (const auto& [key, value] : summary) block[key] = value.to_json();
  }
  auto& out_rows = doc["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : rows) {
    nlohmann::ordered_json record = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < columns.size() && i < row.size(); ++i) record[columns[i]] = row[i].to_json();
    out_rows.push_back(std::move(record));
  }
  return doc;
}

std::string OutputEnvelope::to_csv() const {
  std::ostringstream os;
  os << "# format_version=" << kFormatVersion << "\n";
  os << "# command=" << command << "\n";
  for (const auto& [key, value] : parameters) os << "# parameter." << key << "=" << value << "\n";
  for (const auto& [key, value] : summary) os << "# summary." << key << "=" << value.str() << "\n";
  for (std::size_t i = 0; i < columns.size(); ++i) os << (i ? "," : "") << columns[i];
  os << "\n";
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << row[i].str();
    os << "\n";
  }
  return os.str();
}

std::string render(const OutputEnvelope& envelope, Format format) {
  if (format == Format::kJson) return envelope.to_json().dump(2) + "\n";
  return envelope.to_csv();
}

}  // namespace idla::cli
