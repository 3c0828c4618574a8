#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "idla/algebra/rational.hpp"

namespace idla::cli {

/// Bumped whenever a command's row schema changes.
inline constexpr const char* kFormatVersion = "1";

/// One cell of command output. Rationals keep their exact "a/b" text in
/// every encoding; decimals are rendered once so that CSV and JSON carry
/// the same digits.
class Field {
 public:
  enum class Kind { kNull, kInteger, kRational, kDecimal, kBoolean, kText };

  static Field null() { return Field(Kind::kNull, ""); }
  static Field integer(long long value) { return Field(Kind::kInteger, std::to_string(value)); }
  static Field integer(const algebra::BigInt& value) { return Field(Kind::kInteger, value.get_str()); }
  static Field rational(const algebra::Rational& value) { return Field(Kind::kRational, value.to_string()); }
  static Field decimal(double value);
  static Field boolean(bool value) { return Field(Kind::kBoolean, value ? "true" : "false"); }
  static Field text(std::string value) { return Field(Kind::kText, std::move(value)); }

  Kind kind() const { return kind_; }
  const std::string& str() const { return text_; }
  nlohmann::ordered_json to_json() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  Field(Kind kind, std::string text) : kind_(kind), text_(std::move(text)) {}

  Kind kind_;
  std::string text_;
};

/// Command output: parameters, an optional summary block and a table of
/// rows whose columns are fixed per command.
struct OutputEnvelope {
  std::string command;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::vector<std::pair<std::string, Field>> summary;
  std::vector<std::string> columns;
  std::vector<std::vector<Field>> rows;

  nlohmann::ordered_json to_json() const;

  /// Metadata and summary as leading "# key=value" lines, then a header row
  /// and one line per row.
  std::string to_csv() const;
};

enum class Format { kCsv, kJson };

std::string render(const OutputEnvelope& envelope, Format format);

}  // namespace idla::cli
