#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sseamp/graph.hpp"

namespace sseamp {

enum class ReportFormat { Text, Records };

/// One report record: a kind plus ordered key/value fields. In record format
/// it prints as a single line "kind key=value key=value ..."; lists are
/// comma-separated and reals use 17 significant digits.
class Record {
 public:
  explicit Record(std::string kind) : kind_(std::move(kind)) {}

  Record& add(std::string_view key, std::string_view value);
  Record& add(std::string_view key, const char* value) { return add(key, std::string_view(value)); }
  Record& add(std::string_view key, double value);
  Record& add(std::string_view key, std::size_t value);
  Record& add(std::string_view key, int value);
  Record& add(std::string_view key, bool value);
  Record& add(std::string_view key, std::span<const Vertex> values);
  Record& add(std::string_view key, std::span<const double> values);
  Record& add(std::string_view key, const VertexSet& set);

  const std::string& kind() const noexcept { return kind_; }
  const std::vector<std::pair<std::string, std::string>>& fields() const noexcept { return fields_; }

  std::string to_line() const;
  void write(std::ostream& out, ReportFormat format) const;

 private:
  std::string kind_;
  std::vector<std::pair<std::string, std::string>> fields_;
};

std::string format_real(double value);

}  // namespace sseamp
