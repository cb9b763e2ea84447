#include "sseamp/report.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

namespace sseamp {

std::string format_real(double value) {
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  if (std::isnan(value)) return "nan";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

Record& Record::add(std::string_view key, std::string_view value) {
  fields_.emplace_back(std::string(key), std::string(value));
  return *this;
}

Record& Record::add(std::string_view key, double value) { return add(key, std::string_view(format_real(value))); }

Record& Record::add(std::string_view key, std::size_t value) { return add(key, std::string_view(std::to_string(value))); }

Record& Record::add(std::string_view key, int value) { return add(key, std::string_view(std::to_string(value))); }

Record& Record::add(std::string_view key, bool value) { return add(key, std::string_view(value ? "true" : "false")); }

Record& Record::add(std::string_view key, std::span<const Vertex> values) {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(values[i]);
  }
  return add(key, std::string_view(s));
}

Record& Record::add(std::string_view key, std::span<const double> values) {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) s += ',';
    s += format_real(values[i]);
  }
  return add(key, std::string_view(s));
}

Record& Record::add(std::string_view key, const VertexSet& set) {
  const std::string k(key);
  add(k + "Members", std::span<const Vertex>(set.members));
  add(k + "Volume", set.volume);
  add(k + "Cut", set.cut_weight);
  return add(k + "Expansion", set.expansion);
}

std::string Record::to_line() const {
  std::string line = kind_;
  for (const auto& [k, v] : fields_) {
    line += ' ';
    line += k;
    line += '=';
    line += v;
  }
  return line;
}

void Record::write(std::ostream& out, ReportFormat format) const {
  if (format == ReportFormat::Records) {
    out << to_line() << '\n';
    return;
  }
  out << kind_ << ":\n";
  for (const auto& [k, v] : fields_) out << "  " << k << ": " << v << '\n';
}

}  // namespace sseamp
