#include "report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace jacobi::cli {

std::string format_number(double x) {
  if (!std::isfinite(x)) return "null";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    switch (ch) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(ch) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", ch);
          out += buf;
        } else {
          out += ch;
        }
    }
  }
  return out + "\"";
}

std::string row(std::span<const double> values) {
  std::string out = "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ", ";
    out += format_number(values[i]);
  }
  return out + "]";
}

}  // namespace

void Report::text(const std::string& key, const std::string& value) {
  fields_.emplace_back(key, quote(value));
}

void Report::integer(const std::string& key, long long value) {
  fields_.emplace_back(key, std::to_string(value));
}

void Report::boolean(const std::string& key, bool value) {
  fields_.emplace_back(key, value ? "true" : "false");
}

void Report::number(const std::string& key, double value) {
  fields_.emplace_back(key, format_number(value));
}

void Report::scaled(const std::string& key, const ScaledValue& value) {
  if (const auto d = value.try_to_double()) {
    number(key, *d);
    return;
  }
  fields_.emplace_back(key, "null");
  number(key + "_log2", value.log2_magnitude());
  integer(key + "_sign", value.sign());
}

void Report::vector(const std::string& key, std::span<const double> values) {
  fields_.emplace_back(key, row(values));
}

void Report::matrix(const std::string& key, const DenseMatrix& m) {
  // Rows are indented when the report is rendered; "\n" marks the breaks.
  std::string out = "[";
  for (std::size_t r = 0; r < m.order(); ++r) {
    out += r ? ",\n  " : "\n  ";
    out += row(m.row(r));
  }
  fields_.emplace_back(key, out + "\n]");
}

void Report::object(const std::string& key, const Report& nested) {
  fields_.emplace_back(key, nested.str());
}

void Report::array(const std::string& key, const std::vector<Report>& items) {
  std::string out = "[";
  for (std::size_t i = 0; i < items.size(); ++i) {
    out += i ? ",\n  " : "\n  ";
    std::string item = items[i].str();
    for (std::size_t p = 0; (p = item.find('\n', p)) != std::string::npos; p += 3) item.replace(p, 1, "\n  ");
    out += item;
  }
  fields_.emplace_back(key, items.empty() ? "[]" : out + "\n]");
}

std::string Report::str(int indent) const {
  const std::string pad(static_cast<std::size_t>(indent) + 2, ' ');
  std::string out = "{";
  for (std::size_t i = 0; i < fields_.size(); ++i) {
    out += i ? ",\n" : "\n";
    std::string value = fields_[i].second;
    for (std::size_t p = 0; (p = value.find('\n', p)) != std::string::npos; p += pad.size() + 1) {
      value.replace(p, 1, "\n" + pad);
    }
    out += pad + quote(fields_[i].first) + ": " + value;
  }
  return out + "\n" + std::string(static_cast<std::size_t>(indent), ' ') + "}";
}

}  // namespace jacobi::cli
