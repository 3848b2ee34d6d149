#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "jacobi/dense_matrix.hpp"
#include "jacobi/scaled_value.hpp"

namespace jacobi::cli {

std::string format_number(double x);

/// An ordered JSON object written with a fixed layout: one field per line,
/// matrices one row per line.
class Report {
 public:
  void text(const std::string& key, const std::string& value);
  void integer(const std::string& key, long long value);
  void boolean(const std::string& key, bool value);
  /// Non-finite values are written as null.
  void number(const std::string& key, double value);
  /// Writes key as a number when it fits a double, otherwise null plus
  /// key_log2 and key_sign.
  void scaled(const std::string& key, const ScaledValue& value);
  void vector(const std::string& key, std::span<const double> values);
  void matrix(const std::string& key, const DenseMatrix& m);
  void object(const std::string& key, const Report& nested);
  void array(const std::string& key, const std::vector<Report>& items);

  std::string str(int indent = 0) const;

 private:
  std::vector<std::pair<std::string, std::string>> fields_;
};

}  // namespace jacobi::cli
