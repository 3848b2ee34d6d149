#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "jacobi/coefficients.hpp"
#include "jacobi/errors.hpp"
#include "jacobi/jacobi_inverse.hpp"

/// Batch front end: instance files in, JSON or CSV reports out.
namespace jacobi::cli {

enum ExitCode : int { kSuccess = 0, kSingular = 1, kInvalidInput = 2, kNumericalFailure = 3 };

/// Anything wrong with the files or flags handed to the tool.
class InputError : public Error {
 public:
  using Error::Error;
};

/// Malformed JSON; line and column are 1-based.
class ParseError : public InputError {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what);
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Well-formed JSON that does not match any instance variant.
class SchemaError : public InputError {
 public:
  SchemaError(std::string field, const std::string& what);
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

struct SymmetricSpec {
  double alpha = 0.0;
  double beta = 0.0;
  std::size_t size = 0;
};

/// {n, a, b, c} | {alpha, beta, gamma, size} | {alpha, beta, size}
using Instance = std::variant<JacobiCoefficients, ToeplitzSpec, SymmetricSpec>;

Instance parse_instance_text(std::string_view text);
Instance parse_instance(const std::string& path);
/// A plain JSON array of numbers.
std::vector<double> parse_vector_text(std::string_view text);
std::vector<double> parse_vector(const std::string& path);

JacobiCoefficients to_coefficients(const Instance& instance);

/// Runs one subcommand; args excludes the program name. The payload goes to
/// out (or to --output), diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// %.17g, the format shared by every JSON and CSV number.
std::string format_number(double x);

}  // namespace jacobi::cli
