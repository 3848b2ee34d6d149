#include <cmath>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include <json.hpp>

#include "jacobi/cli.hpp"

namespace jacobi::cli {

using nlohmann::json;

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& what)
    : InputError("parse error at line " + std::to_string(line) + ", column " + std::to_string(column) +
            ": " + what),
      line_(line),
      column_(column) {}

SchemaError::SchemaError(std::string field, const std::string& what)
    : InputError("schema error: field '" + field + "': " + what), field_(std::move(field)) {}

namespace {

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    // e.byte is 1-based and points just past the offending character.
    const std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string what = e.what();
    if (const auto pos = what.find(": "); pos != std::string::npos) what = what.substr(pos + 2);
    throw ParseError(line, column, what);
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void expect_fields(const json& obj, const std::set<std::string>& fields) {
  for (const auto& [key, _] : obj.items()) {
    if (!fields.contains(key)) throw SchemaError(key, "unexpected field");
  }
  for (const auto& f : fields) {
    if (!obj.contains(f)) throw SchemaError(f, "missing field");
  }
}

double number(const json& obj, const std::string& field) {
  const json& v = obj.at(field);
  if (!v.is_number()) throw SchemaError(field, "expected a number");
  return v.get<double>();
}

std::size_t count(const json& obj, const std::string& field) {
  const json& v = obj.at(field);
  if (v.is_number_unsigned()) return v.get<std::size_t>();
  if (v.is_number_integer() && v.get<std::int64_t>() >= 0) return v.get<std::size_t>();
  if (v.is_number_float()) {
    const double d = v.get<double>();
    if (d >= 0 && d == std::floor(d) && d < 9.0e15) return static_cast<std::size_t>(d);
  }
  throw SchemaError(field, "expected a nonnegative integer");
}

std::vector<double> numbers(const json& v, const std::string& field) {
  if (!v.is_array()) throw SchemaError(field, "expected an array of numbers");
  std::vector<double> out;
  out.reserve(v.size());
  for (const auto& x : v) {
    if (!x.is_number()) throw SchemaError(field, "expected an array of numbers");
    out.push_back(x.get<double>());
  }
  return out;
}

std::vector<double> sized(const json& obj, const std::string& field, std::size_t len) {
  auto v = numbers(obj.at(field), field);
  if (v.size() != len) {
    throw SchemaError(field, "expected " + std::to_string(len) + " entries, got " +
                                 std::to_string(v.size()));
  }
  return v;
}

}  // namespace

Instance parse_instance_text(std::string_view text) {
  const json obj = parse_json(text);
  if (!obj.is_object()) throw SchemaError("(root)", "expected a JSON object");
  if (obj.contains("n")) {
    expect_fields(obj, {"n", "a", "b", "c"});
    const std::size_t n = count(obj, "n");
    if (n > std::numeric_limits<std::size_t>::max() / 4) throw SchemaError("n", "too large");
    auto a = sized(obj, "a", n + 1);
    auto b = sized(obj, "b", n + 2);
    auto c = sized(obj, "c", n + 1);
    return JacobiCoefficients(n, std::move(a), std::move(b), std::move(c));
  }
  if (obj.contains("gamma")) {
    expect_fields(obj, {"alpha", "beta", "gamma", "size"});
    ToeplitzSpec spec{number(obj, "alpha"), number(obj, "beta"), number(obj, "gamma"),
                      count(obj, "size")};
    spec.validate();
    return spec;
  }
  if (obj.contains("alpha") || obj.contains("beta") || obj.contains("size")) {
    expect_fields(obj, {"alpha", "beta", "size"});
    SymmetricSpec spec{number(obj, "alpha"), number(obj, "beta"), count(obj, "size")};
    ToeplitzSpec{spec.alpha, spec.beta, spec.alpha, spec.size}.validate();
    return spec;
  }
  throw SchemaError("n", "missing field (expected {n,a,b,c}, {alpha,beta,gamma,size} or "
                         "{alpha,beta,size})");
}

Instance parse_instance(const std::string& path) { return parse_instance_text(read_file(path)); }

std::vector<double> parse_vector_text(std::string_view text) {
  return numbers(parse_json(text), "rhs");
}

std::vector<double> parse_vector(const std::string& path) {
  return parse_vector_text(read_file(path));
}

JacobiCoefficients to_coefficients(const Instance& instance) {
  if (const auto* j = std::get_if<JacobiCoefficients>(&instance)) return *j;
  if (const auto* t = std::get_if<ToeplitzSpec>(&instance)) return t->to_coefficients();
  const auto& s = std::get<SymmetricSpec>(instance);
  return ToeplitzSpec{s.alpha, s.beta, s.alpha, s.size}.to_coefficients();
}

}  // namespace jacobi::cli
