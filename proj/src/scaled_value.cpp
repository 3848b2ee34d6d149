#include "jacobi/scaled_value.hpp"

#include <cmath>
#include <limits>

#include "jacobi/errors.hpp"

namespace jacobi {

namespace {
// Beyond this exponent gap the smaller addend cannot change the result.
constexpr std::int64_t kNegligibleGap = 1100;
}  // namespace

ScaledValue::ScaledValue(double value) {
  if (!std::isfinite(value)) {
    throw NonFiniteInput("ScaledValue: non-finite input");
  }
  mantissa_ = value;
  normalize();
}

ScaledValue::ScaledValue(double mantissa, std::int64_t exponent) noexcept
    : mantissa_(mantissa), exponent_(exponent) {
  normalize();
}

ScaledValue ScaledValue::from_log2(int sign, double log2_magnitude) {
  if (sign == 0) return {};
  if (!std::isfinite(log2_magnitude)) {
    throw NonFiniteInput("ScaledValue::from_log2: non-finite exponent");
  }
  const double whole = std::floor(log2_magnitude);
  const double frac = std::exp2(log2_magnitude - whole);  // [1, 2)
  return {sign > 0 ? frac : -frac, static_cast<std::int64_t>(whole)};
}

void ScaledValue::normalize() noexcept {
  if (mantissa_ == 0.0) {
    mantissa_ = 0.0;
    exponent_ = 0;
    return;
  }
  int e = 0;
  mantissa_ = std::frexp(mantissa_, &e);
  exponent_ += e;
}

double ScaledValue::log2_magnitude() const noexcept {
  if (is_zero()) return -std::numeric_limits<double>::infinity();
  return static_cast<double>(exponent_) + std::log2(std::fabs(mantissa_));
}

bool ScaledValue::fits_double() const noexcept {
  return is_zero() || exponent_ <= std::numeric_limits<double>::max_exponent;
}

std::optional<double> ScaledValue::try_to_double() const noexcept {
  if (!fits_double()) return std::nullopt;
  if (is_zero()) return 0.0;
  if (exponent_ < -kNegligibleGap) return std::copysign(0.0, mantissa_);
  return std::ldexp(mantissa_, static_cast<int>(exponent_));
}

double ScaledValue::to_double() const {
  if (auto v = try_to_double()) return *v;
  throw Overflow("ScaledValue: magnitude 2^" + std::to_string(log2_magnitude()) +
                 " exceeds the double range");
}

ScaledValue ScaledValue::abs() const noexcept {
  ScaledValue r = *this;
  r.mantissa_ = std::fabs(r.mantissa_);
  return r;
}

ScaledValue ScaledValue::operator-() const noexcept {
  ScaledValue r = *this;
  r.mantissa_ = -r.mantissa_;
  return r;
}

ScaledValue& ScaledValue::operator*=(const ScaledValue& rhs) noexcept {
  if (is_zero() || rhs.is_zero()) {
    *this = ScaledValue{};
    return *this;
  }
  mantissa_ *= rhs.mantissa_;
  exponent_ += rhs.exponent_;
  normalize();
  return *this;
}

ScaledValue& ScaledValue::operator/=(const ScaledValue& rhs) {
  if (rhs.is_zero()) throw Overflow("ScaledValue: division by zero");
  if (is_zero()) return *this;
  mantissa_ /= rhs.mantissa_;
  exponent_ -= rhs.exponent_;
  normalize();
  return *this;
}

ScaledValue& ScaledValue::operator+=(const ScaledValue& rhs) noexcept {
  if (rhs.is_zero()) return *this;
  if (is_zero()) {
    *this = rhs;
    return *this;
  }
  const ScaledValue& big = exponent_ >= rhs.exponent_ ? *this : rhs;
  const ScaledValue& small = exponent_ >= rhs.exponent_ ? rhs : *this;
  const std::int64_t gap = big.exponent_ - small.exponent_;
  if (gap > kNegligibleGap) {
    *this = big;
    return *this;
  }
  const double m = big.mantissa_ + std::ldexp(small.mantissa_, -static_cast<int>(gap));
  *this = ScaledValue(m, big.exponent_);
  return *this;
}

ScaledValue& ScaledValue::operator-=(const ScaledValue& rhs) noexcept {
  return *this += -rhs;
}

ScaledValue ScaledValue::pow(const ScaledValue& base, std::int64_t e) {
  if (e == 0) return one();
  if (e < 0) return one() / pow(base, -e);
  ScaledValue result = one();
  ScaledValue square = base;
  while (e > 0) {
    if (e & 1) result *= square;
    e >>= 1;
    if (e > 0) square *= square;
  }
  return result;
}

bool magnitude_less(const ScaledValue& lhs, const ScaledValue& rhs) noexcept {
  if (rhs.is_zero()) return false;
  if (lhs.is_zero()) return true;
  if (lhs.exponent() != rhs.exponent()) return lhs.exponent() < rhs.exponent();
  return std::fabs(lhs.mantissa()) < std::fabs(rhs.mantissa());
}

ScaledValue max_magnitude(const ScaledValue& lhs, const ScaledValue& rhs) noexcept {
  return magnitude_less(lhs, rhs) ? rhs.abs() : lhs.abs();
}

double relative_difference(const ScaledValue& lhs, const ScaledValue& rhs) {
  const ScaledValue ref = max_magnitude(lhs, rhs);
  if (ref.is_zero()) return 0.0;
  return ((lhs - rhs).abs() / ref).to_double();
}

std::ostream& operator<<(std::ostream& os, const ScaledValue& v) {
  if (auto d = v.try_to_double()) return os << *d;
  return os << (v.sign() < 0 ? "-" : "") << "2^" << v.log2_magnitude();
}

}  // namespace jacobi
