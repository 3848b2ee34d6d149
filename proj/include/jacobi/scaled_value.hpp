#pragma once

#include <cstdint>
#include <optional>
#include <ostream>

namespace jacobi {

/// Real number stored as sign * 2^log2_magnitude.
///
/// Internally the value is a binary64 mantissa with |m| in [0.5, 1) and an
/// unbounded 64-bit exponent, so long products and three-term recurrences
/// never overflow or underflow. Conversion back to double is exact whenever
/// the result is in range.
class ScaledValue {
 public:
  constexpr ScaledValue() noexcept = default;
  /// Throws NonFiniteInput for inf/nan.
  explicit ScaledValue(double value);

  static ScaledValue from_log2(int sign, double log2_magnitude);
  static ScaledValue one() noexcept { return ScaledValue(1.0); }

  int sign() const noexcept { return (mantissa_ > 0) - (mantissa_ < 0); }
  bool is_zero() const noexcept { return mantissa_ == 0.0; }
  /// -inf for zero.
  double log2_magnitude() const noexcept;
  double mantissa() const noexcept { return mantissa_; }
  std::int64_t exponent() const noexcept { return exponent_; }

  bool fits_double() const noexcept;
  std::optional<double> try_to_double() const noexcept;
  /// Throws Overflow when the magnitude exceeds the binary64 range.
  double to_double() const;

  ScaledValue abs() const noexcept;
  ScaledValue operator-() const noexcept;

  ScaledValue& operator*=(const ScaledValue& rhs) noexcept;
  ScaledValue& operator/=(const ScaledValue& rhs);
  ScaledValue& operator+=(const ScaledValue& rhs) noexcept;
  ScaledValue& operator-=(const ScaledValue& rhs) noexcept;

  friend ScaledValue operator*(ScaledValue lhs, const ScaledValue& rhs) noexcept { return lhs *= rhs; }
  friend ScaledValue operator/(ScaledValue lhs, const ScaledValue& rhs) { return lhs /= rhs; }
  friend ScaledValue operator+(ScaledValue lhs, const ScaledValue& rhs) noexcept { return lhs += rhs; }
  friend ScaledValue operator-(ScaledValue lhs, const ScaledValue& rhs) noexcept { return lhs -= rhs; }

  friend bool operator==(const ScaledValue&, const ScaledValue&) = default;

  /// base^e for any integer exponent; 0^0 = 1.
  static ScaledValue pow(const ScaledValue& base, std::int64_t e);

 private:
  ScaledValue(double mantissa, std::int64_t exponent) noexcept;
  void normalize() noexcept;

  double mantissa_ = 0.0;
  std::int64_t exponent_ = 0;
};

/// |lhs| < |rhs|.
bool magnitude_less(const ScaledValue& lhs, const ScaledValue& rhs) noexcept;
ScaledValue max_magnitude(const ScaledValue& lhs, const ScaledValue& rhs) noexcept;
/// |lhs - rhs| / max(|lhs|, |rhs|); 0 when both are zero.
double relative_difference(const ScaledValue& lhs, const ScaledValue& rhs);

std::ostream& operator<<(std::ostream& os, const ScaledValue& v);

}  // namespace jacobi
