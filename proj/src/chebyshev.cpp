#include "jacobi/chebyshev.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "jacobi/errors.hpp"

namespace jacobi::chebyshev {

namespace {

// Neumaier's compensated sum.
struct CompensatedSum {
  double sum = 0.0;
  double carry = 0.0;

  void add(double v) noexcept {
    const double t = sum + v;
    if (std::fabs(sum) >= std::fabs(v)) {
      carry += (sum - t) + v;
    } else {
      carry += (v - t) + sum;
    }
    sum = t;
  }
  double value() const noexcept { return sum + carry; }
};

void enumerate_supports(int last_allowed, int m, int next, std::vector<int>& current,
                        std::vector<std::vector<int>>& out) {
  if (static_cast<int>(current.size()) == m) {
    out.push_back(current);
    return;
  }
  const int remaining = m - static_cast<int>(current.size());
  // Remaining positions need 2 * (remaining - 1) slots after this one.
  for (int pos = next; pos + 2 * (remaining - 1) <= last_allowed; ++pos) {
    current.push_back(pos);
    enumerate_supports(last_allowed, m, pos + 2, current, out);
    current.pop_back();
  }
}

std::string index_error(const char* seq, int j, int offset) {
  return std::string("Chebyshev sequence ") + seq + "(" + std::to_string(j) + ") with offset " +
         std::to_string(offset) + " is outside the supplied data";
}

}  // namespace

std::vector<std::uint8_t> BinaryMultiIndex::complement() const {
  std::vector<std::uint8_t> bar(bits.size(), 1);
  for (int i : support) {
    bar[static_cast<std::size_t>(i - 1)] = 0;
    if (static_cast<std::size_t>(i) < bar.size()) bar[static_cast<std::size_t>(i)] = 0;
  }
  return bar;
}

std::vector<BinaryMultiIndex> enumerate_multi_indices(int p, int m) {
  if (p < 1) throw InvalidArity("multi-index order must be >= 1");
  if (m < 0 || m > p / 2) {
    throw InvalidArity("weight " + std::to_string(m) + " exceeds floor(" + std::to_string(p) +
                       "/2)");
  }
  std::vector<std::vector<int>> supports;
  std::vector<int> current;
  // alpha_p = 0 for m >= 1, so the last usable position is p-1.
  enumerate_supports(p - 1, m, 1, current, supports);

  std::vector<BinaryMultiIndex> result;
  result.reserve(supports.size());
  for (auto& sup : supports) {
    BinaryMultiIndex idx;
    idx.bits.assign(static_cast<std::size_t>(p), 0);
    for (int i : sup) idx.bits[static_cast<std::size_t>(i - 1)] = 1;
    idx.support = std::move(sup);
    result.push_back(std::move(idx));
  }
  return result;
}

double ChebSequences::x(int j) const {
  const long pos = static_cast<long>(j) + offset_;
  if (pos < 0 || pos >= static_cast<long>(x_.size())) throw IndexOutOfRange(index_error("x", j, offset_));
  return x_[static_cast<std::size_t>(pos)];
}

double ChebSequences::y(int j) const {
  const long pos = static_cast<long>(j) + offset_;
  if (pos < 0 || pos >= static_cast<long>(y_.size())) throw IndexOutOfRange(index_error("y", j, offset_));
  return y_[static_cast<std::size_t>(pos)];
}

DirectSum cheb_direct_terms(int k, const ChebSequences& s) {
  if (k < -1) throw IndexOutOfRange("Chebyshev function index must be >= -1");
  if (k == -1) return {0.0, 0.0};
  if (k == 0) return {1.0, 1.0};

  CompensatedSum total;
  double magnitude = 0.0;
  for (int m = 0; m <= k / 2; ++m) {
    CompensatedSum group;
    for (const auto& alpha : enumerate_multi_indices(k, m)) {
      const auto bar = alpha.complement();
      double term = 1.0;
      for (int j = 1; j <= k; ++j) {
        if (bar[static_cast<std::size_t>(j - 1)]) term *= s.x(j);
      }
      for (int i : alpha.support) term *= s.y(i);
      group.add(term);
      magnitude += std::fabs(term);
    }
    total.add(m % 2 == 0 ? group.value() : -group.value());
  }
  return {total.value(), magnitude};
}

double cheb_direct(int k, const ChebSequences& s) { return cheb_direct_terms(k, s).value; }

ChebTable cheb_prefix_table(int k_max, const ChebSequences& s) {
  if (k_max < -1) throw IndexOutOfRange("Chebyshev function index must be >= -1");
  std::vector<ScaledValue> p(static_cast<std::size_t>(k_max + 2));
  p[0] = ScaledValue{};
  if (k_max >= 0) p[1] = ScaledValue::one();
  for (int k = 1; k <= k_max; ++k) {
    const auto i = static_cast<std::size_t>(k + 1);
    ScaledValue next = ScaledValue(s.x(k)) * p[i - 1];
    if (k >= 2) next -= ScaledValue(s.y(k - 1)) * p[i - 2];
    p[i] = next;
  }
  return ChebTable(std::move(p));
}

ScaledValue cheb_recurrence(int k, const ChebSequences& s) {
  if (k < -1) throw IndexOutOfRange("Chebyshev function index must be >= -1");
  ScaledValue prev{};                    // P_{k-2}
  ScaledValue cur = k == -1 ? ScaledValue{} : ScaledValue::one();  // P_{k-1}
  for (int j = 1; j <= k; ++j) {
    ScaledValue next = ScaledValue(s.x(j)) * cur;
    if (j >= 2) next -= ScaledValue(s.y(j - 1)) * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

std::vector<ScaledValue> cheb_tail_table(int last, const ChebSequences& s) {
  if (last < -1) throw IndexOutOfRange("tail table needs last >= -1");
  std::vector<ScaledValue> t(static_cast<std::size_t>(last + 2));
  t[static_cast<std::size_t>(last + 1)] = ScaledValue{};
  if (last >= 0) t[static_cast<std::size_t>(last)] = ScaledValue::one();
  for (int k = last - 1; k >= 0; --k) {
    const auto i = static_cast<std::size_t>(k);
    ScaledValue next = ScaledValue(s.x(k + 1)) * t[i + 1];
    if (k + 2 <= last) next -= ScaledValue(s.y(k + 1)) * t[i + 2];
    t[i] = next;
  }
  return t;
}

double cheb_u(int k, double t) {
  if (k < -1) throw IndexOutOfRange("U_k needs k >= -1");
  if (k == -1) return 0.0;
  double prev = 0.0;
  double cur = 1.0;
  for (int j = 1; j <= k; ++j) {
    const double next = 2.0 * t * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

std::vector<ScaledValue> cheb_u_table(int k_max, double t) {
  if (k_max < 0) return {};
  std::vector<ScaledValue> u(static_cast<std::size_t>(k_max + 1));
  const ScaledValue two_t(2.0 * t);
  u[0] = ScaledValue::one();
  if (k_max >= 1) u[1] = two_t;
  for (int k = 2; k <= k_max; ++k) {
    const auto i = static_cast<std::size_t>(k);
    u[i] = two_t * u[i - 1] - u[i - 2];
  }
  return u;
}

std::vector<double> cheb_u_zeros(int k) {
  if (k < 1) throw InvalidArity("U_k zeros need k >= 1");
  std::vector<double> z;
  z.reserve(static_cast<std::size_t>(k));
  // cos(j pi/(k+1)) written as a sine of the offset from pi/2, so the middle
  // zero is exactly 0 and the set is exactly symmetric.
  for (int j = 1; j <= k; ++j) {
    z.push_back(std::sin((k + 1 - 2 * j) * std::numbers::pi / (2.0 * (k + 1))));
  }
  return z;
}

}  // namespace jacobi::chebyshev
