#pragma once

#include <atomic>
#include <cstddef>
#include <optional>
#include <type_traits>

#include "jacobi/dense_matrix.hpp"
#include "jacobi/scaled_value.hpp"

namespace jacobi::detail {

// EntryFn: (k, s) -> ScaledValue or double. Returns false if any entry
// overflowed a double; exceptions cannot cross the OpenMP region, so overflow
// is flagged.

template <class EntryFn>
std::optional<double> entry_value(const EntryFn& entry, std::size_t k, std::size_t s) {
  if constexpr (std::is_same_v<decltype(entry(k, s)), double>) {
    return entry(k, s);
  } else {
    return entry(k, s).try_to_double();
  }
}

template <class EntryFn>
bool assemble_serial(DenseMatrix& out, const EntryFn& entry) {
  const std::size_t m = out.order();
  bool ok = true;
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t s = 0; s < m; ++s) {
      const std::optional<double> v = entry_value(entry, k, s);
      ok = ok && v.has_value();
      out(k, s) = v.value_or(0.0);
    }
  }
  return ok;
}

template <class EntryFn>
bool assemble_parallel(DenseMatrix& out, const EntryFn& entry) {
  const long m = static_cast<long>(out.order());
  std::atomic<bool> ok{true};
#pragma omp parallel for schedule(static)
  for (long k = 0; k < m; ++k) {
    auto row = out.row(static_cast<std::size_t>(k));
    bool row_ok = true;
    for (long s = 0; s < m; ++s) {
      const std::optional<double> v =
          entry_value(entry, static_cast<std::size_t>(k), static_cast<std::size_t>(s));
      row_ok = row_ok && v.has_value();
      row[static_cast<std::size_t>(s)] = v.value_or(0.0);
    }
    if (!row_ok) ok.store(false, std::memory_order_relaxed);
  }
  return ok.load();
}

}  // namespace jacobi::detail
