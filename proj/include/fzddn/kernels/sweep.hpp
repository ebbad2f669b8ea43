#pragma once

#include <cstddef>
#include <exception>
#include <vector>

namespace fzddn::kernels {

// Evaluates f(k) for k in [0, count) and returns the results in index order.
// Each evaluation must be independent; results are deterministic regardless
// of scheduling.
template <class F>
auto sweep(std::size_t count, F&& f) -> std::vector<decltype(f(std::size_t{}))> {
  using R = decltype(f(std::size_t{}));
  std::vector<R> out(count);
  std::exception_ptr failure;
  const long n = static_cast<long>(count);
#pragma omp parallel for schedule(dynamic)
  for (long k = 0; k < n; ++k) {
    try {
      out[static_cast<std::size_t>(k)] = f(static_cast<std::size_t>(k));
    } catch (...) {
#pragma omp critical(fzddn_sweep_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

namespace serial {

template <class F>
auto sweep(std::size_t count, F&& f) -> std::vector<decltype(f(std::size_t{}))> {
  std::vector<decltype(f(std::size_t{}))> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) out.push_back(f(k));
  return out;
}

}  // namespace serial

}  // namespace fzddn::kernels
