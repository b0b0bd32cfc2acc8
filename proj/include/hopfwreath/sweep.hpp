#ifndef HOPFWREATH_SWEEP_HPP
#define HOPFWREATH_SWEEP_HPP

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hopfwreath::sweep {

enum class Mode { serial, parallel };

/// Process-wide default mode for verification sweeps. The parallel path
/// requires every swept body to be pure, which all checkers in this
/// library are; the serial path is the reference the tests compare
/// against.
inline Mode& mode() {
#ifdef _OPENMP
  static Mode m = Mode::parallel;
#else
  static Mode m = Mode::serial;
#endif
  return m;
}

/// Runs body(i) for i in [0, n) and concatenates the returned vectors in
/// index order, so serial and parallel runs produce identical output.
template <typename T, typename Body>
std::vector<T> collect(std::size_t n, const Body& body) {
  std::vector<std::vector<T>> buckets(n);
#ifdef _OPENMP
  if (mode() == Mode::parallel) {
#pragma omp parallel for schedule(dynamic, 16)
    for (long long i = 0; i < static_cast<long long>(n); ++i)
      buckets[static_cast<std::size_t>(i)] = body(static_cast<std::size_t>(i));
  } else
#endif
  {
    for (std::size_t i = 0; i < n; ++i) buckets[i] = body(i);
  }
  std::vector<T> out;
  for (auto& b : buckets)
    for (auto& v : b) out.push_back(std::move(v));
  return out;
}

} // namespace hopfwreath::sweep

#endif
