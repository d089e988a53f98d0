#pragma once

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

namespace sparsenn {

using Shape = std::vector<std::size_t>;

inline std::size_t numel(const Shape& shape) {
  std::size_t n = 1;
  for (std::size_t d : shape) n *= d;
  return n;
}

inline std::string shape_string(const Shape& shape) {
  std::string s = "(";
  for (std::size_t i = 0; i < shape.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(shape[i]);
  }
  s += ")";
  return s;
}

// Runs f(i) for i in [0, n). Iterations must write disjoint outputs; any
// reduction an iteration performs stays inside that iteration, so results do
// not depend on the number of worker threads.
template <class F>
inline void parallel_for(std::size_t n, F&& f) {
#if defined(_OPENMP)
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); ++i) {
    f(static_cast<std::size_t>(i));
  }
#else
  for (std::size_t i = 0; i < n; ++i) f(i);
#endif
}

}  // namespace sparsenn
