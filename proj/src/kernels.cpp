#include "slice/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace slice::kernels {

namespace {

struct Selected {
  DistSqFn fn;
  const char* name;
};

Selected pick() {
#if defined(__x86_64__) || defined(_M_X64)
  if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma"))
    return {dist_sq_one_to_many_avx2, "avx2"};
#endif
  return {dist_sq_one_to_many_scalar, "scalar"};
}

const Selected& selected() {
  static const Selected s = pick();
  return s;
}

}  // namespace

DistSqFn dist_sq_one_to_many() { return selected().fn; }

const char* active_kernel_name() { return selected().name; }

double max_pairwise_distance(const double* pts, std::size_t count,
                             std::size_t dim) {
  if (count < 2) return 0.0;
  const DistSqFn fn = dist_sq_one_to_many();
  std::vector<double> row(count);
  double best = 0.0;
  for (std::size_t i = 0; i + 1 < count; ++i) {
    const std::size_t rest = count - i - 1;
    fn(pts + i * dim, pts + (i + 1) * dim, rest, dim, row.data());
    for (std::size_t j = 0; j < rest; ++j) best = std::max(best, row[j]);
  }
  return std::sqrt(best);
}

}  // namespace slice::kernels
