#include "slice/kernels.hpp"

namespace slice::kernels {

void dist_sq_one_to_many_scalar(const double* q, const double* pts,
                                std::size_t count, std::size_t dim,
                                double* out) {
  for (std::size_t i = 0; i < count; ++i) {
    const double* p = pts + i * dim;
    double acc = 0.0;
    for (std::size_t d = 0; d < dim; ++d) {
      const double diff = p[d] - q[d];
      acc += diff * diff;
    }
    out[i] = acc;
  }
}

}  // namespace slice::kernels
