// AVX2+FMA variant of the distance kernel. Processes four target points per
// iteration, accumulating each point's squared distance in its own lane with
// the same per-dimension order as the scalar kernel.

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include "slice/kernels.hpp"

namespace slice::kernels {

void dist_sq_one_to_many_avx2(const double* q, const double* pts,
                              std::size_t count, std::size_t dim, double* out) {
  std::size_t i = 0;
  for (; i + 4 <= count; i += 4) {
    const double* p0 = pts + (i + 0) * dim;
    const double* p1 = pts + (i + 1) * dim;
    const double* p2 = pts + (i + 2) * dim;
    const double* p3 = pts + (i + 3) * dim;
    __m256d acc = _mm256_setzero_pd();
    for (std::size_t d = 0; d < dim; ++d) {
      const __m256d qd = _mm256_set1_pd(q[d]);
      const __m256d v = _mm256_setr_pd(p0[d], p1[d], p2[d], p3[d]);
      const __m256d diff = _mm256_sub_pd(v, qd);
      acc = _mm256_fmadd_pd(diff, diff, acc);
    }
    _mm256_storeu_pd(out + i, acc);
  }
  if (i < count)
    dist_sq_one_to_many_scalar(q, pts + i * dim, count - i, dim, out + i);
}

}  // namespace slice::kernels

#endif
