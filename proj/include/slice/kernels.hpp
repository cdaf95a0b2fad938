#pragma once

#include <cstddef>

namespace slice::kernels {

// Batched squared Euclidean distances from one query point to a contiguous
// row-major block of points: out[i] = |q - pts[i*dim ..]|^2.
//
// The scalar kernel is the reference; the AVX2 variant must agree with it to
// float rounding (equivalence-tested). The active kernel is picked once per
// process from CPU features, so repeated builds over the same inputs are
// bit-identical.
using DistSqFn = void (*)(const double* q, const double* pts, std::size_t count,
                          std::size_t dim, double* out);

void dist_sq_one_to_many_scalar(const double* q, const double* pts,
                                std::size_t count, std::size_t dim,
                                double* out);

#if defined(__x86_64__) || defined(_M_X64)
void dist_sq_one_to_many_avx2(const double* q, const double* pts,
                              std::size_t count, std::size_t dim, double* out);
#endif

DistSqFn dist_sq_one_to_many();
const char* active_kernel_name();

// Max pairwise distance over a flat point block.
double max_pairwise_distance(const double* pts, std::size_t count,
                             std::size_t dim);

}  // namespace slice::kernels
