#include <doctest.h>

#include <cmath>
#include <string>
#include <vector>

#include "slice/kernels.hpp"
#include "slice/rng.hpp"

using namespace slice;

TEST_CASE("active kernel agrees with the scalar reference") {
  Rng rng(2024);
  const auto fn = kernels::dist_sq_one_to_many();
  for (size_t dim : {1, 2, 3, 4, 7, 9, 16}) {
    for (size_t count : {1, 2, 3, 4, 5, 8, 33, 200}) {
      std::vector<double> q(dim), pts(count * dim);
      for (auto& x : q) x = rng.uniform(-3, 3);
      for (auto& x : pts) x = rng.uniform(-3, 3);
      std::vector<double> got(count), ref(count);
      fn(q.data(), pts.data(), count, dim, got.data());
      kernels::dist_sq_one_to_many_scalar(q.data(), pts.data(), count, dim,
                                          ref.data());
      for (size_t i = 0; i < count; ++i)
        CHECK(std::fabs(got[i] - ref[i]) <= 1e-12 * (1.0 + ref[i]));
    }
  }
}

TEST_CASE("kernel selection is a fixed function of the host") {
  CHECK(kernels::dist_sq_one_to_many() == kernels::dist_sq_one_to_many());
  const std::string name = kernels::active_kernel_name();
  CHECK((name == "avx2" || name == "scalar"));
}

TEST_CASE("max pairwise distance matches a direct loop") {
  Rng rng(7);
  const size_t n = 137, dim = 3;
  std::vector<double> pts(n * dim);
  for (auto& x : pts) x = rng.uniform(-1, 1);
  double expect = 0;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      double s = 0;
      for (size_t d = 0; d < dim; ++d) {
        const double e = pts[i * dim + d] - pts[j * dim + d];
        s += e * e;
      }
      expect = std::max(expect, std::sqrt(s));
    }
  CHECK(kernels::max_pairwise_distance(pts.data(), n, dim) ==
        doctest::Approx(expect).epsilon(1e-12));
}
