// Copyright 2026 The GBM Motif Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gbm/simd/kernels.hpp"

namespace gbm::simd::scalar {

std::size_t intersect_count(const std::uint32_t* a, std::size_t na, const std::uint32_t* b,
                            std::size_t nb) noexcept {
  std::size_t i = 0, j = 0, count = 0;
  while (i < na && j < nb) {
    if (a[i] < b[j]) {
      ++i;
    } else if (b[j] < a[i]) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

void inner_products(const double* columns, std::size_t stride, std::size_t dim,
                    const double* query, std::size_t begin, std::size_t end,
                    double* out) noexcept {
  for (std::size_t j = begin; j < end; ++j) {
    double acc = 0.0;
    for (std::size_t k = 0; k < dim; ++k) acc = acc + columns[k * stride + j] * query[k];
    out[j - begin] = acc;
  }
}

}  // namespace gbm::simd::scalar
