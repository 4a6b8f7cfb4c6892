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

#include <immintrin.h>

#include "gbm/simd/kernels.hpp"

namespace gbm::simd::avx2 {

// Block-wise all-pairs comparison: eight elements of `a` against eight of
// `b` using the four in-lane rotations of `b` and of its lane-swapped copy.
// The block with the smaller maximum advances (both on a tie); sequences
// are strictly increasing, so each equal pair is seen exactly once.
std::size_t intersect_count(const std::uint32_t* a, std::size_t na, const std::uint32_t* b,
                            std::size_t nb) noexcept {
  std::size_t i = 0, j = 0, count = 0;
  while (i + 8 <= na && j + 8 <= nb) {
    const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + j));
    const __m256i vs = _mm256_permute2x128_si256(vb, vb, 0x01);

    __m256i m = _mm256_cmpeq_epi32(va, vb);
    m = _mm256_or_si256(m, _mm256_cmpeq_epi32(va, _mm256_shuffle_epi32(vb, 0x39)));
    m = _mm256_or_si256(m, _mm256_cmpeq_epi32(va, _mm256_shuffle_epi32(vb, 0x4E)));
    m = _mm256_or_si256(m, _mm256_cmpeq_epi32(va, _mm256_shuffle_epi32(vb, 0x93)));
    m = _mm256_or_si256(m, _mm256_cmpeq_epi32(va, vs));
    m = _mm256_or_si256(m, _mm256_cmpeq_epi32(va, _mm256_shuffle_epi32(vs, 0x39)));
    m = _mm256_or_si256(m, _mm256_cmpeq_epi32(va, _mm256_shuffle_epi32(vs, 0x4E)));
    m = _mm256_or_si256(m, _mm256_cmpeq_epi32(va, _mm256_shuffle_epi32(vs, 0x93)));
    count += static_cast<std::size_t>(
        __builtin_popcount(static_cast<unsigned>(_mm256_movemask_ps(_mm256_castsi256_ps(m)))));

    const std::uint32_t a_max = a[i + 7];
    const std::uint32_t b_max = b[j + 7];
    if (a_max <= b_max) i += 8;
    if (b_max <= a_max) j += 8;
  }
  return count + scalar::intersect_count(a + i, na - i, b + j, nb - j);
}

void inner_products(const double* columns, std::size_t stride, std::size_t dim,
                    const double* query, std::size_t begin, std::size_t end,
                    double* out) noexcept {
  std::size_t j = begin;
  for (; j + 4 <= end; j += 4) {
    __m256d acc = _mm256_setzero_pd();
    for (std::size_t k = 0; k < dim; ++k) {
      const __m256d c = _mm256_loadu_pd(columns + k * stride + j);
      acc = _mm256_add_pd(acc, _mm256_mul_pd(c, _mm256_set1_pd(query[k])));
    }
    _mm256_storeu_pd(out + (j - begin), acc);
  }
  if (j < end) scalar::inner_products(columns, stride, dim, query, j, end, out + (j - begin));
}

}  // namespace gbm::simd::avx2
