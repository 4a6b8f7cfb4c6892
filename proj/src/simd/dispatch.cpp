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

#include <atomic>
#include <cstdlib>
#include <string>
#include <string_view>

#include "gbm/error.hpp"
#include "gbm/simd/kernels.hpp"

namespace gbm::simd {
namespace {

Backend detect() noexcept {
  if (const char* env = std::getenv("GBM_SIMD")) {
    if (std::string_view(env) == "scalar") return Backend::Scalar;
  }
  return backend_supported(Backend::Avx2) ? Backend::Avx2 : Backend::Scalar;
}

std::atomic<Backend>& current() noexcept {
  static std::atomic<Backend> backend{detect()};
  return backend;
}

}  // namespace

std::string_view backend_name(Backend b) noexcept {
  switch (b) {
    case Backend::Scalar:
      return "scalar";
    case Backend::Avx2:
      return "avx2";
  }
  return "unknown";
}

bool backend_supported(Backend b) noexcept {
  switch (b) {
    case Backend::Scalar:
      return true;
    case Backend::Avx2:
#if defined(GBM_HAVE_AVX2)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
  }
  return false;
}

Backend active_backend() noexcept { return current().load(std::memory_order_relaxed); }

void set_backend(Backend b) {
  if (!backend_supported(b)) {
    throw ParameterError("SIMD backend '" + std::string(backend_name(b)) + "' is not supported on this CPU");
  }
  current().store(b, std::memory_order_relaxed);
}

std::size_t intersect_count(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b) {
#if defined(GBM_HAVE_AVX2)
  if (active_backend() == Backend::Avx2) return avx2::intersect_count(a.data(), a.size(), b.data(), b.size());
#endif
  return scalar::intersect_count(a.data(), a.size(), b.data(), b.size());
}

void inner_products(const double* columns, std::size_t stride, std::size_t dim,
                    const double* query, std::size_t begin, std::size_t end, double* out) {
#if defined(GBM_HAVE_AVX2)
  if (active_backend() == Backend::Avx2) {
    avx2::inner_products(columns, stride, dim, query, begin, end, out);
    return;
  }
#endif
  scalar::inner_products(columns, stride, dim, query, begin, end, out);
}

}  // namespace gbm::simd
