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

#pragma once

// Data-parallel inner loops with a scalar reference implementation and
// vectorized variants. The public entry points dispatch at runtime to the
// best backend the CPU supports; the per-backend functions are exposed so
// tests can compare them directly.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace gbm::simd {

enum class Backend { Scalar, Avx2 };

std::string_view backend_name(Backend b) noexcept;
bool backend_supported(Backend b) noexcept;

/// Backend chosen at startup: AVX2 when available, unless the environment
/// variable GBM_SIMD=scalar forces the reference path.
Backend active_backend() noexcept;
/// Throws gbm::ParameterError if `b` is not supported on this CPU.
void set_backend(Backend b);

/// |a ∩ b| for strictly increasing sequences.
std::size_t intersect_count(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b);

/// out[j - begin] = <columns[.., j], query> for j in [begin, end).
/// `columns` holds `dim` coordinate arrays of length `stride` back to back
/// (column-major), so coordinate k of point j is columns[k * stride + j].
/// Products are accumulated in coordinate order without fused multiply-add,
/// which makes every backend bit-identical.
void inner_products(const double* columns, std::size_t stride, std::size_t dim,
                    const double* query, std::size_t begin, std::size_t end, double* out);

namespace scalar {
std::size_t intersect_count(const std::uint32_t* a, std::size_t na, const std::uint32_t* b,
                            std::size_t nb) noexcept;
void inner_products(const double* columns, std::size_t stride, std::size_t dim,
                    const double* query, std::size_t begin, std::size_t end, double* out) noexcept;
}  // namespace scalar

#if defined(GBM_HAVE_AVX2)
namespace avx2 {
std::size_t intersect_count(const std::uint32_t* a, std::size_t na, const std::uint32_t* b,
                            std::size_t nb) noexcept;
void inner_products(const double* columns, std::size_t stride, std::size_t dim,
                    const double* query, std::size_t begin, std::size_t end, double* out) noexcept;
}  // namespace avx2
#endif

}  // namespace gbm::simd
