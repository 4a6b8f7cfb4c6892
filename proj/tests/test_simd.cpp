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

#include "doctest.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

#include "gbm/error.hpp"
#include "gbm/random.hpp"
#include "gbm/simd/kernels.hpp"

using namespace gbm;

namespace {

std::vector<std::uint32_t> sorted_sample(Rng& rng, std::size_t len, std::uint32_t universe) {
  std::vector<std::uint32_t> v;
  for (std::size_t i = 0; i < len; ++i) v.push_back(static_cast<std::uint32_t>(rng.next() % universe));
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::size_t naive_intersection(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
  std::size_t c = 0;
  for (auto x : a) c += std::binary_search(b.begin(), b.end(), x);
  return c;
}

}  // namespace

TEST_CASE("scalar intersection matches a naive count") {
  Rng rng(1);
  for (int i = 0; i < 2000; ++i) {
    const auto a = sorted_sample(rng, rng.next() % 80, 1 + static_cast<std::uint32_t>(rng.next() % 300));
    const auto b = sorted_sample(rng, rng.next() % 80, 1 + static_cast<std::uint32_t>(rng.next() % 300));
    CHECK(simd::scalar::intersect_count(a.data(), a.size(), b.data(), b.size()) == naive_intersection(a, b));
  }
}

#if defined(GBM_HAVE_AVX2)
TEST_CASE("avx2 intersection equals the scalar kernel") {
  if (!simd::backend_supported(simd::Backend::Avx2)) return;
  Rng rng(2);
  auto check = [](const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    const std::size_t s = simd::scalar::intersect_count(a.data(), a.size(), b.data(), b.size());
    CHECK(simd::avx2::intersect_count(a.data(), a.size(), b.data(), b.size()) == s);
    CHECK(simd::avx2::intersect_count(b.data(), b.size(), a.data(), a.size()) == s);
  };
  for (int i = 0; i < 5000; ++i) {
    const std::uint32_t universe = 1 + static_cast<std::uint32_t>(rng.next() % (i % 2 ? 100 : 5000));
    check(sorted_sample(rng, rng.next() % 200, universe), sorted_sample(rng, rng.next() % 200, universe));
  }
  std::vector<std::uint32_t> all(100);
  for (std::uint32_t i = 0; i < 100; ++i) all[i] = i;
  check(all, all);
  check(all, {});
  std::vector<std::uint32_t> high = {0xFFFFFFF0u, 0xFFFFFFF5u, 0xFFFFFFFEu, 0xFFFFFFFFu};
  std::vector<std::uint32_t> mixed = {1, 2, 0xFFFFFFF5u, 0xFFFFFFFFu};
  check(high, mixed);
  std::vector<std::uint32_t> evens, odds;
  for (std::uint32_t i = 0; i < 64; ++i) (i % 2 ? odds : evens).push_back(i);
  check(evens, odds);
}

TEST_CASE("avx2 inner products are bit-identical to scalar") {
  if (!simd::backend_supported(simd::Backend::Avx2)) return;
  Rng rng(3);
  for (std::size_t dim = 2; dim <= 7; ++dim) {
    const std::size_t stride = 103;
    std::vector<double> columns(dim * stride);
    for (double& c : columns) c = rng.normal();
    std::vector<double> query(dim);
    for (double& q : query) q = rng.normal();
    for (std::size_t begin : {0u, 1u, 3u, 50u}) {
      for (std::size_t end : {begin, begin + 1, begin + 5, stride}) {
        if (end > stride) continue;
        std::vector<double> s(end - begin + 1, -7.0), v(end - begin + 1, -7.0);
        simd::scalar::inner_products(columns.data(), stride, dim, query.data(), begin, end, s.data());
        simd::avx2::inner_products(columns.data(), stride, dim, query.data(), begin, end, v.data());
        CHECK(std::memcmp(s.data(), v.data(), s.size() * sizeof(double)) == 0);
      }
    }
  }
}
#endif

TEST_CASE("backend selection") {
  CHECK(simd::backend_supported(simd::Backend::Scalar));
  CHECK(simd::backend_name(simd::Backend::Scalar) == "scalar");
  const char* env = std::getenv("GBM_SIMD");
  if (env != nullptr && std::string(env) == "scalar") CHECK(simd::active_backend() == simd::Backend::Scalar);
  const simd::Backend saved = simd::active_backend();
  simd::set_backend(simd::Backend::Scalar);
  CHECK(simd::active_backend() == simd::Backend::Scalar);
  if (!simd::backend_supported(simd::Backend::Avx2)) {
    CHECK_THROWS_AS(simd::set_backend(simd::Backend::Avx2), ParameterError);
  }
  simd::set_backend(saved);
}

TEST_CASE("dispatching entry points") {
  const std::vector<std::uint32_t> a = {1, 3, 5, 7, 9, 11, 13, 15, 17};
  const std::vector<std::uint32_t> b = {3, 4, 5, 6, 7, 17, 18};
  CHECK(simd::intersect_count(a, b) == 4);
  const double columns[] = {1, 2, 3, 4, 5, 6};  // points (1,4) (2,5) (3,6)
  const double q[] = {1, -1};
  double out[3];
  simd::inner_products(columns, 3, 2, q, 0, 3, out);
  CHECK(out[0] == -3.0);
  CHECK(out[2] == -3.0);
}
