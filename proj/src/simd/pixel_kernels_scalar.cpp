/*
 * Copyright 2026 The semcn Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "semcn/simd/pixel_kernels.hpp"

namespace semcn::simd::detail {

namespace {

std::uint64_t sse_scalar(const std::uint8_t* a, const std::uint8_t* b, std::size_t n) {
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const int d = static_cast<int>(a[i]) - static_cast<int>(b[i]);
    acc += static_cast<std::uint64_t>(d * d);
  }
  return acc;
}

MotionSse motion_sse_scalar(const std::uint8_t* a, const std::uint8_t* b, std::size_t n,
                            std::uint8_t delta) {
  MotionSse out;
  for (std::size_t i = 0; i < n; ++i) {
    const int d = static_cast<int>(a[i]) - static_cast<int>(b[i]);
    const int ad = d < 0 ? -d : d;
    if (ad > delta) {
      out.sse += static_cast<std::uint64_t>(d * d);
      ++out.count;
    }
  }
  return out;
}

WindowMoments window_moments_scalar(const std::uint8_t* a, const std::uint8_t* b,
                                    std::size_t stride, std::size_t width, std::size_t rows) {
  WindowMoments m;
  for (std::size_t y = 0; y < rows; ++y) {
    const std::uint8_t* ra = a + y * stride;
    const std::uint8_t* rb = b + y * stride;
    for (std::size_t x = 0; x < width; ++x) {
      const std::uint64_t va = ra[x];
      const std::uint64_t vb = rb[x];
      m.sum_a += va;
      m.sum_b += vb;
      m.sum_aa += va * va;
      m.sum_bb += vb * vb;
      m.sum_ab += va * vb;
    }
  }
  return m;
}

}  // namespace

const PixelKernels scalar_kernels{Isa::scalar, sse_scalar, motion_sse_scalar,
                                  window_moments_scalar};

}  // namespace semcn::simd::detail
