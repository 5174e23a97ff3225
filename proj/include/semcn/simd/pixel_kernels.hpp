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

#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

// Integer pixel kernels behind the video metrics. Every variant returns
// bit-identical results to the scalar reference; the dispatcher picks the
// widest instruction set the CPU supports unless SEMCN_SIMD overrides it
// ("scalar", "avx2" or "neon").

namespace semcn::simd {

enum class Isa { scalar, avx2, neon };

std::string_view to_string(Isa isa);

/// Squared error restricted to pixels whose absolute difference exceeds a
/// threshold, and how many such pixels there were.
struct MotionSse {
  std::uint64_t sse = 0;
  std::uint64_t count = 0;
};

/// First and second moments of two co-located windows.
struct WindowMoments {
  std::uint64_t sum_a = 0;
  std::uint64_t sum_b = 0;
  std::uint64_t sum_aa = 0;
  std::uint64_t sum_bb = 0;
  std::uint64_t sum_ab = 0;
};

struct PixelKernels {
  Isa isa;
  /// sum (a[i] - b[i])^2
  std::uint64_t (*sse)(const std::uint8_t* a, const std::uint8_t* b, std::size_t n);
  /// sum over |a[i] - b[i]| > delta of (a[i] - b[i])^2, plus the pixel count
  MotionSse (*motion_sse)(const std::uint8_t* a, const std::uint8_t* b, std::size_t n,
                          std::uint8_t delta);
  /// Moments of the rows x rows-high, width-wide windows starting at a and b.
  WindowMoments (*window_moments)(const std::uint8_t* a, const std::uint8_t* b,
                                  std::size_t stride, std::size_t width, std::size_t rows);
};

bool isa_supported(Isa isa);

/// Kernels for a specific instruction set; throws std::invalid_argument when
/// the CPU or the build lacks it.
const PixelKernels& kernels_for(Isa isa);

/// Kernels selected at first use.
const PixelKernels& kernels();

namespace detail {
extern const PixelKernels scalar_kernels;
#if defined(SEMCN_HAVE_AVX2)
extern const PixelKernels avx2_kernels;
#endif
#if defined(SEMCN_HAVE_NEON)
extern const PixelKernels neon_kernels;
#endif
}  // namespace detail

}  // namespace semcn::simd
