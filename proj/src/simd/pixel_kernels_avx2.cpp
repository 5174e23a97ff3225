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

#include <immintrin.h>

#include "semcn/simd/pixel_kernels.hpp"

namespace semcn::simd::detail {

namespace {

// Lanes of the 32-bit accumulators gain at most 2 * 2 * 255^2 per 32-byte
// step, so flushing every 4096 steps keeps them below 2^31.
constexpr std::size_t kFlushSteps = 4096;

inline std::uint64_t hsum_epi32(__m256i v) {
  alignas(32) std::uint32_t lanes[8];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), v);
  std::uint64_t s = 0;
  for (std::uint32_t l : lanes) s += l;
  return s;
}

// Sum of squares of 32 unsigned bytes given as (x), widened to 16 bits.
inline __m256i square_sum_u8(__m256i x) {
  const __m256i lo = _mm256_cvtepu8_epi16(_mm256_castsi256_si128(x));
  const __m256i hi = _mm256_cvtepu8_epi16(_mm256_extracti128_si256(x, 1));
  return _mm256_add_epi32(_mm256_madd_epi16(lo, lo), _mm256_madd_epi16(hi, hi));
}

inline __m256i absdiff_u8(__m256i a, __m256i b) {
  return _mm256_or_si256(_mm256_subs_epu8(a, b), _mm256_subs_epu8(b, a));
}

std::uint64_t sse_avx2(const std::uint8_t* a, const std::uint8_t* b, std::size_t n) {
  std::uint64_t total = 0;
  std::size_t i = 0;
  while (i + 32 <= n) {
    __m256i acc = _mm256_setzero_si256();
    for (std::size_t step = 0; step < kFlushSteps && i + 32 <= n; ++step, i += 32) {
      const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
      const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
      acc = _mm256_add_epi32(acc, square_sum_u8(absdiff_u8(va, vb)));
    }
    total += hsum_epi32(acc);
  }
  for (; i < n; ++i) {
    const int d = static_cast<int>(a[i]) - static_cast<int>(b[i]);
    total += static_cast<std::uint64_t>(d * d);
  }
  return total;
}

MotionSse motion_sse_avx2(const std::uint8_t* a, const std::uint8_t* b, std::size_t n,
                          std::uint8_t delta) {
  MotionSse out;
  const __m256i vdelta = _mm256_set1_epi8(static_cast<char>(delta));
  const __m256i zero = _mm256_setzero_si256();
  std::size_t i = 0;
  while (i + 32 <= n) {
    __m256i acc = _mm256_setzero_si256();
    for (std::size_t step = 0; step < kFlushSteps && i + 32 <= n; ++step, i += 32) {
      const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
      const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
      const __m256i ad = absdiff_u8(va, vb);
      // 0xFF where |d| <= delta.
      const __m256i still = _mm256_cmpeq_epi8(_mm256_subs_epu8(ad, vdelta), zero);
      const __m256i moving = _mm256_andnot_si256(still, ad);
      acc = _mm256_add_epi32(acc, square_sum_u8(moving));
      const auto still_bits = static_cast<std::uint32_t>(_mm256_movemask_epi8(still));
      out.count += 32u - static_cast<std::uint64_t>(__builtin_popcount(still_bits));
    }
    out.sse += hsum_epi32(acc);
  }
  for (; i < n; ++i) {
    const int d = static_cast<int>(a[i]) - static_cast<int>(b[i]);
    const int ad = d < 0 ? -d : d;
    if (ad > delta) {
      out.sse += static_cast<std::uint64_t>(d * d);
      ++out.count;
    }
  }
  return out;
}

WindowMoments window_moments_avx2(const std::uint8_t* a, const std::uint8_t* b, std::size_t stride,
                                  std::size_t width, std::size_t rows) {
  WindowMoments m;
  const std::size_t body = width & ~std::size_t{7};
  __m256i sa = _mm256_setzero_si256();
  __m256i sb = _mm256_setzero_si256();
  __m256i saa = _mm256_setzero_si256();
  __m256i sbb = _mm256_setzero_si256();
  __m256i sab = _mm256_setzero_si256();
  std::size_t steps = 0;
  auto flush = [&] {
    m.sum_a += hsum_epi32(sa);
    m.sum_b += hsum_epi32(sb);
    m.sum_aa += hsum_epi32(saa);
    m.sum_bb += hsum_epi32(sbb);
    m.sum_ab += hsum_epi32(sab);
    sa = sb = saa = sbb = sab = _mm256_setzero_si256();
    steps = 0;
  };
  for (std::size_t y = 0; y < rows; ++y) {
    const std::uint8_t* ra = a + y * stride;
    const std::uint8_t* rb = b + y * stride;
    for (std::size_t x = 0; x < body; x += 8) {
      const __m256i va =
          _mm256_cvtepu8_epi32(_mm_loadl_epi64(reinterpret_cast<const __m128i*>(ra + x)));
      const __m256i vb =
          _mm256_cvtepu8_epi32(_mm_loadl_epi64(reinterpret_cast<const __m128i*>(rb + x)));
      sa = _mm256_add_epi32(sa, va);
      sb = _mm256_add_epi32(sb, vb);
      saa = _mm256_add_epi32(saa, _mm256_mullo_epi32(va, va));
      sbb = _mm256_add_epi32(sbb, _mm256_mullo_epi32(vb, vb));
      sab = _mm256_add_epi32(sab, _mm256_mullo_epi32(va, vb));
      if (++steps == kFlushSteps) flush();
    }
    for (std::size_t x = body; x < width; ++x) {
      const std::uint64_t va = ra[x];
      const std::uint64_t vb = rb[x];
      m.sum_a += va;
      m.sum_b += vb;
      m.sum_aa += va * va;
      m.sum_bb += vb * vb;
      m.sum_ab += va * vb;
    }
  }
  flush();
  return m;
}

}  // namespace

const PixelKernels avx2_kernels{Isa::avx2, sse_avx2, motion_sse_avx2, window_moments_avx2};

}  // namespace semcn::simd::detail
