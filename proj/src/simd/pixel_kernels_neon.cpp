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

#include <arm_neon.h>

#include "semcn/simd/pixel_kernels.hpp"

namespace semcn::simd::detail {

namespace {

constexpr std::size_t kFlushSteps = 4096;

inline uint32x4_t square_acc(uint32x4_t acc, uint8x16_t x) {
  acc = vpadalq_u16(acc, vmull_u8(vget_low_u8(x), vget_low_u8(x)));
  return vpadalq_u16(acc, vmull_u8(vget_high_u8(x), vget_high_u8(x)));
}

std::uint64_t sse_neon(const std::uint8_t* a, const std::uint8_t* b, std::size_t n) {
  std::uint64_t total = 0;
  std::size_t i = 0;
  while (i + 16 <= n) {
    uint32x4_t acc = vdupq_n_u32(0);
    for (std::size_t step = 0; step < kFlushSteps && i + 16 <= n; ++step, i += 16) {
      acc = square_acc(acc, vabdq_u8(vld1q_u8(a + i), vld1q_u8(b + i)));
    }
    total += vaddlvq_u32(acc);
  }
  for (; i < n; ++i) {
    const int d = static_cast<int>(a[i]) - static_cast<int>(b[i]);
    total += static_cast<std::uint64_t>(d * d);
  }
  return total;
}

MotionSse motion_sse_neon(const std::uint8_t* a, const std::uint8_t* b, std::size_t n,
                          std::uint8_t delta) {
  MotionSse out;
  const uint8x16_t vdelta = vdupq_n_u8(delta);
  std::size_t i = 0;
  while (i + 16 <= n) {
    uint32x4_t acc = vdupq_n_u32(0);
    for (std::size_t step = 0; step < kFlushSteps && i + 16 <= n; ++step, i += 16) {
      const uint8x16_t ad = vabdq_u8(vld1q_u8(a + i), vld1q_u8(b + i));
      const uint8x16_t still = vcleq_u8(ad, vdelta);
      acc = square_acc(acc, vbicq_u8(ad, still));
      out.count += vaddlvq_u8(vshrq_n_u8(vmvnq_u8(still), 7));
    }
    out.sse += vaddlvq_u32(acc);
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

WindowMoments window_moments_neon(const std::uint8_t* a, const std::uint8_t* b, std::size_t stride,
                                  std::size_t width, std::size_t rows) {
  WindowMoments m;
  const std::size_t body = width & ~std::size_t{7};
  uint32x4_t sa = vdupq_n_u32(0), sb = sa, saa = sa, sbb = sa, sab = sa;
  std::size_t steps = 0;
  auto flush = [&] {
    m.sum_a += vaddlvq_u32(sa);
    m.sum_b += vaddlvq_u32(sb);
    m.sum_aa += vaddlvq_u32(saa);
    m.sum_bb += vaddlvq_u32(sbb);
    m.sum_ab += vaddlvq_u32(sab);
    sa = sb = saa = sbb = sab = vdupq_n_u32(0);
    steps = 0;
  };
  for (std::size_t y = 0; y < rows; ++y) {
    const std::uint8_t* ra = a + y * stride;
    const std::uint8_t* rb = b + y * stride;
    for (std::size_t x = 0; x < body; x += 8) {
      const uint8x8_t va = vld1_u8(ra + x);
      const uint8x8_t vb = vld1_u8(rb + x);
      sa = vpadalq_u16(sa, vmovl_u8(va));
      sb = vpadalq_u16(sb, vmovl_u8(vb));
      saa = vpadalq_u16(saa, vmull_u8(va, va));
      sbb = vpadalq_u16(sbb, vmull_u8(vb, vb));
      sab = vpadalq_u16(sab, vmull_u8(va, vb));
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

const PixelKernels neon_kernels{Isa::neon, sse_neon, motion_sse_neon, window_moments_neon};

}  // namespace semcn::simd::detail
