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

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <stdexcept>
#include <vector>

#include "semcn/simd/pixel_kernels.hpp"

namespace semcn::simd {
namespace {

std::vector<const PixelKernels*> variants() {
  std::vector<const PixelKernels*> out;
  for (auto isa : {Isa::avx2, Isa::neon}) {
    if (isa_supported(isa)) out.push_back(&kernels_for(isa));
  }
  return out;
}

std::vector<std::uint8_t> noise(std::size_t n, std::mt19937_64& rng) {
  std::vector<std::uint8_t> v(n);
  for (auto& x : v) x = static_cast<std::uint8_t>(rng());
  return v;
}

// Nearby images: mostly small differences with occasional large ones.
std::vector<std::uint8_t> perturb(const std::vector<std::uint8_t>& a, std::mt19937_64& rng) {
  auto b = a;
  for (auto& x : b) {
    const int r = static_cast<int>(rng() % 100);
    int v = x + (r < 80 ? static_cast<int>(rng() % 9) - 4 : static_cast<int>(rng() % 256) - 128);
    x = static_cast<std::uint8_t>(std::clamp(v, 0, 255));
  }
  return b;
}

TEST(PixelKernels, ScalarAlwaysAvailable) {
  EXPECT_TRUE(isa_supported(Isa::scalar));
  EXPECT_EQ(kernels_for(Isa::scalar).isa, Isa::scalar);
  EXPECT_TRUE(isa_supported(kernels().isa));
}

TEST(PixelKernels, UnavailableIsaThrows) {
  for (auto isa : {Isa::avx2, Isa::neon}) {
    if (!isa_supported(isa)) {
      EXPECT_THROW(kernels_for(isa), std::invalid_argument);
    }
  }
}

TEST(PixelKernels, ScalarReferenceByHand) {
  const std::vector<std::uint8_t> a{0, 10, 20, 255};
  const std::vector<std::uint8_t> b{0, 15, 40, 0};
  const auto& k = kernels_for(Isa::scalar);
  EXPECT_EQ(k.sse(a.data(), b.data(), 4), 25u + 400u + 65025u);
  const auto m = k.motion_sse(a.data(), b.data(), 4, 10);
  EXPECT_EQ(m.count, 2u);
  EXPECT_EQ(m.sse, 400u + 65025u);
  const auto w = k.window_moments(a.data(), b.data(), 2, 2, 2);
  EXPECT_EQ(w.sum_a, 285u);
  EXPECT_EQ(w.sum_b, 55u);
  EXPECT_EQ(w.sum_aa, 100u + 400u + 65025u);
  EXPECT_EQ(w.sum_bb, 225u + 1600u);
  EXPECT_EQ(w.sum_ab, 150u + 800u);
}

TEST(PixelKernels, VariantsMatchScalarOnRandomBuffers) {
  const auto& ref = kernels_for(Isa::scalar);
  std::mt19937_64 rng(2024);
  for (const auto* k : variants()) {
    for (int trial = 0; trial < 300; ++trial) {
      const std::size_t n = rng() % 5000;
      const auto a = noise(n, rng);
      const auto b = trial % 2 ? perturb(a, rng) : noise(n, rng);
      ASSERT_EQ(k->sse(a.data(), b.data(), n), ref.sse(a.data(), b.data(), n)) << "n=" << n;
      const auto delta = static_cast<std::uint8_t>(trial % 3 == 0 ? rng() : rng() % 16);
      const auto x = k->motion_sse(a.data(), b.data(), n, delta);
      const auto y = ref.motion_sse(a.data(), b.data(), n, delta);
      ASSERT_EQ(x.sse, y.sse);
      ASSERT_EQ(x.count, y.count);
    }
  }
}

TEST(PixelKernels, VariantsMatchScalarOnExtremeLongBuffers) {
  const auto& ref = kernels_for(Isa::scalar);
  const std::size_t n = (1u << 20) + 37;
  std::vector<std::uint8_t> a(n, 0);
  std::vector<std::uint8_t> b(n, 255);
  for (const auto* k : variants()) {
    EXPECT_EQ(k->sse(a.data(), b.data(), n), ref.sse(a.data(), b.data(), n));
    EXPECT_EQ(k->sse(a.data(), b.data(), n), 65025ull * n);
    const auto x = k->motion_sse(b.data(), a.data(), n, 0);
    EXPECT_EQ(x.count, n);
    EXPECT_EQ(x.sse, 65025ull * n);
    EXPECT_EQ(k->motion_sse(a.data(), b.data(), n, 255).count, 0u);
  }
}

TEST(PixelKernels, WindowMomentsMatchScalar) {
  const auto& ref = kernels_for(Isa::scalar);
  std::mt19937_64 rng(77);
  for (const auto* k : variants()) {
    for (int trial = 0; trial < 500; ++trial) {
      const std::size_t width = 1 + rng() % 20;
      const std::size_t rows = 1 + rng() % 12;
      const std::size_t stride = width + rng() % 9;
      const auto a = noise(stride * rows, rng);
      const auto b = perturb(a, rng);
      const auto x = k->window_moments(a.data(), b.data(), stride, width, rows);
      const auto y = ref.window_moments(a.data(), b.data(), stride, width, rows);
      ASSERT_EQ(x.sum_a, y.sum_a);
      ASSERT_EQ(x.sum_b, y.sum_b);
      ASSERT_EQ(x.sum_aa, y.sum_aa);
      ASSERT_EQ(x.sum_bb, y.sum_bb);
      ASSERT_EQ(x.sum_ab, y.sum_ab) << width << "x" << rows;
    }
  }
}

}  // namespace
}  // namespace semcn::simd
