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

#include "semcn/video/quality.hpp"

#include <algorithm>
#include <cmath>

#include "semcn/core_model.hpp"
#include "semcn/simd/pixel_kernels.hpp"

namespace semcn::video {

namespace {

constexpr std::size_t kWindow = 8;
constexpr double kC1 = (0.01 * 255.0) * (0.01 * 255.0);
constexpr double kC2 = (0.03 * 255.0) * (0.03 * 255.0);

double window_ssim(const simd::WindowMoments& m, double n) {
  const double mu_a = static_cast<double>(m.sum_a) / n;
  const double mu_b = static_cast<double>(m.sum_b) / n;
  const double var_a = static_cast<double>(m.sum_aa) / n - mu_a * mu_a;
  const double var_b = static_cast<double>(m.sum_bb) / n - mu_b * mu_b;
  const double cov = static_cast<double>(m.sum_ab) / n - mu_a * mu_b;
  return ((2.0 * mu_a * mu_b + kC1) * (2.0 * cov + kC2)) /
         ((mu_a * mu_a + mu_b * mu_b + kC1) * (var_a + var_b + kC2));
}

}  // namespace

double psnr_from_mse(double mse_value) {
  if (!(mse_value >= 0.0)) throw ValidationError("MSE must be >= 0");
  if (mse_value == 0.0) return kPsnrCapDb;
  return std::min(kPsnrCapDb, 10.0 * std::log10(255.0 * 255.0 / mse_value));
}

double psnr(const Frame& a, const Frame& b) { return psnr_from_mse(mse(a, b)); }

double ssim(const Frame& a, const Frame& b) {
  if (a.height != b.height || a.width != b.width) throw ValidationError("frame dimensions differ");
  if (a.size() == 0) throw ValidationError("cannot score empty frames");
  const auto& k = simd::kernels();
  const std::size_t wh = std::min(kWindow, a.height);
  const std::size_t ww = std::min(kWindow, a.width);
  const double n = static_cast<double>(wh * ww);
  double total = 0.0;
  std::size_t windows = 0;
  for (std::size_t y = 0; y + wh <= a.height; ++y) {
    for (std::size_t x = 0; x + ww <= a.width; ++x) {
      const std::size_t off = y * a.width + x;
      total += window_ssim(k.window_moments(a.pixels.data() + off, b.pixels.data() + off, a.width, ww, wh), n);
      ++windows;
    }
  }
  return total / static_cast<double>(windows);
}

}  // namespace semcn::video
