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

#include "semcn/video/frame.hpp"

namespace semcn::video {

inline constexpr double kPsnrCapDb = 100.0;

/// 10 log10(255^2 / mse), capped at 100 dB (and exactly 100 for mse == 0).
double psnr_from_mse(double mse_value);
double psnr(const Frame& a, const Frame& b);

/// Mean single-scale SSIM over all 8x8 windows (stride 1) with
/// C1 = (0.01 * 255)^2 and C2 = (0.03 * 255)^2. Frames smaller than a
/// window are scored as one window.
double ssim(const Frame& a, const Frame& b);

}  // namespace semcn::video
