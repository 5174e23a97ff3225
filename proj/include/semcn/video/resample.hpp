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

#include "semcn/video/frame.hpp"

namespace semcn::video {

/// Catmull-Rom cubic convolution kernel (a = -0.5).
double cubic_weight(double x);

/// Bicubic resampling with pixel-centre alignment and replicated borders.
/// Results are rounded half-up and clamped to [0, 255].
Frame downsample(const Frame& frame, std::size_t factor = 4);
Frame upsample(const Frame& frame, std::size_t factor = 4);

}  // namespace semcn::video
