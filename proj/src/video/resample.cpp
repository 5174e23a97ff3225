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

#include "semcn/video/resample.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "semcn/core_model.hpp"

namespace semcn::video {

namespace {

constexpr double kA = -0.5;

struct Taps {
  std::array<std::size_t, 4> index;
  std::array<double, 4> weight;
};

// Four source taps for every output coordinate along one axis.
std::vector<Taps> axis_taps(std::size_t in, std::size_t out, double scale) {
  std::vector<Taps> taps(out);
  const auto last = static_cast<long>(in) - 1;
  for (std::size_t o = 0; o < out; ++o) {
    const double src = (static_cast<double>(o) + 0.5) * scale - 0.5;
    const double base = std::floor(src);
    const double t = src - base;
    for (int k = 0; k < 4; ++k) {
      const long idx = static_cast<long>(base) - 1 + k;
      taps[o].index[k] = static_cast<std::size_t>(std::clamp(idx, 0L, last));
      taps[o].weight[k] = cubic_weight(t - (k - 1));
    }
  }
  return taps;
}

std::uint8_t quantize(double v) {
  return static_cast<std::uint8_t>(std::clamp(std::floor(v + 0.5), 0.0, 255.0));
}

Frame resample(const Frame& frame, std::size_t out_h, std::size_t out_w, double scale) {
  const auto rows = axis_taps(frame.height, out_h, scale);
  const auto cols = axis_taps(frame.width, out_w, scale);
  // Horizontal pass into doubles, then vertical pass and a single rounding.
  std::vector<double> mid(frame.height * out_w);
  for (std::size_t y = 0; y < frame.height; ++y) {
    const auto src = frame.row(y);
    for (std::size_t x = 0; x < out_w; ++x) {
      const auto& t = cols[x];
      double acc = 0.0;
      for (int k = 0; k < 4; ++k) acc += t.weight[k] * src[t.index[k]];
      mid[y * out_w + x] = acc;
    }
  }
  Frame out(out_h, out_w);
  for (std::size_t y = 0; y < out_h; ++y) {
    const auto& t = rows[y];
    for (std::size_t x = 0; x < out_w; ++x) {
      double acc = 0.0;
      for (int k = 0; k < 4; ++k) acc += t.weight[k] * mid[t.index[k] * out_w + x];
      out.at(y, x) = quantize(acc);
    }
  }
  return out;
}

}  // namespace

double cubic_weight(double x) {
  const double ax = std::abs(x);
  if (ax <= 1.0) return ((kA + 2.0) * ax - (kA + 3.0)) * ax * ax + 1.0;
  if (ax < 2.0) return ((kA * ax - 5.0 * kA) * ax + 8.0 * kA) * ax - 4.0 * kA;
  return 0.0;
}

Frame downsample(const Frame& frame, std::size_t factor) {
  if (factor == 0) throw ValidationError("downsampling factor must be >= 1");
  if (frame.height % factor != 0 || frame.width % factor != 0) {
    throw ValidationError("frame " + std::to_string(frame.height) + "x" + std::to_string(frame.width) +
                          " is not divisible by " + std::to_string(factor));
  }
  if (factor == 1) return frame;
  return resample(frame, frame.height / factor, frame.width / factor, static_cast<double>(factor));
}

Frame upsample(const Frame& frame, std::size_t factor) {
  if (factor == 0) throw ValidationError("upsampling factor must be >= 1");
  if (factor == 1) return frame;
  return resample(frame, frame.height * factor, frame.width * factor, 1.0 / static_cast<double>(factor));
}

}  // namespace semcn::video
