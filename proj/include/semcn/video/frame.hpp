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
#include <span>
#include <vector>

namespace semcn::video {

/// Grayscale frame, row-major, 8 bits per pixel.
struct Frame {
  std::size_t height = 0;
  std::size_t width = 0;
  std::vector<std::uint8_t> pixels;

  Frame() = default;
  Frame(std::size_t h, std::size_t w, std::uint8_t fill = 0) : height(h), width(w), pixels(h * w, fill) {}

  std::uint8_t& at(std::size_t y, std::size_t x) { return pixels[y * width + x]; }
  std::uint8_t at(std::size_t y, std::size_t x) const { return pixels[y * width + x]; }
  std::span<const std::uint8_t> row(std::size_t y) const { return {pixels.data() + y * width, width}; }
  std::size_t size() const { return pixels.size(); }

  friend bool operator==(const Frame&, const Frame&) = default;
};

struct FrameSequence {
  std::vector<Frame> frames;
  double fps = 30.0;

  std::size_t size() const { return frames.size(); }
  std::size_t height() const { return frames.empty() ? 0 : frames.front().height; }
  std::size_t width() const { return frames.empty() ? 0 : frames.front().width; }
};

/// Uniform, non-empty dimensions divisible by `factor`.
void validate(const FrameSequence& seq, std::size_t factor = 1);

/// Mean squared error over all pixels; frames must share dimensions.
double mse(const Frame& a, const Frame& b);

}  // namespace semcn::video
