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

#include "semcn/video/synthetic.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "semcn/core_model.hpp"

namespace semcn::video {

namespace {

constexpr std::size_t kSquare = 12;

std::uint8_t background(std::size_t y, std::size_t x, std::size_t h, std::size_t w) {
  const double gx = w > 1 ? static_cast<double>(x) / static_cast<double>(w - 1) : 0.0;
  const double gy = h > 1 ? static_cast<double>(y) / static_cast<double>(h - 1) : 0.0;
  return static_cast<std::uint8_t>(20.0 + 150.0 * gx + 50.0 * gy + 0.5);
}

struct Square {
  long y = 0, x = 0, vy = 1, vx = 2;

  void step(std::size_t h, std::size_t w) {
    const long max_y = static_cast<long>(h) - static_cast<long>(kSquare);
    const long max_x = static_cast<long>(w) - static_cast<long>(kSquare);
    if (y + vy < 0 || y + vy > max_y) vy = -vy;
    if (x + vx < 0 || x + vx > max_x) vx = -vx;
    y = std::clamp(y + vy, 0L, std::max(0L, max_y));
    x = std::clamp(x + vx, 0L, std::max(0L, max_x));
  }
};

void draw_scene(Frame& f, const Square& sq, bool inverted, std::uint8_t value) {
  for (std::size_t y = 0; y < f.height; ++y) {
    for (std::size_t x = 0; x < f.width; ++x) {
      const std::uint8_t bg = background(y, x, f.height, f.width);
      f.at(y, x) = inverted ? static_cast<std::uint8_t>(255 - bg) : bg;
    }
  }
  for (std::size_t y = 0; y < kSquare && sq.y + static_cast<long>(y) < static_cast<long>(f.height); ++y) {
    for (std::size_t x = 0; x < kSquare && sq.x + static_cast<long>(x) < static_cast<long>(f.width); ++x) {
      f.at(static_cast<std::size_t>(sq.y) + y, static_cast<std::size_t>(sq.x) + x) = value;
    }
  }
}

// Square that moves for 5-15 frames, then holds still for 5-15 frames, and so on.
FrameSequence moving_rect(std::size_t n, std::size_t h, std::size_t w, std::uint64_t seed,
                          std::size_t first_inverted) {
  std::mt19937_64 rng(seed);
  Square sq;
  sq.y = static_cast<long>(rng() % std::max<std::size_t>(1, h - std::min(h, kSquare)));
  sq.x = static_cast<long>(rng() % std::max<std::size_t>(1, w - std::min(w, kSquare)));
  if (rng() & 1) sq.vy = -sq.vy;
  if (rng() & 1) sq.vx = -sq.vx;
  bool moving = true;
  std::size_t left = 5 + rng() % 11;

  FrameSequence seq;
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0) {
      if (left == 0) {
        moving = !moving;
        left = 5 + rng() % 11;
      }
      if (moving) sq.step(h, w);
      --left;
    }
    Frame f(h, w);
    const bool inverted = i >= first_inverted;
    draw_scene(f, sq, inverted, inverted ? 10 : 235);
    seq.frames.push_back(std::move(f));
  }
  return seq;
}

}  // namespace

FrameSequence synthetic_sequence(std::string_view name, std::size_t n_frames, std::size_t height,
                                 std::size_t width, std::uint64_t seed) {
  if (height == 0 || width == 0) throw ValidationError("synthetic frames need non-zero dimensions");
  if (name == "moving-rect") return moving_rect(n_frames, height, width, seed, n_frames);
  if (name == "two-scene") return moving_rect(n_frames, height, width, seed, n_frames / 2);
  FrameSequence seq;
  if (name == "constant") {
    seq.frames.assign(n_frames, Frame(height, width, 128));
    return seq;
  }
  if (name == "ramp") {
    for (std::size_t i = 0; i < n_frames; ++i) {
      Frame f(height, width);
      for (std::size_t y = 0; y < height; ++y) {
        for (std::size_t x = 0; x < width; ++x) {
          f.at(y, x) = static_cast<std::uint8_t>(((x + 2 * i) * 3 + y) % 256);
        }
      }
      seq.frames.push_back(std::move(f));
    }
    return seq;
  }
  throw ValidationError("unknown synthetic sequence '" + std::string(name) + "'");
}

}  // namespace semcn::video
