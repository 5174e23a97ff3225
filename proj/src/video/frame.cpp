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

#include "semcn/video/frame.hpp"

#include <string>

#include "semcn/core_model.hpp"
#include "semcn/simd/pixel_kernels.hpp"

namespace semcn::video {

void validate(const FrameSequence& seq, std::size_t factor) {
  if (factor == 0) throw ValidationError("downsampling factor must be >= 1");
  if (!(seq.fps > 0.0)) throw ValidationError("fps must be > 0");
  for (std::size_t i = 0; i < seq.frames.size(); ++i) {
    const auto& f = seq.frames[i];
    if (f.height == 0 || f.width == 0 || f.pixels.size() != f.height * f.width) {
      throw ValidationError("frame " + std::to_string(i) + " is malformed");
    }
    if (f.height != seq.height() || f.width != seq.width()) {
      throw ValidationError("frame " + std::to_string(i) + " has dimensions " +
                            std::to_string(f.height) + "x" + std::to_string(f.width) +
                            ", expected " + std::to_string(seq.height()) + "x" +
                            std::to_string(seq.width()));
    }
  }
  if (seq.height() % factor != 0 || seq.width() % factor != 0) {
    throw ValidationError("frame dimensions " + std::to_string(seq.height()) + "x" +
                          std::to_string(seq.width()) + " are not divisible by " +
                          std::to_string(factor));
  }
}

double mse(const Frame& a, const Frame& b) {
  if (a.height != b.height || a.width != b.width) throw ValidationError("frame dimensions differ");
  if (a.size() == 0) return 0.0;
  const auto sse = simd::kernels().sse(a.pixels.data(), b.pixels.data(), a.size());
  return static_cast<double>(sse) / static_cast<double>(a.size());
}

}  // namespace semcn::video
