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
#include <string>
#include <string_view>
#include <vector>

#include "semcn/video/frame.hpp"
#include "semcn/video/sampling.hpp"

namespace semcn::video {

struct KeyframePolicy {
  enum class Kind { fixed, content };
  Kind kind = Kind::fixed;
  std::size_t value = 25;  // interval for fixed, budget for content

  /// "fixed:N" or "content:B".
  static KeyframePolicy parse(std::string_view text);
  std::string to_string() const;
};

struct VideoConfig {
  /// "synthetic:<name>" or a path to a SEMFRAMES file.
  std::string frames = "synthetic:moving-rect";
  std::size_t synthetic_frames = 100;
  std::size_t synthetic_height = 64;
  std::size_t synthetic_width = 64;
  std::uint64_t seed = 7;
  KeyframePolicy keyframe;
  std::size_t factor = 4;
  double tau_frame = 2.0;
  double tau_motion = 100.0;
  double keep_ratio = 1.0;
  CodedRates rates;
};

FrameSequence load_source(const VideoConfig& config);

struct FrameReport {
  std::size_t index = 0;
  bool keyframe = false;
  bool redundant = false;
  double psnr_db = 0.0;
  double ssim = 0.0;
};

struct VideoReport {
  std::vector<FrameReport> frames;
  SamplingPlan plan;
  double bpp = 0.0;
  double mean_psnr_db = 0.0;
  double mean_ssim = 0.0;
  FrameSequence reconstruction;
};

/// Sensing mask, downsampling, keyframe selection, redundant-frame removal,
/// stream accounting, reconstruction, and per-frame quality against `source`.
VideoReport run_video(const VideoConfig& config, const FrameSequence& source);

}  // namespace semcn::video
