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
#include <optional>
#include <vector>

#include "semcn/video/frame.hpp"

namespace semcn::video {

/// Which frames travel at full resolution, which are dropped as redundant,
/// and the spatial downsampling applied to the rest.
struct SamplingPlan {
  std::vector<std::size_t> keyframe_indices;  // sorted, contains 0
  std::vector<bool> redundant_mask;           // one entry per frame
  std::size_t downsample_factor = 4;

  bool is_keyframe(std::size_t i) const;
};

void validate(const SamplingPlan& plan, std::size_t n_frames);

inline constexpr std::size_t kSensingBlock = 8;

/// Deactivates round((1 - keep_ratio) * blocks) pseudo-randomly chosen 8x8
/// pixel blocks (partial blocks at the right/bottom edges count as blocks).
/// The same blocks are zeroed in every frame.
FrameSequence apply_sensing_mask(const FrameSequence& seq, double keep_ratio, std::uint64_t seed);

/// {0, interval, 2 * interval, ...} below n_frames.
std::vector<std::size_t> select_keyframes_fixed(std::size_t n_frames, std::size_t interval);

/// Greedy farthest-frame selection: start from frame 0 and keep adding the
/// frame whose MSE to its nearest selected keyframe is largest (lowest index
/// on ties) until `budget` frames are chosen. Returned sorted.
std::vector<std::size_t> select_keyframes_content(const FrameSequence& seq, std::size_t budget);

/// Pixels whose successive absolute difference exceeds this form the motion
/// region.
inline constexpr std::uint8_t kMotionDelta = 10;

struct RedundancyStats {
  double frame_mse = 0.0;
  double motion_mse = 0.0;  // 0 when the motion region is empty
};

RedundancyStats redundancy_stats(const Frame& current, const Frame& previous);

/// Frame i (not a keyframe, i > 0) is redundant when the MSE against frame
/// i-1 is at most tau_frame and the motion-region MSE is at most tau_motion.
std::vector<bool> detect_redundant(const FrameSequence& seq,
                                   const std::vector<std::size_t>& keyframes, double tau_frame,
                                   double tau_motion);

/// Coding rates of the transmitted streams, bits per transmitted pixel.
struct CodedRates {
  double lr_bits_per_pixel = 1.0;
  double hr_bits_per_pixel = 0.5;
};

/// Stream bits per original-resolution pixel. Keyframes are carried at full
/// resolution only; every other non-redundant frame is carried downsampled.
double compute_bpp(const SamplingPlan& plan, std::size_t n_frames, std::size_t height,
                   std::size_t width, const CodedRates& rates);

/// Keyframe positions take the HR keyframe, redundant positions repeat the
/// previous reconstruction, and every other position is the bicubic upsample
/// of its LR frame. `hr_keyframes` is indexed by frame and must hold a frame
/// at every keyframe position.
FrameSequence reconstruct_baseline(const SamplingPlan& plan, const FrameSequence& lr,
                                   const std::vector<std::optional<Frame>>& hr_keyframes);

}  // namespace semcn::video
