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

#include "semcn/video/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <string>

#include "semcn/core_model.hpp"
#include "semcn/simd/pixel_kernels.hpp"
#include "semcn/video/resample.hpp"

namespace semcn::video {

bool SamplingPlan::is_keyframe(std::size_t i) const {
  return std::binary_search(keyframe_indices.begin(), keyframe_indices.end(), i);
}

void validate(const SamplingPlan& plan, std::size_t n_frames) {
  if (plan.downsample_factor == 0) throw ValidationError("downsample_factor must be >= 1");
  if (plan.redundant_mask.size() != n_frames) {
    throw ValidationError("redundant mask has " + std::to_string(plan.redundant_mask.size()) +
                          " entries for " + std::to_string(n_frames) + " frames");
  }
  if (n_frames == 0) return;
  const auto& k = plan.keyframe_indices;
  if (k.empty() || k.front() != 0) throw ValidationError("frame 0 must be a keyframe");
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (k[i] >= n_frames) throw ValidationError("keyframe index " + std::to_string(k[i]) + " out of range");
    if (i > 0 && k[i] <= k[i - 1]) throw ValidationError("keyframe indices must be sorted and unique");
    if (plan.redundant_mask[k[i]]) {
      throw ValidationError("keyframe " + std::to_string(k[i]) + " is marked redundant");
    }
  }
}

FrameSequence apply_sensing_mask(const FrameSequence& seq, double keep_ratio, std::uint64_t seed) {
  if (!(keep_ratio > 0.0 && keep_ratio <= 1.0)) throw ValidationError("keep_ratio must lie in (0, 1]");
  validate(seq);
  if (keep_ratio == 1.0 || seq.frames.empty()) return seq;
  const std::size_t bh = (seq.height() + kSensingBlock - 1) / kSensingBlock;
  const std::size_t bw = (seq.width() + kSensingBlock - 1) / kSensingBlock;
  const std::size_t blocks = bh * bw;
  const auto drop = static_cast<std::size_t>(std::llround((1.0 - keep_ratio) * static_cast<double>(blocks)));

  // Partial Fisher-Yates over block ids; the first `drop` entries are off.
  std::vector<std::size_t> ids(blocks);
  std::iota(ids.begin(), ids.end(), 0);
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < drop; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(rng() % (blocks - i));
    std::swap(ids[i], ids[j]);
  }

  FrameSequence out = seq;
  for (auto& frame : out.frames) {
    for (std::size_t i = 0; i < drop; ++i) {
      const std::size_t by = ids[i] / bw;
      const std::size_t bx = ids[i] % bw;
      for (std::size_t y = by * kSensingBlock; y < std::min(frame.height, (by + 1) * kSensingBlock); ++y) {
        for (std::size_t x = bx * kSensingBlock; x < std::min(frame.width, (bx + 1) * kSensingBlock); ++x) {
          frame.at(y, x) = 0;
        }
      }
    }
  }
  return out;
}

std::vector<std::size_t> select_keyframes_fixed(std::size_t n_frames, std::size_t interval) {
  if (interval == 0) throw ValidationError("keyframe interval must be >= 1");
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n_frames; i += interval) out.push_back(i);
  return out;
}

std::vector<std::size_t> select_keyframes_content(const FrameSequence& seq, std::size_t budget) {
  validate(seq);
  const std::size_t n = seq.size();
  if (budget < 1 || budget > n) {
    throw ValidationError("keyframe budget " + std::to_string(budget) + " must lie in [1, " +
                          std::to_string(n) + "]");
  }
  std::vector<bool> chosen(n, false);
  std::vector<double> nearest(n, INFINITY);
  std::vector<std::size_t> out;
  std::size_t next = 0;
  for (std::size_t round = 0; round < budget; ++round) {
    chosen[next] = true;
    out.push_back(next);
    for (std::size_t i = 0; i < n; ++i) {
      if (!chosen[i]) nearest[i] = std::min(nearest[i], mse(seq.frames[i], seq.frames[next]));
    }
    double best = -1.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (!chosen[i] && nearest[i] > best) {
        best = nearest[i];
        next = i;
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

RedundancyStats redundancy_stats(const Frame& current, const Frame& previous) {
  if (current.height != previous.height || current.width != previous.width) {
    throw ValidationError("frame dimensions differ");
  }
  RedundancyStats s;
  s.frame_mse = mse(current, previous);
  const auto motion =
      simd::kernels().motion_sse(current.pixels.data(), previous.pixels.data(), current.size(), kMotionDelta);
  s.motion_mse = motion.count == 0 ? 0.0 : static_cast<double>(motion.sse) / static_cast<double>(motion.count);
  return s;
}

std::vector<bool> detect_redundant(const FrameSequence& seq,
                                   const std::vector<std::size_t>& keyframes, double tau_frame,
                                   double tau_motion) {
  if (!(tau_frame >= 0.0) || !(tau_motion >= 0.0)) throw ValidationError("thresholds must be >= 0");
  validate(seq);
  std::vector<bool> mask(seq.size(), false);
  for (std::size_t i = 1; i < seq.size(); ++i) {
    if (std::find(keyframes.begin(), keyframes.end(), i) != keyframes.end()) continue;
    const auto s = redundancy_stats(seq.frames[i], seq.frames[i - 1]);
    mask[i] = s.frame_mse <= tau_frame && s.motion_mse <= tau_motion;
  }
  return mask;
}

double compute_bpp(const SamplingPlan& plan, std::size_t n_frames, std::size_t height,
                   std::size_t width, const CodedRates& rates) {
  validate(plan, n_frames);
  if (n_frames == 0 || height == 0 || width == 0) return 0.0;
  if (height % plan.downsample_factor != 0 || width % plan.downsample_factor != 0) {
    throw ValidationError("frame dimensions are not divisible by the downsampling factor");
  }
  const double hr_pixels = static_cast<double>(height * width);
  const double lr_pixels = hr_pixels / static_cast<double>(plan.downsample_factor * plan.downsample_factor);
  double bits = 0.0;
  for (std::size_t i = 0; i < n_frames; ++i) {
    if (plan.is_keyframe(i)) {
      bits += hr_pixels * rates.hr_bits_per_pixel;
    } else if (!plan.redundant_mask[i]) {
      bits += lr_pixels * rates.lr_bits_per_pixel;
    }
  }
  return bits / (static_cast<double>(n_frames) * hr_pixels);
}

FrameSequence reconstruct_baseline(const SamplingPlan& plan, const FrameSequence& lr,
                                   const std::vector<std::optional<Frame>>& hr_keyframes) {
  validate(plan, lr.size());
  validate(lr);
  if (hr_keyframes.size() != lr.size()) {
    throw ValidationError("keyframe table must have one slot per frame");
  }
  FrameSequence out;
  out.fps = lr.fps;
  for (std::size_t i = 0; i < lr.size(); ++i) {
    if (plan.is_keyframe(i)) {
      if (!hr_keyframes[i]) throw ValidationError("missing HR data for keyframe " + std::to_string(i));
      out.frames.push_back(*hr_keyframes[i]);
    } else if (plan.redundant_mask[i]) {
      out.frames.push_back(out.frames.back());
    } else {
      out.frames.push_back(upsample(lr.frames[i], plan.downsample_factor));
    }
  }
  return out;
}

}  // namespace semcn::video
