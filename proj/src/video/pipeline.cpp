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

#include "semcn/video/pipeline.hpp"

#include <charconv>
#include <optional>

#include "semcn/core_model.hpp"
#include "semcn/video/frame_io.hpp"
#include "semcn/video/quality.hpp"
#include "semcn/video/resample.hpp"
#include "semcn/video/synthetic.hpp"

namespace semcn::video {

KeyframePolicy KeyframePolicy::parse(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw ValidationError("keyframe policy '" + std::string(text) + "' must be fixed:N or content:B");
  }
  const auto kind = text.substr(0, colon);
  const auto number = text.substr(colon + 1);
  KeyframePolicy p;
  if (kind == "fixed") {
    p.kind = Kind::fixed;
  } else if (kind == "content") {
    p.kind = Kind::content;
  } else {
    throw ValidationError("unknown keyframe policy '" + std::string(kind) + "'");
  }
  const auto res = std::from_chars(number.data(), number.data() + number.size(), p.value);
  if (res.ec != std::errc() || res.ptr != number.data() + number.size() || p.value == 0) {
    throw ValidationError("keyframe policy needs a positive integer, got '" + std::string(number) + "'");
  }
  return p;
}

std::string KeyframePolicy::to_string() const {
  return (kind == Kind::fixed ? "fixed:" : "content:") + std::to_string(value);
}

FrameSequence load_source(const VideoConfig& config) {
  constexpr std::string_view prefix = "synthetic:";
  if (config.frames.rfind(prefix, 0) == 0) {
    return synthetic_sequence(std::string_view(config.frames).substr(prefix.size()),
                              config.synthetic_frames, config.synthetic_height,
                              config.synthetic_width, config.seed);
  }
  return read_frames(config.frames);
}

VideoReport run_video(const VideoConfig& config, const FrameSequence& source) {
  validate(source, config.factor);
  if (source.frames.empty()) throw ValidationError("the source sequence has no frames");
  const FrameSequence sensed = apply_sensing_mask(source, config.keep_ratio, config.seed);

  FrameSequence lr;
  lr.fps = sensed.fps;
  for (const auto& f : sensed.frames) lr.frames.push_back(downsample(f, config.factor));

  VideoReport report;
  report.plan.downsample_factor = config.factor;
  report.plan.keyframe_indices = config.keyframe.kind == KeyframePolicy::Kind::fixed
                                     ? select_keyframes_fixed(sensed.size(), config.keyframe.value)
                                     : select_keyframes_content(sensed, config.keyframe.value);
  report.plan.redundant_mask =
      detect_redundant(sensed, report.plan.keyframe_indices, config.tau_frame, config.tau_motion);
  report.bpp = compute_bpp(report.plan, sensed.size(), sensed.height(), sensed.width(), config.rates);

  std::vector<std::optional<Frame>> hr(sensed.size());
  for (std::size_t k : report.plan.keyframe_indices) hr[k] = sensed.frames[k];
  report.reconstruction = reconstruct_baseline(report.plan, lr, hr);

  double psnr_sum = 0.0;
  double ssim_sum = 0.0;
  for (std::size_t i = 0; i < source.size(); ++i) {
    FrameReport fr;
    fr.index = i;
    fr.keyframe = report.plan.is_keyframe(i);
    fr.redundant = report.plan.redundant_mask[i];
    fr.psnr_db = psnr(source.frames[i], report.reconstruction.frames[i]);
    fr.ssim = ssim(source.frames[i], report.reconstruction.frames[i]);
    psnr_sum += fr.psnr_db;
    ssim_sum += fr.ssim;
    report.frames.push_back(fr);
  }
  report.mean_psnr_db = psnr_sum / static_cast<double>(source.size());
  report.mean_ssim = ssim_sum / static_cast<double>(source.size());
  return report;
}

}  // namespace semcn::video
