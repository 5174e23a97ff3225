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
#include <string_view>

#include "semcn/video/frame.hpp"

namespace semcn::video {

/// Seeded test content:
///   moving-rect  static ramp background with a bright square that alternates
///                between motion and pauses of seeded length
///   ramp         a ramp panning two pixels per frame
///   two-scene    moving-rect for the first half, a different scene after
///   constant     mid-grey frames
FrameSequence synthetic_sequence(std::string_view name, std::size_t n_frames, std::size_t height,
                                 std::size_t width, std::uint64_t seed);

}  // namespace semcn::video
