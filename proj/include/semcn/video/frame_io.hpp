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

#include <filesystem>
#include <iosfwd>

#include "semcn/video/frame.hpp"

namespace semcn::video {

// Frame container: a text header
//   SEMFRAMES 1\n
//   <count> <height> <width> <fps>\n
// followed by count * height * width raw bytes, frames in order, rows
// top to bottom.

void write_frames(std::ostream& out, const FrameSequence& seq);
FrameSequence read_frames(std::istream& in);

void write_frames(const std::filesystem::path& path, const FrameSequence& seq);
FrameSequence read_frames(const std::filesystem::path& path);

/// Binary portable graymap (P5) of one frame.
void write_pgm(const std::filesystem::path& path, const Frame& frame);
Frame read_pgm(const std::filesystem::path& path);

}  // namespace semcn::video
