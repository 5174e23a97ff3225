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

#include "semcn/video/frame_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>

#include "semcn/core_model.hpp"

namespace semcn::video {

namespace {

constexpr std::string_view kMagic = "SEMFRAMES";
constexpr int kFormatVersion = 1;

std::string shortest(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::ifstream open_in(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open '" + path.string() + "' for reading");
  return in;
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot open '" + path.string() + "' for writing");
  return out;
}

}  // namespace

void write_frames(std::ostream& out, const FrameSequence& seq) {
  validate(seq);
  out << kMagic << ' ' << kFormatVersion << '\n'
      << seq.size() << ' ' << seq.height() << ' ' << seq.width() << ' ' << shortest(seq.fps) << '\n';
  for (const auto& f : seq.frames) {
    out.write(reinterpret_cast<const char*>(f.pixels.data()), static_cast<std::streamsize>(f.size()));
  }
  if (!out) throw ValidationError("failed to write frame data");
}

FrameSequence read_frames(std::istream& in) {
  std::string magic;
  int version = 0;
  std::size_t count = 0, height = 0, width = 0;
  double fps = 0.0;
  if (!(in >> magic >> version) || magic != kMagic) throw ValidationError("not a SEMFRAMES stream");
  if (version != kFormatVersion) {
    throw ValidationError("unsupported SEMFRAMES version " + std::to_string(version));
  }
  if (!(in >> count >> height >> width >> fps)) throw ValidationError("malformed SEMFRAMES header");
  if (in.get() != '\n') throw ValidationError("malformed SEMFRAMES header terminator");
  if (height == 0 || width == 0) throw ValidationError("SEMFRAMES dimensions must be non-zero");
  FrameSequence seq;
  seq.fps = fps;
  for (std::size_t i = 0; i < count; ++i) {
    Frame f(height, width);
    in.read(reinterpret_cast<char*>(f.pixels.data()), static_cast<std::streamsize>(f.size()));
    if (in.gcount() != static_cast<std::streamsize>(f.size())) {
      throw ValidationError("SEMFRAMES stream truncated in frame " + std::to_string(i));
    }
    seq.frames.push_back(std::move(f));
  }
  validate(seq);
  return seq;
}

void write_frames(const std::filesystem::path& path, const FrameSequence& seq) {
  auto out = open_out(path);
  write_frames(out, seq);
}

FrameSequence read_frames(const std::filesystem::path& path) {
  auto in = open_in(path);
  return read_frames(in);
}

void write_pgm(const std::filesystem::path& path, const Frame& frame) {
  auto out = open_out(path);
  out << "P5\n" << frame.width << ' ' << frame.height << "\n255\n";
  out.write(reinterpret_cast<const char*>(frame.pixels.data()), static_cast<std::streamsize>(frame.size()));
  if (!out) throw ValidationError("failed to write '" + path.string() + "'");
}

Frame read_pgm(const std::filesystem::path& path) {
  auto in = open_in(path);
  std::string magic;
  std::size_t width = 0, height = 0;
  int maxval = 0;
  if (!(in >> magic >> width >> height >> maxval) || magic != "P5" || maxval != 255) {
    throw ValidationError("'" + path.string() + "' is not an 8-bit binary PGM");
  }
  in.get();
  Frame f(height, width);
  in.read(reinterpret_cast<char*>(f.pixels.data()), static_cast<std::streamsize>(f.size()));
  if (in.gcount() != static_cast<std::streamsize>(f.size())) {
    throw ValidationError("'" + path.string() + "' is truncated");
  }
  return f;
}

}  // namespace semcn::video
