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

#include <cstdlib>
#include <stdexcept>
#include <string>

#include "semcn/simd/pixel_kernels.hpp"

namespace semcn::simd {

std::string_view to_string(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return "scalar";
    case Isa::avx2:
      return "avx2";
    case Isa::neon:
      return "neon";
  }
  return "unknown";
}

bool isa_supported(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return true;
    case Isa::avx2:
#if defined(SEMCN_HAVE_AVX2)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case Isa::neon:
#if defined(SEMCN_HAVE_NEON)
      return true;
#else
      return false;
#endif
  }
  return false;
}

const PixelKernels& kernels_for(Isa isa) {
  if (!isa_supported(isa)) {
    throw std::invalid_argument("pixel kernels for " + std::string(to_string(isa)) +
                                " are not available on this machine");
  }
  switch (isa) {
#if defined(SEMCN_HAVE_AVX2)
    case Isa::avx2:
      return detail::avx2_kernels;
#endif
#if defined(SEMCN_HAVE_NEON)
    case Isa::neon:
      return detail::neon_kernels;
#endif
    default:
      return detail::scalar_kernels;
  }
}

namespace {

const PixelKernels& select() {
  if (const char* forced = std::getenv("SEMCN_SIMD")) {
    const std::string name(forced);
    for (Isa isa : {Isa::scalar, Isa::avx2, Isa::neon}) {
      if (name == to_string(isa)) return kernels_for(isa);
    }
    throw std::invalid_argument("SEMCN_SIMD=" + name + " is not one of scalar, avx2, neon");
  }
  for (Isa isa : {Isa::avx2, Isa::neon}) {
    if (isa_supported(isa)) return kernels_for(isa);
  }
  return detail::scalar_kernels;
}

}  // namespace

const PixelKernels& kernels() {
  static const PixelKernels& chosen = select();
  return chosen;
}

}  // namespace semcn::simd
