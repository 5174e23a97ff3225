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

#include <cstdint>
#include <vector>

#include "semcn/offload_opt.hpp"

namespace semcn::testing {

struct NaiveResult {
  std::vector<std::size_t> profile;  // action index per agent
  double energy_j = 0.0;
  std::size_t violations = 0;
};

/// Brute-force reference for the joint offloading problem. Recomputes the
/// rate, DVFS and latency formulas from scratch and walks every joint
/// profile with an odometer (last agent fastest). Keeps the first profile
/// with the fewest deadline violations, then the least total energy.
NaiveResult naive_search(const opt::OffloadProblem& problem, const opt::ActionGrid& grid);

/// Total energy and violation count of one profile under the reference formulas.
NaiveResult naive_evaluate(const opt::OffloadProblem& problem, const opt::ActionGrid& grid,
                           const std::vector<std::size_t>& profile);

struct RandomProblemShape {
  std::size_t agents = 2;
  std::size_t servers = 1;
  std::size_t freq_levels = 2;
  std::size_t power_levels = 3;
};

/// Seeded random problem whose parameters straddle the local/offload
/// crossover, so optima mix local and offloaded agents and some deadlines bind.
std::pair<opt::OffloadProblem, opt::ActionGrid> random_problem(const RandomProblemShape& shape,
                                                               std::uint64_t seed);

}  // namespace semcn::testing
