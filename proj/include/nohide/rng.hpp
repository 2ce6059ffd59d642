// Copyright 2026 The nohide Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <random>

namespace nohide {

/// The generator behind every sampled quantity. std::mt19937_64 is fully
/// specified by the standard, so seeded streams are bit-identical across
/// platforms as long as we do our own distribution math (see uniform01).
using Rng = std::mt19937_64;

std::uint64_t splitmix64(std::uint64_t x);

/// Stream-splitting rule: substream `stream` of `seed` is seeded with
/// splitmix64(seed + (stream + 1) * 0x9E3779B97F4A7C15).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

/// Uniform double in [0, 1) from the top 53 bits of one draw.
double uniform01(Rng& rng);

}  // namespace nohide
