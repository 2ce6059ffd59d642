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

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "nohide/nohiding.hpp"
#include "nohide/tomo.hpp"
#include "nohide/zx.hpp"

// JSON carries doubles in nlohmann's shortest round-trip form; CSV uses %.17g.
namespace nohide::report {

using nlohmann::json;

/// {"re": [[...]], "im": [[...]]}
json matrix_json(const ComplexMatrix& m);
json statevector_json(const StateVector& s);

/// {basis, shots, counts: {bitstring: int}}
json counts_json(const tomo::ShotCounts& c);
tomo::ShotCounts counts_from_json(const json& j);

/// {raw_min_eigenvalue, fidelity, trace_distance, matrix_re, matrix_im}; the
/// matrix is the physical (projected) estimate.
json tomography_json(const tomo::TomographyResult& r);

json perfect_json(const PerfectResult& r, RandomizerTag tag, tomo::Shots shots, std::uint64_t seed);

inline constexpr std::string_view kSweepCsvHeader =
    "p,trace_distance_exact,trace_distance_tomo,fidelity_exact,fidelity_tomo,fidelity_bound,"
    "raw_min_eigenvalue";

std::string sweep_csv(std::span<const ExperimentRecord> records);
json sweep_json(std::span<const ExperimentRecord> records);

/// %.17g
std::string format_double(double v);

json diagram_json(const zx::Diagram& d);
zx::Diagram diagram_from_json(const json& j);
json trace_json(std::span<const zx::RewriteStep> trace);
std::vector<zx::RewriteStep> trace_from_json(const json& j);

/// Writes to a sibling temporary and renames it over `path`, so readers never
/// see a partial file.
void write_atomic(const std::filesystem::path& path, std::string_view contents);

}  // namespace nohide::report
