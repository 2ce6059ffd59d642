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
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nohide/qmath.hpp"

namespace nohide::tomo {

/// Shot budget per measurement basis. std::nullopt selects the exact mode,
/// which feeds exact expectation values into the reconstruction.
using Shots = std::optional<std::uint64_t>;
inline constexpr Shots kExact = std::nullopt;

struct ShotCounts {
    std::string basis;                             // one of X/Y/Z per measured qubit
    std::map<std::string, std::uint64_t> counts;   // bitstring (qubit 0 first) -> count
    std::uint64_t shots = 0;

    bool operator==(const ShotCounts&) const = default;
};

/// Born probabilities of each outcome after rotating every qubit into its
/// basis (X: H, Y: S^dagger then H, Z: nothing).
std::vector<double> basis_probabilities(const DensityMatrix& state, std::string_view basis);

/// Draws `shots` i.i.d. outcomes with an Rng seeded by `seed`.
ShotCounts measure_shots(const DensityMatrix& state, std::string_view basis, std::uint64_t shots,
                         std::uint64_t seed);

/// Parity estimator sum (-1)^{parity} count / shots over the whole outcome.
double expectation(const ShotCounts& counts);

/// Estimator for `pauli`, which may hold 'I' where the basis is ignored; the
/// remaining positions must agree with counts.basis.
double expectation(const ShotCounts& counts, std::string_view pauli);

/// The 3^n full-weight bases over {X, Y, Z}, in lexicographic order.
std::vector<std::string> measurement_bases(int num_qubits);

/// The 4^n - 1 non-identity Pauli labels over {I, X, Y, Z}.
std::vector<std::string> pauli_labels(int num_qubits);

using ExpectationMap = std::map<std::string, double>;

double exact_expectation(const DensityMatrix& state, std::string_view pauli);
ExpectationMap exact_expectations(const DensityMatrix& state);

/// Averages every compatible basis for each Pauli label.
ExpectationMap estimate_expectations(std::span<const ShotCounts> counts, int num_qubits);

/// Linear-inversion output: Hermitian with unit trace, not necessarily PSD.
struct TomogramRaw {
    ComplexMatrix matrix;
    double min_eigenvalue = 0;
};

/// rho = (I + sum_P <P> P) / 2^n. Requires all 4^n - 1 labels.
TomogramRaw reconstruct(const ExpectationMap& expectations, int num_qubits);

/// Closest PSD unit-trace spectrum to `descending` (sum 1) in Euclidean norm:
/// negative entries are zeroed from the smallest upward and each deficit is
/// spread uniformly over what remains.
std::vector<double> project_spectrum(std::vector<double> descending);

/// Frobenius-nearest density matrix to the raw reconstruction.
DensityMatrix project_physical(const TomogramRaw& raw);

struct TomographyResult {
    TomogramRaw raw;
    DensityMatrix physical;
    DensityMatrix ideal;
    double fidelity = 0;
    double trace_distance = 0;
    std::vector<ShotCounts> counts;  // empty in exact mode
};

/// Reduces `state` to `qubits`, measures every basis (basis k uses
/// derive_seed(seed, k)), reconstructs, projects and scores against the exact
/// reduced state.
TomographyResult tomo_pipeline(const DensityMatrix& state, std::span<const int> qubits, Shots shots,
                               std::uint64_t seed);

}  // namespace nohide::tomo
