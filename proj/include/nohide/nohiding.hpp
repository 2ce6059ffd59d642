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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nohide/circuit.hpp"
#include "nohide/qmath.hpp"
#include "nohide/simulator.hpp"
#include "nohide/tomo.hpp"

namespace nohide {

/// Which controlled-Pauli randomizer to use. The three differ in the ancilla
/// labelling and the sign of the Y block:
///   Eq1: 1(x)|00><00| + X(x)|01><01| + iY(x)|10><10| + Z(x)|11><11|
///   Eq2: 1(x)|01><00| + X(x)|00><01| - iY(x)|11><10| - Z(x)|10><11|
///   Eq6: 1(x)|00><00| + X(x)|01><01| - iY(x)|10><10| + Z(x)|11><11|
enum class RandomizerTag { Eq1, Eq2, Eq6 };

std::string_view tag_name(RandomizerTag tag);  // "eq1", "eq2", "eq6"
RandomizerTag parse_tag(std::string_view name);

struct RandomizerVariant {
    RandomizerTag tag;
    ComplexMatrix matrix;  // 8x8, system qubit 0, ancillas 1 and 2
};

RandomizerVariant build_randomizer(RandomizerTag tag);

/// CNOT/H/X/Z decomposition of the randomizer on (system, ancilla1, ancilla2).
std::vector<Gate> randomizer_gates(RandomizerTag tag, int system = 0, int ancilla1 = 1,
                                   int ancilla2 = 2);

/// Two-ancilla decoder that moves psi onto ancilla2.
std::vector<Gate> decoder_gates(RandomizerTag tag, int ancilla1 = 1, int ancilla2 = 2);

/// The two-qubit state left on (system, ancilla1) after decoding.
StateVector expected_bell_state(RandomizerTag tag);

/// cos(pi/8)|0> + sin(pi/8)|1>, the default system input.
StateVector default_input_state();

/// H, T, H, S on `qubit`; prepares default_input_state() up to the global phase e^{i pi/8}.
Circuit default_prep_circuit(int num_qubits, int qubit = 0);

/// U3(theta, phi, 0) preparing cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>.
Circuit u3_prep_circuit(int num_qubits, int qubit, double theta, double phi);

/// H on both ancillas, then the randomizer on (0, 1, 2). With `decomposed`
/// the randomizer is emitted as elementary gates instead of one UNITARY.
Circuit build_erasure_circuit(RandomizerTag tag, bool decomposed = false);

/// Erasure followed by the decoder; psi ends on qubit 2.
Circuit build_full_circuit(RandomizerTag tag, bool decomposed = false);

struct PerfectResult {
    StateVector final_state;
    tomo::TomographyResult bell;      // qubits {0, 1}
    tomo::TomographyResult transfer;  // qubit 2
    double bell_fidelity = 0;         // tomogram vs expected_bell_state(tag)
    double transfer_fidelity = 0;     // tomogram vs psi
};

/// Runs build_full_circuit on psi (x) |00> and tomographs both outputs; the
/// Bell pair uses derive_seed(seed, 0), the decoded qubit derive_seed(seed, 1).
PerfectResult run_perfect(RandomizerTag tag, const StateVector& psi, tomo::Shots shots,
                          std::uint64_t seed);

/// Register layout of the imperfect-hiding experiment.
namespace imperfect_layout {
inline constexpr int kSystem = 0;
inline constexpr int kAncilla1 = 1;
inline constexpr int kControl = 2;
inline constexpr int kAncilla2 = 3;
/// Where the system qubit sits after the final swaps.
inline constexpr int kSystemReadout = 1;
/// Where the decoded copy of psi sits after the final swaps.
inline constexpr int kDecodedReadout = 3;
/// Where ancilla1 sits after the final swaps.
inline constexpr int kAncilla1Readout = 2;
}  // namespace imperfect_layout

/// Control prep U3(2 asin(sqrt p), 0, 0), CH from the control to each
/// ancilla, then the randomizer on (system, ancilla1, ancilla2). The system
/// stays on qubit 0.
Circuit build_imperfect_bleach(double p, RandomizerTag tag = RandomizerTag::Eq2);

/// build_imperfect_bleach plus decoder plus SWAP(0,1), SWAP(0,2), which leave
/// the system on qubit 1, the ancillas on 2 and 3 and the control on 0.
Circuit build_imperfect_circuit(double p, RandomizerTag tag = RandomizerTag::Eq2);

/// sin^2(k pi / 20) for k = 0..10.
std::vector<double> default_p_grid();

struct ExperimentRecord {
    double p = 1;
    double bell_fidelity = 0;
    double transfer_fidelity = 0;
    DensityMatrix system_state;
    double trace_distance_to_mixed = 0;
    double fidelity_to_mixed = 0;
    double fidelity_lower_bound = 0;  // 1 - (1 - p) / 2
    // Tomography of the system qubit (exact expectations in exact mode).
    double trace_distance_tomo = 0;
    double fidelity_tomo = 0;
    double raw_min_eigenvalue = 0;
    std::uint64_t seed = 0;  // derived seed used by this entry
};

struct SweepOptions {
    tomo::Shots shots = tomo::kExact;
    std::uint64_t seed = 0;
    RandomizerTag tag = RandomizerTag::Eq2;
    /// Replaces the H,T,H,S prep when set.
    std::optional<Circuit> input_prep;
};

/// One record per p. Entry i uses derive_seed(seed, i) for its tomography;
/// entries run in parallel.
std::vector<ExperimentRecord> run_sweep(const std::vector<double>& p_values,
                                        const SweepOptions& options = {});

}  // namespace nohide
