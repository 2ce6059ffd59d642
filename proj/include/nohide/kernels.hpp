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

#include <span>

#include "nohide/qmath.hpp"

// Amplitude-update kernels shared by the statevector and density-matrix
// simulators. `apply_operator` is the OpenMP version used in production;
// `apply_operator_serial` is the plain loop it is tested and benchmarked
// against. Both apply a 2^k x 2^k operator to the listed target qubits of an
// n-qubit amplitude array (qubit 0 = most significant bit).
namespace nohide::kernels {

/// Registers smaller than this run the OpenMP kernel on a single thread.
inline constexpr std::size_t kParallelThreshold = std::size_t{1} << 12;

void apply_operator(std::span<Complex> amps, int num_qubits, const ComplexMatrix& op,
                    std::span<const int> targets);

void apply_operator_serial(std::span<Complex> amps, int num_qubits, const ComplexMatrix& op,
                           std::span<const int> targets);

/// rho <- K rho K^dagger, treating the row-major density matrix as a
/// 2n-qubit vector (row bits first, column bits second).
void conjugate(ComplexMatrix& rho, int num_qubits, const ComplexMatrix& op,
               std::span<const int> targets);

void conjugate_serial(ComplexMatrix& rho, int num_qubits, const ComplexMatrix& op,
                      std::span<const int> targets);

/// Sum of squared magnitudes; the OpenMP reduction used by the samplers.
double norm_squared(std::span<const Complex> amps);
double norm_squared_serial(std::span<const Complex> amps);

}  // namespace nohide::kernels
