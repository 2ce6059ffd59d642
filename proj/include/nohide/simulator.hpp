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

#include <vector>

#include "nohide/circuit.hpp"
#include "nohide/qmath.hpp"

namespace nohide {

/// Kraus representation of a CPTP map.
class Channel {
   public:
    /// Validates equal square sizes and sum K^dagger K = I within 1e-10.
    explicit Channel(std::vector<ComplexMatrix> kraus_ops);

    const std::vector<ComplexMatrix>& kraus_ops() const { return kraus_; }
    std::size_t dim() const { return kraus_.front().rows(); }
    int arity() const { return qubits_for_dim(dim()); }

    /// Largest entrywise deviation of sum K^dagger K from the identity.
    double completeness_error() const;

   private:
    std::vector<ComplexMatrix> kraus_;
};

/// rho -> (1 - 3p/4) rho + p/4 (X rho X + Y rho Y + Z rho Z) = p I/2 + (1-p) rho.
/// Zero-weight Kraus operators are omitted.
Channel depolarizing_channel(double p);

/// A channel acting on `targets`, applied before gate number `position`
/// (position == gate count means after the last gate).
struct ChannelAttachment {
    Channel channel;
    std::vector<int> targets;
    std::size_t position;
};

/// Applies sum_k K rho K^dagger on the targets of an n-qubit state.
DensityMatrix apply_channel(const Channel& ch, const DensityMatrix& rho, std::span<const int> targets);

StateVector run_statevector(const Circuit& c, const StateVector& input);

DensityMatrix run_density(const Circuit& c, const std::vector<ChannelAttachment>& channels,
                          const DensityMatrix& input);

inline DensityMatrix run_density(const Circuit& c, const DensityMatrix& input) {
    return run_density(c, {}, input);
}

}  // namespace nohide
