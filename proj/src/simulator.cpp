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

#include <cmath>
#include <sstream>

#include "nohide/kernels.hpp"
#include "nohide/simulator.hpp"

namespace nohide {

StateVector run_statevector(const Circuit& c, const StateVector& input) {
    if (input.num_qubits() != c.num_qubits()) {
        std::ostringstream ss;
        ss << "run_statevector: circuit has " << c.num_qubits() << " qubits, input has "
           << input.num_qubits();
        throw std::invalid_argument(ss.str());
    }
    std::vector<Complex> amps(input.amplitudes().begin(), input.amplitudes().end());
    for (const auto& g : c.gates()) {
        kernels::apply_operator(amps, c.num_qubits(), gate_unitary(g), g.targets());
    }
    return StateVector::unchecked(std::move(amps));
}

DensityMatrix run_density(const Circuit& c, const std::vector<ChannelAttachment>& channels,
                          const DensityMatrix& input) {
    if (input.num_qubits() != c.num_qubits()) {
        std::ostringstream ss;
        ss << "run_density: circuit has " << c.num_qubits() << " qubits, input has "
           << input.num_qubits();
        throw std::invalid_argument(ss.str());
    }
    for (const auto& att : channels) {
        if (att.position > c.size()) {
            throw std::out_of_range("run_density: channel position past the end of the circuit");
        }
        for (int t : att.targets) {
            if (t < 0 || t >= c.num_qubits()) {
                throw std::out_of_range("run_density: channel target out of range");
            }
        }
        if (static_cast<int>(att.targets.size()) != att.channel.arity()) {
            throw std::invalid_argument("run_density: channel arity does not match its targets");
        }
    }

    ComplexMatrix m = input.matrix();
    auto apply_channels_at = [&](std::size_t position) {
        for (const auto& att : channels) {
            if (att.position == position) {
                m = apply_channel(att.channel, DensityMatrix::unchecked(std::move(m)), att.targets).matrix();
            }
        }
    };
    for (std::size_t i = 0; i < c.size(); ++i) {
        apply_channels_at(i);
        const Gate& g = c.gates()[i];
        kernels::conjugate(m, c.num_qubits(), gate_unitary(g), g.targets());
    }
    apply_channels_at(c.size());
    return DensityMatrix::unchecked(std::move(m));
}

}  // namespace nohide
