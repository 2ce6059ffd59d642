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

Channel::Channel(std::vector<ComplexMatrix> kraus_ops) : kraus_(std::move(kraus_ops)) {
    if (kraus_.empty()) {
        throw std::invalid_argument("Channel: no Kraus operators");
    }
    const std::size_t d = kraus_.front().rows();
    qubits_for_dim(d);
    for (const auto& k : kraus_) {
        if (k.rows() != d || k.cols() != d) {
            throw std::invalid_argument("Channel: Kraus operators differ in size");
        }
    }
    const double err = completeness_error();
    if (err > 1e-10) {
        std::ostringstream ss;
        ss << "Channel: not trace preserving (sum K^dagger K deviates from I by " << err << ")";
        throw std::invalid_argument(ss.str());
    }
}

double Channel::completeness_error() const {
    ComplexMatrix sum(dim(), dim());
    for (const auto& k : kraus_) {
        sum += k.adjoint() * k;
    }
    return max_abs_diff(sum, ComplexMatrix::identity(dim()));
}

Channel depolarizing_channel(double p) {
    if (!(p >= 0.0 && p <= 1.0)) {
        std::ostringstream ss;
        ss << "depolarizing_channel: p = " << p << " outside [0, 1]";
        throw std::invalid_argument(ss.str());
    }
    const double w_identity = 1.0 - 3.0 * p / 4.0;
    const double w_pauli = p / 4.0;
    std::vector<ComplexMatrix> ops;
    if (w_identity > 0) {
        ops.push_back(std::sqrt(w_identity) * pauli::I());
    }
    if (w_pauli > 0) {
        ops.push_back(std::sqrt(w_pauli) * pauli::X());
        ops.push_back(std::sqrt(w_pauli) * pauli::Y());
        ops.push_back(std::sqrt(w_pauli) * pauli::Z());
    }
    return Channel(std::move(ops));
}

DensityMatrix apply_channel(const Channel& ch, const DensityMatrix& rho, std::span<const int> targets) {
    if (static_cast<int>(targets.size()) != ch.arity()) {
        throw std::invalid_argument("apply_channel: target count does not match channel arity");
    }
    ComplexMatrix acc(rho.dim(), rho.dim());
    for (const auto& k : ch.kraus_ops()) {
        ComplexMatrix term = rho.matrix();
        kernels::conjugate(term, rho.num_qubits(), k, targets);
        acc += term;
    }
    return DensityMatrix::unchecked(std::move(acc));
}

}  // namespace nohide
