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

#include "nohide/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>


namespace nohide {

std::string_view gate_kind_name(GateKind kind) {
    switch (kind) {
        case GateKind::H: return "H";
        case GateKind::X: return "X";
        case GateKind::Y: return "Y";
        case GateKind::Z: return "Z";
        case GateKind::S: return "S";
        case GateKind::T: return "T";
        case GateKind::U3: return "U3";
        case GateKind::CNOT: return "CNOT";
        case GateKind::CH: return "CH";
        case GateKind::SWAP: return "SWAP";
        case GateKind::Unitary: return "UNITARY";
    }
    return "?";
}

std::size_t gate_arity(GateKind kind) {
    switch (kind) {
        case GateKind::CNOT:
        case GateKind::CH:
        case GateKind::SWAP:
            return 2;
        case GateKind::Unitary:
            return 0;  // carried by the payload
        default:
            return 1;
    }
}

Gate::Gate(GateKind kind, std::vector<int> targets) : kind_(kind), targets_(std::move(targets)) {
    if (kind_ != GateKind::Unitary && targets_.size() != gate_arity(kind_)) {
        std::ostringstream ss;
        ss << gate_kind_name(kind_) << " expects " << gate_arity(kind_) << " qubit(s), got "
           << targets_.size();
        throw std::invalid_argument(ss.str());
    }
    for (std::size_t i = 0; i < targets_.size(); ++i) {
        if (targets_[i] < 0) {
            throw std::out_of_range("negative qubit index");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (targets_[i] == targets_[j]) {
                throw std::invalid_argument("repeated qubit index " + std::to_string(targets_[i]));
            }
        }
    }
}

Gate Gate::u3(double theta, double phi, double lambda, int q) {
    Gate g(GateKind::U3, {q});
    g.angles_ = {theta, phi, lambda};
    return g;
}

Gate Gate::unitary(ComplexMatrix m, std::vector<int> targets) {
    if (targets.empty() || m.rows() != (std::size_t{1} << targets.size()) || !m.is_square()) {
        throw std::invalid_argument("UNITARY payload size does not match its target count");
    }
    if (!m.is_unitary(1e-10)) {
        throw std::invalid_argument("UNITARY payload is not unitary within 1e-10");
    }
    Gate g(GateKind::Unitary, std::move(targets));
    g.payload_ = std::make_shared<const ComplexMatrix>(std::move(m));
    return g;
}

bool Gate::operator==(const Gate& other) const {
    if (kind_ != other.kind_ || targets_ != other.targets_ || angles_ != other.angles_) {
        return false;
    }
    if (kind_ == GateKind::Unitary) {
        return *payload_ == *other.payload_;
    }
    return true;
}

ComplexMatrix u3_matrix(double theta, double phi, double lambda) {
    const double c = std::cos(theta / 2);
    const double s = std::sin(theta / 2);
    return {{c, -std::polar(1.0, lambda) * s},
            {std::polar(1.0, phi) * s, std::polar(1.0, phi + lambda) * c}};
}

ComplexMatrix gate_unitary(const Gate& g) {
    const double r = 1.0 / std::numbers::sqrt2;
    switch (g.kind()) {
        case GateKind::H: return {{r, r}, {r, -r}};
        case GateKind::X: return pauli::X();
        case GateKind::Y: return pauli::Y();
        case GateKind::Z: return pauli::Z();
        case GateKind::S: return {{1, 0}, {0, Complex{0, 1}}};
        case GateKind::T: return {{1, 0}, {0, std::polar(1.0, std::numbers::pi / 4)}};
        case GateKind::U3: return u3_matrix(g.angles()[0], g.angles()[1], g.angles()[2]);
        case GateKind::CNOT:
            return {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}};
        case GateKind::CH:
            return {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, r, r}, {0, 0, r, -r}};
        case GateKind::SWAP:
            return {{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}};
        case GateKind::Unitary: return g.payload();
    }
    throw std::logic_error("unhandled gate kind");
}

ComplexMatrix gate_matrix(const Gate& g, int num_qubits) {
    const auto& targets = g.targets();
    for (int t : targets) {
        if (t >= num_qubits) {
            throw std::out_of_range("gate target outside register");
        }
    }
    const ComplexMatrix local = gate_unitary(g);
    const std::size_t dim = std::size_t{1} << num_qubits;
    const std::size_t k = targets.size();

    std::size_t target_mask = 0;
    for (int t : targets) {
        target_mask |= std::size_t{1} << (num_qubits - 1 - t);
    }
    auto local_index = [&](std::size_t full) {
        std::size_t l = 0;
        for (std::size_t i = 0; i < k; ++i) {
            l = (l << 1) | ((full >> (num_qubits - 1 - targets[i])) & 1U);
        }
        return l;
    };

    // <r|G|c> = local(r_T, c_T) when r and c agree outside the targets.
    ComplexMatrix out(dim, dim);
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < dim; ++c) {
            if ((r & ~target_mask) == (c & ~target_mask)) {
                out(r, c) = local(local_index(r), local_index(c));
            }
        }
    }
    return out;
}

Circuit::Circuit(int num_qubits) : num_qubits_(num_qubits) {
    if (num_qubits < 1) {
        throw std::invalid_argument("circuit needs at least one qubit");
    }
}

Circuit& Circuit::add(Gate g) {
    for (int t : g.targets()) {
        if (t >= num_qubits_) {
            throw std::out_of_range("index out of range: qubit " + std::to_string(t) +
                                    " in a " + std::to_string(num_qubits_) + "-qubit register");
        }
    }
    gates_.push_back(std::move(g));
    return *this;
}

Circuit& Circuit::append(const Circuit& other) {
    if (other.num_qubits_ > num_qubits_) {
        throw std::invalid_argument("append: circuit is wider than the target register");
    }
    for (const auto& g : other.gates_) {
        add(g);
    }
    return *this;
}

ComplexMatrix circuit_matrix(const Circuit& c) {
    ComplexMatrix m = ComplexMatrix::identity(std::size_t{1} << c.num_qubits());
    for (const auto& g : c.gates()) {
        m = gate_matrix(g, c.num_qubits()) * m;
    }
    return m;
}

}  // namespace nohide
