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

#include <array>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "nohide/qmath.hpp"

namespace nohide {

enum class GateKind { H, X, Y, Z, S, T, U3, CNOT, CH, SWAP, Unitary };

std::string_view gate_kind_name(GateKind kind);

/// One gate application. Controlled kinds list the control first.
class Gate {
   public:
    static Gate h(int q) { return Gate(GateKind::H, {q}); }
    static Gate x(int q) { return Gate(GateKind::X, {q}); }
    static Gate y(int q) { return Gate(GateKind::Y, {q}); }
    static Gate z(int q) { return Gate(GateKind::Z, {q}); }
    static Gate s(int q) { return Gate(GateKind::S, {q}); }
    static Gate t(int q) { return Gate(GateKind::T, {q}); }
    static Gate u3(double theta, double phi, double lambda, int q);
    static Gate cnot(int control, int target) { return Gate(GateKind::CNOT, {control, target}); }
    static Gate ch(int control, int target) { return Gate(GateKind::CH, {control, target}); }
    static Gate swap(int a, int b) { return Gate(GateKind::SWAP, {a, b}); }
    /// Arbitrary unitary on `targets`; rejected unless unitary within 1e-10.
    static Gate unitary(ComplexMatrix m, std::vector<int> targets);

    /// Throws std::invalid_argument on arity or repeated-index violations.
    Gate(GateKind kind, std::vector<int> targets);

    GateKind kind() const { return kind_; }
    const std::vector<int>& targets() const { return targets_; }
    /// (theta, phi, lambda); only meaningful for U3.
    const std::array<double, 3>& angles() const { return angles_; }
    /// Payload of a Unitary gate.
    const ComplexMatrix& payload() const { return *payload_; }

    bool operator==(const Gate& other) const;

   private:
    GateKind kind_;
    std::vector<int> targets_;
    std::array<double, 3> angles_{0, 0, 0};
    std::shared_ptr<const ComplexMatrix> payload_;
};

std::size_t gate_arity(GateKind kind);

/// The 2^k x 2^k matrix of the gate on its own targets (in target order).
ComplexMatrix gate_unitary(const Gate& g);

/// U3(theta, phi, lambda) = [[cos(t/2), -e^{i l} sin(t/2)], [e^{i p} sin(t/2), e^{i(p+l)} cos(t/2)]].
ComplexMatrix u3_matrix(double theta, double phi, double lambda);

/// Full 2^n x 2^n embedding of `g` in an n-qubit register.
ComplexMatrix gate_matrix(const Gate& g, int num_qubits);

class Circuit {
   public:
    explicit Circuit(int num_qubits);

    int num_qubits() const { return num_qubits_; }
    const std::vector<Gate>& gates() const { return gates_; }
    std::size_t size() const { return gates_.size(); }

    /// Throws std::out_of_range if any target is outside the register.
    Circuit& add(Gate g);
    Circuit& append(const Circuit& other);

    bool operator==(const Circuit& other) const = default;

   private:
    int num_qubits_;
    std::vector<Gate> gates_;
};

/// Product of all gate matrices (last gate leftmost).
ComplexMatrix circuit_matrix(const Circuit& c);

/// Parse failure carrying 1-based line and column.
class ParseError : public std::runtime_error {
   public:
    ParseError(int line, int column, const std::string& message);
    int line() const { return line_; }
    int column() const { return column_; }
    const std::string& detail() const { return detail_; }

   private:
    int line_;
    int column_;
    std::string detail_;
};

/// Parses the line-oriented circuit text format:
///
///     qubits N
///     h q | x q | y q | z q | s q | t q
///     u3 theta phi lambda q      (decimal radians)
///     cx c t | ch c t | swap a b
///
/// `#` starts a comment; blank lines are ignored.
Circuit parse_circuit(std::string_view text);

/// Inverse of parse_circuit. Unitary gates have no text form and are rejected.
std::string render_circuit(const Circuit& c);

}  // namespace nohide
