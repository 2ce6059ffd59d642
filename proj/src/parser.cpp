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

#include <charconv>
#include <cmath>
#include <cstdio>
#include <optional>
#include <sstream>
#include <unordered_map>

#include "nohide/circuit.hpp"

namespace nohide {

ParseError::ParseError(int line, int column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                         ": " + message),
      line_(line),
      column_(column),
      detail_(message) {}

namespace {

struct Token {
    std::string_view text;
    int column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) {
            ++i;
        }
        if (i >= line.size()) {
            break;
        }
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') {
            ++i;
        }
        out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
    }
    return out;
}

struct Mnemonic {
    GateKind kind;
    int angles;
    int qubits;
};

const std::unordered_map<std::string_view, Mnemonic>& mnemonics() {
    static const std::unordered_map<std::string_view, Mnemonic> table = {
        {"h", {GateKind::H, 0, 1}},     {"x", {GateKind::X, 0, 1}},
        {"y", {GateKind::Y, 0, 1}},     {"z", {GateKind::Z, 0, 1}},
        {"s", {GateKind::S, 0, 1}},     {"t", {GateKind::T, 0, 1}},
        {"u3", {GateKind::U3, 3, 1}},   {"cx", {GateKind::CNOT, 0, 2}},
        {"ch", {GateKind::CH, 0, 2}},   {"swap", {GateKind::SWAP, 0, 2}},
    };
    return table;
}

std::optional<long long> parse_index(std::string_view s) {
    long long v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || v < 0) {
        return std::nullopt;
    }
    return v;
}

std::optional<double> parse_angle(std::string_view s) {
    if (!s.empty() && s.front() == '+') {
        s.remove_prefix(1);
    }
    double v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(v)) {
        return std::nullopt;
    }
    return v;
}

constexpr long long kMaxQubits = 24;

}  // namespace

Circuit parse_circuit(std::string_view text) {
    std::optional<Circuit> circuit;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        const auto tokens = tokenize(line);
        if (tokens.empty()) {
            if (end == text.size()) {
                break;
            }
            continue;
        }
        const Token& head = tokens.front();

        if (head.text == "qubits") {
            if (circuit) {
                throw ParseError(line_no, head.column, "duplicate 'qubits' header");
            }
            if (tokens.size() != 2) {
                throw ParseError(line_no, head.column, "'qubits' expects exactly one count");
            }
            const auto n = parse_index(tokens[1].text);
            if (!n || *n < 1 || *n > kMaxQubits) {
                throw ParseError(line_no, tokens[1].column,
                                 "malformed qubit count '" + std::string(tokens[1].text) + "'");
            }
            circuit.emplace(static_cast<int>(*n));
            continue;
        }

        const auto it = mnemonics().find(head.text);
        if (it == mnemonics().end()) {
            throw ParseError(line_no, head.column,
                             "unknown mnemonic '" + std::string(head.text) + "'");
        }
        if (!circuit) {
            throw ParseError(line_no, head.column, "gate before the 'qubits' header");
        }
        const Mnemonic& m = it->second;
        const std::size_t expected = 1 + m.angles + m.qubits;
        if (tokens.size() != expected) {
            std::ostringstream ss;
            ss << "arity mismatch: '" << head.text << "' expects " << m.angles + m.qubits
               << " operand(s), got " << tokens.size() - 1;
            throw ParseError(line_no, head.column, ss.str());
        }
        std::array<double, 3> angles{0, 0, 0};
        for (int a = 0; a < m.angles; ++a) {
            const Token& tok = tokens[1 + a];
            const auto v = parse_angle(tok.text);
            if (!v) {
                throw ParseError(line_no, tok.column,
                                 "malformed angle literal '" + std::string(tok.text) + "'");
            }
            angles[a] = *v;
        }
        std::vector<int> qubits;
        for (int q = 0; q < m.qubits; ++q) {
            const Token& tok = tokens[1 + m.angles + q];
            const auto v = parse_index(tok.text);
            if (!v) {
                throw ParseError(line_no, tok.column,
                                 "malformed qubit index '" + std::string(tok.text) + "'");
            }
            if (*v >= circuit->num_qubits()) {
                std::ostringstream ss;
                ss << "index out of range: qubit " << *v << " in a " << circuit->num_qubits()
                   << "-qubit register";
                throw ParseError(line_no, tok.column, ss.str());
            }
            for (int prev : qubits) {
                if (prev == *v) {
                    throw ParseError(line_no, tok.column,
                                     "repeated qubit index " + std::to_string(*v));
                }
            }
            qubits.push_back(static_cast<int>(*v));
        }
        if (m.kind == GateKind::U3) {
            circuit->add(Gate::u3(angles[0], angles[1], angles[2], qubits[0]));
        } else {
            circuit->add(Gate(m.kind, std::move(qubits)));
        }
    }
    if (!circuit) {
        throw ParseError(line_no, 1, "missing 'qubits' header");
    }
    return std::move(*circuit);
}

std::string render_circuit(const Circuit& c) {
    std::ostringstream out;
    out << "qubits " << c.num_qubits() << "\n";
    char buf[64];
    for (const auto& g : c.gates()) {
        const auto& t = g.targets();
        switch (g.kind()) {
            case GateKind::H: out << "h " << t[0]; break;
            case GateKind::X: out << "x " << t[0]; break;
            case GateKind::Y: out << "y " << t[0]; break;
            case GateKind::Z: out << "z " << t[0]; break;
            case GateKind::S: out << "s " << t[0]; break;
            case GateKind::T: out << "t " << t[0]; break;
            case GateKind::U3:
                out << "u3";
                for (double a : g.angles()) {
                    std::snprintf(buf, sizeof buf, " %.17g", a);
                    out << buf;
                }
                out << " " << t[0];
                break;
            case GateKind::CNOT: out << "cx " << t[0] << " " << t[1]; break;
            case GateKind::CH: out << "ch " << t[0] << " " << t[1]; break;
            case GateKind::SWAP: out << "swap " << t[0] << " " << t[1]; break;
            case GateKind::Unitary:
                throw std::invalid_argument("render_circuit: UNITARY gates have no text form");
        }
        out << "\n";
    }
    return out.str();
}

}  // namespace nohide
