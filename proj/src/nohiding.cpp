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

#include "nohide/nohiding.hpp"

#include <cmath>
#include <exception>
#include <numbers>
#include <sstream>

#include "nohide/rng.hpp"

namespace nohide {

namespace {

ComplexMatrix ket_bra(int ket, int bra) {
    ComplexMatrix m(4, 4);
    m(ket, bra) = 1.0;
    return m;
}

const Complex kI{0, 1};

}  // namespace

std::string_view tag_name(RandomizerTag tag) {
    switch (tag) {
        case RandomizerTag::Eq1: return "eq1";
        case RandomizerTag::Eq2: return "eq2";
        case RandomizerTag::Eq6: return "eq6";
    }
    return "?";
}

RandomizerTag parse_tag(std::string_view name) {
    if (name == "eq1") return RandomizerTag::Eq1;
    if (name == "eq2") return RandomizerTag::Eq2;
    if (name == "eq6") return RandomizerTag::Eq6;
    throw std::invalid_argument("unknown randomizer variant '" + std::string(name) +
                                "' (expected eq1, eq2 or eq6)");
}

RandomizerVariant build_randomizer(RandomizerTag tag) {
    using namespace pauli;
    ComplexMatrix u(8, 8);
    switch (tag) {
        case RandomizerTag::Eq1:
            u = kron(I(), ket_bra(0b00, 0b00)) + kron(X(), ket_bra(0b01, 0b01)) +
                kron(kI * Y(), ket_bra(0b10, 0b10)) + kron(Z(), ket_bra(0b11, 0b11));
            break;
        case RandomizerTag::Eq2:
            u = kron(I(), ket_bra(0b01, 0b00)) + kron(X(), ket_bra(0b00, 0b01)) -
                kron(kI * Y(), ket_bra(0b11, 0b10)) - kron(Z(), ket_bra(0b10, 0b11));
            break;
        case RandomizerTag::Eq6:
            u = kron(I(), ket_bra(0b00, 0b00)) + kron(X(), ket_bra(0b01, 0b01)) -
                kron(kI * Y(), ket_bra(0b10, 0b10)) + kron(Z(), ket_bra(0b11, 0b11));
            break;
    }
    return {tag, std::move(u)};
}

std::vector<Gate> randomizer_gates(RandomizerTag tag, int system, int ancilla1, int ancilla2) {
    switch (tag) {
        case RandomizerTag::Eq1:
            // Ancilla1 applies X then Z (= iY); ancilla2 applies X.
            return {Gate::cnot(ancilla1, system), Gate::cnot(ancilla2, system), Gate::h(system),
                    Gate::cnot(ancilla1, system), Gate::h(system)};
        case RandomizerTag::Eq2:
            // Z then X on ancilla1 (= -iY), then relabel ancilla2.
            return {Gate::cnot(ancilla2, system), Gate::h(system), Gate::cnot(ancilla1, system),
                    Gate::h(system),             Gate::cnot(ancilla1, system), Gate::x(ancilla2)};
        case RandomizerTag::Eq6:
            return {Gate::h(system), Gate::cnot(ancilla1, system), Gate::h(system),
                    Gate::cnot(ancilla1, system), Gate::cnot(ancilla2, system)};
    }
    return {};
}

std::vector<Gate> decoder_gates(RandomizerTag tag, int ancilla1, int ancilla2) {
    std::vector<Gate> out;
    if (tag == RandomizerTag::Eq6) {
        // diag(1, 1, -1, 1) on the ancillas turns the -iY branch into +iY.
        out = {Gate::z(ancilla1), Gate::h(ancilla2), Gate::cnot(ancilla1, ancilla2), Gate::h(ancilla2)};
    }
    out.push_back(Gate::cnot(ancilla1, ancilla2));
    out.push_back(Gate::h(ancilla1));
    out.push_back(Gate::cnot(ancilla1, ancilla2));
    return out;
}

StateVector expected_bell_state(RandomizerTag tag) {
    const double r = 1.0 / std::numbers::sqrt2;
    if (tag == RandomizerTag::Eq2) {
        return StateVector({0, r, r, 0});
    }
    return StateVector({r, 0, 0, r});
}

StateVector default_input_state() {
    return StateVector({std::cos(std::numbers::pi / 8), std::sin(std::numbers::pi / 8)});
}

Circuit default_prep_circuit(int num_qubits, int qubit) {
    Circuit c(num_qubits);
    c.add(Gate::h(qubit)).add(Gate::t(qubit)).add(Gate::h(qubit)).add(Gate::s(qubit));
    return c;
}

Circuit u3_prep_circuit(int num_qubits, int qubit, double theta, double phi) {
    Circuit c(num_qubits);
    c.add(Gate::u3(theta, phi, 0, qubit));
    return c;
}

Circuit build_erasure_circuit(RandomizerTag tag, bool decomposed) {
    Circuit c(3);
    c.add(Gate::h(1)).add(Gate::h(2));
    if (decomposed) {
        for (auto& g : randomizer_gates(tag)) {
            c.add(std::move(g));
        }
    } else {
        c.add(Gate::unitary(build_randomizer(tag).matrix, {0, 1, 2}));
    }
    return c;
}

Circuit build_full_circuit(RandomizerTag tag, bool decomposed) {
    Circuit c = build_erasure_circuit(tag, decomposed);
    for (auto& g : decoder_gates(tag)) {
        c.add(std::move(g));
    }
    return c;
}

Circuit build_imperfect_bleach(double p, RandomizerTag tag) {
    if (!(p >= 0.0 && p <= 1.0)) {
        std::ostringstream ss;
        ss << "imperfect circuit: p = " << p << " outside [0, 1]";
        throw std::invalid_argument(ss.str());
    }
    using namespace imperfect_layout;
    Circuit c(4);
    c.add(Gate::u3(2 * std::asin(std::sqrt(p)), 0, 0, kControl));
    c.add(Gate::ch(kControl, kAncilla1));
    c.add(Gate::ch(kControl, kAncilla2));
    c.add(Gate::unitary(build_randomizer(tag).matrix, {kSystem, kAncilla1, kAncilla2}));
    return c;
}

Circuit build_imperfect_circuit(double p, RandomizerTag tag) {
    using namespace imperfect_layout;
    Circuit c = build_imperfect_bleach(p, tag);
    for (auto& g : decoder_gates(tag, kAncilla1, kAncilla2)) {
        c.add(std::move(g));
    }
    c.add(Gate::swap(0, 1));
    c.add(Gate::swap(0, 2));
    return c;
}

std::vector<double> default_p_grid() {
    std::vector<double> grid;
    for (int k = 0; k <= 10; ++k) {
        const double s = std::sin(k * std::numbers::pi / 20);
        grid.push_back(s * s);
    }
    return grid;
}

PerfectResult run_perfect(RandomizerTag tag, const StateVector& psi, tomo::Shots shots,
                          std::uint64_t seed) {
    if (psi.num_qubits() != 1) throw std::invalid_argument("run_perfect: psi must be one qubit");
    PerfectResult r;
    r.final_state = run_statevector(build_full_circuit(tag), tensor(psi, StateVector::zeros(2)));
    const auto state = DensityMatrix::pure(r.final_state);
    const int pair[] = {0, 1};
    const int decoded[] = {2};
    r.bell = tomo::tomo_pipeline(state, pair, shots, derive_seed(seed, 0));
    r.transfer = tomo::tomo_pipeline(state, decoded, shots, derive_seed(seed, 1));
    r.bell_fidelity = fidelity(r.bell.physical, DensityMatrix::pure(expected_bell_state(tag)));
    r.transfer_fidelity = fidelity(r.transfer.physical, DensityMatrix::pure(psi));
    return r;
}

std::vector<ExperimentRecord> run_sweep(const std::vector<double>& p_values,
                                        const SweepOptions& options) {
    for (double p : p_values) {
        if (!(p >= 0.0 && p <= 1.0)) {
            std::ostringstream ss;
            ss << "run_sweep: p = " << p << " outside [0, 1]";
            throw std::invalid_argument(ss.str());
        }
    }
    using namespace imperfect_layout;
    const Circuit prep = options.input_prep ? *options.input_prep : default_prep_circuit(1, 0);
    if (prep.num_qubits() != 1) {
        throw std::invalid_argument("run_sweep: input prep must act on one qubit");
    }
    const DensityMatrix psi = DensityMatrix::pure(run_statevector(prep, StateVector::zeros(1)));
    const DensityMatrix bell = DensityMatrix::pure(expected_bell_state(options.tag));
    const DensityMatrix mixed = DensityMatrix::maximally_mixed(1);

    std::vector<ExperimentRecord> records(p_values.size());
    std::vector<std::exception_ptr> errors(p_values.size());
    const auto count = static_cast<std::int64_t>(p_values.size());
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < count; ++i) {
        try {
            const double p = p_values[i];
            static_assert(kSystem == 0, "the 1-qubit prep is appended at qubit 0");
            Circuit c(4);
            c.append(prep);
            c.append(build_imperfect_circuit(p, options.tag));
            const auto state = DensityMatrix::pure(run_statevector(c, StateVector::zeros(4)));

            ExperimentRecord rec;
            rec.p = p;
            rec.seed = derive_seed(options.seed, static_cast<std::uint64_t>(i));
            const int sys[] = {kSystemReadout};
            const int pair[] = {kSystemReadout, kAncilla1Readout};
            const int decoded[] = {kDecodedReadout};
            rec.system_state = partial_trace(state, sys);
            rec.bell_fidelity = fidelity(partial_trace(state, pair), bell);
            rec.transfer_fidelity = fidelity(partial_trace(state, decoded), psi);
            rec.trace_distance_to_mixed = trace_distance(rec.system_state, mixed);
            rec.fidelity_to_mixed = fidelity(rec.system_state, mixed);
            rec.fidelity_lower_bound = 1.0 - (1.0 - p) / 2.0;

            const auto tomo = tomo::tomo_pipeline(state, sys, options.shots, rec.seed);
            rec.trace_distance_tomo = trace_distance(tomo.physical, mixed);
            rec.fidelity_tomo = fidelity(tomo.physical, mixed);
            rec.raw_min_eigenvalue = tomo.raw.min_eigenvalue;
            records[i] = std::move(rec);
        } catch (...) {
            errors[i] = std::current_exception();
        }
    }
    for (auto& e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
    return records;
}

}  // namespace nohide
