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

#include "nohide/tomo.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "nohide/kernels.hpp"
#include "nohide/rng.hpp"

namespace nohide::tomo {

namespace {

ComplexMatrix rotation_for(char basis) {
    const double r = 1.0 / std::numbers::sqrt2;
    switch (basis) {
        case 'X': return {{r, r}, {r, -r}};
        // H * S^dagger: maps |+i> to |0>.
        case 'Y': return {{r, Complex{0, -r}}, {r, Complex{0, r}}};
        case 'Z': return ComplexMatrix::identity(2);
        default:
            throw std::invalid_argument("invalid basis character '" + std::string(1, basis) + "'");
    }
}

void check_basis(std::string_view basis, int num_qubits) {
    if (static_cast<int>(basis.size()) != num_qubits) {
        std::ostringstream ss;
        ss << "basis '" << basis << "' has length " << basis.size() << ", state has " << num_qubits
           << " qubit(s)";
        throw std::invalid_argument(ss.str());
    }
    for (char ch : basis) {
        rotation_for(ch);
    }
}

std::string bitstring(std::size_t index, int n) {
    std::string s(n, '0');
    for (int q = 0; q < n; ++q) {
        if ((index >> (n - 1 - q)) & 1U) {
            s[q] = '1';
        }
    }
    return s;
}

void enumerate_labels(std::string_view alphabet, int n, std::string& prefix,
                      std::vector<std::string>& out) {
    if (static_cast<int>(prefix.size()) == n) {
        out.push_back(prefix);
        return;
    }
    for (char ch : alphabet) {
        prefix.push_back(ch);
        enumerate_labels(alphabet, n, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<double> basis_probabilities(const DensityMatrix& state, std::string_view basis) {
    const int n = state.num_qubits();
    check_basis(basis, n);
    ComplexMatrix m = state.matrix();
    for (int q = 0; q < n; ++q) {
        if (basis[q] != 'Z') {
            const int target[] = {q};
            kernels::conjugate(m, n, rotation_for(basis[q]), target);
        }
    }
    std::vector<double> probs(m.rows());
    double total = 0;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        probs[i] = std::max(m(i, i).real(), 0.0);
        total += probs[i];
    }
    for (auto& p : probs) {
        p /= total;
    }
    return probs;
}

ShotCounts measure_shots(const DensityMatrix& state, std::string_view basis, std::uint64_t shots,
                         std::uint64_t seed) {
    if (shots == 0) {
        throw std::invalid_argument("measure_shots: shots must be at least 1");
    }
    const auto probs = basis_probabilities(state, basis);
    std::vector<double> cdf(probs.size());
    std::partial_sum(probs.begin(), probs.end(), cdf.begin());
    cdf.back() = 1.0;

    std::vector<std::uint64_t> tally(probs.size(), 0);
    Rng rng(seed);
    for (std::uint64_t s = 0; s < shots; ++s) {
        const double u = uniform01(rng);
        const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        ++tally[static_cast<std::size_t>(it - cdf.begin())];
    }

    ShotCounts out;
    out.basis = std::string(basis);
    out.shots = shots;
    for (std::size_t i = 0; i < tally.size(); ++i) {
        if (tally[i] > 0) {
            out.counts[bitstring(i, state.num_qubits())] = tally[i];
        }
    }
    return out;
}

double expectation(const ShotCounts& counts) {
    return expectation(counts, counts.basis);
}

double expectation(const ShotCounts& counts, std::string_view pauli) {
    if (counts.shots == 0) {
        throw std::invalid_argument("expectation: zero shots");
    }
    if (pauli.size() != counts.basis.size()) {
        throw std::invalid_argument("expectation: Pauli label length differs from the basis");
    }
    for (std::size_t i = 0; i < pauli.size(); ++i) {
        if (pauli[i] != 'I' && pauli[i] != counts.basis[i]) {
            throw std::invalid_argument("expectation: '" + std::string(pauli) +
                                        "' is not measurable in basis '" + counts.basis + "'");
        }
    }
    std::int64_t signed_total = 0;
    std::uint64_t seen = 0;
    for (const auto& [outcome, count] : counts.counts) {
        int parity = 0;
        for (std::size_t i = 0; i < pauli.size(); ++i) {
            if (pauli[i] != 'I' && outcome[i] == '1') {
                parity ^= 1;
            }
        }
        signed_total += parity ? -static_cast<std::int64_t>(count) : static_cast<std::int64_t>(count);
        seen += count;
    }
    if (seen != counts.shots) {
        throw std::invalid_argument("expectation: counts do not sum to shots");
    }
    return static_cast<double>(signed_total) / static_cast<double>(counts.shots);
}

std::vector<std::string> measurement_bases(int num_qubits) {
    std::vector<std::string> out;
    std::string prefix;
    enumerate_labels("XYZ", num_qubits, prefix, out);
    return out;
}

std::vector<std::string> pauli_labels(int num_qubits) {
    std::vector<std::string> out;
    std::string prefix;
    enumerate_labels("IXYZ", num_qubits, prefix, out);
    out.erase(out.begin());  // all-identity
    return out;
}

double exact_expectation(const DensityMatrix& state, std::string_view pauli) {
    return (pauli::from_string(pauli) * state.matrix()).trace().real();
}

ExpectationMap exact_expectations(const DensityMatrix& state) {
    ExpectationMap out;
    for (const auto& label : pauli_labels(state.num_qubits())) {
        out[label] = exact_expectation(state, label);
    }
    return out;
}

ExpectationMap estimate_expectations(std::span<const ShotCounts> counts, int num_qubits) {
    ExpectationMap out;
    for (const auto& label : pauli_labels(num_qubits)) {
        double sum = 0;
        int used = 0;
        for (const auto& c : counts) {
            bool compatible = c.basis.size() == label.size();
            for (std::size_t i = 0; compatible && i < label.size(); ++i) {
                compatible = label[i] == 'I' || label[i] == c.basis[i];
            }
            if (compatible) {
                sum += expectation(c, label);
                ++used;
            }
        }
        if (used == 0) {
            throw std::invalid_argument("estimate_expectations: no basis measures '" + label + "'");
        }
        out[label] = sum / used;
    }
    return out;
}

TomogramRaw reconstruct(const ExpectationMap& expectations, int num_qubits) {
    if (num_qubits < 1 || num_qubits > 2) {
        throw std::invalid_argument("reconstruct: only 1- and 2-qubit tomography is supported");
    }
    const std::size_t dim = std::size_t{1} << num_qubits;
    ComplexMatrix rho = ComplexMatrix::identity(dim);
    for (const auto& label : pauli_labels(num_qubits)) {
        const auto it = expectations.find(label);
        if (it == expectations.end()) {
            throw std::invalid_argument("reconstruct: missing expectation for '" + label + "'");
        }
        rho += it->second * pauli::from_string(label);
    }
    rho *= 1.0 / static_cast<double>(dim);
    TomogramRaw raw;
    raw.min_eigenvalue = hermitian_eig(rho).values.back();
    raw.matrix = std::move(rho);
    return raw;
}

std::vector<double> project_spectrum(std::vector<double> descending) {
    std::size_t remaining = descending.size();
    double deficit = 0;
    while (remaining > 0 &&
           descending[remaining - 1] + deficit / static_cast<double>(remaining) < 0) {
        deficit += descending[remaining - 1];
        descending[remaining - 1] = 0;
        --remaining;
    }
    for (std::size_t j = 0; j < remaining; ++j) {
        descending[j] += deficit / static_cast<double>(remaining);
    }
    return descending;
}

DensityMatrix project_physical(const TomogramRaw& raw) {
    auto eig = hermitian_eig(raw.matrix);
    if (eig.values.back() >= 0) {
        return DensityMatrix::unchecked(raw.matrix);
    }
    const auto mu = project_spectrum(eig.values);
    const std::size_t n = raw.matrix.rows();
    ComplexMatrix out(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        if (mu[k] == 0) {
            continue;
        }
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t c = 0; c < n; ++c) {
                out(r, c) += mu[k] * eig.vectors(r, k) * std::conj(eig.vectors(c, k));
            }
        }
    }
    return DensityMatrix(0.5 * (out + out.adjoint()));
}

TomographyResult tomo_pipeline(const DensityMatrix& state, std::span<const int> qubits, Shots shots,
                               std::uint64_t seed) {
    if (qubits.empty() || qubits.size() > 2) {
        throw std::invalid_argument("tomo_pipeline: tomography covers 1 or 2 qubits");
    }
    if (shots && *shots == 0) {
        throw std::invalid_argument("tomo_pipeline: shots must be at least 1");
    }
    const int n = static_cast<int>(qubits.size());
    DensityMatrix reduced = partial_trace(state, qubits);

    TomographyResult result;
    ExpectationMap expectations;
    if (!shots) {
        expectations = exact_expectations(reduced);
    } else {
        const auto bases = measurement_bases(n);
        for (std::size_t k = 0; k < bases.size(); ++k) {
            result.counts.push_back(measure_shots(reduced, bases[k], *shots, derive_seed(seed, k)));
        }
        expectations = estimate_expectations(result.counts, n);
    }
    result.raw = reconstruct(expectations, n);
    result.physical = project_physical(result.raw);
    result.fidelity = fidelity(result.physical, reduced);
    result.trace_distance = trace_distance(result.physical, reduced);
    result.ideal = std::move(reduced);
    return result;
}

}  // namespace nohide::tomo
