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

#include "nohide/kernels.hpp"

#include <omp.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace nohide::kernels {

namespace {

struct Layout {
    std::vector<std::size_t> target_masks;  // bit for targets[i], MSB-first in the local index
    std::vector<int> free_bits;             // ascending bit positions not touched by the operator
    std::size_t groups = 0;
    std::size_t local_dim = 0;
};

Layout make_layout(std::size_t amp_count, int num_qubits, const ComplexMatrix& op,
                   std::span<const int> targets) {
    if (amp_count != (std::size_t{1} << num_qubits)) {
        throw std::invalid_argument("kernel: amplitude count does not match qubit count");
    }
    const std::size_t k = targets.size();
    if (op.rows() != (std::size_t{1} << k) || op.cols() != op.rows()) {
        throw std::invalid_argument("kernel: operator size does not match target count");
    }
    Layout layout;
    std::uint64_t used = 0;
    for (int t : targets) {
        if (t < 0 || t >= num_qubits) {
            throw std::out_of_range("kernel: target " + std::to_string(t) + " out of range");
        }
        const std::size_t mask = std::size_t{1} << (num_qubits - 1 - t);
        if (used & mask) {
            throw std::invalid_argument("kernel: repeated target " + std::to_string(t));
        }
        used |= mask;
        layout.target_masks.push_back(mask);
    }
    for (int b = 0; b < num_qubits; ++b) {
        if (!(used & (std::uint64_t{1} << b))) {
            layout.free_bits.push_back(b);
        }
    }
    layout.groups = std::size_t{1} << (num_qubits - static_cast<int>(k));
    layout.local_dim = std::size_t{1} << k;
    return layout;
}

inline std::size_t scatter_base(std::size_t g, const std::vector<int>& free_bits) {
    std::size_t base = 0;
    for (std::size_t i = 0; i < free_bits.size(); ++i) {
        if ((g >> i) & 1U) {
            base |= std::size_t{1} << free_bits[i];
        }
    }
    return base;
}

inline std::size_t local_offset(std::size_t local, const std::vector<std::size_t>& masks) {
    const std::size_t k = masks.size();
    std::size_t off = 0;
    for (std::size_t i = 0; i < k; ++i) {
        if ((local >> (k - 1 - i)) & 1U) {
            off |= masks[i];
        }
    }
    return off;
}

inline void update_group(std::span<Complex> amps, const ComplexMatrix& op, std::size_t base,
                         const std::vector<std::size_t>& offsets, Complex* scratch) {
    const std::size_t d = offsets.size();
    for (std::size_t i = 0; i < d; ++i) {
        scratch[i] = amps[base | offsets[i]];
    }
    for (std::size_t r = 0; r < d; ++r) {
        Complex acc = 0;
        for (std::size_t c = 0; c < d; ++c) {
            acc += op(r, c) * scratch[c];
        }
        amps[base | offsets[r]] = acc;
    }
}

std::vector<int> column_targets(int num_qubits, std::span<const int> targets) {
    std::vector<int> out(targets.begin(), targets.end());
    for (auto& t : out) {
        t += num_qubits;
    }
    return out;
}

}  // namespace

void apply_operator_serial(std::span<Complex> amps, int num_qubits, const ComplexMatrix& op,
                           std::span<const int> targets) {
    const Layout layout = make_layout(amps.size(), num_qubits, op, targets);
    std::vector<std::size_t> offsets(layout.local_dim);
    for (std::size_t l = 0; l < layout.local_dim; ++l) {
        offsets[l] = local_offset(l, layout.target_masks);
    }
    std::vector<Complex> scratch(layout.local_dim);
    for (std::size_t g = 0; g < layout.groups; ++g) {
        update_group(amps, op, scatter_base(g, layout.free_bits), offsets, scratch.data());
    }
}

void apply_operator(std::span<Complex> amps, int num_qubits, const ComplexMatrix& op,
                    std::span<const int> targets) {
    const Layout layout = make_layout(amps.size(), num_qubits, op, targets);
    std::vector<std::size_t> offsets(layout.local_dim);
    for (std::size_t l = 0; l < layout.local_dim; ++l) {
        offsets[l] = local_offset(l, layout.target_masks);
    }
    const auto groups = static_cast<std::int64_t>(layout.groups);
    const bool parallel = amps.size() >= kParallelThreshold;
#pragma omp parallel if (parallel)
    {
        std::vector<Complex> scratch(layout.local_dim);
#pragma omp for schedule(static)
        for (std::int64_t g = 0; g < groups; ++g) {
            update_group(amps, op, scatter_base(static_cast<std::size_t>(g), layout.free_bits),
                         offsets, scratch.data());
        }
    }
}

void conjugate(ComplexMatrix& rho, int num_qubits, const ComplexMatrix& op,
               std::span<const int> targets) {
    if (rho.rows() != (std::size_t{1} << num_qubits) || !rho.is_square()) {
        throw std::invalid_argument("conjugate: density matrix size does not match qubit count");
    }
    apply_operator(rho.data(), 2 * num_qubits, op, targets);
    apply_operator(rho.data(), 2 * num_qubits, op.conjugate(), column_targets(num_qubits, targets));
}

void conjugate_serial(ComplexMatrix& rho, int num_qubits, const ComplexMatrix& op,
                      std::span<const int> targets) {
    if (rho.rows() != (std::size_t{1} << num_qubits) || !rho.is_square()) {
        throw std::invalid_argument("conjugate: density matrix size does not match qubit count");
    }
    apply_operator_serial(rho.data(), 2 * num_qubits, op, targets);
    apply_operator_serial(rho.data(), 2 * num_qubits, op.conjugate(),
                          column_targets(num_qubits, targets));
}

double norm_squared(std::span<const Complex> amps) {
    const auto n = static_cast<std::int64_t>(amps.size());
    double s = 0;
#pragma omp parallel for reduction(+ : s) if (amps.size() >= kParallelThreshold)
    for (std::int64_t i = 0; i < n; ++i) {
        s += std::norm(amps[i]);
    }
    return s;
}

double norm_squared_serial(std::span<const Complex> amps) {
    double s = 0;
    for (const auto& z : amps) {
        s += std::norm(z);
    }
    return s;
}

}  // namespace nohide::kernels
