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

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <string>

#include "nohide/zx.hpp"

namespace nohide::zx {
namespace {

// Dense tensor over a list of binary edge variables; vars[0] is the most
// significant bit of the flat index.
struct Tensor {
    std::vector<int> vars;
    std::vector<Complex> data;
};

std::vector<Complex> node_tensor(const Node& n, int legs) {
    const std::size_t size = std::size_t{1} << legs;
    std::vector<Complex> t(size, Complex{0, 0});
    const Complex phase = std::polar(1.0, n.phase);
    switch (n.kind) {
        case NodeKind::Z:
            t[0] += 1.0;
            t[size - 1] += phase;
            break;
        case NodeKind::X: {
            const double norm = std::pow(2.0, -0.5 * legs);
            for (std::size_t i = 0; i < size; ++i) {
                double sign = std::popcount(i) % 2 ? -1.0 : 1.0;
                t[i] = norm * (1.0 + sign * phase);
            }
            break;
        }
        case NodeKind::H: {
            const double h = 1 / std::sqrt(2.0);
            t = {h, h, h, -h};
            break;
        }
        default:
            break;
    }
    return t;
}

std::size_t gather(std::uint64_t u, int width, const std::vector<int>& positions) {
    std::size_t idx = 0;
    for (int p : positions) idx = (idx << 1) | ((u >> (width - 1 - p)) & 1U);
    return idx;
}

}  // namespace

ComplexMatrix evaluate(const Diagram& d, int max_open_legs) {
    d.validate();
    const std::vector<NodeId> order = canonical_order(d);
    std::map<NodeId, int> rank;
    for (std::size_t i = 0; i < order.size(); ++i) rank[order[i]] = static_cast<int>(i);

    // Edge variables numbered in canonical order so relabelled copies agree.
    std::vector<std::pair<int, int>> edges;
    for (const auto& [a, b] : d.edges()) {
        int ra = rank[a], rb = rank[b];
        edges.emplace_back(std::min(ra, rb), std::max(ra, rb));
    }
    std::sort(edges.begin(), edges.end());
    const int num_vars = static_cast<int>(edges.size());
    std::vector<std::vector<int>> legs(order.size());
    std::vector<int> internal_ends(num_vars, 0);
    std::vector<bool> open(num_vars, false);
    for (int v = 0; v < num_vars; ++v) {
        for (int r : {edges[v].first, edges[v].second}) {
            legs[r].push_back(v);
            if (d.node(order[r]).is_boundary()) open[v] = true;
            else ++internal_ends[v];
        }
    }

    Tensor acc{{}, {Complex{1, 0}}};
    std::vector<int> seen(num_vars, 0);
    for (std::size_t r = 0; r < order.size(); ++r) {
        const Node& n = d.node(order[r]);
        if (n.is_boundary()) continue;
        const std::vector<int>& L = legs[r];
        const std::vector<Complex> local = node_tensor(n, static_cast<int>(L.size()));

        std::vector<int> U = acc.vars;
        for (int v : L) {
            if (std::find(U.begin(), U.end(), v) == U.end()) U.push_back(v);
        }
        if (static_cast<int>(U.size()) > max_open_legs) {
            throw DiagramTooLarge("diagram too large to evaluate: intermediate tensor has " +
                                  std::to_string(U.size()) + " legs (limit " +
                                  std::to_string(max_open_legs) + ")");
        }
        for (int v : L) ++seen[v];
        std::vector<int> kept;
        for (int v : U) {
            bool done = !open[v] && seen[v] == internal_ends[v];
            if (!done) kept.push_back(v);
        }

        auto positions = [&](const std::vector<int>& vs) {
            std::vector<int> p;
            for (int v : vs) p.push_back(static_cast<int>(std::find(U.begin(), U.end(), v) - U.begin()));
            return p;
        };
        const std::vector<int> pos_local = positions(L);
        const std::vector<int> pos_kept = positions(kept);
        const int width = static_cast<int>(U.size());
        const int shift = width - static_cast<int>(acc.vars.size());

        std::vector<Complex> out(std::size_t{1} << kept.size(), Complex{0, 0});
        for (std::uint64_t u = 0; u < (std::uint64_t{1} << width); ++u) {
            const Complex a = acc.data[u >> shift];
            if (a == Complex{0, 0}) continue;
            const Complex b = local[gather(u, width, pos_local)];
            if (b == Complex{0, 0}) continue;
            out[gather(u, width, pos_kept)] += a * b;
        }
        acc = Tensor{std::move(kept), std::move(out)};
    }

    const auto& ins = d.inputs();
    const auto& outs = d.outputs();
    auto boundary_var = [&](NodeId id) { return legs[rank[id]].front(); };
    ComplexMatrix m(std::size_t{1} << outs.size(), std::size_t{1} << ins.size());
    std::vector<int> value(num_vars);
    for (std::size_t row = 0; row < m.rows(); ++row) {
        for (std::size_t col = 0; col < m.cols(); ++col) {
            std::fill(value.begin(), value.end(), -1);
            bool consistent = true;
            auto assign = [&](NodeId id, int bit) {
                int& slot = value[boundary_var(id)];
                if (slot >= 0 && slot != bit) consistent = false;
                slot = bit;
            };
            for (std::size_t k = 0; k < outs.size(); ++k) {
                assign(outs[k], static_cast<int>((row >> (outs.size() - 1 - k)) & 1U));
            }
            for (std::size_t k = 0; k < ins.size(); ++k) {
                assign(ins[k], static_cast<int>((col >> (ins.size() - 1 - k)) & 1U));
            }
            if (!consistent) continue;
            std::size_t idx = 0;
            for (int v : acc.vars) idx = (idx << 1) | static_cast<std::size_t>(value[v]);
            m(row, col) = acc.data[idx];
        }
    }
    return m;
}

Proportionality check_proportional(const ComplexMatrix& before, const ComplexMatrix& after,
                                   double tol) {
    Proportionality p;
    if (before.rows() != after.rows() || before.cols() != after.cols()) {
        p.deviation = INFINITY;
        return p;
    }
    Complex num{0, 0};
    double den = 0;
    auto b = before.data();
    auto a = after.data();
    for (std::size_t i = 0; i < a.size(); ++i) {
        num += std::conj(b[i]) * a[i];
        den += std::norm(b[i]);
    }
    const double after_norm = after.frobenius_norm();
    if (den == 0 || after_norm == 0) {
        p.deviation = INFINITY;
        return p;
    }
    p.scalar = num / den;
    double resid = 0;
    for (std::size_t i = 0; i < a.size(); ++i) resid += std::norm(a[i] - p.scalar * b[i]);
    p.deviation = std::sqrt(resid) / after_norm;
    p.proportional = p.deviation < tol && std::abs(p.scalar) > 1e-12;
    return p;
}

}  // namespace nohide::zx
