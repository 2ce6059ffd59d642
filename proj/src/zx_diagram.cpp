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
#include <cmath>
#include <deque>
#include <numbers>
#include <string>
#include <tuple>

#include "nohide/zx.hpp"

namespace nohide::zx {

std::string_view kind_name(NodeKind kind) {
    switch (kind) {
        case NodeKind::Z: return "Z";
        case NodeKind::X: return "X";
        case NodeKind::H: return "H";
        case NodeKind::In: return "in";
        case NodeKind::Out: return "out";
    }
    return "?";
}

NodeKind parse_kind(std::string_view name) {
    for (NodeKind k : {NodeKind::Z, NodeKind::X, NodeKind::H, NodeKind::In, NodeKind::Out}) {
        if (kind_name(k) == name) return k;
    }
    throw std::invalid_argument("unknown node kind '" + std::string(name) + "'");
}

double normalize_phase(double phase) {
    constexpr double two_pi = 2 * std::numbers::pi;
    double r = std::fmod(phase, two_pi);
    if (r < 0) r += two_pi;
    if (r >= two_pi) r = 0;
    return r;
}

bool phase_is_zero(double phase) {
    double r = normalize_phase(phase);
    return r < 1e-12 || 2 * std::numbers::pi - r < 1e-12;
}

static Edge ordered(NodeId a, NodeId b) { return a <= b ? Edge{a, b} : Edge{b, a}; }

NodeId Diagram::add_node(NodeKind kind, double phase) {
    NodeId id = next_id();
    nodes_.emplace(id, Node{kind, normalize_phase(phase)});
    if (kind == NodeKind::In) inputs_.push_back(id);
    if (kind == NodeKind::Out) outputs_.push_back(id);
    return id;
}

void Diagram::insert_node(NodeId id, Node node) {
    if (id < 0) throw std::invalid_argument("node ids must be non-negative");
    node.phase = normalize_phase(node.phase);
    if (!nodes_.emplace(id, node).second) {
        throw std::invalid_argument("duplicate node id " + std::to_string(id));
    }
}

void Diagram::remove_node(NodeId id) {
    if (!has_node(id)) throw std::out_of_range("no node " + std::to_string(id));
    std::erase_if(edges_, [id](const Edge& e) { return e.first == id || e.second == id; });
    nodes_.erase(id);
    forget_boundary(id);
}

void Diagram::add_edge(NodeId a, NodeId b) {
    if (!has_node(a) || !has_node(b)) {
        throw std::out_of_range("edge references missing node");
    }
    if (a == b) throw std::logic_error("self-loop on node " + std::to_string(a));
    edges_.insert(ordered(a, b));
}

void Diagram::remove_edge(NodeId a, NodeId b) {
    auto it = edges_.find(ordered(a, b));
    if (it == edges_.end()) {
        throw std::out_of_range("no edge " + std::to_string(a) + "-" + std::to_string(b));
    }
    edges_.erase(it);
}

const Node& Diagram::node(NodeId id) const {
    auto it = nodes_.find(id);
    if (it == nodes_.end()) throw std::out_of_range("no node " + std::to_string(id));
    return it->second;
}

void Diagram::set_node(NodeId id, Node node) {
    auto it = nodes_.find(id);
    if (it == nodes_.end()) throw std::out_of_range("no node " + std::to_string(id));
    node.phase = normalize_phase(node.phase);
    it->second = node;
}

void Diagram::set_boundaries(std::vector<NodeId> inputs, std::vector<NodeId> outputs) {
    inputs_ = std::move(inputs);
    outputs_ = std::move(outputs);
}

void Diagram::forget_boundary(NodeId id) {
    std::erase(inputs_, id);
    std::erase(outputs_, id);
}

std::vector<NodeId> Diagram::neighbors(NodeId id) const {
    std::vector<NodeId> out;
    for (const auto& [a, b] : edges_) {
        if (a == id) out.push_back(b);
        else if (b == id) out.push_back(a);
    }
    std::sort(out.begin(), out.end());
    return out;
}

int Diagram::degree(NodeId id) const {
    int d = 0;
    for (const auto& [a, b] : edges_) d += (a == id) + (b == id);
    return d;
}

int Diagram::edge_count(NodeId a, NodeId b) const {
    return static_cast<int>(edges_.count(ordered(a, b)));
}

NodeId Diagram::next_id() const { return nodes_.empty() ? 0 : nodes_.rbegin()->first + 1; }

std::size_t Diagram::spider_count() const {
    return std::count_if(nodes_.begin(), nodes_.end(),
                         [](const auto& kv) { return kv.second.is_spider(); });
}

std::size_t Diagram::hbox_count() const {
    return std::count_if(nodes_.begin(), nodes_.end(),
                         [](const auto& kv) { return kv.second.kind == NodeKind::H; });
}

void Diagram::validate() const {
    for (const auto& [a, b] : edges_) {
        if (!has_node(a) || !has_node(b)) throw std::logic_error("edge references missing node");
        if (a == b) throw std::logic_error("self-loop on node " + std::to_string(a));
    }
    std::size_t n_in = 0, n_out = 0;
    for (const auto& [id, n] : nodes_) {
        int deg = degree(id);
        if (n.is_boundary() && deg != 1) {
            throw std::logic_error("boundary " + std::to_string(id) + " has degree " +
                                   std::to_string(deg));
        }
        if (n.kind == NodeKind::H && deg != 2) {
            throw std::logic_error("H-box " + std::to_string(id) + " has degree " +
                                   std::to_string(deg));
        }
        n_in += n.kind == NodeKind::In;
        n_out += n.kind == NodeKind::Out;
    }
    auto check_list = [&](const std::vector<NodeId>& ids, NodeKind kind, std::size_t expected) {
        if (ids.size() != expected) throw std::logic_error("boundary list does not match nodes");
        std::vector<NodeId> sorted = ids;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
            throw std::logic_error("boundary listed twice");
        }
        for (NodeId id : ids) {
            if (!has_node(id) || node(id).kind != kind) {
                throw std::logic_error("boundary list names a non-boundary node");
            }
        }
    };
    check_list(inputs_, NodeKind::In, n_in);
    check_list(outputs_, NodeKind::Out, n_out);
}

Diagram plug_input(const Diagram& d, std::size_t index, NodeKind spider, double phase) {
    if (index >= d.inputs().size()) throw std::out_of_range("no such input");
    if (spider != NodeKind::Z && spider != NodeKind::X) {
        throw std::invalid_argument("inputs can only be plugged with spiders");
    }
    Diagram out = d;
    NodeId id = d.inputs()[index];
    out.forget_boundary(id);
    out.set_node(id, Node{spider, phase});
    return out;
}

Diagram circuit_to_zx(const Circuit& c) {
    using std::numbers::pi;
    Diagram d;
    std::vector<NodeId> wire(c.num_qubits());
    for (int q = 0; q < c.num_qubits(); ++q) wire[q] = d.add_node(NodeKind::In);

    auto extend = [&](int q, NodeKind kind, double phase) {
        NodeId id = d.add_node(kind, phase);
        d.add_edge(wire[q], id);
        wire[q] = id;
        return id;
    };

    for (const Gate& g : c.gates()) {
        const auto& t = g.targets();
        switch (g.kind()) {
            case GateKind::H: extend(t[0], NodeKind::H, 0); break;
            case GateKind::X: extend(t[0], NodeKind::X, pi); break;
            case GateKind::Y:
                // X Z = -iY
                extend(t[0], NodeKind::Z, pi);
                extend(t[0], NodeKind::X, pi);
                break;
            case GateKind::Z: extend(t[0], NodeKind::Z, pi); break;
            case GateKind::S: extend(t[0], NodeKind::Z, pi / 2); break;
            case GateKind::T: extend(t[0], NodeKind::Z, pi / 4); break;
            case GateKind::CNOT: {
                NodeId ctl = extend(t[0], NodeKind::Z, 0);
                NodeId tgt = extend(t[1], NodeKind::X, 0);
                d.add_edge(ctl, tgt);
                break;
            }
            default:
                throw std::invalid_argument("circuit_to_zx: unsupported gate '" +
                                            std::string(gate_kind_name(g.kind())) + "'");
        }
    }
    for (int q = 0; q < c.num_qubits(); ++q) {
        NodeId out = d.add_node(NodeKind::Out);
        d.add_edge(wire[q], out);
    }
    return d;
}

// Colour refinement seeded with (kind, phase, degree, boundary position), then
// BFS from the boundaries taking neighbours in colour order. Ids only break
// ties between nodes the refinement cannot tell apart.
std::vector<NodeId> canonical_order(const Diagram& d) {
    const auto& nodes = d.nodes();
    std::map<NodeId, std::vector<NodeId>> adj;
    for (const auto& [id, n] : nodes) adj[id];
    for (const auto& [a, b] : d.edges()) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }

    auto boundary_pos = [&](NodeId id) {
        auto find = [id](const std::vector<NodeId>& v) {
            auto it = std::find(v.begin(), v.end(), id);
            return it == v.end() ? -1 : static_cast<int>(it - v.begin());
        };
        int i = find(d.inputs());
        if (i >= 0) return i;
        return find(d.outputs());
    };

    std::map<NodeId, int> color;
    {
        using Key = std::tuple<int, double, int, int>;
        std::map<NodeId, Key> keys;
        std::vector<Key> all;
        for (const auto& [id, n] : nodes) {
            Key k{static_cast<int>(n.kind), n.phase, static_cast<int>(adj[id].size()),
                  boundary_pos(id)};
            keys[id] = k;
            all.push_back(k);
        }
        std::sort(all.begin(), all.end());
        all.erase(std::unique(all.begin(), all.end()), all.end());
        for (const auto& [id, k] : keys) {
            color[id] = static_cast<int>(std::lower_bound(all.begin(), all.end(), k) - all.begin());
        }
    }
    std::size_t classes = 0;
    for (;;) {
        using Sig = std::pair<int, std::vector<int>>;
        std::map<NodeId, Sig> sigs;
        std::vector<Sig> all;
        for (const auto& [id, n] : nodes) {
            std::vector<int> nc;
            for (NodeId m : adj[id]) nc.push_back(color[m]);
            std::sort(nc.begin(), nc.end());
            sigs[id] = {color[id], std::move(nc)};
            all.push_back(sigs[id]);
        }
        std::sort(all.begin(), all.end());
        all.erase(std::unique(all.begin(), all.end()), all.end());
        for (const auto& [id, s] : sigs) {
            color[id] = static_cast<int>(std::lower_bound(all.begin(), all.end(), s) - all.begin());
        }
        if (all.size() == classes) break;
        classes = all.size();
    }

    auto before = [&](NodeId a, NodeId b) {
        return std::pair{color[a], a} < std::pair{color[b], b};
    };
    std::vector<NodeId> order;
    std::set<NodeId> seen;
    std::deque<NodeId> queue;
    auto visit = [&](NodeId id) {
        if (seen.insert(id).second) queue.push_back(id);
    };
    auto drain = [&] {
        while (!queue.empty()) {
            NodeId id = queue.front();
            queue.pop_front();
            order.push_back(id);
            std::vector<NodeId> next = adj[id];
            std::sort(next.begin(), next.end(), before);
            for (NodeId m : next) visit(m);
        }
    };
    for (NodeId id : d.inputs()) visit(id);
    for (NodeId id : d.outputs()) visit(id);
    drain();
    while (order.size() < nodes.size()) {
        NodeId best = -1;
        for (const auto& [id, n] : nodes) {
            if (!seen.contains(id) && (best < 0 || before(id, best))) best = id;
        }
        visit(best);
        drain();
    }
    return order;
}

bool connected_avoiding(const Diagram& d, NodeId a, NodeId b, const std::set<NodeId>& blocked) {
    if (!d.has_node(a) || !d.has_node(b)) return false;
    if (blocked.contains(a) || blocked.contains(b)) return false;
    std::set<NodeId> seen{a};
    std::deque<NodeId> queue{a};
    while (!queue.empty()) {
        NodeId id = queue.front();
        queue.pop_front();
        if (id == b) return true;
        for (NodeId m : d.neighbors(id)) {
            if (!blocked.contains(m) && seen.insert(m).second) queue.push_back(m);
        }
    }
    return false;
}

}  // namespace nohide::zx
