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
#include <string>

#include "nohide/zx.hpp"

namespace nohide::zx {

std::string_view rule_name(Rule rule) {
    switch (rule) {
        case Rule::S1: return "S1";
        case Rule::S2: return "S2";
        case Rule::C: return "C";
        case Rule::B2: return "B2";
        case Rule::HH: return "HH";
    }
    return "?";
}

Rule parse_rule(std::string_view name) {
    for (Rule r : {Rule::S1, Rule::S2, Rule::C, Rule::B2, Rule::HH}) {
        if (rule_name(r) == name) return r;
    }
    throw std::invalid_argument("unknown rule '" + std::string(name) + "'");
}

Complex rule_scalar(Rule rule, bool inverse) {
    if (rule != Rule::B2) return {1, 0};
    return {inverse ? 1 / std::sqrt(2.0) : std::sqrt(2.0), 0};
}

namespace {

[[noreturn]] void mismatch(Rule rule, const std::string& why) {
    throw PatternMismatch(std::string(rule_name(rule)) + ": " + why);
}

bool is_kind(const Diagram& d, NodeId id, NodeKind kind) {
    return d.has_node(id) && d.node(id).kind == kind;
}

bool is_spider(const Diagram& d, NodeId id) { return d.has_node(id) && d.node(id).is_spider(); }

// The neighbour of a two-legged node other than `from`.
NodeId other_end(const Diagram& d, NodeId node, NodeId from) {
    auto n = d.neighbors(node);
    return n[0] == from ? n[1] : n[0];
}

// Plugs two loose ends together, eliminating the loop if they coincide.
// Only spiders absorb loops; callers exclude everything else up front.
void join(Diagram& d, NodeId a, NodeId b) {
    if (a != b) d.add_edge(a, b);
}

bool has_h_loop(const Diagram& d, NodeId s) {
    for (NodeId m : d.neighbors(s)) {
        if (is_kind(d, m, NodeKind::H) && d.edge_count(s, m) == 2) return true;
    }
    return false;
}

bool phase_free_degree3(const Diagram& d, NodeId id, NodeKind kind) {
    return is_kind(d, id, kind) && phase_is_zero(d.node(id).phase) && d.degree(id) == 3;
}

// Legs of `id` leaving the set `pattern`, with multiplicity.
std::vector<NodeId> external(const Diagram& d, NodeId id, const std::vector<NodeId>& pattern) {
    std::vector<NodeId> out;
    for (NodeId m : d.neighbors(id)) {
        if (std::find(pattern.begin(), pattern.end(), m) == pattern.end()) out.push_back(m);
    }
    return out;
}

bool is_bipartite_square(const Diagram& d, NodeId z1, NodeId z2, NodeId x1, NodeId x2) {
    for (NodeId z : {z1, z2}) {
        if (!phase_free_degree3(d, z, NodeKind::Z)) return false;
    }
    for (NodeId x : {x1, x2}) {
        if (!phase_free_degree3(d, x, NodeKind::X)) return false;
    }
    if (z1 == z2 || x1 == x2) return false;
    for (NodeId z : {z1, z2}) {
        for (NodeId x : {x1, x2}) {
            if (d.edge_count(z, x) != 1) return false;
        }
    }
    const std::vector<NodeId> pattern{z1, z2, x1, x2};
    for (NodeId id : pattern) {
        if (external(d, id, pattern).size() != 1) return false;
    }
    return true;
}

bool s1_ok(const Diagram& d, NodeId a, NodeId b) {
    return a != b && is_spider(d, a) && is_spider(d, b) && d.node(a).kind == d.node(b).kind &&
           d.edge_count(a, b) > 0;
}

bool s2_ok(const Diagram& d, NodeId s) {
    if (!is_spider(d, s) || d.degree(s) != 2 || !phase_is_zero(d.node(s).phase)) return false;
    auto n = d.neighbors(s);
    return !(n[0] == n[1] && d.node(n[0]).kind == NodeKind::H);
}

bool hh_ok(const Diagram& d, NodeId h1, NodeId h2) {
    if (h1 == h2 || !is_kind(d, h1, NodeKind::H) || !is_kind(d, h2, NodeKind::H)) return false;
    if (d.edge_count(h1, h2) != 1) return false;
    NodeId o1 = other_end(d, h1, h2);
    NodeId o2 = other_end(d, h2, h1);
    return !(o1 == o2 && d.node(o1).kind == NodeKind::H);
}

bool zx_pair_ok(const Diagram& d, NodeId z, NodeId x) {
    if (!phase_free_degree3(d, z, NodeKind::Z) || !phase_free_degree3(d, x, NodeKind::X)) {
        return false;
    }
    return d.edge_count(z, x) == 1;
}

}  // namespace

std::vector<Location> match_rule(const Diagram& d, Rule rule) {
    std::vector<Location> out;
    std::vector<NodeId> spiders, hboxes;
    for (const auto& [id, n] : d.nodes()) {
        if (n.is_spider()) spiders.push_back(id);
        if (n.kind == NodeKind::H) hboxes.push_back(id);
    }
    switch (rule) {
        case Rule::S1: {
            std::set<Edge> pairs(d.edges().begin(), d.edges().end());
            for (const auto& [a, b] : pairs) {
                if (s1_ok(d, a, b)) out.push_back({a, b});
            }
            break;
        }
        case Rule::S2:
            for (NodeId s : spiders) {
                if (s2_ok(d, s)) out.push_back({s});
            }
            break;
        case Rule::C:
            for (NodeId s : spiders) {
                if (!has_h_loop(d, s)) out.push_back({s});
            }
            break;
        case Rule::HH:
            for (NodeId h1 : hboxes) {
                for (NodeId h2 : hboxes) {
                    if (h1 < h2 && hh_ok(d, h1, h2)) out.push_back({h1, h2});
                }
            }
            break;
        case Rule::B2: {
            std::vector<NodeId> zs, xs;
            for (NodeId s : spiders) {
                if (phase_free_degree3(d, s, NodeKind::Z)) zs.push_back(s);
                if (phase_free_degree3(d, s, NodeKind::X)) xs.push_back(s);
            }
            for (std::size_t i = 0; i < zs.size(); ++i)
                for (std::size_t j = i + 1; j < zs.size(); ++j)
                    for (std::size_t k = 0; k < xs.size(); ++k)
                        for (std::size_t l = k + 1; l < xs.size(); ++l)
                            if (is_bipartite_square(d, zs[i], zs[j], xs[k], xs[l]))
                                out.push_back({zs[i], zs[j], xs[k], xs[l]});
            break;
        }
    }
    return out;
}

std::vector<Location> match_inverse(const Diagram& d, Rule rule) {
    std::vector<Location> out;
    if (rule != Rule::B2) return out;
    for (const auto& [z, nz] : d.nodes()) {
        if (nz.kind != NodeKind::Z) continue;
        for (const auto& [x, nx] : d.nodes()) {
            if (nx.kind == NodeKind::X && zx_pair_ok(d, z, x)) out.push_back({z, x});
        }
    }
    return out;
}

Diagram apply_rule(const Diagram& d, Rule rule, std::span<const NodeId> loc) {
    const std::size_t arity[] = {2, 1, 1, 4, 2};  // S1 S2 C B2 HH
    if (loc.size() != arity[static_cast<int>(rule)]) mismatch(rule, "wrong location size");
    Diagram out = d;
    switch (rule) {
        case Rule::S1: {
            NodeId a = loc[0], b = loc[1];
            if (!s1_ok(d, a, b)) mismatch(rule, "needs adjacent spiders of one colour");
            Node merged = d.node(a);
            merged.phase += d.node(b).phase;
            out.set_node(a, merged);
            for (NodeId m : d.neighbors(b)) {
                if (m != a) out.add_edge(a, m);  // extra a-b edges become loops: dropped
            }
            out.remove_node(b);
            break;
        }
        case Rule::S2: {
            NodeId s = loc[0];
            if (!s2_ok(d, s)) mismatch(rule, "needs a phase-free two-legged spider");
            auto n = d.neighbors(s);
            out.remove_node(s);
            join(out, n[0], n[1]);
            break;
        }
        case Rule::C: {
            NodeId s = loc[0];
            if (!is_spider(d, s)) mismatch(rule, "needs a spider");
            if (has_h_loop(d, s)) mismatch(rule, "H-box loop on spider");
            Node flipped = d.node(s);
            flipped.kind = flipped.kind == NodeKind::Z ? NodeKind::X : NodeKind::Z;
            out.set_node(s, flipped);
            for (NodeId m : d.neighbors(s)) {
                if (d.node(m).kind == NodeKind::H) {
                    NodeId o = other_end(d, m, s);
                    out.remove_node(m);
                    out.add_edge(s, o);
                } else {
                    out.remove_edge(s, m);
                    NodeId h = out.add_node(NodeKind::H);
                    out.add_edge(s, h);
                    out.add_edge(h, m);
                }
            }
            break;
        }
        case Rule::HH: {
            NodeId h1 = loc[0], h2 = loc[1];
            if (!hh_ok(d, h1, h2)) mismatch(rule, "needs two H-boxes in series");
            NodeId o1 = other_end(d, h1, h2);
            NodeId o2 = other_end(d, h2, h1);
            out.remove_node(h1);
            out.remove_node(h2);
            join(out, o1, o2);
            break;
        }
        case Rule::B2: {
            NodeId z1 = loc[0], z2 = loc[1], x1 = loc[2], x2 = loc[3];
            if (!is_bipartite_square(d, z1, z2, x1, x2)) {
                mismatch(rule, "needs a phase-free Z/X complete bipartite square");
            }
            const std::vector<NodeId> pattern{z1, z2, x1, x2};
            NodeId a1 = external(d, x1, pattern)[0], a2 = external(d, x2, pattern)[0];
            NodeId b1 = external(d, z1, pattern)[0], b2 = external(d, z2, pattern)[0];
            for (NodeId id : pattern) out.remove_node(id);
            NodeId z = out.add_node(NodeKind::Z);
            NodeId x = out.add_node(NodeKind::X);
            out.add_edge(z, a1);
            out.add_edge(z, a2);
            out.add_edge(x, b1);
            out.add_edge(x, b2);
            out.add_edge(z, x);
            break;
        }
    }
    out.validate();
    return out;
}

Diagram unfuse(const Diagram& d, NodeId spider, std::span<const NodeId> moved, double moved_phase) {
    if (!is_spider(d, spider)) mismatch(Rule::S1, "split needs a spider");
    std::map<NodeId, int> want;
    for (NodeId m : moved) ++want[m];
    for (const auto& [m, k] : want) {
        if (d.edge_count(spider, m) < k) mismatch(Rule::S1, "split names a non-neighbour leg");
    }
    Diagram out = d;
    Node kept = d.node(spider);
    kept.phase -= moved_phase;
    out.set_node(spider, kept);
    NodeId t = out.add_node(kept.kind, moved_phase);
    for (NodeId m : moved) {
        out.remove_edge(spider, m);
        out.add_edge(t, m);
    }
    out.add_edge(spider, t);
    out.validate();
    return out;
}

Diagram unbialgebra(const Diagram& d, std::span<const NodeId> loc) {
    if (loc.size() != 2 || !zx_pair_ok(d, loc[0], loc[1])) {
        mismatch(Rule::B2, "expansion needs an adjacent phase-free Z-X pair");
    }
    NodeId z = loc[0], x = loc[1];
    const std::vector<NodeId> pattern{z, x};
    std::vector<NodeId> a = external(d, z, pattern);
    std::vector<NodeId> b = external(d, x, pattern);
    Diagram out = d;
    out.remove_node(z);
    out.remove_node(x);
    NodeId xs[2], zs[2];
    for (int i = 0; i < 2; ++i) {
        xs[i] = out.add_node(NodeKind::X);
        out.add_edge(xs[i], a[i]);
    }
    for (int j = 0; j < 2; ++j) {
        zs[j] = out.add_node(NodeKind::Z);
        out.add_edge(zs[j], b[j]);
    }
    for (NodeId xi : xs) {
        for (NodeId zj : zs) out.add_edge(xi, zj);
    }
    out.validate();
    return out;
}

Diagram apply_step(const Diagram& d, const RewriteStep& step) {
    if (!step.inverse) return apply_rule(d, step.rule, step.location);
    if (step.location.empty()) mismatch(step.rule, "empty location");
    switch (step.rule) {
        case Rule::S1:
            return unfuse(d, step.location[0], std::span(step.location).subspan(1), step.phase);
        case Rule::B2:
            return unbialgebra(d, step.location);
        default:
            mismatch(step.rule, "no inverse direction");
    }
}

Diagram replay(Diagram d, std::span<const RewriteStep> trace) {
    for (const RewriteStep& s : trace) d = apply_step(d, s);
    return d;
}

}  // namespace nohide::zx
