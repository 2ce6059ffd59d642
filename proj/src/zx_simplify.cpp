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

#include <optional>

#include "nohide/zx.hpp"

namespace nohide::zx {
namespace {

std::optional<ComplexMatrix> try_evaluate(const Diagram& d) {
    try {
        return evaluate(d);
    } catch (const DiagramTooLarge&) {
        return std::nullopt;
    }
}

// A colour change pays off only when it makes a spider adjacent to a
// same-coloured one and does not grow the diagram.
bool colour_change_enables_fusion(const Diagram& d, NodeId s) {
    const NodeKind kind = d.node(s).kind;
    int hadamard = 0, plain = 0;
    bool enables = false;
    for (NodeId m : d.neighbors(s)) {
        if (d.node(m).kind != NodeKind::H) {
            ++plain;
            continue;
        }
        ++hadamard;
        for (NodeId o : d.neighbors(m)) {
            const Node& n = d.node(o);
            if (o != s && n.is_spider() && n.kind != kind) enables = true;
        }
    }
    return enables && hadamard >= plain;
}

RewriteStep forward(Rule rule, const Location& loc) {
    RewriteStep s;
    s.rule = rule;
    s.location = loc;
    return s;
}

}  // namespace

SimplifyResult simplify(const Diagram& input) {
    input.validate();
    SimplifyResult r{input, {}};
    int c_budget = 2 * static_cast<int>(input.hbox_count());
    std::optional<ComplexMatrix> current = try_evaluate(r.diagram);

    for (;;) {
        std::optional<RewriteStep> step;
        for (Rule rule : {Rule::HH, Rule::S2, Rule::S1}) {
            auto m = match_rule(r.diagram, rule);
            if (!m.empty()) {
                step = forward(rule, m.front());
                break;
            }
        }
        if (!step && c_budget > 0) {
            for (const Location& loc : match_rule(r.diagram, Rule::C)) {
                if (colour_change_enables_fusion(r.diagram, loc[0])) {
                    step = forward(Rule::C, loc);
                    --c_budget;
                    break;
                }
            }
        }
        if (!step) {
            auto m = match_rule(r.diagram, Rule::B2);  // always removes two nodes
            if (!m.empty()) step = forward(Rule::B2, m.front());
        }
        if (!step) break;

        Diagram next = apply_rule(r.diagram, step->rule, step->location);
        step->scalar = rule_scalar(step->rule, false);
        std::optional<ComplexMatrix> after = try_evaluate(next);
        if (current && after) {
            Proportionality p = check_proportional(*current, *after);
            if (!p.proportional) {
                throw std::logic_error("simplify: " + std::string(rule_name(step->rule)) +
                                       " step changed the diagram's semantics");
            }
            step->scalar = p.scalar;
        }
        r.trace.push_back(std::move(*step));
        r.diagram = std::move(next);
        current = std::move(after);
    }
    return r;
}

}  // namespace nohide::zx
