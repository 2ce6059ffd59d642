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

#include <functional>
#include <string>

#include "nohide/nohiding.hpp"
#include "nohide/zx.hpp"

namespace nohide::zx {

DerivationError::DerivationError(int stage, const std::string& what)
    : std::runtime_error("derivation stage " + std::to_string(stage) + ": " + what),
      stage_(stage) {}

Circuit derivation_circuit() {
    Circuit c(3);
    c.add(Gate::h(1));
    c.add(Gate::h(2));
    c.add(Gate::cnot(1, 0));
    c.add(Gate::cnot(2, 0));
    c.add(Gate::h(0));
    c.add(Gate::cnot(1, 0));
    c.add(Gate::h(0));
    return c;
}

Diagram derivation_diagram() {
    Diagram d = circuit_to_zx(derivation_circuit());
    // A one-legged phase-free red spider is |0> up to scalar.
    d = plug_input(d, 1, NodeKind::X, 0);
    d = plug_input(d, 1, NodeKind::X, 0);

    // Controlled-Pauli randomizer on psi (x) |++>.
    const double h = 1 / std::sqrt(2.0);
    ComplexMatrix plus(2, 1, {h, h});
    ComplexMatrix expected = build_randomizer(RandomizerTag::Eq1).matrix *
                             kron(ComplexMatrix::identity(2), kron(plus, plus));
    if (!check_proportional(expected, evaluate(d)).proportional) {
        throw std::logic_error("derivation circuit does not implement the randomizer");
    }
    return d;
}

Derivation scripted_derivation() {
    Derivation r;
    r.initial = derivation_diagram();
    Diagram cur = r.initial;
    ComplexMatrix cur_eval = evaluate(cur);

    auto record = [&](int stage, RewriteStep step) {
        step.stage = stage;
        Diagram next;
        try {
            next = apply_step(cur, step);
        } catch (const PatternMismatch& e) {
            throw DerivationError(stage, e.what());
        }
        ComplexMatrix next_eval = evaluate(next);
        Proportionality p = check_proportional(cur_eval, next_eval);
        if (!p.proportional) {
            throw DerivationError(stage, "proportionality check failed (deviation " +
                                             std::to_string(p.deviation) + ")");
        }
        step.scalar = p.scalar;
        r.trace.push_back(std::move(step));
        cur = std::move(next);
        cur_eval = std::move(next_eval);
    };

    // Applies `rule` at the first accepted match until none is left.
    auto exhaust = [&](int stage, const char* label, Rule rule,
                       const std::function<bool(const Location&)>& accept) {
        int applied = 0;
        for (;;) {
            const Location* hit = nullptr;
            auto matches = match_rule(cur, rule);
            for (const Location& loc : matches) {
                if (accept(loc)) {
                    hit = &loc;
                    break;
                }
            }
            if (!hit) break;
            record(stage, RewriteStep{.rule = rule, .location = *hit, .label = label});
            ++applied;
        }
        if (applied == 0) throw DerivationError(stage, "no match");
    };

    auto kind = [&](NodeId id) { return cur.node(id).kind; };
    auto single_neighbor = [&](NodeId boundary) { return cur.neighbors(boundary).at(0); };

    // 1: red spiders flanked mostly by H-boxes turn green.
    exhaust(1, "C", Rule::C, [&](const Location& loc) {
        if (kind(loc[0]) != NodeKind::X) return false;
        int h = 0, plain = 0;
        for (NodeId m : cur.neighbors(loc[0])) (kind(m) == NodeKind::H ? h : plain) += 1;
        return h > plain;
    });
    r.after_stage.push_back(cur);

    // 2: absorb the ancilla preparations.
    exhaust(2, "S1", Rule::S1, [&](const Location& loc) {
        return kind(loc[0]) == NodeKind::Z &&
               (cur.degree(loc[0]) == 1 || cur.degree(loc[1]) == 1);
    });
    r.after_stage.push_back(cur);

    // 3: merge the red CNOT targets on the system wire.
    exhaust(3, "S1", Rule::S1, [&](const Location& loc) { return kind(loc[0]) == NodeKind::X; });
    r.after_stage.push_back(cur);

    // 4: merge the green controls on the first ancilla wire.
    exhaust(4, "S1", Rule::S1, [&](const Location& loc) { return kind(loc[0]) == NodeKind::Z; });
    r.after_stage.push_back(cur);

    // 5: straighten plain wires.
    exhaust(5, "T", Rule::S2, [](const Location&) { return true; });
    r.after_stage.push_back(cur);

    // 6: pull the system output leg off its green spider.
    {
        NodeId out = cur.outputs().at(0);
        NodeId z = single_neighbor(out);
        if (kind(z) != NodeKind::Z) throw DerivationError(6, "system output not on a green spider");
        record(6, RewriteStep{.rule = Rule::S1, .inverse = true, .location = {z, out}, .label = "T,S1"});
    }
    r.after_stage.push_back(cur);

    // 7: split the red spider holding psi into the -z / z pair; the z half
    // carries both ancilla legs.
    {
        NodeId x = single_neighbor(cur.inputs().at(0));
        NodeId anc1 = single_neighbor(cur.outputs().at(1));
        NodeId anc2 = cur.outputs().at(2);
        if (kind(x) != NodeKind::X) throw DerivationError(7, "input not on a red spider");
        record(7, RewriteStep{.rule = Rule::S1,
                              .inverse = true,
                              .location = {x, anc1, anc2},
                              .phase = kEncodingPhase,
                              .label = "S1"});
    }
    r.after_stage.push_back(cur);
    r.final = cur;

    if (!check_proportional(evaluate(r.initial), cur_eval).proportional) {
        throw DerivationError(kDerivationStages, "final diagram not proportional to the initial one");
    }
    // psi must reach both ancilla outputs without touching the system output's spider.
    NodeId psi = r.final.inputs().at(0);
    std::set<NodeId> system{r.final.neighbors(r.final.outputs().at(0)).at(0)};
    for (std::size_t k : {1u, 2u}) {
        if (!connected_avoiding(r.final, psi, r.final.outputs().at(k), system)) {
            throw DerivationError(kDerivationStages, "input not linked to ancilla output " +
                                                          std::to_string(k));
        }
    }
    return r;
}

}  // namespace nohide::zx
