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

#include "nohide/report.hpp"

namespace nohide::report {

json diagram_json(const zx::Diagram& d) {
    json nodes = json::array();
    for (const auto& [id, n] : d.nodes()) {
        nodes.push_back({{"id", id}, {"kind", std::string(zx::kind_name(n.kind))}, {"phase", n.phase}});
    }
    json edges = json::array();
    for (const auto& [a, b] : d.edges()) edges.push_back({a, b});
    return {{"nodes", std::move(nodes)},
            {"edges", std::move(edges)},
            {"inputs", d.inputs()},
            {"outputs", d.outputs()}};
}

zx::Diagram diagram_from_json(const json& j) {
    zx::Diagram d;
    for (const auto& n : j.at("nodes")) {
        d.insert_node(n.at("id").get<int>(),
                      zx::Node{zx::parse_kind(n.at("kind").get<std::string>()),
                               n.value("phase", 0.0)});
    }
    for (const auto& e : j.at("edges")) d.add_edge(e.at(0).get<int>(), e.at(1).get<int>());
    d.set_boundaries(j.at("inputs").get<std::vector<int>>(), j.at("outputs").get<std::vector<int>>());
    d.validate();
    return d;
}

json trace_json(std::span<const zx::RewriteStep> trace) {
    json a = json::array();
    for (const auto& s : trace) {
        json step = {{"rule", std::string(zx::rule_name(s.rule))},
                     {"location", s.location},
                     {"scalar_re", s.scalar.real()},
                     {"scalar_im", s.scalar.imag()}};
        if (s.inverse) step["inverse"] = true;
        if (s.phase != 0) step["phase"] = s.phase;
        if (s.stage != 0) step["stage"] = s.stage;
        if (!s.label.empty()) step["label"] = s.label;
        a.push_back(std::move(step));
    }
    return a;
}

std::vector<zx::RewriteStep> trace_from_json(const json& j) {
    std::vector<zx::RewriteStep> out;
    for (const auto& s : j) {
        zx::RewriteStep step;
        step.rule = zx::parse_rule(s.at("rule").get<std::string>());
        step.location = s.at("location").get<std::vector<int>>();
        step.scalar = {s.at("scalar_re").get<double>(), s.at("scalar_im").get<double>()};
        step.inverse = s.value("inverse", false);
        step.phase = s.value("phase", 0.0);
        step.stage = s.value("stage", 0);
        step.label = s.value("label", std::string{});
        out.push_back(std::move(step));
    }
    return out;
}

}  // namespace nohide::report
