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

#pragma once

#include <map>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nohide/circuit.hpp"
#include "nohide/qmath.hpp"

namespace nohide::zx {

enum class NodeKind { Z, X, H, In, Out };

std::string_view kind_name(NodeKind kind);  // "Z", "X", "H", "in", "out"
NodeKind parse_kind(std::string_view name);

using NodeId = int;
using Edge = std::pair<NodeId, NodeId>;  // stored with first <= second

struct Node {
    NodeKind kind = NodeKind::Z;
    double phase = 0;  // radians in [0, 2pi); spiders only

    bool is_spider() const { return kind == NodeKind::Z || kind == NodeKind::X; }
    bool is_boundary() const { return kind == NodeKind::In || kind == NodeKind::Out; }
    bool operator==(const Node&) const = default;
};

/// Wraps into [0, 2pi).
double normalize_phase(double phase);
bool phase_is_zero(double phase);

/// Open graph of spiders, Hadamard boxes and boundaries. Only connectivity is
/// semantic; edges form a multiset and self-loops are rejected.
class Diagram {
   public:
    /// In/Out nodes are appended to the input/output lists.
    NodeId add_node(NodeKind kind, double phase = 0);
    /// Used by deserialization; does not touch the boundary lists.
    void insert_node(NodeId id, Node node);
    void remove_node(NodeId id);

    void add_edge(NodeId a, NodeId b);
    /// Removes one occurrence; throws if absent.
    void remove_edge(NodeId a, NodeId b);

    bool has_node(NodeId id) const { return nodes_.contains(id); }
    const Node& node(NodeId id) const;
    void set_node(NodeId id, Node node);

    const std::map<NodeId, Node>& nodes() const { return nodes_; }
    const std::multiset<Edge>& edges() const { return edges_; }
    const std::vector<NodeId>& inputs() const { return inputs_; }
    const std::vector<NodeId>& outputs() const { return outputs_; }
    void set_boundaries(std::vector<NodeId> inputs, std::vector<NodeId> outputs);
    /// Drops `id` from the input/output lists (used when a boundary is plugged).
    void forget_boundary(NodeId id);

    /// Neighbours with multiplicity, ascending.
    std::vector<NodeId> neighbors(NodeId id) const;
    int degree(NodeId id) const;
    int edge_count(NodeId a, NodeId b) const;
    NodeId next_id() const;

    std::size_t spider_count() const;
    std::size_t hbox_count() const;
    /// Spiders plus H-boxes.
    std::size_t internal_count() const { return spider_count() + hbox_count(); }

    /// Throws std::logic_error describing the first violated invariant.
    void validate() const;

    bool operator==(const Diagram&) const = default;

   private:
    std::map<NodeId, Node> nodes_;
    std::multiset<Edge> edges_;
    std::vector<NodeId> inputs_;
    std::vector<NodeId> outputs_;
};

/// Replaces input boundary number `index` with a one-legged spider, i.e.
/// feeds a fixed state into that wire. The node keeps its id.
Diagram plug_input(const Diagram& d, std::size_t index, NodeKind spider, double phase);

/// Translation of {H, X, Y, Z, S, T, CNOT} circuits. Z-type gates become
/// green spiders, X a red pi spider, Y a green pi followed by a red pi, H an
/// H-box and CNOT a green (control) - red (target) pair.
Diagram circuit_to_zx(const Circuit& c);

class DiagramTooLarge : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Node visiting order derived from structure alone (boundaries first, then
/// a refinement-coloured BFS), so relabelled copies contract identically.
std::vector<NodeId> canonical_order(const Diagram& d);

/// Contracts the diagram into its 2^|outputs| x 2^|inputs| linear map.
/// Spider(a) = |0..0><0..0| + e^{ia}|1..1><1..1| in its own basis (no
/// leg-count normalisation); H-box = Hadamard. Throws DiagramTooLarge when an
/// intermediate tensor would exceed `max_open_legs` legs.
ComplexMatrix evaluate(const Diagram& d, int max_open_legs = 22);

struct Proportionality {
    bool proportional = false;
    Complex scalar{0, 0};  // after = scalar * before
    double deviation = 0;  // |after - scalar * before| / |after|
};

Proportionality check_proportional(const ComplexMatrix& before, const ComplexMatrix& after,
                                   double tol = 1e-9);

enum class Rule { S1, S2, C, B2, HH };

std::string_view rule_name(Rule rule);
Rule parse_rule(std::string_view name);

/// Location of a rule application:
///   S1 [a, b]            fuse adjacent same-colour spiders into a
///   S1 inverse [s, n...] split the legs to n... off s into a new spider
///   S2 [s]               remove a phase-free two-legged spider
///   C  [s]               colour change, toggling an H-box on every leg
///   B2 [z1, z2, x1, x2]  collapse a Z/X complete bipartite square into a pair
///   B2 inverse [z, x]    expand a phase-free Z-X pair into the square
///   HH [h1, h2]          cancel two adjacent H-boxes
using Location = std::vector<NodeId>;

class PatternMismatch : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Every left-hand-side occurrence of the rule, ordered by node id.
std::vector<Location> match_rule(const Diagram& d, Rule rule);

/// Occurrences for the inverse direction (only B2 is enumerable; S1 splits
/// need a caller-chosen leg partition).
std::vector<Location> match_inverse(const Diagram& d, Rule rule);

Diagram apply_rule(const Diagram& d, Rule rule, std::span<const NodeId> location);

/// Inverse S1: moves the listed neighbour legs of `spider` onto a fresh
/// spider of the same colour carrying `moved_phase`.
Diagram unfuse(const Diagram& d, NodeId spider, std::span<const NodeId> moved_neighbors,
               double moved_phase);

/// Inverse B2 on [z, x].
Diagram unbialgebra(const Diagram& d, std::span<const NodeId> location);

/// Exact scalar (after / before) each rule introduces under our normalisation.
Complex rule_scalar(Rule rule, bool inverse);

struct RewriteStep {
    Rule rule = Rule::S1;
    bool inverse = false;
    Location location;
    double phase = 0;             // inverse S1 only
    Complex scalar{1, 0};         // measured proportionality factor
    int stage = 0;                // scripted derivation stage, 0 otherwise
    std::string label;            // stage label as printed, e.g. "T,S1"

    bool operator==(const RewriteStep&) const = default;
};

Diagram apply_step(const Diagram& d, const RewriteStep& step);
Diagram replay(Diagram d, std::span<const RewriteStep> trace);

struct SimplifyResult {
    Diagram diagram;
    std::vector<RewriteStep> trace;
};

/// Greedy fixpoint in priority order HH, S2, S1, C (only when it sets up an
/// S1 without adding nodes, at most 2x the initial H-box count times), B2.
SimplifyResult simplify(const Diagram& d);

/// The erasure circuit as drawn for the diagrammatic derivation:
/// H(1), H(2), CX(1,0), CX(2,0), H(0), CX(1,0), H(0).
Circuit derivation_circuit();

/// derivation_circuit() translated, with both ancilla inputs plugged by |0>
/// (one-legged red spiders). Checks that it evaluates proportionally to the
/// controlled-Pauli randomizer applied to psi (x) |++>.
Diagram derivation_diagram();

/// Phase z of the final "z / -z" red spider pair.
inline constexpr double kEncodingPhase = 0.78539816339744830962;  // pi/4

class DerivationError : public std::runtime_error {
   public:
    DerivationError(int stage, const std::string& what);
    int stage() const { return stage_; }

   private:
    int stage_;
};

struct Derivation {
    Diagram initial;
    Diagram final;
    std::vector<Diagram> after_stage;  // one per stage
    std::vector<RewriteStep> trace;
};

inline constexpr int kDerivationStages = 7;

/// Replays the seven-stage chain C, S1, S1, S1, T, (T,S1), S1 on
/// derivation_diagram(), checking every step up to scalar.
Derivation scripted_derivation();

/// True if a path joins `a` and `b` without entering any node in `blocked`.
bool connected_avoiding(const Diagram& d, NodeId a, NodeId b, const std::set<NodeId>& blocked = {});

}  // namespace nohide::zx
