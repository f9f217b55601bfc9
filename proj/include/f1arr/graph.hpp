#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "f1arr/arrangement.hpp"
#include "f1arr/f1.hpp"

namespace f1arr {

// Finite multigraph. Edges are ordered pairs (tail, head); the storage order
// fixes the reference orientation. Loops (tail == head) and parallel edges
// are allowed, and the graph may be disconnected.
struct Graph {
    std::size_t vertex_count = 0;
    std::vector<std::pair<std::size_t, std::size_t>> edges;

    std::size_t edge_count() const { return edges.size(); }
};

Graph parse_graph(const std::string& text);

std::size_t component_count(const Graph& g);

// b1 = |E| - |V| + #components, the dimension of the cycle space.
std::size_t betti_number(const Graph& g);

struct SpanningForest {
    std::vector<std::size_t> edge_indices;  // ascending, acyclic, component-spanning
};

// Deterministic: union-find over edges in storage order; loops never enter.
SpanningForest spanning_forest(const Graph& g);

// Basis of the cycle space as integer edge-vectors. Simple cycles have
// entries in {-1, 0, +1}. For a fundamental basis, labels[i] is the
// non-forest edge generating cycle i (empty for other bases).
struct CycleBasis {
    std::vector<std::vector<int>> cycles;  // each of length |E|
    std::vector<std::size_t> labels;
};

// One simple cycle per non-forest edge e: e plus the forest path joining its
// endpoints, signed so that e has coefficient +1. A loop yields the unit
// vector at its own index.
CycleBasis fundamental_basis(const Graph& g, const SpanningForest& f);

// Row e is the edge functional on the cycle space, written in the given
// basis: (coefficient of e in cycle 0, ...). A zero row marks a bridge.
struct CocycleTable {
    std::vector<std::vector<int>> rows;
};

CocycleTable cocycle_table(const Graph& g, const CycleBasis& b);

// The central reduced arrangement of the nonzero edge functionals in the
// cycle space (ambient dimension = b1), built from the fundamental basis of
// the deterministic spanning forest. Scalar-multiple functionals merge.
Arrangement build_cycle_arrangement(const Graph& g);

// True iff no edge is used by two basis cycles. Throws Error(Input) if some
// cycle has an entry outside {-1, 0, 1}.
bool is_separated(const CycleBasis& b);

// True iff every biconnected block has first Betti number <= 1 (bridges,
// single cycles, loops and parallel pairs qualify; triple parallels do not).
bool is_cactus(const Graph& g);

// Exact number of spanning forests, via the matrix-tree determinant taken
// per component.
Int spanning_forest_count(const Graph& g);

// All spanning forests, in lexicographic edge-index order; stops after `cap`.
std::vector<SpanningForest> enumerate_spanning_forests(const Graph& g, std::size_t cap);

struct SharedEdgeWitness {
    std::size_t edge = 0;                    // lies on more than one basis cycle
    std::vector<std::size_t> cycle_labels;   // generating edges of those cycles
};

struct GraphTorificationOptions {
    std::size_t forest_enumeration_cap = 10000;
    std::size_t forest_samples = 1000;  // used when the cap is exceeded
    std::uint64_t sample_seed = 0x5eedf1a2;
};

// Every formulation of torifiability of the cycle-space complement,
// evaluated independently and cross-checked: they provably agree, so any
// mismatch throws Error(Invariant).
struct GraphTorificationReport {
    std::size_t b1 = 0;
    std::size_t arrangement_size = 0;

    bool torifiable = false;            // the complement admits a torification
    bool boolean_arrangement = false;
    bool size_equals_b1 = false;
    bool all_fundamental_bases_separated = false;
    bool some_fundamental_basis_separated = false;
    bool separated_basis_exists = false;
    bool cactus = false;

    bool forest_check_exhaustive = true;
    std::size_t forests_checked = 0;
    Int forest_count;

    bool verdict = false;  // the common value of the conditions above

    std::optional<CycleBasis> separated_basis;   // set when verdict is true
    std::optional<SharedEdgeWitness> shared_edge;  // set when verdict is false

    Arrangement arrangement;
    TorificationReport f1;
};

GraphTorificationReport graph_torification_report(const Graph& g,
                                                  const GraphTorificationOptions& opts = {});

}  // namespace f1arr
