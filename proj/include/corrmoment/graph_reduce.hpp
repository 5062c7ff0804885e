// graph_reduce.hpp -- the marked k-gon and its reduction algorithm.
//
// A partition of the edge slots {1..k} marks the k-gon Gamma_k: edge j
// connects vertices a_j and a_{j+1 mod k}, and edges in the same block
// belong to the same cumulant. C(pi) lists the blocks in first-traversal
// order. The reduction rewrites non-crossing pair substructure into
// weighted edges:
//
//   Step I    merge two adjacent edges of one pair        -> weight 1
//   Step II   merge two adjacent weighted edges           -> weights add
//   Step III  collapse pair-edge / weighted / pair-edge   -> weight + 1
//
// The working graph stays a single closed cycle throughout (a loop being
// the 1-cycle), so edges and vertices are kept as parallel cyclic arrays.
// Weights count consumed pairs: sum of weights + remaining pairs = k/2
// for pair partitions, and a non-crossing pairing collapses to a single
// loop of weight k/2. Blocks of size >= 3 transfer untouched.

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "corrmoment/partitions.hpp"

namespace corrmoment {

enum class StepKind { I, II, III };

// Algebraic object a step introduces: a T-matrix element, a matrix product
// element, or the summed-in matrix replacing an element and a 2-cumulant.
enum class AlgebraKind { TElement, MatrixProduct, SumInMatrix };

struct GraphEdge {
    int id = -1;      // original edges: 0-based slot; new edges: fresh ids
    int weight = 0;   // 0 for marked edges
    int mark = -1;    // block index in C(pi) for weight-0 edges

    friend bool operator==(const GraphEdge&, const GraphEdge&) = default;
};

// The k-gon with the mark set C(pi).
struct PairingGraph {
    int k = 0;
    Partition partition;
    std::vector<std::vector<int>> marks;  // C(pi): block -> 0-based edge slots
};

// Cyclic working graph: edge i runs from vertices[i] to vertices[(i+1)%m].
struct WeightedGraph {
    int k = 0;
    std::vector<int> vertices;            // surviving original labels, 1-based
    std::vector<GraphEdge> edges;
    std::vector<std::vector<int>> marks;  // immutable copy of C(pi)
    std::vector<char> mark_alive;
    int next_edge_id = 0;

    int size() const { return static_cast<int>(edges.size()); }
    std::vector<int> remaining_marks() const;
    int remaining_pair_count() const;
    int total_weight() const;
    bool fully_reduced() const;  // lone vertex with a loop, no marks left
};

struct TraceStep {
    StepKind kind;
    std::vector<int> consumed_edge_ids;
    std::vector<int> removed_vertices;
    int new_edge_id = -1;
    int new_weight = 0;
    int mark_removed = -1;
    AlgebraKind algebra;
};
using ReductionTrace = std::vector<TraceStep>;

PairingGraph build_kgon(const Partition& p);

WeightedGraph initial_weighted(const PairingGraph& g);

// One pass over C(pi) merging adjacent same-pair edges.
WeightedGraph step_I(const PairingGraph& g);

// Step II to its fixed point (no two weighted edges adjacent); returns the
// input unchanged when no site exists.
WeightedGraph step_II(WeightedGraph g);

// Step III sweeps to its fixed point.
WeightedGraph step_III(WeightedGraph g);

// Step I, then alternate II and III until neither applies.
std::pair<WeightedGraph, ReductionTrace> reduce(const PairingGraph& g);

// Re-apply a recorded trace; reproduces reduce()'s final graph exactly.
WeightedGraph replay(const PairingGraph& g, const ReductionTrace& trace);

// Adjacency patterns between a weighted edge and a 3-tuple (types 1-3).
struct TupleAdjacency {
    int type = 0;                 // 1, 2 or 3
    int mark = -1;                // the 3-tuple involved
    std::vector<int> edge_ids;    // participating edges, weighted ones included
};

// Classify every weighted edge flanked by two edges of one 3-tuple.
std::vector<TupleAdjacency> classify_tuple_adjacency(const WeightedGraph& g);

std::string to_dot(const WeightedGraph& g, const std::string& name = "G");
std::string to_dot(const PairingGraph& g, const std::string& name = "G");

}  // namespace corrmoment
