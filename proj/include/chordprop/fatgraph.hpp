#pragma once

#include <utility>
#include <vector>

#include "chordprop/error.hpp"

namespace chordprop {

/// One orbit of the boundary permutation sigma∘alpha, stored in canonical
/// rotation (minimal half-edge first) so equality is decidable.
struct BoundaryCycle {
    std::vector<int> half_edges;

    bool operator==(const BoundaryCycle&) const = default;
};

/// Half-edge representation of a fat (ribbon) graph: a finite set H of
/// half-edges, a fixed-point-free pairing involution alpha whose 2-orbits are
/// the edges, and a permutation sigma whose cycles are the vertices together
/// with the cyclic ordering of half-edges at each vertex.
///
/// Values are canonical: half-edges are renumbered 1..|H| on construction
/// (order-preserving), vertex cycles are rotated to start at their minimal
/// half-edge and listed in increasing order of that minimum. Immutable after
/// construction.
class FatGraph {
public:
    /// Empty graph (no half-edges); connected by convention.
    FatGraph() = default;

    /// Validates and canonicalizes. Input half-edge labels are arbitrary
    /// positive integers; each must occur exactly once in the pairing and
    /// exactly once in the vertex orders.
    static FatGraph make(const std::vector<std::pair<int, int>>& pairing,
                         const std::vector<std::vector<int>>& vertex_orders);

    int half_edge_count() const { return static_cast<int>(pair_.size()) - 1; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    int vertex_count() const { return static_cast<int>(vertices_.size()); }

    int alpha(int h) const { return pair_[h]; }
    int sigma(int h) const { return next_[h]; }

    const std::vector<std::vector<int>>& vertices() const { return vertices_; }

    /// Edges sorted by minimal half-edge; edge ids are 1-based positions here.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    int edge_of(int h) const { return edge_of_[h]; }
    int vertex_of(int h) const { return vertex_of_[h]; }
    bool is_loop_edge(int edge_id) const;

    bool is_connected() const { return connected_; }
    int euler_characteristic() const { return vertex_count() - edge_count(); }

    /// Orbits of the boundary permutation phi = sigma∘alpha, sorted by their
    /// minimal half-edge. Every half-edge appears in exactly one cycle.
    std::vector<BoundaryCycle> boundary_cycles() const;

    /// (2 - b - chi)/2 for a connected graph; throws DisconnectedGraph.
    int genus() const;

    /// Contracts a non-loop edge, merging its endpoints and splicing the two
    /// cyclic orders. Throws LoopContraction on a loop edge.
    FatGraph contract_edge(int edge_id) const;

    /// Like contract_edge, but also returns the relabeling of surviving
    /// half-edges: result.second[old] == new label, or 0 for the two removed
    /// half-edges.
    std::pair<FatGraph, std::vector<int>> contract_edge_mapped(int edge_id) const;

    /// All connected fat graphs with 1..max_edges edges, one representative
    /// per relabeling class, deterministically ordered. max_edges <= 6.
    static std::vector<FatGraph> enumerate(int max_edges);

    bool operator==(const FatGraph& other) const {
        return pair_ == other.pair_ && vertices_ == other.vertices_;
    }

    /// True iff some relabeling of half-edges carries this graph to `other`
    /// (equality of connected maps up to isomorphism). Both graphs must be
    /// connected; throws DisconnectedGraph otherwise.
    bool is_isomorphic(const FatGraph& other) const;

private:
    void finish();  // derives edges_, edge_of_, vertex_of_, next_, connected_

    std::vector<int> pair_{0};               // alpha; index 0 unused
    std::vector<int> next_{0};               // sigma; index 0 unused
    std::vector<std::vector<int>> vertices_; // canonical cycles
    std::vector<std::pair<int, int>> edges_;
    std::vector<int> edge_of_;
    std::vector<int> vertex_of_;
    bool connected_ = true;
};

}  // namespace chordprop
