#pragma once

#include <vector>

#include "chordprop/fatgraph.hpp"
#include "chordprop/rational.hpp"

namespace chordprop {

struct SurfaceType {
    int genus = 0;
    int p = 0;  // incoming boundary components
    int q = 0;  // outgoing boundary components

    bool operator==(const SurfaceType&) const = default;
};

/// Role of one boundary cycle: incoming circle `index` (1-based) or outgoing
/// slot `index` (1-based).
struct BoundaryRole {
    bool incoming = false;
    int index = 0;

    bool operator==(const BoundaryRole&) const = default;
};

/// Bijection from outgoing boundary indices of one diagram to incoming circle
/// indices of another.
struct GlueMatching {
    std::vector<std::pair<int, int>> pairs;  // (outgoing of d1, incoming of d2)
};

/// Metric marked Sullivan chord diagram: a fat graph whose ghost edges form p
/// disjoint incoming circles, with positive rational edge lengths, a role for
/// each boundary cycle and a marking (parametrization start offset) on each.
///
/// Edge ids, boundary cycle indices, roles and markings all refer to the
/// canonical form of the underlying graph (edges sorted by minimal half-edge,
/// boundary cycles sorted by minimal half-edge).
class ChordDiagram {
public:
    static ChordDiagram make(FatGraph graph,
                             std::vector<int> ghost_edges,
                             std::vector<Rational> lengths,
                             std::vector<std::vector<int>> incoming_circles,
                             std::vector<BoundaryRole> roles,
                             std::vector<Rational> markings);

    const FatGraph& graph() const { return graph_; }
    const std::vector<int>& ghost_edges() const { return ghost_edges_; }
    bool is_ghost(int edge_id) const;
    const std::vector<Rational>& lengths() const { return lengths_; }
    const std::vector<std::vector<int>>& incoming_circles() const { return incoming_circles_; }
    const std::vector<BoundaryRole>& roles() const { return roles_; }
    const std::vector<Rational>& markings() const { return markings_; }

    SurfaceType type() const { return type_; }

    /// Metric length of the idx-th boundary cycle (0-based, canonical order).
    Rational boundary_length(int idx) const;

    /// True iff every ghost edge is a loop.
    bool is_reduced() const;

    /// Contracts non-loop ghost edges until none remain; transports lengths,
    /// roles and markings. Idempotent; preserves (g;p,q).
    ChordDiagram reduce() const;

    /// Genus 0 and exactly one outgoing boundary (requires a reduced diagram).
    bool is_cactus() const;

    bool operator==(const ChordDiagram&) const = default;

private:
    ChordDiagram() = default;

    FatGraph graph_;
    std::vector<int> ghost_edges_;
    std::vector<Rational> lengths_;
    std::vector<std::vector<int>> incoming_circles_;
    std::vector<BoundaryRole> roles_;
    std::vector<Rational> markings_;
    SurfaceType type_;
};

/// Prop composition: identifies each incoming circle of d2 selected by the
/// matching with the corresponding outgoing boundary of d1, rescaling the
/// circle to the boundary length and transplanting its chord attachments at
/// the metric positions determined by the markings. Both inputs must be
/// reduced and the matching total on d1's outgoing components.
ChordDiagram glue(const ChordDiagram& d1, const ChordDiagram& d2, const GlueMatching& m);

}  // namespace chordprop
