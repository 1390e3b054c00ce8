#include "chordprop/chord_diagram.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>
#include <unordered_map>

namespace chordprop {

namespace {

// Walk a boundary cycle and find which traversal step contains the point at
// `offset` from the cycle start. Returns (step index, local offset); local
// offset is always < the step's length.
template <typename LenFn>
std::pair<int, Rational> locate(const std::vector<int>& cycle, LenFn&& len, Rational offset) {
    for (int t = 0; t < static_cast<int>(cycle.size()); ++t) {
        Rational l = len(cycle[t]);
        if (offset < l) return {t, offset};
        offset -= l;
    }
    assert(false && "offset beyond cycle length");
    return {0, Rational(0)};
}

}  // namespace

bool ChordDiagram::is_ghost(int edge_id) const {
    return std::binary_search(ghost_edges_.begin(), ghost_edges_.end(), edge_id);
}

Rational ChordDiagram::boundary_length(int idx) const {
    const auto cycles = graph_.boundary_cycles();
    Rational total(0);
    for (int h : cycles.at(idx).half_edges) total += lengths_[graph_.edge_of(h) - 1];
    return total;
}

ChordDiagram ChordDiagram::make(FatGraph graph,
                                std::vector<int> ghost_edges,
                                std::vector<Rational> lengths,
                                std::vector<std::vector<int>> incoming_circles,
                                std::vector<BoundaryRole> roles,
                                std::vector<Rational> markings) {
    const int E = graph.edge_count();
    if (static_cast<int>(lengths.size()) != E)
        throw Error(ErrorCode::NonpositiveLength,
                    "expected " + std::to_string(E) + " edge lengths, got " +
                        std::to_string(lengths.size()));
    for (int e = 1; e <= E; ++e)
        if (lengths[e - 1] <= Rational(0))
            throw Error(ErrorCode::NonpositiveLength,
                        "edge " + std::to_string(e) + " has nonpositive length");

    std::sort(ghost_edges.begin(), ghost_edges.end());
    ghost_edges.erase(std::unique(ghost_edges.begin(), ghost_edges.end()), ghost_edges.end());
    for (int e : ghost_edges)
        if (e < 1 || e > E)
            throw Error(ErrorCode::GhostNotCircles, "ghost edge id " + std::to_string(e) +
                                                        " out of range");

    // canonical circle representation: sorted edge lists, sorted by first edge
    for (auto& circle : incoming_circles) {
        std::sort(circle.begin(), circle.end());
        circle.erase(std::unique(circle.begin(), circle.end()), circle.end());
        if (circle.empty())
            throw Error(ErrorCode::GhostNotCircles, "empty incoming circle");
    }
    std::sort(incoming_circles.begin(), incoming_circles.end());

    // ghost edges are exactly the disjoint union of the circles
    std::set<int> ghost_set(ghost_edges.begin(), ghost_edges.end());
    std::set<int> circle_union;
    for (const auto& circle : incoming_circles)
        for (int e : circle)
            if (!circle_union.insert(e).second)
                throw Error(ErrorCode::GhostNotCircles,
                            "edge " + std::to_string(e) + " lies on two incoming circles");
    if (circle_union != ghost_set)
        throw Error(ErrorCode::GhostNotCircles,
                    "ghost edge set differs from the union of the incoming circles");

    // each circle must be a topological circle: every vertex it touches has
    // exactly two of its half-edges, and the circle subgraph is connected
    for (const auto& circle : incoming_circles) {
        std::map<int, int> incidence;
        for (int e : circle) {
            const auto& [a, b] = graph.edges()[e - 1];
            incidence[graph.vertex_of(a)]++;
            incidence[graph.vertex_of(b)]++;
        }
        for (const auto& [v, count] : incidence)
            if (count != 2)
                throw Error(ErrorCode::GhostNotCircles,
                            "incoming circle is not a circle at vertex " + std::to_string(v + 1));
        // connectivity of the circle subgraph (walk edge-to-edge via shared vertices)
        std::set<int> todo(circle.begin(), circle.end());
        std::vector<int> stack{*todo.begin()};
        todo.erase(stack.back());
        while (!stack.empty()) {
            int e = stack.back();
            stack.pop_back();
            const auto& [a, b] = graph.edges()[e - 1];
            for (auto it = todo.begin(); it != todo.end();) {
                const auto& [c, d] = graph.edges()[*it - 1];
                bool adjacent = graph.vertex_of(a) == graph.vertex_of(c) ||
                                graph.vertex_of(a) == graph.vertex_of(d) ||
                                graph.vertex_of(b) == graph.vertex_of(c) ||
                                graph.vertex_of(b) == graph.vertex_of(d);
                if (adjacent) {
                    stack.push_back(*it);
                    it = todo.erase(it);
                } else {
                    ++it;
                }
            }
        }
        if (!todo.empty())
            throw Error(ErrorCode::GhostNotCircles, "incoming circle is disconnected");
    }

    const auto cycles = graph.boundary_cycles();
    const int b = static_cast<int>(cycles.size());
    const int p = static_cast<int>(incoming_circles.size());
    if (static_cast<int>(roles.size()) != b)
        throw Error(ErrorCode::RoleCountMismatch,
                    "expected " + std::to_string(b) + " boundary roles, got " +
                        std::to_string(roles.size()));
    if (static_cast<int>(markings.size()) != b)
        throw Error(ErrorCode::RoleCountMismatch,
                    "expected " + std::to_string(b) + " markings, got " +
                        std::to_string(markings.size()));
    std::set<int> in_idx, out_idx;
    for (const auto& role : roles) {
        auto& target = role.incoming ? in_idx : out_idx;
        if (!target.insert(role.index).second)
            throw Error(ErrorCode::RoleCountMismatch,
                        "duplicate boundary role index " + std::to_string(role.index));
    }
    const int q = b - p;
    if (q < 0 || static_cast<int>(in_idx.size()) != p ||
        (p > 0 && (*in_idx.begin() != 1 || *in_idx.rbegin() != p)))
        throw Error(ErrorCode::RoleCountMismatch,
                    "incoming roles are not in bijection with the " + std::to_string(p) +
                        " incoming circles");
    if (static_cast<int>(out_idx.size()) != q ||
        (q > 0 && (*out_idx.begin() != 1 || *out_idx.rbegin() != q)))
        throw Error(ErrorCode::RoleCountMismatch,
                    "outgoing roles are not indexed 1.." + std::to_string(q));

    ChordDiagram d;
    d.graph_ = std::move(graph);
    d.ghost_edges_ = std::move(ghost_edges);
    d.lengths_ = std::move(lengths);
    d.incoming_circles_ = std::move(incoming_circles);
    d.roles_ = std::move(roles);
    d.markings_ = std::move(markings);

    for (int i = 0; i < b; ++i) {
        Rational len = d.boundary_length(i);
        if (d.markings_[i] < Rational(0) || d.markings_[i] >= len)
            throw Error(ErrorCode::MarkingOutOfRange,
                        "marking " + format_rational(d.markings_[i]) + " outside [0, " +
                            format_rational(len) + ") on boundary " + std::to_string(i + 1));
    }

    d.type_ = SurfaceType{d.graph_.genus(), p, q};
    return d;
}

bool ChordDiagram::is_reduced() const {
    for (int e : ghost_edges_)
        if (!graph_.is_loop_edge(e)) return false;
    return true;
}

bool ChordDiagram::is_cactus() const { return is_reduced() && type_.genus == 0 && type_.q == 1; }

namespace {

// Transport a marking through the removal of some traversal steps of its
// boundary cycle. Removed steps contribute zero length; the new cycle starts
// at the minimal surviving half-edge (labels are relabeled order-preservingly
// afterwards, so relative order is unchanged).
template <typename LenFn, typename RemovedFn>
Rational transport_collapsed(const std::vector<int>& cycle, LenFn&& len, RemovedFn&& removed,
                             const Rational& marking) {
    auto [t, u] = locate(cycle, len, marking);
    int start = -1, best = 0;
    for (int i = 0; i < static_cast<int>(cycle.size()); ++i)
        if (!removed(cycle[i]) && (start < 0 || cycle[i] < best)) {
            start = i;
            best = cycle[i];
        }
    assert(start >= 0 && "boundary cycle lost all half-edges");
    Rational total(0);
    for (int h : cycle)
        if (!removed(h)) total += len(h);
    Rational acc(0);
    const int k = static_cast<int>(cycle.size());
    for (int step = 0; step < k; ++step) {
        int idx = (start + step) % k;
        // a point on a removed step collapses to that step's start
        if (idx == t) return rational_mod(acc + (removed(cycle[idx]) ? Rational(0) : u), total);
        if (!removed(cycle[idx])) acc += len(cycle[idx]);
    }
    assert(false);
    return Rational(0);
}

}  // namespace

ChordDiagram ChordDiagram::reduce() const {
    ChordDiagram cur = *this;
    for (;;) {
        int target = 0;
        for (int e : cur.ghost_edges_)
            if (!cur.graph_.is_loop_edge(e)) {
                target = e;
                break;
            }
        if (target == 0) break;

        const FatGraph& g = cur.graph_;
        const auto [h, hp] = g.edges()[target - 1];
        const auto old_cycles = g.boundary_cycles();
        auto [new_graph, hmap] = g.contract_edge_mapped(target);

        auto old_len = [&](int half) { return cur.lengths_[g.edge_of(half) - 1]; };
        auto removed = [&](int half) { return half == h || half == hp; };

        // edge id remap
        std::vector<int> emap(g.edge_count() + 1, 0);
        for (int e = 1; e <= g.edge_count(); ++e)
            if (e != target) emap[e] = new_graph.edge_of(hmap[g.edges()[e - 1].first]);

        std::vector<Rational> new_lengths(new_graph.edge_count());
        for (int e = 1; e <= g.edge_count(); ++e)
            if (e != target) new_lengths[emap[e] - 1] = cur.lengths_[e - 1];

        std::vector<int> new_ghost;
        for (int e : cur.ghost_edges_)
            if (e != target) new_ghost.push_back(emap[e]);

        std::vector<std::vector<int>> new_circles;
        for (const auto& circle : cur.incoming_circles_) {
            std::vector<int> mapped;
            for (int e : circle)
                if (e != target) mapped.push_back(emap[e]);
            new_circles.push_back(std::move(mapped));
        }

        const auto new_cycles = new_graph.boundary_cycles();
        auto new_cycle_of = [&](int new_half) {
            for (int i = 0; i < static_cast<int>(new_cycles.size()); ++i)
                for (int x : new_cycles[i].half_edges)
                    if (x == new_half) return i;
            assert(false);
            return -1;
        };

        std::vector<BoundaryRole> new_roles(new_cycles.size());
        std::vector<Rational> new_markings(new_cycles.size());
        for (int i = 0; i < static_cast<int>(old_cycles.size()); ++i) {
            int rep = 0;
            for (int half : old_cycles[i].half_edges)
                if (!removed(half)) {
                    rep = half;
                    break;
                }
            assert(rep != 0);
            int ni = new_cycle_of(hmap[rep]);
            new_roles[ni] = cur.roles_[i];
            new_markings[ni] =
                transport_collapsed(old_cycles[i].half_edges, old_len, removed, cur.markings_[i]);
        }

        cur = make(std::move(new_graph), std::move(new_ghost), std::move(new_lengths),
                   std::move(new_circles), std::move(new_roles), std::move(new_markings));
    }
    return cur;
}

// ---------------------------------------------------------------------------
// Gluing

namespace {

// Mutable half-edge structure used during surgery. Ids are stable; subdivision
// keeps the original ids alive and chains new pieces behind them (succ), so a
// metric position on an original traversal side can be resolved to the piece
// now containing it.
struct Builder {
    std::vector<int> alpha{0}, nxt{0}, prv{0}, succ{0};
    std::vector<char> alive{0}, ghost{0};
    std::vector<Rational> elen{Rational(0)};

    int add() {
        alpha.push_back(0);
        nxt.push_back(0);
        prv.push_back(0);
        succ.push_back(0);
        alive.push_back(1);
        ghost.push_back(0);
        elen.push_back(Rational(0));
        return static_cast<int>(alpha.size()) - 1;
    }

    void link(int a, int b) {
        nxt[a] = b;
        prv[b] = a;
    }

    int import(const ChordDiagram& d) {
        const int off = static_cast<int>(alpha.size()) - 1;
        const FatGraph& g = d.graph();
        for (int h = 1; h <= g.half_edge_count(); ++h) add();
        for (int h = 1; h <= g.half_edge_count(); ++h) {
            alpha[off + h] = off + g.alpha(h);
            link(off + h, off + g.sigma(h));
            elen[off + h] = d.lengths()[g.edge_of(h) - 1];
            ghost[off + h] = d.is_ghost(g.edge_of(h)) ? 1 : 0;
        }
        return off;
    }

    // Split the edge of traversal side h at distance u from its base vertex.
    // Returns the new bivalent vertex's half-edges (n1 paired with h, n2
    // continuing h's traversal side).
    std::pair<int, int> subdivide(int h, const Rational& u) {
        const int h2 = alpha[h];
        const Rational full = elen[h];
        const int n1 = add(), n2 = add();
        alpha[h] = n1;
        alpha[n1] = h;
        alpha[n2] = h2;
        alpha[h2] = n2;
        elen[h] = elen[n1] = u;
        elen[n2] = elen[h2] = full - u;
        ghost[n1] = ghost[n2] = ghost[h];
        link(n1, n2);
        link(n2, n1);
        succ[n2] = succ[h];
        succ[h] = n2;
        succ[n1] = succ[h2];
        succ[h2] = n1;
        return {n1, n2};
    }

    // Point at distance u along the original traversal side h, in terms of
    // the current pieces. u must be < the original side length.
    std::pair<int, Rational> resolve(int h, Rational u) const {
        int cur = h;
        for (;;) {
            if (u < elen[cur]) return {cur, u};
            u -= elen[cur];
            cur = succ[cur];
            assert(cur != 0 && "resolve past end of side");
        }
    }
};

struct PairInfo {
    int g_in = 0, g_out = 0;  // consumed loop halves (incoming side / other side)
    Rational circle_len{0};
    Rational mark_in{0}, mark_out_boundary{0};
    Rational scale{1};
    std::vector<int> d1_cycle;  // builder ids, original traversal of d1's outgoing boundary
    Rational d1_len{0};
};

}  // namespace

ChordDiagram glue(const ChordDiagram& d1, const ChordDiagram& d2, const GlueMatching& m) {
    if (!d1.is_reduced() || !d2.is_reduced())
        throw Error(ErrorCode::UnreducedInput, "glue requires reduced diagrams");
    const int q1 = d1.type().q;
    const int p2 = d2.type().p;
    if (q1 < 1)
        throw Error(ErrorCode::TypeMismatch, "left diagram has no outgoing boundary");
    if (q1 != p2)
        throw Error(ErrorCode::TypeMismatch,
                    "outgoing count " + std::to_string(q1) + " does not match incoming count " +
                        std::to_string(p2));
    {
        std::set<int> outs, ins;
        for (auto [j, i] : m.pairs) {
            if (j < 1 || j > q1 || i < 1 || i > p2 || !outs.insert(j).second ||
                !ins.insert(i).second)
                throw Error(ErrorCode::TypeMismatch, "matching is not a bijection");
        }
        if (static_cast<int>(m.pairs.size()) != q1)
            throw Error(ErrorCode::TypeMismatch, "matching is not total");
    }

    Builder bld;
    const int off1 = bld.import(d1);
    const int off2 = bld.import(d2);
    const std::vector<Rational> len0 = bld.elen;  // original side lengths

    const auto cycles1 = d1.graph().boundary_cycles();
    const auto cycles2 = d2.graph().boundary_cycles();
    auto cycle_with_role = [](const std::vector<BoundaryRole>& roles, bool incoming, int index) {
        for (int i = 0; i < static_cast<int>(roles.size()); ++i)
            if (roles[i].incoming == incoming && roles[i].index == index) return i;
        assert(false);
        return -1;
    };

    std::vector<PairInfo> infos;
    std::unordered_map<int, int> info_of_half;  // consumed half -> index in infos

    for (auto [j, i] : m.pairs) {
        PairInfo info;
        const int c1 = cycle_with_role(d1.roles(), false, j);
        info.mark_out_boundary = d1.markings()[c1];
        for (int h : cycles1[c1].half_edges) info.d1_cycle.push_back(off1 + h);
        for (int h : info.d1_cycle) info.d1_len += len0[h];

        const int c2 = cycle_with_role(d2.roles(), true, i);
        if (cycles2[c2].half_edges.size() != 1)
            throw Error(ErrorCode::GhostNotCircles,
                        "incoming boundary of a reduced diagram must be a single ghost loop");
        info.g_in = off2 + cycles2[c2].half_edges[0];
        if (!bld.ghost[info.g_in])
            throw Error(ErrorCode::GhostNotCircles, "incoming boundary is not a ghost edge");
        info.g_out = bld.alpha[info.g_in];
        if (bld.nxt[info.g_out] != info.g_in)
            throw Error(ErrorCode::GhostNotCircles,
                        "incoming boundary is not the free side of its circle");
        info.circle_len = len0[info.g_in];
        info.mark_in = d2.markings()[c2];
        info.scale = info.d1_len / info.circle_len;

        // chord half-edges at the circle's vertex, between g_in and g_out
        std::vector<int> chords;
        for (int w = bld.nxt[info.g_in]; w != info.g_out; w = bld.nxt[w]) chords.push_back(w);

        if (chords.empty()) {
            // bare circle (identity cylinder): nothing to transplant
            bld.alive[info.g_in] = bld.alive[info.g_out] = 0;
        } else {
            // metric position of the attachment vertex on d1's boundary
            Rational vertex_param = rational_mod(info.circle_len - info.mark_in, info.circle_len);
            Rational pos = rational_mod(info.mark_out_boundary + info.scale * vertex_param,
                                        info.d1_len);
            auto [t, u0] = locate(info.d1_cycle, [&](int h) { return len0[h]; }, pos);
            auto [hp, u] = bld.resolve(info.d1_cycle[t], u0);
            if (u == Rational(0))
                throw Error(ErrorCode::CoincidentAttachment,
                            "attachment point lands on an existing vertex");
            auto [n1, n2] = bld.subdivide(hp, u);
            bld.link(n1, chords.front());
            bld.link(chords.back(), n2);
            bld.link(n2, n1);
            bld.alive[info.g_in] = bld.alive[info.g_out] = 0;
        }
        info_of_half[info.g_in] = static_cast<int>(infos.size());
        info_of_half[info.g_out] = static_cast<int>(infos.size());
        infos.push_back(std::move(info));
    }

    // ------------------------------------------------------------------
    // assemble the glued diagram
    std::vector<int> alive_ids;
    for (int h = 1; h < static_cast<int>(bld.alpha.size()); ++h)
        if (bld.alive[h]) alive_ids.push_back(h);
    std::vector<int> newlab(bld.alpha.size(), 0);
    for (int i = 0; i < static_cast<int>(alive_ids.size()); ++i) newlab[alive_ids[i]] = i + 1;

    std::vector<std::pair<int, int>> pairs;
    for (int h : alive_ids)
        if (newlab[h] < newlab[bld.alpha[h]]) pairs.emplace_back(newlab[h], newlab[bld.alpha[h]]);
    std::vector<std::vector<int>> orders;
    {
        std::set<int> left(alive_ids.begin(), alive_ids.end());
        while (!left.empty()) {
            int start = *left.begin();
            std::vector<int> cycle;
            int h = start;
            do {
                left.erase(h);
                cycle.push_back(newlab[h]);
                h = bld.nxt[h];
            } while (h != start);
            orders.push_back(std::move(cycle));
        }
    }
    FatGraph new_graph = FatGraph::make(pairs, orders);

    std::vector<Rational> new_lengths(new_graph.edge_count());
    std::vector<int> new_ghost;
    for (int e = 1; e <= new_graph.edge_count(); ++e) {
        int h = alive_ids[new_graph.edges()[e - 1].first - 1];
        new_lengths[e - 1] = bld.elen[h];
        if (bld.ghost[h]) new_ghost.push_back(e);
    }

    const auto new_cycles = new_graph.boundary_cycles();
    auto new_cycle_of = [&](int builder_half) {
        int lab = newlab[builder_half];
        for (int i = 0; i < static_cast<int>(new_cycles.size()); ++i)
            for (int x : new_cycles[i].half_edges)
                if (x == lab) return i;
        assert(false);
        return -1;
    };
    // offset of the point (builder half, local u) from its new cycle's start
    auto new_offset = [&](int builder_half, const Rational& u) {
        int ci = new_cycle_of(builder_half);
        Rational acc(0);
        for (int x : new_cycles[ci].half_edges) {
            if (x == newlab[builder_half]) return std::pair<int, Rational>{ci, acc + u};
            acc += new_lengths[new_graph.edge_of(x) - 1];
        }
        assert(false);
        return std::pair<int, Rational>{ci, acc};
    };

    std::vector<BoundaryRole> new_roles(new_cycles.size());
    std::vector<Rational> new_markings(new_cycles.size(), Rational(0));
    std::vector<char> assigned(new_cycles.size(), 0);

    // incoming boundaries come from d1
    for (const auto& role : d1.roles()) {
        if (!role.incoming) continue;
        const int c1 = cycle_with_role(d1.roles(), true, role.index);
        std::vector<int> old_cycle;
        for (int h : cycles1[c1].half_edges) old_cycle.push_back(off1 + h);
        auto [t, u0] = locate(old_cycle, [&](int h) { return len0[h]; }, d1.markings()[c1]);
        auto [hp, u] = bld.resolve(old_cycle[t], u0);
        auto [ci, off] = new_offset(hp, u);
        // sanity: the representative lies on the same cycle
        assert(new_cycle_of(old_cycle[0]) == ci);
        new_roles[ci] = BoundaryRole{true, role.index};
        new_markings[ci] = off;
        assigned[ci] = 1;
    }

    // outgoing boundaries come from d2
    for (const auto& role : d2.roles()) {
        if (role.incoming) continue;
        const int c2 = cycle_with_role(d2.roles(), false, role.index);
        std::vector<int> old_cycle;
        for (int h : cycles2[c2].half_edges) old_cycle.push_back(off2 + h);

        auto to_new_point = [&](int h, Rational u0) {
            if (bld.alive[h]) return bld.resolve(h, u0);
            // consumed circle side: map through the identification onto d1
            const PairInfo& info = infos[info_of_half.at(h)];
            Rational coord = (h == info.g_out)
                                 ? rational_mod(info.circle_len - u0, info.circle_len)
                                 : u0;
            Rational s = rational_mod(coord - info.mark_in, info.circle_len);
            Rational pos = rational_mod(info.mark_out_boundary + info.scale * s, info.d1_len);
            auto [t1, u1] = locate(info.d1_cycle, [&](int x) { return len0[x]; }, pos);
            return bld.resolve(info.d1_cycle[t1], u1);
        };

        auto [t, u0] = locate(old_cycle, [&](int h) { return len0[h]; }, d2.markings()[c2]);
        auto [hp, u] = to_new_point(old_cycle[t], u0);
        auto [ci, off] = new_offset(hp, u);
        new_roles[ci] = BoundaryRole{false, role.index};
        new_markings[ci] = off;
        assigned[ci] = 1;
    }

    for (char a : assigned) assert(a && "unassigned boundary after gluing");

    // incoming circles of the result: edges traversed by the incoming cycles
    std::vector<std::vector<int>> new_circles;
    for (int i = 0; i < static_cast<int>(new_cycles.size()); ++i) {
        if (!new_roles[i].incoming) continue;
        std::vector<int> circle;
        for (int h : new_cycles[i].half_edges) circle.push_back(new_graph.edge_of(h));
        new_circles.push_back(std::move(circle));
    }

    return ChordDiagram::make(std::move(new_graph), std::move(new_ghost), std::move(new_lengths),
                              std::move(new_circles), std::move(new_roles),
                              std::move(new_markings));
}

}  // namespace chordprop
