#include "chordprop/fatgraph.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace chordprop {

namespace {

// Rotate a cyclic sequence so its minimal element comes first.
void rotate_min_first(std::vector<int>& cycle) {
    if (cycle.empty()) return;
    auto it = std::min_element(cycle.begin(), cycle.end());
    std::rotate(cycle.begin(), it, cycle.end());
}

}  // namespace

FatGraph FatGraph::make(const std::vector<std::pair<int, int>>& pairing,
                        const std::vector<std::vector<int>>& vertex_orders) {
    std::set<int> in_pairing;
    for (const auto& [a, b] : pairing) {
        if (a == b)
            throw Error(ErrorCode::FixedPointInPairing,
                        "half-edge " + std::to_string(a) + " paired with itself");
        for (int h : {a, b}) {
            if (h <= 0)
                throw Error(ErrorCode::MissingHalfEdge,
                            "half-edge labels must be positive, got " + std::to_string(h));
            if (!in_pairing.insert(h).second)
                throw Error(ErrorCode::DuplicateHalfEdge,
                            "half-edge " + std::to_string(h) + " occurs twice in pairing");
        }
    }
    std::set<int> in_orders;
    for (const auto& cycle : vertex_orders)
        for (int h : cycle)
            if (!in_orders.insert(h).second)
                throw Error(ErrorCode::DuplicateHalfEdge,
                            "half-edge " + std::to_string(h) + " occurs twice in vertex orders");
    for (int h : in_pairing)
        if (!in_orders.count(h))
            throw Error(ErrorCode::MissingHalfEdge,
                        "half-edge " + std::to_string(h) + " missing from vertex orders");
    for (int h : in_orders)
        if (!in_pairing.count(h))
            throw Error(ErrorCode::MissingHalfEdge,
                        "half-edge " + std::to_string(h) + " missing from pairing");

    // canonical relabeling 1..|H|, order-preserving
    std::map<int, int> relabel;
    int next_label = 0;
    for (int h : in_pairing) relabel[h] = ++next_label;
    const int n = next_label;

    FatGraph g;
    g.pair_.assign(n + 1, 0);
    for (const auto& [a, b] : pairing) {
        g.pair_[relabel[a]] = relabel[b];
        g.pair_[relabel[b]] = relabel[a];
    }
    for (const auto& cycle : vertex_orders) {
        if (cycle.empty()) continue;
        std::vector<int> c;
        c.reserve(cycle.size());
        for (int h : cycle) c.push_back(relabel[h]);
        rotate_min_first(c);
        g.vertices_.push_back(std::move(c));
    }
    std::sort(g.vertices_.begin(), g.vertices_.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    g.finish();
    return g;
}

void FatGraph::finish() {
    const int n = static_cast<int>(pair_.size()) - 1;
    next_.assign(n + 1, 0);
    vertex_of_.assign(n + 1, -1);
    for (int v = 0; v < static_cast<int>(vertices_.size()); ++v) {
        const auto& cycle = vertices_[v];
        for (size_t i = 0; i < cycle.size(); ++i) {
            next_[cycle[i]] = cycle[(i + 1) % cycle.size()];
            vertex_of_[cycle[i]] = v;
        }
    }
    edges_.clear();
    edge_of_.assign(n + 1, 0);
    for (int h = 1; h <= n; ++h)
        if (h < pair_[h]) edges_.emplace_back(h, pair_[h]);
    for (int e = 0; e < static_cast<int>(edges_.size()); ++e) {
        edge_of_[edges_[e].first] = e + 1;
        edge_of_[edges_[e].second] = e + 1;
    }
    // connectivity: orbit of <alpha, sigma> on H
    connected_ = true;
    if (n > 0) {
        std::vector<char> seen(n + 1, 0);
        std::vector<int> stack{1};
        seen[1] = 1;
        int count = 1;
        while (!stack.empty()) {
            int h = stack.back();
            stack.pop_back();
            for (int m : {pair_[h], next_[h]})
                if (!seen[m]) {
                    seen[m] = 1;
                    ++count;
                    stack.push_back(m);
                }
        }
        connected_ = (count == n);
    }
}

bool FatGraph::is_loop_edge(int edge_id) const {
    const auto& [a, b] = edges_.at(edge_id - 1);
    return vertex_of_[a] == vertex_of_[b];
}

std::vector<BoundaryCycle> FatGraph::boundary_cycles() const {
    const int n = half_edge_count();
    std::vector<char> seen(n + 1, 0);
    std::vector<BoundaryCycle> cycles;
    for (int start = 1; start <= n; ++start) {
        if (seen[start]) continue;
        BoundaryCycle cycle;
        int h = start;
        do {
            seen[h] = 1;
            cycle.half_edges.push_back(h);
            h = next_[pair_[h]];  // phi = sigma∘alpha
        } while (h != start);
        cycles.push_back(std::move(cycle));
    }
    // starts are already minimal within their orbit (smallest unseen first),
    // and cycles are produced in increasing order of that minimum
    return cycles;
}

int FatGraph::genus() const {
    if (!connected_)
        throw Error(ErrorCode::DisconnectedGraph, "genus requires a connected fat graph");
    if (half_edge_count() == 0) return 0;
    const int b = static_cast<int>(boundary_cycles().size());
    return (2 - b - euler_characteristic()) / 2;
}

FatGraph FatGraph::contract_edge(int edge_id) const {
    return contract_edge_mapped(edge_id).first;
}

std::pair<FatGraph, std::vector<int>> FatGraph::contract_edge_mapped(int edge_id) const {
    if (edge_id < 1 || edge_id > edge_count())
        throw Error(ErrorCode::MissingHalfEdge, "no edge with id " + std::to_string(edge_id));
    if (is_loop_edge(edge_id))
        throw Error(ErrorCode::LoopContraction,
                    "edge " + std::to_string(edge_id) + " is a loop");
    if (half_edge_count() == 2)
        throw Error(ErrorCode::PointContraction,
                    "contracting the only edge collapses the graph to a point, "
                    "which has no half-edge representation");
    const auto [h, hp] = edges_[edge_id - 1];
    const int v1 = vertex_of_[h], v2 = vertex_of_[hp];

    // merged cycle: rot(cycle(v1), h)[1:] ++ rot(cycle(v2), hp)[1:]
    auto after = [&](int vertex, int at) {
        std::vector<int> c = vertices_[vertex];
        auto it = std::find(c.begin(), c.end(), at);
        std::rotate(c.begin(), it, c.end());
        c.erase(c.begin());
        return c;
    };
    std::vector<int> merged = after(v1, h);
    std::vector<int> tail = after(v2, hp);
    merged.insert(merged.end(), tail.begin(), tail.end());

    std::vector<std::vector<int>> new_orders;
    for (int v = 0; v < vertex_count(); ++v)
        if (v != v1 && v != v2) new_orders.push_back(vertices_[v]);
    if (!merged.empty()) new_orders.push_back(merged);

    std::vector<std::pair<int, int>> new_pairs;
    for (const auto& [a, b] : edges_)
        if (a != h && a != hp) new_pairs.emplace_back(a, b);

    FatGraph out = make(new_pairs, new_orders);
    // make() relabels order-preservingly; reproduce that map here
    std::vector<int> mapping(half_edge_count() + 1, 0);
    int next_label = 0;
    for (int old = 1; old <= half_edge_count(); ++old)
        if (old != h && old != hp) mapping[old] = ++next_label;
    return {std::move(out), std::move(mapping)};
}

namespace {

// Canonical traversal code of a connected map rooted at `root`: relabel
// half-edges in discovery order (exploring sigma then alpha) and emit
// (sigma, alpha) in the new labels. Two connected maps are related by a
// relabeling iff their minimal codes over all roots agree.
std::vector<int> root_code(const std::vector<int>& sig, const std::vector<int>& alp, int n,
                           int root) {
    std::vector<int> newlab(n + 1, 0), order;
    order.reserve(n);
    newlab[root] = 1;
    order.push_back(root);
    for (size_t qi = 0; qi < order.size(); ++qi) {
        int h = order[qi];
        for (int m : {sig[h], alp[h]})
            if (!newlab[m]) {
                newlab[m] = static_cast<int>(order.size()) + 1;
                order.push_back(m);
            }
    }
    std::vector<int> code;
    code.reserve(2 * n);
    for (int i = 0; i < n; ++i) {
        code.push_back(newlab[sig[order[i]]]);
        code.push_back(newlab[alp[order[i]]]);
    }
    return code;
}

std::vector<int> canonical_code(const std::vector<int>& sig, const std::vector<int>& alp,
                                int n) {
    std::vector<int> best;
    for (int root = 1; root <= n; ++root) {
        std::vector<int> code = root_code(sig, alp, n, root);
        if (best.empty() || code < best) best = std::move(code);
    }
    return best;
}

bool pair_connected(const std::vector<int>& sig, const std::vector<int>& alp, int n) {
    std::vector<char> seen(n + 1, 0);
    std::vector<int> stack{1};
    seen[1] = 1;
    int count = 1;
    while (!stack.empty()) {
        int h = stack.back();
        stack.pop_back();
        for (int m : {sig[h], alp[h]})
            if (!seen[m]) {
                seen[m] = 1;
                ++count;
                stack.push_back(m);
            }
    }
    return count == n;
}

void partitions_into(int remaining, int max_part, std::vector<int>& current,
                     std::vector<std::vector<int>>& out) {
    if (remaining == 0) {
        out.push_back(current);
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        current.push_back(part);
        partitions_into(remaining - part, part, current, out);
        current.pop_back();
    }
}

void involutions(int n, std::vector<int>& alp, std::vector<char>& used,
                 const std::function<void()>& emit) {
    int first = 0;
    for (int h = 1; h <= n; ++h)
        if (!used[h]) {
            first = h;
            break;
        }
    if (first == 0) {
        emit();
        return;
    }
    used[first] = 1;
    for (int other = first + 1; other <= n; ++other) {
        if (used[other]) continue;
        used[other] = 1;
        alp[first] = other;
        alp[other] = first;
        involutions(n, alp, used, emit);
        used[other] = 0;
    }
    used[first] = 0;
}

FatGraph from_sigma_alpha(const std::vector<int>& sig, const std::vector<int>& alp, int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int h = 1; h <= n; ++h)
        if (h < alp[h]) pairs.emplace_back(h, alp[h]);
    std::vector<std::vector<int>> orders;
    std::vector<char> seen(n + 1, 0);
    for (int start = 1; start <= n; ++start) {
        if (seen[start]) continue;
        std::vector<int> cycle;
        int h = start;
        do {
            seen[h] = 1;
            cycle.push_back(h);
            h = sig[h];
        } while (h != start);
        orders.push_back(std::move(cycle));
    }
    return FatGraph::make(pairs, orders);
}

}  // namespace

std::vector<FatGraph> FatGraph::enumerate(int max_edges) {
    if (max_edges > 6)
        throw Error(ErrorCode::BoundExceeded,
                    "enumerate supports max_edges <= 6, got " + std::to_string(max_edges));
    std::vector<FatGraph> result;
    for (int e = 1; e <= max_edges; ++e) {
        const int n = 2 * e;
        std::set<std::vector<int>> seen_codes;
        std::vector<std::vector<int>> parts;
        std::vector<int> scratch;
        partitions_into(n, n, scratch, parts);
        std::vector<std::vector<int>> codes;
        for (const auto& valences : parts) {
            // canonical sigma with the given cycle type: consecutive blocks
            std::vector<int> sig(n + 1, 0);
            int start = 1;
            for (int part : valences) {
                for (int i = 0; i < part; ++i)
                    sig[start + i] = start + (i + 1) % part;
                start += part;
            }
            std::vector<int> alp(n + 1, 0);
            std::vector<char> used(n + 1, 0);
            involutions(n, alp, used, [&]() {
                if (!pair_connected(sig, alp, n)) return;
                std::vector<int> code = canonical_code(sig, alp, n);
                if (seen_codes.insert(code).second) codes.push_back(std::move(code));
            });
        }
        std::sort(codes.begin(), codes.end());
        for (const auto& code : codes) {
            std::vector<int> sig(n + 1, 0), alp(n + 1, 0);
            for (int i = 0; i < n; ++i) {
                sig[i + 1] = code[2 * i];
                alp[i + 1] = code[2 * i + 1];
            }
            result.push_back(from_sigma_alpha(sig, alp, n));
        }
    }
    return result;
}

bool FatGraph::is_isomorphic(const FatGraph& other) const {
    if (!is_connected() || !other.is_connected())
        throw Error(ErrorCode::DisconnectedGraph,
                    "isomorphism test requires connected graphs");
    if (half_edge_count() != other.half_edge_count() ||
        vertex_count() != other.vertex_count())
        return false;
    if (half_edge_count() == 0) return true;
    return canonical_code(next_, pair_, half_edge_count()) ==
           canonical_code(other.next_, other.pair_, other.half_edge_count());
}

}  // namespace chordprop
