#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "chordprop/fatgraph.hpp"
#include "doctest.h"

using namespace chordprop;

namespace {

// Independent oracle: count orbits of sigma∘alpha by plain permutation
// composition on raw label maps, no FatGraph involved.
int oracle_boundary_count(const std::vector<std::pair<int, int>>& pairing,
                          const std::vector<std::vector<int>>& orders) {
    std::map<int, int> alpha, sigma;
    for (auto [a, b] : pairing) {
        alpha[a] = b;
        alpha[b] = a;
    }
    for (const auto& c : orders)
        for (size_t i = 0; i < c.size(); ++i) sigma[c[i]] = c[(i + 1) % c.size()];
    std::set<int> left;
    for (auto& [h, _] : alpha) left.insert(h);
    int orbits = 0;
    while (!left.empty()) {
        int start = *left.begin(), h = start;
        ++orbits;
        do {
            left.erase(h);
            h = sigma[alpha[h]];
        } while (h != start);
    }
    return orbits;
}

FatGraph theta(bool alt_order = false) {
    std::vector<std::vector<int>> orders = {{1, 3, 5}, {2, 4, 6}};
    if (alt_order) orders[1] = {2, 6, 4};
    return FatGraph::make({{1, 2}, {3, 4}, {5, 6}}, orders);
}

FatGraph loop_graph() { return FatGraph::make({{1, 2}}, {{1, 2}}); }

FatGraph interval() { return FatGraph::make({{1, 2}}, {{1}, {2}}); }

FatGraph two_loop(bool interleaved) {
    return FatGraph::make({{1, 2}, {3, 4}},
                          {interleaved ? std::vector<int>{1, 3, 2, 4}
                                       : std::vector<int>{1, 2, 3, 4}});
}

}  // namespace

TEST_CASE("make_fatgraph validates and counts") {
    FatGraph g = interval();
    CHECK(g.vertex_count() == 2);
    CHECK(g.edge_count() == 1);

    FatGraph t = theta();
    CHECK(t.vertex_count() == 2);
    CHECK(t.edge_count() == 3);

    CHECK_THROWS_WITH_AS(FatGraph::make({{1, 1}}, {{1}}), doctest::Contains("1"), Error);
    try {
        FatGraph::make({{1, 1}}, {{1}});
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::FixedPointInPairing);
    }
    try {
        FatGraph::make({{1, 2}, {2, 3}}, {{1, 2, 3}});
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::DuplicateHalfEdge);
    }
    try {
        FatGraph::make({{1, 2}}, {{1}});
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::MissingHalfEdge);
    }
}

TEST_CASE("boundary cycles are the orbits of sigma∘alpha") {
    CHECK(loop_graph().boundary_cycles().size() == 2);
    CHECK(interval().boundary_cycles().size() == 1);

    // the two theta orderings give orbit counts {1, 3}
    std::set<int> counts = {static_cast<int>(theta(false).boundary_cycles().size()),
                            static_cast<int>(theta(true).boundary_cycles().size())};
    CHECK(counts == std::set<int>{1, 3});
    CHECK(oracle_boundary_count({{1, 2}, {3, 4}, {5, 6}}, {{1, 3, 5}, {2, 4, 6}}) == 1);
    CHECK(oracle_boundary_count({{1, 2}, {3, 4}, {5, 6}}, {{1, 3, 5}, {2, 6, 4}}) == 3);

    CHECK(two_loop(true).boundary_cycles().size() == 1);
    CHECK(oracle_boundary_count({{1, 2}, {3, 4}}, {{1, 3, 2, 4}}) == 1);
}

TEST_CASE("euler characteristic and genus") {
    CHECK(loop_graph().euler_characteristic() == 0);
    CHECK(theta().euler_characteristic() == -1);
    CHECK(two_loop(true).euler_characteristic() == -1);

    CHECK(loop_graph().genus() == 0);
    CHECK(two_loop(true).genus() == 1);
    CHECK(theta(true).genus() == 0);  // b=3, pair of pants

    FatGraph disjoint = FatGraph::make({{1, 2}, {3, 4}}, {{1, 2}, {3, 4}});
    CHECK_FALSE(disjoint.is_connected());
    CHECK_THROWS_AS(disjoint.genus(), Error);
}

TEST_CASE("is_connected") {
    CHECK(theta().is_connected());
    CHECK_FALSE(FatGraph::make({{1, 2}, {3, 4}}, {{1, 2}, {3, 4}}).is_connected());
    CHECK(FatGraph::make({}, {}).is_connected());  // empty graph, by convention
}

TEST_CASE("edge contraction") {
    FatGraph t = theta();
    FatGraph c = t.contract_edge(1);
    CHECK(c.vertex_count() == 1);
    CHECK(c.edge_count() == 2);
    CHECK(c.euler_characteristic() == -1);

    try {
        two_loop(true).contract_edge(1);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::LoopContraction);
    }
}

TEST_CASE("contraction preserves chi, b, genus, connectivity") {
    for (const FatGraph& g : FatGraph::enumerate(4)) {
        for (int e = 1; e <= g.edge_count(); ++e) {
            if (g.is_loop_edge(e)) continue;
            if (g.half_edge_count() == 2) {
                // contracting the only edge would collapse the graph to a
                // point, which has no half-edge representation
                try {
                    g.contract_edge(e);
                    CHECK(false);
                } catch (const Error& err) {
                    CHECK(err.code() == ErrorCode::PointContraction);
                }
                continue;
            }
            FatGraph c = g.contract_edge(e);
            CHECK(c.euler_characteristic() == g.euler_characteristic());
            CHECK(c.boundary_cycles().size() == g.boundary_cycles().size());
            CHECK(c.is_connected());
            CHECK(c.genus() == g.genus());
        }
    }
}

TEST_CASE("boundary cycles partition the half-edge set") {
    for (const FatGraph& g : FatGraph::enumerate(4)) {
        std::set<int> all;
        size_t total = 0;
        for (const auto& cycle : g.boundary_cycles()) {
            total += cycle.half_edges.size();
            all.insert(cycle.half_edges.begin(), cycle.half_edges.end());
        }
        CHECK(total == static_cast<size_t>(g.half_edge_count()));
        CHECK(all.size() == total);
    }
}

TEST_CASE("orbit count is invariant under input cycle rotation") {
    FatGraph a = FatGraph::make({{1, 2}, {3, 4}, {5, 6}}, {{1, 3, 5}, {2, 4, 6}});
    FatGraph b = FatGraph::make({{1, 2}, {3, 4}, {5, 6}}, {{3, 5, 1}, {4, 6, 2}});
    CHECK(a == b);
    CHECK(a.boundary_cycles() == b.boundary_cycles());
}

namespace {

// Brute-force isomorphism-class count for connected fat graphs with exactly
// e edges: all fixed-point-free involutions x all permutations on 2e labels,
// deduplicated by trying every relabeling.
int oracle_class_count(int e) {
    const int n = 2 * e;
    std::vector<int> labels(n);
    std::iota(labels.begin(), labels.end(), 1);

    auto orbits_equal = [&](const std::vector<int>& s1, const std::vector<int>& a1,
                            const std::vector<int>& s2, const std::vector<int>& a2) {
        std::vector<int> perm(labels);
        do {
            bool match = true;
            for (int h = 1; h <= n && match; ++h)
                if (perm[s1[h] - 1] != s2[perm[h - 1]] || perm[a1[h] - 1] != a2[perm[h - 1]])
                    match = false;
            if (match) return true;
        } while (std::next_permutation(perm.begin(), perm.end()));
        return false;
    };

    // collect all (sigma, alpha) pairs, connected only
    std::vector<std::pair<std::vector<int>, std::vector<int>>> maps;
    std::vector<int> sigma_flat(labels);
    do {
        std::vector<int> sig(n + 1);
        for (int h = 1; h <= n; ++h) sig[h] = sigma_flat[h - 1];
        // involutions via permutation filter (small n only)
        std::vector<int> alpha_flat(labels);
        do {
            std::vector<int> alp(n + 1);
            bool invol = true;
            for (int h = 1; h <= n; ++h) {
                alp[h] = alpha_flat[h - 1];
                if (alp[h] == h) invol = false;
            }
            if (!invol) continue;
            for (int h = 1; h <= n && invol; ++h)
                if (alp[alp[h]] != h) invol = false;
            if (!invol) continue;
            // connectivity
            std::vector<char> seen(n + 1, 0);
            std::vector<int> st{1};
            seen[1] = 1;
            int cnt = 1;
            while (!st.empty()) {
                int h = st.back();
                st.pop_back();
                for (int m : {sig[h], alp[h]})
                    if (!seen[m]) {
                        seen[m] = 1;
                        ++cnt;
                        st.push_back(m);
                    }
            }
            if (cnt != n) continue;
            bool fresh = true;
            for (auto& [s2, a2] : maps)
                if (orbits_equal(sig, alp, s2, a2)) {
                    fresh = false;
                    break;
                }
            if (fresh) maps.emplace_back(sig, alp);
        } while (std::next_permutation(alpha_flat.begin(), alpha_flat.end()));
    } while (std::next_permutation(sigma_flat.begin(), sigma_flat.end()));
    return static_cast<int>(maps.size());
}

}  // namespace

TEST_CASE("enumerate: small counts against brute force") {
    std::vector<FatGraph> one = FatGraph::enumerate(1);
    CHECK(one.size() == 2);  // interval and one-vertex loop
    bool saw_interval = false, saw_loop = false;
    for (const auto& g : one) {
        if (g.vertex_count() == 2) saw_interval = true;
        if (g.vertex_count() == 1) saw_loop = true;
    }
    CHECK(saw_interval);
    CHECK(saw_loop);

    std::vector<FatGraph> two = FatGraph::enumerate(2);
    int with_two_edges = 0;
    for (const auto& g : two)
        if (g.edge_count() == 2) ++with_two_edges;
    CHECK(with_two_edges == oracle_class_count(2));

    for (const auto& g : two) {
        CHECK(g.is_connected());
        // re-validation through make
        std::vector<std::pair<int, int>> pairs(g.edges());
        CHECK(FatGraph::make(pairs, g.vertices()) == g);
    }

    CHECK_THROWS_AS(FatGraph::enumerate(7), Error);
}

TEST_CASE("Euler/genus identity over the enumeration") {
    for (const FatGraph& g : FatGraph::enumerate(4)) {
        int b = static_cast<int>(g.boundary_cycles().size());
        int genus = g.genus();
        CHECK(genus >= 0);
        CHECK(g.euler_characteristic() == 2 - 2 * genus - b);
    }
}

TEST_CASE("isomorphism: relabelings agree, distinct classes differ") {
    // enumerate yields one representative per relabeling class
    std::vector<FatGraph> reps = FatGraph::enumerate(3);
    for (size_t i = 0; i < reps.size(); ++i)
        for (size_t j = 0; j < reps.size(); ++j)
            CHECK(reps[i].is_isomorphic(reps[j]) == (i == j));

    // a relabeled copy is isomorphic but not equal on the nose
    FatGraph a = FatGraph::make({{1, 2}, {3, 4}, {5, 6}}, {{1, 3, 5}, {2, 4, 6}});
    FatGraph b = FatGraph::make({{1, 4}, {2, 5}, {3, 6}}, {{1, 2, 3}, {4, 5, 6}});
    CHECK(a.is_isomorphic(b));
    CHECK_FALSE(a == b);
}
