// Acceptance gate: one pass/fail line per criterion, exit 0 iff all pass.

#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "chordprop/bv_checker.hpp"
#include "chordprop/chord_diagram.hpp"
#include "chordprop/dsl.hpp"
#include "chordprop/fatgraph.hpp"
#include "chordprop/sign_calculus.hpp"

using namespace chordprop;

namespace {

struct Criterion {
    std::string description;
    bool pass = false;
    std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string fixture_text(const std::string& name) {
    std::ifstream in(std::string(CHORDPROP_FIXTURES_DIR) + "/" + name, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

const std::vector<std::string> kDiagramFixtures = {
    "cylinder.sd",       "cylinder_subdivided.sd",     "figure_eight.sd",
    "figure_eight_reversed.sd", "figure_eight_subdivided.sd", "dumbbell.sd",
    "genus1.sd",         "genus1_subdivided.sd",       "pants_one_in.sd",
    "two_chord.sd",      "cacti_three.sd",             "two_in_two_out.sd",
    "marked.sd",
};

ChordDiagram load_diagram(const std::string& name) {
    return std::get<ChordDiagram>(parse(fixture_text(name)));
}

// independent boundary-orbit count from raw permutation maps
int oracle_boundary_count(const FatGraph& g) {
    std::map<int, int> alpha, sigma;
    for (const auto& [a, b] : g.edges()) {
        alpha[a] = b;
        alpha[b] = a;
    }
    for (const auto& cycle : g.vertices())
        for (size_t i = 0; i < cycle.size(); ++i)
            sigma[cycle[i]] = cycle[(i + 1) % cycle.size()];
    std::set<int> left;
    for (const auto& [h, _] : alpha) left.insert(h);
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

GlueMatching identity_matching(int q) {
    GlueMatching m;
    for (int j = 1; j <= q; ++j) m.pairs.emplace_back(j, j);
    return m;
}

Criterion euler_genus_identity() {
    Criterion c{"Euler/genus identity on the enumeration through 5 edges (< 30 s)"};
    auto start = std::chrono::steady_clock::now();
    long long count = 0;
    for (const FatGraph& g : FatGraph::enumerate(5)) {
        ++count;
        int b = oracle_boundary_count(g);
        int genus = g.genus();
        if (genus < 0 || g.vertex_count() - g.edge_count() != 2 - 2 * genus - b) {
            c.detail = "identity fails on a graph with " + std::to_string(g.edge_count()) +
                       " edges";
            return c;
        }
        if (static_cast<int>(g.boundary_cycles().size()) != b) {
            c.detail = "orbit count disagrees with the oracle";
            return c;
        }
    }
    double elapsed = seconds_since(start);
    c.detail = std::to_string(count) + " graphs in " + std::to_string(elapsed) + " s";
    if (count < 1000) return c;
    c.pass = elapsed < 30.0;
    return c;
}

Criterion reduction_invariance() {
    Criterion c{"reduction preserves (chi, b, g, p, q) and is idempotent on the corpus"};
    if (kDiagramFixtures.size() < 12) {
        c.detail = "corpus too small";
        return c;
    }
    bool saw_genus1 = false;
    for (const auto& name : kDiagramFixtures) {
        ChordDiagram d = load_diagram(name);
        if (d.type().genus >= 1) saw_genus1 = true;
        ChordDiagram r = d.reduce();
        if (!r.is_reduced() || r.type() != d.type() ||
            r.graph().euler_characteristic() != d.graph().euler_characteristic() ||
            r.graph().boundary_cycles().size() != d.graph().boundary_cycles().size() ||
            !(r.reduce() == r)) {
            c.detail = "failure on " + name;
            return c;
        }
    }
    c.pass = saw_genus1;
    c.detail = std::to_string(kDiagramFixtures.size()) + " diagrams";
    if (!saw_genus1) c.detail = "no genus-1 diagram in the corpus";
    return c;
}

Criterion gluing_arithmetic() {
    Criterion c{"glue adds chi, genus recomputes to g1+g2+q-1, cylinder is the identity"};
    ChordDiagram cyl = load_diagram("cylinder.sd");
    int pairs = 0;
    for (const auto& n1 : kDiagramFixtures) {
        ChordDiagram d1 = load_diagram(n1);
        if (!d1.is_reduced()) continue;
        for (const auto& n2 : kDiagramFixtures) {
            ChordDiagram d2 = load_diagram(n2);
            if (!d2.is_reduced() || d1.type().q != d2.type().p || d1.type().q == 0) continue;
            ++pairs;
            ChordDiagram g = glue(d1, d2, identity_matching(d1.type().q));
            if (g.graph().euler_characteristic() !=
                    d1.graph().euler_characteristic() + d2.graph().euler_characteristic() ||
                g.graph().genus() != d1.type().genus + d2.type().genus + d1.type().q - 1) {
                c.detail = "arithmetic fails for " + n1 + " . " + n2;
                return c;
            }
        }
        if (d1.type().q == 1 && !(glue(d1, cyl, identity_matching(1)) == d1)) {
            c.detail = "cylinder is not the identity on " + n1;
            return c;
        }
        if (d1.type().p == 1 &&
            glue(cyl, d1, identity_matching(1)).type() != d1.type()) {
            c.detail = "left cylinder gluing changes the type of " + n1;
            return c;
        }
    }
    c.pass = pairs >= 10;
    c.detail = std::to_string(pairs) + " composable pairs";
    return c;
}

Criterion degree_consistency() {
    Criterion c{"mu/delta/string-bracket degrees match and mu adds under gluing"};
    for (int d = 0; d <= 8; ++d)
        if (mu_degree(0, 2, 1, 0, d) != -d) {
            c.detail = "mu(0,2,1,0,d) != -d";
            return c;
        }
    for (const auto& n1 : kDiagramFixtures)
        for (const auto& n2 : kDiagramFixtures) {
            ChordDiagram d1 = load_diagram(n1), d2 = load_diagram(n2);
            if (!d1.is_reduced() || !d2.is_reduced()) continue;
            if (d1.type().q != d2.type().p || d1.type().q == 0 || d2.type().q == 0) continue;
            ChordDiagram g = glue(d1, d2, identity_matching(d1.type().q));
            for (int d = 0; d <= 3; ++d) {
                SurfaceType t1 = d1.type(), t2 = d2.type(), tg = g.type();
                if (mu_degree(tg.genus, tg.p, tg.q, 0, d) !=
                    mu_degree(t1.genus, t1.p, t1.q, 0, d) +
                        mu_degree(t2.genus, t2.p, t2.q, 0, d)) {
                    c.detail = "mu not additive for " + n1 + " . " + n2;
                    return c;
                }
            }
        }
    FormalCycleDegree x{4, 0, 3};
    if (delta(x, 1).degree != x.degree() + 1 || delta(x, 3).degree != x.degree() + 3) {
        c.detail = "delta degree shift wrong";
        return c;
    }
    for (int d = 0; d <= 6; ++d) {
        auto s1 = string_bracket_degrees(2, 3, d, 1);
        auto s3 = string_bracket_degrees(2, 3, d, 3);
        if (s1.at("bracket") != 2 + 3 + 2 - d || s1.at("c") != -2 || s3.at("c") != -4) {
            c.detail = "string bracket offsets wrong";
            return c;
        }
    }
    c.pass = true;
    c.detail = "all degree identities hold";
    return c;
}

Criterion sign_audits() {
    Criterion c{"exhaustive sign audits with a byte-stable report (< 10 s)"};
    auto start = std::chrono::steady_clock::now();
    for (int dp = 0; dp <= 6; ++dp)
        for (int a = 0; a <= 6; ++a)
            for (int dq = 0; dq <= 6; ++dq)
                for (int b = 0; b <= 6; ++b) {
                    FormalCycleDegree u{dp, a, 0}, v{dq, b, 0};
                    if (cross_swap_difference(u, v) != cross_swap_exponent(u, v)) {
                        c.detail = "cross swap law fails";
                        return c;
                    }
                }
    for (int dp = 0; dp <= 8; ++dp)
        for (int a = 0; a <= 8; ++a)
            for (int dq = 0; dq <= 8; ++dq)
                for (int b = 0; b <= 8; ++b)
                    for (int d = 0; d <= 8; ++d) {
                        FormalCycleDegree u{dp, a, d}, v{dq, b, d};
                        int swap35 = mod2(static_cast<long long>(d - dp - a) * (d - dq - b));
                        int shifted = mod2(static_cast<long long>(u.shifted_degree()) *
                                           v.shifted_degree());
                        if (swap35 != shifted) {
                            c.detail = "swap exponent differs from the degree product";
                            return c;
                        }
                    }
    AuditReport report = commutativity_audit(8);
    if (!report.pass()) {
        c.detail = "audit identity fails";
        return c;
    }
    for (const auto& t : report.discrepancy_tuples)
        if ((t[0] * t[3] + t[2] * t[1]) % 2 != 1) {
            c.detail = "discrepancy polynomial mismatch";
            return c;
        }
    long long odd = 0;
    for (int dp = 0; dp <= 8; ++dp)
        for (int a = 0; a <= 8; ++a)
            for (int dq = 0; dq <= 8; ++dq)
                for (int b = 0; b <= 8; ++b)
                    for (int d = 0; d <= 8; ++d)
                        if ((dp * b + dq * a) % 2 == 1) ++odd;
    if (report.discrepancy_count != odd) {
        c.detail = "discrepancy count mismatch";
        return c;
    }
    if (audit_report_json(report) != audit_report_json(commutativity_audit(8))) {
        c.detail = "report not byte-stable";
        return c;
    }
    double elapsed = seconds_since(start);
    c.pass = elapsed < 10.0;
    c.detail = "done in " + std::to_string(elapsed) + " s";
    return c;
}

Criterion bv_suites() {
    Criterion c{"BV/Gerstenhaber suites and full mutation sensitivity"};
    GradedBasisAlgebra delta_zero =
        std::get<GradedBasisAlgebra>(parse(fixture_text("delta_zero.sd")));
    GradedBasisAlgebra exterior =
        std::get<GradedBasisAlgebra>(parse(fixture_text("exterior.sd")));
    if (!check_bv(delta_zero).pass() || !check_gerstenhaber(delta_zero).pass() ||
        !check_graded_commutative_associative(delta_zero).pass()) {
        c.detail = "delta-zero fixture fails a suite";
        return c;
    }
    for (const auto* alg : {&delta_zero, &exterior})
        for (int i = 0; i < alg->size(); ++i)
            if (apply_delta(*alg, alg->delta_row(i)) != alg->zero()) {
                c.detail = "Delta^2 != 0 on a shipped fixture";
                return c;
            }

    // every single-sign mutation must be caught (axiom failure, load error,
    // or a change in the frozen bracket value {t1,t2} = -eps)
    const int n = exterior.size();
    int mutations = 0, caught = 0;
    for (int pos = 0;; ++pos) {
        std::vector<std::vector<AlgebraVector>> mul(n, std::vector<AlgebraVector>(n));
        std::vector<AlgebraVector> delta_rows(n);
        for (int i = 0; i < n; ++i) {
            delta_rows[i] = exterior.delta_row(i);
            for (int j = 0; j < n; ++j) mul[i][j] = exterior.product(i, j);
        }
        int seen = 0;
        bool flipped = false;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k)
                    if (mul[i][j][k] != Rational(0) && seen++ == pos) {
                        mul[i][j][k] = -mul[i][j][k];
                        flipped = true;
                    }
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k)
                if (delta_rows[i][k] != Rational(0) && seen++ == pos) {
                    delta_rows[i][k] = -delta_rows[i][k];
                    flipped = true;
                }
        if (!flipped) break;
        ++mutations;
        bool detected = false;
        try {
            GradedBasisAlgebra mutated = GradedBasisAlgebra::make(
                exterior.basis(), exterior.unit_index(), mul, delta_rows);
            if (!check_bv(mutated).pass()) {
                detected = true;
            } else {
                AlgebraVector expected = mutated.zero();
                expected[mutated.index_of("eps")] = Rational(-1);
                detected = derived_bracket(
                               mutated, mutated.basis_vector(mutated.index_of("t1")),
                               mutated.basis_vector(mutated.index_of("t2"))) != expected;
            }
        } catch (const Error&) {
            detected = true;
        }
        if (detected) ++caught;
    }
    c.pass = mutations > 0 && caught == mutations;
    c.detail = std::to_string(caught) + "/" + std::to_string(mutations) +
               " mutations caught";
    return c;
}

Criterion parser_round_trip() {
    Criterion c{"parser round-trip on corpus and enumeration, 1e5-string fuzz (< 60 s)"};
    auto start = std::chrono::steady_clock::now();
    for (const auto& name : kDiagramFixtures) {
        ParsedValue v = parse(fixture_text(name));
        if (!(parse(serialize(v)) == v)) {
            c.detail = "round trip fails on " + name;
            return c;
        }
    }
    for (const auto& name : {"delta_zero.sd", "exterior.sd"}) {
        ParsedValue v = parse(fixture_text(name));
        if (!(parse(serialize(v)) == v)) {
            c.detail = std::string("round trip fails on ") + name;
            return c;
        }
    }
    for (const FatGraph& g : FatGraph::enumerate(4))
        if (!(std::get<FatGraph>(parse(serialize(g))) == g)) {
            c.detail = "round trip fails on an enumerated graph";
            return c;
        }

    std::mt19937 rng(987654321);
    std::uniform_int_distribution<int> byte(0, 255), len(0, 64), coin(0, 4);
    const std::string seed = fixture_text("figure_eight.sd");
    for (int iter = 0; iter < 100000; ++iter) {
        std::string s;
        if (coin(rng) == 0) {
            s = seed;
            s[rng() % s.size()] = static_cast<char>(byte(rng));
        } else {
            int length = len(rng);
            for (int k = 0; k < length; ++k) s.push_back(static_cast<char>(byte(rng)));
        }
        try {
            parse(s);
        } catch (const Error&) {
            // errors are fine, crashes are not
        }
    }
    double elapsed = seconds_since(start);
    c.pass = elapsed < 60.0;
    c.detail = "done in " + std::to_string(elapsed) + " s";
    return c;
}

}  // namespace

int main() {
    std::vector<Criterion> results;
    results.push_back(euler_genus_identity());
    results.push_back(reduction_invariance());
    results.push_back(gluing_arithmetic());
    results.push_back(degree_consistency());
    results.push_back(sign_audits());
    results.push_back(bv_suites());
    results.push_back(parser_round_trip());

    bool all = true;
    for (size_t i = 0; i < results.size(); ++i) {
        const Criterion& c = results[i];
        all = all && c.pass;
        std::cout << "criterion " << i + 1 << ": " << (c.pass ? "PASS" : "FAIL") << " - "
                  << c.description << " (" << c.detail << ")\n";
    }
    return all ? 0 : 1;
}
