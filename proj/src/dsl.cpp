#include "chordprop/dsl.hpp"

#include <cctype>
#include <functional>
#include <map>
#include <sstream>

namespace chordprop {

namespace {

struct Token {
    enum Kind { Ident, Int, Punct, End } kind = End;
    std::string text;
    long long value = 0;  // for Int
    int line = 1, column = 1;
};

std::vector<Token> tokenize(const std::string& text) {
    std::vector<Token> toks;
    int line = 1, col = 1;
    size_t i = 0;
    auto advance = [&](size_t n) {
        for (size_t k = 0; k < n; ++k, ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
    };
    while (i < text.size()) {
        const char c = text[i];
        const int tl = line, tc = col;
        if (c == '#') {
            while (i < text.size() && text[i] != '\n') advance(1);
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance(1);
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t j = i;
            while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) ||
                                       text[j] == '_'))
                ++j;
            toks.push_back({Token::Ident, text.substr(i, j - i), 0, tl, tc});
            advance(j - i);
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) ||
            (c == '-' && i + 1 < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[i + 1])))) {
            size_t j = i + 1;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            const std::string num = text.substr(i, j - i);
            long long v = 0;
            try {
                v = std::stoll(num);
            } catch (const std::exception&) {
                throw ParseError(ErrorCode::SyntaxError, "integer out of range", tl, tc);
            }
            if (v > 1000000000LL || v < -1000000000LL)
                throw ParseError(ErrorCode::SyntaxError, "integer out of range", tl, tc);
            toks.push_back({Token::Int, num, v, tl, tc});
            advance(j - i);
            continue;
        }
        if (c == '-' && i + 1 < text.size() && text[i + 1] == '>') {
            toks.push_back({Token::Punct, "->", 0, tl, tc});
            advance(2);
            continue;
        }
        if (std::string("(){},;:=*+/").find(c) != std::string::npos) {
            toks.push_back({Token::Punct, std::string(1, c), 0, tl, tc});
            advance(1);
            continue;
        }
        throw ParseError(ErrorCode::SyntaxError,
                         "unexpected character '" + std::string(1, c) + "'", tl, tc);
    }
    toks.push_back({Token::End, "", 0, line, col});
    return toks;
}

class Parser {
public:
    explicit Parser(const std::string& text) : toks_(tokenize(text)) {}

    ParsedValue parse_value() {
        const Token& head = peek();
        ParsedValue v = [&]() -> ParsedValue {
            if (accept_ident("fatgraph")) return parse_fatgraph_body();
            if (accept_ident("diagram")) return parse_diagram();
            if (accept_ident("algebra")) return parse_algebra();
            throw ParseError(ErrorCode::SyntaxError,
                             "expected 'fatgraph', 'diagram' or 'algebra'", head.line,
                             head.column);
        }();
        if (peek().kind != Token::End)
            throw ParseError(ErrorCode::SyntaxError, "trailing input after value", peek().line,
                             peek().column);
        return v;
    }

private:
    const std::vector<Token> toks_;
    size_t pos_ = 0;

    const Token& peek() const { return toks_[pos_]; }
    const Token& take() { return toks_[pos_++]; }

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(ErrorCode::SyntaxError, msg, peek().line, peek().column);
    }

    bool accept_punct(const std::string& p) {
        if (peek().kind == Token::Punct && peek().text == p) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect_punct(const std::string& p) {
        if (!accept_punct(p)) fail("expected '" + p + "'");
    }
    // a section terminator; the semicolon may be omitted before a closing brace
    void section_end() {
        if (accept_punct(";")) return;
        if (peek().kind == Token::Punct && peek().text == "}") return;
        fail("expected ';'");
    }
    bool accept_ident(const std::string& w) {
        if (peek().kind == Token::Ident && peek().text == w) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect_ident(const std::string& w) {
        if (!accept_ident(w)) fail("expected '" + w + "'");
    }
    std::string take_name() {
        if (peek().kind != Token::Ident) fail("expected a name");
        return take().text;
    }
    int take_int() {
        if (peek().kind != Token::Int) fail("expected an integer");
        return static_cast<int>(take().value);
    }
    Rational take_rational() {
        const Token& t = peek();
        long long num = take_int();
        long long den = 1;
        if (accept_punct("/")) {
            den = take_int();
            if (den == 0)
                throw ParseError(ErrorCode::SyntaxError, "zero denominator", t.line, t.column);
        }
        return Rational(num, den);
    }

    // rethrow a library construction error with the source span of `at`
    template <typename Fn>
    auto spanned(const Token& at, Fn&& fn) {
        try {
            return fn();
        } catch (const ParseError&) {
            throw;
        } catch (const Error& e) {
            throw ParseError(e.code(), e.what(), at.line, at.column);
        }
    }

    std::vector<int> parse_tuple() {
        expect_punct("(");
        std::vector<int> items{take_int()};
        while (accept_punct(",")) items.push_back(take_int());
        expect_punct(")");
        return items;
    }

    FatGraph parse_fatgraph_body() {
        expect_punct("{");
        const Token at = peek();
        expect_ident("pairs");
        expect_punct(":");
        std::vector<std::pair<int, int>> pairs;
        while (peek().kind == Token::Punct && peek().text == "(") {
            auto t = parse_tuple();
            if (t.size() != 2) fail("a pair has exactly two half-edges");
            pairs.emplace_back(t[0], t[1]);
        }
        section_end();
        expect_ident("vertices");
        expect_punct(":");
        std::vector<std::vector<int>> vertices;
        while (peek().kind == Token::Punct && peek().text == "(")
            vertices.push_back(parse_tuple());
        section_end();
        expect_punct("}");
        return spanned(at, [&] { return FatGraph::make(pairs, vertices); });
    }

    ChordDiagram parse_diagram() {
        expect_punct("{");
        const Token at = peek();
        expect_ident("graph");
        FatGraph graph = parse_fatgraph_body();

        expect_ident("ghost");
        expect_punct(":");
        std::vector<int> ghost;
        while (peek().kind == Token::Int) ghost.push_back(take_int());
        section_end();

        expect_ident("lengths");
        expect_punct(":");
        std::map<int, Rational> length_map;
        while (peek().kind == Token::Int) {
            const Token et = peek();
            int e = take_int();
            expect_punct("=");
            Rational r = take_rational();
            if (!length_map.emplace(e, r).second)
                throw ParseError(ErrorCode::SyntaxError, "duplicate length entry", et.line,
                                 et.column);
        }
        section_end();

        expect_ident("in");
        expect_punct(":");
        std::vector<std::vector<int>> circles;
        while (peek().kind == Token::Punct && peek().text == "(")
            circles.push_back(parse_tuple());
        section_end();

        expect_ident("roles");
        expect_punct(":");
        std::vector<BoundaryRole> roles;
        while (peek().kind == Token::Ident &&
               (peek().text == "in" || peek().text == "out")) {
            bool incoming = take().text == "in";
            expect_punct("(");
            int idx = take_int();
            expect_punct(")");
            roles.push_back({incoming, idx});
        }
        section_end();

        expect_ident("marks");
        expect_punct(":");
        std::vector<Rational> marks;
        while (peek().kind == Token::Int) marks.push_back(take_rational());
        section_end();
        expect_punct("}");

        std::vector<Rational> lengths(graph.edge_count(), Rational(0));
        for (const auto& [e, r] : length_map) {
            if (e < 1 || e > graph.edge_count())
                throw ParseError(ErrorCode::SyntaxError,
                                 "length entry for unknown edge " + std::to_string(e), at.line,
                                 at.column);
            lengths[e - 1] = r;
        }
        return spanned(at, [&] {
            return ChordDiagram::make(std::move(graph), std::move(ghost), std::move(lengths),
                                      std::move(circles), std::move(roles), std::move(marks));
        });
    }

    GradedBasisAlgebra parse_algebra() {
        expect_punct("{");
        const Token at = peek();
        expect_ident("basis");
        expect_punct(":");
        std::vector<BasisElement> basis;
        std::map<std::string, int> index;
        while (peek().kind == Token::Ident) {
            const Token nt = peek();
            std::string name = take_name();
            expect_punct(":");
            int deg = take_int();
            if (!index.emplace(name, static_cast<int>(basis.size())).second)
                throw ParseError(ErrorCode::SyntaxError, "duplicate basis name '" + name + "'",
                                 nt.line, nt.column);
            basis.push_back({name, deg});
        }
        section_end();

        auto lookup = [&](const Token& nt, const std::string& name) {
            auto it = index.find(name);
            if (it == index.end())
                throw ParseError(ErrorCode::SyntaxError, "unknown basis element '" + name + "'",
                                 nt.line, nt.column);
            return it->second;
        };
        auto parse_lincomb = [&]() {
            AlgebraVector v(basis.size(), Rational(0));
            if (peek().kind == Token::Int && peek().value == 0 && peek().text == "0") {
                take();
                return v;
            }
            for (;;) {
                Rational c = take_rational();
                expect_punct("*");
                const Token nt = peek();
                v[lookup(nt, take_name())] += c;
                if (!accept_punct("+")) break;
            }
            return v;
        };

        const int n = static_cast<int>(basis.size());
        std::vector<std::vector<AlgebraVector>> mul(
            n, std::vector<AlgebraVector>(n, AlgebraVector(n, Rational(0))));
        std::vector<AlgebraVector> delta(n, AlgebraVector(n, Rational(0)));
        int unit = -1;

        for (;;) {
            if (accept_ident("unit")) {
                expect_punct(":");
                const Token nt = peek();
                unit = lookup(nt, take_name());
                section_end();
            } else if (accept_ident("mul")) {
                expect_punct(":");
                expect_punct("(");
                const Token nt = peek();
                int i = lookup(nt, take_name());
                expect_punct(",");
                const Token nt2 = peek();
                int j = lookup(nt2, take_name());
                expect_punct(")");
                expect_punct("->");
                mul[i][j] = parse_lincomb();
                section_end();
            } else if (accept_ident("delta")) {
                expect_punct(":");
                const Token nt = peek();
                int i = lookup(nt, take_name());
                expect_punct("->");
                delta[i] = parse_lincomb();
                section_end();
            } else {
                break;
            }
        }
        expect_punct("}");
        if (unit < 0)
            throw ParseError(ErrorCode::NoUnit, "algebra block has no unit field", at.line,
                             at.column);
        return spanned(at, [&] {
            return GradedBasisAlgebra::make(std::move(basis), unit, std::move(mul),
                                            std::move(delta));
        });
    }
};

void serialize_graph_fields(std::ostream& out, const FatGraph& g, const std::string& indent) {
    out << indent << "pairs:";
    for (const auto& [a, b] : g.edges()) out << " (" << a << "," << b << ")";
    out << ";\n" << indent << "vertices:";
    for (const auto& v : g.vertices()) {
        out << " (";
        for (size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
        out << ")";
    }
    out << ";\n";
}

}  // namespace

ParsedValue parse(const std::string& text) { return Parser(text).parse_value(); }

std::string serialize(const FatGraph& g) {
    std::ostringstream out;
    out << "fatgraph {\n";
    serialize_graph_fields(out, g, "  ");
    out << "}\n";
    return out.str();
}

std::string serialize(const ChordDiagram& d) {
    std::ostringstream out;
    out << "diagram {\n  graph {\n";
    serialize_graph_fields(out, d.graph(), "    ");
    out << "  }\n  ghost:";
    for (int e : d.ghost_edges()) out << " " << e;
    out << ";\n  lengths:";
    for (int e = 1; e <= d.graph().edge_count(); ++e)
        out << " " << e << "=" << format_rational(d.lengths()[e - 1]);
    out << ";\n  in:";
    for (const auto& circle : d.incoming_circles()) {
        out << " (";
        for (size_t i = 0; i < circle.size(); ++i) out << (i ? "," : "") << circle[i];
        out << ")";
    }
    out << ";\n  roles:";
    for (const auto& role : d.roles())
        out << " " << (role.incoming ? "in" : "out") << "(" << role.index << ")";
    out << ";\n  marks:";
    for (const auto& m : d.markings()) out << " " << format_rational(m);
    out << ";\n}\n";
    return out.str();
}

std::string serialize(const GradedBasisAlgebra& a) {
    std::ostringstream out;
    out << "algebra {\n  basis:";
    for (const auto& b : a.basis()) out << " " << b.name << ":" << b.degree;
    out << ";\n  unit: " << a.basis()[a.unit_index()].name << ";\n";
    auto lincomb = [&](const AlgebraVector& v) {
        std::string s;
        for (int k = 0; k < a.size(); ++k) {
            if (v[k] == Rational(0)) continue;
            if (!s.empty()) s += " + ";
            s += format_rational(v[k]) + "*" + a.basis()[k].name;
        }
        return s.empty() ? std::string("0") : s;
    };
    for (int i = 0; i < a.size(); ++i)
        for (int j = 0; j < a.size(); ++j) {
            bool zero = true;
            for (const auto& c : a.product(i, j))
                if (c != Rational(0)) zero = false;
            if (zero) continue;
            out << "  mul: (" << a.basis()[i].name << "," << a.basis()[j].name << ") -> "
                << lincomb(a.product(i, j)) << ";\n";
        }
    for (int i = 0; i < a.size(); ++i) {
        bool zero = true;
        for (const auto& c : a.delta_row(i))
            if (c != Rational(0)) zero = false;
        if (zero) continue;
        out << "  delta: " << a.basis()[i].name << " -> " << lincomb(a.delta_row(i)) << ";\n";
    }
    out << "}\n";
    return out.str();
}

std::string serialize(const ParsedValue& v) {
    return std::visit([](const auto& x) { return serialize(x); }, v);
}

namespace {

void dot_edges(std::ostream& out, const FatGraph& g,
               const std::function<std::string(int)>& attrs) {
    for (int v = 1; v <= g.vertex_count(); ++v) out << "  v" << v << ";\n";
    for (int e = 1; e <= g.edge_count(); ++e) {
        const auto& [a, b] = g.edges()[e - 1];
        out << "  v" << g.vertex_of(a) + 1 << " -- v" << g.vertex_of(b) + 1 << " [" << attrs(e)
            << "];\n";
    }
}

}  // namespace

std::string export_dot(const FatGraph& g) {
    std::ostringstream out;
    out << "graph fatgraph {\n  node [shape=circle];\n";
    dot_edges(out, g, [](int e) { return "label=\"e" + std::to_string(e) + "\""; });
    out << "}\n";
    return out.str();
}

std::string export_dot(const ChordDiagram& d) {
    std::ostringstream out;
    const SurfaceType t = d.type();
    out << "graph diagram {\n  node [shape=circle];\n  label=\"type (" << t.genus << ";" << t.p
        << "," << t.q << ")";
    for (size_t i = 0; i < d.roles().size(); ++i) {
        const auto& role = d.roles()[i];
        out << "\\nboundary " << i + 1 << ": " << (role.incoming ? "in" : "out") << "("
            << role.index << ") mark " << format_rational(d.markings()[i]);
    }
    out << "\";\n";
    dot_edges(out, d.graph(), [&](int e) {
        std::string s = "label=\"e" + std::to_string(e) + " len " +
                        format_rational(d.lengths()[e - 1]) + "\"";
        if (d.is_ghost(e)) s += " style=dashed";
        return s;
    });
    out << "}\n";
    return out.str();
}

}  // namespace chordprop
