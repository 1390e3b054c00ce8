#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "chordprop/bv_checker.hpp"
#include "chordprop/chord_diagram.hpp"
#include "chordprop/dsl.hpp"
#include "chordprop/fatgraph.hpp"
#include "chordprop/sign_calculus.hpp"
#include "json.hpp"

using namespace chordprop;
using nlohmann::json;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::IoError, "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw Error(ErrorCode::IoError, "cannot read " + path);
    return buf.str();
}

void write_output(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw Error(ErrorCode::IoError, "cannot open " + out_path);
    out << text;
    if (!out) throw Error(ErrorCode::IoError, "cannot write " + out_path);
}

std::string kind_of(const ParsedValue& v) {
    if (std::holds_alternative<FatGraph>(v)) return "fatgraph";
    if (std::holds_alternative<ChordDiagram>(v)) return "diagram";
    return "algebra";
}

const ChordDiagram& as_diagram(const ParsedValue& v) {
    if (!std::holds_alternative<ChordDiagram>(v))
        throw Error(ErrorCode::UsageError, "input is not a diagram");
    return std::get<ChordDiagram>(v);
}

const GradedBasisAlgebra& as_algebra(const ParsedValue& v) {
    if (!std::holds_alternative<GradedBasisAlgebra>(v))
        throw Error(ErrorCode::UsageError, "input is not an algebra");
    return std::get<GradedBasisAlgebra>(v);
}

std::map<std::string, long long> parse_params(const std::string& spec) {
    std::map<std::string, long long> params;
    std::istringstream in(spec);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty()) continue;
        auto eq = item.find('=');
        if (eq == std::string::npos)
            throw Error(ErrorCode::UsageError, "bad parameter '" + item + "', expected k=v");
        try {
            params[item.substr(0, eq)] = std::stoll(item.substr(eq + 1));
        } catch (const std::exception&) {
            throw Error(ErrorCode::UsageError, "bad parameter value in '" + item + "'");
        }
    }
    return params;
}

long long need(const std::map<std::string, long long>& params, const std::string& key,
               long long fallback = 0, bool required = false) {
    auto it = params.find(key);
    if (it == params.end()) {
        if (required) throw Error(ErrorCode::UsageError, "missing parameter " + key);
        return fallback;
    }
    return it->second;
}

json invariants_json(const ParsedValue& v) {
    json j;
    j["schema"] = "chordprop/1";
    const FatGraph& g = std::holds_alternative<FatGraph>(v) ? std::get<FatGraph>(v)
                                                            : as_diagram(v).graph();
    j["V"] = g.vertex_count();
    j["E"] = g.edge_count();
    j["chi"] = g.euler_characteristic();
    j["b"] = g.boundary_cycles().size();
    j["connected"] = g.is_connected();
    if (g.is_connected()) j["g"] = g.genus();
    if (std::holds_alternative<ChordDiagram>(v)) {
        const ChordDiagram& d = std::get<ChordDiagram>(v);
        j["type"] = {d.type().genus, d.type().p, d.type().q};
        j["reduced"] = d.is_reduced();
        if (d.is_reduced()) j["cactus"] = d.is_cactus();
    }
    return j;
}

int run(int argc, char** argv) {
    CLI::App app{"Fat-graph and chord-diagram calculus with sign/degree checking"};
    app.require_subcommand(1);
    bool json_mode = false;
    app.add_flag("--json", json_mode, "machine-readable JSON output");

    std::string file, file_b, out_path, match_spec, op_name, params_spec;
    int max_param = 6, max_edges = 4;

    auto* c_validate = app.add_subcommand("validate", "parse a file and check invariants");
    c_validate->add_option("file", file)->required();

    auto* c_inv = app.add_subcommand("invariants", "graph invariants (V,E,chi,b,g,type)");
    c_inv->add_option("file", file)->required();

    auto* c_reduce = app.add_subcommand("reduce", "collapse non-loop ghost edges");
    c_reduce->add_option("file", file)->required();
    c_reduce->add_option("-o,--output", out_path);

    auto* c_glue = app.add_subcommand("glue", "prop composition of two reduced diagrams");
    c_glue->add_option("first", file)->required();
    c_glue->add_option("second", file_b)->required();
    c_glue->add_option("--match", match_spec, "pairs out=in, e.g. 1=1,2=2")->required();
    c_glue->add_option("-o,--output", out_path);

    auto* c_cactus = app.add_subcommand("cactus", "test for a cactus diagram");
    c_cactus->add_option("file", file)->required();

    auto* c_degree = app.add_subcommand("degree", "degree/sign of one operation");
    c_degree->add_option("--op", op_name)->required()->check(CLI::IsMember(
        {"loop", "delta", "bracket", "mu", "gysin", "cross", "cap", "string-bracket"}));
    c_degree->add_option("--params", params_spec, "comma-separated k=v list");

    auto* c_audit = app.add_subcommand("audit-signs", "exhaustive commutativity sign audit");
    c_audit->add_option("--max", max_param, "grid bound (<= 8)");
    c_audit->add_option("-o,--output", out_path);

    auto* c_bv = app.add_subcommand("check-bv", "Batalin-Vilkovisky axiom suite");
    c_bv->add_option("file", file)->required();

    auto* c_gerst = app.add_subcommand("check-gerstenhaber", "Gerstenhaber axiom suite");
    c_gerst->add_option("file", file)->required();

    auto* c_dot = app.add_subcommand("export-dot", "DOT rendering");
    c_dot->add_option("file", file)->required();

    auto* c_enum = app.add_subcommand("enumerate", "connected fat graphs up to relabeling");
    c_enum->add_option("--max-edges", max_edges, "maximal edge count (<= 6)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (c_validate->parsed()) {
        try {
            ParsedValue v = parse(read_file(file));
            if (json_mode)
                std::cout << json{{"schema", "chordprop/1"}, {"valid", true},
                                  {"kind", kind_of(v)}}.dump(2)
                          << "\n";
            else
                std::cout << "ok: " << kind_of(v) << "\n";
        } catch (const Error& e) {
            if (e.code() == ErrorCode::IoError) throw;
            if (json_mode)
                std::cout << json{{"schema", "chordprop/1"}, {"valid", false},
                                  {"code", std::string(to_string(e.code()))},
                                  {"error", e.what()}}.dump(2)
                          << "\n";
            else
                std::cout << "invalid: " << e.what() << "\n";
            return 1;
        }
    } else if (c_inv->parsed()) {
        ParsedValue v = parse(read_file(file));
        json j = invariants_json(v);
        if (json_mode) {
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "V=" << j["V"] << " E=" << j["E"] << " chi=" << j["chi"]
                      << " b=" << j["b"];
            if (j.contains("g")) std::cout << " g=" << j["g"];
            if (j.contains("type"))
                std::cout << " type=(" << j["type"][0] << ";" << j["type"][1] << ","
                          << j["type"][2] << ")";
            std::cout << "\n";
        }
    } else if (c_reduce->parsed()) {
        ChordDiagram d = as_diagram(parse(read_file(file)));
        write_output(out_path, serialize(d.reduce()));
    } else if (c_glue->parsed()) {
        ChordDiagram d1 = as_diagram(parse(read_file(file)));
        ChordDiagram d2 = as_diagram(parse(read_file(file_b)));
        GlueMatching m;
        for (const auto& [j, i] : parse_params(match_spec)) {
            try {
                m.pairs.emplace_back(std::stoi(j), static_cast<int>(i));
            } catch (const std::exception&) {
                throw Error(ErrorCode::UsageError, "bad matching key '" + j + "'");
            }
        }
        write_output(out_path, serialize(glue(d1, d2, m)));
    } else if (c_cactus->parsed()) {
        ChordDiagram d = as_diagram(parse(read_file(file)));
        bool ok = d.is_reduced() && d.is_cactus();
        if (json_mode)
            std::cout << json{{"schema", "chordprop/1"}, {"cactus", ok}}.dump(2) << "\n";
        else
            std::cout << (ok ? "cactus" : "not a cactus") << "\n";
        return ok ? 0 : 1;
    } else if (c_degree->parsed()) {
        auto params = parse_params(params_spec);
        const int d = static_cast<int>(need(params, "d"));
        FormalCycleDegree x{static_cast<int>(need(params, "dimP")),
                            static_cast<int>(need(params, "a")), d};
        FormalCycleDegree y{static_cast<int>(need(params, "dimQ")),
                            static_cast<int>(need(params, "b")), d};
        json j{{"schema", "chordprop/1"}, {"op", op_name}};
        auto put = [&](const SignedDegreeResult& r) {
            j["degree"] = r.degree;
            j["sign_exponent"] = r.sign_exponent;
        };
        if (op_name == "loop") put(loop_product(x, y));
        else if (op_name == "bracket") put(bracket_degree(x, y));
        else if (op_name == "cross") put(cross_sign(x, y));
        else if (op_name == "cap") put(cap_degree(static_cast<int>(need(params, "u")), x));
        else if (op_name == "gysin") put(gysin(x, static_cast<int>(need(params, "codim"))));
        else if (op_name == "delta")
            put(delta(x, static_cast<int>(need(params, "sphere", 1))));
        else if (op_name == "mu")
            j["degree"] = mu_degree(static_cast<int>(need(params, "g")),
                                    static_cast<int>(need(params, "p", 1)),
                                    static_cast<int>(need(params, "q", 1)),
                                    static_cast<int>(need(params, "n")), d);
        else
            j["degrees"] = string_bracket_degrees(static_cast<int>(need(params, "i")),
                                                  static_cast<int>(need(params, "j")), d,
                                                  static_cast<int>(need(params, "sphere", 1)));
        if (json_mode) {
            std::cout << j.dump(2) << "\n";
        } else if (j.contains("degrees")) {
            for (auto it = j["degrees"].begin(); it != j["degrees"].end(); ++it)
                std::cout << it.key() << " -> " << it.value() << "\n";
        } else {
            std::cout << "degree " << j["degree"];
            if (j.contains("sign_exponent")) std::cout << " sign_exponent " << j["sign_exponent"];
            std::cout << "\n";
        }
    } else if (c_audit->parsed()) {
        AuditReport report = commutativity_audit(max_param);
        if (json_mode || !out_path.empty()) {
            write_output(out_path, audit_report_json(report));
        } else {
            std::cout << (report.pass() ? "pass" : "fail") << ": checked " << report.checked
                      << " tuples, " << report.discrepancy_count
                      << " convention discrepancies\n";
        }
        return report.pass() ? 0 : 1;
    } else if (c_bv->parsed() || c_gerst->parsed()) {
        const GradedBasisAlgebra alg = as_algebra(parse(read_file(file)));
        CheckReport report = c_bv->parsed() ? check_bv(alg) : check_gerstenhaber(alg);
        if (json_mode) {
            std::cout << check_report_json(report);
        } else {
            for (const auto& item : report.items) {
                std::cout << item.axiom << ": " << (item.pass ? "pass" : "fail");
                if (item.informational) std::cout << " (informational)";
                if (!item.counterexample.empty()) std::cout << " " << item.counterexample;
                std::cout << "\n";
            }
            std::cout << "verdict: " << (report.pass() ? "pass" : "fail") << "\n";
        }
        return report.pass() ? 0 : 1;
    } else if (c_dot->parsed()) {
        ParsedValue v = parse(read_file(file));
        if (std::holds_alternative<FatGraph>(v))
            std::cout << export_dot(std::get<FatGraph>(v));
        else
            std::cout << export_dot(as_diagram(v));
    } else if (c_enum->parsed()) {
        std::vector<FatGraph> graphs = FatGraph::enumerate(max_edges);
        if (json_mode) {
            json j{{"schema", "chordprop/1"}, {"count", graphs.size()}};
            j["graphs"] = json::array();
            for (const auto& g : graphs) j["graphs"].push_back(serialize(g));
            std::cout << j.dump(2) << "\n";
        } else {
            for (const auto& g : graphs) std::cout << serialize(g) << "\n";
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    // accepted for interface compatibility; execution is always serial
    (void)std::getenv("CHORDPROP_NO_PARALLEL");
    try {
        return run(argc, argv);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        if (e.code() == ErrorCode::IoError) return 3;
        if (e.code() == ErrorCode::UsageError) return 2;
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
