#include "chordprop/sign_calculus.hpp"

#include "json.hpp"

namespace chordprop {

SignedDegreeResult cap_degree(int u_deg, const FormalCycleDegree& cycle) {
    if (u_deg < 0) throw Error(ErrorCode::UsageError, "cap degree must be nonnegative");
    return {cycle.degree() - u_deg, 0};
}

SignedDegreeResult gysin(const FormalCycleDegree& cycle, int codim) {
    if (codim < 0) throw Error(ErrorCode::UsageError, "codimension must be nonnegative");
    return {cycle.degree() - codim, mod2(static_cast<long long>(codim) * cycle.codeg)};
}

SignedDegreeResult cross_sign(const FormalCycleDegree& x, const FormalCycleDegree& y) {
    return {x.degree() + y.degree(), mod2(static_cast<long long>(x.dimP) * y.codeg)};
}

int cross_swap_exponent(const FormalCycleDegree& x, const FormalCycleDegree& y) {
    return mod2(static_cast<long long>(x.degree()) * y.degree());
}

int cross_swap_difference(const FormalCycleDegree& x, const FormalCycleDegree& y) {
    return mod2(static_cast<long long>(cross_sign(x, y).sign_exponent) +
                cross_sign(y, x).sign_exponent +
                static_cast<long long>(x.dimP) * y.dimP +
                static_cast<long long>(x.codeg) * y.codeg);
}

SignedDegreeResult loop_product(const FormalCycleDegree& x, const FormalCycleDegree& y) {
    if (x.ambient_d != y.ambient_d)
        throw Error(ErrorCode::AmbientMismatch, "loop product needs a shared ambient dimension");
    const int d = x.ambient_d;
    return {x.degree() + y.degree() - d,
            mod2(static_cast<long long>(d) * (x.codeg + y.codeg) +
                 static_cast<long long>(x.dimP) * y.codeg)};
}

SignedDegreeResult delta(const FormalCycleDegree& cycle, int sphere_dim) {
    if (sphere_dim != 1 && sphere_dim != 3)
        throw Error(ErrorCode::BadSphereDim, "sphere dimension must be 1 or 3");
    return {cycle.degree() + sphere_dim, mod2(cycle.codeg)};
}

SignedDegreeResult bracket_degree(const FormalCycleDegree& x, const FormalCycleDegree& y) {
    if (x.ambient_d != y.ambient_d)
        throw Error(ErrorCode::AmbientMismatch, "loop bracket needs a shared ambient dimension");
    const int d = x.ambient_d;
    return {x.degree() + y.degree() - d + 1,
            mod2(static_cast<long long>(d + 1) * (x.codeg + y.codeg) +
                 static_cast<long long>(x.dimP) * y.codeg)};
}

std::optional<SignedDegreeResult> intersection_morphism(const FormalCycleDegree& cycle) {
    if (cycle.codeg > 0) return std::nullopt;
    return SignedDegreeResult{cycle.degree() - cycle.ambient_d, 0};
}

int mu_degree(int g, int p, int q, int n, int d) {
    if (q <= 0) throw Error(ErrorCode::QMustBePositive, "surface operations require q > 0");
    if (g < 0 || p < 1 || n < 0 || d < 0)
        throw Error(ErrorCode::UsageError, "mu_degree parameters out of range");
    return (2 - 2 * g - p - q) * d + n;
}

std::map<std::string, int> string_bracket_degrees(int i, int j, int d, int sphere_dim) {
    if (sphere_dim != 1 && sphere_dim != 3)
        throw Error(ErrorCode::BadSphereDim, "sphere dimension must be 1 or 3");
    return {
        {"E", 0},
        {"c", -(sphere_dim + 1)},
        {"M", 1},
        // deg E(M(i) * M(j)) = (i+1) + (j+1) - d, independent of the sphere
        {"bracket", i + j + 2 - d},
    };
}

AuditReport commutativity_audit(int max_param) {
    if (max_param < 0 || max_param > 8)
        throw Error(ErrorCode::BoundExceeded, "audit grid bound must be in [0,8]");
    AuditReport report;
    report.identity = "E_req = (d-dimP-a)(d-dimQ-b) + dimP*b + dimQ*a (mod 2)";
    for (int dimP = 0; dimP <= max_param; ++dimP)
        for (int a = 0; a <= max_param; ++a)
            for (int dimQ = 0; dimQ <= max_param; ++dimQ)
                for (int b = 0; b <= max_param; ++b)
                    for (int d = 0; d <= max_param; ++d) {
                        FormalCycleDegree x{dimP, a, d}, y{dimQ, b, d};
                        const int s1 = loop_product(x, y).sign_exponent;
                        const int s2 = loop_product(y, x).sign_exponent;
                        const int e_req =
                            mod2(s1 + s2 +
                                 static_cast<long long>(x.shifted_degree()) * y.shifted_degree());
                        const int swap35 =
                            mod2(static_cast<long long>(d - dimP - a) * (d - dimQ - b));
                        const int expected =
                            mod2(swap35 + static_cast<long long>(dimP) * b +
                                 static_cast<long long>(dimQ) * a);
                        ++report.checked;
                        if (e_req != expected)
                            report.failures.push_back({{dimP, a, dimQ, b, d}, expected, e_req});
                        if (e_req != swap35) {
                            ++report.discrepancy_count;
                            report.discrepancy_tuples.push_back({dimP, a, dimQ, b, d});
                        }
                    }
    return report;
}

std::string audit_report_json(const AuditReport& report) {
    nlohmann::json j;
    j["schema"] = "chordprop/1";
    j["checked"] = report.checked;
    j["verdict"] = report.pass() ? "pass" : "fail";
    j["identity"] = report.identity;
    j["failures"] = nlohmann::json::array();
    for (const auto& f : report.failures)
        j["failures"].push_back({{"params", f.params}, {"expected", f.expected},
                                 {"actual", f.actual}});
    j["discrepancy_count"] = report.discrepancy_count;
    j["discrepancy_tuples"] = nlohmann::json::array();
    for (const auto& t : report.discrepancy_tuples) j["discrepancy_tuples"].push_back(t);
    return j.dump(2) + "\n";
}

}  // namespace chordprop
