#include "chordprop/bv_checker.hpp"

#include <set>

#include "json.hpp"

namespace chordprop {

namespace {

bool is_zero(const AlgebraVector& v) {
    for (const auto& c : v)
        if (c != Rational(0)) return false;
    return true;
}

AlgebraVector add(const AlgebraVector& a, const AlgebraVector& b) {
    AlgebraVector r(a);
    for (size_t k = 0; k < r.size(); ++k) r[k] += b[k];
    return r;
}

AlgebraVector scale(const Rational& c, const AlgebraVector& a) {
    AlgebraVector r(a);
    for (auto& x : r) x *= c;
    return r;
}

Rational sign_of(long long exponent) { return ((exponent % 2 + 2) % 2) ? Rational(-1) : Rational(1); }

std::string describe(const GradedBasisAlgebra& alg, const AlgebraVector& v) {
    std::string s;
    for (int k = 0; k < alg.size(); ++k) {
        if (v[k] == Rational(0)) continue;
        if (!s.empty()) s += " + ";
        s += format_rational(v[k]) + "*" + alg.basis()[k].name;
    }
    return s.empty() ? "0" : s;
}

}  // namespace

GradedBasisAlgebra GradedBasisAlgebra::make(std::vector<BasisElement> basis,
                                            int unit_index,
                                            std::vector<std::vector<AlgebraVector>> mul,
                                            std::vector<AlgebraVector> delta) {
    const int n = static_cast<int>(basis.size());
    if (n == 0) throw Error(ErrorCode::NoUnit, "empty basis");
    {
        std::set<std::string> names;
        for (const auto& b : basis)
            if (b.name.empty() || !names.insert(b.name).second)
                throw Error(ErrorCode::DegreeViolation,
                            "basis names must be nonempty and distinct");
    }
    auto shape_ok = [&](const AlgebraVector& v) { return static_cast<int>(v.size()) == n; };
    if (static_cast<int>(mul.size()) != n || static_cast<int>(delta.size()) != n)
        throw Error(ErrorCode::DegreeViolation, "structure-constant tables have wrong shape");
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(mul[i].size()) != n || !shape_ok(delta[i]))
            throw Error(ErrorCode::DegreeViolation, "structure-constant tables have wrong shape");
        for (int j = 0; j < n; ++j) {
            if (!shape_ok(mul[i][j]))
                throw Error(ErrorCode::DegreeViolation,
                            "structure-constant tables have wrong shape");
            for (int k = 0; k < n; ++k)
                if (mul[i][j][k] != Rational(0) &&
                    basis[k].degree != basis[i].degree + basis[j].degree)
                    throw Error(ErrorCode::DegreeViolation,
                                "product " + basis[i].name + "*" + basis[j].name +
                                    " hits wrong-degree element " + basis[k].name);
        }
        for (int k = 0; k < n; ++k)
            if (delta[i][k] != Rational(0) && basis[k].degree != basis[i].degree + 1)
                throw Error(ErrorCode::DegreeViolation,
                            "delta of " + basis[i].name + " hits wrong-degree element " +
                                basis[k].name);
    }
    if (unit_index < 0 || unit_index >= n)
        throw Error(ErrorCode::NoUnit, "unit element missing");
    if (basis[unit_index].degree != 0)
        throw Error(ErrorCode::NoUnit, "unit must have degree 0");
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            Rational want = (k == i) ? Rational(1) : Rational(0);
            if (mul[unit_index][i][k] != want || mul[i][unit_index][k] != want)
                throw Error(ErrorCode::NoUnit, basis[unit_index].name +
                                                   " is not a two-sided identity");
        }

    GradedBasisAlgebra alg;
    alg.basis_ = std::move(basis);
    alg.unit_ = unit_index;
    alg.mul_ = std::move(mul);
    alg.delta_ = std::move(delta);
    return alg;
}

int GradedBasisAlgebra::index_of(const std::string& name) const {
    for (int i = 0; i < size(); ++i)
        if (basis_[i].name == name) return i;
    return -1;
}

AlgebraVector GradedBasisAlgebra::basis_vector(int i) const {
    AlgebraVector v = zero();
    v[i] = Rational(1);
    return v;
}

AlgebraVector multiply(const GradedBasisAlgebra& alg, const AlgebraVector& x,
                       const AlgebraVector& y) {
    AlgebraVector r = alg.zero();
    for (int i = 0; i < alg.size(); ++i) {
        if (x[i] == Rational(0)) continue;
        for (int j = 0; j < alg.size(); ++j) {
            if (y[j] == Rational(0)) continue;
            const Rational c = x[i] * y[j];
            const AlgebraVector& p = alg.product(i, j);
            for (int k = 0; k < alg.size(); ++k) r[k] += c * p[k];
        }
    }
    return r;
}

AlgebraVector apply_delta(const GradedBasisAlgebra& alg, const AlgebraVector& x) {
    AlgebraVector r = alg.zero();
    for (int i = 0; i < alg.size(); ++i) {
        if (x[i] == Rational(0)) continue;
        const AlgebraVector& row = alg.delta_row(i);
        for (int k = 0; k < alg.size(); ++k) r[k] += x[i] * row[k];
    }
    return r;
}

int homogeneous_degree(const GradedBasisAlgebra& alg, const AlgebraVector& x) {
    bool seen = false;
    int deg = 0;
    for (int i = 0; i < alg.size(); ++i) {
        if (x[i] == Rational(0)) continue;
        if (!seen) {
            deg = alg.basis()[i].degree;
            seen = true;
        } else if (alg.basis()[i].degree != deg) {
            throw Error(ErrorCode::NonHomogeneous, "vector mixes degrees " +
                                                       std::to_string(deg) + " and " +
                                                       std::to_string(alg.basis()[i].degree));
        }
    }
    return deg;
}

AlgebraVector derived_bracket(const GradedBasisAlgebra& alg, const AlgebraVector& x,
                              const AlgebraVector& y) {
    const int dx = homogeneous_degree(alg, x);
    homogeneous_degree(alg, y);
    const Rational s = sign_of(dx);
    AlgebraVector r = scale(s, apply_delta(alg, multiply(alg, x, y)));
    r = add(r, scale(-s, multiply(alg, apply_delta(alg, x), y)));
    r = add(r, scale(Rational(-1), multiply(alg, x, apply_delta(alg, y))));
    return r;
}

namespace {

// evaluate one identity lhs == rhs over all basis tuples of arity `arity`
template <typename Eval>
CheckItem exhaustive_check(const GradedBasisAlgebra& alg, const std::string& axiom, int arity,
                           Eval&& defect) {
    CheckItem item{axiom, true, false, ""};
    const int n = alg.size();
    std::vector<int> idx(arity, 0);
    for (;;) {
        AlgebraVector d = defect(idx);
        if (!is_zero(d)) {
            item.pass = false;
            item.counterexample = "(";
            for (int t = 0; t < arity; ++t)
                item.counterexample +=
                    (t ? "," : "") + alg.basis()[idx[t]].name;
            item.counterexample += ") defect " + describe(alg, d);
            return item;
        }
        int t = arity - 1;
        while (t >= 0 && ++idx[t] == n) idx[t--] = 0;
        if (t < 0) break;
    }
    return item;
}

CheckItem commutativity_item(const GradedBasisAlgebra& alg) {
    return exhaustive_check(alg, "graded_commutativity", 2, [&](const std::vector<int>& idx) {
        const AlgebraVector a = alg.basis_vector(idx[0]), b = alg.basis_vector(idx[1]);
        const long long e = static_cast<long long>(alg.basis()[idx[0]].degree) *
                            alg.basis()[idx[1]].degree;
        return add(multiply(alg, a, b), scale(-sign_of(e), multiply(alg, b, a)));
    });
}

CheckItem associativity_item(const GradedBasisAlgebra& alg) {
    return exhaustive_check(alg, "associativity", 3, [&](const std::vector<int>& idx) {
        const AlgebraVector a = alg.basis_vector(idx[0]), b = alg.basis_vector(idx[1]),
                            c = alg.basis_vector(idx[2]);
        return add(multiply(alg, multiply(alg, a, b), c),
                   scale(Rational(-1), multiply(alg, a, multiply(alg, b, c))));
    });
}

CheckItem delta_squared_item(const GradedBasisAlgebra& alg) {
    CheckItem item{"delta_squared", true, false, ""};
    for (int i = 0; i < alg.size(); ++i) {
        AlgebraVector dd = apply_delta(alg, alg.delta_row(i));
        if (!is_zero(dd)) {
            item.pass = false;
            item.counterexample =
                "Delta^2(" + alg.basis()[i].name + ") = " + describe(alg, dd);
            return item;
        }
    }
    return item;
}

CheckItem antisymmetry_item(const GradedBasisAlgebra& alg, bool with_minus) {
    const std::string name =
        with_minus ? "antisymmetry_minus_variant" : "antisymmetry_printed";
    CheckItem item = exhaustive_check(alg, name, 2, [&](const std::vector<int>& idx) {
        const AlgebraVector a = alg.basis_vector(idx[0]), b = alg.basis_vector(idx[1]);
        const long long e = static_cast<long long>(alg.basis()[idx[0]].degree + 1) *
                            (alg.basis()[idx[1]].degree + 1);
        Rational s = sign_of(e);
        if (with_minus) s = -s;
        return add(derived_bracket(alg, a, b), scale(-s, derived_bracket(alg, b, a)));
    });
    item.informational = with_minus;
    return item;
}

CheckItem jacobi_item(const GradedBasisAlgebra& alg) {
    return exhaustive_check(alg, "jacobi", 3, [&](const std::vector<int>& idx) {
        const AlgebraVector a = alg.basis_vector(idx[0]), b = alg.basis_vector(idx[1]),
                            c = alg.basis_vector(idx[2]);
        const long long e = static_cast<long long>(alg.basis()[idx[0]].degree + 1) *
                            (alg.basis()[idx[1]].degree + 1);
        AlgebraVector lhs = derived_bracket(alg, a, derived_bracket(alg, b, c));
        AlgebraVector rhs = add(derived_bracket(alg, derived_bracket(alg, a, b), c),
                                scale(sign_of(e), derived_bracket(alg, b, derived_bracket(alg, a, c))));
        return add(lhs, scale(Rational(-1), rhs));
    });
}

CheckItem leibniz_item(const GradedBasisAlgebra& alg) {
    return exhaustive_check(alg, "leibniz", 3, [&](const std::vector<int>& idx) {
        const AlgebraVector a = alg.basis_vector(idx[0]), b = alg.basis_vector(idx[1]),
                            c = alg.basis_vector(idx[2]);
        const long long e = static_cast<long long>(alg.basis()[idx[1]].degree) *
                            (alg.basis()[idx[0]].degree + 1);
        AlgebraVector lhs = derived_bracket(alg, a, multiply(alg, b, c));
        AlgebraVector rhs = add(multiply(alg, derived_bracket(alg, a, b), c),
                                scale(sign_of(e), multiply(alg, b, derived_bracket(alg, a, c))));
        return add(lhs, scale(Rational(-1), rhs));
    });
}

}  // namespace

CheckReport check_graded_commutative_associative(const GradedBasisAlgebra& alg) {
    CheckReport report;
    report.items.push_back(commutativity_item(alg));
    report.items.push_back(associativity_item(alg));
    return report;
}

CheckReport check_gerstenhaber(const GradedBasisAlgebra& alg) {
    CheckReport report;
    report.items.push_back(antisymmetry_item(alg, false));
    report.items.push_back(antisymmetry_item(alg, true));
    report.items.push_back(jacobi_item(alg));
    report.items.push_back(leibniz_item(alg));
    return report;
}

CheckReport check_bv(const GradedBasisAlgebra& alg) {
    CheckReport report;
    report.items.push_back(commutativity_item(alg));
    report.items.push_back(associativity_item(alg));
    report.items.push_back(delta_squared_item(alg));
    report.items.push_back(leibniz_item(alg));
    return report;
}

std::string check_report_json(const CheckReport& report) {
    nlohmann::json j;
    j["schema"] = "chordprop/1";
    j["verdict"] = report.pass() ? "pass" : "fail";
    j["items"] = nlohmann::json::array();
    for (const auto& item : report.items)
        j["items"].push_back({{"axiom", item.axiom},
                              {"status", item.pass ? "pass" : "fail"},
                              {"informational", item.informational},
                              {"counterexample", item.counterexample}});
    return j.dump(2) + "\n";
}

}  // namespace chordprop
