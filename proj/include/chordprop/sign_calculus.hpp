#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "chordprop/error.hpp"

namespace chordprop {

/// Degree bookkeeping for a geometric cycle: a manifold of dimension dimP
/// carrying a cohomology class of degree codeg, mapped into an ambient
/// manifold of dimension ambient_d. codeg > dimP is allowed (negative
/// degrees occur and every formula is degree-polynomial).
struct FormalCycleDegree {
    int dimP = 0;
    int codeg = 0;
    int ambient_d = 0;

    int degree() const { return dimP - codeg; }
    int shifted_degree() const { return dimP - codeg - ambient_d; }

    bool operator==(const FormalCycleDegree&) const = default;
};

struct SignedDegreeResult {
    int degree = 0;
    int sign_exponent = 0;  // mod 2, always 0 or 1

    bool operator==(const SignedDegreeResult&) const = default;
};

inline int mod2(long long e) { return static_cast<int>(((e % 2) + 2) % 2); }

/// Cap with a cohomology class of degree u_deg: no sign, degree drops.
SignedDegreeResult cap_degree(int u_deg, const FormalCycleDegree& cycle);

/// Gysin map of a codimension-codim embedding: sign exponent codim*codeg.
SignedDegreeResult gysin(const FormalCycleDegree& cycle, int codim);

/// Cross product: sign exponent dimP(x)*codeg(y); degrees add.
SignedDegreeResult cross_sign(const FormalCycleDegree& x, const FormalCycleDegree& y);

/// Swap-law exponent for the cross product: product of the two degrees.
int cross_swap_exponent(const FormalCycleDegree& x, const FormalCycleDegree& y);

/// Total exponent by which the transposition carries x cross y to y cross x:
/// the two cross_sign exponents plus the Koszul factor of swapping the
/// factors (dimP*dimQ for the manifolds, codeg*codeg for the classes).
/// Exhaustively equal to cross_swap_exponent.
int cross_swap_difference(const FormalCycleDegree& x, const FormalCycleDegree& y);

/// Loop product: degree x+y-d, sign exponent d(|a|+|b|) + dimP*|b|.
SignedDegreeResult loop_product(const FormalCycleDegree& x, const FormalCycleDegree& y);

/// BV operator for the free loop (sphere_dim 1) or 3-sphere (sphere_dim 3)
/// space: degree rises by sphere_dim, sign exponent |a|.
SignedDegreeResult delta(const FormalCycleDegree& cycle, int sphere_dim);

/// Loop bracket: degree x+y-d+1, sign exponent (d+1)(|a|+|b|) + dimP*|b|.
SignedDegreeResult bracket_degree(const FormalCycleDegree& x, const FormalCycleDegree& y);

/// Intersection morphism onto constant loops: vanishes when codeg > 0
/// (nullopt), else degree drops by the ambient dimension with no sign.
std::optional<SignedDegreeResult> intersection_morphism(const FormalCycleDegree& cycle);

/// Degree shift of the surface operation for type (g;p,q) with n markings:
/// (2-2g-p-q)*d + n. Requires q > 0.
int mu_degree(int g, int p, int q, int n, int d);

/// Degrees of the morphisms in the string-bracket package, keys
/// "E", "c", "M", "bracket".
std::map<std::string, int> string_bracket_degrees(int i, int j, int d, int sphere_dim);

struct AuditFailure {
    std::array<int, 5> params{};  // (dimP, a, dimQ, b, d)
    int expected = 0;
    int actual = 0;

    bool operator==(const AuditFailure&) const = default;
};

struct AuditReport {
    long long checked = 0;
    std::vector<AuditFailure> failures;  // violations of the stated identity
    std::string identity;
    long long discrepancy_count = 0;
    std::vector<std::array<int, 5>> discrepancy_tuples;

    bool pass() const { return failures.empty(); }
};

/// Exhaustive swap-sign audit over (dimP, a, dimQ, b, d) in [0,max_param]^5.
/// For each tuple, computes the exponent E_req forced by graded
/// commutativity of the loop product and checks the identity
/// E_req = (d-dimP-a)(d-dimQ-b) + dimP*b + dimQ*a (mod 2); the discrepancy
/// tuples are those where E_req differs from the bare swap exponent
/// (d-dimP-a)(d-dimQ-b), i.e. where dimP*b + dimQ*a is odd.
AuditReport commutativity_audit(int max_param);

/// Stable JSON rendering of an audit report (schema "chordprop/1").
std::string audit_report_json(const AuditReport& report);

}  // namespace chordprop
