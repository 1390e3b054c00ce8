#pragma once

#include <string>
#include <vector>

#include "chordprop/error.hpp"
#include "chordprop/rational.hpp"

namespace chordprop {

struct BasisElement {
    std::string name;
    int degree = 0;

    bool operator==(const BasisElement&) const = default;
};

/// Coordinate vector over the basis of a GradedBasisAlgebra.
using AlgebraVector = std::vector<Rational>;

/// Finite-dimensional graded algebra given by exact rational structure
/// constants, with a degree-(+1) operator Delta and a distinguished unit.
/// Construction enforces the degree rules (c_{ij}^k = 0 unless
/// deg k = deg i + deg j; D_i^k = 0 unless deg k = deg i + 1) and that the
/// unit is a two-sided identity of degree 0.
class GradedBasisAlgebra {
public:
    static GradedBasisAlgebra make(std::vector<BasisElement> basis,
                                   int unit_index,
                                   std::vector<std::vector<AlgebraVector>> mul,
                                   std::vector<AlgebraVector> delta);

    int size() const { return static_cast<int>(basis_.size()); }
    const std::vector<BasisElement>& basis() const { return basis_; }
    int unit_index() const { return unit_; }
    int index_of(const std::string& name) const;  // -1 when absent

    /// Structure constants of basis_i * basis_j as a coordinate vector.
    const AlgebraVector& product(int i, int j) const { return mul_[i][j]; }
    /// Delta of basis_i as a coordinate vector.
    const AlgebraVector& delta_row(int i) const { return delta_[i]; }

    AlgebraVector zero() const { return AlgebraVector(basis_.size(), Rational(0)); }
    AlgebraVector basis_vector(int i) const;

    bool operator==(const GradedBasisAlgebra&) const = default;

private:
    GradedBasisAlgebra() = default;

    std::vector<BasisElement> basis_;
    int unit_ = 0;
    std::vector<std::vector<AlgebraVector>> mul_;  // mul_[i][j][k]
    std::vector<AlgebraVector> delta_;             // delta_[i][k]
};

AlgebraVector multiply(const GradedBasisAlgebra& alg, const AlgebraVector& x,
                       const AlgebraVector& y);
AlgebraVector apply_delta(const GradedBasisAlgebra& alg, const AlgebraVector& x);

/// Degree of a homogeneous vector; throws NonHomogeneous when nonzero
/// coordinates sit in different degrees. The zero vector has degree 0.
int homogeneous_degree(const GradedBasisAlgebra& alg, const AlgebraVector& x);

/// {x,y} = (-1)^{|x|} Delta(x*y) - (-1)^{|x|} Delta(x)*y - x*Delta(y),
/// for homogeneous x and y.
AlgebraVector derived_bracket(const GradedBasisAlgebra& alg, const AlgebraVector& x,
                              const AlgebraVector& y);

struct CheckItem {
    std::string axiom;
    bool pass = true;
    bool informational = false;  // reported but excluded from the verdict
    std::string counterexample;  // empty when passing
};

struct CheckReport {
    std::vector<CheckItem> items;

    bool pass() const {
        for (const auto& item : items)
            if (!item.informational && !item.pass) return false;
        return true;
    }
};

/// x*y = (-1)^{deg x * deg y} y*x and (x*y)*z = x*(y*z) over all basis triples.
CheckReport check_graded_commutative_associative(const GradedBasisAlgebra& alg);

/// Bracket axioms over all basis triples: antisymmetry as printed
/// ({a,b} = (-1)^{(|a|+1)(|b|+1)} {b,a}, no leading minus; the minus-signed
/// variant is reported informationally), Jacobi, and Leibniz.
CheckReport check_gerstenhaber(const GradedBasisAlgebra& alg);

/// Graded commutativity/associativity, Delta^2 = 0 as a matrix identity, and
/// the Leibniz rule for the derived bracket, aggregated into one report.
CheckReport check_bv(const GradedBasisAlgebra& alg);

/// Stable JSON rendering (schema "chordprop/1").
std::string check_report_json(const CheckReport& report);

}  // namespace chordprop
