#pragma once

#include <string>
#include <vector>

#include "polyspec/weights.hpp"

namespace polyspec {

class UnsupportedWeightClassError : public std::runtime_error {
public:
    explicit UnsupportedWeightClassError(const std::string& what) : std::runtime_error(what) {}
};

class InconsistentSystemError : public std::runtime_error {
public:
    explicit InconsistentSystemError(const std::string& what) : std::runtime_error(what) {}
};

// M[i][j] = coefficient of x^i in L(x^j); upper-triangular because L maps
// P_j into itself, with M[j][j] the eigenvalue of degree j.
struct OperatorMatrix {
    int size = 0;  // N + 1
    std::vector<std::vector<Rational>> m;

    const Rational& at(int i, int j) const { return m[static_cast<size_t>(i)][static_cast<size_t>(j)]; }
};

struct Spectrum {
    std::vector<Rational> lambdas;
    // Degrees partitioned by equal eigenvalue, ordered by the largest degree
    // in each class.
    std::vector<std::vector<int>> groups;
};

enum class WeightClass { JacobiType, LaguerreType, HermiteType };

std::string to_string(WeightClass c);

// Normalized moments m_k = mu_k / mu_0 of a supported weight class.
struct MomentTable {
    WeightClass weightClass;
    std::vector<Rational> m;  // m[0] = 1

    int max_degree() const { return static_cast<int>(m.size()) - 1; }
    const Rational& at(int k) const;
};

struct EigenBasis {
    std::vector<Poly> polys;  // monic, degree d at index d
    bool orthogonalized = false;
};

Poly apply(const DiffOperator& op, const Poly& y);

OperatorMatrix op_matrix(const DiffOperator& op, int N);

Spectrum eigenvalues(const DiffOperator& op, int N);

// Monic degree-m eigenpolynomial from back-substitution on (M - lambda_m I).
// Free coordinates at lower degrees sharing the eigenvalue are set to zero.
Poly eigenpolynomial(const OperatorMatrix& M, int m, const Spectrum& spectrum);

EigenBasis eigenbasis(const DiffOperator& op, int N);

// Classifies the weight into one of the three supported classes and runs the
// corresponding exact recurrence. Throws UnsupportedWeightClassError otherwise.
MomentTable moments(const WeightForm& weight, int K);

std::vector<std::vector<Rational>> gram(const EigenBasis& basis, const MomentTable& moments);

// Inner product of two polynomials under the normalized moments.
Rational inner_product(const Poly& f, const Poly& g, const MomentTable& moments);

EigenBasis orthogonalize_degenerate(const EigenBasis& basis, const Spectrum& spectrum,
                                    const MomentTable& moments);

// Operator composition op1 after op2 via the Leibniz expansion.
DiffOperator compose(const DiffOperator& op1, const DiffOperator& op2);

// S[i][j] = <L x^i, x^j> - <x^i, L x^j>, the independent symmetry oracle.
std::vector<std::vector<Rational>> symmetry_defect(const DiffOperator& op,
                                                   const MomentTable& moments, int N);

}  // namespace polyspec
