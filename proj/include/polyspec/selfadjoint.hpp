#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "polyspec/weights.hpp"

namespace polyspec {

// A formal Q-linear combination of the symbols (a_j p)^(m), keyed by (j, m).
// All interior and boundary relations are stored this way and evaluated per
// operator through the D_rho expansion.
class FormalCombo {
public:
    using Key = std::pair<int, int>;  // (coefficient index j, derivative order m)

    FormalCombo() = default;

    const std::map<Key, Rational>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    void add(int index, int deriv, const Rational& c);
    void add_scaled(const FormalCombo& other, const Rational& scale, int deriv_shift = 0);

    // Highest (index, deriv) pair present.
    Key lead() const;
    Rational coeff(int index, int deriv) const;

    // Scale to integer coefficients with content 1 and positive lead.
    FormalCombo normalized() const;

    // Render like "2(a4 p)' - (a3 p)".
    std::string label() const;

    // Substitute (a_j p)^(m) -> d_rho(a_j, rho, m) and sum.
    RatFunc evaluate(const DiffOperator& op, const RatFunc& rho) const;

    friend bool operator==(const FormalCombo& a, const FormalCombo& b) {
        return a.terms_ == b.terms_;
    }

private:
    std::map<Key, Rational> terms_;
};

// The interior relations among b_k = p a_k for an operator of even order n.
// `raw` holds the n alternating-binomial relations indexed by k = 0..n-1
// (even k: homogeneous; odd k: the 2 b_k forms). `reduced` holds the n/2
// independent equations obtained by eliminating higher-derivative terms of the
// leading b's, in descending k order; these are the forms the verifier checks.
struct DeterminingSystem {
    int order = 0;
    std::vector<FormalCombo> raw;      // k = 0 .. n-1
    std::vector<FormalCombo> reduced;  // odd k = n-1, n-3, ..., 1
    std::vector<int> reduced_k;        // the k each reduced equation came from
};

struct BoundaryExpression {
    std::string label;
    FormalCombo combo;
    RatFunc value;  // the r in p*r for a concrete operator
};

struct DeterminingResult {
    std::string id;
    bool pass = false;
    std::optional<RatFunc> residual;  // present when failing
};

struct BoundaryResult {
    std::string label;
    LimitVerdict verdict = LimitVerdict::Divergent;
    bool pass = false;
};

enum class CheckStatus { Pass, Fail, Indeterminate, Skipped };

std::string to_string(CheckStatus s);

struct StructuralOutcome {
    std::string name;
    CheckStatus status = CheckStatus::Skipped;
    std::string note;
};

struct CongruenceResult {
    std::string id;
    CheckStatus status = CheckStatus::Skipped;
    Poly residue;  // nonzero when failing
};

struct VerificationReport {
    bool overall = false;
    bool boundary_supported = true;
    std::string unsupported_note;
    std::optional<WeightForm> weight;
    std::vector<DeterminingResult> determining;
    std::vector<BoundaryResult> boundary_lo, boundary_hi;
    std::optional<AdmissibilityReport> admissible;
    std::vector<StructuralOutcome> structural;
    std::vector<CongruenceResult> congruences;

    bool any_failure() const;
};

// m-fold application of r -> rho*r + r'; equals (p r)^(m) / p.
RatFunc d_rho(const RatFunc& r, const RatFunc& rho, int m);

DeterminingSystem determining_system(int n);

std::vector<DeterminingResult> check_determining(const DiffOperator& op);

// The order-n reduced boundary set (operator-independent formal combinations),
// ordered from the highest-coefficient block down; count is (n/2)(n/2+1)/2.
std::vector<FormalCombo> boundary_reduction(int n);

std::vector<BoundaryExpression> boundary_system(const DiffOperator& op);

struct BoundaryCheck {
    std::vector<BoundaryResult> lo, hi;
};
BoundaryCheck check_boundary(const DiffOperator& op, const WeightForm& weight);

std::vector<CongruenceResult> congruence_checks(const DiffOperator& op);

std::vector<StructuralOutcome> structural_validate(const DiffOperator& op);

// Leading and subleading coefficients of the order-n analogue of the Legendre
// operator on [alpha, beta] with weight 1:
//   a_n = A (x-alpha)^(n/2) (x-beta)^(n/2),
//   a_{n-1} = (A n^2 / 2)(x - (alpha+beta)/2)(x-alpha)^(n/2-1)(x-beta)^(n/2-1).
std::pair<Poly, Poly> legendre_leading_terms(int n, const Rational& alpha,
                                             const Rational& beta, const Rational& A);

VerificationReport verify(const DiffOperator& op, const Interval& interval);

}  // namespace polyspec
