#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polyspec/diff_operator.hpp"

namespace polyspec {

// Open interval; nullopt endpoints are -inf / +inf.
struct Interval {
    std::optional<Rational> lo;  // nullopt = -inf
    std::optional<Rational> hi;  // nullopt = +inf

    static Interval whole() { return {std::nullopt, std::nullopt}; }
    static Interval bounded(const Rational& a, const Rational& b);
    static Interval right_of(const Rational& a) { return {a, std::nullopt}; }

    bool lo_finite() const { return lo.has_value(); }
    bool hi_finite() const { return hi.has_value(); }
    std::string str() const;
};

enum class Side { Lo, Hi };

// Factored symmetry weight on an interval, canonical up to a positive constant:
//   p(x) = prod |x - root|^exponent * exp(expPoly(x)) * prod exp(tail(1/(x - root)))
// Each essential tail is a polynomial in 1/(x - root) with zero constant term.
struct WeightForm {
    struct PowerFactor {
        Rational root;
        Rational exponent;
    };
    struct EssentialFactor {
        Rational root;
        Poly tail;  // in u = 1/(x - root), constant term zero
    };

    Interval interval;
    std::vector<PowerFactor> powerFactors;
    Poly expPoly;
    std::vector<EssentialFactor> essentialFactors;

    // Exponent at a point (0 when the point carries no power factor).
    Rational exponent_at(const Rational& point) const;
    const EssentialFactor* essential_at(const Rational& point) const;

    // Logarithmic derivative p'/p of the represented function.
    RatFunc log_derivative() const;
};

enum class RootKind { Ordinary, Logarithmic };

struct RootClassification {
    Rational root;
    int alpha = 0;  // multiplicity in a_n
    int beta = 0;   // multiplicity in a_{n-1}
    RootKind kind = RootKind::Ordinary;
    Rational phiAtRoot;  // lim (x-r)^(alpha-beta) a_{n-1}/a_n
    bool integrableLeft = false;
    bool integrableRight = false;
};

enum class LimitVerdict { ZeroLimit, FiniteNonzero, Divergent };

std::string to_string(LimitVerdict v);

struct AdmissibilityReport {
    struct EndpointVerdict {
        Side side;
        bool integrable = false;
        std::string reason;
    };
    EndpointVerdict lo, hi;
    bool admissible() const { return lo.integrable && hi.integrable; }
};

class NotARootError : public std::runtime_error {
public:
    explicit NotARootError(const std::string& what) : std::runtime_error(what) {}
};

// rho = p'/p = 2 a_{n-1} / (n a_n) - a_n'/a_n, normalized.
RatFunc log_derivative(const DiffOperator& op);

// Integrate rho into the factored weight form. Throws IrreducibleFactorError
// when the leading coefficient has a rational-irreducible factor of degree >= 2.
WeightForm build_weight(const DiffOperator& op, const Interval& interval);

RootClassification classify_root(const DiffOperator& op, const Rational& root);

AdmissibilityReport admissibility(const WeightForm& weight);

// Limit verdict for p * expr at one endpoint of the weight's interval.
LimitVerdict boundary_exponent(const WeightForm& weight, const RatFunc& expr, Side side);

}  // namespace polyspec
