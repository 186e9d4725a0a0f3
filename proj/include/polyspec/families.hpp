#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "polyspec/selfadjoint.hpp"

namespace polyspec {

class UnknownFamilyError : public std::runtime_error {
public:
    explicit UnknownFamilyError(const std::string& id)
        : std::runtime_error("unknown family id '" + id + "'") {}
};

class ConstraintViolation : public std::runtime_error {
public:
    ConstraintViolation(const std::string& id, const std::string& requirement)
        : std::runtime_error("family " + id + " requires " + requirement),
          requirement_(requirement) {}
    const std::string& requirement() const { return requirement_; }

private:
    std::string requirement_;
};

using Params = std::map<std::string, Rational>;

enum class FamilyStatus { Valid, KnownFailing };

struct FamilySpec {
    std::string id;
    int order = 0;
    std::vector<std::string> paramNames;
    // Human-readable inequality and its predicate, e.g. "a > 2".
    struct Constraint {
        std::string text;
        std::function<bool(const Params&)> holds;
    };
    std::vector<Constraint> constraints;
    // Case descriptor (weight shape and exponent class).
    std::string caseNote;
    std::string weightNote;
    Interval interval;
    FamilyStatus status = FamilyStatus::Valid;
    std::string failNote;  // what a KnownFailing entry is expected to fail

    // Coefficient templates a_1..a_n as parser expressions in x and the params.
    std::vector<std::string> coeffExprs;
    // Closed-form eigenvalue template in n and the params; empty when none.
    std::string lambdaExpr;
};

struct FamilyInstance {
    const FamilySpec* spec = nullptr;
    Params params;
    DiffOperator op;
    std::optional<WeightForm> weight;  // absent when the weight is unsupported
};

struct ClassicalSpecialization {
    std::string familyId;
    Params paramValues;
    std::string name;
    // Closed-form eigenvalue of the specialization.
    std::function<Rational(long)> expectedLambda;
    // When the specialization is an iterate of an order-2 operator: the base
    // operator's (a_1, a_2) and the composition power.
    std::optional<std::pair<std::vector<Poly>, int>> iterate;
};

// Exact evaluation of a parser expression (polynomial in x over the params).
Poly parse_poly_expr(const std::string& expr, const Params& params);
// Same, but the result must be a constant.
Rational parse_scalar_expr(const std::string& expr, const Params& params);

const std::vector<FamilySpec>& list_catalog();

const FamilySpec& find_family(const std::string& id);

// Validates constraints (throwing ConstraintViolation with the violated
// inequality), substitutes the parameters and builds the operator and weight.
FamilyInstance instantiate(const std::string& id, const Params& params);

Rational eigen_formula(const std::string& id, const Params& params, long n);

const std::vector<ClassicalSpecialization>& classical_specializations();

}  // namespace polyspec
