#pragma once

#include <stdexcept>
#include <vector>

#include "polyspec/poly.hpp"

namespace polyspec {

// Denominator has a rational-irreducible factor of degree >= 2, so an
// operation that needs linear factors over Q cannot proceed.
class IrreducibleFactorError : public std::runtime_error {
public:
    explicit IrreducibleFactorError(const std::string& what) : std::runtime_error(what) {}
};

// Normalized rational function: denominator monic and nonzero,
// gcd(num, den) = 1. Equality is structural equality.
class RatFunc {
public:
    RatFunc() : num_(), den_(Poly::constant(Rational(1))) {}
    RatFunc(const Rational& r) : num_(Poly::constant(r)), den_(Poly::constant(Rational(1))) { normalize(); }
    RatFunc(const Poly& p) : num_(p), den_(Poly::constant(Rational(1))) {}
    RatFunc(Poly num, Poly den);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree_or(0) == 0; }

    RatFunc operator-() const;
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const Rational& s, const RatFunc& f) { return RatFunc(s * f.num_, f.den_); }
    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    RatFunc& operator+=(const RatFunc& o) { *this = *this + o; return *this; }
    RatFunc& operator-=(const RatFunc& o) { *this = *this - o; return *this; }
    RatFunc& operator*=(const RatFunc& o) { *this = *this * o; return *this; }

    RatFunc derivative() const;

    // Valuation at the point: multiplicity in the numerator minus multiplicity
    // in the denominator. Negative values are pole orders. Zero input rejected.
    int order_at(const Rational& point) const;

    // Value at a regular point (order_at >= 0).
    Rational eval(const Rational& x) const;

    std::string str(const std::string& var = "x") const;

private:
    void normalize();
    Poly num_, den_;
};

// Decomposition r = polyPart + sum coeff / (x - root)^order. Requires the
// denominator to split into rational linear factors, else IrreducibleFactorError.
struct PartialFractions {
    struct Term {
        Rational root;
        int order = 1;
        Rational coeff;
    };
    Poly polyPart;
    std::vector<Term> terms;

    RatFunc recombine() const;
};

PartialFractions partial_fractions(const RatFunc& r);

}  // namespace polyspec
