#pragma once

#include <initializer_list>
#include <optional>
#include <utility>
#include <vector>

#include "polyspec/rational.hpp"

namespace polyspec {

// Dense univariate polynomial with exact rational coefficients, stored in
// ascending degree. Invariant: the highest stored coefficient is nonzero, or
// the coefficient list is empty (the zero polynomial). The zero polynomial has
// no ordinary degree; degree() returns nullopt for it.
class Poly {
public:
    Poly() = default;
    Poly(std::initializer_list<Rational> ascending) : c_(ascending) { trim(); }
    explicit Poly(std::vector<Rational> ascending) : c_(std::move(ascending)) { trim(); }

    static Poly zero() { return Poly(); }
    static Poly constant(const Rational& r) { return Poly({r}); }
    static Poly x() { return Poly({Rational(0), Rational(1)}); }
    // c * x^k
    static Poly monomial(const Rational& c, int k);

    bool is_zero() const { return c_.empty(); }
    std::optional<int> degree() const {
        if (c_.empty()) return std::nullopt;
        return static_cast<int>(c_.size()) - 1;
    }
    // Degree with a caller-chosen stand-in for the zero polynomial.
    int degree_or(int if_zero) const { return c_.empty() ? if_zero : static_cast<int>(c_.size()) - 1; }

    const Rational& coeff(int k) const {
        static const Rational kZero(0);
        if (k < 0 || k >= static_cast<int>(c_.size())) return kZero;
        return c_[static_cast<size_t>(k)];
    }
    const std::vector<Rational>& coeffs() const { return c_; }
    const Rational& leading() const;

    bool is_monic() const { return !is_zero() && leading() == Rational(1); }

    Poly operator-() const;
    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const Rational& s, const Poly& p);
    friend Poly operator*(const Poly& p, const Rational& s) { return s * p; }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly& operator+=(const Poly& o) { *this = *this + o; return *this; }
    Poly& operator-=(const Poly& o) { *this = *this - o; return *this; }
    Poly& operator*=(const Poly& o) { *this = *this * o; return *this; }

    Poly derivative() const;
    // Antiderivative with zero constant term.
    Poly antiderivative() const;
    Rational eval(const Rational& x) const;

    Poly pow(int e) const;

    // Substitute x <- c*x + d (c must be nonzero); degree is preserved.
    Poly compose_linear(const Rational& c, const Rational& d) const;

    // Quotient and remainder: *this = q * quot + rem, deg(rem) < deg(q).
    std::pair<Poly, Poly> divrem(const Poly& q) const;
    // Remainder only.
    Poly mod(const Poly& q) const { return divrem(q).second; }
    // True when q divides *this exactly.
    bool divisible_by(const Poly& q) const { return divrem(q).second.is_zero(); }

    Poly make_monic() const;

    // Multiplicity of `root` as a root (0 when not a root; zero poly rejected).
    int multiplicity_at(const Rational& root) const;

    // All rational roots with multiplicities, found via the rational root
    // theorem on the denominator-cleared integer polynomial. Sorted ascending.
    std::vector<std::pair<Rational, int>> rational_roots() const;

    // Number of distinct real roots, counted by Sturm's theorem.
    int count_real_roots() const;

    std::string str(const std::string& var = "x") const;

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<Rational> c_;
};

// Monic gcd; gcd(p, 0) = monic p. gcd(0, 0) is a domain error.
Poly poly_gcd(const Poly& a, const Poly& b);

}  // namespace polyspec
