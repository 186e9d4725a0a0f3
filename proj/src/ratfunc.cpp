#include "polyspec/ratfunc.hpp"

#include <algorithm>

namespace polyspec {

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
    normalize();
}

void RatFunc::normalize() {
    if (num_.is_zero()) {
        den_ = Poly::constant(Rational(1));
        return;
    }
    Poly g = poly_gcd(num_, den_);
    if (g.degree_or(0) > 0) {
        num_ = num_.divrem(g).first;
        den_ = den_.divrem(g).first;
    }
    Rational lead = den_.leading();
    if (lead != Rational(1)) {
        Rational inv = lead.inv();
        num_ = inv * num_;
        den_ = inv * den_;
    }
}

RatFunc RatFunc::operator-() const {
    RatFunc r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw std::domain_error("RatFunc: division by zero rational function");
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

RatFunc RatFunc::derivative() const {
    return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

int RatFunc::order_at(const Rational& point) const {
    if (is_zero()) throw std::domain_error("RatFunc::order_at: zero rational function");
    return num_.multiplicity_at(point) - den_.multiplicity_at(point);
}

Rational RatFunc::eval(const Rational& x) const {
    if (is_zero()) return Rational(0);
    int ord = order_at(x);
    if (ord < 0) throw std::domain_error("RatFunc::eval: pole at evaluation point");
    if (ord > 0) return Rational(0);
    Poly lin({-x, Rational(1)});
    Poly n = num_, d = den_;
    // Cancel the common (x - point) factors exactly, then evaluate.
    while (d.eval(x).is_zero()) {
        n = n.divrem(lin).first;
        d = d.divrem(lin).first;
    }
    return n.eval(x) / d.eval(x);
}

std::string RatFunc::str(const std::string& var) const {
    if (is_polynomial()) return num_.str(var);
    return "(" + num_.str(var) + ") / (" + den_.str(var) + ")";
}

RatFunc PartialFractions::recombine() const {
    RatFunc acc(polyPart);
    for (const auto& t : terms) {
        Poly lin({-t.root, Rational(1)});
        acc += RatFunc(Poly::constant(t.coeff), lin.pow(t.order));
    }
    return acc;
}

PartialFractions partial_fractions(const RatFunc& r) {
    PartialFractions out;
    auto [quot, rem] = r.num().divrem(r.den());
    out.polyPart = quot;
    if (rem.is_zero()) return out;

    Poly den = r.den();
    auto roots = den.rational_roots();
    int mult_sum = 0;
    for (const auto& [root, m] : roots) mult_sum += m;
    if (mult_sum != *den.degree())
        throw IrreducibleFactorError(
            "partial_fractions: denominator has a rational-irreducible factor of degree >= 2: " +
            den.str());

    for (const auto& [root, m] : roots) {
        // Taylor-expand rem / (den / (x-root)^m) at the root to order m-1: the
        // t-th coefficient is the coefficient of 1/(x-root)^(m-t).
        Poly lin({-root, Rational(1)});
        Poly cof = den;
        for (int i = 0; i < m; ++i) cof = cof.divrem(lin).first;
        // Shift to series at 0.
        Poly u = rem.compose_linear(Rational(1), root);
        Poly v = cof.compose_linear(Rational(1), root);
        Rational v0 = v.coeff(0);
        std::vector<Rational> w(static_cast<size_t>(m), Rational(0));
        for (int k = 0; k < m; ++k) {
            Rational acc = u.coeff(k);
            for (int j = 1; j <= k; ++j) acc -= v.coeff(j) * w[static_cast<size_t>(k - j)];
            w[static_cast<size_t>(k)] = acc / v0;
        }
        for (int t = 0; t < m; ++t) {
            if (w[static_cast<size_t>(t)].is_zero()) continue;
            out.terms.push_back({root, m - t, w[static_cast<size_t>(t)]});
        }
    }
    std::sort(out.terms.begin(), out.terms.end(), [](const auto& a, const auto& b) {
        if (a.root != b.root) return a.root < b.root;
        return a.order < b.order;
    });
    return out;
}

}  // namespace polyspec
