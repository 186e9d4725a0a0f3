#include "polyspec/weights.hpp"

#include <algorithm>
#include <sstream>

namespace polyspec {

Interval Interval::bounded(const Rational& a, const Rational& b) {
    if (!(a < b)) throw std::domain_error("Interval: requires lo < hi");
    return {a, b};
}

std::string Interval::str() const {
    std::string l = lo ? lo->str() : "-inf";
    std::string h = hi ? hi->str() : "+inf";
    return "(" + l + ", " + h + ")";
}

std::string to_string(LimitVerdict v) {
    switch (v) {
        case LimitVerdict::ZeroLimit: return "zero";
        case LimitVerdict::FiniteNonzero: return "finite-nonzero";
        case LimitVerdict::Divergent: return "divergent";
    }
    return "?";
}

Rational WeightForm::exponent_at(const Rational& point) const {
    for (const auto& pf : powerFactors)
        if (pf.root == point) return pf.exponent;
    return Rational(0);
}

const WeightForm::EssentialFactor* WeightForm::essential_at(const Rational& point) const {
    for (const auto& ef : essentialFactors)
        if (ef.root == point && !ef.tail.is_zero()) return &ef;
    return nullptr;
}

RatFunc WeightForm::log_derivative() const {
    RatFunc acc(expPoly.derivative());
    for (const auto& pf : powerFactors) {
        Poly lin({-pf.root, Rational(1)});
        acc += RatFunc(Poly::constant(pf.exponent), lin);
    }
    for (const auto& ef : essentialFactors) {
        // d/dx tail(1/(x-r)) = -tail'(u) * u^2 with u = 1/(x-r); expand in u
        // and convert u^k back to 1/(x-r)^k.
        Poly lin({-ef.root, Rational(1)});
        Poly dt = ef.tail.derivative();
        for (int k = 0; k <= dt.degree_or(-1); ++k) {
            if (dt.coeff(k).is_zero()) continue;
            acc -= RatFunc(Poly::constant(dt.coeff(k)), lin.pow(k + 2));
        }
    }
    return acc;
}

RatFunc log_derivative(const DiffOperator& op) {
    int n = op.order();
    RatFunc an(op.leading());
    RatFunc ratio = RatFunc(Rational(2, static_cast<long>(n))) * RatFunc(op.subleading()) / an;
    return ratio - RatFunc(op.leading().derivative()) / an;
}

WeightForm build_weight(const DiffOperator& op, const Interval& interval) {
    RatFunc rho = log_derivative(op);
    WeightForm w;
    w.interval = interval;
    if (rho.is_zero()) return w;
    PartialFractions pf = partial_fractions(rho);
    w.expPoly = pf.polyPart.antiderivative();
    for (const auto& term : pf.terms) {
        if (term.order == 1) {
            w.powerFactors.push_back({term.root, term.coeff});
        } else {
            // coeff/(x-r)^k integrates to (coeff/(1-k)) u^(k-1), u = 1/(x-r).
            auto it = std::find_if(w.essentialFactors.begin(), w.essentialFactors.end(),
                                   [&](const auto& ef) { return ef.root == term.root; });
            if (it == w.essentialFactors.end()) {
                w.essentialFactors.push_back({term.root, Poly()});
                it = std::prev(w.essentialFactors.end());
            }
            it->tail += Poly::monomial(term.coeff / Rational(1 - term.order), term.order - 1);
        }
    }
    // The represented function must reproduce rho exactly.
    if (w.log_derivative() != rho)
        throw std::logic_error("build_weight: reconstructed log-derivative mismatch");
    return w;
}

RootClassification classify_root(const DiffOperator& op, const Rational& root) {
    const Poly& a = op.leading();
    const Poly& b = op.subleading();
    RootClassification rc;
    rc.root = root;
    rc.alpha = a.multiplicity_at(root);
    if (rc.alpha == 0)
        throw NotARootError("classify_root: " + root.str() + " is not a root of a_n");
    rc.beta = b.is_zero() ? 0 : b.multiplicity_at(root);
    rc.kind = (rc.beta - rc.alpha + 1 == 0) ? RootKind::Logarithmic : RootKind::Ordinary;
    if (b.is_zero()) {
        rc.phiAtRoot = Rational(0);
        rc.integrableLeft = rc.integrableRight = false;
        return rc;
    }
    // phi(r) = lim (x-r)^(alpha-beta) b/a = v(r)/u(r) for a=(x-r)^alpha u, b=(x-r)^beta v.
    Poly lin({-root, Rational(1)});
    Poly u = a, v = b;
    for (int i = 0; i < rc.alpha; ++i) u = u.divrem(lin).first;
    for (int i = 0; i < rc.beta; ++i) v = v.divrem(lin).first;
    rc.phiAtRoot = v.eval(root) / u.eval(root);

    int n = op.order();
    if (rc.kind == RootKind::Logarithmic) {
        // Integrable on either side iff (2/n) phi(r) - alpha + 1 > 0.
        Rational expo = Rational(2, static_cast<long>(n)) * rc.phiAtRoot -
                        Rational(rc.alpha) + Rational(1);
        rc.integrableLeft = rc.integrableRight = expo > Rational(0);
    } else {
        int gap = rc.alpha - rc.beta;
        bool deep = gap >= 2;
        rc.integrableRight = deep && rc.phiAtRoot > Rational(0);
        Rational signedPhi = (gap % 2 == 0) ? rc.phiAtRoot : -rc.phiAtRoot;
        rc.integrableLeft = deep && signedPhi < Rational(0);
    }
    return rc;
}

namespace {

// Direction of the essential tail at its root, approached from inside the
// interval: true = tail -> -inf (the factor decays), false = grows.
bool essential_decays(const WeightForm::EssentialFactor& ef, bool from_right) {
    // u = 1/(x - r) -> +inf from the right, -inf from the left.
    const Poly& t = ef.tail;
    int s = t.leading().sign();
    if (!from_right && *t.degree() % 2 != 0) s = -s;
    return s < 0;
}

// exp-poly behavior at an infinite end: -1 decaying, 0 constant, +1 growing.
int exp_direction(const Poly& expPoly, Side side) {
    if (expPoly.degree_or(0) == 0) return 0;
    int s = expPoly.leading().sign();
    if (side == Side::Lo && *expPoly.degree() % 2 != 0) s = -s;
    return s > 0 ? 1 : -1;
}

Rational exponent_at_infinity(const WeightForm& w) {
    Rational acc(0);
    for (const auto& pf : w.powerFactors) acc += pf.exponent;
    return acc;
}

}  // namespace

AdmissibilityReport admissibility(const WeightForm& weight) {
    AdmissibilityReport rep;
    auto judge = [&](Side side) {
        AdmissibilityReport::EndpointVerdict v;
        v.side = side;
        const auto& ep = (side == Side::Lo) ? weight.interval.lo : weight.interval.hi;
        if (!ep.has_value()) {
            int dir = exp_direction(weight.expPoly, side);
            if (dir < 0) {
                v.integrable = true;
                v.reason = "exponential decay at infinity";
            } else {
                v.integrable = false;
                v.reason = dir > 0 ? "exponential growth at infinity"
                                   : "no exponential decay at infinity: polynomial norms diverge";
            }
            return v;
        }
        const Rational& e = *ep;
        if (const auto* ef = weight.essential_at(e)) {
            bool from_right = (side == Side::Lo);
            if (essential_decays(*ef, from_right)) {
                v.integrable = true;
                v.reason = "essential factor decays at " + e.str();
            } else {
                v.integrable = false;
                v.reason = "essential factor grows at " + e.str();
            }
            return v;
        }
        Rational expo = weight.exponent_at(e);
        if (expo > Rational(-1)) {
            v.integrable = true;
            v.reason = "power exponent " + expo.str() + " > -1 at " + e.str();
        } else {
            v.integrable = false;
            v.reason = "power exponent " + expo.str() + " <= -1 at " + e.str();
        }
        return v;
    };
    rep.lo = judge(Side::Lo);
    rep.hi = judge(Side::Hi);
    return rep;
}

LimitVerdict boundary_exponent(const WeightForm& weight, const RatFunc& expr, Side side) {
    if (expr.is_zero()) return LimitVerdict::ZeroLimit;
    const auto& ep = (side == Side::Lo) ? weight.interval.lo : weight.interval.hi;
    if (!ep.has_value()) {
        int dir = exp_direction(weight.expPoly, side);
        if (dir < 0) return LimitVerdict::ZeroLimit;
        if (dir > 0) return LimitVerdict::Divergent;
        // Pure power behavior: exponent of p at infinity is the residue sum;
        // expr contributes deg(num) - deg(den).
        Rational total = exponent_at_infinity(weight) +
                         Rational(*expr.num().degree() - *expr.den().degree());
        if (total < Rational(0)) return LimitVerdict::ZeroLimit;
        if (total == Rational(0)) return LimitVerdict::FiniteNonzero;
        return LimitVerdict::Divergent;
    }
    const Rational& e = *ep;
    if (const auto* ef = weight.essential_at(e)) {
        bool from_right = (side == Side::Lo);
        return essential_decays(*ef, from_right) ? LimitVerdict::ZeroLimit
                                                 : LimitVerdict::Divergent;
    }
    Rational total = weight.exponent_at(e) + Rational(expr.order_at(e));
    if (total > Rational(0)) return LimitVerdict::ZeroLimit;
    if (total == Rational(0)) return LimitVerdict::FiniteNonzero;
    return LimitVerdict::Divergent;
}

}  // namespace polyspec
