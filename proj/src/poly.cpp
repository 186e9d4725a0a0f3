#include "polyspec/poly.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace polyspec {

Poly Poly::monomial(const Rational& c, int k) {
    if (c.is_zero()) return Poly();
    std::vector<Rational> v(static_cast<size_t>(k) + 1, Rational(0));
    v.back() = c;
    return Poly(std::move(v));
}

const Rational& Poly::leading() const {
    if (is_zero()) throw std::domain_error("Poly::leading: zero polynomial");
    return c_.back();
}

Poly Poly::operator-() const {
    std::vector<Rational> v(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) v[i] = -c_[i];
    return Poly(std::move(v));
}

Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
    return Poly(std::move(v));
}

Poly operator-(const Poly& a, const Poly& b) {
    std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) v[i] -= b.c_[i];
    return Poly(std::move(v));
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Rational> v(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(v));
}

Poly operator*(const Rational& s, const Poly& p) {
    if (s.is_zero()) return Poly();
    std::vector<Rational> v(p.c_.size());
    for (size_t i = 0; i < p.c_.size(); ++i) v[i] = s * p.c_[i];
    return Poly(std::move(v));
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<Rational> v(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) v[i - 1] = Rational(static_cast<long>(i)) * c_[i];
    return Poly(std::move(v));
}

Poly Poly::antiderivative() const {
    if (is_zero()) return Poly();
    std::vector<Rational> v(c_.size() + 1, Rational(0));
    for (size_t i = 0; i < c_.size(); ++i)
        v[i + 1] = c_[i] / Rational(static_cast<long>(i + 1));
    return Poly(std::move(v));
}

Rational Poly::eval(const Rational& x) const {
    Rational acc(0);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

Poly Poly::pow(int e) const {
    if (e < 0) throw std::domain_error("Poly::pow: negative exponent");
    Poly acc = Poly::constant(Rational(1));
    Poly base = *this;
    while (e) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

Poly Poly::compose_linear(const Rational& c, const Rational& d) const {
    if (c.is_zero()) throw std::domain_error("Poly::compose_linear: c must be nonzero");
    // Horner in (c*x + d).
    Poly lin({d, c});
    Poly acc;
    for (size_t i = c_.size(); i-- > 0;) acc = acc * lin + Poly::constant(c_[i]);
    return acc;
}

std::pair<Poly, Poly> Poly::divrem(const Poly& q) const {
    if (q.is_zero()) throw std::domain_error("Poly::divrem: division by zero polynomial");
    Poly rem = *this;
    int dq = *q.degree();
    const Rational& qlead = q.leading();
    std::vector<Rational> quot;
    if (rem.degree_or(-1) >= dq)
        quot.assign(static_cast<size_t>(rem.degree_or(-1) - dq) + 1, Rational(0));
    while (!rem.is_zero() && *rem.degree() >= dq) {
        int k = *rem.degree() - dq;
        Rational f = rem.leading() / qlead;
        quot[static_cast<size_t>(k)] = f;
        rem -= Poly::monomial(f, k) * q;
    }
    return {Poly(std::move(quot)), rem};
}

Poly Poly::make_monic() const {
    if (is_zero()) throw std::domain_error("Poly::make_monic: zero polynomial");
    return leading().inv() * *this;
}

int Poly::multiplicity_at(const Rational& root) const {
    if (is_zero()) throw std::domain_error("Poly::multiplicity_at: zero polynomial");
    Poly lin({-root, Rational(1)});
    Poly p = *this;
    int m = 0;
    while (true) {
        auto [q, r] = p.divrem(lin);
        if (!r.is_zero()) break;
        ++m;
        p = q;
        if (p.is_zero()) break;
    }
    return m;
}

Poly poly_gcd(const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero()) throw std::domain_error("poly_gcd: gcd(0, 0)");
    Poly p = a, q = b;
    while (!q.is_zero()) {
        Poly r = p.divrem(q).second;
        p = q;
        q = r;
    }
    return p.make_monic();
}

namespace {

// Divisors of |n| assembled from trial division; if a composite cofactor
// survives the bound it is treated as atomic, so the list can be incomplete
// for astronomically large coefficients. Root candidates in this artifact are
// tiny, so this never bites in practice.
std::vector<Integer> divisors_of(Integer n) {
    if (n < 0) n = -n;
    std::map<Integer, int> fac;
    for (Integer d = 2; d * d <= n && d < 1 << 20; ++d) {
        while (n % d == 0) {
            fac[d]++;
            n /= d;
        }
    }
    if (n > 1) fac[n]++;
    std::vector<Integer> divs{1};
    for (const auto& [p, e] : fac) {
        size_t base = divs.size();
        Integer pk = 1;
        for (int i = 1; i <= e; ++i) {
            pk *= p;
            for (size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pk);
        }
    }
    return divs;
}

}  // namespace

std::vector<std::pair<Rational, int>> Poly::rational_roots() const {
    std::vector<std::pair<Rational, int>> roots;
    if (is_zero()) throw std::domain_error("Poly::rational_roots: zero polynomial");
    Poly p = *this;
    // Strip the root at 0 first.
    int m0 = 0;
    while (!p.is_zero() && p.coeff(0).is_zero() && *p.degree() > 0) {
        std::vector<Rational> v(p.c_.begin() + 1, p.c_.end());
        p = Poly(std::move(v));
        ++m0;
    }
    if (m0 > 0) roots.emplace_back(Rational(0), m0);
    if (p.degree_or(0) == 0) {
        std::sort(roots.begin(), roots.end());
        return roots;
    }
    // Clear denominators to an integer polynomial.
    Integer den = 1;
    for (const auto& c : p.c_) den = lcm(den, c.denominator());
    std::vector<Integer> ic(p.c_.size());
    for (size_t i = 0; i < p.c_.size(); ++i)
        ic[i] = p.c_[i].numerator() * (den / p.c_[i].denominator());
    auto ps = divisors_of(ic.front());
    auto qs = divisors_of(ic.back());
    for (const auto& pn : ps) {
        for (const auto& qd : qs) {
            for (int sign : {1, -1}) {
                Rational cand(sign * pn, qd);
                if (p.eval(cand).is_zero()) {
                    bool seen = false;
                    for (const auto& [r, m] : roots) seen = seen || r == cand;
                    if (!seen) roots.emplace_back(cand, p.multiplicity_at(cand));
                }
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

namespace {

int sign_at_plus_inf(const Poly& p) { return p.is_zero() ? 0 : p.leading().sign(); }

int sign_at_minus_inf(const Poly& p) {
    if (p.is_zero()) return 0;
    int s = p.leading().sign();
    return (*p.degree() % 2 == 0) ? s : -s;
}

int sign_variations(const std::vector<int>& signs) {
    int var = 0, prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

}  // namespace

int Poly::count_real_roots() const {
    if (is_zero()) throw std::domain_error("Poly::count_real_roots: zero polynomial");
    if (*degree() == 0) return 0;
    // Square-free part, then the standard Sturm chain.
    Poly p = *this;
    Poly g = poly_gcd(p, p.derivative());
    if (g.degree_or(0) > 0) p = p.divrem(g).first;
    std::vector<Poly> chain{p, p.derivative()};
    while (!chain.back().is_zero()) {
        const Poly& a = chain[chain.size() - 2];
        const Poly& b = chain.back();
        chain.push_back(-(a.divrem(b).second));
    }
    std::vector<int> lo, hi;
    for (const auto& f : chain) {
        lo.push_back(sign_at_minus_inf(f));
        hi.push_back(sign_at_plus_inf(f));
    }
    return sign_variations(lo) - sign_variations(hi);
}

std::string Poly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = c_.size(); i-- > 0;) {
        const Rational& c = c_[i];
        if (c.is_zero()) continue;
        Rational a = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        if (i == 0 || a != Rational(1)) os << a.str();
        if (i > 0) {
            if (a != Rational(1)) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

}  // namespace polyspec
