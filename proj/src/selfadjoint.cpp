#include "polyspec/selfadjoint.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace polyspec {

namespace {

Rational binom(int n, int k) {
    if (k < 0 || n < 0 || k > n) return Rational(0);
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(b);
}

// Shared memo for (a_j p)^(m) / p values of one operator.
class DRhoCache {
public:
    DRhoCache(const DiffOperator& op, RatFunc rho) : op_(op), rho_(std::move(rho)) {}

    const RatFunc& get(int j, int m) {
        auto key = std::make_pair(j, m);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        RatFunc v;
        if (m == 0) {
            v = RatFunc(op_.coeff(j));
        } else {
            const RatFunc& prev = get(j, m - 1);
            v = rho_ * prev + prev.derivative();
        }
        return memo_.emplace(key, std::move(v)).first->second;
    }

    const RatFunc& rho() const { return rho_; }

private:
    const DiffOperator& op_;
    RatFunc rho_;
    std::map<std::pair<int, int>, RatFunc> memo_;
};

RatFunc evaluate_combo(const FormalCombo& combo, DRhoCache& cache) {
    RatFunc acc;
    for (const auto& [key, c] : combo.terms())
        acc += RatFunc(c) * cache.get(key.first, key.second);
    return acc;
}

}  // namespace

void FormalCombo::add(int index, int deriv, const Rational& c) {
    if (c.is_zero()) return;
    Key key{index, deriv};
    auto [it, inserted] = terms_.emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void FormalCombo::add_scaled(const FormalCombo& other, const Rational& scale, int deriv_shift) {
    for (const auto& [key, c] : other.terms_)
        add(key.first, key.second + deriv_shift, scale * c);
}

FormalCombo::Key FormalCombo::lead() const {
    if (terms_.empty()) throw std::logic_error("FormalCombo::lead: empty combination");
    return terms_.rbegin()->first;
}

Rational FormalCombo::coeff(int index, int deriv) const {
    auto it = terms_.find({index, deriv});
    return it == terms_.end() ? Rational(0) : it->second;
}

FormalCombo FormalCombo::normalized() const {
    if (terms_.empty()) return *this;
    Integer den = 1;
    for (const auto& [_, c] : terms_) den = lcm(den, c.denominator());
    Integer num = 0;
    for (const auto& [_, c] : terms_)
        num = gcd(num, c.numerator() * (den / c.denominator()));
    Rational scale(den, num);
    if (terms_.rbegin()->second.sign() < 0) scale = -scale;
    FormalCombo out;
    out.add_scaled(*this, scale);
    return out;
}

std::string FormalCombo::label() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Highest symbol first.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [key, c] = *it;
        Rational a = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        if (a != Rational(1)) os << a.str();
        os << "(a" << key.first << " p)";
        int m = key.second;
        if (m > 0 && m <= 3)
            for (int i = 0; i < m; ++i) os << "'";
        else if (m > 3)
            os << "^(" << m << ")";
    }
    return os.str();
}

RatFunc FormalCombo::evaluate(const DiffOperator& op, const RatFunc& rho) const {
    DRhoCache cache(op, rho);
    return evaluate_combo(*this, cache);
}

RatFunc d_rho(const RatFunc& r, const RatFunc& rho, int m) {
    RatFunc acc = r;
    for (int i = 0; i < m; ++i) acc = rho * acc + acc.derivative();
    return acc;
}

DeterminingSystem determining_system(int n) {
    if (n < 2 || n % 2 != 0)
        throw std::domain_error("determining_system: order must be even and >= 2, got " +
                                std::to_string(n));
    DeterminingSystem ds;
    ds.order = n;
    // Raw alternating-binomial relations, k = 0..n-1. For odd k the relation
    // reads 2 b_k = C(k+1,k) b_{k+1}' - C(k+2,k) b_{k+2}'' + ... + C(n,k) b_n^(n-k);
    // for even k the left side is 0. Stored as (rhs - lhs).
    for (int k = 0; k < n; ++k) {
        FormalCombo c;
        if (k % 2 == 1) c.add(k, 0, Rational(-2));
        for (int j = k + 1; j <= n; ++j) {
            int sign_pow = (k % 2 == 1) ? (j - k - 1) : (j - k);
            Rational s = (sign_pow % 2 == 0) ? Rational(1) : Rational(-1);
            c.add(j, j - k, s * binom(j, k));
        }
        ds.raw.push_back(std::move(c));
    }
    // Reduction: for odd k descending, substitute away every b_j with
    // j > (n+k+1)/2 using derivatives of the already-reduced higher equations.
    std::map<int, FormalCombo> by_lead_index;
    for (int k = n - 1; k >= 1; k -= 2) {
        FormalCombo c = ds.raw[static_cast<size_t>(k)];
        int keep_max = (n + k + 1) / 2;
        while (true) {
            FormalCombo::Key target{-1, -1};
            for (const auto& [key, _] : c.terms())
                if (key.first > keep_max && key > target) target = key;
            if (target.first < 0) break;
            auto it = by_lead_index.find(target.first);
            if (it == by_lead_index.end())
                throw std::logic_error("determining_system: no eliminator for b_" +
                                       std::to_string(target.first));
            const FormalCombo& e = it->second;
            auto [li, ld] = e.lead();
            int shift = target.second - ld;
            assert(shift >= 0);
            Rational factor = -(c.coeff(target.first, target.second) / e.coeff(li, ld));
            c.add_scaled(e, factor, shift);
        }
        c = c.normalized();
        assert(c.lead() == std::make_pair(keep_max, keep_max - k));
        by_lead_index.emplace(keep_max, c);
        ds.reduced.push_back(c);
        ds.reduced_k.push_back(k);
    }
    return ds;
}

std::vector<DeterminingResult> check_determining(const DiffOperator& op) {
    DeterminingSystem ds = determining_system(op.order());
    DRhoCache cache(op, log_derivative(op));
    std::vector<DeterminingResult> out;
    for (size_t i = 0; i < ds.reduced.size(); ++i) {
        DeterminingResult r;
        r.id = "k=" + std::to_string(ds.reduced_k[i]);
        RatFunc v = evaluate_combo(ds.reduced[i], cache);
        r.pass = v.is_zero();
        if (!r.pass) r.residual = v;
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<FormalCombo> boundary_reduction(int n) {
    DeterminingSystem ds = determining_system(n);
    std::map<int, FormalCombo> interior;  // lead index -> reduced equation
    for (const auto& e : ds.reduced) interior.emplace(e.lead().first, e);

    auto reduce_by_interior = [&](FormalCombo c) {
        while (true) {
            FormalCombo::Key target{-1, -1};
            for (const auto& [key, _] : c.terms()) {
                auto it = interior.find(key.first);
                if (it == interior.end()) continue;
                if (key.second >= it->second.lead().second && key > target) target = key;
            }
            if (target.first < 0) break;
            const FormalCombo& e = interior.at(target.first);
            auto [li, ld] = e.lead();
            Rational factor = -(c.coeff(target.first, target.second) / e.coeff(li, ld));
            c.add_scaled(e, factor, target.second - ld);
        }
        return c;
    };

    std::vector<FormalCombo> out;
    for (int j = n; j >= 1; --j) {
        // Rows of the boundary matrix block for this j: row i has entries
        // (-1)^t C(n-t-i, j-i) against (a_{n-t} p)^(n-j-t), t = 0..n-j.
        std::vector<FormalCombo> rows;
        for (int i = 1; i <= j; ++i) {
            FormalCombo r;
            for (int t = 0; t <= n - j; ++t) {
                Rational s = (t % 2 == 0) ? Rational(1) : Rational(-1);
                r.add(n - t, n - j - t, s * binom(n - t - i, j - i));
            }
            FormalCombo red = reduce_by_interior(r);
            if (!red.empty()) rows.push_back(std::move(red));
        }
        // Row-reduce the block to a canonical echelon basis, pivots on the
        // highest remaining symbols.
        std::vector<FormalCombo> basis;
        for (auto& r : rows) {
            for (const auto& b : basis) {
                auto [bi, bd] = b.lead();
                Rational c = r.coeff(bi, bd);
                if (!c.is_zero()) r.add_scaled(b, -(c / b.coeff(bi, bd)));
            }
            if (!r.empty()) {
                basis.push_back(r);
                std::sort(basis.begin(), basis.end(),
                          [](const FormalCombo& a, const FormalCombo& b) {
                              return a.lead() > b.lead();
                          });
            }
        }
        // Back-substitute for a unique reduced form.
        for (size_t a = 0; a < basis.size(); ++a) {
            for (size_t b = 0; b < basis.size(); ++b) {
                if (a == b) continue;
                auto [bi, bd] = basis[b].lead();
                Rational c = basis[a].coeff(bi, bd);
                if (!c.is_zero())
                    basis[a].add_scaled(basis[b], -(c / basis[b].coeff(bi, bd)));
            }
        }
        std::sort(basis.begin(), basis.end(),
                  [](const FormalCombo& a, const FormalCombo& b) { return a.lead() > b.lead(); });
        for (auto& b : basis) out.push_back(b.normalized());
    }
    return out;
}

std::vector<BoundaryExpression> boundary_system(const DiffOperator& op) {
    auto combos = boundary_reduction(op.order());
    DRhoCache cache(op, log_derivative(op));
    std::vector<BoundaryExpression> out;
    for (auto& c : combos) {
        BoundaryExpression be;
        be.label = c.label();
        be.value = evaluate_combo(c, cache);
        be.combo = std::move(c);
        out.push_back(std::move(be));
    }
    return out;
}

BoundaryCheck check_boundary(const DiffOperator& op, const WeightForm& weight) {
    BoundaryCheck out;
    for (const auto& be : boundary_system(op)) {
        for (Side side : {Side::Lo, Side::Hi}) {
            BoundaryResult r;
            r.label = be.label;
            r.verdict = boundary_exponent(weight, be.value, side);
            r.pass = (r.verdict == LimitVerdict::ZeroLimit);
            (side == Side::Lo ? out.lo : out.hi).push_back(std::move(r));
        }
    }
    return out;
}

std::string to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::Indeterminate: return "indeterminate";
        case CheckStatus::Skipped: return "skipped";
    }
    return "?";
}

std::vector<CongruenceResult> congruence_checks(const DiffOperator& op) {
    std::vector<CongruenceResult> out;
    int n = op.order();
    const Poly& a = op.leading();
    const Poly& b = op.subleading();
    Poly ad = a.derivative();
    auto run = [&](const std::string& id, const Poly& product) {
        CongruenceResult r;
        r.id = id;
        if (a.degree_or(0) == 0) {
            // Everything is 0 modulo a constant.
            r.status = CheckStatus::Pass;
        } else {
            r.residue = product.mod(a);
            r.status = r.residue.is_zero() ? CheckStatus::Pass : CheckStatus::Fail;
        }
        out.push_back(std::move(r));
    };
    if (n == 2) {
        CongruenceResult r;
        r.id = "triple-product";
        r.status = CheckStatus::Skipped;
        out.push_back(std::move(r));
        return out;
    }
    run("triple-product",
        b * (b - Rational(n) * ad) * (b - Rational(n, 2) * ad));
    if (n == 6) {
        run("order6-quintuple",
            Rational(5) * b * (b - Rational(6) * ad) * (b - Rational(3) * ad));
        run("order6-quadruple",
            op.coeff(4) * (b - Rational(9) * ad) * (b - Rational(6) * ad) *
                (b - Rational(3) * ad));
    }
    return out;
}

std::vector<StructuralOutcome> structural_validate(const DiffOperator& op) {
    std::vector<StructuralOutcome> out;
    int n = op.order();
    if (n == 2) {
        out.push_back({"root-multiplicities", CheckStatus::Skipped,
                       "not applicable at order 2"});
        return out;
    }
    const Poly& a = op.leading();
    const Poly& b = op.subleading();

    auto rational_roots = a.rational_roots();
    // Residual real roots beyond the rational ones.
    Poly residual = a;
    for (const auto& [r, m] : rational_roots) {
        Poly lin({-r, Rational(1)});
        for (int i = 0; i < m; ++i) residual = residual.divrem(lin).first;
    }
    int irrational_real = residual.degree_or(0) > 0 ? residual.count_real_roots() : 0;
    int total_real = static_cast<int>(rational_roots.size()) + irrational_real;

    {
        StructuralOutcome o;
        o.name = "root-multiplicities";
        o.status = CheckStatus::Pass;
        for (const auto& [r, alpha] : rational_roots) {
            int beta = b.is_zero() ? 0 : b.multiplicity_at(r);
            if (alpha < 2 || beta < 1 || beta >= alpha) {
                o.status = CheckStatus::Fail;
                o.note = "root " + r.str() + ": multiplicity " + std::to_string(alpha) +
                         " in a_n, " + std::to_string(beta) + " in a_{n-1}";
                break;
            }
        }
        if (o.status == CheckStatus::Pass && irrational_real > 0) {
            o.status = CheckStatus::Indeterminate;
            o.note = "a_n has " + std::to_string(irrational_real) +
                     " non-rational real root(s); multiplicity conditions not decided";
        }
        out.push_back(std::move(o));
    }

    if (n == 4) {
        StructuralOutcome o;
        o.name = "fourth-order-roots";
        if (irrational_real > 0) {
            o.status = CheckStatus::Indeterminate;
            o.note = "non-rational real roots present";
        } else if (total_real < 2) {
            o.status = CheckStatus::Skipped;
            o.note = "fewer than two real roots";
        } else {
            o.status = CheckStatus::Pass;
            if (rational_roots.size() != 2) {
                o.status = CheckStatus::Fail;
                o.note = "expected exactly two real roots, found " +
                         std::to_string(rational_roots.size());
            } else {
                for (const auto& [r, alpha] : rational_roots) {
                    int beta = b.is_zero() ? 0 : b.multiplicity_at(r);
                    if (alpha != 2 || beta != 1) {
                        o.status = CheckStatus::Fail;
                        o.note = "root " + r.str() + ": multiplicities (" +
                                 std::to_string(alpha) + ", " + std::to_string(beta) +
                                 "), need (2, 1)";
                        break;
                    }
                }
            }
        }
        out.push_back(std::move(o));
    }

    {
        StructuralOutcome o;
        o.name = "degree-bounds";
        if (irrational_real > 0) {
            o.status = CheckStatus::Indeterminate;
            o.note = "non-rational real roots present";
        } else if (total_real > 1) {
            o.status = CheckStatus::Skipped;
            o.note = "leading coefficient has more than one real root";
        } else if (b.is_zero()) {
            o.status = CheckStatus::Fail;
            o.note = "a_{n-1} vanishes identically";
        } else {
            int da = *a.degree();
            int db = *b.degree();
            bool disjunction = (2 * db - da <= n - 2) || (3 * db - 2 * da <= n - 3);
            bool ok = disjunction;
            std::string why;
            if (!disjunction) why = "degree disjunction violated";
            if (ok && total_real == 0) {
                if (!(da < db && db <= n - 3)) {
                    ok = false;
                    why = "rootless case needs deg a_n < deg a_{n-1} <= n-3";
                }
            } else if (ok && total_real == 1) {
                const auto& [r, alpha] = rational_roots.front();
                int beta = b.multiplicity_at(r);
                int du = da - alpha;
                int dv = db - beta;
                if (!(2 <= da && da <= db && db <= n - 2)) {
                    ok = false;
                    why = "single-root case needs 2 <= deg a_n <= deg a_{n-1} <= n-2";
                } else if (!(1 + du <= dv && dv <= n - 3)) {
                    ok = false;
                    why = "single-root case needs 1 + deg u <= deg v <= n-3";
                }
            }
            o.status = ok ? CheckStatus::Pass : CheckStatus::Fail;
            o.note = why;
        }
        out.push_back(std::move(o));
    }
    return out;
}

std::pair<Poly, Poly> legendre_leading_terms(int n, const Rational& alpha, const Rational& beta,
                                             const Rational& A) {
    if (n < 2 || n % 2 != 0)
        throw std::domain_error("legendre_leading_terms: order must be even and >= 2");
    if (!(alpha < beta)) throw std::domain_error("legendre_leading_terms: requires alpha < beta");
    if (A.is_zero()) throw std::domain_error("legendre_leading_terms: A must be nonzero");
    Poly la({-alpha, Rational(1)});
    Poly lb({-beta, Rational(1)});
    Poly quad = la * lb;
    Poly an = A * quad.pow(n / 2);
    Rational mid = (alpha + beta) / Rational(2);
    Poly an1 = (A * Rational(static_cast<long>(n) * n, 2)) * Poly({-mid, Rational(1)}) *
               quad.pow(n / 2 - 1);
    return {an, an1};
}

bool VerificationReport::any_failure() const {
    for (const auto& d : determining)
        if (!d.pass) return true;
    for (const auto& b : boundary_lo)
        if (!b.pass) return true;
    for (const auto& b : boundary_hi)
        if (!b.pass) return true;
    if (admissible && !admissible->admissible()) return true;
    for (const auto& s : structural)
        if (s.status == CheckStatus::Fail) return true;
    for (const auto& c : congruences)
        if (c.status == CheckStatus::Fail) return true;
    return false;
}

VerificationReport verify(const DiffOperator& op, const Interval& interval) {
    VerificationReport rep;
    rep.structural = structural_validate(op);
    rep.determining = check_determining(op);
    rep.congruences = congruence_checks(op);
    try {
        WeightForm w = build_weight(op, interval);
        rep.admissible = admissibility(w);
        BoundaryCheck bc = check_boundary(op, w);
        rep.boundary_lo = std::move(bc.lo);
        rep.boundary_hi = std::move(bc.hi);
        rep.weight = std::move(w);
    } catch (const IrreducibleFactorError& e) {
        rep.boundary_supported = false;
        rep.unsupported_note = e.what();
    }
    bool ok = rep.boundary_supported && !rep.any_failure();
    for (const auto& s : rep.structural)
        if (s.status == CheckStatus::Indeterminate) ok = false;
    if (rep.boundary_supported && rep.admissible && !rep.admissible->admissible()) ok = false;
    rep.overall = ok;
    return rep;
}

}  // namespace polyspec
