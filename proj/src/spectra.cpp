#include "polyspec/spectra.hpp"

#include <algorithm>

namespace polyspec {

std::string to_string(WeightClass c) {
    switch (c) {
        case WeightClass::JacobiType: return "jacobi";
        case WeightClass::LaguerreType: return "laguerre";
        case WeightClass::HermiteType: return "hermite";
    }
    return "?";
}

const Rational& MomentTable::at(int k) const {
    if (k < 0 || k > max_degree())
        throw std::out_of_range("MomentTable: moment m_" + std::to_string(k) +
                                " not computed (have up to " + std::to_string(max_degree()) + ")");
    return m[static_cast<size_t>(k)];
}

Poly apply(const DiffOperator& op, const Poly& y) { return op.apply(y); }

OperatorMatrix op_matrix(const DiffOperator& op, int N) {
    if (N < 0) throw std::domain_error("op_matrix: N must be >= 0");
    OperatorMatrix M;
    M.size = N + 1;
    M.m.assign(static_cast<size_t>(N + 1), std::vector<Rational>(static_cast<size_t>(N + 1)));
    for (int j = 0; j <= N; ++j) {
        Poly img = op.apply(Poly::monomial(Rational(1), j));
        for (int i = 0; i <= N; ++i) M.m[static_cast<size_t>(i)][static_cast<size_t>(j)] = img.coeff(i);
    }
    return M;
}

Spectrum eigenvalues(const DiffOperator& op, int N) {
    OperatorMatrix M = op_matrix(op, N);
    Spectrum s;
    for (int d = 0; d <= N; ++d) s.lambdas.push_back(M.at(d, d));
    std::vector<bool> used(static_cast<size_t>(N + 1), false);
    std::vector<std::vector<int>> groups;
    for (int d = 0; d <= N; ++d) {
        if (used[static_cast<size_t>(d)]) continue;
        std::vector<int> g{d};
        for (int e = d + 1; e <= N; ++e) {
            if (!used[static_cast<size_t>(e)] && s.lambdas[static_cast<size_t>(e)] == s.lambdas[static_cast<size_t>(d)]) {
                g.push_back(e);
                used[static_cast<size_t>(e)] = true;
            }
        }
        groups.push_back(std::move(g));
    }
    std::sort(groups.begin(), groups.end(),
              [](const auto& a, const auto& b) { return a.back() < b.back(); });
    s.groups = std::move(groups);
    return s;
}

Poly eigenpolynomial(const OperatorMatrix& M, int m, const Spectrum& spectrum) {
    if (m >= M.size || m >= static_cast<int>(spectrum.lambdas.size()))
        throw std::out_of_range("eigenpolynomial: degree exceeds matrix size");
    const Rational& lambda = spectrum.lambdas[static_cast<size_t>(m)];
    std::vector<Rational> c(static_cast<size_t>(m) + 1, Rational(0));
    c[static_cast<size_t>(m)] = Rational(1);
    for (int i = m - 1; i >= 0; --i) {
        Rational rhs(0);
        for (int j = i + 1; j <= m; ++j) rhs += M.at(i, j) * c[static_cast<size_t>(j)];
        Rational diag = spectrum.lambdas[static_cast<size_t>(i)] - lambda;
        if (diag.is_zero()) {
            if (!rhs.is_zero())
                throw InconsistentSystemError(
                    "eigenpolynomial: repeated eigenvalue at degree " + std::to_string(i) +
                    " with nonzero coupling; operator is not self-adjoint on P_N");
            c[static_cast<size_t>(i)] = Rational(0);  // canonical representative
        } else {
            c[static_cast<size_t>(i)] = -(rhs / diag);
        }
    }
    return Poly(std::move(c));
}

EigenBasis eigenbasis(const DiffOperator& op, int N) {
    OperatorMatrix M = op_matrix(op, N);
    Spectrum s = eigenvalues(op, N);
    EigenBasis b;
    for (int d = 0; d <= N; ++d) b.polys.push_back(eigenpolynomial(M, d, s));
    return b;
}

MomentTable moments(const WeightForm& weight, int K) {
    if (K < 0) throw std::domain_error("moments: K must be >= 0");
    const Interval& I = weight.interval;
    if (!weight.essentialFactors.empty())
        throw UnsupportedWeightClassError("moments: essential factors present");

    auto fail = [](const std::string& why) -> MomentTable {
        throw UnsupportedWeightClassError("moments: " + why);
    };

    std::vector<Rational> m(static_cast<size_t>(K) + 1, Rational(0));
    m[0] = Rational(1);

    bool expConstant = weight.expPoly.degree_or(0) == 0;

    if (I.lo_finite() && I.hi_finite()) {
        if (*I.lo != Rational(-1) || *I.hi != Rational(1))
            return fail("bounded interval is not (-1, 1)");
        if (!expConstant) return fail("exponential factor on a bounded interval");
        Rational A(0), B(0);
        for (const auto& pf : weight.powerFactors) {
            if (pf.root == Rational(1))
                A = pf.exponent;
            else if (pf.root == Rational(-1))
                B = pf.exponent;
            else
                return fail("power factor away from the endpoints of (-1, 1)");
        }
        if (!(A > Rational(-1) && B > Rational(-1)))
            return fail("non-integrable endpoint exponent");
        // weight (1-x)^A (1+x)^B; integration by parts gives
        // (k+2+A+B) m_{k+1} = (B-A) m_k + k m_{k-1}.
        for (int k = 0; k < K; ++k) {
            Rational acc = (B - A) * m[static_cast<size_t>(k)];
            if (k >= 1) acc += Rational(k) * m[static_cast<size_t>(k - 1)];
            m[static_cast<size_t>(k + 1)] = acc / (Rational(k + 2) + A + B);
        }
        MomentTable t{WeightClass::JacobiType, std::move(m)};
        return t;
    }

    if (I.lo_finite() && !I.hi_finite()) {
        if (*I.lo != Rational(0)) return fail("half-line interval is not (0, inf)");
        Rational A(0);
        for (const auto& pf : weight.powerFactors) {
            if (pf.root == Rational(0))
                A = pf.exponent;
            else
                return fail("power factor away from 0 on (0, inf)");
        }
        if (weight.expPoly.degree_or(0) != 1) return fail("weight on (0, inf) needs e^{bx}");
        Rational b = weight.expPoly.coeff(1);
        if (!(b < Rational(0))) return fail("e^{bx} with b >= 0 on (0, inf)");
        if (!(A > Rational(-1))) return fail("non-integrable exponent at 0");
        // weight x^A e^{bx}: m_{k+1} = m_k (A+k+1)/(-b).
        for (int k = 0; k < K; ++k)
            m[static_cast<size_t>(k + 1)] =
                m[static_cast<size_t>(k)] * (A + Rational(k + 1)) / (-b);
        MomentTable t{WeightClass::LaguerreType, std::move(m)};
        return t;
    }

    if (!I.lo_finite() && !I.hi_finite()) {
        if (!weight.powerFactors.empty()) return fail("power factor on the whole line");
        if (weight.expPoly.degree_or(0) != 2) return fail("whole-line weight needs e^{quadratic}");
        Rational c2 = weight.expPoly.coeff(2);
        Rational c1 = weight.expPoly.coeff(1);
        if (!(c2 < Rational(0))) return fail("e^{c2 x^2} with c2 >= 0");
        // weight e^{c2 x^2 + c1 x}: m_{k+1} = (c1 m_k + k m_{k-1}) / (-2 c2).
        for (int k = 0; k < K; ++k) {
            Rational acc = c1 * m[static_cast<size_t>(k)];
            if (k >= 1) acc += Rational(k) * m[static_cast<size_t>(k - 1)];
            m[static_cast<size_t>(k + 1)] = acc / (Rational(-2) * c2);
        }
        MomentTable t{WeightClass::HermiteType, std::move(m)};
        return t;
    }

    return fail("interval " + I.str() + " outside the supported classes");
}

Rational inner_product(const Poly& f, const Poly& g, const MomentTable& moments) {
    Rational acc(0);
    if (f.is_zero() || g.is_zero()) return acc;
    for (int i = 0; i <= *f.degree(); ++i) {
        if (f.coeff(i).is_zero()) continue;
        for (int j = 0; j <= *g.degree(); ++j) {
            if (g.coeff(j).is_zero()) continue;
            acc += f.coeff(i) * g.coeff(j) * moments.at(i + j);
        }
    }
    return acc;
}

std::vector<std::vector<Rational>> gram(const EigenBasis& basis, const MomentTable& moments) {
    size_t n = basis.polys.size();
    std::vector<std::vector<Rational>> G(n, std::vector<Rational>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i; j < n; ++j) {
            G[i][j] = inner_product(basis.polys[i], basis.polys[j], moments);
            G[j][i] = G[i][j];
        }
    return G;
}

EigenBasis orthogonalize_degenerate(const EigenBasis& basis, const Spectrum& spectrum,
                                    const MomentTable& moments) {
    EigenBasis out = basis;
    for (const auto& group : spectrum.groups) {
        if (group.size() < 2) continue;
        std::vector<int> degs = group;
        std::sort(degs.begin(), degs.end());
        for (size_t a = 1; a < degs.size(); ++a) {
            Poly& p = out.polys[static_cast<size_t>(degs[a])];
            for (size_t b = 0; b < a; ++b) {
                const Poly& q = out.polys[static_cast<size_t>(degs[b])];
                Rational nq = inner_product(q, q, moments);
                if (nq.is_zero())
                    throw std::domain_error(
                        "orthogonalize_degenerate: zero-norm member at degree " +
                        std::to_string(degs[b]) + "; weight is not admissible");
                p -= (inner_product(p, q, moments) / nq) * q;
            }
        }
    }
    out.orthogonalized = true;
    return out;
}

DiffOperator compose(const DiffOperator& op1, const DiffOperator& op2) {
    int n1 = op1.order(), n2 = op2.order();
    std::vector<Poly> c(static_cast<size_t>(n1 + n2));
    // a_j D^j (b_k y^(k)) = a_j sum_i C(j,i) b_k^(j-i) y^(k+i)
    for (int j = 1; j <= n1; ++j) {
        const Poly& aj = op1.coeff(j);
        if (aj.is_zero()) continue;
        for (int k = 1; k <= n2; ++k) {
            Poly deriv = op2.coeff(k);  // b_k^(j-i) walked down from i = j
            for (int i = j; i >= 0; --i) {
                if (!deriv.is_zero()) {
                    Integer bc;
                    mpz_bin_uiui(bc.get_mpz_t(), static_cast<unsigned long>(j),
                                 static_cast<unsigned long>(i));
                    c[static_cast<size_t>(k + i - 1)] += Rational(bc) * aj * deriv;
                }
                if (i > 0) deriv = deriv.derivative();
            }
        }
    }
    return DiffOperator(std::move(c));
}

std::vector<std::vector<Rational>> symmetry_defect(const DiffOperator& op,
                                                   const MomentTable& moments, int N) {
    OperatorMatrix M = op_matrix(op, N);
    std::vector<std::vector<Rational>> S(static_cast<size_t>(N + 1),
                                         std::vector<Rational>(static_cast<size_t>(N + 1)));
    // <L x^i, x^j> = sum_t M[t][i] m_{t+j}
    auto lform = [&](int i, int j) {
        Rational acc(0);
        for (int t = 0; t <= i; ++t) {
            if (M.at(t, i).is_zero()) continue;
            acc += M.at(t, i) * moments.at(t + j);
        }
        return acc;
    };
    for (int i = 0; i <= N; ++i)
        for (int j = 0; j <= N; ++j) S[static_cast<size_t>(i)][static_cast<size_t>(j)] = lform(i, j) - lform(j, i);
    return S;
}

}  // namespace polyspec
