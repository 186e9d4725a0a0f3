#include <doctest.h>

#include "polyspec/spectra.hpp"
#include "test_helpers.hpp"

using namespace polyspec;
using polyspec::testing::Rng;
using polyspec::testing::draw_params;
using polyspec::testing::example_operator_41;

namespace {

Integer factorial(int n) {
    Integer f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

// Brute-force normalized moment of (1-x)^A (1+x)^B on (-1,1) for integer
// exponents: expand the weight polynomial and integrate term by term.
Rational brute_jacobi_moment(int A, int B, int k) {
    Poly w = parse_poly_expr("(1 - x)^" + std::to_string(A) + "*(1 + x)^" + std::to_string(B), {});
    auto integrate = [](const Poly& p) {
        Poly anti = p.antiderivative();
        return anti.eval(Rational(1)) - anti.eval(Rational(-1));
    };
    return integrate(w * Poly::monomial(Rational(1), k)) / integrate(w);
}

}  // namespace

TEST_CASE("apply and the operator matrix") {
    FamilyInstance h4 = instantiate("H4", {{"m1", Rational(0)}, {"m2", Rational(1)}, {"A", Rational(-4)}});
    Poly img = apply(h4.op, parse_poly_expr("x^3", {}));
    CHECK(img.coeff(3) == Rational(36));  // lambda_3 = 4 * 9

    DiffOperator op41 = example_operator_41();
    CHECK(apply(op41, parse_poly_expr("x^3", {})) == parse_poly_expr("-24*x^3", {}));
    CHECK(apply(op41, Poly::constant(Rational(5))).is_zero());

    OperatorMatrix M = op_matrix(op41, 3);
    CHECK(M.at(0, 0) == Rational(0));
    CHECK(M.at(1, 1) == Rational(-24));
    CHECK(M.at(2, 2) == Rational(-48));
    CHECK(M.at(3, 3) == Rational(-24));

    OperatorMatrix M0 = op_matrix(op41, 0);
    CHECK(M0.size == 1);
    CHECK(M0.at(0, 0) == Rational(0));

    OperatorMatrix Mh = op_matrix(h4.op, 4);
    std::vector<long> expect{0, 4, 16, 36, 64};
    for (int d = 0; d <= 4; ++d) CHECK(Mh.at(d, d) == Rational(expect[static_cast<size_t>(d)]));

    // triangularity across the whole catalog at N = 10
    Rng rng(11);
    for (const auto& f : list_catalog()) {
        FamilyInstance inst = instantiate(f.id, draw_params(f, rng));
        OperatorMatrix T = op_matrix(inst.op, 10);
        for (int i = 0; i <= 10; ++i)
            for (int j = 0; j < i; ++j) CHECK(T.at(i, j) == Rational(0));
    }
}

TEST_CASE("eigenvalues and grouping") {
    FamilyInstance h6 = instantiate("H6", {{"D", Rational(-8)}, {"C", Rational(16)}});
    Spectrum s = eigenvalues(h6.op, 6);
    for (long n = 0; n <= 6; ++n)
        CHECK(s.lambdas[static_cast<size_t>(n)] == Rational(-8) * Rational(n).pow(3));

    FamilyInstance leg8 = instantiate(
        "J8.I.a", {{"D", Rational(-1856)}, {"F", Rational(-216)}, {"G", Rational(16)}});
    Spectrum s8 = eigenvalues(leg8.op, 8);
    for (long n = 0; n <= 8; ++n)
        CHECK(s8.lambdas[static_cast<size_t>(n)] == Rational(n).pow(4) * Rational(n + 1).pow(4));

    Spectrum s41 = eigenvalues(example_operator_41(), 3);
    CHECK(s41.lambdas[0] == Rational(0));
    REQUIRE(s41.groups.size() == 3);
    CHECK(s41.groups[0] == std::vector<int>{0});
    CHECK(s41.groups[1] == std::vector<int>{2});
    CHECK(s41.groups[2] == std::vector<int>{1, 3});
}

TEST_CASE("eigenpolynomials by back-substitution") {
    DiffOperator op41 = example_operator_41();
    OperatorMatrix M = op_matrix(op41, 3);
    Spectrum s = eigenvalues(op41, 3);
    CHECK(eigenpolynomial(M, 0, s) == Poly::constant(Rational(1)));
    CHECK(eigenpolynomial(M, 2, s) == parse_poly_expr("x^2 - 1/3", {}));
    CHECK(eigenpolynomial(M, 3, s) == parse_poly_expr("x^3", {}));

    // repeated eigenvalue with nonzero coupling: only possible off the
    // self-adjoint class, reported as inconsistent
    DiffOperator weird({Poly::constant(Rational(1)), parse_poly_expr("x^2", {})});
    OperatorMatrix Mw = op_matrix(weird, 2);
    Spectrum sw = eigenvalues(weird, 2);
    CHECK(sw.lambdas[0] == sw.lambdas[1]);
    CHECK_THROWS_AS(eigenpolynomial(Mw, 1, sw), InconsistentSystemError);
}

TEST_CASE("moments of the three weight classes") {
    // flat weight on (-1,1)
    WeightForm flat;
    flat.interval = Interval::bounded(Rational(-1), Rational(1));
    MomentTable mf = moments(flat, 6);
    CHECK(mf.weightClass == WeightClass::JacobiType);
    CHECK(mf.at(2) == Rational(1, 3));
    CHECK(mf.at(3) == Rational(0));
    CHECK(mf.at(4) == Rational(1, 5));

    // gaussian
    WeightForm gauss;
    gauss.interval = Interval::whole();
    gauss.expPoly = parse_poly_expr("-x^2", {});
    MomentTable mg = moments(gauss, 8);
    CHECK(mg.weightClass == WeightClass::HermiteType);
    CHECK(mg.at(2) == Rational(1, 2));
    CHECK(mg.at(1) == Rational(0));

    // exponential on the half line: m_k = k!
    WeightForm expw;
    expw.interval = Interval::right_of(Rational(0));
    expw.expPoly = parse_poly_expr("-x", {});
    MomentTable me = moments(expw, 10);
    CHECK(me.weightClass == WeightClass::LaguerreType);
    for (int k = 0; k <= 10; ++k) CHECK(me.at(k) == Rational(factorial(k)));

    // unsupported: essential factor present
    WeightForm ess = expw;
    ess.essentialFactors.push_back({Rational(0), Poly({Rational(0), Rational(-1)})});
    CHECK_THROWS_AS(moments(ess, 4), UnsupportedWeightClassError);
    // unsupported: wrong interval
    WeightForm off;
    off.interval = Interval::bounded(Rational(0), Rational(1));
    CHECK_THROWS_AS(moments(off, 4), UnsupportedWeightClassError);
}

TEST_CASE("jacobi moment recurrence against brute-force integration") {
    for (int A = 0; A <= 3; ++A) {
        for (int B = 0; B <= 3; ++B) {
            WeightForm w;
            w.interval = Interval::bounded(Rational(-1), Rational(1));
            if (A) w.powerFactors.push_back({Rational(1), Rational(A)});
            if (B) w.powerFactors.push_back({Rational(-1), Rational(B)});
            MomentTable mt = moments(w, 16);
            for (int k = 0; k <= 16; ++k) CHECK(mt.at(k) == brute_jacobi_moment(A, B, k));
        }
    }
}

TEST_CASE("laguerre and hermite moment identities") {
    // integer-exponent Laguerre against Gamma values: m_k = (A+k)!/A! / (-b)^k
    for (int A = 0; A <= 3; ++A) {
        for (long bnum : {-1L, -3L}) {
            WeightForm w;
            w.interval = Interval::right_of(Rational(0));
            if (A) w.powerFactors.push_back({Rational(0), Rational(A)});
            w.expPoly = Poly({Rational(0), Rational(bnum, 2)});
            MomentTable mt = moments(w, 16);
            Rational minusB = -Rational(bnum, 2);
            for (int k = 0; k <= 16; ++k) {
                Rational expect(factorial(A + k), factorial(A));
                expect = expect / minusB.pow(k);
                CHECK(mt.at(k) == expect);
            }
        }
    }
    // centered gaussian double-factorial law and the shift identity
    WeightForm centered;
    centered.interval = Interval::whole();
    centered.expPoly = parse_poly_expr("-x^2", {});
    MomentTable mc = moments(centered, 16);
    Rational dfact(1);
    for (int k = 2; k <= 16; k += 2) {
        dfact *= Rational(k - 1, 2);
        CHECK(mc.at(k) == dfact);
        CHECK(mc.at(k - 1) == Rational(0));
    }
    // e^{-(x-c)^2} has moments sum_j C(k,j) c^(k-j) m_j of the centered weight
    Rational c(3, 2);
    WeightForm shifted;
    shifted.interval = Interval::whole();
    shifted.expPoly = Poly({Rational(0), Rational(2) * c, Rational(-1)});
    MomentTable ms = moments(shifted, 12);
    for (int k = 0; k <= 12; ++k) {
        Rational acc(0);
        for (int j = 0; j <= k; ++j) {
            Integer bc;
            mpz_bin_uiui(bc.get_mpz_t(), static_cast<unsigned long>(k),
                         static_cast<unsigned long>(j));
            acc += Rational(bc) * c.pow(k - j) * mc.at(j);
        }
        CHECK(ms.at(k) == acc);
    }
}

TEST_CASE("hankel positivity at small sizes") {
    Rng rng(55);
    for (int t = 0; t < 4; ++t) {
        WeightForm w;
        w.interval = Interval::bounded(Rational(-1), Rational(1));
        w.powerFactors.push_back({Rational(1), Rational(rng.next(0, 5), 2)});
        w.powerFactors.push_back({Rational(-1), Rational(rng.next(0, 5), 3)});
        MomentTable mt = moments(w, 12);
        // leading principal minors of [m_{i+j}]
        for (int size = 1; size <= 4; ++size) {
            std::vector<std::vector<Rational>> h(static_cast<size_t>(size),
                                                 std::vector<Rational>(static_cast<size_t>(size)));
            for (int i = 0; i < size; ++i)
                for (int j = 0; j < size; ++j) h[static_cast<size_t>(i)][static_cast<size_t>(j)] = mt.at(i + j);
            // determinant by fraction-free elimination
            Rational det(1);
            for (int col = 0; col < size; ++col) {
                int pivot = col;
                while (pivot < size && h[static_cast<size_t>(pivot)][static_cast<size_t>(col)].is_zero()) ++pivot;
                REQUIRE(pivot < size);
                if (pivot != col) {
                    std::swap(h[static_cast<size_t>(pivot)], h[static_cast<size_t>(col)]);
                    det = -det;
                }
                det *= h[static_cast<size_t>(col)][static_cast<size_t>(col)];
                for (int r = col + 1; r < size; ++r) {
                    Rational f = h[static_cast<size_t>(r)][static_cast<size_t>(col)] /
                                 h[static_cast<size_t>(col)][static_cast<size_t>(col)];
                    for (int k = col; k < size; ++k)
                        h[static_cast<size_t>(r)][static_cast<size_t>(k)] -=
                            f * h[static_cast<size_t>(col)][static_cast<size_t>(k)];
                }
            }
            CHECK(det > Rational(0));
        }
    }
}

TEST_CASE("gram matrices and degenerate orthogonalization") {
    WeightForm flat;
    flat.interval = Interval::bounded(Rational(-1), Rational(1));
    MomentTable mt = moments(flat, 16);

    EigenBasis pair;
    pair.polys = {Poly::x(), parse_poly_expr("x^3", {})};
    auto G = gram(pair, mt);
    CHECK(G[0][1] == Rational(1, 5));

    EigenBasis fixed;
    fixed.polys = {Poly::x(), parse_poly_expr("x^3 - 3*x/5", {})};
    CHECK(gram(fixed, mt)[0][1] == Rational(0));

    DiffOperator op41 = example_operator_41();
    Spectrum s = eigenvalues(op41, 3);
    EigenBasis basis = eigenbasis(op41, 3);
    EigenBasis ob = orthogonalize_degenerate(basis, s, mt);
    CHECK(ob.polys[3] == parse_poly_expr("x^3 - 3*x/5", {}));
    CHECK(ob.polys[0] == basis.polys[0]);  // singleton groups untouched
    CHECK(gram(ob, mt)[0][0] == Rational(1));

    // distinct spectrum: orthogonalization is the identity on the basis
    FamilyInstance h4 = instantiate("H4", {{"m1", Rational(0)}, {"m2", Rational(1)}, {"A", Rational(-4)}});
    Spectrum hs = eigenvalues(h4.op, 4);
    EigenBasis hb = eigenbasis(h4.op, 4);
    EigenBasis ho = orthogonalize_degenerate(hb, hs, moments(*h4.weight, 10));
    CHECK(ho.polys == hb.polys);

    // full cross-orthogonality for verified operators up to N = 8
    Rng rng(21);
    for (const char* id : {"J4.b0", "H6", "L4"}) {
        FamilyInstance inst = instantiate(id, draw_params(find_family(id), rng));
        Spectrum sp = eigenvalues(inst.op, 8);
        EigenBasis eb = orthogonalize_degenerate(eigenbasis(inst.op, 8), sp,
                                                 moments(*inst.weight, 16));
        auto full = gram(eb, moments(*inst.weight, 16));
        for (size_t i = 0; i < full.size(); ++i)
            for (size_t j = 0; j < full.size(); ++j) {
                if (i == j)
                    CHECK(full[i][j] > Rational(0));
                else
                    CHECK(full[i][j] == Rational(0));
            }
    }
}

TEST_CASE("composition") {
    // square of the order-2 Hermite operator is the classical fourth-order one
    DiffOperator h2({parse_poly_expr("-2*x", {}), Poly::constant(Rational(1))});
    FamilyInstance h4 = instantiate("H4", {{"m1", Rational(0)}, {"m2", Rational(1)}, {"A", Rational(-4)}});
    CHECK(compose(h2, h2) == h4.op);

    DiffOperator lag2({parse_poly_expr("1 - x", {}), Poly::x()});
    FamilyInstance l4 = instantiate("L4", {{"a", Rational(4)}, {"b", Rational(-2)}, {"A", Rational(-5)}});
    CHECK(compose(lag2, lag2) == l4.op);

    // associativity where all compositions stay inside the type
    DiffOperator leg2({parse_poly_expr("-2*x", {}), parse_poly_expr("1 - x^2", {})});
    CHECK(compose(compose(h2, lag2), leg2) == compose(h2, compose(lag2, leg2)));
}

TEST_CASE("orthogonality needs the boundary conditions, not just the interior equations") {
    // This operator satisfies every interior determining equation but fails
    // one boundary condition; its eigenpolynomials are far from orthogonal.
    FamilyInstance ex1 = instantiate("EX4.1", {});
    MomentTable mt = moments(*ex1.weight, 16);
    Spectrum s = eigenvalues(ex1.op, 8);
    EigenBasis ob = orthogonalize_degenerate(eigenbasis(ex1.op, 8), s, mt);
    auto G = gram(ob, mt);
    CHECK(G[0][1] == Rational(4, 5));
    int nonzero = 0;
    for (size_t i = 0; i < G.size(); ++i)
        for (size_t j = 0; j < G.size(); ++j)
            if (i != j && !G[i][j].is_zero()) ++nonzero;
    CHECK(nonzero == 72);
}

TEST_CASE("symmetry defect shape") {
    FamilyInstance h4 = instantiate("H4", {{"m1", Rational(0)}, {"m2", Rational(1)}, {"A", Rational(-4)}});
    MomentTable mt = moments(*h4.weight, 12);
    auto S = symmetry_defect(h4.op, mt, 6);
    for (size_t i = 0; i < S.size(); ++i) {
        CHECK(S[i][i] == Rational(0));
        for (size_t j = 0; j < S.size(); ++j) {
            CHECK(S[i][j] == -S[j][i]);
            CHECK(S[i][j] == Rational(0));
        }
    }
    CHECK_THROWS_AS(symmetry_defect(h4.op, moments(*h4.weight, 4), 6), std::out_of_range);
}
