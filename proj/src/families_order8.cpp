#include "families_detail.hpp"

namespace polyspec::detail {

namespace {

Rational at(const Params& q, const std::string& name) {
    auto it = q.find(name);
    if (it == q.end()) throw std::invalid_argument("missing parameter '" + name + "'");
    return it->second;
}

FamilySpec j8_base(const std::string& id, const std::string& caseNote,
                   const std::string& weightNote) {
    FamilySpec f;
    f.id = id;
    f.order = 8;
    f.caseNote = caseNote;
    f.weightNote = weightNote;
    f.interval = Interval::bounded(Rational(-1), Rational(1));
    f.paramNames = {"D", "F", "G"};
    return f;
}

void append_h8_l8(std::vector<FamilySpec>& out) {
    {
        FamilySpec f;
        f.id = "H8";
        f.order = 8;
        f.paramNames = {"D", "F", "G"};
        f.caseNote = "rootless leading coefficient";
        f.weightNote = "p(x) = e^(-x^2)";
        f.interval = Interval::whole();
        f.coeffExprs = {
            "G*x",
            "F - (2*F + G)*x^2",
            "D*x - (2*(D - 2*F - G)*x^3)/3",
            "(48 + G - 192*x^2 - 4*G*x^2 + 64*x^4 + F*(2 - 8*x^2) + D*(-2 + 4*x^2))/4",
            "(x*(96 - D + 2*F + G - 64*x^2))/2",
            "(-144 + D - 2*F - G + 288*x^2)/12",
            "-8*x",
            "1",
        };
        f.lambdaExpr =
            "(1/3)*n*(48*n^3 - 2*D*n^2 + 4*F*n^2 + 2*G*n^2 - 288*n^2 + 6*D*n - 18*F*n - "
            "9*G*n + 528*n - 4*D + 14*F + 10*G - 288)";
        out.push_back(std::move(f));
    }
    {
        FamilySpec f;
        f.id = "L8";
        f.order = 8;
        f.paramNames = {"a", "b", "A", "C", "F"};
        f.constraints = {
            require("a > 12", [](const Params& q) { return at(q, "a") > Rational(12); }),
            require("b < 0", [](const Params& q) { return at(q, "b") < Rational(0); }),
        };
        f.caseNote = "one real root of multiplicity 4";
        f.weightNote = "p(x) = x^(a/4-4) e^(b x / 4)";
        f.interval = Interval::right_of(Rational(0));
        const std::string X4 =
            "a^4 - 8*a^3*(3 + 4*b*x) + 16*a^2*(11 + 3*A*x + 24*b*x) - 32*a*(12 + 18*A*x + "
            "32*b*x + b^3*x^3) + x*(256*C*x + b^4*x^3 + 48*A*(32 + b^2*x^2))";
        const std::string X3 =
            "-3*a^4*b + 128*C*x*(-8 + b*x) + 24*a^3*b*(3 + b*x) + 24*a^2*b*(-22 - 12*b*x + "
            "b^2*x^2) + a*(1152*b + 768*b^2*x + 128*C*x - 96*b^3*x^2 - 3*b^4*x^3) + "
            "4*A*(-384 + a^3 - 288*b*x + 36*b^2*x^2 + b^3*x^3 - 3*a^2*(8 + 3*b*x) + a*(176 "
            "+ 108*b*x - 9*b^2*x^2))";
        const std::string X2 =
            "-48*(-384 + 176*a - 24*a^2 + a^3)*A*b + 33*a*(-384 + 176*a - 24*a^2 + "
            "a^3)*b^2 + 128*(96 - 20*a + a^2)*C + 2048*F*x + b^2*(-48*(-4 + a)*A*b - "
            "132*a*b^2 + 33*a^2*b^2 + 128*C)*x^2";
        const std::string X1 =
            "48*(32 - 12*a + a^2)*A*b^2 + 396*a^2*b^3 - 33*a^3*b^3 - 32*a*(33*b^3 + 4*b*C) "
            "+ 1024*(b*C + F)";
        f.coeffExprs = {
            "((-12 + a + b*x)/4096)*(" + X1 + ")",
            "(" + X2 + ")/2048",
            "(" + X3 + ")/256",
            "(" + X4 + ")/256",
            "(x*(a^3 - 6*a^2*(2 + b*x) + 2*a*(16 + 6*A*x + 12*b*x - 3*b^2*x^2) + "
            "x*(b^3*x^2 + 12*A*(-4 + b*x))))/16",
            "(x^2*(-12*a + 3*a^2 + x*(8*A + 3*b^2*x)))/8",
            "x^3*(a + b*x)",
            "x^4",
        };
        f.lambdaExpr =
            "(b*n/4096)*(-33*a^3*b^3 + 16*n^3*b^3 + 330*a^2*b^3 - 48*a*n^2*b^3 - "
            "96*n^2*b^3 - 888*a*b^3 + 66*a^2*n*b^3 - 120*a*n*b^3 + 176*n*b^3 - 96*b^3 + "
            "64*A*n^2*b^2 + 48*a^2*A*b^2 - 480*a*A*b^2 + 1280*A*b^2 - 96*a*A*n*b^2 + "
            "192*A*n*b^2 - 128*a*C*b + 768*C*b + 256*C*n*b + 1024*F)";
        out.push_back(std::move(f));
    }
}

void append_j8_I(std::vector<FamilySpec>& out) {
    {
        FamilySpec f = j8_base("J8.I.a", "exponents (0, 0): b-a-2 = 0, b+a+2 = 0", "p(x) = 1");
        f.coeffExprs = {
            "G*x",
            "F - (3*F + G)*x^2",
            "(2*(2*F + G)*x^3 + D*(3*x - 5*x^3))/3",
            "(1152 + G - 11520*x^2 - 10*G*x^2 + 13440*x^4 + 9*G*x^4 - 2*D*(1 - 6*x^2 + "
            "5*x^4) + 2*F*(1 - 10*x^2 + 9*x^4))/8",
            "(x*(-1 + x^2)*(-2304 + D - G + 5376*x^2 - D*x^2 + G*x^2 + 2*F*(-1 + x^2)))/4",
            "((-1 + x^2)^2*(-3456 + D - G + 24192*x^2 - D*x^2 + G*x^2 + 2*F*(-1 + "
            "x^2)))/72",
            "-32*x*(1 - x^2)^3",
            "(1 - x^2)^4",
        };
        f.lambdaExpr =
            "(1/72)*n*(n+1)*(72*n^6 + 216*n^5 - D*n^4 + 2*F*n^4 + G*n^4 - 1224*n^4 - "
            "2*D*n^3 + 4*F*n^3 + 2*G*n^3 - 2808*n^3 + 7*D*n^2 - 32*F*n^2 - 16*G*n^2 + "
            "6336*n^2 + 8*D*n - 34*F*n - 17*G*n + 7776*n - 12*D + 60*F + 66*G - 10368)";
        out.push_back(std::move(f));
    }
    {
        FamilySpec f = j8_base("J8.I.b", "exponents (0, 1): b-a-2 = 0, b+a+2 = -2", "p(x) = 1 - x");
        const std::string X5 =
            "1152 + G + 8064*x + 7*G*x - 8064*x^2 - G*x^2 - 24192*x^3 - 7*G*x^3 + 2*D*(-1 "
            "- 7*x + x^2 + 7*x^3) - F*(-1 - 7*x + x^2 + 7*x^3)";
        f.coeffExprs = {
            "G + 3*G*x",
            "-2*G*x*(1 + 2*x) + F*(1 - 2*x - 5*x^2)",
            "(2*(F + G)*x^2*(3 + 5*x))/3 + D*(1 + 5*x - 5*x^2 - 35*x^3/3)",
            "(576 + G - 2304*x - 4*G*x - 8064*x^2 - 14*G*x^2 + 5376*x^3 + 4*G*x^3 + "
            "12096*x^4 + 13*G*x^4 - 4*D*(1 - 2*x - 8*x^2 + 2*x^3 + 7*x^4) + F*(1 - 4*x - "
            "14*x^2 + 4*x^3 + 13*x^4))/4",
            "((1 - x^2)/12)*(" + X5 + ")",
            "((-1 + x^2)^2*(-1728 - G + 3456*x + 15552*x^2 + G*x^2 - 2*D*(-1 + x^2) + "
            "F*(-1 + x^2)))/36",
            "4*(1 + 9*x)*(-1 + x^2)^3",
            "(1 - x^2)^4",
        };
        f.lambdaExpr =
            "(1/36)*n*(n + 2)*(36*n^6 + 216*n^5 - 2*D*n^4 + F*n^4 + G*n^4 - 504*n^4 - "
            "8*D*n^3 + 4*F*n^3 + 4*G*n^3 - 3456*n^3 + 14*D*n^2 - 16*F*n^2 - 16*G*n^2 + "
            "3060*n^2 + 44*D*n - 40*F*n - 40*G*n + 13608*n - 48*D + 51*F + 87*G - 12960)";
        out.push_back(std::move(f));
    }
    {
        FamilySpec f = j8_base("J8.I.c", "exponents (0, 2): b-a-2 = 0, b+a+2 = -4", "p(x) = (1 - x)^2");
        const std::string X5 =
            "1152 + G + 3456*x + 4*G*x - 10368*x^2 - G*x^2 - 17280*x^3 - 4*G*x^3 + D*(-1 - "
            "4*x + x^2 + 4*x^3) - 2*F*(-1 - 4*x + x^2 + 4*x^3)";
        f.coeffExprs = {
            "G + 2*G*x",
            "-(G*x*(5 + 7*x)) + F*(1 - 10*x - 15*x^2)",
            "((2*F + G)*x*(3 + 18*x + 19*x^2))/3 + D*(1 + 2*x - 7*x^2 - 28*x^3/3)",
            "(576 + G - 16128*x - 28*G*x - 24192*x^2 - 54*G*x^2 + 48384*x^3 + 28*G*x^3 + "
            "60480*x^4 + 53*G*x^4 - 4*D*(1 - 7*x - 15*x^2 + 7*x^3 + 14*x^4) + 2*F*(1 - "
            "28*x - 54*x^2 + 28*x^3 + 53*x^4))/12",
            "((1 - x^2)/6)*(" + X5 + ")",
            "((-1 + x^2)^2*(-1296 + D - G + 7776*x + 19440*x^2 - D*x^2 + G*x^2 + 2*F*(-1 + "
            "x^2)))/36",
            "8*(1 + 5*x)*(-1 + x^2)^3",
            "(1 - x^2)^4",
        };
        f.lambdaExpr =
            "(1/36)*n*(n+3)*(36*n^6 + 324*n^5 - D*n^4 + 2*F*n^4 + G*n^4 - 180*n^4 - "
            "6*D*n^3 + 12*F*n^3 + 6*G*n^3 - 5940*n^3 + 5*D*n^2 - 28*F*n^2 - 14*G*n^2 + "
            "144*n^2 + 42*D*n - 138*F*n - 69*G*n + 31536*n - 40*D + 152*F + 94*G - 25920)";
        out.push_back(std::move(f));
    }
    {
        FamilySpec f = j8_base("J8.I.d", "exponents (0, 3): b-a-2 = 0, b+a+2 = -6", "p(x) = (1 - x)^3");
        const std::string X5 =
            "1408 - G + 1152*x - 3*G*x - 17280*x^2 + G*x^2 - 21120*x^3 + 3*G*x^3 + D*(-1 - "
            "3*x + x^2 + 3*x^3) + 3*F*(-1 - 3*x + x^2 + 3*x^3)";
        f.coeffExprs = {
            "G + 5*G*x/3",
            "(2*G*x*(9 + 11*x))/3 + F*(1 + 18*x + 21*x^2)",
            "((-3*F - G)*x*(14 + 57*x + 49*x^2) + D*(6 - 63*x^2 - 63*x^3))/6",
            "(F*(3 + 54*x + 75*x^2 - 54*x^3 - 78*x^4) + G*(1 + 18*x + 25*x^2 - 18*x^3 - "
            "26*x^4) - 9*(96 - 2*(-704 + D)*x - 3*(-192 + D)*x^2 + 2*(-2880 + D)*x^3 + "
            "3*(-1760 + D)*x^4))/6",
            "(-3*(-1 + x^2)/16)*(" + X5 + ")",
            "-((-1 + x^2)^2*(576 - G - 17280*x - 31680*x^2 + G*x^2 + D*(-1 + x^2) + "
            "3*F*(-1 + x^2)))/48",
            "4*(3 + 11*x)*(-1 + x^2)^3",
            "(1 - x^2)^4",
        };
        f.lambdaExpr =
            "(1/48)*n*(n + 4)*(48*n^6 + 576*n^5 - D*n^4 - 3*F*n^4 - G*n^4 + 480*n^4 - "
            "8*D*n^3 - 24*F*n^3 - 8*G*n^3 - 11520*n^3 + D*n^2 + 27*F*n^2 + 9*G*n^2 - "
            "9168*n^2 + 68*D*n + 300*F*n + 100*G*n + 80064*n - 60*D - 300*F - 84*G - "
            "60480)";
        out.push_back(std::move(f));
    }
    {
        FamilySpec f = j8_base("J8.I.e", "exponents (1, 0): b-a-2 = 2, b+a+2 = 0", "p(x) = 1 + x");
        const std::string X5 =
            "1152 - G - 8064*x + 7*G*x - 8064*x^2 + G*x^2 + 24192*x^3 - 7*G*x^3 + 2*D*(1 - "
            "7*x - x^2 + 7*x^3) + F*(1 - 7*x - x^2 + 7*x^3)";
        f.coeffExprs = {
            "G - 3*G*x",
            "2*G*x*(-1 + 2*x) + F*(1 + 2*x - 5*x^2)",
            "(2*(F - G)*x^2*(-3 + 5*x))/3 + D*(1 - 5*x - 5*x^2 + 35*x^3/3)",
            "(576 - G + 2304*x - 4*G*x - 8064*x^2 + 14*G*x^2 - 5376*x^3 + 4*G*x^3 + "
            "12096*x^4 - 13*G*x^4 + 4*D*(1 + 2*x - 8*x^2 - 2*x^3 + 7*x^4) + F*(1 + 4*x - "
            "14*x^2 - 4*x^3 + 13*x^4))/4",
            "((-1 + x^2)/12)*(" + X5 + ")",
            "((-1 + x^2)^2*(-1728 + G - 3456*x + 15552*x^2 - G*x^2 + 2*D*(-1 + x^2) + "
            "F*(-1 + x^2)))/36",
            "4*(-1 + 9*x)*(-1 + x^2)^3",
            "(1 - x^2)^4",
        };
        f.lambdaExpr =
            "(1/36)*n*(n + 2)*(36*n^6 + 216*n^5 + 2*D*n^4 + F*n^4 - G*n^4 - 504*n^4 + "
            "8*D*n^3 + 4*F*n^3 - 4*G*n^3 - 3456*n^3 - 14*D*n^2 - 16*F*n^2 + 16*G*n^2 + "
            "3060*n^2 - 44*D*n - 40*F*n + 40*G*n + 13608*n + 48*D + 51*F - 87*G - 12960)";
        out.push_back(std::move(f));
    }
    {
        FamilySpec f = j8_base("J8.I.f", "exponents (1, 1): b-a-2 = 2, b+a+2 = -2", "p(x) = 1 - x^2");
        f.coeffExprs = {
            "G*x",
            "F - (5*F + G)*x^2",
            "(2*(4*F + G)*x^3 + D*(3*x - 7*x^3))/3",
            "(5760 + G - 80640*x^2 - 14*G*x^2 + 120960*x^4 + 13*G*x^4 - 4*D*(1 - 8*x^2 + "
            "7*x^4) + F*(4 - 56*x^2 + 52*x^4))/24",
            "(x*(-1 + x^2)*(-11520 - G + 34560*x^2 + G*x^2 - 2*D*(-1 + x^2) + 4*F*(-1 + "
            "x^2)))/12",
            "((-1 + x^2)^2*(-17280 - G + 155520*x^2 + G*x^2 - 2*D*(-1 + x^2) + 4*F*(-1 + "
            "x^2)))/288",
            "40*x*(-1 + x^2)^3",
            "(1 - x^2)^4",
        };
        f.lambdaExpr =
            "(1/288)*n*(n+3)*(288*n^6 + 2592*n^5 - 2*D*n^4 + 4*F*n^4 + G*n^4 - 1440*n^4 - "
            "12*D*n^3 + 24*F*n^3 + 6*G*n^3 - 47520*n^3 + 10*D*n^2 - 68*F*n^2 - 17*G*n^2 + "
            "1152*n^2 + 84*D*n - 312*F*n - 78*G*n + 252288*n - 80*D + 352*F + 160*G - "
            "207360)";
        out.push_back(std::move(f));
    }
    {
        FamilySpec f = j8_base("J8.I.g", "exponents (1, 2): b-a-2 = 2, b+a+2 = -4", "p(x) = (1 - x)^2 (1 + x)");
        const std::string X5 =
            "2880 + G + 25920*x + 9*G*x - 25920*x^2 - G*x^2 - 95040*x^3 - 9*G*x^3 + "
            "3*D*(-1 - 9*x + x^2 + 9*x^3) - F*(-1 - 9*x + x^2 + 9*x^3)";
        // The sign of the G part of a_2 is pinned by the interior equation
        // k=1 and by the x -> -x mirror of the (2, 1) entry.
        f.coeffExprs = {
            "G + 5*G*x",
            "-2*G*x*(1 + 3*x) + F*(1 - 2*x - 7*x^2)",
            "(2*(F + G)*x^2*(3 + 7*x))/3 + D*(1 + 7*x - 7*x^2 - 21*x^3)",
            "(1440 + G - 5760*x - 4*G*x - 25920*x^2 - 18*G*x^2 + 17280*x^3 + 4*G*x^3 + "
            "47520*x^4 + 17*G*x^4 - 6*D*(1 - 2*x - 10*x^2 + 2*x^3 + 9*x^4) + F*(1 - 4*x - "
            "18*x^2 + 4*x^3 + 17*x^4))/6",
            "((1 - x^2)/24)*(" + X5 + ")",
            "((-1 + x^2)^2*(-4320 - G + 8640*x + 47520*x^2 + G*x^2 - 3*D*(-1 + x^2) + "
            "F*(-1 + x^2)))/72",
            "4*(1 + 11*x)*(-1 + x^2)^3",
            "(1 - x^2)^4",
        };
        f.lambdaExpr =
            "(1/72)*n*(n + 4)*(72*n^6 + 864*n^5 - 3*D*n^4 + F*n^4 + G*n^4 + 720*n^4 - "
            "24*D*n^3 + 8*F*n^3 + 8*G*n^3 - 17280*n^3 + 3*D*n^2 - 13*F*n^2 - 13*G*n^2 - "
            "13752*n^2 + 204*D*n - 116*F*n - 116*G*n + 120096*n - 180*D + 120*F + 192*G - "
            "90720)";
        out.push_back(std::move(f));
    }
    {
        FamilySpec f = j8_base("J8.I.h", "exponents (1, 3): b-a-2 = 2, b+a+2 = -6", "p(x) = (1 - x)^3 (1 + x)");
        const std::string X5 =
            "3840 + G + 15360*x + 5*G*x - 42240*x^2 - G*x^2 - 84480*x^3 - 5*G*x^3 + "
            "2*D*(-1 - 5*x + x^2 + 5*x^3) - 2*F*(-1 - 5*x + x^2 + 5*x^3)";
        f.coeffExprs = {
            "G + 3*G*x",
            "(-(G*x*(7 + 13*x)))/2 + F*(1 - 7*x - 14*x^2)",
            "((2*F + G)*x*(1 + 8*x + 11*x^2))/2 + D*(1 + 3*x - 9*x^2 - 15*x^3)",
            "(1920 + G - 34560*x - 18*G*x - 69120*x^2 - 44*G*x^2 + 126720*x^3 + 18*G*x^3 + "
            "190080*x^4 + 43*G*x^4 - 6*D*(1 - 6*x - 16*x^2 + 6*x^3 + 15*x^4) + F*(2 - 36*x "
            "- 88*x^2 + 36*x^3 + 86*x^4))/16",
            "((1 - x^2)/16)*(" + X5 + ")",
            "((-1 + x^2)^2*(-4608 - G + 25344*x + 76032*x^2 + G*x^2 - 2*D*(-1 + x^2) + "
            "2*F*(-1 + x^2)))/96",
            "8*(1 + 6*x)*(-1 + x^2)^3",
            "(1 - x^2)^4",
        };
        f.lambdaExpr =
            "(1/96)*n*(n + 5)*(96*n^6 + 1440*n^5 - 2*D*n^4 + 2*F*n^4 + G*n^4 + 2976*n^4 - "
            "20*D*n^3 + 20*F*n^3 + 10*G*n^3 - 30240*n^3 - 10*D*n^2 - 14*F*n^2 - 7*G*n^2 - "
            "51456*n^2 + 200*D*n - 320*F*n - 160*G*n + 270720*n - 168*D + 312*F + 204*G - "
            "193536)";
        out.push_back(std::move(f));
    }
    {
        FamilySpec f = j8_base("J8.I.i", "exponents (2, 0): b-a-2 = 4, b+a+2 = 0", "p(x) = (1 + x)^2");
        const std::string X5 =
            "1152 - G - 3456*x + 4*G*x - 10368*x^2 + G*x^2 + 17280*x^3 - 4*G*x^3 + D*(1 - "
            "4*x - x^2 + 4*x^3) + F*(2 - 8*x - 2*x^2 + 8*x^3)";
        f.coeffExprs = {
            "G - 2*G*x",
            "G*x*(-5 + 7*x) + F*(1 + 10*x - 15*x^2)",
            "((2*F - G)*x*(3 - 18*x + 19*x^2))/3 + D*(1 - 2*x - 7*x^2 + 28*x^3/3)",
            "(576 - G + 16128*x - 28*G*x - 24192*x^2 + 54*G*x^2 - 48384*x^3 + 28*G*x^3 + "
            "60480*x^4 - 53*G*x^4 + 4*D*(1 + 7*x - 15*x^2 - 7*x^3 + 14*x^4) + 2*F*(1 + "
            "28*x - 54*x^2 - 28*x^3 + 53*x^4))/12",
            "((-1 + x^2)/6)*(" + X5 + ")",
            "((-1 + x^2)^2*(-1296 + G - 7776*x + 19440*x^2 - G*x^2 + D*(-1 + x^2) + "
            "2*F*(-1 + x^2)))/36",
            "8*(-1 + 5*x)*(-1 + x^2)^3",
            "(1 - x^2)^4",
        };
        f.lambdaExpr =
            "(1/36)*n*(n+3)*(36*n^6 + 324*n^5 + D*n^4 + 2*F*n^4 - G*n^4 - 180*n^4 + "
            "6*D*n^3 + 12*F*n^3 - 6*G*n^3 - 5940*n^3 - 5*D*n^2 - 28*F*n^2 + 14*G*n^2 + "
            "144*n^2 - 42*D*n - 138*F*n + 69*G*n + 31536*n + 40*D + 152*F - 94*G - 25920)";
        out.push_back(std::move(f));
    }
    {
        FamilySpec f = j8_base("J8.I.j", "exponents (2, 1): b-a-2 = 4, b+a+2 = -2", "p(x) = (1 - x)(1 + x)^2");
        const std::string X5 =
            "2880 - G - 25920*x + 9*G*x - 25920*x^2 + G*x^2 + 95040*x^3 - 9*G*x^3 + 3*D*(1 "
            "- 9*x - x^2 + 9*x^3) + F*(1 - 9*x - x^2 + 9*x^3)";
        f.coeffExprs = {
            "G - 5*G*x",
            "2*G*x*(-1 + 3*x) + F*(1 + 2*x - 7*x^2)",
            "(2*(F - G)*x^2*(-3 + 7*x))/3 + D*(1 - 7*x - 7*x^2 + 21*x^3)",
            "(1440 - G + 5760*x - 4*G*x - 25920*x^2 + 18*G*x^2 - 17280*x^3 + 4*G*x^3 + "
            "47520*x^4 - 17*G*x^4 + 6*D*(1 + 2*x - 10*x^2 - 2*x^3 + 9*x^4) + F*(1 + 4*x - "
            "18*x^2 - 4*x^3 + 17*x^4))/6",
            "((-1 + x^2)/24)*(" + X5 + ")",
            "((-1 + x^2)^2*(-4320 + G - 8640*x + 47520*x^2 - G*x^2 + 3*D*(-1 + x^2) + "
            "F*(-1 + x^2)))/72",
            "4*(-1 + 11*x)*(-1 + x^2)^3",
            "(1 - x^2)^4",
        };
        f.lambdaExpr =
            "(1/72)*n*(n + 4)*(72*n^6 + 864*n^5 + 3*D*n^4 + F*n^4 - G*n^4 + 720*n^4 + "
            "24*D*n^3 + 8*F*n^3 - 8*G*n^3 - 17280*n^3 - 3*D*n^2 - 13*F*n^2 + 13*G*n^2 - "
            "13752*n^2 - 204*D*n - 116*F*n + 116*G*n + 120096*n + 180*D + 120*F - 192*G - "
            "90720)";
        out.push_back(std::move(f));
    }
    {
        FamilySpec f = j8_base("J8.I.k", "exponents (2, 2): b-a-2 = 4, b+a+2 = -4", "p(x) = (1 - x)^2 (1 + x)^2");
        f.coeffExprs = {
            "G*x",
            "F - (7*F + G)*x^2",
            "D*x + (-3*D + 4*F + 2*G/3)*x^3",
            "(17280 + G - 311040*x^2 - 18*G*x^2 + 570240*x^4 + 17*G*x^4 - 6*D*(1 - 10*x^2 "
            "+ 9*x^4) + 6*F*(1 - 18*x^2 + 17*x^4))/48",
            "(x*(-1 + x^2)*(-34560 - G + 126720*x^2 + G*x^2 - 3*D*(-1 + x^2) + 6*F*(-1 + "
            "x^2)))/24",
            "((-1 + x^2)^2*(-51840 - G + 570240*x^2 + G*x^2 - 3*D*(-1 + x^2) + 6*F*(-1 + "
            "x^2)))/720",
            "48*x*(-1 + x^2)^3",
            "(1 - x^2)^4",
        };
        f.lambdaExpr =
            "(1/720)*n*(n+5)*(720*n^6 + 10800*n^5 - 3*D*n^4 + 6*F*n^4 + G*n^4 + 22320*n^4 "
            "- 30*D*n^3 + 60*F*n^3 + 10*G*n^3 - 226800*n^3 - 15*D*n^2 - 60*F*n^2 - "
            "10*G*n^2 - 385920*n^2 + 300*D*n - 1050*F*n - 175*G*n + 2030400*n - 252*D + "
            "1044*F + 294*G - 1451520)";
        out.push_back(std::move(f));
    }
    {
        FamilySpec f = j8_base("J8.I.l", "exponents (2, 3): b-a-2 = 4, b+a+2 = -6", "p(x) = (1 - x)^3 (1 + x)^2");
        const std::string X5 =
            "5760 + G + 63360*x + 11*G*x - 63360*x^2 - G*x^2 - 274560*x^3 - 11*G*x^3 + "
            "4*D*(-1 - 11*x + x^2 + 11*x^3) - F*(-1 - 11*x + x^2 + 11*x^3)";
        f.coeffExprs = {
            "G + 7*G*x",
            "-2*G*x*(1 + 4*x) + F*(1 - 2*x - 9*x^2)",
            "2*(F + G)*x^2*(1 + 3*x) + D*(1 + 9*x - 9*x^2 - 33*x^3)",
            "(2880 + G - 11520*x - 4*G*x - 63360*x^2 - 22*G*x^2 + 42240*x^3 + 4*G*x^3 + "
            "137280*x^4 + 21*G*x^4 - 8*D*(1 - 2*x - 12*x^2 + 2*x^3 + 11*x^4) + F*(1 - 4*x "
            "- 22*x^2 + 4*x^3 + 21*x^4))/8",
            "((1 - x^2)/40)*(" + X5 + ")",
            "((-1 + x^2)^2*(-8640 - G + 17280*x + 112320*x^2 + G*x^2 - 4*D*(-1 + x^2) + "
            "F*(-1 + x^2)))/120",
            "4*(1 + 13*x)*(-1 + x^2)^3",
            "(1 - x^2)^4",
        };
        f.lambdaExpr =
            "(1/120)*n*(n + 6)*(120*n^6 + 2160*n^5 - 4*D*n^4 + F*n^4 + G*n^4 + 6960*n^4 - "
            "48*D*n^3 + 12*F*n^3 + 12*G*n^3 - 46080*n^3 - 52*D*n^2 - 2*F*n^2 - 2*G*n^2 - "
            "128040*n^2 + 552*D*n - 228*F*n - 228*G*n + 527760*n - 448*D + 217*F + 337*G - "
            "362880)";
        out.push_back(std::move(f));
    }
    {
        FamilySpec f = j8_base("J8.I.m", "exponents (3, 0): b-a-2 = 6, b+a+2 = 0", "p(x) = (1 + x)^3");
        const std::string X5 =
            "1408 + G - 1152*x - 3*G*x - 17280*x^2 - G*x^2 + 21120*x^3 + 3*G*x^3 + F*(-3 + "
            "9*x + 3*x^2 - 9*x^3) + D*(1 - 3*x - x^2 + 3*x^3)";
        f.coeffExprs = {
            "G - 5*G*x/3",
            "(2*G*(9 - 11*x)*x)/3 + F*(1 - 18*x + 21*x^2)",
            "((-3*F + G)*x*(14 - 57*x + 49*x^2) + D*(6 - 63*x^2 + 63*x^3))/6",
            "(F*(3 - 54*x + 75*x^2 + 54*x^3 - 78*x^4) + G*(-1 + 18*x - 25*x^2 - 18*x^3 + "
            "26*x^4) + 9*(-96 + 2*(704 + D)*x - 3*(192 + D)*x^2 - 2*(2880 + D)*x^3 + "
            "3*(1760 + D)*x^4))/6",
            "(3*(-1 + x^2)/16)*(" + X5 + ")",
            "((-1 + x^2)^2*(-576 - G - 17280*x + 31680*x^2 + G*x^2 + D*(-1 + x^2) - "
            "3*F*(-1 + x^2)))/48",
            "4*(-3 + 11*x)*(-1 + x^2)^3",
            "(1 - x^2)^4",
        };
        f.lambdaExpr =
            "(1/48)*n*(n+4)*(48*n^6 + 576*n^5 + D*n^4 - 3*F*n^4 + G*n^4 + 480*n^4 + "
            "8*D*n^3 - 24*F*n^3 + 8*G*n^3 - 11520*n^3 - D*n^2 + 27*F*n^2 - 9*G*n^2 - "
            "9168*n^2 - 68*D*n + 300*F*n - 100*G*n + 80064*n + 60*D - 300*F + 84*G - "
            "60480)";
        out.push_back(std::move(f));
    }
    {
        FamilySpec f = j8_base("J8.I.n", "exponents (3, 1): b-a-2 = 6, b+a+2 = -2", "p(x) = (1 - x)(1 + x)^3");
        const std::string X5 =
            "3840 - G - 15360*x + 5*G*x - 42240*x^2 + G*x^2 + 84480*x^3 - 5*G*x^3 + 2*D*(1 "
            "- 5*x - x^2 + 5*x^3) + 2*F*(1 - 5*x - x^2 + 5*x^3)";
        f.coeffExprs = {
            "G - 3*G*x",
            "(G*x*(-7 + 13*x))/2 + F*(1 + 7*x - 14*x^2)",
            "((2*F - G)*x*(1 - 8*x + 11*x^2))/2 + D*(1 - 3*x - 9*x^2 + 15*x^3)",
            "(1920 - G + 34560*x - 18*G*x - 69120*x^2 + 44*G*x^2 - 126720*x^3 + 18*G*x^3 + "
            "190080*x^4 - 43*G*x^4 + 6*D*(1 + 6*x - 16*x^2 - 6*x^3 + 15*x^4) + F*(2 + 36*x "
            "- 88*x^2 - 36*x^3 + 86*x^4))/16",
            "((-1 + x^2)/16)*(" + X5 + ")",
            "((-1 + x^2)^2*(-4608 + G - 25344*x + 76032*x^2 - G*x^2 + 2*D*(-1 + x^2) + "
            "2*F*(-1 + x^2)))/96",
            "8*(-1 + 6*x)*(-1 + x^2)^3",
            "(1 - x^2)^4",
        };
        f.lambdaExpr =
            "(1/96)*n*(n+5)*(96*n^6 + 1440*n^5 + 2*D*n^4 + 2*F*n^4 - G*n^4 + 2976*n^4 + "
            "20*D*n^3 + 20*F*n^3 - 10*G*n^3 - 30240*n^3 + 10*D*n^2 - 14*F*n^2 + 7*G*n^2 - "
            "51456*n^2 - 200*D*n - 320*F*n + 160*G*n + 270720*n + 168*D + 312*F - 204*G - "
            "193536)";
        out.push_back(std::move(f));
    }
    {
        FamilySpec f = j8_base("J8.I.o", "exponents (3, 2): b-a-2 = 6, b+a+2 = -4", "p(x) = (1 - x)^2 (1 + x)^3");
        const std::string X5 =
            "5760 - G - 63360*x + 11*G*x - 63360*x^2 + G*x^2 + 274560*x^3 - 11*G*x^3 + "
            "F*(1 - 11*x - x^2 + 11*x^3) + D*(4 - 44*x - 4*x^2 + 44*x^3)";
        f.coeffExprs = {
            "G - 7*G*x",
            "2*G*x*(-1 + 4*x) + F*(1 + 2*x - 9*x^2)",
            "2*(F - G)*x^2*(-1 + 3*x) + D*(1 - 9*x - 9*x^2 + 33*x^3)",
            "(2880 - G + 11520*x - 4*G*x - 63360*x^2 + 22*G*x^2 - 42240*x^3 + 4*G*x^3 + "
            "137280*x^4 - 21*G*x^4 + 8*D*(1 + 2*x - 12*x^2 - 2*x^3 + 11*x^4) + F*(1 + 4*x "
            "- 22*x^2 - 4*x^3 + 21*x^4))/8",
            "((-1 + x^2)/40)*(" + X5 + ")",
            "((-1 + x^2)^2*(-8640 + G - 17280*x + 112320*x^2 - G*x^2 + 4*D*(-1 + x^2) + "
            "F*(-1 + x^2)))/120",
            "4*(-1 + 13*x)*(-1 + x^2)^3",
            "(1 - x^2)^4",
        };
        f.lambdaExpr =
            "(1/120)*n*(n+6)*(120*n^6 + 2160*n^5 + 4*D*n^4 + F*n^4 - G*n^4 + 6960*n^4 + "
            "48*D*n^3 + 12*F*n^3 - 12*G*n^3 - 46080*n^3 + 52*D*n^2 - 2*F*n^2 + 2*G*n^2 - "
            "128040*n^2 - 552*D*n - 228*F*n + 228*G*n + 527760*n + 448*D + 217*F - 337*G - "
            "362880)";
        out.push_back(std::move(f));
    }
    {
        FamilySpec f = j8_base("J8.I.p", "exponents (3, 3): b-a-2 = 6, b+a+2 = -6", "p(x) = (1 - x)^3 (1 + x)^3");
        f.coeffExprs = {
            "G*x",
            "F - (9*F + G)*x^2",
            "D*x - ((11*D - 2*(8*F + G))*x^3)/3",
            "(40320 + G - 887040*x^2 - 22*G*x^2 + 1921920*x^4 + 21*G*x^4 + D*(-8 + 96*x^2 "
            "- 88*x^4) + 8*F*(1 - 22*x^2 + 21*x^4))/80",
            "(x*(-1 + x^2)*(-80640 - G + 349440*x^2 + G*x^2 - 4*D*(-1 + x^2) + 8*F*(-1 + "
            "x^2)))/40",
            "((-1 + x^2)^2*(-120960 - G + 1572480*x^2 + G*x^2 - 4*D*(-1 + x^2) + 8*F*(-1 + "
            "x^2)))/1440",
            "56*x*(-1 + x^2)^3",
            "(1 - x^2)^4",
        };
        f.lambdaExpr =
            "(1/1440)*n*(n + 7)*(1440*n^6 + 30240*n^5 - 4*D*n^4 + 8*F*n^4 + G*n^4 + "
            "131040*n^4 - 56*D*n^3 + 112*F*n^3 + 14*G*n^3 - 635040*n^3 - 92*D*n^2 + "
            "40*F*n^2 + 5*G*n^2 - 2620800*n^2 + 728*D*n - 2464*F*n - 308*G*n + 9313920*n - "
            "576*D + 2304*F + 468*G - 6220800)";
        out.push_back(std::move(f));
    }
}

}  // namespace

void append_order8(std::vector<FamilySpec>& out) {
    append_h8_l8(out);
    append_j8_I(out);

    auto bound = [](const char* text, long limit) {
        return require(text, [limit](const Params& q) { return at(q, "a") < Rational(limit); });
    };

    // --- left exponent fixed, right exponent free -------------------------
    {
        FamilySpec f = j8_base("J8.II.a", "left exponent 0, right exponent -2-a",
                               "p(x) = (1 - x)^(-2-a)");
        f.paramNames = {"a", "D", "F", "G"};
        f.constraints = {bound("a < -5", -5)};
        const std::string den = "(2 + a)*(24 - 50*a + 35*a^2 - 10*a^3 + a^4)";
        const std::string X6 =
            "-576 + 2352*a - 2232*a^2 - 36*a^3 + 666*a^4 - 162*a^5 - 18*a^6 + 6*a^7 - 2*D "
            "+ a*D + a^2*D - 2*F + a*F - 5760*x + 7392*a*x + 912*a^2*x - 3432*a^3*x + "
            "660*a^4*x + 348*a^5*x - 132*a^6*x + 12*a^7*x + 8640*x^2 - 16848*a*x^2 + "
            "8904*a^2*x^2 + 924*a^3*x^2 - 2310*a^4*x^2 + 798*a^5*x^2 - 114*a^6*x^2 + "
            "6*a^7*x^2 + 2*D*x^2 - a*D*x^2 - a^2*D*x^2 + 2*F*x^2 - a*F*x^2";
        const std::string X5 =
            "4608 - 7680*a + 800*a^2 + 3824*a^3 - 1304*a^4 - 460*a^5 + 220*a^6 - 4*a^7 - "
            "4*a^8 + 12*D - 9*a^2*D - 3*a^3*D + 12*F - 3*a^2*F - 4608*x + 19968*a*x - "
            "22560*a^2*x + 4176*a^3*x + 5400*a^4*x - 2628*a^5*x + 180*a^6*x + 84*a^7*x - "
            "12*a^8*x - 24*D*x + 18*a*D*x + 9*a^2*D*x - 3*a^3*D*x - 24*F*x + 18*a*F*x - "
            "3*a^2*F*x - 23040*x^2 + 35328*a*x^2 - 3744*a^2*x^2 - 14640*a^3*x^2 + "
            "6072*a^4*x^2 + 732*a^5*x^2 - 876*a^6*x^2 + 180*a^7*x^2 - 12*a^8*x^2 - "
            "12*D*x^2 + 9*a^2*D*x^2 + 3*a^3*D*x^2 - 12*F*x^2 + 3*a^2*F*x^2 + 23040*x^3 - "
            "50688*a*x^3 + 34976*a^2*x^3 - 3472*a^3*x^3 - 6776*a^4*x^3 + 3668*a^5*x^3 - "
            "836*a^6*x^3 + 92*a^7*x^3 - 4*a^8*x^3 + 24*D*x^3 - 18*a*D*x^3 - 9*a^2*D*x^3 + "
            "3*a^3*D*x^3 + 24*F*x^3 - 18*a*F*x^3 + 3*a^2*F*x^3";
        const std::string X4 =
            "-2304 - 4608*a + 14320*a^2 - 6312*a^3 - 3308*a^4 + 2426*a^5 - 80*a^6 - "
            "148*a^7 + 12*a^8 + 2*a^9 - 60*a*D + 18*a^2*D + 36*a^3*D + 6*a^4*D - 24*F - "
            "34*a*F + 9*a^2*F + 7*a^3*F + 27648*x - 55296*a*x + 20160*a^2*x + 21344*a^3*x "
            "- 15472*a^4*x - 152*a^5*x + 2240*a^6*x - 464*a^7*x - 16*a^8*x + 8*a^9*x + "
            "144*D*x - 48*a*D*x - 108*a^2*D*x + 12*a^4*D*x + 144*F*x - 48*a*F*x - "
            "36*a^2*F*x + 12*a^3*F*x - 13824*x^2 + 64512*a*x^2 - 87648*a^2*x^2 + "
            "35088*a^3*x^2 + 12024*a^4*x^2 - 13284*a^5*x^2 + 3168*a^6*x^2 + 72*a^7*x^2 - "
            "120*a^8*x^2 + 12*a^9*x^2 - 144*D*x^2 + 216*a*D*x^2 - 72*a^3*D*x^2 - 96*F*x^2 "
            "+ 164*a*F*x^2 - 54*a^2*F*x^2 - 2*a^3*F*x^2 - 46080*x^3 + 86016*a*x^3 - "
            "31040*a^2*x^3 - 26784*a^3*x^3 + 21904*a^4*x^3 - 2584*a^5*x^3 - 2240*a^6*x^3 + "
            "944*a^7*x^3 - 144*a^8*x^3 + 8*a^9*x^3 - 144*D*x^3 + 48*a*D*x^3 + "
            "108*a^2*D*x^3 - 12*a^4*D*x^3 - 144*F*x^3 + 48*a*F*x^3 + 36*a^2*F*x^3 - "
            "12*a^3*F*x^3 + 34560*x^4 - 87552*a*x^4 + 77808*a^2*x^4 - 22696*a^3*x^4 - "
            "8428*a^4*x^4 + 8890*a^5*x^4 - 3088*a^6*x^4 + 556*a^7*x^4 - 52*a^8*x^4 + "
            "2*a^9*x^4 + 144*D*x^4 - 156*a*D*x^4 - 18*a^2*D*x^4 + 36*a^3*D*x^4 - "
            "6*a^4*D*x^4 + 120*F*x^4 - 130*a*F*x^4 + 45*a^2*F*x^4 - 5*a^3*F*x^4";
        const std::string X3 =
            "24*D - 28*a*D - 22*a^2*D + 15*a^3*D + 10*a^4*D + a^5*D - 24*F - 2*a^2*F + "
            "2*a^4*F + 60*a*D*x - 48*a^2*D*x - 27*a^3*D*x + 12*a^4*D*x + 3*a^5*D*x + "
            "48*F*x - 16*a*F*x - 4*a^2*F*x - 8*a^3*F*x + 4*a^4*F*x - 72*D*x^2 + 60*a*D*x^2 "
            "+ 42*a^2*D*x^2 - 27*a^3*D*x^2 - 6*a^4*D*x^2 + 3*a^5*D*x^2 - 24*F*x^2 + "
            "32*a*F*x^2 - 2*a^2*F*x^2 - 8*a^3*F*x^2 + 2*a^4*F*x^2 + 48*D*x^3 - 76*a*D*x^3 "
            "+ 20*a^2*D*x^3 + 15*a^3*D*x^3 - 8*a^4*D*x^3 + a^5*D*x^3";
        const std::string X2 =
            "2*a*F + 5*a^2*F + a^3*F - 4*G + 2*a*G + 2*a^2*G - 4*a*F*x + 2*a^2*F*x + "
            "2*a^3*F*x + 2*a*F*x^2 - 3*a^2*F*x^2 + a^3*F*x^2 + 4*G*x^2 - 2*a*G*x^2 - "
            "2*a^2*G*x^2";
        f.coeffExprs = {
            "G*(2 + a + a*x)/a",
            "(" + X2 + ")/(2*a*(-2 + a + a^2))",
            "(" + X3 + ")/(48 - 76*a + 20*a^2 + 15*a^3 - 8*a^4 + a^5)",
            "(" + X4 + ")/(2*" + den + ")",
            "((-1 + x^2)*(" + X5 + "))/(" + den + ")",
            "((-1 + x^2)^2*(" + X6 + "))/(" + den + ")",
            "-4*(2 + a - 6*x + a*x)*(-1 + x^2)^3",
            "(1 - x^2)^4",
        };
        f.lambdaExpr =
            "(n*(-a + n - 1))/(2*(a - 4)*(a - 3)*(a - 2)*(a - 1)*a*(a + 2)) * "
            "(-2*n^3*a^9 + 12*n^2*a^9 - 22*n*a^9 + 12*a^9 + 6*n^4*a^8 - 14*n^3*a^8 - "
            "66*n^2*a^8 + 206*n*a^8 - 132*a^8 - 6*n^5*a^7 - 24*n^4*a^7 + 212*n^3*a^7 - "
            "132*n^2*a^7 - 542*n*a^7 + 492*a^7 + 2*n^6*a^6 + 42*n^5*a^6 - 112*n^4*a^6 - "
            "476*n^3*a^6 + 1274*n^2*a^6 - 238*n*a^6 - 492*a^6 - 16*n^6*a^5 - 42*n^5*a^5 + "
            "560*n^4*a^5 - 658*n^3*a^5 - 2*D*n^2*a^5 - 1456*n^2*a^5 - 4*D*a^5 + F*a^5 - "
            "2*G*a^5 + 6*D*n*a^5 - F*n*a^5 + 2884*n*a^5 - 1272*a^5 + 30*n^6*a^4 - "
            "210*n^5*a^4 - 126*n^4*a^4 + 4*D*n^3*a^4 + 2674*n^3*a^4 - 12*D*n^2*a^4 - "
            "F*n^2*a^4 - 3024*n^2*a^4 - 13*F*a^4 + 16*G*a^4 + 8*D*n*a^4 + 14*F*n*a^4 - "
            "3136*n*a^4 + 3792*a^4 + 40*n^6*a^3 + 336*n^5*a^3 - 2*D*n^4*a^3 - 1736*n^4*a^3 "
            "+ 8*D*n^3*a^3 + 4*F*n^3*a^3 - 992*n^3*a^3 - 4*D*n^2*a^3 - 15*F*n^2*a^3 + "
            "7072*n^2*a^3 + 12*D*a^3 + 38*F*a^3 - 30*G*a^3 - 14*D*n*a^3 - 27*F*n*a^3 - "
            "1168*n*a^3 - 3552*a^3 - 152*n^6*a^2 + 168*n^5*a^2 - 2*D*n^4*a^2 - 2*F*n^4*a^2 "
            "+ 1912*n^4*a^2 - 4*D*n^3*a^2 - 4*F*n^3*a^2 - 2184*n^3*a^2 + 22*D*n^2*a^2 + "
            "48*F*n^2*a^2 - 4064*n^2*a^2 - 8*D*a^2 - 32*F*a^2 - 40*G*a^2 - 8*D*n*a^2 - "
            "10*F*n*a^2 + 3168*n*a^2 + 1152*a^2 + 96*n^6*a - 288*n^5*a + 4*D*n^4*a + "
            "4*F*n^4*a - 480*n^4*a - 8*D*n^3*a - 8*F*n^3*a + 1440*n^3*a - 4*D*n^2*a - "
            "28*F*n^2*a + 384*n^2*a + 152*G*a + 8*D*n*a + 32*F*n*a - 1152*n*a - 96*G)";
        out.push_back(std::move(f));
    }
    {
        FamilySpec f = j8_base("J8.II.b", "left exponent 1, right exponent -3-a",
                               "p(x) = (1 - x)^(-3-a) (1 + x)");
        f.paramNames = {"a", "D", "F", "G"};
        f.constraints = {bound("a < -6", -6)};
        const std::string den = "-96 + 176*a - 90*a^2 + 5*a^3 + 6*a^4 - a^5";
        const std::string X6 =
            "-5760 + 5376*a + 3528*a^2 - 3504*a^3 + 90*a^4 + 294*a^5 - 18*a^6 - 6*a^7 + "
            "4*D - 3*a*D - a^2*D + 2*F - a*F + 23040*x - 41088*a*x + 18336*a^2*x + "
            "1992*a^3*x - 2580*a^4*x + 228*a^5*x + 84*a^6*x - 12*a^7*x - 17280*x^2 + "
            "38016*a*x^2 - 28392*a^2*x^2 + 7896*a^3*x^2 + 210*a^4*x^2 - 546*a^5*x^2 + "
            "102*a^6*x^2 - 6*a^7*x^2 - 4*D*x^2 + 3*a*D*x^2 + a^2*D*x^2 - 2*F*x^2 + "
            "a*F*x^2";
        const std::string X5 =
            "16896*a - 25216*a^2 + 5664*a^3 + 3816*a^4 - 996*a^5 - 204*a^6 + 36*a^7 + "
            "4*a^8 - 48*D + 24*a*D + 21*a^2*D + 3*a^3*D - 24*F + 6*a*F + 3*a^2*F - "
            "46080*x + 54528*a*x + 17472*a^2*x - 35088*a^3*x + 7728*a^4*x + 2172*a^5*x - "
            "732*a^6*x - 12*a^7*x + 12*a^8*x + 48*D*x - 48*a*D*x - 3*a^2*D*x + 3*a^3*D*x + "
            "24*F*x - 18*a*F*x + 3*a^2*F*x + 92160*x^2 - 187392*a*x^2 + 114432*a^2*x^2 - "
            "10368*a^3*x^2 - 12312*a^4*x^2 + 3492*a^5*x^2 + 108*a^6*x^2 - 132*a^7*x^2 + "
            "12*a^8*x^2 + 48*D*x^2 - 24*a*D*x^2 - 21*a^2*D*x^2 - 3*a^3*D*x^2 + 24*F*x^2 - "
            "6*a*F*x^2 - 3*a^2*F*x^2 - 46080*x^3 + 112896*a*x^3 - 101056*a^2*x^3 + "
            "39984*a^3*x^3 - 4704*a^4*x^3 - 1596*a^5*x^3 + 636*a^6*x^3 - 84*a^7*x^3 + "
            "4*a^8*x^3 - 48*D*x^3 + 48*a*D*x^3 + 3*a^2*D*x^3 - 3*a^3*D*x^3 - 24*F*x^3 + "
            "18*a*F*x^3 - 3*a^2*F*x^3";
        const std::string X4 =
            "23040 - 61056*a + 33248*a^2 + 18824*a^3 - 14328*a^4 - 1002*a^5 + 1272*a^6 + "
            "36*a^7 - 32*a^8 - 2*a^9 + 288*D - 210*a^2*D - 72*a^3*D - 6*a^4*D + 168*F + "
            "10*a*F - 33*a^2*F - 7*a^3*F + 101376*a*x - 185088*a^2*x + 84416*a^3*x + "
            "11568*a^4*x - 13608*a^5*x + 768*a^6*x + 624*a^7*x - 48*a^8*x - 8*a^9*x - "
            "576*D*x + 480*a*D*x + 156*a^2*D*x - 48*a^3*D*x - 12*a^4*D*x - 288*F*x + "
            "168*a*F*x + 12*a^2*F*x - 12*a^3*F*x - 138240*x^2 + 209664*a*x^2 - "
            "2112*a^2*x^2 - 122736*a^3*x^2 + 58272*a^4*x^2 - 1212*a^5*x^2 - 4368*a^6*x^2 + "
            "696*a^7*x^2 + 48*a^8*x^2 - 12*a^9*x^2 - 384*a*D*x^2 + 288*a^2*D*x^2 + "
            "96*a^3*D*x^2 - 48*F*x^2 - 140*a*F*x^2 + 78*a^2*F*x^2 + 2*a^3*F*x^2 + "
            "184320*x^3 - 436224*a*x^3 + 353792*a^2*x^3 - 97024*a^3*x^3 - 17712*a^4*x^3 + "
            "15192*a^5*x^3 - 2112*a^6*x^3 - 336*a^7*x^3 + 112*a^8*x^3 - 8*a^9*x^3 + "
            "576*D*x^3 - 480*a*D*x^3 - 156*a^2*D*x^3 + 48*a^3*D*x^3 + 12*a^4*D*x^3 + "
            "288*F*x^3 - 168*a*F*x^3 - 12*a^2*F*x^3 + 12*a^3*F*x^3 - 69120*x^4 + "
            "192384*a*x^4 - 208032*a^2*x^4 + 110504*a^3*x^4 - 27048*a^4*x^4 - 42*a^5*x^4 + "
            "1752*a^6*x^4 - 444*a^7*x^4 + 48*a^8*x^4 - 2*a^9*x^4 - 288*D*x^4 + 384*a*D*x^4 "
            "- 78*a^2*D*x^4 - 24*a^3*D*x^4 + 6*a^4*D*x^4 - 120*F*x^4 + 130*a*F*x^4 - "
            "45*a^2*F*x^4 + 5*a^3*F*x^4";
        const std::string X3 =
            "-96*D - 128*a*D + 114*a^2*D + 91*a^3*D + 18*a^4*D + a^5*D - 144*F + 4*a*F + "
            "10*a^2*F + 8*a^3*F + 2*a^4*F + 288*D*x - 144*a*D*x - 210*a^2*D*x + 33*a^3*D*x "
            "+ 30*a^4*D*x + 3*a^5*D*x + 192*F*x - 112*a*F*x - 16*a^2*F*x + 4*a^3*F*x + "
            "4*a^4*F*x - 288*D*x^2 + 384*a*D*x^2 - 42*a^2*D*x^2 - 63*a^3*D*x^2 + "
            "6*a^4*D*x^2 + 3*a^5*D*x^2 - 48*F*x^2 + 76*a*F*x^2 - 26*a^2*F*x^2 - "
            "4*a^3*F*x^2 + 2*a^4*F*x^2 + 96*D*x^3 - 176*a*D*x^3 + 90*a^2*D*x^3 - "
            "5*a^3*D*x^3 - 6*a^4*D*x^3 + a^5*D*x^3";
        const std::string X2 =
            "14*a*F + 9*a^2*F + a^3*F - 8*G + 6*a*G + 2*a^2*G - 8*a*F*x + 6*a^2*F*x + "
            "2*a^3*F*x + 2*a*F*x^2 - 3*a^2*F*x^2 + a^3*F*x^2 + 8*G*x^2 - 6*a*G*x^2 - "
            "2*a^2*G*x^2";
        f.coeffExprs = {
            "G*(4 + a + a*x)/a",
            "(" + X2 + ")/(2*a*(-4 + 3*a + a^2))",
            "(" + X3 + ")/(96 - 176*a + 90*a^2 - 5*a^3 - 6*a^4 + a^5)",
            "(" + X4 + ")/(2*(" + den + "))",
            "((-1 + x^2)*(" + X5 + "))/(" + den + ")",
            "((-1 + x^2)^2*(" + X6 + "))/(" + den + ")",
            "-4*(4 + a - 6*x + a*x)*(-1 + x^2)^3",
            "(1 - x^2)^4",
        };
        f.lambdaExpr =
            "(n*(-a + n - 1))/(2*(a - 4)*(a - 3)*(a - 2)*(a - 1)*a*(a + 4)) * "
            "(-2*n^3*a^9 + 12*n^2*a^9 - 22*n*a^9 + 12*a^9 + 6*n^4*a^8 - 18*n^3*a^8 - "
            "42*n^2*a^8 + 162*n*a^8 - 108*a^8 - 6*n^5*a^7 - 12*n^4*a^7 + 192*n^3*a^7 - "
            "312*n^2*a^7 - 42*n*a^7 + 180*a^7 + 2*n^6*a^6 + 30*n^5*a^6 - 184*n^4*a^6 - "
            "12*n^3*a^6 + 1370*n^2*a^6 - 2322*n*a^6 + 1116*a^6 - 12*n^6*a^5 + 66*n^5*a^5 + "
            "480*n^4*a^5 - 2538*n^3*a^5 - 2*D*n^2*a^5 + 900*n^2*a^5 - 4*D*a^5 + F*a^5 - "
            "2*G*a^5 + 6*D*n*a^5 - F*n*a^5 + 6576*n*a^5 - 5472*a^5 - 10*n^6*a^4 - "
            "510*n^5*a^4 + 1154*n^4*a^4 + 4*D*n^3*a^4 + 5118*n^3*a^4 - 16*D*n^2*a^4 - "
            "F*n^2*a^4 - 10648*n^2*a^4 - 8*D*a^4 - 13*F*a^4 + 12*G*a^4 + 20*D*n*a^4 + "
            "14*F*n*a^4 - 4752*n*a^4 + 9648*a^4 + 180*n^6*a^3 + 516*n^5*a^3 - 2*D*n^4*a^3 "
            "- 4548*n^4*a^3 + 16*D*n^3*a^3 + 4*F*n^3*a^3 - 532*n^3*a^3 - 20*D*n^2*a^3 - "
            "15*F*n^2*a^3 + 16272*n^2*a^3 + 28*D*a^3 + 38*F*a^3 + 10*G*a^3 - 22*D*n*a^3 - "
            "27*F*n*a^3 - 4208*n*a^3 - 7680*a^3 - 352*n^6*a^2 + 480*n^5*a^2 - 6*D*n^4*a^2 "
            "- 2*F*n^4*a^2 + 4064*n^4*a^2 - 4*D*n^3*a^2 - 4*F*n^3*a^2 - 5088*n^3*a^2 + "
            "46*D*n^2*a^2 + 48*F*n^2*a^2 - 8320*n^2*a^2 - 16*D*a^2 - 32*F*a^2 - 180*G*a^2 "
            "- 20*D*n*a^2 - 10*F*n*a^2 + 6912*n*a^2 + 2304*a^2 + 192*n^6*a - 576*n^5*a + "
            "8*D*n^4*a + 4*F*n^4*a - 960*n^4*a - 16*D*n^3*a - 8*F*n^3*a + 2880*n^3*a - "
            "8*D*n^2*a - 28*F*n^2*a + 768*n^2*a + 352*G*a + 16*D*n*a + 32*F*n*a - "
            "2304*n*a - 192*G)";
        out.push_back(std::move(f));
    }
    {
        FamilySpec f = j8_base("J8.II.c", "left exponent 2, right exponent -4-a",
                               "p(x) = (1 - x)^(-4-a) (1 + x)^2");
        f.paramNames = {"a", "D", "F", "G"};
        f.constraints = {bound("a < -7", -7)};
        const std::string den = "-36 + 60*a - 25*a^2 + a^4";
        const std::string X6 =
            "-19440 + 23976*a - 108*a^2 - 4770*a^3 + 90*a^4 + 234*a^5 + 18*a^6 - D + a*D + "
            "F + 38880*x - 66096*a*x + 27864*a^2*x + 1260*a^3*x - 1980*a^4*x + 36*a^5*x + "
            "36*a^6*x - 19440*x^2 + 39528*a*x^2 - 26028*a^2*x^2 + 6030*a^3*x^2 + "
            "90*a^4*x^2 - 198*a^5*x^2 + 18*a^6*x^2 + D*x^2 - a*D*x^2 - F*x^2";
        const std::string X5 =
            "17280 - 12960*a - 11376*a^2 + 6104*a^3 + 1380*a^4 - 340*a^5 - 84*a^6 - 4*a^7 "
            "+ 6*D - 5*a*D - a^2*D - 6*F - a*F - 51840*x + 76896*a*x - 16272*a^2*x - "
            "12648*a^3*x + 3420*a^4*x + 564*a^5*x - 108*a^6*x - 12*a^7*x - 4*D*x + 5*a*D*x "
            "- a^2*D*x + 4*F*x - a*F*x + 51840*x^2 - 101088*a*x^2 + 59184*a^2*x^2 - "
            "7608*a^3*x^2 - 3060*a^4*x^2 + 708*a^5*x^2 + 36*a^6*x^2 - 12*a^7*x^2 - 6*D*x^2 "
            "+ 5*a*D*x^2 + a^2*D*x^2 + 6*F*x^2 + a*F*x^2 - 17280*x^3 + 39456*a*x^3 - "
            "31920*a^2*x^3 + 11144*a^3*x^3 - 1260*a^4*x^3 - 196*a^5*x^3 + 60*a^6*x^3 - "
            "4*a^7*x^3 + 4*D*x^3 - 5*a*D*x^3 + a^2*D*x^3 - 4*F*x^3 + a*F*x^3";
        const std::string X4 =
            "-25920 - 8208*a + 48744*a^2 - 6300*a^3 - 8902*a^4 + 48*a^5 + 476*a^6 + "
            "60*a^7 + 2*a^8 - 64*D + 38*a*D + 24*a^2*D + 2*a^3*D + 70*F + 21*a*F + 3*a^2*F "
            "+ 103680*x - 112320*a*x - 42336*a^2*x + 59376*a^3*x - 3928*a^4*x - "
            "4800*a^5*x + 176*a^6*x + 144*a^7*x + 8*a^8*x + 72*D*x - 84*a*D*x + 8*a^2*D*x "
            "+ 4*a^3*D*x - 72*F*x + 12*a*F*x + 4*a^2*F*x - 155520*x^2 + 282528*a*x^2 - "
            "125712*a^2*x^2 - 21672*a^3*x^2 + 22908*a^4*x^2 - 1728*a^5*x^2 - 888*a^6*x^2 + "
            "72*a^7*x^2 + 12*a^8*x^2 + 40*D*x^2 - 40*a^2*D*x^2 - 52*F*x^2 - 30*a*F*x^2 - "
            "2*a^2*F*x^2 + 103680*x^3 - 236736*a*x^3 + 185760*a^2*x^3 - 54672*a^3*x^3 - "
            "1048*a^4*x^3 + 3456*a^5*x^3 - 400*a^6*x^3 - 48*a^7*x^3 + 8*a^8*x^3 - 72*D*x^3 "
            "+ 84*a*D*x^3 - 8*a^2*D*x^3 - 4*a^3*D*x^3 + 72*F*x^3 - 12*a*F*x^3 - "
            "4*a^2*F*x^3 - 25920*x^4 + 67824*a*x^4 - 67608*a^2*x^4 + 32676*a^3*x^4 - "
            "7462*a^4*x^4 + 336*a^5*x^4 + 188*a^6*x^4 - 36*a^7*x^4 + 2*a^8*x^4 + 24*D*x^4 "
            "- 38*a*D*x^4 + 16*a^2*D*x^4 - 2*a^3*D*x^4 - 18*F*x^4 + 9*a*F*x^4 - a^2*F*x^4";
        const std::string X3 =
            "-156*D + 40*a*D + 95*a^2*D + 20*a^3*D + a^4*D + 264*F + 44*a*F + 24*a^2*F + "
            "4*a^3*F + 192*D*x - 210*a*D*x - 15*a^2*D*x + 30*a^3*D*x + 3*a^4*D*x - 228*F*x "
            "+ 66*a*F*x + 12*a^2*F*x + 6*a^3*F*x - 108*D*x^2 + 180*a*D*x^2 - 75*a^2*D*x^2 "
            "+ 3*a^4*D*x^2 + 24*D*x^3 - 50*a*D*x^3 + 35*a^2*D*x^3 - 10*a^3*D*x^3 + "
            "a^4*D*x^3 + 12*F*x^3 - 22*a*F*x^3 + 12*a^2*F*x^3 - 2*a^3*F*x^3";
        const std::string X2 =
            "34*a*F + 13*a^2*F + a^3*F - 12*G + 10*a*G + 2*a^2*G - 12*a*F*x + 10*a^2*F*x + "
            "2*a^3*F*x + 2*a*F*x^2 - 3*a^2*F*x^2 + a^3*F*x^2 + 12*G*x^2 - 10*a*G*x^2 - "
            "2*a^2*G*x^2";
        f.coeffExprs = {
            "G*(6 + a + a*x)/a",
            "(" + X2 + ")/(2*a*(-6 + 5*a + a^2))",
            "(" + X3 + ")/(3*(" + den + "))",
            "(" + X4 + ")/(2*(" + den + "))",
            "((-1 + x^2)*(" + X5 + "))/(" + den + ")",
            "((-1 + x^2)^2*(" + X6 + "))/(3*(" + den + "))",
            "-4*(6 + a - 6*x + a*x)*(-1 + x^2)^3",
            "(1 - x^2)^4",
        };
        f.lambdaExpr =
            "(n*(-a + n - 1))/(6*(a - 3)*(a - 2)*(a - 1)*a*(a + 6)) * "
            "(-6*n^3*a^8 + 36*n^2*a^8 - 66*n*a^8 + 36*a^8 + 18*n^4*a^7 - 90*n^3*a^7 + "
            "90*n^2*a^7 + 90*n*a^7 - 108*a^7 - 18*n^5*a^6 + 72*n^4*a^6 + 156*n^3*a^6 - "
            "1116*n^2*a^6 + 1734*n*a^6 - 828*a^6 + 6*n^6*a^5 - 18*n^5*a^5 - 480*n^4*a^5 + "
            "1980*n^3*a^5 - 66*n^2*a^5 - 6282*n*a^5 + 4860*a^5 + 450*n^5*a^4 - 720*n^4*a^4 "
            "- 5334*n^3*a^4 - 2*D*n^2*a^4 + 9504*n^2*a^4 - 4*D*a^4 + 3*F*a^4 - 6*G*a^4 + "
            "6*D*n*a^4 - 3*F*n*a^4 + 5676*n*a^4 - 9576*a^4 - 150*n^6*a^3 - 630*n^5*a^3 + "
            "4422*n^4*a^3 + 4*D*n^3*a^3 + 1350*n^3*a^3 - 8*D*n^2*a^3 + F*n^2*a^3 - "
            "16800*n^2*a^3 + 8*D*a^3 - 19*F*a^3 - 4*D*n*a^3 + 18*F*n*a^3 + 3600*n*a^3 + "
            "8208*a^3 + 360*n^6*a^2 - 432*n^5*a^2 - 2*D*n^4*a^2 - 4392*n^4*a^2 + "
            "4*F*n^3*a^2 + 5184*n^3*a^2 + 12*D*n^2*a^2 - 25*F*n^2*a^2 + 9216*n^2*a^2 - "
            "4*D*a^2 + 22*F*a^2 + 150*G*a^2 - 6*D*n*a^2 - F*n*a^2 - 7344*n*a^2 - 2592*a^2 "
            "- 216*n^6*a + 648*n^5*a + 2*D*n^4*a - 2*F*n^4*a + 1080*n^4*a - 4*D*n^3*a + "
            "4*F*n^3*a - 3240*n^3*a - 2*D*n^2*a + 20*F*n^2*a - 864*n^2*a - 360*G*a + "
            "4*D*n*a - 22*F*n*a + 2592*n*a + 216*G)";
        out.push_back(std::move(f));
    }
    {
        // The -22 F n a coefficient in this lambda is pinned by the
        // operator's matrix diagonal and by the x -> -x mirror entry.
        FamilySpec f = j8_base("J8.II.d", "left exponent 3, right exponent -5-a",
                               "p(x) = (1 - x)^(-5-a) (1 + x)^3");
        f.paramNames = {"a", "D", "F", "G"};
        f.constraints = {bound("a < -8", -8)};
        const std::string den = "-48 + 82*a - 37*a^2 + 2*a^3 + a^4";
        const std::string X6 =
            "-50112 + 70920*a - 14400*a^2 - 7758*a^3 + 990*a^4 + 342*a^5 + 18*a^6 - D + "
            "a*D + F + 69120*x - 123264*a*x + 60408*a^2*x - 3924*a^3*x - 2556*a^4*x + "
            "180*a^5*x + 36*a^6*x - 25920*x^2 + 53784*a*x^2 - 37080*a^2*x^2 + "
            "9882*a^3*x^2 - 522*a^4*x^2 - 162*a^5*x^2 + 18*a^6*x^2 + D*x^2 - a*D*x^2 - "
            "F*x^2";
        const std::string X5 =
            "73728 - 87552*a - 3584*a^2 + 17864*a^3 + 532*a^4 - 868*a^5 - 116*a^6 - 4*a^7 "
            "+ 8*D - 7*a*D - a^2*D - 8*F - a*F - 133632*x + 222528*a*x - 85680*a^2*x - "
            "11088*a^3*x + 7812*a^4*x + 252*a^5*x - 180*a^6*x - 12*a^7*x - 4*D*x + "
            "5*a*D*x - a^2*D*x + 4*F*x - a*F*x + 92160*x^2 - 187392*a*x^2 + "
            "121632*a^2*x^2 - 25368*a^3*x^2 - 2100*a^4*x^2 + 1092*a^5*x^2 - 12*a^6*x^2 - "
            "12*a^7*x^2 - 8*D*x^2 + 7*a*D*x^2 + a^2*D*x^2 + 8*F*x^2 + a*F*x^2 - 23040*x^3 "
            "+ 53568*a*x^3 - 44912*a^2*x^3 + 17024*a^3*x^3 - 2660*a^4*x^3 - 28*a^5*x^3 + "
            "52*a^6*x^3 - 4*a^7*x^3 + 4*D*x^3 - 5*a*D*x^3 + a^2*D*x^3 - 4*F*x^3 + a*F*x^3";
        const std::string X4 =
            "-228096 + 202080*a + 100952*a^2 - 64120*a^3 - 14966*a^4 + 3080*a^5 + "
            "988*a^6 + 80*a^7 + 2*a^8 - 120*D + 86*a*D + 32*a^2*D + 2*a^3*D + 126*F + "
            "29*a*F + 3*a^2*F + 442368*x - 672768*a*x + 153600*a^2*x + 114352*a^3*x - "
            "32536*a^4*x - 6272*a^5*x + 1040*a^6*x + 208*a^7*x + 8*a^8*x + 96*D*x - "
            "116*a*D*x + 16*a^2*D*x + 4*a^3*D*x - 96*F*x + 20*a*F*x + 4*a^2*F*x - "
            "400896*x^2 + 801216*a*x^2 - 479568*a^2*x^2 + 52416*a^3*x^2 + 34524*a^4*x^2 - "
            "7056*a^5*x^2 - 792*a^6*x^2 + 144*a^7*x^2 + 12*a^8*x^2 + 96*D*x^2 - 48*a*D*x^2 "
            "- 48*a^2*D*x^2 - 108*F*x^2 - 38*a*F*x^2 - 2*a^2*F*x^2 + 184320*x^3 - "
            "436224*a*x^3 + 368192*a^2*x^3 - 131824*a^3*x^3 + 12712*a^4*x^3 + "
            "3584*a^5*x^3 - 752*a^6*x^3 - 16*a^7*x^3 + 8*a^8*x^3 - 96*D*x^3 + 116*a*D*x^3 "
            "- 16*a^2*D*x^3 - 4*a^3*D*x^3 + 96*F*x^3 - 20*a*F*x^3 - 4*a^2*F*x^3 - "
            "34560*x^4 + 91872*a*x^4 - 94152*a^2*x^4 + 47992*a^3*x^4 - 12502*a^4*x^4 + "
            "1288*a^5*x^4 + 92*a^6*x^4 - 32*a^7*x^4 + 2*a^8*x^4 + 24*D*x^4 - 38*a*D*x^4 + "
            "16*a^2*D*x^4 - 2*a^3*D*x^4 - 18*F*x^4 + 9*a*F*x^4 - a^2*F*x^4";
        const std::string X3 =
            "-432*D + 226*a*D + 179*a^2*D + 26*a^3*D + a^4*D + 576*F + 104*a*F + 36*a^2*F "
            "+ 4*a^3*F + 360*D*x - 438*a*D*x + 33*a^2*D*x + 42*a^3*D*x + 3*a^4*D*x - "
            "396*F*x + 126*a*F*x + 24*a^2*F*x + 6*a^3*F*x - 144*D*x^2 + 246*a*D*x^2 - "
            "111*a^2*D*x^2 + 6*a^3*D*x^2 + 3*a^4*D*x^2 + 24*D*x^3 - 50*a*D*x^3 + "
            "35*a^2*D*x^3 - 10*a^3*D*x^3 + a^4*D*x^3 + 12*F*x^3 - 22*a*F*x^3 + "
            "12*a^2*F*x^3 - 2*a^3*F*x^3";
        const std::string X2 =
            "62*a*F + 17*a^2*F + a^3*F - 16*G + 14*a*G + 2*a^2*G - 16*a*F*x + 14*a^2*F*x + "
            "2*a^3*F*x + 2*a*F*x^2 - 3*a^2*F*x^2 + a^3*F*x^2 + 16*G*x^2 - 14*a*G*x^2 - "
            "2*a^2*G*x^2";
        f.coeffExprs = {
            "G*(8 + a + a*x)/a",
            "(" + X2 + ")/(2*a*(-8 + 7*a + a^2))",
            "(" + X3 + ")/(3*(" + den + "))",
            "(" + X4 + ")/(2*(" + den + "))",
            "((-1 + x^2)*(" + X5 + "))/(" + den + ")",
            "((-1 + x^2)^2*(" + X6 + "))/(3*(" + den + "))",
            "-4*(8 + a - 6*x + a*x)*(-1 + x^2)^3",
            "(1 - x^2)^4",
        };
        f.lambdaExpr =
            "(n*(-a + n - 1))/(6*(a - 3)*(a - 2)*(a - 1)*a*(a + 8)) * "
            "(-6*n^3*a^8 + 36*n^2*a^8 - 66*n*a^8 + 36*a^8 + 18*n^4*a^7 - 102*n^3*a^7 + "
            "162*n^2*a^7 - 42*n*a^7 - 36*a^7 - 18*n^5*a^6 + 108*n^4*a^6 + 48*n^3*a^6 - "
            "1368*n^2*a^6 + 2706*n*a^6 - 1476*a^6 + 6*n^6*a^5 - 54*n^5*a^5 - 552*n^4*a^5 + "
            "2940*n^3*a^5 - 786*n^2*a^5 - 8646*n*a^5 + 7092*a^5 + 12*n^6*a^4 + "
            "630*n^5*a^4 - 1248*n^4*a^4 - 7134*n^3*a^4 - 2*D*n^2*a^4 + 13692*n^2*a^4 - "
            "4*D*a^4 + 3*F*a^4 - 6*G*a^4 + 6*D*n*a^4 - 3*F*n*a^4 + 7296*n*a^4 - 13248*a^4 "
            "- 222*n^6*a^3 - 810*n^5*a^3 + 6150*n^4*a^3 + 4*D*n^3*a^3 + 1482*n^3*a^3 - "
            "8*D*n^2*a^3 + F*n^2*a^3 - 22920*n^2*a^3 + 8*D*a^3 - 19*F*a^3 - 12*G*a^3 - "
            "4*D*n*a^3 + 18*F*n*a^3 + 5232*n*a^3 + 11088*a^3 + 492*n^6*a^2 - 612*n^5*a^2 - "
            "2*D*n^4*a^2 - 5916*n^4*a^2 + 4*F*n^3*a^2 + 7092*n^3*a^2 + 12*D*n^2*a^2 - "
            "25*F*n^2*a^2 + 12336*n^2*a^2 - 4*D*a^2 + 22*F*a^2 + 222*G*a^2 - 6*D*n*a^2 - "
            "F*n*a^2 - 9936*n*a^2 - 3456*a^2 - 288*n^6*a + 864*n^5*a + 2*D*n^4*a - "
            "2*F*n^4*a + 1440*n^4*a - 4*D*n^3*a + 4*F*n^3*a - 4320*n^3*a - 2*D*n^2*a + "
            "20*F*n^2*a - 1152*n^2*a - 492*G*a + 4*D*n*a - 22*F*n*a + 3456*n*a + 288*G)";
        out.push_back(std::move(f));
    }

    // --- right exponent fixed, left exponent free (mirror block) ----------
    {
        FamilySpec f = j8_base("J8.III.a", "left exponent -2-a, right exponent 0",
                               "p(x) = (1 + x)^(-2-a)");
        f.paramNames = {"a", "D", "F", "G"};
        f.constraints = {bound("a < -5", -5)};
        const std::string den = "(2 + a)*(24 - 50*a + 35*a^2 - 10*a^3 + a^4)";
        const std::string X6 =
            "576 - 2352*a + 2232*a^2 + 36*a^3 - 666*a^4 + 162*a^5 + 18*a^6 - 6*a^7 + 2*D "
            "- a*D - a^2*D - 2*F + a*F - 5760*x + 7392*a*x + 912*a^2*x - 3432*a^3*x + "
            "660*a^4*x + 348*a^5*x - 132*a^6*x + 12*a^7*x - 8640*x^2 + 16848*a*x^2 - "
            "8904*a^2*x^2 - 924*a^3*x^2 + 2310*a^4*x^2 - 798*a^5*x^2 + 114*a^6*x^2 - "
            "6*a^7*x^2 - 2*D*x^2 + a*D*x^2 + a^2*D*x^2 + 2*F*x^2 - a*F*x^2";
        const std::string X5 =
            "4608 - 7680*a + 800*a^2 + 3824*a^3 - 1304*a^4 - 460*a^5 + 220*a^6 - 4*a^7 - "
            "4*a^8 + 12*D - 9*a^2*D - 3*a^3*D - 12*F + 3*a^2*F + 4608*x - 19968*a*x + "
            "22560*a^2*x - 4176*a^3*x - 5400*a^4*x + 2628*a^5*x - 180*a^6*x - 84*a^7*x + "
            "12*a^8*x + 24*D*x - 18*a*D*x - 9*a^2*D*x + 3*a^3*D*x - 24*F*x + 18*a*F*x - "
            "3*a^2*F*x - 23040*x^2 + 35328*a*x^2 - 3744*a^2*x^2 - 14640*a^3*x^2 + "
            "6072*a^4*x^2 + 732*a^5*x^2 - 876*a^6*x^2 + 180*a^7*x^2 - 12*a^8*x^2 - "
            "12*D*x^2 + 9*a^2*D*x^2 + 3*a^3*D*x^2 + 12*F*x^2 - 3*a^2*F*x^2 - 23040*x^3 + "
            "50688*a*x^3 - 34976*a^2*x^3 + 3472*a^3*x^3 + 6776*a^4*x^3 - 3668*a^5*x^3 + "
            "836*a^6*x^3 - 92*a^7*x^3 + 4*a^8*x^3 - 24*D*x^3 + 18*a*D*x^3 + 9*a^2*D*x^3 - "
            "3*a^3*D*x^3 + 24*F*x^3 - 18*a*F*x^3 + 3*a^2*F*x^3";
        const std::string X4 =
            "-2304 - 4608*a + 14320*a^2 - 6312*a^3 - 3308*a^4 + 2426*a^5 - 80*a^6 - "
            "148*a^7 + 12*a^8 + 2*a^9 - 60*a*D + 18*a^2*D + 36*a^3*D + 6*a^4*D + 24*F + "
            "34*a*F - 9*a^2*F - 7*a^3*F - 27648*x + 55296*a*x - 20160*a^2*x - 21344*a^3*x "
            "+ 15472*a^4*x + 152*a^5*x - 2240*a^6*x + 464*a^7*x + 16*a^8*x - 8*a^9*x - "
            "144*D*x + 48*a*D*x + 108*a^2*D*x - 12*a^4*D*x + 144*F*x - 48*a*F*x - "
            "36*a^2*F*x + 12*a^3*F*x - 13824*x^2 + 64512*a*x^2 - 87648*a^2*x^2 + "
            "35088*a^3*x^2 + 12024*a^4*x^2 - 13284*a^5*x^2 + 3168*a^6*x^2 + 72*a^7*x^2 - "
            "120*a^8*x^2 + 12*a^9*x^2 - 144*D*x^2 + 216*a*D*x^2 - 72*a^3*D*x^2 + 96*F*x^2 "
            "- 164*a*F*x^2 + 54*a^2*F*x^2 + 2*a^3*F*x^2 + 46080*x^3 - 86016*a*x^3 + "
            "31040*a^2*x^3 + 26784*a^3*x^3 - 21904*a^4*x^3 + 2584*a^5*x^3 + 2240*a^6*x^3 - "
            "944*a^7*x^3 + 144*a^8*x^3 - 8*a^9*x^3 + 144*D*x^3 - 48*a*D*x^3 - "
            "108*a^2*D*x^3 + 12*a^4*D*x^3 - 144*F*x^3 + 48*a*F*x^3 + 36*a^2*F*x^3 - "
            "12*a^3*F*x^3 + 34560*x^4 - 87552*a*x^4 + 77808*a^2*x^4 - 22696*a^3*x^4 - "
            "8428*a^4*x^4 + 8890*a^5*x^4 - 3088*a^6*x^4 + 556*a^7*x^4 - 52*a^8*x^4 + "
            "2*a^9*x^4 + 144*D*x^4 - 156*a*D*x^4 - 18*a^2*D*x^4 + 36*a^3*D*x^4 - "
            "6*a^4*D*x^4 - 120*F*x^4 + 130*a*F*x^4 - 45*a^2*F*x^4 + 5*a^3*F*x^4";
        const std::string X3 =
            "-24*D + 28*a*D + 22*a^2*D - 15*a^3*D - 10*a^4*D - a^5*D - 24*F - 2*a^2*F + "
            "2*a^4*F + 60*a*D*x - 48*a^2*D*x - 27*a^3*D*x + 12*a^4*D*x + 3*a^5*D*x - "
            "48*F*x + 16*a*F*x + 4*a^2*F*x + 8*a^3*F*x - 4*a^4*F*x + 72*D*x^2 - "
            "60*a*D*x^2 - 42*a^2*D*x^2 + 27*a^3*D*x^2 + 6*a^4*D*x^2 - 3*a^5*D*x^2 - "
            "24*F*x^2 + 32*a*F*x^2 - 2*a^2*F*x^2 - 8*a^3*F*x^2 + 2*a^4*F*x^2 + 48*D*x^3 - "
            "76*a*D*x^3 + 20*a^2*D*x^3 + 15*a^3*D*x^3 - 8*a^4*D*x^3 + a^5*D*x^3";
        const std::string X2 =
            "-2*a*F - 5*a^2*F - a^3*F - 4*G + 2*a*G + 2*a^2*G - 4*a*F*x + 2*a^2*F*x + "
            "2*a^3*F*x - 2*a*F*x^2 + 3*a^2*F*x^2 - a^3*F*x^2 + 4*G*x^2 - 2*a*G*x^2 - "
            "2*a^2*G*x^2";
        f.coeffExprs = {
            "G*(-2 + a*(-1 + x))/a",
            "(" + X2 + ")/(2*a*(-2 + a + a^2))",
            "(" + X3 + ")/(48 - 76*a + 20*a^2 + 15*a^3 - 8*a^4 + a^5)",
            "(" + X4 + ")/(2*" + den + ")",
            "-((-1 + x^2)*(" + X5 + "))/(" + den + ")",
            "-((-1 + x^2)^2*(" + X6 + "))/(" + den + ")",
            "-4*(-2 + a*(-1 + x) - 6*x)*(-1 + x^2)^3",
            "(1 - x^2)^4",
        };
        f.lambdaExpr =
            "(n*(-a + n - 1))/(2*(a - 4)*(a - 3)*(a - 2)*(a - 1)*a*(a + 2)) * "
            "(-2*n^3*a^9 + 12*n^2*a^9 - 22*n*a^9 + 12*a^9 + 6*n^4*a^8 - 14*n^3*a^8 - "
            "66*n^2*a^8 + 206*n*a^8 - 132*a^8 - 6*n^5*a^7 - 24*n^4*a^7 + 212*n^3*a^7 - "
            "132*n^2*a^7 - 542*n*a^7 + 492*a^7 + 2*n^6*a^6 + 42*n^5*a^6 - 112*n^4*a^6 - "
            "476*n^3*a^6 + 1274*n^2*a^6 - 238*n*a^6 - 492*a^6 - 16*n^6*a^5 - 42*n^5*a^5 + "
            "560*n^4*a^5 - 658*n^3*a^5 - 2*D*n^2*a^5 - 1456*n^2*a^5 - 4*D*a^5 - F*a^5 - "
            "2*G*a^5 + 6*D*n*a^5 + F*n*a^5 + 2884*n*a^5 - 1272*a^5 + 30*n^6*a^4 - "
            "210*n^5*a^4 - 126*n^4*a^4 + 4*D*n^3*a^4 + 2674*n^3*a^4 - 12*D*n^2*a^4 + "
            "F*n^2*a^4 - 3024*n^2*a^4 + 13*F*a^4 + 16*G*a^4 + 8*D*n*a^4 - 14*F*n*a^4 - "
            "3136*n*a^4 + 3792*a^4 + 40*n^6*a^3 + 336*n^5*a^3 - 2*D*n^4*a^3 - 1736*n^4*a^3 "
            "+ 8*D*n^3*a^3 - 4*F*n^3*a^3 - 992*n^3*a^3 - 4*D*n^2*a^3 + 15*F*n^2*a^3 + "
            "7072*n^2*a^3 + 12*D*a^3 - 38*F*a^3 - 30*G*a^3 - 14*D*n*a^3 + 27*F*n*a^3 - "
            "1168*n*a^3 - 3552*a^3 - 152*n^6*a^2 + 168*n^5*a^2 - 2*D*n^4*a^2 + 2*F*n^4*a^2 "
            "+ 1912*n^4*a^2 - 4*D*n^3*a^2 + 4*F*n^3*a^2 - 2184*n^3*a^2 + 22*D*n^2*a^2 - "
            "48*F*n^2*a^2 - 4064*n^2*a^2 - 8*D*a^2 + 32*F*a^2 - 40*G*a^2 - 8*D*n*a^2 + "
            "10*F*n*a^2 + 3168*n*a^2 + 1152*a^2 + 96*n^6*a - 288*n^5*a + 4*D*n^4*a - "
            "4*F*n^4*a - 480*n^4*a - 8*D*n^3*a + 8*F*n^3*a + 1440*n^3*a - 4*D*n^2*a + "
            "28*F*n^2*a + 384*n^2*a + 152*G*a + 8*D*n*a - 32*F*n*a - 1152*n*a - 96*G)";
        out.push_back(std::move(f));
    }
    {
        FamilySpec f = j8_base("J8.III.b", "left exponent -3-a, right exponent 1",
                               "p(x) = (1 - x)(1 + x)^(-3-a)");
        f.paramNames = {"a", "D", "F", "G"};
        f.constraints = {bound("a < -6", -6)};
        const std::string den = "-96 + 176*a - 90*a^2 + 5*a^3 + 6*a^4 - a^5";
        const std::string X6 =
            "-5760 + 5376*a + 3528*a^2 - 3504*a^3 + 90*a^4 + 294*a^5 - 18*a^6 - 6*a^7 + "
            "4*D - 3*a*D - a^2*D - 2*F + a*F - 23040*x + 41088*a*x - 18336*a^2*x - "
            "1992*a^3*x + 2580*a^4*x - 228*a^5*x - 84*a^6*x + 12*a^7*x - 17280*x^2 + "
            "38016*a*x^2 - 28392*a^2*x^2 + 7896*a^3*x^2 + 210*a^4*x^2 - 546*a^5*x^2 + "
            "102*a^6*x^2 - 6*a^7*x^2 - 4*D*x^2 + 3*a*D*x^2 + a^2*D*x^2 + 2*F*x^2 - "
            "a*F*x^2";
        const std::string X5 =
            "-16896*a + 25216*a^2 - 5664*a^3 - 3816*a^4 + 996*a^5 + 204*a^6 - 36*a^7 - "
            "4*a^8 + 48*D - 24*a*D - 21*a^2*D - 3*a^3*D - 24*F + 6*a*F + 3*a^2*F - "
            "46080*x + 54528*a*x + 17472*a^2*x - 35088*a^3*x + 7728*a^4*x + 2172*a^5*x - "
            "732*a^6*x - 12*a^7*x + 12*a^8*x + 48*D*x - 48*a*D*x - 3*a^2*D*x + 3*a^3*D*x - "
            "24*F*x + 18*a*F*x - 3*a^2*F*x - 92160*x^2 + 187392*a*x^2 - 114432*a^2*x^2 + "
            "10368*a^3*x^2 + 12312*a^4*x^2 - 3492*a^5*x^2 - 108*a^6*x^2 + 132*a^7*x^2 - "
            "12*a^8*x^2 - 48*D*x^2 + 24*a*D*x^2 + 21*a^2*D*x^2 + 3*a^3*D*x^2 + 24*F*x^2 - "
            "6*a*F*x^2 - 3*a^2*F*x^2 - 46080*x^3 + 112896*a*x^3 - 101056*a^2*x^3 + "
            "39984*a^3*x^3 - 4704*a^4*x^3 - 1596*a^5*x^3 + 636*a^6*x^3 - 84*a^7*x^3 + "
            "4*a^8*x^3 - 48*D*x^3 + 48*a*D*x^3 + 3*a^2*D*x^3 - 3*a^3*D*x^3 + 24*F*x^3 - "
            "18*a*F*x^3 + 3*a^2*F*x^3";
        const std::string X4 =
            "23040 - 61056*a + 33248*a^2 + 18824*a^3 - 14328*a^4 - 1002*a^5 + 1272*a^6 + "
            "36*a^7 - 32*a^8 - 2*a^9 + 288*D - 210*a^2*D - 72*a^3*D - 6*a^4*D - 168*F - "
            "10*a*F + 33*a^2*F + 7*a^3*F - 101376*a*x + 185088*a^2*x - 84416*a^3*x - "
            "11568*a^4*x + 13608*a^5*x - 768*a^6*x - 624*a^7*x + 48*a^8*x + 8*a^9*x + "
            "576*D*x - 480*a*D*x - 156*a^2*D*x + 48*a^3*D*x + 12*a^4*D*x - 288*F*x + "
            "168*a*F*x + 12*a^2*F*x - 12*a^3*F*x - 138240*x^2 + 209664*a*x^2 - "
            "2112*a^2*x^2 - 122736*a^3*x^2 + 58272*a^4*x^2 - 1212*a^5*x^2 - 4368*a^6*x^2 + "
            "696*a^7*x^2 + 48*a^8*x^2 - 12*a^9*x^2 - 384*a*D*x^2 + 288*a^2*D*x^2 + "
            "96*a^3*D*x^2 + 48*F*x^2 + 140*a*F*x^2 - 78*a^2*F*x^2 - 2*a^3*F*x^2 - "
            "184320*x^3 + 436224*a*x^3 - 353792*a^2*x^3 + 97024*a^3*x^3 + 17712*a^4*x^3 - "
            "15192*a^5*x^3 + 2112*a^6*x^3 + 336*a^7*x^3 - 112*a^8*x^3 + 8*a^9*x^3 - "
            "576*D*x^3 + 480*a*D*x^3 + 156*a^2*D*x^3 - 48*a^3*D*x^3 - 12*a^4*D*x^3 + "
            "288*F*x^3 - 168*a*F*x^3 - 12*a^2*F*x^3 + 12*a^3*F*x^3 - 69120*x^4 + "
            "192384*a*x^4 - 208032*a^2*x^4 + 110504*a^3*x^4 - 27048*a^4*x^4 - 42*a^5*x^4 + "
            "1752*a^6*x^4 - 444*a^7*x^4 + 48*a^8*x^4 - 2*a^9*x^4 - 288*D*x^4 + "
            "384*a*D*x^4 - 78*a^2*D*x^4 - 24*a^3*D*x^4 + 6*a^4*D*x^4 + 120*F*x^4 - "
            "130*a*F*x^4 + 45*a^2*F*x^4 - 5*a^3*F*x^4";
        const std::string X3 =
            "96*D + 128*a*D - 114*a^2*D - 91*a^3*D - 18*a^4*D - a^5*D - 144*F + 4*a*F + "
            "10*a^2*F + 8*a^3*F + 2*a^4*F + 288*D*x - 144*a*D*x - 210*a^2*D*x + "
            "33*a^3*D*x + 30*a^4*D*x + 3*a^5*D*x - 192*F*x + 112*a*F*x + 16*a^2*F*x - "
            "4*a^3*F*x - 4*a^4*F*x + 288*D*x^2 - 384*a*D*x^2 + 42*a^2*D*x^2 + "
            "63*a^3*D*x^2 - 6*a^4*D*x^2 - 3*a^5*D*x^2 - 48*F*x^2 + 76*a*F*x^2 - "
            "26*a^2*F*x^2 - 4*a^3*F*x^2 + 2*a^4*F*x^2 + 96*D*x^3 - 176*a*D*x^3 + "
            "90*a^2*D*x^3 - 5*a^3*D*x^3 - 6*a^4*D*x^3 + a^5*D*x^3";
        const std::string X2 =
            "-14*a*F - 9*a^2*F - a^3*F - 8*G + 6*a*G + 2*a^2*G - 8*a*F*x + 6*a^2*F*x + "
            "2*a^3*F*x - 2*a*F*x^2 + 3*a^2*F*x^2 - a^3*F*x^2 + 8*G*x^2 - 6*a*G*x^2 - "
            "2*a^2*G*x^2";
        f.coeffExprs = {
            "G*(-4 + a*(-1 + x))/a",
            "(" + X2 + ")/(2*a*(-4 + 3*a + a^2))",
            "(" + X3 + ")/(96 - 176*a + 90*a^2 - 5*a^3 - 6*a^4 + a^5)",
            "(" + X4 + ")/(2*(" + den + "))",
            "((-1 + x^2)*(" + X5 + "))/(" + den + ")",
            "((-1 + x^2)^2*(" + X6 + "))/(" + den + ")",
            "-4*(-4 + a*(-1 + x) - 6*x)*(-1 + x^2)^3",
            "(1 - x^2)^4",
        };
        f.lambdaExpr =
            "(n*(-a + n - 1))/(2*(a - 4)*(a - 3)*(a - 2)*(a - 1)*a*(a + 4)) * "
            "(-2*n^3*a^9 + 12*n^2*a^9 - 22*n*a^9 + 12*a^9 + 6*n^4*a^8 - 18*n^3*a^8 - "
            "42*n^2*a^8 + 162*n*a^8 - 108*a^8 - 6*n^5*a^7 - 12*n^4*a^7 + 192*n^3*a^7 - "
            "312*n^2*a^7 - 42*n*a^7 + 180*a^7 + 2*n^6*a^6 + 30*n^5*a^6 - 184*n^4*a^6 - "
            "12*n^3*a^6 + 1370*n^2*a^6 - 2322*n*a^6 + 1116*a^6 - 12*n^6*a^5 + 66*n^5*a^5 + "
            "480*n^4*a^5 - 2538*n^3*a^5 - 2*D*n^2*a^5 + 900*n^2*a^5 - 4*D*a^5 - F*a^5 - "
            "2*G*a^5 + 6*D*n*a^5 + F*n*a^5 + 6576*n*a^5 - 5472*a^5 - 10*n^6*a^4 - "
            "510*n^5*a^4 + 1154*n^4*a^4 + 4*D*n^3*a^4 + 5118*n^3*a^4 - 16*D*n^2*a^4 + "
            "F*n^2*a^4 - 10648*n^2*a^4 - 8*D*a^4 + 13*F*a^4 + 12*G*a^4 + 20*D*n*a^4 - "
            "14*F*n*a^4 - 4752*n*a^4 + 9648*a^4 + 180*n^6*a^3 + 516*n^5*a^3 - 2*D*n^4*a^3 "
            "- 4548*n^4*a^3 + 16*D*n^3*a^3 - 4*F*n^3*a^3 - 532*n^3*a^3 - 20*D*n^2*a^3 + "
            "15*F*n^2*a^3 + 16272*n^2*a^3 + 28*D*a^3 - 38*F*a^3 + 10*G*a^3 - 22*D*n*a^3 + "
            "27*F*n*a^3 - 4208*n*a^3 - 7680*a^3 - 352*n^6*a^2 + 480*n^5*a^2 - 6*D*n^4*a^2 "
            "+ 2*F*n^4*a^2 + 4064*n^4*a^2 - 4*D*n^3*a^2 + 4*F*n^3*a^2 - 5088*n^3*a^2 + "
            "46*D*n^2*a^2 - 48*F*n^2*a^2 - 8320*n^2*a^2 - 16*D*a^2 + 32*F*a^2 - "
            "180*G*a^2 - 20*D*n*a^2 + 10*F*n*a^2 + 6912*n*a^2 + 2304*a^2 + 192*n^6*a - "
            "576*n^5*a + 8*D*n^4*a - 4*F*n^4*a - 960*n^4*a - 16*D*n^3*a + 8*F*n^3*a + "
            "2880*n^3*a - 8*D*n^2*a + 28*F*n^2*a + 768*n^2*a + 352*G*a + 16*D*n*a - "
            "32*F*n*a - 2304*n*a - 192*G)";
        out.push_back(std::move(f));
    }
    {
        FamilySpec f = j8_base("J8.III.c", "left exponent -4-a, right exponent 2",
                               "p(x) = (1 - x)^2 (1 + x)^(-4-a)");
        f.paramNames = {"a", "D", "F", "G"};
        f.constraints = {bound("a < -7", -7)};
        const std::string den = "-36 + 60*a - 25*a^2 + a^4";
        const std::string X6 =
            "-19440 + 23976*a - 108*a^2 - 4770*a^3 + 90*a^4 + 234*a^5 + 18*a^6 + D - a*D "
            "- F - 38880*x + 66096*a*x - 27864*a^2*x - 1260*a^3*x + 1980*a^4*x - 36*a^5*x "
            "- 36*a^6*x - 19440*x^2 + 39528*a*x^2 - 26028*a^2*x^2 + 6030*a^3*x^2 + "
            "90*a^4*x^2 - 198*a^5*x^2 + 18*a^6*x^2 - D*x^2 + a*D*x^2 + F*x^2";
        const std::string X5 =
            "17280 - 12960*a - 11376*a^2 + 6104*a^3 + 1380*a^4 - 340*a^5 - 84*a^6 - 4*a^7 "
            "- 6*D + 5*a*D + a^2*D + 6*F + a*F + 51840*x - 76896*a*x + 16272*a^2*x + "
            "12648*a^3*x - 3420*a^4*x - 564*a^5*x + 108*a^6*x + 12*a^7*x - 4*D*x + "
            "5*a*D*x - a^2*D*x + 4*F*x - a*F*x + 51840*x^2 - 101088*a*x^2 + "
            "59184*a^2*x^2 - 7608*a^3*x^2 - 3060*a^4*x^2 + 708*a^5*x^2 + 36*a^6*x^2 - "
            "12*a^7*x^2 + 6*D*x^2 - 5*a*D*x^2 - a^2*D*x^2 - 6*F*x^2 - a*F*x^2 + "
            "17280*x^3 - 39456*a*x^3 + 31920*a^2*x^3 - 11144*a^3*x^3 + 1260*a^4*x^3 + "
            "196*a^5*x^3 - 60*a^6*x^3 + 4*a^7*x^3 + 4*D*x^3 - 5*a*D*x^3 + a^2*D*x^3 - "
            "4*F*x^3 + a*F*x^3";
        const std::string X4 =
            "-25920 - 8208*a + 48744*a^2 - 6300*a^3 - 8902*a^4 + 48*a^5 + 476*a^6 + "
            "60*a^7 + 2*a^8 + 64*D - 38*a*D - 24*a^2*D - 2*a^3*D - 70*F - 21*a*F - "
            "3*a^2*F - 103680*x + 112320*a*x + 42336*a^2*x - 59376*a^3*x + 3928*a^4*x + "
            "4800*a^5*x - 176*a^6*x - 144*a^7*x - 8*a^8*x + 72*D*x - 84*a*D*x + "
            "8*a^2*D*x + 4*a^3*D*x - 72*F*x + 12*a*F*x + 4*a^2*F*x - 155520*x^2 + "
            "282528*a*x^2 - 125712*a^2*x^2 - 21672*a^3*x^2 + 22908*a^4*x^2 - "
            "1728*a^5*x^2 - 888*a^6*x^2 + 72*a^7*x^2 + 12*a^8*x^2 - 40*D*x^2 + "
            "40*a^2*D*x^2 + 52*F*x^2 + 30*a*F*x^2 + 2*a^2*F*x^2 - 103680*x^3 + "
            "236736*a*x^3 - 185760*a^2*x^3 + 54672*a^3*x^3 + 1048*a^4*x^3 - 3456*a^5*x^3 "
            "+ 400*a^6*x^3 + 48*a^7*x^3 - 8*a^8*x^3 - 72*D*x^3 + 84*a*D*x^3 - "
            "8*a^2*D*x^3 - 4*a^3*D*x^3 + 72*F*x^3 - 12*a*F*x^3 - 4*a^2*F*x^3 - "
            "25920*x^4 + 67824*a*x^4 - 67608*a^2*x^4 + 32676*a^3*x^4 - 7462*a^4*x^4 + "
            "336*a^5*x^4 + 188*a^6*x^4 - 36*a^7*x^4 + 2*a^8*x^4 - 24*D*x^4 + 38*a*D*x^4 "
            "- 16*a^2*D*x^4 + 2*a^3*D*x^4 + 18*F*x^4 - 9*a*F*x^4 + a^2*F*x^4";
        const std::string X3 =
            "-156*D + 40*a*D + 95*a^2*D + 20*a^3*D + a^4*D + 264*F + 44*a*F + 24*a^2*F + "
            "4*a^3*F - 192*D*x + 210*a*D*x + 15*a^2*D*x - 30*a^3*D*x - 3*a^4*D*x + "
            "228*F*x - 66*a*F*x - 12*a^2*F*x - 6*a^3*F*x - 108*D*x^2 + 180*a*D*x^2 - "
            "75*a^2*D*x^2 + 3*a^4*D*x^2 - 24*D*x^3 + 50*a*D*x^3 - 35*a^2*D*x^3 + "
            "10*a^3*D*x^3 - a^4*D*x^3 - 12*F*x^3 + 22*a*F*x^3 - 12*a^2*F*x^3 + "
            "2*a^3*F*x^3";
        const std::string X2 =
            "-34*a*F - 13*a^2*F - a^3*F - 12*G + 10*a*G + 2*a^2*G - 12*a*F*x + "
            "10*a^2*F*x + 2*a^3*F*x - 2*a*F*x^2 + 3*a^2*F*x^2 - a^3*F*x^2 + 12*G*x^2 - "
            "10*a*G*x^2 - 2*a^2*G*x^2";
        f.coeffExprs = {
            "G*(-6 + a*(-1 + x))/a",
            "(" + X2 + ")/(2*a*(-6 + 5*a + a^2))",
            "(" + X3 + ")/(3*(" + den + "))",
            "(" + X4 + ")/(2*(" + den + "))",
            "-((-1 + x^2)*(" + X5 + "))/(" + den + ")",
            "((-1 + x^2)^2*(" + X6 + "))/(3*(" + den + "))",
            "-4*(-1 + x^2)^3*(a*(-1 + x) - 6*(1 + x))",
            "(1 - x^2)^4",
        };
        f.lambdaExpr =
            "(n*(-a + n - 1))/(6*(a - 3)*(a - 2)*(a - 1)*a*(a + 6)) * "
            "(-6*n^3*a^8 + 36*n^2*a^8 - 66*n*a^8 + 36*a^8 + 18*n^4*a^7 - 90*n^3*a^7 + "
            "90*n^2*a^7 + 90*n*a^7 - 108*a^7 - 18*n^5*a^6 + 72*n^4*a^6 + 156*n^3*a^6 - "
            "1116*n^2*a^6 + 1734*n*a^6 - 828*a^6 + 6*n^6*a^5 - 18*n^5*a^5 - 480*n^4*a^5 + "
            "1980*n^3*a^5 - 66*n^2*a^5 - 6282*n*a^5 + 4860*a^5 + 450*n^5*a^4 - "
            "720*n^4*a^4 - 5334*n^3*a^4 + 2*D*n^2*a^4 + 9504*n^2*a^4 + 4*D*a^4 - 3*F*a^4 "
            "- 6*G*a^4 - 6*D*n*a^4 + 3*F*n*a^4 + 5676*n*a^4 - 9576*a^4 - 150*n^6*a^3 - "
            "630*n^5*a^3 + 4422*n^4*a^3 - 4*D*n^3*a^3 + 1350*n^3*a^3 + 8*D*n^2*a^3 - "
            "F*n^2*a^3 - 16800*n^2*a^3 - 8*D*a^3 + 19*F*a^3 + 4*D*n*a^3 - 18*F*n*a^3 + "
            "3600*n*a^3 + 8208*a^3 + 360*n^6*a^2 - 432*n^5*a^2 + 2*D*n^4*a^2 - "
            "4392*n^4*a^2 - 4*F*n^3*a^2 + 5184*n^3*a^2 - 12*D*n^2*a^2 + 25*F*n^2*a^2 + "
            "9216*n^2*a^2 + 4*D*a^2 - 22*F*a^2 + 150*G*a^2 + 6*D*n*a^2 + F*n*a^2 - "
            "7344*n*a^2 - 2592*a^2 - 216*n^6*a + 648*n^5*a - 2*D*n^4*a + 2*F*n^4*a + "
            "1080*n^4*a + 4*D*n^3*a - 4*F*n^3*a - 3240*n^3*a + 2*D*n^2*a - 20*F*n^2*a - "
            "864*n^2*a - 360*G*a - 4*D*n*a + 22*F*n*a + 2592*n*a + 216*G)";
        out.push_back(std::move(f));
    }
    {
        FamilySpec f = j8_base("J8.III.d", "left exponent -5-a, right exponent 3",
                               "p(x) = (1 - x)^3 (1 + x)^(-5-a)");
        f.paramNames = {"a", "D", "F", "G"};
        f.constraints = {bound("a < -8", -8)};
        const std::string den = "-48 + 82*a - 37*a^2 + 2*a^3 + a^4";
        const std::string X6 =
            "50112 - 70920*a + 14400*a^2 + 7758*a^3 - 990*a^4 - 342*a^5 - 18*a^6 - D + "
            "a*D + F + 69120*x - 123264*a*x + 60408*a^2*x - 3924*a^3*x - 2556*a^4*x + "
            "180*a^5*x + 36*a^6*x + 25920*x^2 - 53784*a*x^2 + 37080*a^2*x^2 - "
            "9882*a^3*x^2 + 522*a^4*x^2 + 162*a^5*x^2 - 18*a^6*x^2 + D*x^2 - a*D*x^2 - "
            "F*x^2";
        const std::string X5 =
            "73728 - 87552*a - 3584*a^2 + 17864*a^3 + 532*a^4 - 868*a^5 - 116*a^6 - 4*a^7 "
            "- 8*D + 7*a*D + a^2*D + 8*F + a*F + 133632*x - 222528*a*x + 85680*a^2*x + "
            "11088*a^3*x - 7812*a^4*x - 252*a^5*x + 180*a^6*x + 12*a^7*x - 4*D*x + "
            "5*a*D*x - a^2*D*x + 4*F*x - a*F*x + 92160*x^2 - 187392*a*x^2 + "
            "121632*a^2*x^2 - 25368*a^3*x^2 - 2100*a^4*x^2 + 1092*a^5*x^2 - 12*a^6*x^2 - "
            "12*a^7*x^2 + 8*D*x^2 - 7*a*D*x^2 - a^2*D*x^2 - 8*F*x^2 - a*F*x^2 + "
            "23040*x^3 - 53568*a*x^3 + 44912*a^2*x^3 - 17024*a^3*x^3 + 2660*a^4*x^3 + "
            "28*a^5*x^3 - 52*a^6*x^3 + 4*a^7*x^3 + 4*D*x^3 - 5*a*D*x^3 + a^2*D*x^3 - "
            "4*F*x^3 + a*F*x^3";
        const std::string X4 =
            "-228096 + 202080*a + 100952*a^2 - 64120*a^3 - 14966*a^4 + 3080*a^5 + "
            "988*a^6 + 80*a^7 + 2*a^8 + 120*D - 86*a*D - 32*a^2*D - 2*a^3*D - 126*F - "
            "29*a*F - 3*a^2*F - 442368*x + 672768*a*x - 153600*a^2*x - 114352*a^3*x + "
            "32536*a^4*x + 6272*a^5*x - 1040*a^6*x - 208*a^7*x - 8*a^8*x + 96*D*x - "
            "116*a*D*x + 16*a^2*D*x + 4*a^3*D*x - 96*F*x + 20*a*F*x + 4*a^2*F*x - "
            "400896*x^2 + 801216*a*x^2 - 479568*a^2*x^2 + 52416*a^3*x^2 + 34524*a^4*x^2 - "
            "7056*a^5*x^2 - 792*a^6*x^2 + 144*a^7*x^2 + 12*a^8*x^2 - 96*D*x^2 + "
            "48*a*D*x^2 + 48*a^2*D*x^2 + 108*F*x^2 + 38*a*F*x^2 + 2*a^2*F*x^2 - "
            "184320*x^3 + 436224*a*x^3 - 368192*a^2*x^3 + 131824*a^3*x^3 - "
            "12712*a^4*x^3 - 3584*a^5*x^3 + 752*a^6*x^3 + 16*a^7*x^3 - 8*a^8*x^3 - "
            "96*D*x^3 + 116*a*D*x^3 - 16*a^2*D*x^3 - 4*a^3*D*x^3 + 96*F*x^3 - 20*a*F*x^3 "
            "- 4*a^2*F*x^3 - 34560*x^4 + 91872*a*x^4 - 94152*a^2*x^4 + 47992*a^3*x^4 - "
            "12502*a^4*x^4 + 1288*a^5*x^4 + 92*a^6*x^4 - 32*a^7*x^4 + 2*a^8*x^4 - "
            "24*D*x^4 + 38*a*D*x^4 - 16*a^2*D*x^4 + 2*a^3*D*x^4 + 18*F*x^4 - 9*a*F*x^4 + "
            "a^2*F*x^4";
        const std::string X3 =
            "-432*D + 226*a*D + 179*a^2*D + 26*a^3*D + a^4*D + 576*F + 104*a*F + "
            "36*a^2*F + 4*a^3*F - 360*D*x + 438*a*D*x - 33*a^2*D*x - 42*a^3*D*x - "
            "3*a^4*D*x + 396*F*x - 126*a*F*x - 24*a^2*F*x - 6*a^3*F*x - 144*D*x^2 + "
            "246*a*D*x^2 - 111*a^2*D*x^2 + 6*a^3*D*x^2 + 3*a^4*D*x^2 - 24*D*x^3 + "
            "50*a*D*x^3 - 35*a^2*D*x^3 + 10*a^3*D*x^3 - a^4*D*x^3 - 12*F*x^3 + "
            "22*a*F*x^3 - 12*a^2*F*x^3 + 2*a^3*F*x^3";
        const std::string X2 =
            "-62*a*F - 17*a^2*F - a^3*F - 16*G + 14*a*G + 2*a^2*G - 16*a*F*x + "
            "14*a^2*F*x + 2*a^3*F*x - 2*a*F*x^2 + 3*a^2*F*x^2 - a^3*F*x^2 + 16*G*x^2 - "
            "14*a*G*x^2 - 2*a^2*G*x^2";
        f.coeffExprs = {
            "G*(-8 + a*(-1 + x))/a",
            "(" + X2 + ")/(2*a*(-8 + 7*a + a^2))",
            "(" + X3 + ")/(3*(" + den + "))",
            "(" + X4 + ")/(2*(" + den + "))",
            "-((-1 + x^2)*(" + X5 + "))/(" + den + ")",
            "-((-1 + x^2)^2*(" + X6 + "))/(3*(" + den + "))",
            "-4*(-8 + a*(-1 + x) - 6*x)*(-1 + x^2)^3",
            "(1 - x^2)^4",
        };
        f.lambdaExpr =
            "(n*(-a + n - 1))/(6*(a - 3)*(a - 2)*(a - 1)*a*(a + 8)) * "
            "(-6*n^3*a^8 + 36*n^2*a^8 - 66*n*a^8 + 36*a^8 + 18*n^4*a^7 - 102*n^3*a^7 + "
            "162*n^2*a^7 - 42*n*a^7 - 36*a^7 - 18*n^5*a^6 + 108*n^4*a^6 + 48*n^3*a^6 - "
            "1368*n^2*a^6 + 2706*n*a^6 - 1476*a^6 + 6*n^6*a^5 - 54*n^5*a^5 - 552*n^4*a^5 + "
            "2940*n^3*a^5 - 786*n^2*a^5 - 8646*n*a^5 + 7092*a^5 + 12*n^6*a^4 + "
            "630*n^5*a^4 - 1248*n^4*a^4 - 7134*n^3*a^4 + 2*D*n^2*a^4 + 13692*n^2*a^4 + "
            "4*D*a^4 - 3*F*a^4 - 6*G*a^4 - 6*D*n*a^4 + 3*F*n*a^4 + 7296*n*a^4 - "
            "13248*a^4 - 222*n^6*a^3 - 810*n^5*a^3 + 6150*n^4*a^3 - 4*D*n^3*a^3 + "
            "1482*n^3*a^3 + 8*D*n^2*a^3 - F*n^2*a^3 - 22920*n^2*a^3 - 8*D*a^3 + 19*F*a^3 "
            "- 12*G*a^3 + 4*D*n*a^3 - 18*F*n*a^3 + 5232*n*a^3 + 11088*a^3 + 492*n^6*a^2 - "
            "612*n^5*a^2 + 2*D*n^4*a^2 - 5916*n^4*a^2 - 4*F*n^3*a^2 + 7092*n^3*a^2 - "
            "12*D*n^2*a^2 + 25*F*n^2*a^2 + 12336*n^2*a^2 + 4*D*a^2 - 22*F*a^2 + "
            "222*G*a^2 + 6*D*n*a^2 + F*n*a^2 - 9936*n*a^2 - 3456*a^2 - 288*n^6*a + "
            "864*n^5*a - 2*D*n^4*a + 2*F*n^4*a + 1440*n^4*a + 4*D*n^3*a - 4*F*n^3*a - "
            "4320*n^3*a + 2*D*n^2*a - 20*F*n^2*a - 1152*n^2*a - 492*G*a - 4*D*n*a + "
            "22*F*n*a + 3456*n*a + 288*G)";
        out.push_back(std::move(f));
    }

    // --- both exponents free ----------------------------------------------
    {
        FamilySpec f = j8_base("J8.IV", "both exponents free",
                               "p(x) = (1+x)^((b-a-2)/2) (1-x)^(-(b+a+2)/2)");
        f.paramNames = {"a", "b", "D", "F", "G"};
        f.constraints = {
            require("b - a - 2 > 6",
                    [](const Params& q) {
                        return at(q, "b") - at(q, "a") - Rational(2) > Rational(6);
                    }),
            require("b + a + 2 < -6",
                    [](const Params& q) {
                        return at(q, "b") + at(q, "a") + Rational(2) < Rational(-6);
                    }),
        };
        const std::string den = "a*(24 - 50*a + 35*a^2 - 10*a^3 + a^4)";
        const std::string X6 =
            "-864*a + 1944*a^2 - 1560*a^3 + 570*a^4 - 96*a^5 + 6*a^6 + 144*a*b^2 - "
            "300*a^2*b^2 + 210*a^3*b^2 - 60*a^4*b^2 + 6*a^5*b^2 - a*D + a^2*D + 2*a*F + "
            "2*G - 1440*a*b*x + 3288*a^2*b*x - 2700*a^3*b*x + 1020*a^4*b*x - 180*a^5*b*x "
            "+ 12*a^6*b*x + 4320*a*x^2 - 10584*a^2*x^2 + 9744*a^3*x^2 - 4410*a^4*x^2 + "
            "1050*a^5*x^2 - 126*a^6*x^2 + 6*a^7*x^2 + a*D*x^2 - a^2*D*x^2 - 2*a*F*x^2 - "
            "2*G*x^2";
        const std::string X5 =
            "-1536*a*b + 3488*a^2*b - 2840*a^3*b + 1060*a^4*b - 184*a^5*b + 12*a^6*b + "
            "96*a*b^3 - 200*a^2*b^3 + 140*a^3*b^3 - 40*a^4*b^3 + 4*a^5*b^3 - 3*a*b*D + "
            "3*a^2*b*D + 6*a*b*F + 6*b*G + 6912*a*x - 17280*a^2*x + 16368*a^3*x - "
            "7680*a^4*x + 1908*a^5*x - 240*a^6*x + 12*a^7*x - 1152*a*b^2*x + "
            "2688*a^2*b^2*x - 2280*a^3*b^2*x + 900*a^4*b^2*x - 168*a^5*b^2*x + "
            "12*a^6*b^2*x + 12*a*D*x - 15*a^2*D*x + 3*a^3*D*x - 24*a*F*x + 6*a^2*F*x - "
            "24*G*x + 6*a*G*x + 5760*a*b*x^2 - 14592*a^2*b*x^2 + 14088*a^3*b*x^2 - "
            "6780*a^4*b*x^2 + 1740*a^5*b*x^2 - 228*a^6*b*x^2 + 12*a^7*b*x^2 + "
            "3*a*b*D*x^2 - 3*a^2*b*D*x^2 - 6*a*b*F*x^2 - 6*b*G*x^2 - 11520*a*x^3 + "
            "31104*a^2*x^3 - 33040*a^3*x^3 + 18256*a^4*x^3 - 5740*a^5*x^3 + 1036*a^6*x^3 "
            "- 100*a^7*x^3 + 4*a^8*x^3 - 12*a*D*x^3 + 15*a^2*D*x^3 - 3*a^3*D*x^3 + "
            "24*a*F*x^3 - 6*a^2*F*x^3 + 24*G*x^3 - 6*a*G*x^3";
        const std::string X4 =
            "1728*a - 4320*a^2 + 4092*a^3 - 1920*a^4 + 477*a^5 - 60*a^6 + 3*a^7 - "
            "672*a*b^2 + 1544*a^2*b^2 - 1280*a^3*b^2 + 490*a^4*b^2 - 88*a^5*b^2 + "
            "6*a^6*b^2 + 24*a*b^4 - 50*a^2*b^4 + 35*a^3*b^4 - 10*a^4*b^4 + a^5*b^4 + "
            "12*a*D - 15*a^2*D + 3*a^3*D - 3*a*b^2*D + 3*a^2*b^2*D - 12*a*F - a^2*F + "
            "a^3*F + 6*a*b^2*F - 12*G - a*G + a^2*G + 6*b^2*G + 4608*a*b*x - "
            "12000*a^2*b*x + 12008*a^3*b*x - 6020*a^4*b*x + 1612*a^5*b*x - 220*a^6*b*x + "
            "12*a^7*b*x - 288*a*b^3*x + 696*a^2*b^3*x - 620*a^3*b^3*x + 260*a^4*b^3*x - "
            "52*a^5*b^3*x + 4*a^6*b^3*x + 18*a*b*D*x - 24*a^2*b*D*x + 6*a^3*b*D*x - "
            "36*a*b*F*x + 12*a^2*b*F*x - 36*b*G*x + 12*a*b*G*x - 10368*a*x^2 + "
            "29376*a^2*x^2 - 33192*a^3*x^2 + 19704*a^4*x^2 - 6702*a^5*x^2 + 1314*a^6*x^2 "
            "- 138*a^7*x^2 + 6*a^8*x^2 + 1728*a*b^2*x^2 - 4608*a^2*b^2*x^2 + "
            "4764*a^3*b^2*x^2 - 2490*a^4*b^2*x^2 + 702*a^5*b^2*x^2 - 102*a^6*b^2*x^2 + "
            "6*a^7*b^2*x^2 - 48*a*D*x^2 + 72*a^2*D*x^2 - 27*a^3*D*x^2 + 3*a^4*D*x^2 + "
            "3*a*b^2*D*x^2 - 3*a^2*b^2*D*x^2 + 72*a*F*x^2 - 34*a^2*F*x^2 + 4*a^3*F*x^2 - "
            "6*a*b^2*F*x^2 + 72*G*x^2 - 34*a*G*x^2 + 4*a^2*G*x^2 - 6*b^2*G*x^2 - "
            "5760*a*b*x^3 + 16512*a^2*b*x^3 - 18952*a^3*b*x^3 + 11476*a^4*b*x^3 - "
            "4000*a^5*b*x^3 + 808*a^6*b*x^3 - 88*a^7*b*x^3 + 4*a^8*b*x^3 - 18*a*b*D*x^3 "
            "+ 24*a^2*b*D*x^3 - 6*a^3*b*D*x^3 + 36*a*b*F*x^3 - 12*a^2*b*F*x^3 + "
            "36*b*G*x^3 - 12*a*b*G*x^3 + 8640*a*x^4 - 26208*a^2*x^4 + 32556*a^3*x^4 - "
            "21952*a^4*x^4 + 8869*a^5*x^4 - 2212*a^6*x^4 + 334*a^7*x^4 - 28*a^8*x^4 + "
            "a^9*x^4 + 36*a*D*x^4 - 57*a^2*D*x^4 + 24*a^3*D*x^4 - 3*a^4*D*x^4 - "
            "60*a*F*x^4 + 35*a^2*F*x^4 - 5*a^3*F*x^4 - 60*G*x^4 + 35*a*G*x^4 - "
            "5*a^2*G*x^4";
        const std::string X3 =
            "10*a*b*D - 13*a^2*b*D + 3*a^3*b*D - a*b^3*D + a^2*b^3*D + 4*a*b*F - "
            "8*a^2*b*F + 2*a^3*b*F + 2*a*b^3*F + 4*b*G - 8*a*b*G + 2*a^2*b*G + 2*b^3*G - "
            "24*a*D*x + 42*a^2*D*x - 21*a^3*D*x + 3*a^4*D*x + 6*a*b^2*D*x - "
            "9*a^2*b^2*D*x + 3*a^3*b^2*D*x + 16*a^2*F*x - 12*a^3*F*x + 2*a^4*F*x - "
            "12*a*b^2*F*x + 6*a^2*b^2*F*x + 16*a*G*x - 12*a^2*G*x + 2*a^3*G*x - "
            "12*b^2*G*x + 6*a*b^2*G*x - 18*a*b*D*x^2 + 33*a^2*b*D*x^2 - 18*a^3*b*D*x^2 + "
            "3*a^4*b*D*x^2 + 12*a*b*F*x^2 - 16*a^2*b*F*x^2 + 4*a^3*b*F*x^2 + 12*b*G*x^2 "
            "- 16*a*b*G*x^2 + 4*a^2*b*G*x^2 + 24*a*D*x^3 - 50*a^2*D*x^3 + 35*a^3*D*x^3 - "
            "10*a^4*D*x^3 + a^5*D*x^3";
        const std::string X2 =
            "-2*a*F + a^2*F + a*b^2*F - 2*a*G + a^2*G + b^2*G - 2*a*b*F*x + 2*a^2*b*F*x - "
            "2*b*G*x + 2*a*b*G*x + 2*a*F*x^2 - 3*a^2*F*x^2 + a^3*F*x^2";
        f.coeffExprs = {
            "G*(b + a*x)/a",
            "(" + X2 + ")/(a*(2 - 3*a + a^2))",
            "(" + X3 + ")/(" + den + ")",
            "(" + X4 + ")/(" + den + ")",
            "-((-1 + x^2)*(" + X5 + "))/(" + den + ")",
            "((-1 + x^2)^2*(" + X6 + "))/(" + den + ")",
            "-4*(b + (-6 + a)*x)*(-1 + x^2)^3",
            "(1 - x^2)^4",
        };
        f.lambdaExpr =
            "(n*(-a + n - 1))/((a - 4)*(a - 3)*(a - 2)*(a - 1)*a) * "
            "(-n^3*a^8 + 6*n^2*a^8 - 11*n*a^8 + 6*a^8 + 3*n^4*a^7 - 5*n^3*a^7 - "
            "45*n^2*a^7 + 125*n*a^7 - 78*a^7 - 3*n^5*a^6 - 18*n^4*a^6 + 116*n^3*a^6 + "
            "24*n^2*a^6 - 521*n*a^6 + 402*a^6 + n^6*a^5 + 27*n^5*a^5 - 20*n^4*a^5 - "
            "470*n^3*a^5 + 589*n^2*a^5 + 923*n*a^5 - 1050*a^5 - 10*n^6*a^4 - 75*n^5*a^4 + "
            "320*n^4*a^4 + 611*n^3*a^4 - D*n^2*a^4 - 1906*n^2*a^4 - 2*D*a^4 + F*a^4 - "
            "G*a^4 + 3*D*n*a^4 - F*n*a^4 - 404*n*a^4 + 1464*a^4 + 35*n^6*a^3 + "
            "45*n^5*a^3 - 703*n^4*a^3 + 2*D*n^3*a^3 + 115*n^3*a^3 - 4*D*n^2*a^3 - "
            "F*n^2*a^3 + 2300*n^2*a^3 + 4*D*a^3 - 11*F*a^3 + 11*G*a^3 - 2*D*n*a^3 + "
            "12*F*n*a^3 - G*n*a^3 - 760*n*a^3 - 1032*a^3 - 50*n^6*a^2 + 78*n^5*a^2 - "
            "D*n^4*a^2 + 538*n^4*a^2 + 4*F*n^3*a^2 - 726*n^3*a^2 + 6*D*n^2*a^2 - "
            "17*F*n^2*a^2 - G*n^2*a^2 - 1064*n^2*a^2 - 2*D*a^2 + 16*F*a^2 - 46*G*a^2 - "
            "3*D*n*a^2 - 3*F*n*a^2 + 12*G*n*a^2 + 936*n*a^2 + 288*a^2 + 24*n^6*a - "
            "72*n^5*a + D*n^4*a - 2*F*n^4*a - 120*n^4*a - 2*D*n^3*a + 4*F*n^3*a + "
            "4*G*n^3*a + 360*n^3*a - D*n^2*a + 14*F*n^2*a - 17*G*n^2*a + 96*n^2*a + "
            "66*G*a + 2*D*n*a - 16*F*n*a - 3*G*n*a - 288*n*a - 2*G*n^4 + 4*G*n^3 + "
            "14*G*n^2 - 24*G - 16*G*n)";
        out.push_back(std::move(f));
    }
}

}  // namespace polyspec::detail
