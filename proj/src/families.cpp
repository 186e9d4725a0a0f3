#include "polyspec/families.hpp"

#include <algorithm>
#include <cctype>

#include "families_detail.hpp"

namespace polyspec {

// ---------------------------------------------------------------------------
// Expression parser. The coefficient and eigenvalue templates are kept as
// strings in the same shape as their source displays; this evaluator turns
// them into exact Polys in x (parameters substituted as Rationals).
//
// Grammar:  expr   := term (('+'|'-') term)*
//           term   := factor (('*'|'/') factor)*
//           factor := ('-'|'+')* primary ('^' uint)?
//           primary:= uint | ident | '(' expr ')'
// ---------------------------------------------------------------------------
namespace {

class ExprParser {
public:
    ExprParser(const std::string& src, const Params& params) : s_(src), params_(params) {}

    Poly parse() {
        Poly v = expr();
        skip_ws();
        if (pos_ != s_.size())
            throw std::invalid_argument("expression: trailing garbage at '" +
                                        s_.substr(pos_) + "'");
        return v;
    }

private:
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    Poly expr() {
        Poly acc = term();
        while (true) {
            if (eat('+'))
                acc += term();
            else if (eat('-'))
                acc -= term();
            else
                return acc;
        }
    }

    Poly term() {
        Poly acc = factor();
        while (true) {
            if (eat('*')) {
                acc *= factor();
            } else if (eat('/')) {
                Poly d = factor();
                if (d.is_zero()) throw std::domain_error("expression: division by zero");
                if (d.degree_or(0) == 0) {
                    acc = d.coeff(0).inv() * acc;
                } else {
                    auto [q, r] = acc.divrem(d);
                    if (!r.is_zero())
                        throw std::domain_error("expression: inexact polynomial division");
                    acc = q;
                }
            } else {
                return acc;
            }
        }
    }

    Poly factor() {
        int sign = 1;
        while (true) {
            if (eat('-'))
                sign = -sign;
            else if (!eat('+'))
                break;
        }
        Poly base = primary();
        if (eat('^')) {
            long e = read_uint();
            base = base.pow(static_cast<int>(e));
        }
        return sign < 0 ? -base : base;
    }

    Poly primary() {
        skip_ws();
        if (eat('(')) {
            Poly v = expr();
            if (!eat(')')) throw std::invalid_argument("expression: missing ')'");
            return v;
        }
        if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            return Poly::constant(Rational(Integer(std::to_string(read_uint()))));
        std::string id = read_ident();
        if (id == "x") return Poly::x();
        auto it = params_.find(id);
        if (it == params_.end())
            throw std::invalid_argument("expression: unknown parameter '" + id + "'");
        return Poly::constant(it->second);
    }

    long read_uint() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) throw std::invalid_argument("expression: expected integer");
        return std::stol(s_.substr(start, pos_ - start));
    }

    std::string read_ident() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])))) ++pos_;
        if (start == pos_)
            throw std::invalid_argument("expression: unexpected character '" +
                                        s_.substr(pos_, 1) + "'");
        return s_.substr(start, pos_ - start);
    }

    const std::string& s_;
    const Params& params_;
    size_t pos_ = 0;
};

}  // namespace

Poly parse_poly_expr(const std::string& expr, const Params& params) {
    return ExprParser(expr, params).parse();
}

Rational parse_scalar_expr(const std::string& expr, const Params& params) {
    Poly p = ExprParser(expr, params).parse();
    if (p.degree_or(0) != 0)
        throw std::domain_error("expression is not constant: " + expr);
    return p.coeff(0);
}

namespace detail {

FamilySpec::Constraint require(const std::string& text,
                               std::function<bool(const Params&)> holds) {
    return {text, std::move(holds)};
}

}  // namespace detail

namespace {

using detail::require;

Rational at(const Params& q, const std::string& name) {
    auto it = q.find(name);
    if (it == q.end()) throw std::invalid_argument("missing parameter '" + name + "'");
    return it->second;
}

// -------------------------------- order 2 ---------------------------------

void append_order2(std::vector<FamilySpec>& out) {
    {
        FamilySpec f;
        f.id = "O2.jacobi";
        f.order = 2;
        f.paramNames = {"c", "d"};
        f.constraints = {
            require("c + d > 0", [](const Params& q) { return at(q, "c") + at(q, "d") > Rational(0); }),
            require("d - c < 0", [](const Params& q) { return at(q, "d") - at(q, "c") < Rational(0); }),
        };
        f.caseNote = "two simple real roots, logarithmic at both";
        f.weightNote = "p(x) = (1-x)^((c+d)/2-1) (1+x)^((c-d)/2-1)";
        f.interval = Interval::bounded(Rational(-1), Rational(1));
        f.coeffExprs = {"c*x + d", "x^2 - 1"};
        f.lambdaExpr = "n*(n - 1 + c)";
        out.push_back(std::move(f));
    }
    {
        FamilySpec f;
        f.id = "O2.hermite";
        f.order = 2;
        f.paramNames = {"c", "d"};
        f.constraints = {
            require("c < 0", [](const Params& q) { return at(q, "c") < Rational(0); }),
        };
        f.caseNote = "constant leading coefficient";
        f.weightNote = "p(x) = e^(c x^2/2 + d x)";
        f.interval = Interval::whole();
        f.coeffExprs = {"c*x + d", "1"};
        f.lambdaExpr = "c*n";
        out.push_back(std::move(f));
    }
    {
        FamilySpec f;
        f.id = "O2.laguerre";
        f.order = 2;
        f.paramNames = {"c", "d"};
        f.constraints = {
            require("c < 0", [](const Params& q) { return at(q, "c") < Rational(0); }),
            require("d > 0", [](const Params& q) { return at(q, "d") > Rational(0); }),
        };
        f.caseNote = "one simple real root, logarithmic";
        f.weightNote = "p(x) = x^(d-1) e^(c x)";
        f.interval = Interval::right_of(Rational(0));
        f.coeffExprs = {"c*x + d", "x"};
        f.lambdaExpr = "c*n";
        out.push_back(std::move(f));
    }
}

// -------------------------------- order 4 ---------------------------------

void append_order4(std::vector<FamilySpec>& out) {
    {
        FamilySpec f;
        f.id = "H4";
        f.order = 4;
        f.paramNames = {"m1", "m2", "A"};
        f.constraints = {
            require("m2 != 0", [](const Params& q) { return !at(q, "m2").is_zero(); }),
        };
        f.caseNote = "rootless leading coefficient";
        f.weightNote = "p(x) = e^(-m2^2 x^2 + m1 x)";
        f.interval = Interval::whole();
        f.coeffExprs = {
            "(-m1^2 + 2*m2^2 + A)*(m1 - 2*m2^2*x)",
            "4*m2^4*x^2 - 4*m1*m2^2*x + A",
            "2*(m1 - 2*m2^2*x)",
            "1",
        };
        f.lambdaExpr = "2*m2^2*(m1^2 - A + 2*m2^2*(n - 2))*n";
        out.push_back(std::move(f));
    }
    {
        FamilySpec f;
        f.id = "L4";
        f.order = 4;
        f.paramNames = {"a", "b", "A"};
        f.constraints = {
            require("a > 2", [](const Params& q) { return at(q, "a") > Rational(2); }),
            require("b < 0", [](const Params& q) { return at(q, "b") < Rational(0); }),
        };
        f.caseNote = "one real root of multiplicity 2";
        f.weightNote = "p(x) = x^(a/2-2) e^(b x / 2)";
        f.interval = Interval::right_of(Rational(0));
        f.coeffExprs = {
            "(1/4)*(2*A - a*b)*(-2 + a + b*x)",
            "(1/4)*(-2*a + a^2 + x*(4*A + b^2*x))",
            "x*(a + b*x)",
            "x^2",
        };
        f.lambdaExpr = "(b/4)*n*(2*A - a*b - b + b*n)";
        out.push_back(std::move(f));
    }
    {
        FamilySpec f;
        f.id = "J4.b0";
        f.order = 4;
        f.paramNames = {"a", "A"};
        f.constraints = {
            require("a < 0", [](const Params& q) { return at(q, "a") < Rational(0); }),
        };
        f.caseNote = "two real roots, even subleading coefficient";
        f.weightNote = "p(x) = (1 - x^2)^(-1-a/2)";
        f.interval = Interval::bounded(Rational(-1), Rational(1));
        f.coeffExprs = {
            "a*(2 - 3*a + a^2 - A)*x",
            "-2*a + a^2 + A*(-1 + x^2)",
            "-2*(-2 + a)*x*(-1 + x^2)",
            "(1 - x^2)^2",
        };
        f.lambdaExpr = "n*(-a + n - 1)*(-a^2 - n*a + 4*a + n^2 + A - n - 2)";
        out.push_back(std::move(f));
    }
    {
        FamilySpec f;
        f.id = "J4.bne0";
        f.order = 4;
        f.paramNames = {"a", "b", "B"};
        f.constraints = {
            require("b - a > 0", [](const Params& q) { return at(q, "b") - at(q, "a") > Rational(0); }),
            require("b + a < 0", [](const Params& q) { return at(q, "b") + at(q, "a") < Rational(0); }),
            require("b != 0", [](const Params& q) { return !at(q, "b").is_zero(); }),
        };
        f.caseNote = "two real roots, general subleading coefficient";
        f.weightNote = "p(x) = (1-x)^((-2-a-b)/2) (1+x)^((-2-a+b)/2)";
        f.interval = Interval::bounded(Rational(-1), Rational(1));
        f.coeffExprs = {
            "B + (a*B*x)/b",
            "(b^3 + B + 2*(-1 + a)*b^2*x - B*x^2 + b*(-2 + a + 2*x^2 - 3*a*x^2 + a^2*x^2))/b",
            "-2*(b + (-2 + a)*x)*(-1 + x^2)",
            "(1 - x^2)^2",
        };
        f.lambdaExpr = "((a - n + 1)*n*(-b*n^2 + a*b*n + b*n - a*b + B))/b";
        out.push_back(std::move(f));
    }
}

// -------------------------------- order 6 ---------------------------------

FamilySpec j6_base(const std::string& id, const std::string& caseNote,
                   const std::string& weightNote) {
    FamilySpec f;
    f.id = id;
    f.order = 6;
    f.caseNote = caseNote;
    f.weightNote = weightNote;
    f.interval = Interval::bounded(Rational(-1), Rational(1));
    return f;
}

void append_order6(std::vector<FamilySpec>& out) {
    {
        FamilySpec f;
        f.id = "H6";
        f.order = 6;
        f.paramNames = {"C", "D"};
        f.caseNote = "rootless leading coefficient";
        f.weightNote = "p(x) = e^(-x^2)";
        f.interval = Interval::whole();
        f.coeffExprs = {
            "D*x",
            "(-D - 2*C)*x^2 + C",
            "-8*x^3 + (D + 2*C + 12)*x",
            "12*x^2 - D/4 - C/2 - 6",
            "-6*x",
            "1",
        };
        f.lambdaExpr = "-n*(8*n^2 + 2*C*n + D*n - 24*n - 2*C - 2*D + 16)";
        out.push_back(std::move(f));
    }
    {
        FamilySpec f;
        f.id = "L6";
        f.order = 6;
        f.paramNames = {"a", "b", "A", "C"};
        f.constraints = {
            require("a > 6", [](const Params& q) { return at(q, "a") > Rational(6); }),
            require("b < 0", [](const Params& q) { return at(q, "b") < Rational(0); }),
        };
        f.caseNote = "one real root of multiplicity 3";
        f.weightNote = "p(x) = x^(a/3-3) e^(b x / 3)";
        f.interval = Interval::right_of(Rational(0));
        f.coeffExprs = {
            "(1/81)*(-6*(-3 + a)*A*b - 12*a*b^2 + 4*a^2*b^2 + 27*C)*(-6 + a + b*x)",
            "(1/27)*(18*a^2*b - 2*a^3*b + 27*C*x - 2*a*b*(18 + b^2*x^2) + 3*A*(18 - 9*a + a^2 + b^2*x^2))",
            "(1/27)*(a^3 - 9*a^2*(1 + b*x) + 9*a*(2 + 2*A*x + 3*b*x - b^2*x^2) + x*(b^3*x^2 + 18*A*(-3 + b*x)))",
            "(1/3)*x*(-3*a + a^2 + x*(3*A + b^2*x))",
            "x^2*(a + b*x)",
            "x^3",
        };
        f.lambdaExpr =
            "(b/81)*n*(4*a^2*b^2 + 3*n^2*b^2 - 6*a*b^2 - 6*a*n*b^2 - 9*n*b^2 + 6*b^2 - "
            "6*a*A*b + 9*A*b + 9*A*n*b + 27*C)";
        out.push_back(std::move(f));
    }

    // Jacobi-type entries with both exponents in the boundary set.
    {
        FamilySpec f = j6_base("J6.I.a", "exponents (0, 0): b-a-2 = 0, b+a+2 = 0", "p(x) = 1");
        f.paramNames = {"C", "D"};
        f.coeffExprs = {
            "D*x",
            "C + (-3*C - D)*x^2",
            "x*(72 + D - 120*x^2 - D*x^2 - 2*C*(-1 + x^2))",
            "-((-1 + x^2)*(2*C*(-1 + x^2) + D*(-1 + x^2) + 144*(-1 + 5*x^2)))/8",
            "-18*x*(-1 + x^2)^2",
            "(1 - x^2)^3",
        };
        f.lambdaExpr =
            "-(1/8)*n*(n+1)*(8*n^4 + 16*n^3 + 2*C*n^2 + D*n^2 - 56*n^2 + 2*C*n + D*n - "
            "64*n - 4*C - 6*D + 96)";
        out.push_back(std::move(f));
    }
    {
        FamilySpec f = j6_base("J6.I.b", "exponents (0, 1): b-a-2 = 0, b+a+2 = -2", "p(x) = 1 - x");
        f.paramNames = {"C", "D"};
        f.coeffExprs = {
            "D + 3*D*x",
            "C + (-2*C - 2*D)*x + (-5*C/3 + 5*(-2*C - 2*D)/3 - 2*D/3)*x^2",
            "(12*(3 + 15*x - 15*x^2 - 35*x^3) - C*(-1 - 5*x + x^2 + 5*x^3) - D*(-1 - 5*x + "
            "x^2 + 5*x^3))/2",
            "-((-1 + x^2)*(C*(-1 + x^2) + D*(-1 + x^2) + 72*(-1 + 2*x + 7*x^2)))/4",
            "-3*(1 + 7*x)*(-1 + x^2)^2",
            "(1 - x^2)^3",
        };
        f.lambdaExpr =
            "-(1/4)*n*(n+2)*(4*n^4 + 16*n^3 + C*n^2 + D*n^2 - 28*n^2 + 2*C*n + 2*D*n - "
            "88*n - 3*C - 7*D + 96)";
        out.push_back(std::move(f));
    }
    {
        FamilySpec f = j6_base("J6.I.c", "exponents (0, 2): b-a-2 = 0, b+a+2 = -4", "p(x) = (1 - x)^2");
        f.paramNames = {"C", "D"};
        f.coeffExprs = {
            "D + 2*D*x",
            "C + (-10*C - 5*D)*x + (-15*C - 7*D)*x^2",
            "12*(3 + 6*x - 21*x^2 - 28*x^3) - 2*C*(-1 - 3*x + x^2 + 3*x^3) - D*(-1 - 3*x + "
            "x^2 + 3*x^3)",
            "-((-1 + x^2)*(2*C*(-1 + x^2) + D*(-1 + x^2) + 48*(-1 + 7*x + 14*x^2)))/4",
            "-6*(1 + 4*x)*(-1 + x^2)^2",
            "(1 - x^2)^3",
        };
        f.lambdaExpr =
            "-(1/4)*n*(n+3)*(4*n^4 + 24*n^3 + 2*C*n^2 + D*n^2 - 20*n^2 + 6*C*n + 3*D*n - "
            "168*n - 8*C - 6*D + 160)";
        out.push_back(std::move(f));
    }
    {
        FamilySpec f = j6_base("J6.I.d", "exponents (1, 0): b-a-2 = 2, b+a+2 = 0", "p(x) = 1 + x");
        f.paramNames = {"C", "D"};
        f.coeffExprs = {
            "D - 3*D*x",
            "2*D*x*(-1 + 2*x) + C*(1 + 2*x - 5*x^2)",
            "(12*(-3 + 15*x + 15*x^2 - 35*x^3) + C*(-1 + 5*x + x^2 - 5*x^3) + D*(1 - 5*x - "
            "x^2 + 5*x^3))/2",
            "((-1 + x^2)*(C - C*x^2 + 72*(1 + 2*x - 7*x^2) + D*(-1 + x^2)))/4",
            "-3*(-1 + 7*x)*(-1 + x^2)^2",
            "(1 - x^2)^3",
        };
        f.lambdaExpr =
            "-(1/4)*n*(n+2)*(4*n^4 + 16*n^3 + C*n^2 - D*n^2 - 28*n^2 + 2*C*n - 2*D*n - "
            "88*n - 3*C + 7*D + 96)";
        out.push_back(std::move(f));
    }
    {
        FamilySpec f = j6_base("J6.I.e", "exponents (1, 1): b-a-2 = 2, b+a+2 = -2", "p(x) = (1 - x)(1 + x)");
        f.paramNames = {"C", "D"};
        f.coeffExprs = {
            "D*x",
            "C - (5*C + D)*x^2",
            "(x*(D - D*x^2 + 96*(3 - 7*x^2) - 4*C*(-1 + x^2)))/2",
            "-((-1 + x^2)*(4*C*(-1 + x^2) + D*(-1 + x^2) + 576*(-1 + 7*x^2)))/24",
            "-24*x*(-1 + x^2)^2",
            "(1 - x^2)^3",
        };
        f.lambdaExpr =
            "-(1/24)*n*(n+3)*(24*n^4 + 144*n^3 + 4*C*n^2 + D*n^2 - 120*n^2 + 12*C*n + "
            "3*D*n - 1008*n - 16*C - 10*D + 960)";
        out.push_back(std::move(f));
    }
    {
        FamilySpec f = j6_base("J6.I.f", "exponents (1, 2): b-a-2 = 2, b+a+2 = -4", "p(x) = (1 - x)^2 (1 + x)");
        f.paramNames = {"C", "D"};
        f.coeffExprs = {
            "D + 5*D*x",
            "-2*D*x*(1 + 3*x) + C*(1 - 2*x - 7*x^2)",
            "(-(C*(-1 - 7*x + x^2 + 7*x^3)) - D*(-1 - 7*x + x^2 + 7*x^3) - 72*(-1 - 7*x + "
            "7*x^2 + 21*x^3))/3",
            "-((-1 + x^2)*(C*(-1 + x^2) + D*(-1 + x^2) + 144*(-1 + 2*x + 9*x^2)))/6",
            "-3*(1 + 9*x)*(-1 + x^2)^2",
            "(1 - x^2)^3",
        };
        f.lambdaExpr =
            "-(1/6)*n*(n+4)*(6*n^4 + 48*n^3 + C*n^2 + D*n^2 - 6*n^2 + 4*C*n + 4*D*n - "
            "408*n - 5*C - 11*D + 360)";
        out.push_back(std::move(f));
    }
    {
        FamilySpec f = j6_base("J6.I.g", "exponents (2, 0): b-a-2 = 4, b+a+2 = 0", "p(x) = (1 + x)^2");
        f.paramNames = {"C", "D"};
        f.coeffExprs = {
            "D - 2*D*x",
            "C + (10*C - 5*D)*x + (-15*C + 7*D)*x^2",
            "12*(-3 + 6*x + 21*x^2 - 28*x^3) + C*(-2 + 6*x + 2*x^2 - 6*x^3) + D*(1 - 3*x - "
            "x^2 + 3*x^3)",
            "((-1 + x^2)*(48*(1 + 7*x - 14*x^2) - 2*C*(-1 + x^2) + D*(-1 + x^2)))/4",
            "-6*(-1 + 4*x)*(-1 + x^2)^2",
            "(1 - x^2)^3",
        };
        f.lambdaExpr =
            "-(1/4)*n*(n+3)*(4*n^4 + 24*n^3 + 2*C*n^2 - D*n^2 - 20*n^2 + 6*C*n - 3*D*n - "
            "168*n - 8*C + 6*D + 160)";
        out.push_back(std::move(f));
    }
    {
        FamilySpec f = j6_base("J6.I.h", "exponents (2, 1): b-a-2 = 4, b+a+2 = -2", "p(x) = (1 - x)(1 + x)^2");
        f.paramNames = {"C", "D"};
        f.coeffExprs = {
            "D - 5*D*x",
            "C + (2*C - 2*D)*x + (-7*C + 6*D)*x^2",
            "(C*(-1 + 7*x + x^2 - 7*x^3) + D*(1 - 7*x - x^2 + 7*x^3) - 72*(1 - 7*x - 7*x^2 "
            "+ 21*x^3))/3",
            "((-1 + x^2)*(C - C*x^2 + D*(-1 + x^2) - 144*(-1 - 2*x + 9*x^2)))/6",
            "-3*(-1 + 9*x)*(-1 + x^2)^2",
            "(1 - x^2)^3",
        };
        f.lambdaExpr =
            "-(1/6)*n*(n+4)*(6*n^4 + 48*n^3 + C*n^2 - D*n^2 - 6*n^2 + 4*C*n - 4*D*n - "
            "408*n - 5*C + 11*D + 360)";
        out.push_back(std::move(f));
    }
    {
        FamilySpec f = j6_base("J6.I.i", "exponents (2, 2): b-a-2 = 4, b+a+2 = -4", "p(x) = (1 - x)^2 (1 + x)^2");
        f.paramNames = {"C", "D"};
        f.coeffExprs = {
            "D*x",
            "C - (7*C + D)*x^2",
            "(x*(720 + 6*C + D - (2160 + 6*C + D)*x^2))/3",
            "-((-1 + x^2)*(6*C*(-1 + x^2) + D*(-1 + x^2) + 1440*(-1 + 9*x^2)))/48",
            "-30*x*(-1 + x^2)^2",
            "(1 - x^2)^3",
        };
        f.lambdaExpr =
            "-(1/48)*n*(n+5)*(48*n^4 + 480*n^3 + 6*C*n^2 + D*n^2 + 240*n^2 + 30*C*n + "
            "5*D*n - 4800*n - 36*C - 14*D + 4032)";
        out.push_back(std::move(f));
    }

    // One boundary exponent free (at the right endpoint).
    const std::string lamPre6II = "-(n*(-a + n - 1))/((a - 2)*(a - 1)*a)";
    const std::string lamBody6II =
        "(n^2*a^5 - 3*n*a^5 + 2*a^5 - 2*n^3*a^4 + 2*n^2*a^4 + 8*n*a^4 - 8*a^4 + n^4*a^3 + "
        "4*n^3*a^3 - 14*n^2*a^3 - n*a^3 + 10*a^3 - 3*n^4*a^2 + 2*n^3*a^2 + 13*n^2*a^2 - "
        "C*a^2 + D*a^2 + C*n*a^2 - 8*n*a^2 - 4*a^2 + 2*n^4*a - 4*n^3*a - C*n^2*a - 2*n^2*a "
        "- 4*D*a + C*n*a + D*n*a + 4*n*a - D*n^2 + 2*D + D*n)";
    {
        FamilySpec f = j6_base("J6.II.a", "left exponent 0, right exponent -2-a",
                               "p(x) = (1 - x)^(-2-a)");
        f.paramNames = {"a", "C", "D"};
        f.constraints = {
            require("a < -4", [](const Params& q) { return at(q, "a") < Rational(-4); }),
        };
        const std::string X4 =
            "6*a^4*(1 + x)^2 - (-1 + x)*(C + 144*x + C*x) - 36*a^3*(-1 + x^2) + 18*a^2*(1 "
            "- 6*x + x^2) + 12*a*(-5 - 4*x + 13*x^2)";
        const std::string X3 =
            "a^5*(1 + x)^3 - 2*a^4*(1 + x)^2*(-5 + 4*x) + 2*(-1 + x)^2*(12 + C + 24*x + "
            "C*x) + 3*a^3*(5 - 9*x - 9*x^2 + 5*x^3) + a^2*(-22 - 48*x + 42*x^2 + 20*x^3) + "
            "a*(-28 + 60*x + 60*x^2 - 76*x^3 - C*(-1 + x)*(1 + x)^2)";
        const std::string X2 =
            "a^3*C*(1 + x)^2 + 4*D*(-1 + x^2) + 2*a*(D + C*(-1 + x)^2 - D*x^2) - a^2*(1 + "
            "x)*(2*D*(-1 + x) + C*(-5 + 3*x))";
        f.coeffExprs = {
            "D*(2 + a + a*x)/a",
            "(" + X2 + ")/(2*a*(-2 + a + a^2))",
            "(" + X3 + ")/(-2 + a + a^2)",
            "-((-1 + x^2)*(" + X4 + "))/(2*(-2 + a + a^2))",
            "3*(2 + a - 4*x + a*x)*(-1 + x^2)^2",
            "(1 - x^2)^3",
        };
        f.lambdaExpr =
            "-(n*(-a + n - 1))/(2*(a - 1)*a*(a + 2)) * (2*n^2*a^5 - 6*n*a^5 + 4*a^5 - "
            "4*n^3*a^4 + 12*n^2*a^4 - 8*n*a^4 + 2*n^4*a^3 - 8*n^3*a^3 + 4*n^2*a^3 + "
            "14*n*a^3 - 12*a^3 + 2*n^4*a^2 + 4*n^3*a^2 - 22*n^2*a^2 - C*a^2 + 2*D*a^2 + "
            "C*n*a^2 + 8*n*a^2 + 8*a^2 - 4*n^4*a + 8*n^3*a - C*n^2*a + 4*n^2*a + 2*D*a + "
            "C*n*a - 8*n*a - 4*D)";
        out.push_back(std::move(f));
    }
    {
        FamilySpec f = j6_base("J6.II.b", "left exponent 1, right exponent -3-a",
                               "p(x) = (1 - x)^(-3-a) (1 + x)");
        f.paramNames = {"a", "C", "D"};
        f.constraints = {
            require("a < -5", [](const Params& q) { return at(q, "a") < Rational(-5); }),
        };
        const std::string X4 =
            "D - D*x^2 + 3*a^5*(1 + x)^2 - a*(-1 + x)*(72 + C - 72*x + C*x) - 6*a^4*(-3 + "
            "2*x + 5*x^2) - 6*a^2*(9 - 38*x + 25*x^2) + 3*a^3*(-13 - 26*x + 35*x^2)";
        const std::string X3 =
            "-12*a^5*(-1 + x)*(1 + x)^2 + a^6*(1 + x)^3 + 4*D*(2 - x - 2*x^2 + x^3) - "
            "24*a^3*(4 - x - 8*x^2 + 5*x^3) + a^4*(7 - 75*x - 27*x^2 + 55*x^3) + 2*a*(-1 + "
            "x)*(-24*(-1 + x)^2 - D*(1 + x)^2 + 2*C*(-2 - x + x^2)) - 2*a^2*(C*(-1 + x)*(1 "
            "+ x)^2 - 2*(7 + 45*x - 75*x^2 + 31*x^3))";
        const std::string X2 =
            "-8*D*(-2 + x) + a^2*(2*D - 3*C*(-3 + x))*(1 + x) + a^3*C*(1 + x)^2 + "
            "2*a*(3*D*(1 + x) + C*(7 - 4*x + x^2))";
        f.coeffExprs = {
            "D*(4 + a + a*x)/a",
            "(" + X2 + ")/(a*(2 - 3*a + a^2))",
            "(" + X3 + ")/(a*(2 - 3*a + a^2))",
            "-((-1 + x^2)*(" + X4 + "))/(a*(2 - 3*a + a^2))",
            "3*(4 + a - 4*x + a*x)*(-1 + x^2)^2",
            "(1 - x^2)^3",
        };
        f.lambdaExpr = lamPre6II + " * " + lamBody6II;
        out.push_back(std::move(f));
    }
    {
        FamilySpec f = j6_base("J6.II.c", "left exponent 2, right exponent -4-a",
                               "p(x) = (1 - x)^(-4-a) (1 + x)^2");
        f.paramNames = {"a", "C", "D"};
        f.constraints = {
            require("a < -6", [](const Params& q) { return at(q, "a") < Rational(-6); }),
        };
        const std::string X4 =
            "D - D*x^2 + 3*a^5*(1 + x)^2 - 30*a^4*(-1 + x^2) - 30*a^2*(7 - 12*x + 5*x^2) + "
            "15*a^3*(-1 - 10*x + 7*x^2) + a*(C - C*x^2 + 24*(8 - 9*x + 3*x^2))";
        const std::string X3 =
            "a^6*(1 + x)^3 - 6*a^5*(1 + x)^2*(-3 + 2*x) + 4*D*(3 - x - 3*x^2 + x^3) - "
            "30*a^3*(5 + 6*x - 11*x^2 + 4*x^3) + a^4*(55 - 75*x - 75*x^2 + 55*x^3) - "
            "2*a^2*(118 - 306*x + 234*x^2 - 62*x^3 + C*(-1 + x)*(1 + x)^2) + 2*a*(-(D*(-1 "
            "+ x)*(1 + x)^2) + 2*C*(3 - x - 3*x^2 + x^3) - 12*(-13 + 16*x - 9*x^2 + "
            "2*x^3))";
        const std::string X2 =
            "-12*D*(-3 + x) + a^3*C*(1 + x)^2 - a^2*(1 + x)*(-2*D + C*(-13 + 3*x)) + "
            "2*a*(5*D*(1 + x) + C*(17 - 6*x + x^2))";
        f.coeffExprs = {
            "D*(6 + a + a*x)/a",
            "(" + X2 + ")/(a*(2 - 3*a + a^2))",
            "(" + X3 + ")/(a*(2 - 3*a + a^2))",
            "-((-1 + x^2)*(" + X4 + "))/(a*(2 - 3*a + a^2))",
            "3*(6 + a - 4*x + a*x)*(-1 + x^2)^2",
            "(1 - x^2)^3",
        };
        f.lambdaExpr = lamPre6II + " * " + lamBody6II;
        out.push_back(std::move(f));
    }
    {
        FamilySpec f = j6_base("J6.III.a", "left exponent -2-a, right exponent 0",
                               "p(x) = (1 + x)^(-2-a)");
        f.paramNames = {"a", "C", "D"};
        f.constraints = {
            require("a < -4", [](const Params& q) { return at(q, "a") < Rational(-4); }),
        };
        const std::string X4 =
            "6*a^4*(-1 + x)^2 + (C*(-1 + x) - 144*x)*(1 + x) - 36*a^3*(-1 + x^2) + "
            "18*a^2*(1 + 6*x + x^2) + 12*a*(-5 + 4*x + 13*x^2)";
        const std::string X3 =
            "-(C*(-1 + x^2)*(a*(-1 + x) - 2*(1 + x))) + (-2 - a)*(1 - a)*(-(a^3*(-1 + "
            "x)^3) + 9*a^2*(-1 + x)^2*(1 + x)) + (-2 - a)*(1 - a)*(12*(1 + x)^2*(-1 + 2*x) "
            "+ a*(8 + 30*x - 12*x^2 - 26*x^3))";
        const std::string X2 =
            "-(a^3*C*(-1 + x)^2) + 4*D*(-1 + x^2) - 2*a*(1 + x)*(D*(-1 + x) + C*(1 + x)) + "
            "a^2*(-1 + x)*(-2*D*(1 + x) + C*(5 + 3*x))";
        f.coeffExprs = {
            "D*(-2 + a*(-1 + x))/a",
            "(" + X2 + ")/(2*a*(-2 + a + a^2))",
            "-((" + X3 + ")/(-2 + a + a^2))",
            "-((-1 + x^2)*(" + X4 + "))/(2*(-2 + a + a^2))",
            "3*(-2 + a*(-1 + x) - 4*x)*(-1 + x^2)^2",
            "(1 - x^2)^3",
        };
        f.lambdaExpr =
            "-(n*(-a + n - 1))/(2*(a - 1)*a*(a + 2)) * (2*n^2*a^5 - 6*n*a^5 + 4*a^5 - "
            "4*n^3*a^4 + 12*n^2*a^4 - 8*n*a^4 + 2*n^4*a^3 - 8*n^3*a^3 + 4*n^2*a^3 + "
            "14*n*a^3 - 12*a^3 + 2*n^4*a^2 + 4*n^3*a^2 - 22*n^2*a^2 + C*a^2 + 2*D*a^2 - "
            "C*n*a^2 + 8*n*a^2 + 8*a^2 - 4*n^4*a + 8*n^3*a + C*n^2*a + 4*n^2*a + 2*D*a - "
            "C*n*a - 8*n*a - 4*D)";
        out.push_back(std::move(f));
    }
    {
        FamilySpec f = j6_base("J6.III.b", "left exponent -3-a, right exponent 1",
                               "p(x) = (1 - x)(1 + x)^(-3-a)");
        f.paramNames = {"a", "C", "D"};
        f.constraints = {
            require("a < -5", [](const Params& q) { return at(q, "a") < Rational(-5); }),
        };
        const std::string X4 =
            "D + 3*a^5*(-1 + x)^2 - D*x^2 - 6*a^4*(-3 - 2*x + 5*x^2) - 6*a^2*(9 + 38*x + "
            "25*x^2) + 3*a^3*(-13 + 26*x + 35*x^2) - a*(1 + x)*(C*(-1 + x) - 72*(1 + x))";
        const std::string X3 =
            "a^6*(-1 + x)^3 - 12*a^5*(-1 + x)^2*(1 + x) + 4*D*(-2 - x + 2*x^2 + x^3) - "
            "24*a^3*(-4 - x + 8*x^2 + 5*x^3) + a^4*(-7 - 75*x + 27*x^2 + 55*x^3) - 2*a*(1 "
            "+ x)*(D*(-1 + x)^2 + 24*(1 + x)^2 - 2*C*(-2 + x + x^2)) - 2*a^2*(C*(-1 + "
            "x)^2*(1 + x) - 2*(-7 + 45*x + 75*x^2 + 31*x^3))";
        const std::string X2 =
            "a^3*C*(-1 + x)^2 + 8*D*(2 + x) - a^2*(-1 + x)*(2*D + 3*C*(3 + x)) + "
            "2*a*(-3*D*(-1 + x) + C*(7 + 4*x + x^2))";
        f.coeffExprs = {
            "D*(-4 + a*(-1 + x))/a",
            "(" + X2 + ")/(a*(2 - 3*a + a^2))",
            "(" + X3 + ")/(a*(2 - 3*a + a^2))",
            "-((-1 + x^2)*(" + X4 + "))/(a*(2 - 3*a + a^2))",
            "3*(-1 + x^2)^2*(a*(-1 + x) - 4*(1 + x))",
            "(1 - x^2)^3",
        };
        f.lambdaExpr = lamPre6II + " * " + lamBody6II;
        out.push_back(std::move(f));
    }
    {
        FamilySpec f = j6_base("J6.III.c", "left exponent -4-a, right exponent 2",
                               "p(x) = (1 - x)^2 (1 + x)^(-4-a)");
        f.paramNames = {"a", "C", "D"};
        f.constraints = {
            require("a < -6", [](const Params& q) { return at(q, "a") < Rational(-6); }),
        };
        const std::string X4 =
            "D + 3*a^5*(-1 + x)^2 - D*x^2 - 30*a^4*(-1 + x^2) - 30*a^2*(7 + 12*x + 5*x^2) "
            "+ 15*a^3*(-1 + 10*x + 7*x^2) + a*(C - C*x^2 + 24*(8 + 9*x + 3*x^2))";
        const std::string X3 =
            "a^6*(-1 + x)^3 - 6*a^5*(-1 + x)^2*(3 + 2*x) + 4*D*(-3 - x + 3*x^2 + x^3) - "
            "30*a^3*(-5 + 6*x + 11*x^2 + 4*x^3) + a^4*(-55 - 75*x + 75*x^2 + 55*x^3) + "
            "2*a^2*(118 + 306*x + 234*x^2 + 62*x^3 - C*(-1 + x)^2*(1 + x)) - 2*a*(D*(-1 + "
            "x)^2*(1 + x) - 2*C*(-3 - x + 3*x^2 + x^3) + 12*(13 + 16*x + 9*x^2 + 2*x^3))";
        const std::string X2 =
            "a^3*C*(-1 + x)^2 + 12*D*(3 + x) - a^2*(-1 + x)*(2*D + C*(13 + 3*x)) + "
            "2*a*(-5*D*(-1 + x) + C*(17 + 6*x + x^2))";
        f.coeffExprs = {
            "D*(-6 + a*(-1 + x))/a",
            "(" + X2 + ")/(a*(2 - 3*a + a^2))",
            "(" + X3 + ")/(a*(2 - 3*a + a^2))",
            "-((-1 + x^2)*(" + X4 + "))/(a*(2 - 3*a + a^2))",
            "3*(-6 + a*(-1 + x) - 4*x)*(-1 + x^2)^2",
            "(1 - x^2)^3",
        };
        f.lambdaExpr = lamPre6II + " * " + lamBody6II;
        out.push_back(std::move(f));
    }
    {
        // Both exponents free. The a^3 and a^2 groups in X2 are separate
        // summands: any other grouping would push deg(a_2) past 2, and the
        // soundness tests pin this reading through the interior equations.
        FamilySpec f = j6_base("J6.IV", "both exponents free",
                               "p(x) = (1+x)^((b-a-2)/2) (1-x)^(-(b+a+2)/2)");
        f.paramNames = {"a", "b", "C", "D"};
        f.constraints = {
            require("b - a - 2 > 4",
                    [](const Params& q) { return at(q, "b") - at(q, "a") - Rational(2) > Rational(4); }),
            require("b + a + 2 < -4",
                    [](const Params& q) { return at(q, "b") + at(q, "a") + Rational(2) < Rational(-4); }),
        };
        const std::string X4 =
            "D + 3*a^5*x^2 - D*x^2 + a^2*(42 - 9*b^2 + 66*b*x - 150*x^2) + a^4*(3 + 6*b*x "
            "- 30*x^2) + 3*a^3*(-7 + b^2 - 12*b*x + 35*x^2) + a*(-24 + 6*b^2 + C - 36*b*x "
            "+ 72*x^2 - C*x^2)";
        const std::string X3 =
            "a^6*x^3 - 2*D*(b - 2*x)*(-1 + x^2) + 3*a^5*(x + b*x^2 - 4*x^3) + a^4*(3*b - "
            "27*x + 3*b^2*x - 24*b*x^2 + 55*x^3) + a^3*(b^3 + 84*x - 15*b^2*x - 120*x^3 + "
            "b*(-19 + 69*x^2)) + 2*a*(b^3 - 6*b^2*x + (-24 + 2*C - D)*x*(-1 + x^2) + "
            "b*(-10 + C + 18*x^2 - C*x^2)) + a^2*(-3*b^3 + 24*b^2*x + b*(36 - 84*x^2) + "
            "2*x*(-54 + C + 62*x^2 - C*x^2))";
        const std::string X2 =
            "b*D*(b - 2*x) + a^3*C*x^2 + a^2*(C + D + 2*b*C*x - 3*C*x^2) + a*(2*D*(-1 + "
            "b*x) + C*(-2 + b^2 - 2*b*x + 2*x^2))";
        f.coeffExprs = {
            "D*(b + a*x)/a",
            "(" + X2 + ")/(a*(2 - 3*a + a^2))",
            "(" + X3 + ")/(a*(2 - 3*a + a^2))",
            "-((-1 + x^2)*(" + X4 + "))/(a*(2 - 3*a + a^2))",
            "3*(b + (-4 + a)*x)*(-1 + x^2)^2",
            "(1 - x^2)^3",
        };
        f.lambdaExpr = lamPre6II + " * " + lamBody6II;
        out.push_back(std::move(f));
    }
}

// --------------------------- known-failing examples ------------------------

void append_examples(std::vector<FamilySpec>& out) {
    {
        FamilySpec f;
        f.id = "EX4.1";
        f.order = 6;
        f.caseNote = "solves the interior equations; last boundary condition fails at 1";
        f.weightNote = "p(x) = (x-1)^2 (x+1)";
        f.interval = Interval::bounded(Rational(-1), Rational(1));
        f.status = FamilyStatus::KnownFailing;
        f.failNote = "last boundary expression at hi";
        f.coeffExprs = {
            "360*(x + 1)",
            "720*x*(5*x + 3)",
            "240*(7*x^3 + 6*x^2 - 2*x - 1)",
            "60*x*(x + 1)^2*(5*x - 3)",
            "3*(x - 1)*(x + 1)^3*(9*x - 1)",
            "(x - 1)^2*(x + 1)^4",
        };
        out.push_back(std::move(f));
    }
    {
        FamilySpec f;
        f.id = "EX4.2";
        f.order = 6;
        f.paramNames = {"m", "A", "C"};
        f.constraints = {
            require("m != 0", [](const Params& q) { return !at(q, "m").is_zero(); }),
        };
        f.caseNote = "solves the interior equations; last boundary condition fails at 0";
        f.weightNote = "p(x) = e^(-m^2 x) x^2";
        f.interval = Interval::right_of(Rational(0));
        f.status = FamilyStatus::KnownFailing;
        f.failNote = "last boundary expression at lo";
        f.coeffExprs = {
            "18*m^8*x - 60*m^6 - 8*A*m^4*x + 24*A*m^2 + C*(3 - m^2*x)",
            "x*(C - 3*m^8*x) + A*(m^4*x^2 + 12)",
            "5*x^2*m^6 - 2*(A*x^2 + 30)*m^2 + 8*A*x",
            "-30*m^2*x + A*x^2 + 30",
            "-3*x*(m^2*x - 4)",
            "x^2",
        };
        out.push_back(std::move(f));
    }
    {
        FamilySpec f;
        f.id = "EX4.3";
        f.order = 6;
        f.paramNames = {"m", "A", "C2", "C1", "C0", "D0", "D1"};
        f.constraints = {
            require("m != 0", [](const Params& q) { return !at(q, "m").is_zero(); }),
        };
        f.caseNote = "rootless leading coefficient; interior equation k=1 cannot hold";
        f.weightNote = "p(x) = e^(-m^2 x^2) / (x^2 + 1)";
        f.interval = Interval::whole();
        f.status = FamilyStatus::KnownFailing;
        f.failNote = "determining equation k=1";
        f.coeffExprs = {
            "D0 + D1*x",
            "C2*x^2 + C1*x + C0",
            "-4*m^2*(-10*m^4 + 5*m^2 + A)*x*(x^2 + 1)",
            "10*x^4*m^4 - 10*m^4 + A*x^2 + A",
            "-6*m^2*x*(x^2 + 1)",
            "x^2 + 1",
        };
        out.push_back(std::move(f));
    }
}

std::vector<FamilySpec> build_catalog() {
    std::vector<FamilySpec> out;
    append_order2(out);
    append_order4(out);
    append_order6(out);
    detail::append_order8(out);
    append_examples(out);
    return out;
}

}  // namespace

const std::vector<FamilySpec>& list_catalog() {
    static const std::vector<FamilySpec> catalog = build_catalog();
    return catalog;
}

const FamilySpec& find_family(const std::string& id) {
    for (const auto& f : list_catalog())
        if (f.id == id) return f;
    throw UnknownFamilyError(id);
}

FamilyInstance instantiate(const std::string& id, const Params& params) {
    const FamilySpec& spec = find_family(id);
    for (const auto& name : spec.paramNames)
        if (params.find(name) == params.end())
            throw std::invalid_argument("family " + id + ": missing parameter '" + name + "'");
    for (const auto& c : spec.constraints)
        if (!c.holds(params)) throw ConstraintViolation(id, c.text);
    std::vector<Poly> coeffs;
    coeffs.reserve(spec.coeffExprs.size());
    for (const auto& e : spec.coeffExprs) coeffs.push_back(parse_poly_expr(e, params));
    FamilyInstance inst{&spec, params, DiffOperator(std::move(coeffs)), std::nullopt};
    try {
        inst.weight = build_weight(inst.op, spec.interval);
    } catch (const IrreducibleFactorError&) {
        // Left empty: the weight cannot be put in factored form over Q.
    }
    return inst;
}

Rational eigen_formula(const std::string& id, const Params& params, long n) {
    const FamilySpec& spec = find_family(id);
    for (const auto& c : spec.constraints)
        if (!c.holds(params)) throw ConstraintViolation(id, c.text);
    if (spec.lambdaExpr.empty())
        throw std::domain_error("family " + id + " has no closed-form eigenvalue");
    Params q = params;
    q["n"] = Rational(n);
    return parse_scalar_expr(spec.lambdaExpr, q);
}

namespace {

std::vector<ClassicalSpecialization> build_classical() {
    std::vector<Poly> hermite2{Poly({Rational(0), Rational(-2)}), Poly({Rational(1)})};
    std::vector<Poly> laguerre2{Poly({Rational(1), Rational(-1)}), Poly({Rational(0), Rational(1)})};
    std::vector<Poly> legendre2{Poly({Rational(0), Rational(-2)}),
                                Poly({Rational(1), Rational(0), Rational(-1)})};
    std::vector<Poly> cheb1_2{Poly({Rational(0), Rational(-1)}),
                              Poly({Rational(1), Rational(0), Rational(-1)})};
    std::vector<Poly> cheb2_2{Poly({Rational(0), Rational(-3)}),
                              Poly({Rational(1), Rational(0), Rational(-1)})};

    auto R = [](long v) { return Rational(v); };
    std::vector<ClassicalSpecialization> out;
    out.push_back({"H4", {{"m1", R(0)}, {"m2", R(1)}, {"A", R(-4)}}, "hermite-4",
                   [](long n) { return Rational(4 * n * n); },
                   std::make_pair(hermite2, 2)});
    out.push_back({"L4", {{"a", R(4)}, {"b", R(-2)}, {"A", R(-5)}}, "laguerre-4",
                   [](long n) { return Rational(n * n); },
                   std::make_pair(laguerre2, 2)});
    out.push_back({"J4.b0", {{"a", R(-2)}, {"A", R(14)}}, "legendre-4",
                   [](long n) { return Rational(n * n) * Rational((n + 1) * (n + 1)); },
                   std::make_pair(legendre2, 2)});
    out.push_back({"J4.b0", {{"a", R(-1)}, {"A", R(7)}}, "chebyshev1-4",
                   [](long n) { return Rational(n).pow(4); },
                   std::make_pair(cheb1_2, 2)});
    out.push_back({"J4.b0", {{"a", R(-3)}, {"A", R(23)}}, "chebyshev2-4",
                   [](long n) { return Rational(n * n) * Rational((n + 2) * (n + 2)); },
                   std::make_pair(cheb2_2, 2)});
    out.push_back({"H6", {{"D", R(-8)}, {"C", R(16)}}, "hermite-6",
                   [](long n) { return Rational(-8) * Rational(n).pow(3); },
                   std::make_pair(hermite2, 3)});
    // The sixth-order Laguerre specialization is the cube of x y'' + (1-x) y',
    // whose eigenvalues are (-n)^3 = -n^3.
    out.push_back({"L6", {{"a", R(9)}, {"b", R(-3)}, {"A", R(-21)}, {"C", R(13)}}, "laguerre-6",
                   [](long n) { return -Rational(n).pow(3); },
                   std::make_pair(laguerre2, 3)});
    out.push_back({"J6.I.a", {{"C", R(36)}, {"D", R(-8)}}, "legendre-6",
                   [](long n) { return -Rational(n).pow(3) * Rational(n + 1).pow(3); },
                   std::make_pair(legendre2, 3)});
    out.push_back({"H8", {{"D", R(-256)}, {"F", R(-64)}, {"G", R(16)}}, "hermite-8",
                   [](long n) { return Rational(16) * Rational(n).pow(4); },
                   std::make_pair(hermite2, 4)});
    out.push_back({"L8",
                   {{"a", R(16)}, {"b", R(-4)}, {"A", R(-54)}, {"C", R(187)}, {"F", R(-29)}},
                   "laguerre-8",
                   [](long n) { return Rational(n).pow(4); },
                   std::make_pair(laguerre2, 4)});
    out.push_back({"J8.I.a", {{"D", R(-1856)}, {"F", R(-216)}, {"G", R(16)}}, "legendre-8",
                   [](long n) { return Rational(n).pow(4) * Rational(n + 1).pow(4); },
                   std::make_pair(legendre2, 4)});
    return out;
}

}  // namespace

const std::vector<ClassicalSpecialization>& classical_specializations() {
    static const std::vector<ClassicalSpecialization> list = build_classical();
    return list;
}

}  // namespace polyspec
