// Acceptance suite: one line per criterion, exact checks throughout.
// Exit status is the number of failed criteria.

#include <functional>
#include <iostream>

#include "polyspec/json_io.hpp"
#include "polyspec/spectra.hpp"
#include "test_helpers.hpp"

using namespace polyspec;
using polyspec::testing::Rng;
using polyspec::testing::draw_params;
using polyspec::testing::example_operator_41;

namespace {

int failures = 0;

void criterion(int number, const std::string& what, const std::function<bool()>& run) {
    bool ok = false;
    std::string note;
    try {
        ok = run();
    } catch (const std::exception& e) {
        note = std::string(" [exception: ") + e.what() + "]";
    }
    std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << number << ": " << what << note
              << "\n";
    if (!ok) ++failures;
}

bool all_zero(const std::vector<std::vector<Rational>>& m) {
    for (const auto& row : m)
        for (const auto& v : row)
            if (!v.is_zero()) return false;
    return true;
}

struct ClassicalRow {
    std::string familyId;
    Params params;
    std::function<Rational(long)> lambda;
    std::string note;
};

std::vector<ClassicalRow> classical_rows() {
    auto R = [](long v) { return Rational(v); };
    return {
        {"H4", {{"m1", R(0)}, {"m2", R(1)}, {"A", R(-4)}},
         [](long n) { return Rational(4 * n * n); }, "4n^2"},
        {"L4", {{"a", R(4)}, {"b", R(-2)}, {"A", R(-5)}},
         [](long n) { return Rational(n * n); }, "n^2"},
        {"J4.b0", {{"a", R(-2)}, {"A", R(14)}},
         [](long n) { return Rational(n * n * (n + 1) * (n + 1)); }, "n^2(n+1)^2"},
        {"J4.b0", {{"a", R(-1)}, {"A", R(7)}},
         [](long n) { return Rational(n).pow(4); }, "n^4"},
        {"J4.b0", {{"a", R(-3)}, {"A", R(23)}},
         [](long n) { return Rational(n * n * (n + 2) * (n + 2)); }, "n^2(n+2)^2"},
        {"H6", {{"D", R(-8)}, {"C", R(16)}},
         [](long n) { return Rational(-8) * Rational(n).pow(3); }, "-8n^3"},
        // This specialization is the third iterate of x y'' + (1-x) y', whose
        // eigenvalues are -n, so lambda_n = (-n)^3 = -n^3; the general family
        // formula gives the same value at these parameters.
        {"L6", {{"a", R(9)}, {"b", R(-3)}, {"A", R(-21)}, {"C", R(13)}},
         [](long n) { return -Rational(n).pow(3); }, "-n^3 (third-iterate value)"},
        {"J6.I.a", {{"C", R(36)}, {"D", R(-8)}},
         [](long n) { return -Rational(n).pow(3) * Rational(n + 1).pow(3); }, "-n^3(n+1)^3"},
        {"H8", {{"D", R(-256)}, {"F", R(-64)}, {"G", R(16)}},
         [](long n) { return Rational(16) * Rational(n).pow(4); }, "16n^4"},
        {"L8", {{"a", R(16)}, {"b", R(-4)}, {"A", R(-54)}, {"C", R(187)}, {"F", R(-29)}},
         [](long n) { return Rational(n).pow(4); }, "n^4"},
        {"J8.I.a", {{"D", R(-1856)}, {"F", R(-216)}, {"G", R(16)}},
         [](long n) { return Rational(n).pow(4) * Rational(n + 1).pow(4); }, "n^4(n+1)^4"},
    };
}

// Three seeded draws per valid catalog entry, shared by criteria 2, 3, 7, 10.
const std::vector<std::pair<const FamilySpec*, Params>>& seeded_draws() {
    static const std::vector<std::pair<const FamilySpec*, Params>> cached = [] {
        Rng rng(20260808);
        std::vector<std::pair<const FamilySpec*, Params>> out;
        for (const auto& f : list_catalog()) {
            if (f.status != FamilyStatus::Valid) continue;
            for (int t = 0; t < 3; ++t) out.emplace_back(&f, draw_params(f, rng));
        }
        return out;
    }();
    return cached;
}

FormalCombo combo(std::initializer_list<std::tuple<int, int, long>> terms) {
    FormalCombo c;
    for (const auto& [j, m, v] : terms) c.add(j, m, Rational(v));
    return c;
}

// Q-linear span equality of two sets of rational functions.
bool same_span(const std::vector<RatFunc>& a, const std::vector<RatFunc>& b) {
    auto covers = [](const std::vector<RatFunc>& basis, const std::vector<RatFunc>& test) {
        Poly den = Poly::constant(Rational(1));
        for (const auto& f : basis) den = den * f.den();
        for (const auto& f : test) den = den * f.den();
        auto coords = [&](const RatFunc& f) {
            Poly scaled = f.num() * den.divrem(f.den()).first;
            std::vector<Rational> out(64, Rational(0));
            for (int i = 0; i <= scaled.degree_or(-1); ++i)
                out[static_cast<size_t>(i)] = scaled.coeff(i);
            return out;
        };
        std::vector<std::vector<Rational>> rows;
        for (const auto& f : basis) rows.push_back(coords(f));
        size_t used = 0;
        std::vector<size_t> pivots;
        for (size_t col = 0; col < 64 && used < rows.size(); ++col) {
            size_t p = used;
            while (p < rows.size() && rows[p][col].is_zero()) ++p;
            if (p == rows.size()) continue;
            std::swap(rows[used], rows[p]);
            for (size_t r = 0; r < rows.size(); ++r) {
                if (r == used || rows[r][col].is_zero()) continue;
                Rational f = rows[r][col] / rows[used][col];
                for (size_t k = col; k < 64; ++k) rows[r][k] -= f * rows[used][k];
            }
            pivots.push_back(col);
            ++used;
        }
        for (const auto& f : test) {
            auto v = coords(f);
            for (size_t i = 0; i < used; ++i) {
                size_t col = pivots[i];
                if (v[col].is_zero()) continue;
                Rational fac = v[col] / rows[i][col];
                for (size_t k = col; k < 64; ++k) v[k] -= fac * rows[i][k];
            }
            for (const auto& c : v)
                if (!c.is_zero()) return false;
        }
        return true;
    };
    return covers(a, b) && covers(b, a);
}

}  // namespace

int main() {
    criterion(1, "classical eigenvalue tables, n = 0..8, exact", [] {
        for (const auto& row : classical_rows()) {
            FamilyInstance inst = instantiate(row.familyId, row.params);
            Spectrum s = eigenvalues(inst.op, 8);
            for (long n = 0; n <= 8; ++n)
                if (s.lambdas[static_cast<size_t>(n)] != row.lambda(n)) return false;
        }
        return true;
    });

    criterion(2, "matrix diagonal equals the closed form on 52 entries x 3 draws x n<=8", [] {
        long comparisons = 0;
        for (const auto& [spec, params] : seeded_draws()) {
            FamilyInstance inst = instantiate(spec->id, params);
            Spectrum s = eigenvalues(inst.op, 8);
            for (long n = 0; n <= 8; ++n) {
                if (s.lambdas[static_cast<size_t>(n)] != eigen_formula(spec->id, params, n))
                    return false;
                ++comparisons;
            }
        }
        return comparisons == 52 * 3 * 9;
    });

    criterion(3, "every valid catalog instance passes the full verification", [] {
        for (const auto& [spec, params] : seeded_draws()) {
            FamilyInstance inst = instantiate(spec->id, params);
            if (!verify(inst.op, spec->interval).overall) return false;
        }
        return true;
    });

    criterion(4, "the known-failing examples fail exactly where stated", [] {
        Rng rng(4242);
        // first example: only the last boundary expression, only at the
        // upper endpoint
        auto nothing_else = [](const VerificationReport& r) {
            for (const auto& s : r.structural)
                if (s.status == CheckStatus::Fail || s.status == CheckStatus::Indeterminate)
                    return false;
            for (const auto& c : r.congruences)
                if (c.status == CheckStatus::Fail) return false;
            if (r.admissible && !r.admissible->admissible()) return false;
            return true;
        };

        FamilyInstance ex1 = instantiate("EX4.1", {});
        VerificationReport r1 = verify(ex1.op, ex1.spec->interval);
        if (!nothing_else(r1)) return false;
        for (const auto& d : r1.determining)
            if (!d.pass) return false;
        for (const auto& b : r1.boundary_lo)
            if (!b.pass) return false;
        for (size_t i = 0; i + 1 < r1.boundary_hi.size(); ++i)
            if (!r1.boundary_hi[i].pass) return false;
        if (r1.boundary_hi.back().pass) return false;

        // second example: the same expression, at the lower endpoint
        for (int t = 0; t < 3; ++t) {
            Params q = draw_params(find_family("EX4.2"), rng);
            FamilyInstance ex2 = instantiate("EX4.2", q);
            VerificationReport r2 = verify(ex2.op, ex2.spec->interval);
            if (!nothing_else(r2)) return false;
            for (const auto& d : r2.determining)
                if (!d.pass) return false;
            for (const auto& b : r2.boundary_hi)
                if (!b.pass) return false;
            for (size_t i = 0; i + 1 < r2.boundary_lo.size(); ++i)
                if (!r2.boundary_lo[i].pass) return false;
            if (r2.boundary_lo.back().pass) return false;
        }

        // third example: interior equation k=1 only
        for (int t = 0; t < 3; ++t) {
            Params q = draw_params(find_family("EX4.3"), rng);
            FamilyInstance ex3 = instantiate("EX4.3", q);
            auto det = check_determining(ex3.op);
            for (const auto& d : det) {
                bool expectFail = (d.id == "k=1");
                if (d.pass == expectFail) return false;
            }
        }
        return true;
    });

    criterion(5, "repeated eigenvalue -24 orthogonalizes to the legendre family", [] {
        DiffOperator op = example_operator_41();
        Spectrum s = eigenvalues(op, 3);
        if (s.lambdas != std::vector<Rational>{Rational(0), Rational(-24), Rational(-48),
                                               Rational(-24)})
            return false;
        EigenBasis basis = eigenbasis(op, 3);
        if (basis.polys[0] != Poly::constant(Rational(1))) return false;
        if (basis.polys[1] != Poly::x()) return false;
        if (basis.polys[2] != parse_poly_expr("x^2 - 1/3", {})) return false;
        if (basis.polys[3] != parse_poly_expr("x^3", {})) return false;
        WeightForm w = build_weight(op, Interval::bounded(Rational(-1), Rational(1)));
        MomentTable mt = moments(w, 8);
        EigenBasis ob = orthogonalize_degenerate(basis, s, mt);
        if (ob.polys[3] != parse_poly_expr("x^3 - 3*x/5", {})) return false;
        // cross-multiplication against the classical legendre polynomials
        std::vector<Poly> legendre{
            Poly::constant(Rational(1)), Poly::x(),
            parse_poly_expr("(3*x^2 - 1)/2", {}), parse_poly_expr("(5*x^3 - 3*x)/2", {})};
        for (int d = 0; d <= 3; ++d) {
            const Poly& mine = ob.polys[static_cast<size_t>(d)];
            const Poly& ref = legendre[static_cast<size_t>(d)];
            if (mine * ref.leading() != ref * mine.leading()) return false;
        }
        return true;
    });

    criterion(6, "iterates of the order-2 operators match the classical entries", [] {
        for (const auto& cs : classical_specializations()) {
            if (!cs.iterate) return false;
            FamilyInstance inst = instantiate(cs.familyId, cs.paramValues);
            DiffOperator base(cs.iterate->first);
            DiffOperator acc = base;
            for (int i = 1; i < cs.iterate->second; ++i) acc = compose(acc, base);
            if (acc != inst.op) return false;
        }
        return true;
    });

    criterion(7,
              "symmetry-defect oracle: zero on valid instances, nonzero for the "
              "gaussian-proxied example",
              [] {
                  int checked = 0;
                  for (const auto& [spec, params] : seeded_draws()) {
                      FamilyInstance inst = instantiate(spec->id, params);
                      if (!inst.weight) return false;
                      std::optional<MomentTable> mt;
                      try {
                          mt = moments(*inst.weight, 16);
                      } catch (const UnsupportedWeightClassError&) {
                          continue;  // outside the three moment classes: oracle skipped
                      }
                      if (!all_zero(symmetry_defect(inst.op, *mt, 8))) return false;
                      ++checked;
                  }
                  if (checked == 0) return false;
                  // the third example against the dominating gaussian moment table
                  Params q{{"m", Rational(1)}, {"A", Rational(2)}, {"C2", Rational(3)},
                           {"C1", Rational(1)}, {"C0", Rational(2)}, {"D0", Rational(1)},
                           {"D1", Rational(4)}};
                  FamilyInstance ex3 = instantiate("EX4.3", q);
                  WeightForm gauss;
                  gauss.interval = Interval::whole();
                  gauss.expPoly = parse_poly_expr("-x^2", {});
                  return !all_zero(symmetry_defect(ex3.op, moments(gauss, 16), 8));
              });

    criterion(8, "generator reproduces the explicit interior systems and boundary spans", [] {
        auto ds4 = determining_system(4);
        if (ds4.reduced != std::vector<FormalCombo>{combo({{4, 1, 2}, {3, 0, -1}}),
                                                    combo({{3, 2, 1}, {2, 1, -2}, {1, 0, 2}})})
            return false;
        auto ds6 = determining_system(6);
        if (ds6.reduced !=
            std::vector<FormalCombo>{combo({{6, 1, 3}, {5, 0, -1}}),
                                     combo({{5, 2, 5}, {4, 1, -6}, {3, 0, 3}}),
                                     combo({{4, 3, 1}, {3, 2, -3}, {2, 1, 5}, {1, 0, -5}})})
            return false;
        auto ds8 = determining_system(8);
        if (ds8.reduced !=
            std::vector<FormalCombo>{
                combo({{8, 1, 4}, {7, 0, -1}}), combo({{7, 2, 7}, {6, 1, -6}, {5, 0, 2}}),
                combo({{6, 3, 1}, {5, 2, -2}, {4, 1, 2}, {3, 0, -1}}),
                combo({{5, 4, 1}, {4, 3, -4}, {3, 2, 9}, {2, 1, -14}, {1, 0, 14}})})
            return false;

        std::vector<std::vector<FormalCombo>> explicitSets(9);
        explicitSets[4] = {combo({{4, 0, 1}}), combo({{3, 0, 1}}),
                           combo({{2, 0, 2}, {3, 1, -1}})};
        explicitSets[6] = {combo({{6, 0, 1}}),
                           combo({{5, 0, 1}}),
                           combo({{5, 1, 1}}),
                           combo({{4, 0, 1}}),
                           combo({{4, 1, 1}, {3, 0, -3}}),
                           combo({{4, 2, 1}, {3, 1, -3}, {2, 0, 5}})};
        explicitSets[8] = {combo({{8, 0, 1}}),
                           combo({{7, 0, 1}}),
                           combo({{7, 1, 1}}),
                           combo({{6, 0, 1}}),
                           combo({{6, 1, 1}}),
                           combo({{5, 0, 1}}),
                           combo({{6, 2, 5}, {5, 1, -11}, {4, 0, 14}}),
                           combo({{6, 2, 9}, {5, 1, -17}, {4, 0, 14}}),
                           combo({{5, 2, 1}, {4, 1, -4}, {3, 0, 9}}),
                           combo({{5, 3, 1}, {4, 2, -4}, {3, 1, 9}, {2, 0, -14}})};

        Rng rng(88);
        std::map<int, std::string> sample{{4, "J4.bne0"}, {6, "J6.I.e"}, {8, "J8.I.f"}};
        for (int n : {4, 6, 8}) {
            const auto& f = find_family(sample.at(n));
            FamilyInstance inst = instantiate(f.id, draw_params(f, rng));
            RatFunc rho = log_derivative(inst.op);
            std::vector<RatFunc> mine, theirs;
            for (const auto& c : boundary_reduction(n)) mine.push_back(c.evaluate(inst.op, rho));
            for (const auto& c : explicitSets[static_cast<size_t>(n)])
                theirs.push_back(c.evaluate(inst.op, rho));
            if (mine.size() != theirs.size()) return false;
            if (!same_span(mine, theirs)) return false;
        }
        return true;
    });

    criterion(9, "moment recurrences match brute-force and factorial oracles, k <= 16", [] {
        // bounded case: brute-force polynomial integration
        auto integrate = [](const Poly& p) {
            Poly anti = p.antiderivative();
            return anti.eval(Rational(1)) - anti.eval(Rational(-1));
        };
        for (int A = 0; A <= 3; ++A)
            for (int B = 0; B <= 3; ++B) {
                WeightForm w;
                w.interval = Interval::bounded(Rational(-1), Rational(1));
                if (A) w.powerFactors.push_back({Rational(1), Rational(A)});
                if (B) w.powerFactors.push_back({Rational(-1), Rational(B)});
                Poly wp = parse_poly_expr(
                    "(1 - x)^" + std::to_string(A) + "*(1 + x)^" + std::to_string(B), {});
                MomentTable mt = moments(w, 16);
                Rational mu0 = integrate(wp);
                for (int k = 0; k <= 16; ++k)
                    if (mt.at(k) != integrate(wp * Poly::monomial(Rational(1), k)) / mu0)
                        return false;
            }
        // half-line case against factorials, whole-line case against the
        // double-factorial law and the shift identity
        auto fact = [](int n) {
            Integer f = 1;
            for (int i = 2; i <= n; ++i) f *= i;
            return f;
        };
        for (int A = 0; A <= 3; ++A) {
            WeightForm w;
            w.interval = Interval::right_of(Rational(0));
            if (A) w.powerFactors.push_back({Rational(0), Rational(A)});
            w.expPoly = parse_poly_expr("-x", {});
            MomentTable mt = moments(w, 16);
            for (int k = 0; k <= 16; ++k)
                if (mt.at(k) != Rational(fact(A + k), fact(A))) return false;
        }
        WeightForm g;
        g.interval = Interval::whole();
        g.expPoly = parse_poly_expr("-x^2", {});
        MomentTable mg = moments(g, 16);
        Rational dfact(1);
        for (int k = 2; k <= 16; k += 2) {
            dfact *= Rational(k - 1, 2);
            if (mg.at(k) != dfact || !mg.at(k - 1).is_zero()) return false;
        }
        WeightForm sh;
        sh.interval = Interval::whole();
        Rational c(2, 3);
        sh.expPoly = Poly({Rational(0), Rational(2) * c, Rational(-1)});
        MomentTable msh = moments(sh, 16);
        for (int k = 0; k <= 16; ++k) {
            Rational acc(0);
            for (int j = 0; j <= k; ++j) {
                Integer bc;
                mpz_bin_uiui(bc.get_mpz_t(), static_cast<unsigned long>(k),
                             static_cast<unsigned long>(j));
                acc += Rational(bc) * c.pow(k - j) * mg.at(j);
            }
            if (msh.at(k) != acc) return false;
        }
        return true;
    });

    criterion(10, "congruence identities across the catalog draws", [] {
        for (const auto& [spec, params] : seeded_draws()) {
            if (spec->order == 2) continue;  // outside the identity's derivation range
            FamilyInstance inst = instantiate(spec->id, params);
            auto cs = congruence_checks(inst.op);
            size_t expected = (spec->order == 6) ? 3 : 1;
            if (cs.size() != expected) return false;
            for (const auto& c : cs)
                if (c.status != CheckStatus::Pass) return false;
        }
        return true;
    });

    std::cout << (failures == 0 ? "ACCEPTANCE: all criteria passed"
                                : "ACCEPTANCE: " + std::to_string(failures) + " criteria failed")
              << "\n";
    return failures;
}
