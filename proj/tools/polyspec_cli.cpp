#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "polyspec/json_io.hpp"

using namespace polyspec;
using nlohmann::json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUnsupported = 2;

DiffOperator load_operator(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw std::invalid_argument("parse error in '" + path + "': " + e.what());
    }
    return operator_from_json(j);
}

std::optional<Rational> parse_endpoint(const std::string& s, bool lo) {
    if (s == "-inf" || s == "+inf" || s == "inf") {
        if (lo && s != "-inf") throw std::invalid_argument("--lo must be finite or -inf");
        if (!lo && s == "-inf") throw std::invalid_argument("--hi must be finite or +inf");
        return std::nullopt;
    }
    return Rational::parse(s);
}

Interval make_interval(const std::string& lo, const std::string& hi) {
    Interval I{parse_endpoint(lo, true), parse_endpoint(hi, false)};
    if (I.lo && I.hi && !(*I.lo < *I.hi))
        throw std::invalid_argument("interval requires lo < hi");
    return I;
}

// Collect the family parameters passed on the command line.
struct ParamFlags {
    std::map<std::string, std::string> raw;

    void attach(CLI::App* cmd) {
        static const std::vector<std::string> names = {
            "a", "b", "c", "d", "A", "B", "C", "D", "F", "G",
            "m", "m1", "m2", "C0", "C1", "C2", "D0", "D1"};
        for (const auto& name : names)
            cmd->add_option("--" + name, raw[name], "family parameter " + name);
    }

    Params params() const {
        Params q;
        for (const auto& [k, v] : raw)
            if (!v.empty()) q[k] = Rational::parse(v);
        return q;
    }
};

// Commands accept either an operator file or an inline catalog instance; a
// catalog instance brings its family's interval convention as the default.
struct OperatorSource {
    std::string path;
    std::string familyId;
    ParamFlags flags;
    CLI::Option* loOpt = nullptr;
    CLI::Option* hiOpt = nullptr;

    void attach(CLI::App* cmd, std::string& lo, std::string& hi, bool withInterval = true) {
        cmd->add_option("file", path, "operator JSON file");
        cmd->add_option("--family", familyId, "catalog id instead of a file");
        flags.attach(cmd);
        if (withInterval) {
            loOpt = cmd->add_option("--lo", lo, "interval lower endpoint (rational or -inf)");
            hiOpt = cmd->add_option("--hi", hi, "interval upper endpoint (rational or +inf)");
        }
    }

    std::pair<DiffOperator, Interval> resolve(const std::string& lo, const std::string& hi) const {
        if (path.empty() == familyId.empty())
            throw std::invalid_argument("give exactly one of an operator file or --family");
        Interval interval = make_interval(lo, hi);
        if (!familyId.empty()) {
            FamilyInstance inst = instantiate(familyId, flags.params());
            if (loOpt && !loOpt->count() && !(hiOpt && hiOpt->count()))
                interval = inst.spec->interval;
            return {inst.op, interval};
        }
        return {load_operator(path), interval};
    }
};

int run_verify(const OperatorSource& src, const std::string& lo, const std::string& hi) {
    auto [op, interval] = src.resolve(lo, hi);
    VerificationReport rep = verify(op, interval);
    std::cout << report_to_json(rep).dump(2) << "\n";
    if (rep.overall) return kExitPass;
    if (rep.any_failure()) return kExitFail;
    return kExitUnsupported;
}

int run_family(const std::string& id, const ParamFlags& flags) {
    FamilyInstance inst = instantiate(id, flags.params());
    std::cout << operator_to_json(inst.op).dump(2) << "\n";
    return kExitPass;
}

int run_eigen(const OperatorSource& src, int maxDegree, const std::string& lo,
              const std::string& hi) {
    auto [op, interval] = src.resolve(lo, hi);
    Spectrum s = eigenvalues(op, maxDegree);
    EigenBasis basis = eigenbasis(op, maxDegree);
    std::string warning;
    try {
        WeightForm w = build_weight(op, interval);
        MomentTable mt = moments(w, 2 * maxDegree);
        basis = orthogonalize_degenerate(basis, s, mt);
    } catch (const UnsupportedWeightClassError& e) {
        warning = e.what();
    } catch (const IrreducibleFactorError& e) {
        warning = e.what();
    }
    std::cout << spectrum_to_json(s, basis, warning).dump(2) << "\n";
    return kExitPass;
}

int run_gram(const OperatorSource& src, int maxDegree, const std::string& lo,
             const std::string& hi, const std::string& format) {
    auto [op, interval] = src.resolve(lo, hi);
    Spectrum s = eigenvalues(op, maxDegree);
    EigenBasis basis = eigenbasis(op, maxDegree);
    WeightForm w = build_weight(op, interval);
    MomentTable mt = moments(w, 2 * maxDegree);
    basis = orthogonalize_degenerate(basis, s, mt);
    auto G = gram(basis, mt);
    if (format == "csv")
        std::cout << gram_to_csv(G);
    else
        std::cout << gram_to_json(G).dump(2) << "\n";
    return kExitPass;
}

int run_classify(const OperatorSource& src) {
    auto [op, interval] = src.resolve("-inf", "+inf");
    (void)interval;
    json roots = json::array();
    auto rs = op.leading().rational_roots();
    for (const auto& [r, mult] : rs) roots.push_back(classification_to_json(classify_root(op, r)));
    // Candidate intervals: consecutive rational roots of a_n plus infinite ends.
    std::vector<std::optional<Rational>> cuts;
    cuts.push_back(std::nullopt);
    for (const auto& [r, mult] : rs) cuts.push_back(r);
    cuts.push_back(std::nullopt);
    json intervals = json::array();
    for (size_t i = 0; i + 1 < cuts.size(); ++i) {
        Interval I{cuts[i], cuts[i + 1]};
        json entry{{"interval", json::array({I.lo ? I.lo->str() : "-inf",
                                             I.hi ? I.hi->str() : "+inf"})}};
        try {
            WeightForm w = build_weight(op, I);
            entry["admissible"] = admissibility(w).admissible();
        } catch (const IrreducibleFactorError& e) {
            entry["admissible"] = nullptr;
            entry["note"] = e.what();
        }
        intervals.push_back(std::move(entry));
    }
    std::cout << json{{"roots", roots}, {"candidateIntervals", intervals}}.dump(2) << "\n";
    return kExitPass;
}

int run_catalog(const std::string& outPath) {
    json j = catalog_to_json();
    if (!outPath.empty()) {
        std::ofstream out(outPath);
        if (!out) throw std::invalid_argument("cannot write '" + outPath + "'");
        out << j.dump(2) << "\n";
    } else {
        std::cout << j.dump(2) << "\n";
    }
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact construction, verification and spectra of self-adjoint "
                 "differential operators with polynomial coefficients"};
    app.require_subcommand(1);

    std::string id, lo = "-inf", hi = "+inf", format = "json", outPath;
    int maxDegree = 8;
    long seed = 0;

    auto* cVerify = app.add_subcommand("verify", "verify self-adjointness of an operator");
    OperatorSource verifySrc;
    verifySrc.attach(cVerify, lo, hi);

    auto* cFamily = app.add_subcommand("family", "instantiate a catalog family as operator JSON");
    cFamily->add_option("id", id, "catalog id, e.g. L4 or J6.I.a")->required();
    ParamFlags flags;
    flags.attach(cFamily);

    auto* cEigen = app.add_subcommand("eigen", "eigenvalues and monic eigenpolynomials");
    OperatorSource eigenSrc;
    eigenSrc.attach(cEigen, lo, hi);
    cEigen->add_option("--max-degree", maxDegree, "largest polynomial degree");

    auto* cGram = app.add_subcommand("gram", "Gram matrix of the orthogonalized eigenbasis");
    OperatorSource gramSrc;
    gramSrc.attach(cGram, lo, hi);
    cGram->add_option("--max-degree", maxDegree, "largest polynomial degree");
    cGram->add_option("--format", format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));

    auto* cClassify = app.add_subcommand("classify", "classify the roots of the leading coefficient");
    OperatorSource classifySrc;
    classifySrc.attach(cClassify, lo, hi, false);

    auto* cCatalog = app.add_subcommand("catalog", "list the family catalog");
    cCatalog->add_option("--out", outPath, "write catalog JSON to a file");
    cCatalog->add_option("--format", format, "json")->check(CLI::IsMember({"json"}));

    app.add_option("--seed", seed, "seed for randomized suites (reserved)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*cVerify) return run_verify(verifySrc, lo, hi);
        if (*cFamily) return run_family(id, flags);
        if (*cEigen) return run_eigen(eigenSrc, maxDegree, lo, hi);
        if (*cGram) return run_gram(gramSrc, maxDegree, lo, hi, format);
        if (*cClassify) return run_classify(classifySrc);
        if (*cCatalog) return run_catalog(outPath);
    } catch (const ConstraintViolation& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUnsupported;
    } catch (const UnknownFamilyError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUnsupported;
    } catch (const IrreducibleFactorError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUnsupported;
    } catch (const UnsupportedWeightClassError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUnsupported;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUnsupported;
    }
    return kExitUnsupported;
}
