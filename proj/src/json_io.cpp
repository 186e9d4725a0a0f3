#include "polyspec/json_io.hpp"

#include <sstream>

namespace polyspec {

using nlohmann::json;

namespace {

json rational_array(const std::vector<Rational>& v) {
    json arr = json::array();
    for (const auto& r : v) arr.push_back(r.str());
    return arr;
}

json poly_to_json(const Poly& p) {
    json arr = json::array();
    for (const auto& c : p.coeffs()) arr.push_back(c.str());
    return arr;
}

std::string endpoint_str(const std::optional<Rational>& e, bool lo) {
    if (!e) return lo ? "-inf" : "+inf";
    return e->str();
}

}  // namespace

json operator_to_json(const DiffOperator& op) {
    json coeffs = json::object();
    for (int k = 1; k <= op.order(); ++k) {
        if (op.coeff(k).is_zero()) continue;
        coeffs[std::to_string(k)] = poly_to_json(op.coeff(k));
    }
    return json{{"order", op.order()}, {"coeffs", coeffs}};
}

DiffOperator operator_from_json(const json& j) {
    if (!j.is_object() || !j.contains("order") || !j.contains("coeffs"))
        throw std::invalid_argument("operator JSON: need {\"order\": n, \"coeffs\": {...}}");
    if (!j["order"].is_number_integer())
        throw std::invalid_argument("operator JSON: \"order\" must be an integer");
    int n = j["order"].get<int>();
    if (n < 2 || n % 2 != 0)
        throw std::invalid_argument("operator JSON: order must be even and >= 2");
    std::vector<Poly> coeffs(static_cast<size_t>(n));
    for (const auto& [key, arr] : j["coeffs"].items()) {
        int k = 0;
        try {
            k = std::stoi(key);
        } catch (...) {
            throw std::invalid_argument("operator JSON: bad coefficient key '" + key + "'");
        }
        if (k < 1 || k > n)
            throw std::invalid_argument("operator JSON: coefficient key '" + key +
                                        "' outside 1.." + std::to_string(n));
        if (!arr.is_array())
            throw std::invalid_argument("operator JSON: coefficient '" + key +
                                        "' must be an array of rationals");
        std::vector<Rational> c;
        for (const auto& item : arr) c.push_back(Rational::parse(item.get<std::string>()));
        coeffs[static_cast<size_t>(k - 1)] = Poly(std::move(c));
    }
    return DiffOperator(std::move(coeffs));
}

json weight_to_json(const WeightForm& w) {
    json powers = json::array();
    for (const auto& pf : w.powerFactors)
        powers.push_back(json::array({pf.root.str(), pf.exponent.str()}));
    json essential = json::array();
    for (const auto& ef : w.essentialFactors)
        essential.push_back(json{{"root", ef.root.str()}, {"tail", poly_to_json(ef.tail)}});
    return json{{"powers", powers},
                {"expPoly", poly_to_json(w.expPoly)},
                {"essential", essential},
                {"interval", json::array({endpoint_str(w.interval.lo, true),
                                          endpoint_str(w.interval.hi, false)})}};
}

json report_to_json(const VerificationReport& rep) {
    json det = json::array();
    for (const auto& d : rep.determining) {
        json e{{"id", d.id}, {"pass", d.pass}};
        if (d.residual) e["residual"] = d.residual->str();
        det.push_back(std::move(e));
    }
    auto side_json = [](const std::vector<BoundaryResult>& side) {
        json arr = json::array();
        for (const auto& b : side)
            arr.push_back(json{{"label", b.label},
                               {"verdict", to_string(b.verdict)},
                               {"pass", b.pass}});
        return arr;
    };
    json structural = json::array();
    for (const auto& s : rep.structural)
        structural.push_back(json{{"name", s.name},
                                  {"status", to_string(s.status)},
                                  {"note", s.note}});
    json congruences = json::array();
    for (const auto& c : rep.congruences) {
        json e{{"id", c.id}, {"status", to_string(c.status)}};
        if (c.status == CheckStatus::Fail) e["residue"] = c.residue.str();
        congruences.push_back(std::move(e));
    }
    json out{{"overall", rep.overall},
             {"determining", det},
             {"boundary", json{{"lo", side_json(rep.boundary_lo)},
                               {"hi", side_json(rep.boundary_hi)}}},
             {"structural", structural},
             {"congruences", congruences}};
    if (rep.weight) out["weight"] = weight_to_json(*rep.weight);
    if (rep.admissible) {
        out["admissible"] = json{
            {"overall", rep.admissible->admissible()},
            {"lo", json{{"integrable", rep.admissible->lo.integrable},
                        {"reason", rep.admissible->lo.reason}}},
            {"hi", json{{"integrable", rep.admissible->hi.integrable},
                        {"reason", rep.admissible->hi.reason}}}};
    }
    if (!rep.boundary_supported) out["unsupported"] = rep.unsupported_note;
    return out;
}

json spectrum_to_json(const Spectrum& s, const EigenBasis& basis, const std::string& warning) {
    json lambdas = rational_array(s.lambdas);
    json groups = json::array();
    for (const auto& g : s.groups) groups.push_back(g);
    json polys = json::array();
    for (const auto& p : basis.polys) polys.push_back(poly_to_json(p));
    json out{{"lambdas", lambdas},
             {"groups", groups},
             {"polys", polys},
             {"orthogonalized", basis.orthogonalized}};
    if (!warning.empty()) out["warning"] = warning;
    return out;
}

json gram_to_json(const std::vector<std::vector<Rational>>& g) {
    json rows = json::array();
    for (const auto& row : g) rows.push_back(rational_array(row));
    return rows;
}

std::string gram_to_csv(const std::vector<std::vector<Rational>>& g) {
    std::ostringstream os;
    for (const auto& row : g) {
        for (size_t j = 0; j < row.size(); ++j) {
            if (j) os << ",";
            os << row[j].str();
        }
        os << "\n";
    }
    return os.str();
}

json catalog_to_json() {
    json arr = json::array();
    for (const auto& f : list_catalog()) {
        json constraints = json::array();
        for (const auto& c : f.constraints) constraints.push_back(c.text);
        arr.push_back(json{{"id", f.id},
                           {"order", f.order},
                           {"params", f.paramNames},
                           {"constraints", constraints},
                           {"case", f.caseNote},
                           {"weight", f.weightNote},
                           {"interval", json::array({endpoint_str(f.interval.lo, true),
                                                     endpoint_str(f.interval.hi, false)})},
                           {"status", f.status == FamilyStatus::Valid ? "valid" : "known-failing"},
                           {"expectedFailure", f.failNote}});
    }
    return arr;
}

json classification_to_json(const RootClassification& rc) {
    return json{{"root", rc.root.str()},
                {"alpha", rc.alpha},
                {"beta", rc.beta},
                {"kind", rc.kind == RootKind::Logarithmic ? "logarithmic" : "ordinary"},
                {"phi", rc.phiAtRoot.str()},
                {"integrableLeft", rc.integrableLeft},
                {"integrableRight", rc.integrableRight}};
}

}  // namespace polyspec
