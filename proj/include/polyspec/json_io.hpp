#pragma once

#include <json.hpp>
#include <string>

#include "polyspec/families.hpp"
#include "polyspec/spectra.hpp"

namespace polyspec {

// Operator schema: {"order": n, "coeffs": {"1": ["c0","c1",...], ...}} with
// rationals serialized as strings "p/q" or "p", arrays in ascending degree.
nlohmann::json operator_to_json(const DiffOperator& op);
DiffOperator operator_from_json(const nlohmann::json& j);

nlohmann::json weight_to_json(const WeightForm& w);

nlohmann::json report_to_json(const VerificationReport& rep);

nlohmann::json spectrum_to_json(const Spectrum& s, const EigenBasis& basis,
                                const std::string& warning = "");

nlohmann::json gram_to_json(const std::vector<std::vector<Rational>>& g);
std::string gram_to_csv(const std::vector<std::vector<Rational>>& g);

nlohmann::json catalog_to_json();

nlohmann::json classification_to_json(const RootClassification& rc);

}  // namespace polyspec
