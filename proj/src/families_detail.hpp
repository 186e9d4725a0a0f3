#pragma once

#include "polyspec/families.hpp"

namespace polyspec::detail {

// Convenience builders shared by the catalog translation units.
FamilySpec::Constraint require(const std::string& text,
                               std::function<bool(const Params&)> holds);

void append_order8(std::vector<FamilySpec>& out);

}  // namespace polyspec::detail
