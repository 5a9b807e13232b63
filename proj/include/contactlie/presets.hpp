#pragma once

#include <map>
#include <string>

#include "contactlie/algebra.hpp"

namespace contactlie {

struct Preset {
    std::string name;
    StructureConstants constants;
    ContactData data;
};

/// Named catalog: heisenberg, su2, sl2 and the two solvable patterns case1,
/// case2. Every entry is Jacobi-clean and contact with xi = span{v1, v2},
/// alpha = theta0.
const std::map<std::string, Preset>& preset_catalog();

/// Lookup; throws InputError for unknown names.
const Preset& preset(const std::string& name);

} // namespace contactlie
