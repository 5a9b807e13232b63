#include "contactlie/presets.hpp"

namespace contactlie {

namespace {

Preset make_preset(std::string name, const Vec3& b01, const Vec3& b02, const Vec3& b12) {
    StructureConstants c = StructureConstants::from_brackets(b01, b02, b12);
    ContactData d = ContactData::make(Vec3::Unit(1), Vec3::Unit(2), Covec3{1, 0, 0});
    return Preset{std::move(name), std::move(c), std::move(d)};
}

std::map<std::string, Preset> build_catalog() {
    std::map<std::string, Preset> cat;
    // [v1, v2] = -v0, all other brackets zero.
    cat.emplace("heisenberg", make_preset("heisenberg", Vec3{0, 0, 0}, Vec3{0, 0, 0}, Vec3{-1, 0, 0}));
    // [v1,v0] = v2, [v2,v0] = -v1, [v2,v1] = v0.
    cat.emplace("su2", make_preset("su2", Vec3{0, 0, -1}, Vec3{0, 1, 0}, Vec3{-1, 0, 0}));
    // [v1,v0] = -v2, [v2,v0] = v1, [v2,v1] = v0.
    cat.emplace("sl2", make_preset("sl2", Vec3{0, 0, 1}, Vec3{0, -1, 0}, Vec3{-1, 0, 0}));
    // Canonical pattern a=0, b=1, m1=1, m2=0.
    cat.emplace("case1", make_preset("case1", Vec3{0, 0, 0}, Vec3{0, 1, 0}, Vec3{-1, 1, 0}));
    // Mirror pattern a=1, b=0, m1=0, m2=1.
    cat.emplace("case2", make_preset("case2", Vec3{0, 0, 1}, Vec3{0, 0, 0}, Vec3{-1, 0, 1}));
    return cat;
}

} // namespace

const std::map<std::string, Preset>& preset_catalog() {
    static const std::map<std::string, Preset> cat = build_catalog();
    return cat;
}

const Preset& preset(const std::string& name) {
    const auto& cat = preset_catalog();
    auto it = cat.find(name);
    if (it == cat.end()) {
        std::string names;
        for (const auto& [key, _] : cat) names += (names.empty() ? "" : ", ") + key;
        throw InputError("unknown preset '" + name + "' (available: " + names + ")");
    }
    return it->second;
}

} // namespace contactlie
