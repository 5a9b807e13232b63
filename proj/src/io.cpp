#include "contactlie/io.hpp"

namespace contactlie {

namespace {

Vec3 vec3_from(const Json& j) {
    if (!j.is_array() || j.size() != 3) throw InputError("expected a 3-vector");
    return Vec3{j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

Json to_array(const Vec3& v) { return Json::array({v[0], v[1], v[2]}); }

Json to_array(const Mat3& m) {
    Json rows = Json::array();
    for (int i = 0; i < 3; ++i) rows.push_back(Json::array({m(i, 0), m(i, 1), m(i, 2)}));
    return rows;
}

} // namespace

std::pair<StructureConstants, ContactData> algebra_from_json(const Json& doc) {
    if (!doc.contains("brackets")) throw InputError("missing 'brackets' object");
    const Json& br = doc["brackets"];
    for (const char* key : {"01", "02", "12"}) {
        if (!br.contains(key)) throw InputError(std::string("missing bracket '") + key + "'");
    }
    std::array<std::string, 3> labels{"v0", "v1", "v2"};
    if (doc.contains("labels")) {
        const Json& lj = doc["labels"];
        if (!lj.is_array() || lj.size() != 3) throw InputError("labels must be 3 strings");
        for (int i = 0; i < 3; ++i) labels[i] = lj[i].get<std::string>();
    }
    StructureConstants c = StructureConstants::from_brackets(
        vec3_from(br["01"]), vec3_from(br["02"]), vec3_from(br["12"]), labels);

    if (!doc.contains("xi") || !doc["xi"].is_array() || doc["xi"].size() != 2) {
        throw InputError("missing 'xi' (two spanning vectors)");
    }
    if (!doc.contains("alpha")) throw InputError("missing 'alpha' covector");
    const Vec3 xi1 = vec3_from(doc["xi"][0]);
    const Vec3 xi2 = vec3_from(doc["xi"][1]);
    const Vec3 a = vec3_from(doc["alpha"]);
    ContactData data = ContactData::make(xi1, xi2, Covec3{a[0], a[1], a[2]});
    return {std::move(c), std::move(data)};
}

Json to_json(const JacobiReport& rep) {
    return Json{{"max_residual", rep.max_residual}, {"pass", rep.pass}};
}

Json to_json(const ContactCheck& check) {
    return Json{{"contact", check.contact}, {"scalar", check.scalar}};
}

Json to_json(const CanonicalFrame& cf) {
    return Json{{"P", to_array(cf.P)},
                {"a", cf.a},
                {"b", cf.b},
                {"m1", cf.m1},
                {"m2", cf.m2},
                {"heisenberg_branch", cf.heisenberg_branch}};
}

Json to_json(const ClassificationResult& res) {
    Json j{{"case", to_string(res.tag)},
           {"a", res.a},
           {"b", res.b},
           {"m1", res.m1},
           {"m2", res.m2}};
    if (res.has_chart()) {
        j["A"] = to_array(res.A);
        j["B"] = to_array(res.B);
        j["C"] = to_array(res.C);
        j["h_span"] = Json::array({to_array(res.h_span[0]), to_array(res.h_span[1])});
    }
    return j;
}

Json to_json(const ChartVerification& v) {
    return Json{{"samples", v.sample_count},
                {"max_alignment_residual", v.max_alignment_residual},
                {"max_abs_beta_z", v.max_abs_beta_z},
                {"min_abs_V", v.min_abs_v},
                {"V_sign_constant", v.v_sign_constant},
                {"V_sign", v.v_sign},
                {"min_beta_norm2", v.min_beta_norm2},
                {"max_derivative_mismatch", v.max_derivative_mismatch},
                {"min_pair_separation", v.min_pair_separation},
                {"monotone", v.monotone}};
}

Json to_json(const Factorization& f, double residual) {
    return Json{{"params", Json::array({f.t1, f.t2, f.t3})}, {"residual", residual}};
}

Json to_json(const GeodesicCheck& check) {
    return Json{{"geodesic", check.geodesic}, {"residual", to_array(check.residual)}};
}

Json to_json(const NormalExpReport& rep) {
    return Json{{"samples", rep.sample_count},
                {"min_abs_jacobian", rep.min_abs_jacobian},
                {"min_pair_separation", rep.min_pair_separation}};
}

} // namespace contactlie
