// Command-line front end: validate / classify / embed / verify / factor /
// geodesic / normexp / report. Thin wrappers over the library; all numbers
// come from the core modules.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "contactlie/io.hpp"
#include "contactlie/presets.hpp"

namespace cl = contactlie;

namespace {

struct AlgebraInput {
    std::string preset_name;
    std::string input_file;

    std::pair<cl::StructureConstants, cl::ContactData> load() const {
        if (!input_file.empty()) {
            std::ifstream in(input_file);
            if (!in) throw cl::InputError("cannot open input file: " + input_file);
            cl::Json doc = cl::Json::parse(in);
            return cl::algebra_from_json(doc);
        }
        const cl::Preset& p = cl::preset(preset_name.empty() ? "heisenberg" : preset_name);
        return {p.constants, p.data};
    }

    void attach(CLI::App* cmd) {
        cmd->add_option("--preset", preset_name, "preset algebra name");
        cmd->add_option("--input", input_file, "JSON algebra document");
    }
};

void parse_box(const std::string& box, cl::GridSpec& spec) {
    std::istringstream ss(box);
    char comma = 0;
    if (!(ss >> spec.lo >> comma >> spec.hi) || comma != ',' || !(spec.lo < spec.hi)) {
        throw cl::InputError("--box expects 'lo,hi' with lo < hi");
    }
}

void emit(const cl::Json& j) { std::cout << j.dump(2) << "\n"; }

cl::Json validate_json(const cl::StructureConstants& c, const cl::ContactData& d, double tol) {
    const auto jac = cl::validate_jacobi(c, tol);
    const auto con = cl::is_contact(c, d);
    cl::Json out{{"jacobi", cl::to_json(jac)}, {"contact", cl::to_json(con)}};
    out["pass"] = jac.pass && con.contact;
    return out;
}

cl::Json geodesic_json(const cl::StructureConstants& c, const cl::ContactData& d) {
    const auto cf = cl::canonical_frame(c, d);
    const auto cc = cf.pattern_constants();
    cl::Json dirs = cl::Json::array();
    for (int i = 0; i < 3; ++i) {
        const auto check = cl::geodesic_criterion(cc, i);
        cl::Json j = cl::to_json(check);
        j["index"] = i;
        j["euler_arnold_rhs_norm"] =
            cl::euler_arnold_rhs(cc, cl::Vec3::Unit(i)).lpNorm<Eigen::Infinity>();
        if (check.geodesic) {
            const auto traj = cl::integrate_geodesic(cc, cl::Vec3::Unit(i), 10.0, 1e-3);
            j["integration_drift"] = traj.max_drift_from(cl::Vec3::Unit(i));
            j["energy_drift"] = traj.max_energy_drift();
        }
        dirs.push_back(j);
    }
    return cl::Json{{"directions", dirs}};
}

cl::Json normexp_json(const std::string& model_name, int n) {
    const cl::Model model = (model_name == "sl2") ? cl::Model::Sl2 : cl::Model::Heisenberg;
    if (model_name != "sl2" && model_name != "heisenberg") {
        throw cl::InputError("--model must be heisenberg or sl2");
    }
    cl::GridSpec spec{n, -1.0, 1.0};
    const auto axis = spec.axis();
    const auto rep = cl::normal_exponential(model, axis, axis, axis);
    cl::Json j = cl::to_json(rep);
    j["model"] = model_name;
    return j;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"3-dimensional contact Lie algebra toolkit"};
    app.require_subcommand(1);

    AlgebraInput alg;
    cl::GridSpec spec;
    std::string box = "-2,2";
    std::string out_file;
    std::string model_name = "heisenberg";
    std::string matrix_json;
    double tol = 1e-9;
    unsigned seed = 42;
    bool serial = false;

    auto add_common = [&](CLI::App* cmd, bool with_grid) {
        alg.attach(cmd);
        if (with_grid) {
            cmd->add_option("--grid", spec.n, "points per axis")->check(CLI::PositiveNumber);
            cmd->add_option("--box", box, "axis range lo,hi");
            cmd->add_flag("--serial", serial, "use the serial reference kernel");
        }
        cmd->add_option("--tol", tol, "tolerance for pass/fail checks");
        cmd->add_option("--seed", seed, "random seed (reserved for sampled checks)");
    };

    CLI::App* validate = app.add_subcommand("validate", "Jacobi and contact checks");
    add_common(validate, false);

    CLI::App* classify_cmd = app.add_subcommand("classify", "canonical frame and case analysis");
    add_common(classify_cmd, false);

    CLI::App* embed = app.add_subcommand("embed", "sample the embedding over a grid (CSV)");
    add_common(embed, true);
    embed->add_option("--out", out_file, "CSV output path");

    CLI::App* verify = app.add_subcommand("verify", "full verification report over a grid");
    add_common(verify, true);

    CLI::App* factor = app.add_subcommand("factor", "three-subgroup factorization of a matrix");
    factor->add_option("--model", model_name, "heisenberg or sl2")->required();
    factor->add_option("--matrix", matrix_json, "matrix as a JSON array of rows")->required();

    CLI::App* geodesic = app.add_subcommand("geodesic", "geodesic criterion per frame direction");
    add_common(geodesic, false);

    int normexp_n = 5;
    CLI::App* normexp = app.add_subcommand("normexp", "normal exponential witness");
    normexp->add_option("--model", model_name, "heisenberg or sl2")->required();
    normexp->add_option("--grid", normexp_n, "points per axis")->check(CLI::PositiveNumber);

    CLI::App* report = app.add_subcommand("report", "full pipeline summary");
    add_common(report, true);

    CLI11_PARSE(app, argc, argv);

    try {
        if (validate->parsed() || classify_cmd->parsed() || embed->parsed() ||
            verify->parsed() || report->parsed()) {
            parse_box(box, spec);
        }

        if (validate->parsed()) {
            const auto [c, d] = alg.load();
            const cl::Json j = validate_json(c, d, 1e-12);
            emit(j);
            return j["pass"].get<bool>() ? 0 : 1;
        }
        if (classify_cmd->parsed()) {
            const auto [c, d] = alg.load();
            const auto cf = cl::canonical_frame(c, d);
            const auto res = cl::classify(cf);
            cl::Json j{{"frame", cl::to_json(cf)}, {"classification", cl::to_json(res)}};
            emit(j);
            return 0;
        }
        if (embed->parsed()) {
            const auto [c, d] = alg.load();
            const auto rep = cl::psi_embedding(c, d, spec, !serial);
            if (!out_file.empty()) {
                std::ofstream os(out_file);
                if (!os) throw cl::InputError("cannot open output file: " + out_file);
                cl::write_samples_csv(os, rep.samples);
            } else {
                cl::write_samples_csv(std::cout, rep.samples);
            }
            cl::Json j{{"classification", cl::to_json(rep.classification)},
                       {"verification", cl::to_json(rep.verification)}};
            if (!out_file.empty()) emit(j);
            return rep.verification.pass(tol) ? 0 : 1;
        }
        if (verify->parsed()) {
            const auto [c, d] = alg.load();
            const auto rep = cl::psi_embedding(c, d, spec, !serial);
            cl::Json j{{"case", cl::to_string(rep.classification.tag)},
                       {"verification", cl::to_json(rep.verification)},
                       {"pass", rep.verification.pass(tol)}};
            emit(j);
            return rep.verification.pass(tol) ? 0 : 1;
        }
        if (factor->parsed()) {
            const cl::Json m = cl::Json::parse(matrix_json);
            cl::Json j;
            if (model_name == "heisenberg") {
                cl::Mat3 g;
                for (int i = 0; i < 3; ++i)
                    for (int k = 0; k < 3; ++k) g(i, k) = m.at(i).at(k).get<double>();
                const auto f = cl::heis_factorize(g);
                j = cl::to_json(f, (cl::heis_compose(f) - g).lpNorm<Eigen::Infinity>());
            } else if (model_name == "sl2") {
                cl::Mat2 g;
                for (int i = 0; i < 2; ++i)
                    for (int k = 0; k < 2; ++k) g(i, k) = m.at(i).at(k).get<double>();
                const auto f = cl::sl2_factorize(g);
                j = cl::to_json(f, (cl::sl2_compose(f) - g).lpNorm<Eigen::Infinity>());
            } else {
                throw cl::InputError("--model must be heisenberg or sl2");
            }
            j["model"] = model_name;
            emit(j);
            return 0;
        }
        if (geodesic->parsed()) {
            const auto [c, d] = alg.load();
            emit(geodesic_json(c, d));
            return 0;
        }
        if (normexp->parsed()) {
            const cl::Json j = normexp_json(model_name, normexp_n);
            emit(j);
            return j["min_abs_jacobian"].get<double>() > 1e-10 ? 0 : 1;
        }
        if (report->parsed()) {
            const auto [c, d] = alg.load();
            cl::Json j{{"validate", validate_json(c, d, 1e-12)}};
            const auto cf = cl::canonical_frame(c, d);
            const auto res = cl::classify(cf);
            j["frame"] = cl::to_json(cf);
            j["classification"] = cl::to_json(res);
            j["geodesic"] = geodesic_json(c, d);
            bool pass = j["validate"]["pass"].get<bool>();
            if (res.has_chart()) {
                const auto rep = cl::psi_embedding(c, d, spec, !serial);
                j["verification"] = cl::to_json(rep.verification);
                pass = pass && rep.verification.pass(tol);
            } else {
                j["verification"] = "skipped: su(2) has no factorization chart";
            }
            j["pass"] = pass;
            emit(j);
            return pass ? 0 : 1;
        }
    } catch (const cl::UnsupportedCase& e) {
        std::cerr << "unsupported: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
