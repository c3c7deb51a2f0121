// Command-line front end: scene checks, HNPT reports, linear Dirac tools and the
// Lie algebra classifier.

#include "ptk/catalog.hpp"
#include "ptk/error.hpp"
#include "ptk/report.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

namespace fs = std::filesystem;
using namespace ptk;

namespace {

Scene resolve_scene(const std::string& ref) {
    if (fs::is_regular_file(ref)) return load_scene_file(ref);
    if (auto s = find_builtin(ref)) return *s;
    if (const char* dir = std::getenv("PTK_SCENE_PATH")) {
        for (const std::string& candidate : {ref, ref + ".json"}) {
            const fs::path p = fs::path(dir) / candidate;
            if (fs::is_regular_file(p)) return load_scene_file(p.string());
        }
    }
    throw InputError("no scene file or built-in scene named '" + ref + "'");
}

Matrix parse_lie_matrix(const std::string& text) {
    const auto v = parse_rational_list(text);
    if (v.size() != 4) throw InputError("--matrix expects four entries a,b,c,d");
    return Matrix{{v[0], v[1]}, {v[2], v[3]}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Poisson transversal toolkit"};
    app.require_subcommand(1);

    double tol = 1e-9;
    std::size_t samples = 0;
    std::string out_path;
    bool json_only = false;
    app.add_option("--tol", tol, "absolute tolerance")->capture_default_str()->check(CLI::PositiveNumber);
    app.add_option("--samples", samples, "nodes per periodic direction (interval directions use a quarter)");
    app.add_option("--out", out_path, "write the report to this file");
    app.add_flag("--json", json_only, "print the machine-readable block only");

    std::string scene_ref, patch, form = "auto", density, structure, map, subspace, matrix, name, scene_name;
    int degree = -1;

    auto* verify = app.add_subcommand("verify", "check [pi, pi] = 0");
    verify->add_option("scene", scene_ref)->required();

    auto* unimodular = app.add_subcommand("unimodular", "invariant densities and the modular chain");
    unimodular->add_option("scene", scene_ref)->required();
    unimodular->add_option("--degree", degree, "polynomial degree bound for the density solver");
    unimodular->add_option("--density", density, "check a named scene density");

    auto* transversal = app.add_subcommand("transversal", "Poisson-transversality of a patch");
    transversal->add_option("scene", scene_ref)->required();
    transversal->add_option("--patch", patch)->required();

    auto* pair_cmd = app.add_subcommand("pair", "pair a form with a patch");
    pair_cmd->add_option("scene", scene_ref)->required();
    pair_cmd->add_option("--patch", patch)->required();
    pair_cmd->add_option("--form", form, "auto or a scene form name")->capture_default_str();

    auto* report = app.add_subcommand("report", "all checks and HNPT verdicts");
    report->add_option("scene", scene_ref)->required();

    auto* dirac = app.add_subcommand("dirac", "linear Dirac structures");
    dirac->require_subcommand(1);
    const std::string structure_help = "tangent:N, cotangent:N, bivector:M, form:M or rows:M with M as a,b;c,d";
    auto* spinor = dirac->add_subcommand("spinor", "spinor line");
    spinor->add_option("--structure,-L", structure, structure_help)->required();
    auto* cospinor = dirac->add_subcommand("cospinor", "co-spinor line");
    cospinor->add_option("--structure,-L", structure, structure_help)->required();
    auto* pullback = dirac->add_subcommand("pullback", "backward image along f: V -> W");
    pullback->add_option("--structure,-L", structure, structure_help)->required();
    pullback->add_option("--map,-f", map, "dim W x dim V matrix")->required();
    auto* pushforward = dirac->add_subcommand("pushforward", "forward image along f: V -> W");
    pushforward->add_option("--structure,-L", structure, structure_help)->required();
    pushforward->add_option("--map,-f", map, "dim W x dim V matrix")->required();
    auto* conditions = dirac->add_subcommand("conditions", "transversality conditions for a subspace");
    conditions->add_option("--structure,-L", structure, structure_help)->required();
    conditions->add_option("--subspace,-X", subspace, "basis rows of X")->required();

    auto* classify = app.add_subcommand("classify-lie3", "3-dimensional Lie algebras and transverse circles");
    auto* matrix_opt = classify->add_option("--matrix", matrix, "a,b,c,d");
    auto* name_opt = classify->add_option("--name", name, "so3, sl2, heisenberg, abelian, book-id");
    matrix_opt->excludes(name_opt);

    auto* scenes = app.add_subcommand("scenes", "built-in scenes");
    scenes->require_subcommand(1);
    auto* list = scenes->add_subcommand("list", "names and descriptions");
    auto* dump = scenes->add_subcommand("dump", "print a scene as JSON");
    dump->add_option("name", scene_name)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    SamplingOptions opts;
    opts.tol = tol;
    if (samples > 0) {
        opts.periodic_nodes = samples;
        opts.interval_nodes = std::max<std::size_t>(8, samples / 4);
    }

    try {
        std::string text;
        int code = 0;
        if (list->parsed()) {
            for (const Scene& s : builtin_scenes()) text += s.name + "  " + s.description + "\n";
        } else if (dump->parsed()) {
            const auto s = find_builtin(scene_name);
            if (!s) throw InputError("no built-in scene named '" + scene_name + "'");
            text = to_json(*s).dump(2) + "\n";
        } else if (classify->parsed()) {
            if (matrix.empty() == name.empty()) throw InputError("classify-lie3 needs exactly one of --matrix or --name");
            const Lie3Classification c = name.empty() ? classify_lie3(parse_lie_matrix(matrix), opts) : classify_lie3(name, opts);
            const Report r = report_classify(c);
            text = render(r, json_only);
            code = r.exit_code;
        } else if (dirac->parsed()) {
            const LinearDirac l = parse_dirac(structure);
            Report r;
            if (spinor->parsed()) r = report_dirac_spinor(l, false);
            if (cospinor->parsed()) r = report_dirac_spinor(l, true);
            if (pullback->parsed()) r = report_dirac_pullback(l, parse_matrix(map));
            if (pushforward->parsed()) r = report_dirac_pushforward(l, parse_matrix(map));
            if (conditions->parsed()) r = report_dirac_conditions(l, parse_matrix(subspace));
            text = render(r, json_only);
            code = r.exit_code;
        } else {
            const Scene scene = resolve_scene(scene_ref);
            if (scene.tolerances.tol && tol == 1e-9) opts.tol = *scene.tolerances.tol;
            if (scene.tolerances.samples && samples == 0) {
                opts.periodic_nodes = *scene.tolerances.samples;
                opts.interval_nodes = std::max<std::size_t>(8, *scene.tolerances.samples / 4);
            }
            const CompiledScene compiled = compile(scene);
            Report r;
            if (verify->parsed()) r = report_verify(compiled);
            if (unimodular->parsed()) {
                r = report_unimodular(compiled, degree >= 0 ? std::optional<int>(degree) : std::nullopt,
                                      density.empty() ? std::nullopt : std::optional<std::string>(density));
            }
            if (transversal->parsed()) r = report_transversal(compiled, patch, opts);
            if (pair_cmd->parsed()) r = report_pair(compiled, patch, form, opts);
            if (report->parsed()) r = report_full(compiled, opts);
            text = render(r, json_only);
            code = r.exit_code;
        }
        if (out_path.empty()) {
            std::cout << text;
        } else {
            std::ofstream out(out_path, std::ios::binary);
            if (!out) throw InputError("cannot write " + out_path);
            out << text;
        }
        return code;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
