#pragma once

// Scene files: a chart, a polynomial bivector, densities, parametrized patches
// and declared facts. Expressions are kept as source text so that a scene
// serializes back to exactly what was loaded.

#include "ptk/transversal.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace ptk {

inline constexpr int kSceneFormatVersion = 1;

struct BivectorTerm {
    int i = 0;  // zero-based, i < j
    int j = 0;
    std::string coeff;
};

struct DensitySpec {
    std::string name;
    std::string coeff;  // coefficient of the coordinate volume form
    std::string note;
};

struct FormTerm {
    std::vector<int> indices;  // zero-based, strictly increasing
    std::string coeff;
};

/// Named polynomial differential form for pairings.
struct FormSpec {
    std::string name;
    int degree = 0;
    std::vector<FormTerm> terms;
};

struct ParamSpec {
    std::string name;
    bool periodic = false;  // range [0, 2 pi]
    double min = 0.0;
    double max = 0.0;
};

struct PatchSpec {
    std::string name;
    std::vector<ParamSpec> params;
    std::vector<std::string> map;  // one per chart coordinate, in the parameter names
};

struct Annotation {
    std::string fact;
    std::string source;
};

/// phi(p) = map(p) + pi * shift_pi; shifts are allowed on periodic coordinates only.
struct DeckMapSpec {
    std::vector<std::string> map;
    std::vector<std::string> shift_pi;
};

struct FlatBundleSpec {
    long genus = 0;
    long chern = 0;
};

struct Tolerances {
    std::optional<double> tol;
    std::optional<std::size_t> samples;
};

struct Scene {
    std::string name;
    std::string description;
    Chart chart;
    std::vector<BivectorTerm> terms;
    std::vector<DensitySpec> densities;
    std::vector<FormSpec> forms;
    std::vector<PatchSpec> patches;
    std::vector<Annotation> annotations;
    std::vector<std::vector<double>> witnesses;  // points for the log-symplectic locus test
    std::optional<DeckMapSpec> deck_map;
    std::optional<FlatBundleSpec> flat_bundle;
    std::optional<std::string> book_matrix;  // "a,b;c,d" when the bivector is X ^ d/dz for X = A(x, y)
    bool symbolic = true;                    // false: declared facts only, no model to compute with
    Tolerances tolerances;

    bool has(const std::string& fact) const;
    const Annotation* annotation(const std::string& fact) const;
};

nlohmann::ordered_json to_json(const Scene& scene);
/// Validates structure, indices and expressions; throws InputError or ParseError.
Scene scene_from_json(const nlohmann::json& j);
Scene load_scene_file(const std::string& path);

struct CompiledScene {
    Scene source;
    PoissonStructure pi;  // pi.verified is left false; see jacobi_check
    std::vector<Density> densities;
    std::vector<std::pair<std::string, DiffForm>> forms;
    std::vector<Patch> patches;

    const Patch* patch(const std::string& name) const;
    const Density* density(const std::string& name) const;
    const DiffForm* form(const std::string& name) const;
};

CompiledScene compile(const Scene& scene);

/// Scene terms of a polynomial bivector.
std::vector<BivectorTerm> terms_of(const Multivector& pi, const std::vector<std::string>& coords);

}  // namespace ptk
