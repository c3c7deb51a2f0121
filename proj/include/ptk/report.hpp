#pragma once

// Deterministic text reports with a machine-readable JSON block, one per
// command of the ptk tool.

#include "ptk/catalog.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace ptk {

struct Report {
    std::string text;
    nlohmann::ordered_json json = nlohmann::ordered_json::object();
    int exit_code = 0;
};

/// %.12g; magnitudes below 1e-13 print as 0.
std::string format_number(double v);

/// Text followed by a fenced JSON block, or the JSON alone.
std::string render(const Report& r, bool json_only);

Report report_verify(const CompiledScene& scene);
/// Exactly one of degree or density is used; density wins when both are set.
Report report_unimodular(const CompiledScene& scene, std::optional<int> degree, std::optional<std::string> density);
Report report_transversal(const CompiledScene& scene, const std::string& patch, const SamplingOptions& opts);
/// form is "auto" (iota_{pi^q} mu) or the name of a scene form.
Report report_pair(const CompiledScene& scene, const std::string& patch, const std::string& form, const SamplingOptions& opts);
Report report_full(const CompiledScene& scene, const SamplingOptions& opts);
Report report_classify(const Lie3Classification& c);

/// Linear Dirac structure from "tangent:N", "cotangent:N", "bivector:M", "form:M" or "rows:M" (M as "a,b;c,d").
LinearDirac parse_dirac(const std::string& spec);

Report report_dirac_spinor(const LinearDirac& l, bool cospinor);
Report report_dirac_pullback(const LinearDirac& lm, const Matrix& f);
Report report_dirac_pushforward(const LinearDirac& lp, const Matrix& f);
Report report_dirac_conditions(const LinearDirac& l, const Matrix& x);

}  // namespace ptk
