#include "ptk/simd.hpp"

#include <cmath>
#include <limits>

namespace ptk::simd::detail {
namespace {

double dot(const double* a, const double* b, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += a[i] * b[i];
    return s;
}

double sum(const double* a, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += a[i];
    return s;
}

MinMax min_max(const double* a, std::size_t n) {
    MinMax r{std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity(),
             std::numeric_limits<double>::infinity()};
    for (std::size_t i = 0; i < n; ++i) {
        r.min = std::fmin(r.min, a[i]);
        r.max = std::fmax(r.max, a[i]);
        r.min_abs = std::fmin(r.min_abs, std::fabs(a[i]));
    }
    return r;
}

void poly_eval(const PolyView& p, const double* const* vars, std::size_t count, double* out) {
    for (std::size_t s = 0; s < count; ++s) {
        double acc = 0.0;
        for (std::size_t t = 0; t < p.nterms; ++t) {
            double term = p.coefficients[t];
            const std::uint16_t* e = p.exponents + t * static_cast<std::size_t>(p.nvars);
            for (int v = 0; v < p.nvars; ++v) {
                for (std::uint16_t k = 0; k < e[v]; ++k) term *= vars[v][s];
            }
            acc += term;
        }
        out[s] = acc;
    }
}

void fma_accumulate(const double* a, const double* b, std::size_t n, double* out) {
    for (std::size_t i = 0; i < n; ++i) out[i] += a[i] * b[i];
}

}  // namespace

const Kernels scalar_kernels{Isa::Scalar, dot, sum, min_max, poly_eval, fma_accumulate};

}  // namespace ptk::simd::detail
