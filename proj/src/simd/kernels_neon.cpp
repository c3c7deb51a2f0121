#include "ptk/simd.hpp"

#include <arm_neon.h>

#include <cmath>
#include <limits>

namespace ptk::simd::detail {
namespace {

double dot(const double* a, const double* b, std::size_t n) {
    float64x2_t acc0 = vdupq_n_f64(0.0);
    float64x2_t acc1 = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        acc0 = vfmaq_f64(acc0, vld1q_f64(a + i), vld1q_f64(b + i));
        acc1 = vfmaq_f64(acc1, vld1q_f64(a + i + 2), vld1q_f64(b + i + 2));
    }
    double s = vaddvq_f64(vaddq_f64(acc0, acc1));
    for (; i < n; ++i) s += a[i] * b[i];
    return s;
}

double sum(const double* a, std::size_t n) {
    float64x2_t acc0 = vdupq_n_f64(0.0);
    float64x2_t acc1 = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        acc0 = vaddq_f64(acc0, vld1q_f64(a + i));
        acc1 = vaddq_f64(acc1, vld1q_f64(a + i + 2));
    }
    double s = vaddvq_f64(vaddq_f64(acc0, acc1));
    for (; i < n; ++i) s += a[i];
    return s;
}

MinMax min_max(const double* a, std::size_t n) {
    constexpr double inf = std::numeric_limits<double>::infinity();
    float64x2_t lo = vdupq_n_f64(inf);
    float64x2_t hi = vdupq_n_f64(-inf);
    float64x2_t lo_abs = vdupq_n_f64(inf);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const float64x2_t v = vld1q_f64(a + i);
        lo = vminq_f64(lo, v);
        hi = vmaxq_f64(hi, v);
        lo_abs = vminq_f64(lo_abs, vabsq_f64(v));
    }
    MinMax r{vminvq_f64(lo), vmaxvq_f64(hi), vminvq_f64(lo_abs)};
    for (; i < n; ++i) {
        r.min = std::fmin(r.min, a[i]);
        r.max = std::fmax(r.max, a[i]);
        r.min_abs = std::fmin(r.min_abs, std::fabs(a[i]));
    }
    return r;
}

void poly_eval(const PolyView& p, const double* const* vars, std::size_t count, double* out) {
    const std::size_t nv = static_cast<std::size_t>(p.nvars);
    std::size_t s = 0;
    for (; s + 2 <= count; s += 2) {
        float64x2_t acc = vdupq_n_f64(0.0);
        for (std::size_t t = 0; t < p.nterms; ++t) {
            float64x2_t term = vdupq_n_f64(p.coefficients[t]);
            const std::uint16_t* e = p.exponents + t * nv;
            for (std::size_t v = 0; v < nv; ++v) {
                if (e[v] == 0) continue;
                const float64x2_t x = vld1q_f64(vars[v] + s);
                for (std::uint16_t k = 0; k < e[v]; ++k) term = vmulq_f64(term, x);
            }
            acc = vaddq_f64(acc, term);
        }
        vst1q_f64(out + s, acc);
    }
    for (; s < count; ++s) {
        double acc = 0.0;
        for (std::size_t t = 0; t < p.nterms; ++t) {
            double term = p.coefficients[t];
            const std::uint16_t* e = p.exponents + t * nv;
            for (std::size_t v = 0; v < nv; ++v) {
                for (std::uint16_t k = 0; k < e[v]; ++k) term *= vars[v][s];
            }
            acc += term;
        }
        out[s] = acc;
    }
}

void fma_accumulate(const double* a, const double* b, std::size_t n, double* out) {
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) vst1q_f64(out + i, vfmaq_f64(vld1q_f64(out + i), vld1q_f64(a + i), vld1q_f64(b + i)));
    for (; i < n; ++i) out[i] += a[i] * b[i];
}

}  // namespace

const Kernels neon_kernels{Isa::Neon, dot, sum, min_max, poly_eval, fma_accumulate};

}  // namespace ptk::simd::detail
