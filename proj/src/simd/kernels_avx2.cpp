// Compiled with -mavx2 -mfma; only reached after a runtime CPU check.
#include "ptk/simd.hpp"

#include <immintrin.h>

#include <cmath>
#include <limits>

namespace ptk::simd::detail {
namespace {

double horizontal_sum(__m256d v) {
    const __m128d lo = _mm256_castpd256_pd128(v);
    const __m128d hi = _mm256_extractf128_pd(v, 1);
    const __m128d s = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

double dot(const double* a, const double* b, std::size_t n) {
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
        acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i + 4), _mm256_loadu_pd(b + i + 4), acc1);
    }
    for (; i + 4 <= n; i += 4) acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
    double s = horizontal_sum(_mm256_add_pd(acc0, acc1));
    for (; i < n; ++i) s += a[i] * b[i];
    return s;
}

double sum(const double* a, std::size_t n) {
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        acc0 = _mm256_add_pd(acc0, _mm256_loadu_pd(a + i));
        acc1 = _mm256_add_pd(acc1, _mm256_loadu_pd(a + i + 4));
    }
    for (; i + 4 <= n; i += 4) acc0 = _mm256_add_pd(acc0, _mm256_loadu_pd(a + i));
    double s = horizontal_sum(_mm256_add_pd(acc0, acc1));
    for (; i < n; ++i) s += a[i];
    return s;
}

MinMax min_max(const double* a, std::size_t n) {
    constexpr double inf = std::numeric_limits<double>::infinity();
    const __m256d sign_mask = _mm256_set1_pd(-0.0);
    __m256d lo = _mm256_set1_pd(inf);
    __m256d hi = _mm256_set1_pd(-inf);
    __m256d lo_abs = _mm256_set1_pd(inf);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d v = _mm256_loadu_pd(a + i);
        lo = _mm256_min_pd(lo, v);
        hi = _mm256_max_pd(hi, v);
        lo_abs = _mm256_min_pd(lo_abs, _mm256_andnot_pd(sign_mask, v));
    }
    alignas(32) double l[4], h[4], la[4];
    _mm256_store_pd(l, lo);
    _mm256_store_pd(h, hi);
    _mm256_store_pd(la, lo_abs);
    MinMax r{inf, -inf, inf};
    for (int k = 0; k < 4; ++k) {
        r.min = std::fmin(r.min, l[k]);
        r.max = std::fmax(r.max, h[k]);
        r.min_abs = std::fmin(r.min_abs, la[k]);
    }
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
    for (; s + 4 <= count; s += 4) {
        __m256d acc = _mm256_setzero_pd();
        for (std::size_t t = 0; t < p.nterms; ++t) {
            __m256d term = _mm256_set1_pd(p.coefficients[t]);
            const std::uint16_t* e = p.exponents + t * nv;
            for (std::size_t v = 0; v < nv; ++v) {
                if (e[v] == 0) continue;
                const __m256d x = _mm256_loadu_pd(vars[v] + s);
                for (std::uint16_t k = 0; k < e[v]; ++k) term = _mm256_mul_pd(term, x);
            }
            acc = _mm256_add_pd(acc, term);
        }
        _mm256_storeu_pd(out + s, acc);
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
    for (; i + 4 <= n; i += 4) {
        const __m256d r = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), _mm256_loadu_pd(out + i));
        _mm256_storeu_pd(out + i, r);
    }
    for (; i < n; ++i) out[i] += a[i] * b[i];
}

}  // namespace

const Kernels avx2_kernels{Isa::Avx2, dot, sum, min_max, poly_eval, fma_accumulate};

}  // namespace ptk::simd::detail
