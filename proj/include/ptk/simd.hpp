#pragma once

// Data-parallel numeric kernels used on sample grids (quadrature sums, batched
// polynomial evaluation, sign scans). Each kernel has a scalar reference version
// and vectorized versions; the active table is chosen once at runtime from the
// CPU features, or forced with PTK_SIMD=scalar|avx2|neon.

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace ptk::simd {

enum class Isa { Scalar, Avx2, Neon };

struct PolyView {
    std::size_t nterms;
    int nvars;
    const double* coefficients;
    const std::uint16_t* exponents;  // nterms * nvars, row-major
};

struct MinMax {
    double min;
    double max;
    double min_abs;
};

struct Kernels {
    Isa isa;
    double (*dot)(const double* a, const double* b, std::size_t n);
    double (*sum)(const double* a, std::size_t n);
    MinMax (*min_max)(const double* a, std::size_t n);
    /// out[s] = p(vars[0][s], ..., vars[nvars-1][s]) for s < count.
    void (*poly_eval)(const PolyView& p, const double* const* vars, std::size_t count, double* out);
    /// out[s] += a[s] * b[s]
    void (*fma_accumulate)(const double* a, const double* b, std::size_t n, double* out);
};

bool supported(Isa isa);
const Kernels& kernels(Isa isa);
/// Selected table (env override, else best supported).
const Kernels& active();
std::string_view name(Isa isa);

namespace detail {
extern const Kernels scalar_kernels;
#if defined(PTK_HAVE_AVX2_KERNELS)
extern const Kernels avx2_kernels;
#endif
#if defined(PTK_HAVE_NEON_KERNELS)
extern const Kernels neon_kernels;
#endif
}  // namespace detail

}  // namespace ptk::simd
