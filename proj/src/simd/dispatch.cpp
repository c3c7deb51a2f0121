#include "ptk/simd.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace ptk::simd {

std::string_view name(Isa isa) {
    switch (isa) {
        case Isa::Scalar: return "scalar";
        case Isa::Avx2: return "avx2";
        case Isa::Neon: return "neon";
    }
    return "scalar";
}

bool supported(Isa isa) {
    switch (isa) {
        case Isa::Scalar:
            return true;
        case Isa::Avx2:
#if defined(PTK_HAVE_AVX2_KERNELS)
            return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
            return false;
#endif
        case Isa::Neon:
#if defined(PTK_HAVE_NEON_KERNELS)
            return true;
#else
            return false;
#endif
    }
    return false;
}

const Kernels& kernels(Isa isa) {
    if (!supported(isa)) throw std::runtime_error("SIMD kernels '" + std::string(name(isa)) + "' unavailable");
    switch (isa) {
#if defined(PTK_HAVE_AVX2_KERNELS)
        case Isa::Avx2: return detail::avx2_kernels;
#endif
#if defined(PTK_HAVE_NEON_KERNELS)
        case Isa::Neon: return detail::neon_kernels;
#endif
        default: return detail::scalar_kernels;
    }
}

namespace {

const Kernels& select() {
    if (const char* env = std::getenv("PTK_SIMD")) {
        const std::string_view want(env);
        for (Isa isa : {Isa::Scalar, Isa::Avx2, Isa::Neon}) {
            if (want == name(isa) && supported(isa)) return kernels(isa);
        }
    }
    for (Isa isa : {Isa::Avx2, Isa::Neon}) {
        if (supported(isa)) return kernels(isa);
    }
    return detail::scalar_kernels;
}

}  // namespace

const Kernels& active() {
    static const Kernels& table = select();
    return table;
}

}  // namespace ptk::simd
