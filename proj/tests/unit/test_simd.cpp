#include "ptk/simd.hpp"

#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

using namespace ptk::simd;

namespace {

std::vector<double> random_values(std::size_t n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    std::vector<double> v(n);
    for (auto& x : v) x = u(rng);
    return v;
}

}  // namespace

TEST_CASE("vector kernels agree with the scalar reference") {
    const Kernels& ref = kernels(Isa::Scalar);
    CHECK(supported(Isa::Scalar));
    CHECK(supported(active().isa));
    std::mt19937_64 rng(31);
    for (Isa isa : {Isa::Avx2, Isa::Neon}) {
        if (!supported(isa)) continue;
        const Kernels& k = kernels(isa);
        INFO("isa " << name(isa));
        for (std::size_t n : {0u, 1u, 3u, 4u, 5u, 7u, 8u, 15u, 16u, 17u, 63u, 1000u}) {
            const auto a = random_values(n, rng), b = random_values(n, rng);
            double scale = 0.0;
            for (std::size_t i = 0; i < n; ++i) scale += std::abs(a[i] * b[i]) + std::abs(a[i]);
            CHECK(std::abs(k.dot(a.data(), b.data(), n) - ref.dot(a.data(), b.data(), n)) <= 1e-14 * (scale + 1.0));
            CHECK(std::abs(k.sum(a.data(), n) - ref.sum(a.data(), n)) <= 1e-14 * (scale + 1.0));
            if (n > 0) {
                const MinMax x = k.min_max(a.data(), n), y = ref.min_max(a.data(), n);
                CHECK(x.min == y.min);
                CHECK(x.max == y.max);
                CHECK(x.min_abs == y.min_abs);
            }
            std::vector<double> out1(n, 1.0), out2(n, 1.0);
            k.fma_accumulate(a.data(), b.data(), n, out1.data());
            ref.fma_accumulate(a.data(), b.data(), n, out2.data());
            for (std::size_t i = 0; i < n; ++i) CHECK(out1[i] == doctest::Approx(out2[i]).epsilon(1e-15));

            // p(x, y) = 1/2 - 3 x^2 y + y^5
            const std::vector<double> coefficients{0.5, -3.0, 1.0};
            const std::vector<std::uint16_t> exponents{0, 0, 2, 1, 0, 5};
            const PolyView p{3, 2, coefficients.data(), exponents.data()};
            const double* vars[2] = {a.data(), b.data()};
            std::vector<double> e1(n), e2(n);
            k.poly_eval(p, vars, n, e1.data());
            ref.poly_eval(p, vars, n, e2.data());
            for (std::size_t i = 0; i < n; ++i) {
                CHECK(e1[i] == doctest::Approx(e2[i]).epsilon(1e-14));
                CHECK(e2[i] == doctest::Approx(0.5 - 3.0 * a[i] * a[i] * b[i] + std::pow(b[i], 5)).epsilon(1e-14));
            }
        }
    }
}

TEST_CASE("ISA names") {
    CHECK(name(Isa::Scalar) == "scalar");
    CHECK(name(Isa::Avx2) == "avx2");
    CHECK(name(Isa::Neon) == "neon");
}
