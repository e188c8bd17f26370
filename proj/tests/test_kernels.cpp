#include <doctest.h>

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "sepdepth/kernels/bitops.hpp"
#include "sepdepth/prng.hpp"

using namespace sepdepth;
using kernels::BitsetKernels;

namespace {

std::vector<std::uint64_t> random_words(SplitMix64& rng, std::size_t n, int density) {
    // density steers how many bits are set so subset/zero paths get exercised
    std::vector<std::uint64_t> out(n);
    for (auto& w : out) {
        w = rng.next();
        for (int d = 0; d < density; ++d) w &= rng.next();
    }
    return out;
}

void check_pair_equivalence(const BitsetKernels& a, const BitsetKernels& b) {
    SplitMix64 rng(20240817);
    for (std::size_t n : {0u, 1u, 2u, 3u, 4u, 5u, 7u, 8u, 9u, 16u, 33u}) {
        for (int density = 0; density < 3; ++density) {
            for (int rep = 0; rep < 20; ++rep) {
                auto x = random_words(rng, n, density);
                auto y = random_words(rng, n, density);
                std::vector<std::uint64_t> ra(n), rb(n);

                a.bit_and(ra.data(), x.data(), y.data(), n);
                b.bit_and(rb.data(), x.data(), y.data(), n);
                CHECK(ra == rb);

                a.bit_or(ra.data(), x.data(), y.data(), n);
                b.bit_or(rb.data(), x.data(), y.data(), n);
                CHECK(ra == rb);

                a.bit_andnot(ra.data(), x.data(), y.data(), n);
                b.bit_andnot(rb.data(), x.data(), y.data(), n);
                CHECK(ra == rb);

                CHECK(a.equals(x.data(), y.data(), n) == b.equals(x.data(), y.data(), n));
                CHECK(a.equals(x.data(), x.data(), n));
                CHECK(a.is_subset(x.data(), y.data(), n) == b.is_subset(x.data(), y.data(), n));
                CHECK(a.intersects(x.data(), y.data(), n) ==
                      b.intersects(x.data(), y.data(), n));
                CHECK(a.is_zero(x.data(), n) == b.is_zero(x.data(), n));
                CHECK(a.popcount(x.data(), n) == b.popcount(x.data(), n));

                // derived subset: x & y is a subset of both inputs
                a.bit_and(ra.data(), x.data(), y.data(), n);
                CHECK(a.is_subset(ra.data(), x.data(), n));
                CHECK(b.is_subset(ra.data(), y.data(), n));
            }
        }
    }
}

std::size_t popcount_reference(const std::vector<std::uint64_t>& words) {
    std::size_t total = 0;
    for (auto w : words) total += static_cast<std::size_t>(std::popcount(w));
    return total;
}

} // namespace

TEST_SUITE("kernels") {

TEST_CASE("scalar kernels match bitwise definitions") {
    const BitsetKernels& k = kernels::scalar_kernels();
    SplitMix64 rng(7);
    for (int rep = 0; rep < 50; ++rep) {
        auto x = random_words(rng, 6, rep % 3);
        auto y = random_words(rng, 6, rep % 3);
        std::vector<std::uint64_t> r(6);
        k.bit_and(r.data(), x.data(), y.data(), 6);
        for (std::size_t i = 0; i < 6; ++i) CHECK(r[i] == (x[i] & y[i]));
        k.bit_or(r.data(), x.data(), y.data(), 6);
        for (std::size_t i = 0; i < 6; ++i) CHECK(r[i] == (x[i] | y[i]));
        k.bit_andnot(r.data(), x.data(), y.data(), 6);
        for (std::size_t i = 0; i < 6; ++i) CHECK(r[i] == (x[i] & ~y[i]));
        CHECK(k.popcount(x.data(), 6) == popcount_reference(x));
    }
}

TEST_CASE("avx2 kernels agree with the scalar reference") {
    const BitsetKernels* avx2 = kernels::avx2_kernels();
    if (!avx2) return; // not supported on this target
    check_pair_equivalence(kernels::scalar_kernels(), *avx2);
}

TEST_CASE("dispatch selection is forceable and reversible") {
    const BitsetKernels& before = kernels::active_kernels();
    kernels::select_kernels("scalar");
    CHECK(std::string(kernels::active_kernels().name) == "scalar");
    CHECK_THROWS(kernels::select_kernels("no-such-kernel"));
    for (auto name : kernels::available_kernel_names()) kernels::select_kernels(name);
    kernels::select_kernels(before.name);
    CHECK(std::string(kernels::active_kernels().name) == before.name);
}

TEST_CASE("aliasing dst with an input is allowed") {
    for (auto name : kernels::available_kernel_names()) {
        const BitsetKernels& k = name == "avx2" ? *kernels::avx2_kernels()
                                                : kernels::scalar_kernels();
        SplitMix64 rng(99);
        auto x = random_words(rng, 9, 0);
        auto y = random_words(rng, 9, 0);
        auto expect = x;
        for (std::size_t i = 0; i < 9; ++i) expect[i] &= y[i];
        auto inplace = x;
        k.bit_and(inplace.data(), inplace.data(), y.data(), 9);
        CHECK(inplace == expect);
    }
}

} // TEST_SUITE
