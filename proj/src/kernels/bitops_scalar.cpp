#include "sepdepth/kernels/bitops.hpp"

#include <bit>

namespace sepdepth::kernels {
namespace {

void and_scalar(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b,
                std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] = a[i] & b[i];
}

void or_scalar(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b,
               std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] = a[i] | b[i];
}

void andnot_scalar(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b,
                   std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] = a[i] & ~b[i];
}

bool equals_scalar(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        if (a[i] != b[i]) return false;
    return true;
}

bool subset_scalar(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        if (a[i] & ~b[i]) return false;
    return true;
}

bool intersects_scalar(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        if (a[i] & b[i]) return true;
    return false;
}

bool zero_scalar(const std::uint64_t* a, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        if (a[i]) return false;
    return true;
}

std::size_t popcount_scalar(const std::uint64_t* a, std::size_t n) {
    std::size_t total = 0;
    for (std::size_t i = 0; i < n; ++i) total += static_cast<std::size_t>(std::popcount(a[i]));
    return total;
}

} // namespace

const BitsetKernels& scalar_kernels() {
    static const BitsetKernels k = {
        "scalar",        and_scalar,  or_scalar,   andnot_scalar,
        equals_scalar,   subset_scalar, intersects_scalar, zero_scalar,
        popcount_scalar,
    };
    return k;
}

} // namespace sepdepth::kernels
