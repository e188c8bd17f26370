#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

namespace sepdepth::kernels {

/// Word-array kernels backing VertexSet. Every routine operates on arrays of
/// `n` 64-bit words; `dst` may alias `a` or `b`.
struct BitsetKernels {
    const char* name;

    void (*bit_and)(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b,
                    std::size_t n);
    void (*bit_or)(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b,
                   std::size_t n);
    // dst = a & ~b
    void (*bit_andnot)(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b,
                       std::size_t n);
    bool (*equals)(const std::uint64_t* a, const std::uint64_t* b, std::size_t n);
    // a subset of b, i.e. a & ~b == 0
    bool (*is_subset)(const std::uint64_t* a, const std::uint64_t* b, std::size_t n);
    bool (*intersects)(const std::uint64_t* a, const std::uint64_t* b, std::size_t n);
    bool (*is_zero)(const std::uint64_t* a, std::size_t n);
    std::size_t (*popcount)(const std::uint64_t* a, std::size_t n);
};

/// Portable reference implementation; always available.
const BitsetKernels& scalar_kernels();

/// AVX2 implementation, or nullptr when the build target or the running CPU
/// does not support it.
const BitsetKernels* avx2_kernels();

/// The implementation selected at startup: the env var SEPDEPTH_KERNEL
/// ("scalar"/"avx2") wins, otherwise the widest supported one.
const BitsetKernels& active_kernels();

/// Force a specific implementation (test hook). Throws std::runtime_error for
/// unknown or unsupported names.
void select_kernels(std::string_view name);

std::vector<std::string_view> available_kernel_names();

} // namespace sepdepth::kernels
