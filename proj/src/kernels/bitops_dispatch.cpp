#include "sepdepth/kernels/bitops.hpp"

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace sepdepth::kernels {
namespace {

const BitsetKernels* lookup(std::string_view name) {
    if (name == "scalar") return &scalar_kernels();
    if (name == "avx2") return avx2_kernels();
    return nullptr;
}

const BitsetKernels* initial_choice() {
    if (const char* env = std::getenv("SEPDEPTH_KERNEL")) {
        if (const BitsetKernels* k = lookup(env)) return k;
        // Unknown or unsupported request in the environment: fall through to
        // the default rather than aborting library initialization.
    }
    if (const BitsetKernels* k = avx2_kernels()) return k;
    return &scalar_kernels();
}

std::atomic<const BitsetKernels*>& slot() {
    static std::atomic<const BitsetKernels*> s{initial_choice()};
    return s;
}

} // namespace

const BitsetKernels& active_kernels() { return *slot().load(std::memory_order_relaxed); }

void select_kernels(std::string_view name) {
    const BitsetKernels* k = lookup(name);
    if (!k) throw std::runtime_error("unknown or unsupported kernel set: " + std::string(name));
    slot().store(k, std::memory_order_relaxed);
}

std::vector<std::string_view> available_kernel_names() {
    std::vector<std::string_view> names{"scalar"};
    if (avx2_kernels()) names.emplace_back("avx2");
    return names;
}

} // namespace sepdepth::kernels
