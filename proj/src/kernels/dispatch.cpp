#include <cstdlib>
#include <string_view>

#include "liftform/kernels.hpp"

namespace liftform::kernels {

const KernelSet* avx2_impl();  // defined in kernels_avx2.cpp; null when not built

namespace {

bool cpu_supports_avx2() {
#if defined(__x86_64__) || defined(__i386__)
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

const KernelSet& select() {
    const KernelSet* best = &scalar();
    if (const KernelSet* v = avx2(); v != nullptr) best = v;

    if (const char* env = std::getenv("LIFTFORM_KERNELS")) {
        std::string_view want(env);
        if (want == "scalar") return scalar();
        if (want == "avx2" && avx2() != nullptr) return *avx2();
        // "auto" or anything unrecognized falls through to detection.
    }
    return *best;
}

}  // namespace

const KernelSet* avx2() {
    static const KernelSet* set = cpu_supports_avx2() ? avx2_impl() : nullptr;
    return set;
}

const KernelSet& active() {
    static const KernelSet& set = select();
    return set;
}

}  // namespace liftform::kernels
