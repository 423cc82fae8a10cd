#include "corrseg/kernels.hpp"

#include <cstdlib>
#include <string>

namespace corrseg::kernels {

double dot_scalar(const double* a, const double* b, std::size_t n) noexcept {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        acc += a[i] * b[i];
    }
    return acc;
}

double sum_squares_scalar(const double* a, std::size_t n) noexcept {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        acc += a[i] * a[i];
    }
    return acc;
}

namespace {

const KernelSet kScalar{"scalar", &dot_scalar, &sum_squares_scalar};

#if CORRSEG_ARCH_X86_64
const KernelSet kAvx2{"avx2", &dot_avx2, &sum_squares_avx2};

bool avx2_supported() {
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
}
#endif

#if CORRSEG_ARCH_AARCH64
const KernelSet kNeon{"neon", &dot_neon, &sum_squares_neon};
#endif

std::vector<const KernelSet*> variants() {
    std::vector<const KernelSet*> out;
#if CORRSEG_ARCH_X86_64
    if (avx2_supported()) {
        out.push_back(&kAvx2);
    }
#endif
#if CORRSEG_ARCH_AARCH64
    out.push_back(&kNeon);
#endif
    out.push_back(&kScalar);
    return out;
}

const KernelSet* find_variant(std::string_view name) {
    for (const KernelSet* k : variants()) {
        if (name == k->name) {
            return k;
        }
    }
    return nullptr;
}

const KernelSet* initial_choice() {
    if (const char* env = std::getenv("CORRSEG_KERNEL")) {
        if (const KernelSet* k = find_variant(env)) {
            return k;
        }
    }
    return variants().front();
}

const KernelSet*& current() {
    static const KernelSet* chosen = initial_choice();
    return chosen;
}

}  // namespace

const KernelSet& active() { return *current(); }

bool select(std::string_view name) {
    const KernelSet* k = find_variant(name);
    if (k == nullptr) {
        return false;
    }
    current() = k;
    return true;
}

std::vector<const char*> available() {
    std::vector<const char*> names;
    for (const KernelSet* k : variants()) {
        names.push_back(k->name);
    }
    return names;
}

}  // namespace corrseg::kernels
