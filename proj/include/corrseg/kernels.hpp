#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

// Flat arithmetic kernels behind the sliding-window similarity paths.
// Each variant uses a fixed accumulation order, so repeated runs with the
// same active kernel produce bit-identical results.

#if defined(__x86_64__) || defined(_M_X64)
#define CORRSEG_ARCH_X86_64 1
#else
#define CORRSEG_ARCH_X86_64 0
#endif

#if defined(__aarch64__) || defined(_M_ARM64)
#define CORRSEG_ARCH_AARCH64 1
#else
#define CORRSEG_ARCH_AARCH64 0
#endif

namespace corrseg::kernels {

// Scalar reference kernels, left-to-right accumulation.
double dot_scalar(const double* a, const double* b, std::size_t n) noexcept;
double sum_squares_scalar(const double* a, std::size_t n) noexcept;

#if CORRSEG_ARCH_X86_64
// AVX2+FMA variants; defined in kernels_avx2.cpp, call only when supported.
double dot_avx2(const double* a, const double* b, std::size_t n) noexcept;
double sum_squares_avx2(const double* a, std::size_t n) noexcept;
#endif

#if CORRSEG_ARCH_AARCH64
double dot_neon(const double* a, const double* b, std::size_t n) noexcept;
double sum_squares_neon(const double* a, std::size_t n) noexcept;
#endif

using DotFn = double (*)(const double*, const double*, std::size_t) noexcept;
using SumSquaresFn = double (*)(const double*, std::size_t) noexcept;

struct KernelSet {
    const char* name;
    DotFn dot;
    SumSquaresFn sum_squares;
};

/// Kernel set in use. Defaults to the best variant the CPU supports; the
/// CORRSEG_KERNEL environment variable ("scalar", "avx2", "neon") overrides
/// the default when it names an available variant.
const KernelSet& active();

/// Switches the active set by name; returns false if the variant is not
/// available on this machine. Not safe to call while profiles are being
/// computed on other threads.
bool select(std::string_view name);

/// Names of the variants usable on this machine, preferred first.
std::vector<const char*> available();

}  // namespace corrseg::kernels
