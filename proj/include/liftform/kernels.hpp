#pragma once

#include <cstddef>
#include <string_view>

namespace liftform::kernels {

// Flat double-array kernels behind the stream math. Every kernel has a scalar
// reference implementation and may have ISA-specific variants; the active set
// is chosen once at runtime from CPU capabilities (override with
// LIFTFORM_KERNELS=scalar|avx2).
//
// Element-wise kernels are bit-exact across variants: the vector lanes apply
// the same IEEE operation sequence per element as the scalar loop, and all
// kernel translation units are built with FP contraction off. Reductions
// (mean) reassociate and agree with scalar only to rounding.
struct KernelSet {
    std::string_view name;

    // v[i] *= s
    void (*scale_inplace)(double* v, std::size_t n, double s);
    // v[i] -= p[i % 3]; recentering a frame's packed x,y,z coordinates
    void (*sub_cycle3)(double* v, std::size_t n, const double p[3]);
    // out[i] = a[i] + t * (b[i] - a[i])
    void (*lerp)(const double* a, const double* b, double t, double* out, std::size_t n);
    // out[i] = |a[i] - b[i]|
    void (*abs_diff)(const double* a, const double* b, double* out, std::size_t n);
    // out[i] = a[i] + b[i] + c[i]
    void (*add3)(const double* a, const double* b, const double* c, double* out, std::size_t n);
    // out[i] = (a[i] - b[i]) * w[i]; central differences via shifted views
    void (*scaled_diff)(const double* a, const double* b, const double* w, double* out,
                        std::size_t n);
    // out[i] = sqrt(x[i]^2 + y[i]^2 + z[i]^2)
    void (*magnitude3)(const double* x, const double* y, const double* z, double* out,
                       std::size_t n);
    // One centered-mean pass, window 2*half_width+1 shrunk to the series
    // bounds at the edges. Window terms are summed in increasing index order
    // in every variant, so results are bit-identical to direct summation.
    void (*moving_average)(const double* in, double* out, std::size_t n, std::size_t half_width);
    // Arithmetic mean; 0 for n == 0.
    double (*mean)(const double* v, std::size_t n);
    // min/max of a non-empty array.
    void (*minmax)(const double* v, std::size_t n, double* min_out, double* max_out);
};

const KernelSet& scalar();

// AVX2+FMA variant, or nullptr when unsupported by the build or the CPU.
const KernelSet* avx2();

// The set selected for this process (CPU detection + env override).
const KernelSet& active();

}  // namespace liftform::kernels
