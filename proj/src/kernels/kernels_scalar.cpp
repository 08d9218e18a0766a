#include <algorithm>
#include <cmath>
#include <cstddef>

#include "liftform/kernels.hpp"

// Scalar reference kernels. These define the semantics the SIMD variants are
// equivalence-tested against; keep them as plain loops.

namespace liftform::kernels {
namespace {

void scale_inplace_scalar(double* v, std::size_t n, double s) {
    for (std::size_t i = 0; i < n; ++i) v[i] *= s;
}

void sub_cycle3_scalar(double* v, std::size_t n, const double p[3]) {
    for (std::size_t i = 0; i < n; ++i) v[i] -= p[i % 3];
}

void lerp_scalar(const double* a, const double* b, double t, double* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] = a[i] + t * (b[i] - a[i]);
}

void abs_diff_scalar(const double* a, const double* b, double* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] = std::fabs(a[i] - b[i]);
}

void add3_scalar(const double* a, const double* b, const double* c, double* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] = a[i] + b[i] + c[i];
}

void scaled_diff_scalar(const double* a, const double* b, const double* w, double* out,
                        std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] = (a[i] - b[i]) * w[i];
}

void magnitude3_scalar(const double* x, const double* y, const double* z, double* out,
                       std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        out[i] = std::sqrt(x[i] * x[i] + y[i] * y[i] + z[i] * z[i]);
}

void moving_average_scalar(const double* in, double* out, std::size_t n, std::size_t half_width) {
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t lo = i >= half_width ? i - half_width : 0;
        std::size_t hi = std::min(n - 1, i + half_width);
        double sum = 0.0;
        for (std::size_t k = lo; k <= hi; ++k) sum += in[k];
        out[i] = sum / static_cast<double>(hi - lo + 1);
    }
}

double mean_scalar(const double* v, std::size_t n) {
    if (n == 0) return 0.0;
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) sum += v[i];
    return sum / static_cast<double>(n);
}

void minmax_scalar(const double* v, std::size_t n, double* min_out, double* max_out) {
    double mn = v[0];
    double mx = v[0];
    for (std::size_t i = 1; i < n; ++i) {
        mn = std::min(mn, v[i]);
        mx = std::max(mx, v[i]);
    }
    *min_out = mn;
    *max_out = mx;
}

}  // namespace

const KernelSet& scalar() {
    static const KernelSet set = {
        "scalar",
        scale_inplace_scalar,
        sub_cycle3_scalar,
        lerp_scalar,
        abs_diff_scalar,
        add3_scalar,
        scaled_diff_scalar,
        magnitude3_scalar,
        moving_average_scalar,
        mean_scalar,
        minmax_scalar,
    };
    return set;
}

}  // namespace liftform::kernels
