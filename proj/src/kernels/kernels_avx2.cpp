#include "liftform/kernels.hpp"

// AVX2 variants. Element-wise kernels mirror the scalar operation sequence
// per lane (mul+add, no FMA) so they are bit-exact against the reference;
// the mean reduction reassociates. Remainder loops repeat the scalar
// expressions and this TU is built with -ffp-contract=off, so the tails
// match too.

#if defined(LIFTFORM_BUILD_AVX2)

#include <immintrin.h>

#include <algorithm>
#include <cmath>
#include <cstddef>

namespace liftform::kernels {
namespace {

void scale_inplace_avx2(double* v, std::size_t n, double s) {
    const __m256d vs = _mm256_set1_pd(s);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        _mm256_storeu_pd(v + i, _mm256_mul_pd(_mm256_loadu_pd(v + i), vs));
    for (; i < n; ++i) v[i] *= s;
}

void sub_cycle3_avx2(double* v, std::size_t n, const double p[3]) {
    // Period-3 pattern against 4-wide lanes: advance 12 elements per step
    // with three pre-rotated pattern vectors.
    const __m256d p0 = _mm256_setr_pd(p[0], p[1], p[2], p[0]);
    const __m256d p1 = _mm256_setr_pd(p[1], p[2], p[0], p[1]);
    const __m256d p2 = _mm256_setr_pd(p[2], p[0], p[1], p[2]);
    std::size_t i = 0;
    for (; i + 12 <= n; i += 12) {
        _mm256_storeu_pd(v + i, _mm256_sub_pd(_mm256_loadu_pd(v + i), p0));
        _mm256_storeu_pd(v + i + 4, _mm256_sub_pd(_mm256_loadu_pd(v + i + 4), p1));
        _mm256_storeu_pd(v + i + 8, _mm256_sub_pd(_mm256_loadu_pd(v + i + 8), p2));
    }
    for (; i < n; ++i) v[i] -= p[i % 3];
}

void lerp_avx2(const double* a, const double* b, double t, double* out, std::size_t n) {
    const __m256d vt = _mm256_set1_pd(t);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d va = _mm256_loadu_pd(a + i);
        __m256d vb = _mm256_loadu_pd(b + i);
        __m256d d = _mm256_sub_pd(vb, va);
        _mm256_storeu_pd(out + i, _mm256_add_pd(va, _mm256_mul_pd(vt, d)));
    }
    for (; i < n; ++i) out[i] = a[i] + t * (b[i] - a[i]);
}

void abs_diff_avx2(const double* a, const double* b, double* out, std::size_t n) {
    const __m256d sign_mask = _mm256_set1_pd(-0.0);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d d = _mm256_sub_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i));
        _mm256_storeu_pd(out + i, _mm256_andnot_pd(sign_mask, d));
    }
    for (; i < n; ++i) out[i] = std::fabs(a[i] - b[i]);
}

void add3_avx2(const double* a, const double* b, const double* c, double* out, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d s = _mm256_add_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i));
        _mm256_storeu_pd(out + i, _mm256_add_pd(s, _mm256_loadu_pd(c + i)));
    }
    for (; i < n; ++i) out[i] = a[i] + b[i] + c[i];
}

void scaled_diff_avx2(const double* a, const double* b, const double* w, double* out,
                      std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d d = _mm256_sub_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i));
        _mm256_storeu_pd(out + i, _mm256_mul_pd(d, _mm256_loadu_pd(w + i)));
    }
    for (; i < n; ++i) out[i] = (a[i] - b[i]) * w[i];
}

void magnitude3_avx2(const double* x, const double* y, const double* z, double* out,
                     std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d vx = _mm256_loadu_pd(x + i);
        __m256d vy = _mm256_loadu_pd(y + i);
        __m256d vz = _mm256_loadu_pd(z + i);
        __m256d sum = _mm256_add_pd(_mm256_add_pd(_mm256_mul_pd(vx, vx), _mm256_mul_pd(vy, vy)),
                                    _mm256_mul_pd(vz, vz));
        _mm256_storeu_pd(out + i, _mm256_sqrt_pd(sum));
    }
    for (; i < n; ++i) out[i] = std::sqrt(x[i] * x[i] + y[i] * y[i] + z[i] * z[i]);
}

void moving_average_avx2(const double* in, double* out, std::size_t n, std::size_t half_width) {
    const std::size_t width = 2 * half_width + 1;

    // Shrunk windows at the edges stay scalar.
    auto edge = [&](std::size_t i) {
        std::size_t lo = i >= half_width ? i - half_width : 0;
        std::size_t hi = std::min(n - 1, i + half_width);
        double sum = 0.0;
        for (std::size_t k = lo; k <= hi; ++k) sum += in[k];
        out[i] = sum / static_cast<double>(hi - lo + 1);
    };

    if (n == 0) return;
    if (width >= n || half_width == 0) {
        if (half_width == 0) {
            std::copy(in, in + n, out);
            return;
        }
        for (std::size_t i = 0; i < n; ++i) edge(i);
        return;
    }

    for (std::size_t i = 0; i < half_width; ++i) edge(i);
    for (std::size_t i = n - half_width; i < n; ++i) edge(i);

    // Full windows: each lane accumulates its window terms in increasing
    // index order, matching the scalar summation order exactly.
    const __m256d vw = _mm256_set1_pd(static_cast<double>(width));
    std::size_t i = half_width;
    const std::size_t interior_end = n - half_width;
    for (; i + 4 <= interior_end; i += 4) {
        __m256d sum = _mm256_loadu_pd(in + i - half_width);
        for (std::size_t k = 1; k < width; ++k)
            sum = _mm256_add_pd(sum, _mm256_loadu_pd(in + i - half_width + k));
        _mm256_storeu_pd(out + i, _mm256_div_pd(sum, vw));
    }
    for (; i < interior_end; ++i) {
        double sum = 0.0;
        for (std::size_t k = i - half_width; k <= i + half_width; ++k) sum += in[k];
        out[i] = sum / static_cast<double>(width);
    }
}

double mean_avx2(const double* v, std::size_t n) {
    if (n == 0) return 0.0;
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) acc = _mm256_add_pd(acc, _mm256_loadu_pd(v + i));
    __m128d lo = _mm256_castpd256_pd128(acc);
    __m128d hi = _mm256_extractf128_pd(acc, 1);
    __m128d s = _mm_add_pd(lo, hi);
    double sum = _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
    for (; i < n; ++i) sum += v[i];
    return sum / static_cast<double>(n);
}

void minmax_avx2(const double* v, std::size_t n, double* min_out, double* max_out) {
    double mn = v[0];
    double mx = v[0];
    std::size_t i = 0;
    if (n >= 4) {
        __m256d vmn = _mm256_loadu_pd(v);
        __m256d vmx = vmn;
        for (i = 4; i + 4 <= n; i += 4) {
            __m256d x = _mm256_loadu_pd(v + i);
            vmn = _mm256_min_pd(vmn, x);
            vmx = _mm256_max_pd(vmx, x);
        }
        alignas(32) double tmp[4];
        _mm256_store_pd(tmp, vmn);
        mn = std::min(std::min(tmp[0], tmp[1]), std::min(tmp[2], tmp[3]));
        _mm256_store_pd(tmp, vmx);
        mx = std::max(std::max(tmp[0], tmp[1]), std::max(tmp[2], tmp[3]));
    }
    for (; i < n; ++i) {
        mn = std::min(mn, v[i]);
        mx = std::max(mx, v[i]);
    }
    *min_out = mn;
    *max_out = mx;
}

}  // namespace

const KernelSet* avx2_impl() {
    static const KernelSet set = {
        "avx2",
        scale_inplace_avx2,
        sub_cycle3_avx2,
        lerp_avx2,
        abs_diff_avx2,
        add3_avx2,
        scaled_diff_avx2,
        magnitude3_avx2,
        moving_average_avx2,
        mean_avx2,
        minmax_avx2,
    };
    return &set;
}

}  // namespace liftform::kernels

#else

namespace liftform::kernels {

const KernelSet* avx2_impl() { return nullptr; }

}  // namespace liftform::kernels

#endif  // LIFTFORM_BUILD_AVX2
