// AVX2 kernel variants, compiled with -mavx2 and installed by the dispatcher
// only when the CPU reports AVX2. The 4-lane accumulator layout and the
// (l0+l1)+(l2+l3) combine match the scalar reference exactly; FMA contraction
// is disabled for these files so both paths round identically.

#if defined(LINEQ_KERNELS_AVX2)

#include <immintrin.h>

#include <algorithm>

#include "kernels_impl.hpp"

namespace lineq::kernels::avx2 {

namespace {
constexpr std::size_t kBlock = 4096;

inline double combine_lanes(__m256d acc) {
    const __m128d lo = _mm256_castpd256_pd128(acc);   // lanes 0, 1
    const __m128d hi = _mm256_extractf128_pd(acc, 1);  // lanes 2, 3
    const double l0 = _mm_cvtsd_f64(lo);
    const double l1 = _mm_cvtsd_f64(_mm_unpackhi_pd(lo, lo));
    const double l2 = _mm_cvtsd_f64(hi);
    const double l3 = _mm_cvtsd_f64(_mm_unpackhi_pd(hi, hi));
    return (l0 + l1) + (l2 + l3);
}
}  // namespace

double weighted_sum(const double* w, const double* f, std::size_t n) {
    double total = 0.0;
    for (std::size_t base = 0; base < n; base += kBlock) {
        const std::size_t m = std::min(kBlock, n - base);
        const std::size_t m4 = m & ~std::size_t{3};
        const double* wp = w + base;
        const double* fp = f + base;
        __m256d acc = _mm256_setzero_pd();
        for (std::size_t i = 0; i < m4; i += 4)
            acc = _mm256_add_pd(acc, _mm256_mul_pd(_mm256_loadu_pd(wp + i), _mm256_loadu_pd(fp + i)));
        double block = combine_lanes(acc);
        for (std::size_t i = m4; i < m; ++i) block += wp[i] * fp[i];
        total += block;
    }
    return total;
}

double weighted_dot(const double* w, const double* a, const double* b, std::size_t n) {
    double total = 0.0;
    for (std::size_t base = 0; base < n; base += kBlock) {
        const std::size_t m = std::min(kBlock, n - base);
        const std::size_t m4 = m & ~std::size_t{3};
        const double* wp = w + base;
        const double* ap = a + base;
        const double* bp = b + base;
        __m256d acc = _mm256_setzero_pd();
        for (std::size_t i = 0; i < m4; i += 4) {
            const __m256d prod =
                _mm256_mul_pd(_mm256_mul_pd(_mm256_loadu_pd(wp + i), _mm256_loadu_pd(ap + i)),
                              _mm256_loadu_pd(bp + i));
            acc = _mm256_add_pd(acc, prod);
        }
        double block = combine_lanes(acc);
        for (std::size_t i = m4; i < m; ++i) block += wp[i] * ap[i] * bp[i];
        total += block;
    }
    return total;
}

void norm_sq3(const double* x, const double* y, const double* z, double* out, std::size_t n) {
    const std::size_t n4 = n & ~std::size_t{3};
    for (std::size_t i = 0; i < n4; i += 4) {
        const __m256d xv = _mm256_loadu_pd(x + i);
        const __m256d yv = _mm256_loadu_pd(y + i);
        const __m256d zv = _mm256_loadu_pd(z + i);
        const __m256d s = _mm256_add_pd(
            _mm256_add_pd(_mm256_mul_pd(xv, xv), _mm256_mul_pd(yv, yv)), _mm256_mul_pd(zv, zv));
        _mm256_storeu_pd(out + i, s);
    }
    for (std::size_t i = n4; i < n; ++i) out[i] = x[i] * x[i] + y[i] * y[i] + z[i] * z[i];
}

void first_order_invariants(const double* const j[9], double* divrot_sq, double* grad_sq,
                            std::size_t n) {
    const double *j11 = j[0], *j12 = j[1], *j13 = j[2];
    const double *j21 = j[3], *j22 = j[4], *j23 = j[5];
    const double *j31 = j[6], *j32 = j[7], *j33 = j[8];
    const std::size_t n4 = n & ~std::size_t{3};
    for (std::size_t i = 0; i < n4; i += 4) {
        const __m256d a11 = _mm256_loadu_pd(j11 + i), a12 = _mm256_loadu_pd(j12 + i);
        const __m256d a13 = _mm256_loadu_pd(j13 + i), a21 = _mm256_loadu_pd(j21 + i);
        const __m256d a22 = _mm256_loadu_pd(j22 + i), a23 = _mm256_loadu_pd(j23 + i);
        const __m256d a31 = _mm256_loadu_pd(j31 + i), a32 = _mm256_loadu_pd(j32 + i);
        const __m256d a33 = _mm256_loadu_pd(j33 + i);

        const __m256d div = _mm256_add_pd(_mm256_add_pd(a11, a22), a33);
        const __m256d rx = _mm256_sub_pd(a32, a23);
        const __m256d ry = _mm256_sub_pd(a13, a31);
        const __m256d rz = _mm256_sub_pd(a21, a12);
        const __m256d dr = _mm256_add_pd(
            _mm256_add_pd(_mm256_mul_pd(div, div), _mm256_mul_pd(rx, rx)),
            _mm256_add_pd(_mm256_mul_pd(ry, ry), _mm256_mul_pd(rz, rz)));
        _mm256_storeu_pd(divrot_sq + i, dr);

        __m256d g = _mm256_mul_pd(a11, a11);
        g = _mm256_add_pd(g, _mm256_mul_pd(a12, a12));
        g = _mm256_add_pd(g, _mm256_mul_pd(a13, a13));
        g = _mm256_add_pd(g, _mm256_mul_pd(a21, a21));
        g = _mm256_add_pd(g, _mm256_mul_pd(a22, a22));
        g = _mm256_add_pd(g, _mm256_mul_pd(a23, a23));
        g = _mm256_add_pd(g, _mm256_mul_pd(a31, a31));
        g = _mm256_add_pd(g, _mm256_mul_pd(a32, a32));
        g = _mm256_add_pd(g, _mm256_mul_pd(a33, a33));
        _mm256_storeu_pd(grad_sq + i, g);
    }
    for (std::size_t i = n4; i < n; ++i) {
        const double div = j11[i] + j22[i] + j33[i];
        const double rx = j32[i] - j23[i];
        const double ry = j13[i] - j31[i];
        const double rz = j21[i] - j12[i];
        divrot_sq[i] = div * div + rx * rx + ry * ry + rz * rz;
        grad_sq[i] = j11[i] * j11[i] + j12[i] * j12[i] + j13[i] * j13[i] + j21[i] * j21[i] +
                     j22[i] * j22[i] + j23[i] * j23[i] + j31[i] * j31[i] + j32[i] * j32[i] +
                     j33[i] * j33[i];
    }
}

}  // namespace lineq::kernels::avx2

#endif  // LINEQ_KERNELS_AVX2
