// NEON kernel variants for aarch64 (f64x2 lanes, paired to mirror the 4-lane
// blocked reduction of the scalar reference).

#if defined(LINEQ_KERNELS_NEON)

#include <arm_neon.h>

#include <algorithm>

#include "kernels_impl.hpp"

namespace lineq::kernels::neon {

namespace {
constexpr std::size_t kBlock = 4096;
}

double weighted_sum(const double* w, const double* f, std::size_t n) {
    double total = 0.0;
    for (std::size_t base = 0; base < n; base += kBlock) {
        const std::size_t m = std::min(kBlock, n - base);
        const std::size_t m4 = m & ~std::size_t{3};
        const double* wp = w + base;
        const double* fp = f + base;
        float64x2_t acc01 = vdupq_n_f64(0.0), acc23 = vdupq_n_f64(0.0);
        for (std::size_t i = 0; i < m4; i += 4) {
            acc01 = vaddq_f64(acc01, vmulq_f64(vld1q_f64(wp + i), vld1q_f64(fp + i)));
            acc23 = vaddq_f64(acc23, vmulq_f64(vld1q_f64(wp + i + 2), vld1q_f64(fp + i + 2)));
        }
        double block = (vgetq_lane_f64(acc01, 0) + vgetq_lane_f64(acc01, 1)) +
                       (vgetq_lane_f64(acc23, 0) + vgetq_lane_f64(acc23, 1));
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
        float64x2_t acc01 = vdupq_n_f64(0.0), acc23 = vdupq_n_f64(0.0);
        for (std::size_t i = 0; i < m4; i += 4) {
            acc01 = vaddq_f64(
                acc01, vmulq_f64(vmulq_f64(vld1q_f64(wp + i), vld1q_f64(ap + i)), vld1q_f64(bp + i)));
            acc23 = vaddq_f64(acc23, vmulq_f64(vmulq_f64(vld1q_f64(wp + i + 2), vld1q_f64(ap + i + 2)),
                                               vld1q_f64(bp + i + 2)));
        }
        double block = (vgetq_lane_f64(acc01, 0) + vgetq_lane_f64(acc01, 1)) +
                       (vgetq_lane_f64(acc23, 0) + vgetq_lane_f64(acc23, 1));
        for (std::size_t i = m4; i < m; ++i) block += wp[i] * ap[i] * bp[i];
        total += block;
    }
    return total;
}

void norm_sq3(const double* x, const double* y, const double* z, double* out, std::size_t n) {
    const std::size_t n2 = n & ~std::size_t{1};
    for (std::size_t i = 0; i < n2; i += 2) {
        const float64x2_t xv = vld1q_f64(x + i), yv = vld1q_f64(y + i), zv = vld1q_f64(z + i);
        vst1q_f64(out + i,
                  vaddq_f64(vaddq_f64(vmulq_f64(xv, xv), vmulq_f64(yv, yv)), vmulq_f64(zv, zv)));
    }
    for (std::size_t i = n2; i < n; ++i) out[i] = x[i] * x[i] + y[i] * y[i] + z[i] * z[i];
}

void first_order_invariants(const double* const j[9], double* divrot_sq, double* grad_sq,
                            std::size_t n) {
    const double *j11 = j[0], *j12 = j[1], *j13 = j[2];
    const double *j21 = j[3], *j22 = j[4], *j23 = j[5];
    const double *j31 = j[6], *j32 = j[7], *j33 = j[8];
    const std::size_t n2 = n & ~std::size_t{1};
    for (std::size_t i = 0; i < n2; i += 2) {
        const float64x2_t a11 = vld1q_f64(j11 + i), a12 = vld1q_f64(j12 + i), a13 = vld1q_f64(j13 + i);
        const float64x2_t a21 = vld1q_f64(j21 + i), a22 = vld1q_f64(j22 + i), a23 = vld1q_f64(j23 + i);
        const float64x2_t a31 = vld1q_f64(j31 + i), a32 = vld1q_f64(j32 + i), a33 = vld1q_f64(j33 + i);
        const float64x2_t div = vaddq_f64(vaddq_f64(a11, a22), a33);
        const float64x2_t rx = vsubq_f64(a32, a23);
        const float64x2_t ry = vsubq_f64(a13, a31);
        const float64x2_t rz = vsubq_f64(a21, a12);
        vst1q_f64(divrot_sq + i,
                  vaddq_f64(vaddq_f64(vmulq_f64(div, div), vmulq_f64(rx, rx)),
                            vaddq_f64(vmulq_f64(ry, ry), vmulq_f64(rz, rz))));
        float64x2_t g = vmulq_f64(a11, a11);
        g = vaddq_f64(g, vmulq_f64(a12, a12));
        g = vaddq_f64(g, vmulq_f64(a13, a13));
        g = vaddq_f64(g, vmulq_f64(a21, a21));
        g = vaddq_f64(g, vmulq_f64(a22, a22));
        g = vaddq_f64(g, vmulq_f64(a23, a23));
        g = vaddq_f64(g, vmulq_f64(a31, a31));
        g = vaddq_f64(g, vmulq_f64(a32, a32));
        g = vaddq_f64(g, vmulq_f64(a33, a33));
        vst1q_f64(grad_sq + i, g);
    }
    for (std::size_t i = n2; i < n; ++i) {
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

}  // namespace lineq::kernels::neon

#endif  // LINEQ_KERNELS_NEON
