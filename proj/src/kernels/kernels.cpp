#include "lineq/kernels.hpp"

#include <algorithm>

#include "kernels_impl.hpp"

namespace lineq::kernels {

namespace {
constexpr std::size_t kBlock = 4096;  // reduction block, multiple of the lane count
}

namespace scalar {

double weighted_sum(const double* w, const double* f, std::size_t n) {
    double total = 0.0;
    for (std::size_t base = 0; base < n; base += kBlock) {
        const std::size_t m = std::min(kBlock, n - base);
        const std::size_t m4 = m & ~std::size_t{3};
        const double* wp = w + base;
        const double* fp = f + base;
        double acc0 = 0.0, acc1 = 0.0, acc2 = 0.0, acc3 = 0.0;
        for (std::size_t i = 0; i < m4; i += 4) {
            acc0 += wp[i] * fp[i];
            acc1 += wp[i + 1] * fp[i + 1];
            acc2 += wp[i + 2] * fp[i + 2];
            acc3 += wp[i + 3] * fp[i + 3];
        }
        double block = (acc0 + acc1) + (acc2 + acc3);
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
        double acc0 = 0.0, acc1 = 0.0, acc2 = 0.0, acc3 = 0.0;
        for (std::size_t i = 0; i < m4; i += 4) {
            acc0 += wp[i] * ap[i] * bp[i];
            acc1 += wp[i + 1] * ap[i + 1] * bp[i + 1];
            acc2 += wp[i + 2] * ap[i + 2] * bp[i + 2];
            acc3 += wp[i + 3] * ap[i + 3] * bp[i + 3];
        }
        double block = (acc0 + acc1) + (acc2 + acc3);
        for (std::size_t i = m4; i < m; ++i) block += wp[i] * ap[i] * bp[i];
        total += block;
    }
    return total;
}

void norm_sq3(const double* x, const double* y, const double* z, double* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] = x[i] * x[i] + y[i] * y[i] + z[i] * z[i];
}

void first_order_invariants(const double* const j[9], double* divrot_sq, double* grad_sq,
                            std::size_t n) {
    const double *j11 = j[0], *j12 = j[1], *j13 = j[2];
    const double *j21 = j[3], *j22 = j[4], *j23 = j[5];
    const double *j31 = j[6], *j32 = j[7], *j33 = j[8];
    for (std::size_t i = 0; i < n; ++i) {
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

}  // namespace scalar

namespace {

struct OpsTable {
    double (*wsum)(const double*, const double*, std::size_t);
    double (*wdot)(const double*, const double*, const double*, std::size_t);
    void (*nsq3)(const double*, const double*, const double*, double*, std::size_t);
    void (*inv)(const double* const*, double*, double*, std::size_t);
    const char* name;
};

OpsTable pick_ops() {
#if defined(LINEQ_KERNELS_AVX2)
    if (__builtin_cpu_supports("avx2"))
        return {avx2::weighted_sum, avx2::weighted_dot, avx2::norm_sq3,
                avx2::first_order_invariants, "avx2"};
#endif
#if defined(LINEQ_KERNELS_NEON)
    return {neon::weighted_sum, neon::weighted_dot, neon::norm_sq3, neon::first_order_invariants,
            "neon"};
#endif
    return {scalar::weighted_sum, scalar::weighted_dot, scalar::norm_sq3,
            scalar::first_order_invariants, "scalar"};
}

const OpsTable& ops() {
    static const OpsTable table = pick_ops();
    return table;
}

}  // namespace

double weighted_sum(const double* w, const double* f, std::size_t n) {
    return ops().wsum(w, f, n);
}

double weighted_dot(const double* w, const double* a, const double* b, std::size_t n) {
    return ops().wdot(w, a, b, n);
}

void norm_sq3(const double* x, const double* y, const double* z, double* out, std::size_t n) {
    ops().nsq3(x, y, z, out, n);
}

void first_order_invariants(const double* const j[9], double* divrot_sq, double* grad_sq,
                            std::size_t n) {
    ops().inv(j, divrot_sq, grad_sq, n);
}

std::string_view active_isa() { return ops().name; }

}  // namespace lineq::kernels
