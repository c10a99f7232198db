#pragma once

#include <cstddef>

// Internal declarations shared between the kernel variants and the dispatcher.

namespace lineq::kernels {

#if defined(LINEQ_KERNELS_AVX2)
namespace avx2 {
double weighted_sum(const double* w, const double* f, std::size_t n);
double weighted_dot(const double* w, const double* a, const double* b, std::size_t n);
void norm_sq3(const double* x, const double* y, const double* z, double* out, std::size_t n);
void first_order_invariants(const double* const j[9], double* divrot_sq, double* grad_sq,
                            std::size_t n);
}  // namespace avx2
#endif

#if defined(LINEQ_KERNELS_NEON)
namespace neon {
double weighted_sum(const double* w, const double* f, std::size_t n);
double weighted_dot(const double* w, const double* a, const double* b, std::size_t n);
void norm_sq3(const double* x, const double* y, const double* z, double* out, std::size_t n);
void first_order_invariants(const double* const j[9], double* divrot_sq, double* grad_sq,
                            std::size_t n);
}  // namespace neon
#endif

}  // namespace lineq::kernels
