#pragma once

#include <cstddef>
#include <string_view>

namespace lineq::kernels {

// Data-parallel inner loops of the quadrature and field pipelines. Every
// function has a scalar reference implementation and SIMD variants selected
// once at startup from the CPU features; all variants use the same 4-lane
// blocked reduction order so results agree across paths to rounding.
//
// Dispatched entry points:

// sum_i w[i] * f[i]
double weighted_sum(const double* w, const double* f, std::size_t n);

// sum_i w[i] * a[i] * b[i]
double weighted_dot(const double* w, const double* a, const double* b, std::size_t n);

// out[i] = x[i]^2 + y[i]^2 + z[i]^2
void norm_sq3(const double* x, const double* y, const double* z, double* out, std::size_t n);

// From the nine Jacobian component arrays (row-major: j[3*r+c][i] = dP_r/dx_c),
// divrot_sq[i] = (div)^2 + |rot|^2 and grad_sq[i] = sum of squared entries.
void first_order_invariants(const double* const j[9], double* divrot_sq, double* grad_sq,
                            std::size_t n);

// Name of the instruction set the dispatcher picked ("scalar", "avx2", "neon").
std::string_view active_isa();

namespace scalar {
double weighted_sum(const double* w, const double* f, std::size_t n);
double weighted_dot(const double* w, const double* a, const double* b, std::size_t n);
void norm_sq3(const double* x, const double* y, const double* z, double* out, std::size_t n);
void first_order_invariants(const double* const j[9], double* divrot_sq, double* grad_sq,
                            std::size_t n);
}  // namespace scalar

}  // namespace lineq::kernels
