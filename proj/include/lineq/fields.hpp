#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "lineq/domain.hpp"
#include "lineq/types.hpp"

namespace lineq {

struct FirstOrderInvariants {
    double div;
    Vec3 rot;
    double grad_norm_sq;
};

// A smooth vector field with its 3x3 Jacobian, J(i,j) = dP_i/dx_j. Fields built
// without an analytic Jacobian fall back to central finite differences.
class VectorField {
public:
    enum class Provenance { analytic, finite_difference };

    VectorField() = default;

    static VectorField analytic(std::function<Vec3(const Vec3&)> value,
                                std::function<Mat3(const Vec3&)> jacobian, std::string name);
    static VectorField with_fd_jacobian(std::function<Vec3(const Vec3&)> value, std::string name,
                                        double step = 1e-5, bool richardson = false);

    Vec3 value(const Vec3& p) const { return value_(p); }
    Mat3 jacobian(const Vec3& p) const;

    Provenance provenance() const { return provenance_; }
    double fd_step() const { return step_; }
    const std::string& name() const { return name_; }

    VectorField scaled(double s) const;

private:
    std::function<Vec3(const Vec3&)> value_;
    std::function<Mat3(const Vec3&)> jacobian_;
    Provenance provenance_ = Provenance::analytic;
    double step_ = 1e-5;
    bool richardson_ = false;
    std::string name_;
};

struct ScalarField {
    std::function<double(const Vec3&)> value;
    std::string name;
};

FirstOrderInvariants invariants_at(const VectorField& field, const Vec3& point);

// Built-in analytic families -------------------------------------------------

// P = g(r) x / r with g a polynomial given by ascending coefficients.
VectorField make_radial_field(std::vector<double> g_coeffs);
VectorField make_constant_field(const Vec3& c);

// Component-wise polynomial of total degree <= 3; coeffs[c] lists one value per
// monomial in the canonical order of monomial_exponents(3).
VectorField make_polynomial_field(const std::array<std::vector<double>, 3>& coeffs,
                                  std::string name = "polynomial");

// Reproducible random cubic polynomial field, coefficients uniform in [-1, 1].
VectorField make_seeded_field(std::uint64_t seed, int degree = 3);

ScalarField make_scalar_constant(double c);
ScalarField make_scalar_radial_poly(std::vector<double> coeffs);
ScalarField make_seeded_scalar(std::uint64_t seed, int degree = 3);

// Canonical monomial exponent triples for total degree <= deg.
std::vector<std::array<int, 3>> monomial_exponents(int deg);

// Field satisfying the mixed boundary conditions by construction:
// P = (1-t)^p g n_gamma + t^p (V - (V . n_Gamma) n_Gamma) with ray-frozen
// away-oriented unit normals and t the per-ray layer coordinate. Tangential
// part vanishes on the inner surface, normal part on the outer.
VectorField bc_blend_field(const LayerDomain& domain, ScalarField g, VectorField V, int p);

// Convenience: blend with a seeded random scalar g and vector V.
VectorField make_seeded_blend(const LayerDomain& domain, std::uint64_t seed, int degree = 3,
                              int p = 2);

// max over the points of ((div P)^2 + |rot P|^2) / |grad P|^2, skipping points
// with |grad P|^2 <= 1e-30. The pointwise bound says this never exceeds 3.
double pointwise_bound_check(const VectorField& field, std::span<const Vec3> points);

}  // namespace lineq
