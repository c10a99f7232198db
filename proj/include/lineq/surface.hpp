#pragma once

#include <string>
#include <vector>

#include "lineq/harmonics.hpp"
#include "lineq/types.hpp"

namespace lineq {

struct HarmonicTerm {
    int l;
    int m;
    double amplitude;
};

// Boundary surface given as a radial graph r = R(theta, phi) over the unit sphere.
// R(theta, phi) = r0 + sum_k amplitude_k * S_{l_k, m_k}(theta, phi).
class RadialSurface {
public:
    static RadialSurface sphere(double r0);
    static RadialSurface harmonic(double r0, std::vector<HarmonicTerm> terms);

    double r0() const { return r0_; }
    const std::vector<HarmonicTerm>& terms() const { return terms_; }
    bool is_sphere() const { return terms_.empty(); }
    std::string describe() const;

private:
    RadialSurface(double r0, std::vector<HarmonicTerm> terms);
    double r0_ = 1.0;
    std::vector<HarmonicTerm> terms_;
};

// R and its angular derivatives at a fixed (theta, phi).
struct SurfaceJet2 {
    double R;
    double R_theta, R_phi;
    double R_theta2, R_theta_phi, R_phi2;
};

enum class Orientation { away_from_origin, toward_origin };

// Local orthonormal frame with the second-order shape data of the surface:
// hxx, hxy, hyy are the Hessian at the origin of the height function z = f(x, y)
// describing the surface over its tangent plane, with z along `normal` and
// (x, y) along (tangent1, tangent2). For a sphere of radius R0 oriented
// away_from_origin, hxx = hyy = -1/R0.
struct SurfaceFrame {
    Vec3 point;
    Vec3 normal;
    Vec3 tangent1, tangent2;
    Orientation orientation;
    double hxx, hxy, hyy;
    double area_ratio;  // dS / (R^2 sin(th) dth dph) = 1/|n_r|
    double theta, phi;
};

SurfaceJet2 surface_jet(const RadialSurface& surface, double theta, double phi);

SurfaceFrame surface_frame(const RadialSurface& surface, double theta, double phi,
                           Orientation orientation);

inline double curvature_sum(const SurfaceFrame& frame) { return frame.hxx + frame.hyy; }

// The three coefficient conditions for the height quadratic form to be
// negative semidefinite, each with slack tol.
bool hessian_negative_semidefinite(const SurfaceFrame& frame, double tol);

}  // namespace lineq
