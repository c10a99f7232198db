#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <string>

namespace lineq {

using Vec3 = Eigen::Vector3d;
// Jacobian convention: J(i,j) = dP_i / dx_j.
using Mat3 = Eigen::Matrix3d;

// Spherical coordinates: x = r sin(th) cos(ph), y = r sin(th) sin(ph), z = r cos(th).
struct SphericalBasis {
    Vec3 e_r;
    Vec3 e_theta;
    Vec3 e_phi;
};

inline SphericalBasis spherical_basis(double theta, double phi) {
    const double st = std::sin(theta), ct = std::cos(theta);
    const double sp = std::sin(phi), cp = std::cos(phi);
    return {Vec3(st * cp, st * sp, ct),
            Vec3(ct * cp, ct * sp, -st),
            Vec3(-sp, cp, 0.0)};
}

inline Vec3 to_cartesian(double r, double theta, double phi) {
    const double st = std::sin(theta);
    return {r * st * std::cos(phi), r * st * std::sin(phi), r * std::cos(theta)};
}

struct Spherical {
    double r, theta, phi;
};

inline Spherical to_spherical(const Vec3& p) {
    const double r = p.norm();
    if (r == 0.0) return {0.0, 0.0, 0.0};
    const double c = std::clamp(p.z() / r, -1.0, 1.0);
    return {r, std::acos(c), std::atan2(p.y(), p.x())};
}

[[noreturn]] inline void fail(const std::string& what) {
    throw std::runtime_error(what);
}

}  // namespace lineq
