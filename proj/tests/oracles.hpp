// Independent test oracles. Everything here recomputes quantities from
// first principles (finite differences, least-squares fits, 1D quadrature)
// without touching the implementation paths under test.
#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "lineq/surface.hpp"
#include "lineq/types.hpp"

namespace oracles {

using lineq::Vec3;

// Central finite differences of R(theta, phi) only; checks the analytic jet.
inline lineq::SurfaceJet2 fd_surface_jet(const lineq::RadialSurface& surface, double theta,
                                         double phi, double h = 1e-5) {
    auto R = [&](double t, double p) { return lineq::surface_jet(surface, t, p).R; };
    lineq::SurfaceJet2 jet;
    jet.R = R(theta, phi);
    jet.R_theta = (R(theta + h, phi) - R(theta - h, phi)) / (2.0 * h);
    jet.R_phi = (R(theta, phi + h) - R(theta, phi - h)) / (2.0 * h);
    jet.R_theta2 = (R(theta + h, phi) - 2.0 * jet.R + R(theta - h, phi)) / (h * h);
    jet.R_phi2 = (R(theta, phi + h) - 2.0 * jet.R + R(theta, phi - h)) / (h * h);
    jet.R_theta_phi = (R(theta + h, phi + h) - R(theta + h, phi - h) - R(theta - h, phi + h) +
                       R(theta - h, phi - h)) /
                      (4.0 * h * h);
    return jet;
}

struct HeightHessian {
    double hxx, hxy, hyy;
};

// Least-squares fit of the height of nearby surface points expressed in the
// frame: z ~ cubic(x, y). The quadratic coefficients give the height Hessian
// independently of the fundamental-form route.
inline HeightHessian fit_height_hessian(const lineq::RadialSurface& surface,
                                        const lineq::SurfaceFrame& frame, double rho = 3e-4) {
    const int half = 3;
    std::vector<Vec3> samples;
    for (int i = -half; i <= half; ++i) {
        for (int j = -half; j <= half; ++j) {
            const double th = frame.theta + rho * i / half;
            const double ph = frame.phi + rho * j / half;
            const lineq::SurfaceJet2 jet = lineq::surface_jet(surface, th, ph);
            samples.push_back(lineq::to_cartesian(jet.R, th, ph));
        }
    }
    const int m = static_cast<int>(samples.size());
    Eigen::VectorXd xs(m), ys(m), zs(m);
    for (int k = 0; k < m; ++k) {
        const Vec3 d = samples[k] - frame.point;
        xs[k] = d.dot(frame.tangent1);
        ys[k] = d.dot(frame.tangent2);
        zs[k] = d.dot(frame.normal);
    }
    const double scale = std::max(xs.cwiseAbs().maxCoeff(), ys.cwiseAbs().maxCoeff());
    xs /= scale;
    ys /= scale;

    Eigen::MatrixXd basis(m, 10);
    for (int k = 0; k < m; ++k) {
        const double x = xs[k], y = ys[k];
        basis.row(k) << 1.0, x, y, x * x, x * y, y * y, x * x * x, x * x * y, x * y * y, y * y * y;
    }
    const Eigen::VectorXd c = basis.colPivHouseholderQr().solve(zs);
    return {2.0 * c[3] / (scale * scale), c[4] / (scale * scale), 2.0 * c[5] / (scale * scale)};
}

// Central-difference Jacobian from field values only.
inline lineq::Mat3 fd_jacobian(const std::function<Vec3(const Vec3&)>& value, const Vec3& p,
                               double h = 1e-5) {
    lineq::Mat3 jac;
    for (int j = 0; j < 3; ++j) {
        Vec3 dp = Vec3::Zero();
        dp[j] = h;
        jac.col(j) = (value(p + dp) - value(p - dp)) / (2.0 * h);
    }
    return jac;
}

// Adaptive Simpson quadrature.
inline double simpson_step(const std::function<double(double)>& f, double a, double b, double fa,
                           double fb, double fm, double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    if (depth <= 0 || std::abs(left + right - whole) < 15.0 * tol)
        return left + right + (left + right - whole) / 15.0;
    return simpson_step(f, a, m, fa, fm, flm, left, 0.5 * tol, depth - 1) +
           simpson_step(f, m, b, fm, fb, frm, right, 0.5 * tol, depth - 1);
}

inline double integrate_1d(const std::function<double(double)>& f, double a, double b,
                           double tol = 1e-13) {
    const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return simpson_step(f, a, b, fa, fb, fm, whole, tol, 48);
}

// For purely radial fields P = g(r) e_r:
//   |P|^2 = g^2, |grad P|^2 = g'^2 + 2 g^2 / r^2, div P = g' + 2 g / r, rot P = 0.
struct RadialBundle {
    double vol_P2, vol_grad2, vol_divrot2;
    double surf_gamma_P2, surf_Gamma_P2;
};

inline RadialBundle radial_bundle_oracle(const std::function<double(double)>& g,
                                         const std::function<double(double)>& gp, double a,
                                         double b) {
    const double four_pi = 4.0 * M_PI;
    RadialBundle out;
    out.vol_P2 = four_pi * integrate_1d([&](double r) { return g(r) * g(r) * r * r; }, a, b);
    out.vol_grad2 = four_pi * integrate_1d(
                                  [&](double r) {
                                      const double gr = g(r), gpr = gp(r);
                                      return (gpr * gpr + 2.0 * gr * gr / (r * r)) * r * r;
                                  },
                                  a, b);
    out.vol_divrot2 = four_pi * integrate_1d(
                                    [&](double r) {
                                        const double d = gp(r) + 2.0 * g(r) / r;
                                        return d * d * r * r;
                                    },
                                    a, b);
    out.surf_gamma_P2 = four_pi * a * a * g(a) * g(a);
    out.surf_Gamma_P2 = four_pi * b * b * g(b) * g(b);
    return out;
}

// Deterministic sample points strictly inside the layer, away from the poles.
inline std::vector<Vec3> layer_points(double r_lo, double r_hi, std::size_t count,
                                      std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    auto unit = [&gen] { return (gen() >> 11) * 0x1.0p-53; };
    std::vector<Vec3> points;
    points.reserve(count);
    while (points.size() < count) {
        const double r = r_lo + (r_hi - r_lo) * (0.05 + 0.9 * unit());
        const double ct = std::clamp(1.0 - 2.0 * unit(), -0.995, 0.995);
        const double phi = 2.0 * M_PI * unit();
        points.push_back(lineq::to_cartesian(r, std::acos(ct), phi));
    }
    return points;
}

}  // namespace oracles
