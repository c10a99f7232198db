#include "lineq/surface.hpp"

#include <cmath>
#include <sstream>

namespace lineq {

RadialSurface::RadialSurface(double r0, std::vector<HarmonicTerm> terms)
    : r0_(r0), terms_(std::move(terms)) {
    if (!(r0 > 0.0)) fail("surface base radius must be positive");
    double sum_amp = 0.0;
    for (const auto& t : terms_) {
        if (t.l < 0 || t.l > kMaxHarmonicDegree || std::abs(t.m) > t.l)
            fail("surface harmonic degree/order out of range");
        sum_amp += std::abs(t.amplitude);
    }
    if (sum_amp >= 0.25 * r0) fail("harmonic perturbation too large: sum |amplitude| must stay below r0/4");
}

RadialSurface RadialSurface::sphere(double r0) { return RadialSurface(r0, {}); }

RadialSurface RadialSurface::harmonic(double r0, std::vector<HarmonicTerm> terms) {
    return RadialSurface(r0, std::move(terms));
}

std::string RadialSurface::describe() const {
    std::ostringstream os;
    if (is_sphere()) {
        os << "sphere(r0=" << r0_ << ")";
    } else {
        os << "harmonic(r0=" << r0_;
        for (const auto& t : terms_) os << ", (" << t.l << "," << t.m << "," << t.amplitude << ")";
        os << ")";
    }
    return os.str();
}

SurfaceJet2 surface_jet(const RadialSurface& surface, double theta, double phi) {
    SurfaceJet2 jet{surface.r0(), 0.0, 0.0, 0.0, 0.0, 0.0};
    for (const auto& t : surface.terms()) {
        const HarmonicJet h = surface_harmonic_jet(t.l, t.m, theta, phi);
        jet.R += t.amplitude * h.value;
        jet.R_theta += t.amplitude * h.d_theta;
        jet.R_phi += t.amplitude * h.d_phi;
        jet.R_theta2 += t.amplitude * h.d_theta2;
        jet.R_theta_phi += t.amplitude * h.d_theta_phi;
        jet.R_phi2 += t.amplitude * h.d_phi2;
    }
    return jet;
}

SurfaceFrame surface_frame(const RadialSurface& surface, double theta, double phi,
                           Orientation orientation) {
    const SurfaceJet2 jet = surface_jet(surface, theta, phi);
    const auto [e_r, e_th, e_ph] = spherical_basis(theta, phi);
    const double R = jet.R, s = std::sin(theta), c = std::cos(theta);

    const Vec3 point = R * e_r;
    const Vec3 x_th = jet.R_theta * e_r + R * e_th;
    const Vec3 x_ph = jet.R_phi * e_r + R * s * e_ph;

    // x_th cross x_ph = R^2 s e_r - R R_theta s e_th - R R_phi e_ph, which points
    // away from the origin for 0 < theta < pi.
    const Vec3 big_n = x_th.cross(x_ph);
    const double big_n_norm = big_n.norm();
    if (!(big_n_norm >= 1e-14) || !std::isfinite(big_n_norm)) fail("degenerate surface jet");

    Vec3 normal = big_n / big_n_norm;
    if (orientation == Orientation::toward_origin) normal = -normal;

    const Vec3 tangent1 = x_th.normalized();
    const Vec3 tangent2 = normal.cross(tangent1);

    // Second derivatives of the position X = R(theta, phi) e_r.
    const Vec3 x_thth = (jet.R_theta2 - R) * e_r + 2.0 * jet.R_theta * e_th;
    const Vec3 x_thph =
        jet.R_theta_phi * e_r + jet.R_phi * e_th + (jet.R_theta * s + R * c) * e_ph;
    const Vec3 x_phph = (jet.R_phi2 - R * s * s) * e_r - R * s * c * e_th + 2.0 * jet.R_phi * s * e_ph;

    // Second fundamental form w.r.t. the oriented normal, in the parameter basis.
    const double L = x_thth.dot(normal);
    const double M = x_thph.dot(normal);
    const double N2 = x_phph.dot(normal);

    // First fundamental form and the parameter coordinates of the tangent frame.
    const double E = x_th.dot(x_th);
    const double F = x_th.dot(x_ph);
    const double G = x_ph.dot(x_ph);
    const double det = E * G - F * F;  // = |big_n|^2 > 0 here
    auto param_coords = [&](const Vec3& t) {
        const double a = t.dot(x_th), b = t.dot(x_ph);
        return std::pair<double, double>{(G * a - F * b) / det, (E * b - F * a) / det};
    };
    const auto [a1, b1] = param_coords(tangent1);
    const auto [a2, b2] = param_coords(tangent2);

    SurfaceFrame frame;
    frame.point = point;
    frame.normal = normal;
    frame.tangent1 = tangent1;
    frame.tangent2 = tangent2;
    frame.orientation = orientation;
    frame.hxx = a1 * a1 * L + 2.0 * a1 * b1 * M + b1 * b1 * N2;
    frame.hxy = a1 * a2 * L + (a1 * b2 + a2 * b1) * M + b1 * b2 * N2;
    frame.hyy = a2 * a2 * L + 2.0 * a2 * b2 * M + b2 * b2 * N2;
    frame.area_ratio = big_n_norm / (R * R * s);
    frame.theta = theta;
    frame.phi = phi;
    return frame;
}

bool hessian_negative_semidefinite(const SurfaceFrame& frame, double tol) {
    return frame.hxx <= tol && frame.hyy <= tol &&
           frame.hxy * frame.hxy <= frame.hxx * frame.hyy + tol * tol;
}

}  // namespace lineq
