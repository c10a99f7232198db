#include "lineq/domain.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

namespace lineq {

namespace {

// Away-oriented unit normal components built from the jet alone:
// n ~ e_r - (R_theta/R) e_th - (R_phi/(R s)) e_ph.
double normal_radial_component(const RadialSurface& surface, double theta, double phi) {
    const SurfaceJet2 jet = surface_jet(surface, theta, phi);
    const double s = std::sin(theta);
    const double rp = jet.R_phi / s;
    return jet.R / std::sqrt(jet.R * jet.R + jet.R_theta * jet.R_theta + rp * rp);
}

Vec3 away_normal(const RadialSurface& surface, double theta, double phi) {
    const SurfaceJet2 jet = surface_jet(surface, theta, phi);
    const auto [e_r, e_th, e_ph] = spherical_basis(theta, phi);
    const double s = std::sin(theta);
    const Vec3 n = jet.R * e_r - jet.R_theta * e_th - (jet.R_phi / s) * e_ph;
    return n.normalized();
}

struct Extremum {
    double value;
    double theta, phi;
};

// Grid scan followed by one guarded Newton step from the best node. The
// refinement uses central finite differences; a step is kept only if it stays
// on the chart and improves the objective.
Extremum scan_extremum(const std::function<double(double, double)>& f, const AngularGrid& grid,
                       bool maximize) {
    const double sign = maximize ? 1.0 : -1.0;
    Extremum best{-std::numeric_limits<double>::infinity(), grid.theta.front(), grid.phi.front()};
    for (double theta : grid.theta) {
        for (double phi : grid.phi) {
            const double v = sign * f(theta, phi);
            if (v > best.value) best = {v, theta, phi};
        }
    }

    const double h = 1e-4;
    auto g = [&](double th, double ph) { return sign * f(th, ph); };
    const double th0 = best.theta, ph0 = best.phi;
    if (th0 > 2.0 * h && th0 < M_PI - 2.0 * h) {
        const double f0 = best.value;
        const double fpt = g(th0 + h, ph0), fmt = g(th0 - h, ph0);
        const double fpp = g(th0, ph0 + h), fmp = g(th0, ph0 - h);
        const double gt = (fpt - fmt) / (2.0 * h);
        const double gp = (fpp - fmp) / (2.0 * h);
        const double htt = (fpt - 2.0 * f0 + fmt) / (h * h);
        const double hpp = (fpp - 2.0 * f0 + fmp) / (h * h);
        const double htp = (g(th0 + h, ph0 + h) - g(th0 + h, ph0 - h) - g(th0 - h, ph0 + h) +
                            g(th0 - h, ph0 - h)) /
                           (4.0 * h * h);
        const double det = htt * hpp - htp * htp;
        const double hscale = std::abs(htt) + std::abs(hpp) + std::abs(htp);
        // Candidate steps: full 2D Newton, then the 1D fallbacks (the 2D
        // system is singular for axisymmetric objectives).
        std::pair<double, double> candidates[3];
        int n_candidates = 0;
        if (hscale > 0.0 && std::abs(det) > 1e-8 * hscale * hscale)
            candidates[n_candidates++] = {-(hpp * gt - htp * gp) / det,
                                          -(htt * gp - htp * gt) / det};
        if (std::abs(htt) > 1e-12) candidates[n_candidates++] = {-gt / htt, 0.0};
        if (std::abs(hpp) > 1e-12) candidates[n_candidates++] = {0.0, -gp / hpp};
        const double step_cap = 4.0 * M_PI / grid.theta.size();
        for (int c = 0; c < n_candidates; ++c) {
            const auto [dth, dph] = candidates[c];
            if (!(std::hypot(dth, dph) < step_cap)) continue;
            // Extrema sitting on a pole make Newton overshoot past theta = 0
            // (or pi) by a cubic remainder; clamp into the chart instead of
            // discarding the step.
            const double th1 = std::clamp(th0 + dth, 1e-5, M_PI - 1e-5);
            const double ph1 = ph0 + dph;
            const double v1 = g(th1, ph1);
            if (std::isfinite(v1) && v1 > best.value) best = {v1, th1, ph1};
        }
    }
    best.value *= sign;
    return best;
}

}  // namespace

RadialBounds radial_bounds(const LayerDomain& domain, const AngularGrid& grid) {
    for (double theta : grid.theta)
        for (double phi : grid.phi) {
            const double gap =
                surface_jet(domain.outer, theta, phi).R - surface_jet(domain.inner, theta, phi).R;
            if (!(gap > 0.0)) fail("layers intersect");
        }
    auto inner_r = [&](double th, double ph) { return surface_jet(domain.inner, th, ph).R; };
    auto outer_r = [&](double th, double ph) { return surface_jet(domain.outer, th, ph).R; };
    auto gap = [&](double th, double ph) { return outer_r(th, ph) - inner_r(th, ph); };
    RadialBounds b;
    b.R1 = scan_extremum(inner_r, grid, false).value;
    b.R2 = scan_extremum(inner_r, grid, true).value;
    b.R3 = scan_extremum(outer_r, grid, true).value;
    b.deltaR = scan_extremum(gap, grid, true).value;
    if (!(b.R1 > 0.0)) fail("inner surface radius not positive");
    return b;
}

double normal_lower_bound(const LayerDomain& domain, const AngularGrid& grid) {
    auto nr_inner = [&](double th, double ph) { return normal_radial_component(domain.inner, th, ph); };
    auto nr_outer = [&](double th, double ph) { return normal_radial_component(domain.outer, th, ph); };
    const double xi1 =
        std::min(scan_extremum(nr_inner, grid, false).value, scan_extremum(nr_outer, grid, false).value);
    if (!(xi1 > 0.0)) fail("surface not star-admissible");
    return xi1;
}

double ray_normal_product(const LayerDomain& domain, const AngularGrid& grid) {
    auto product = [&](double th, double ph) {
        return away_normal(domain.outer, th, ph).dot(away_normal(domain.inner, th, ph));
    };
    const double xi2 = scan_extremum(product, grid, false).value;
    if (!(xi2 > 0.0)) fail("normal product nonpositive");
    return xi2;
}

double curvature_radius(const LayerDomain& domain, const AngularGrid& grid) {
    auto trace_abs = [&](double th, double ph) {
        const SurfaceFrame f = surface_frame(domain.inner, th, ph, Orientation::away_from_origin);
        return std::abs(curvature_sum(f));
    };
    const double max_trace = scan_extremum(trace_abs, grid, true).value;
    if (max_trace < 1e-14) fail("flat inner surface");
    return 2.0 / max_trace;
}

GeometryReport geometry_report(const LayerDomain& domain, const AngularGrid& grid,
                               double semidefinite_tol) {
    const RadialBounds b = radial_bounds(domain, grid);
    GeometryReport rep;
    rep.R1 = b.R1;
    rep.R2 = b.R2;
    rep.R3 = b.R3;
    rep.deltaR = b.deltaR;
    rep.xi1 = normal_lower_bound(domain, grid);
    rep.xi2 = ray_normal_product(domain, grid);
    rep.R_curv = curvature_radius(domain, grid);

    bool convex = true;
    for (double theta : grid.theta) {
        for (double phi : grid.phi) {
            const SurfaceFrame f = surface_frame(domain.outer, theta, phi, Orientation::away_from_origin);
            if (!hessian_negative_semidefinite(f, semidefinite_tol)) {
                convex = false;
                break;
            }
        }
        if (!convex) break;
    }
    rep.convex_outer = convex;

    rep.admissibility_fraction =
        2.0 * rep.R2 * rep.R2 * rep.deltaR / (rep.xi1 * rep.xi2 * rep.xi2 * rep.R1 * rep.R1 * rep.R_curv);
    rep.admissible = rep.admissibility_fraction < 1.0;
    rep.C1 = 3.0 * std::pow(rep.deltaR * rep.R3 / (rep.xi2 * rep.R1), 2);
    rep.C2 = 1.0 - rep.admissibility_fraction;
    rep.C3 = rep.R2 * rep.R2 * rep.deltaR / (rep.R1 * rep.R1 * rep.xi1 * rep.xi2 * rep.xi2);
    rep.C4 = rep.deltaR * rep.R3 * rep.R3 / (rep.R1 * rep.R1 * rep.xi1 * rep.xi2 * rep.xi2);
    rep.extrema_ntheta = static_cast<int>(grid.theta.size());
    rep.extrema_nphi = static_cast<int>(grid.phi.size());
    return rep;
}

}  // namespace lineq
