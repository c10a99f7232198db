#include "lineq/quadrature.hpp"

#include <cmath>
#include <sstream>

#include "lineq/kernels.hpp"

namespace lineq {

VolumeGrid volume_grid(const LayerDomain& domain, int nr, int ntheta, int nphi) {
    if (nr < 2 || ntheta < 2 || nphi < 4) fail("volume grid too coarse");
    const GaussRule radial = gauss_legendre(nr);
    const AngularGrid ang = angular_grid(ntheta, nphi);

    VolumeGrid grid;
    grid.nr = nr;
    grid.ntheta = ntheta;
    grid.nphi = nphi;
    const std::size_t total = static_cast<std::size_t>(nr) * ntheta * nphi;
    grid.r.reserve(total);
    grid.theta.reserve(total);
    grid.phi.reserve(total);
    grid.px.reserve(total);
    grid.py.reserve(total);
    grid.pz.reserve(total);
    grid.w.reserve(total);

    for (int it = 0; it < ntheta; ++it) {
        const double theta = ang.theta[it];
        const double wt = ang.theta_weight[it];
        for (int ip = 0; ip < nphi; ++ip) {
            const double phi = ang.phi[ip];
            const double r_in = surface_jet(domain.inner, theta, phi).R;
            const double r_out = surface_jet(domain.outer, theta, phi).R;
            const double half_gap = 0.5 * (r_out - r_in);
            if (!(half_gap > 0.0)) fail("layers intersect");
            const double mid = 0.5 * (r_out + r_in);
            for (int ir = 0; ir < nr; ++ir) {
                const double r = mid + half_gap * radial.nodes[ir];
                grid.r.push_back(r);
                grid.theta.push_back(theta);
                grid.phi.push_back(phi);
                const Vec3 p = to_cartesian(r, theta, phi);
                grid.px.push_back(p.x());
                grid.py.push_back(p.y());
                grid.pz.push_back(p.z());
                grid.w.push_back(ang.phi_weight * wt * half_gap * radial.weights[ir] * r * r);
            }
        }
    }
    return grid;
}

SurfaceGrid surface_grid(const RadialSurface& surface, int ntheta, int nphi,
                         Orientation orientation) {
    if (ntheta < 2 || nphi < 4) fail("surface grid too coarse");
    const AngularGrid ang = angular_grid(ntheta, nphi);
    SurfaceGrid grid;
    grid.ntheta = ntheta;
    grid.nphi = nphi;
    grid.orientation = orientation;
    grid.w.reserve(static_cast<std::size_t>(ntheta) * nphi);
    grid.frames.reserve(static_cast<std::size_t>(ntheta) * nphi);
    for (int it = 0; it < ntheta; ++it) {
        const double theta = ang.theta[it];
        for (int ip = 0; ip < nphi; ++ip) {
            const double phi = ang.phi[ip];
            SurfaceFrame frame = surface_frame(surface, theta, phi, orientation);
            const double R = frame.point.norm();
            grid.w.push_back(ang.phi_weight * ang.theta_weight[it] * R * R * frame.area_ratio);
            grid.frames.push_back(std::move(frame));
        }
    }
    return grid;
}

namespace {

[[noreturn]] void fail_nonfinite(const char* where, std::size_t index, const Vec3& p) {
    std::ostringstream os;
    os << "non-finite integrand in " << where << " at node " << index << " (" << p.x() << ", "
       << p.y() << ", " << p.z() << ")";
    fail(os.str());
}

}  // namespace

double integrate_volume(const VolumeGrid& grid, std::span<const double> values) {
    if (values.size() != grid.size()) fail("value buffer size mismatch");
    for (std::size_t i = 0; i < values.size(); ++i)
        if (!std::isfinite(values[i])) fail_nonfinite("volume integral", i, grid.point(i));
    return kernels::weighted_sum(grid.w.data(), values.data(), values.size());
}

double integrate_volume(const VolumeGrid& grid, const std::function<double(const Vec3&)>& f) {
    std::vector<double> values(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) values[i] = f(grid.point(i));
    return integrate_volume(grid, values);
}

double integrate_surface(const SurfaceGrid& grid, std::span<const double> values) {
    if (values.size() != grid.size()) fail("value buffer size mismatch");
    for (std::size_t i = 0; i < values.size(); ++i)
        if (!std::isfinite(values[i])) fail_nonfinite("surface integral", i, grid.frames[i].point);
    return kernels::weighted_sum(grid.w.data(), values.data(), values.size());
}

double integrate_surface(const SurfaceGrid& grid,
                         const std::function<double(const SurfaceFrame&)>& f) {
    std::vector<double> values(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) values[i] = f(grid.frames[i]);
    return integrate_surface(grid, values);
}

}  // namespace lineq
