#pragma once

#include <functional>
#include <span>
#include <vector>

#include "lineq/domain.hpp"
#include "lineq/gauss.hpp"
#include "lineq/surface.hpp"

namespace lineq {

// Tensor-product rule over the layer: Gauss-Legendre in r per ray (mapped to
// [R_gamma, R_Gamma] along each ray), Gauss-Legendre in cos(theta), uniform
// periodic in phi. Node weights absorb r^2 and the per-ray affine stretch, so
// integrate_volume is a plain weighted sum.
struct VolumeGrid {
    int nr = 0, ntheta = 0, nphi = 0;
    std::vector<double> r, theta, phi;
    std::vector<double> px, py, pz;
    std::vector<double> w;
    std::size_t size() const { return w.size(); }
    Vec3 point(std::size_t i) const { return {px[i], py[i], pz[i]}; }
};

// Surface rule over a radial graph; weights absorb R^2 sin(theta) through the
// cos(theta) substitution plus the area ratio, and a frame is attached per node.
struct SurfaceGrid {
    int ntheta = 0, nphi = 0;
    Orientation orientation = Orientation::away_from_origin;
    std::vector<double> w;
    std::vector<SurfaceFrame> frames;
    std::size_t size() const { return w.size(); }
};

VolumeGrid volume_grid(const LayerDomain& domain, int nr, int ntheta, int nphi);
SurfaceGrid surface_grid(const RadialSurface& surface, int ntheta, int nphi,
                         Orientation orientation);

double integrate_volume(const VolumeGrid& grid, std::span<const double> values);
double integrate_volume(const VolumeGrid& grid, const std::function<double(const Vec3&)>& f);

double integrate_surface(const SurfaceGrid& grid, std::span<const double> values);
double integrate_surface(const SurfaceGrid& grid,
                         const std::function<double(const SurfaceFrame&)>& f);

}  // namespace lineq
