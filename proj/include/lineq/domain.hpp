#pragma once

#include "lineq/gauss.hpp"
#include "lineq/surface.hpp"

namespace lineq {

// Spherical layer bounded by the inner surface (gamma) and the outer (Gamma).
struct LayerDomain {
    RadialSurface inner;
    RadialSurface outer;
};

struct RadialBounds {
    double R1;       // min over gamma
    double R2;       // max over gamma
    double R3;       // max over Gamma
    double deltaR;   // max of the radial gap
};

// Scalar descriptors, admissibility checks and the constants C1..C4 of a layer.
struct GeometryReport {
    double R1, R2, R3, deltaR;
    double xi1, xi2;
    double R_curv;
    bool convex_outer;
    double admissibility_fraction;
    bool admissible;
    double C1, C2, C3, C4;
    int extrema_ntheta, extrema_nphi;
};

RadialBounds radial_bounds(const LayerDomain& domain, const AngularGrid& grid);

// xi1: lower bound of the radial component of the away-oriented unit normals of
// both surfaces over the grid.
double normal_lower_bound(const LayerDomain& domain, const AngularGrid& grid);

// xi2: lower bound of the scalar product of the two away-oriented unit normals
// evaluated on a common ray.
double ray_normal_product(const LayerDomain& domain, const AngularGrid& grid);

// 2 / max over the inner surface of |hxx + hyy|, away-oriented frames.
double curvature_radius(const LayerDomain& domain, const AngularGrid& grid);

GeometryReport geometry_report(const LayerDomain& domain, const AngularGrid& grid,
                               double semidefinite_tol = 1e-9);

}  // namespace lineq
