#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lineq/fields.hpp"
#include "lineq/quadrature.hpp"

namespace lineq {

// Boundary grids in the orientation used by the boundary integrand: outward
// from the layer on both pieces, i.e. away_from_origin on the outer surface
// and toward_origin on the inner one.
struct BoundaryGrids {
    SurfaceGrid inner;  // gamma, frames toward_origin
    SurfaceGrid outer;  // Gamma, frames away_from_origin
};

BoundaryGrids boundary_grids(const LayerDomain& domain, int ntheta, int nphi);

// The five norm integrals the inequalities relate plus the two boundary terms
// of the integral identity.
struct IntegralBundle {
    double vol_P2 = 0.0;
    double vol_grad2 = 0.0;
    double vol_divrot2 = 0.0;
    double surf_gamma_P2 = 0.0;
    double surf_Gamma_P2 = 0.0;
    double bnd_Gamma = 0.0;
    double bnd_gamma = 0.0;
};

// Integrand of the boundary terms. In the local frame of the surface point it
// reads
//   -(hxx+hyy) Pz^2 - hxx Px^2 - 2 hxy Px Py - hyy Py^2
//   + (dPx/dx + dPy/dy) Pz - (dPz/dx) Px - (dPz/dy) Py,
// with the x/y derivatives taken along the surface (they carry the Weingarten
// correction for the turning frame). That expression collapses algebraically
// to (div P)(P.n) - n.(J P), which is how it is evaluated here; the test suite
// checks the two routes against each other.
double boundary_integrand(const Vec3& value, const Mat3& jacobian, const SurfaceFrame& frame);
double boundary_integrand(const VectorField& field, const SurfaceFrame& frame);

IntegralBundle integral_bundle(const VectorField& field, const VolumeGrid& vol,
                               const BoundaryGrids& bnd);

struct InequalityRecord {
    std::string name;      // "l2", "divrot", "inner_trace", "outer_trace"
    double lhs = 0.0;      // side that must not exceed rhs
    double rhs = 0.0;
    double ratio = 0.0;    // lhs / rhs, 0 when both vanish
    double constant = 0.0; // the C_k used
    bool pass = false;
    double margin = 0.0;   // 1 - ratio
    bool applicable = true;
};

struct VerificationReport {
    std::string field_name;
    bool applicable = true;      // boundary conditions hold to tolerance
    double bc_residual = 0.0;    // max boundary-condition residual, relative to field scale
    bool inconsistent = false;   // zero gradient norm with nonzero L2 norm
    IntegralBundle bundle;
    std::vector<InequalityRecord> records;
    double identity_residual = 0.0;
};

// Relative boundary-condition residual of the field: max over the sampling
// grids of |P.n| on the outer surface and of the tangential norm on the inner
// one, divided by the max sampled |P|. Zero fields report zero.
double bc_residual(const VectorField& field, const BoundaryGrids& bnd);

// The four inequality records: the L2 bound (C1), the div/rot lower bound
// (C2), and the two boundary-trace bounds (C3 inner, C4 outer). Records are not
// applicable when the field misses the boundary conditions; the divrot record is
// additionally suppressed when the domain is not admissible. The compliance
// residual is sampled on `bc_grids` when given, otherwise on `bnd`.
VerificationReport verify_inequalities(const VectorField& field, const GeometryReport& geometry,
                                       const VolumeGrid& vol, const BoundaryGrids& bnd,
                                       double rtol = 1e-9, double bc_threshold = 1e-8,
                                       const BoundaryGrids* bc_grids = nullptr);

// Relative residual of the integral identity
//   vol_divrot2 = vol_grad2 + bnd_Gamma + bnd_gamma,
// meaningful for any smooth field, boundary conditions not required.
double verify_identity(const VectorField& field, const VolumeGrid& vol, const BoundaryGrids& bnd);
double identity_residual(const IntegralBundle& bundle);

}  // namespace lineq
