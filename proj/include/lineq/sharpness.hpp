#pragma once

#include <string>
#include <vector>

#include "lineq/domain.hpp"
#include "lineq/fields.hpp"
#include "lineq/quadrature.hpp"

namespace lineq {

// A finite subspace of boundary-condition-compliant fields. Rayleigh-quotient
// extrema over the span bound the sharp constants one-sidedly: the subspace
// max of int|P|^2 / int|grad P|^2 sits below C1, the subspace min of
// int((rot P)^2 + (div P)^2) / int|grad P|^2 above C2.
struct Subspace {
    std::vector<VectorField> basis;
    std::string label;
};

struct GramMatrices {
    Eigen::MatrixXd A;  // int P_i . P_j
    Eigen::MatrixXd G;  // int grad P_i : grad P_j
    Eigen::MatrixXd D;  // int (div P_i div P_j + rot P_i . rot P_j)
};

GramMatrices assemble_gram(const std::vector<VectorField>& basis, const VolumeGrid& vol);

struct QuotientExtremes {
    double quotient_max = 0.0;  // max eigenvalue of A v = lambda G v
    double quotient_min = 0.0;  // min eigenvalue of D v = mu G v
    double gram_condition = 0.0;
    int deflated = 0;  // basis directions dropped as numerically null in G
};

// Deflates the numerically null space of G (relative threshold), then solves
// the two generalized symmetric eigenproblems on the complement.
QuotientExtremes extremal_quotients(const GramMatrices& gram, double deflation_threshold = 1e-10);

struct SharpnessRow {
    int n = 0;
    double quotient_max = 0.0;
    double quotient_min = 0.0;
    double gram_condition = 0.0;
    int deflated = 0;
    bool c1_pass = false;
    bool c2_pass = false;
    bool c2_checked = false;  // false when the domain is not admissible
};

struct SharpnessResult {
    std::vector<SharpnessRow> rows;
    bool nested = false;
    bool monotone = true;     // meaningful only when nested
    bool bounds_pass = true;  // every checked row respects C1/C2 with the slack
};

SharpnessResult sharpness_sweep(const std::vector<Subspace>& subspaces, const VolumeGrid& vol,
                                const GeometryReport& geometry, bool nested, double eps = 1e-6,
                                double deflation_threshold = 1e-10);

// Default sweep family: nested blends (1-t)^p r^k n_gamma for k = 0..n-1,
// optionally extended with four tangential generators built from
// V in {e_x, e_y, e_z, (-y, x, 0)}.
std::vector<Subspace> radial_sweep_subspaces(const LayerDomain& domain, int n_max, int p,
                                             bool include_tangential);

}  // namespace lineq
