#pragma once

#include <utility>
#include <vector>

namespace lineq {

// Gauss-Legendre nodes and weights on [-1, 1], nodes ascending.
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

GaussRule gauss_legendre(int n);

// Pole-free angular sampling: theta from Gauss nodes in cos(theta) (never +-1),
// phi uniform on [0, 2 pi).
struct AngularGrid {
    std::vector<double> theta;
    std::vector<double> theta_weight;  // Gauss weights in x = cos(theta)
    std::vector<double> phi;
    double phi_weight;  // 2 pi / n_phi
};

AngularGrid angular_grid(int n_theta, int n_phi);

}  // namespace lineq
