#include "lineq/gauss.hpp"

#include <cmath>

#include "lineq/types.hpp"

namespace lineq {

GaussRule gauss_legendre(int n) {
    if (n < 1) fail("gauss rule needs at least one node");
    GaussRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        // Newton iteration on P_n from the Chebyshev-like initial guess.
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            if (n == 1) p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            const double pn = (n == 1) ? x : p1;
            const double pm = (n == 1) ? 1.0 : p0;
            pp = n * (x * pn - pm) / (x * x - 1.0);
            const double dx = pn / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        rule.nodes[i] = -x;
        rule.nodes[n - 1 - i] = x;
        const double w = 2.0 / ((1.0 - x * x) * pp * pp);
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    return rule;
}

AngularGrid angular_grid(int n_theta, int n_phi) {
    if (n_theta < 2 || n_phi < 4) fail("angular grid too coarse");
    AngularGrid grid;
    const GaussRule rule = gauss_legendre(n_theta);
    grid.theta.resize(n_theta);
    grid.theta_weight.resize(n_theta);
    // Descending in cos(theta) so theta is ascending from the north pole.
    for (int i = 0; i < n_theta; ++i) {
        grid.theta[i] = std::acos(rule.nodes[n_theta - 1 - i]);
        grid.theta_weight[i] = rule.weights[n_theta - 1 - i];
    }
    grid.phi.resize(n_phi);
    for (int j = 0; j < n_phi; ++j) grid.phi[j] = 2.0 * M_PI * j / n_phi;
    grid.phi_weight = 2.0 * M_PI / n_phi;
    return grid;
}

}  // namespace lineq
