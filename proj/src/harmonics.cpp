#include "lineq/harmonics.hpp"

#include <cmath>
#include <stdexcept>

#include "lineq/types.hpp"

namespace lineq {

namespace {

std::vector<double> differentiate(const std::vector<double>& c) {
    if (c.size() <= 1) return {0.0};
    std::vector<double> d(c.size() - 1);
    for (std::size_t k = 1; k < c.size(); ++k) d[k - 1] = static_cast<double>(k) * c[k];
    return d;
}

double horner(const std::vector<double>& c, double x) {
    double v = 0.0;
    for (std::size_t k = c.size(); k-- > 0;) v = v * x + c[k];
    return v;
}

}  // namespace

std::vector<double> legendre_coefficients(int l) {
    // (l+1) P_{l+1} = (2l+1) x P_l - l P_{l-1}
    std::vector<double> prev{1.0};
    if (l == 0) return prev;
    std::vector<double> cur{0.0, 1.0};
    for (int n = 1; n < l; ++n) {
        std::vector<double> next(n + 2, 0.0);
        for (int k = 0; k <= n; ++k) next[k + 1] += (2.0 * n + 1.0) * cur[k] / (n + 1.0);
        for (int k = 0; k < n; ++k) next[k] -= static_cast<double>(n) * prev[k] / (n + 1.0);
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

HarmonicJet surface_harmonic_jet(int l, int m, double theta, double phi) {
    const int mu = std::abs(m);
    if (l < 0 || l > kMaxHarmonicDegree || mu > l)
        fail("surface harmonic degree/order out of range");

    std::vector<double> q = legendre_coefficients(l);
    for (int k = 0; k < mu; ++k) q = differentiate(q);
    const std::vector<double> q1 = differentiate(q);
    const std::vector<double> q2 = differentiate(q1);

    const double c = std::cos(theta), s = std::sin(theta);
    const double Q = horner(q, c), Qp = horner(q1, c), Qpp = horner(q2, c);

    // F(theta) = Q(cos th) sin^mu(th)
    const double s_m = std::pow(s, mu);
    const double s_m1 = (mu >= 1) ? std::pow(s, mu - 1) : 0.0;
    const double s_m2 = (mu >= 2) ? std::pow(s, mu - 2) : 0.0;
    const double F = Q * s_m;
    const double F1 = -Qp * std::pow(s, mu + 1) + mu * c * Q * s_m1;
    const double F2 = Qpp * std::pow(s, mu + 2) - (2.0 * mu + 1.0) * c * s_m * Qp -
                      mu * s_m * Q + mu * (mu - 1.0) * c * c * s_m2 * Q;

    const double T = (m >= 0) ? std::cos(m * phi) : std::sin(mu * phi);
    const double T1 = (m >= 0) ? -m * std::sin(m * phi) : mu * std::cos(mu * phi);
    const double T2 = -static_cast<double>(mu) * mu * T;

    return {F * T, F1 * T, F * T1, F2 * T, F1 * T1, F * T2};
}

}  // namespace lineq
