#pragma once

#include <vector>

namespace lineq {

// Real surface harmonics in the unnormalized convention fixed by
//   S_00 = 1, S_10 = cos(th), S_11 = sin(th) cos(ph), S_1,-1 = sin(th) sin(ph),
//   S_20 = (3 cos^2(th) - 1)/2, S_21 = 3 sin(th) cos(th) cos(ph),
//   S_22 = 3 sin^2(th) cos(2 ph), and the sin-phi counterparts for m < 0.
// Equivalently S_lm = P_l^|m|(cos th) * {cos(m ph) for m >= 0, sin(|m| ph) for m < 0}
// with associated Legendre functions P_l^m without the Condon-Shortley phase.
//
// Writing P_l^m(x) = (1-x^2)^{m/2} Q_lm(x) with Q_lm the m-th derivative of the
// Legendre polynomial keeps every theta-derivative a trig polynomial, so the
// evaluation below is smooth through the poles.

struct HarmonicJet {
    double value;
    double d_theta, d_phi;
    double d_theta2, d_theta_phi, d_phi2;
};

inline constexpr int kMaxHarmonicDegree = 12;

// S_lm and its angular derivatives to second order. Requires 0 <= |m| <= l <= 12.
HarmonicJet surface_harmonic_jet(int l, int m, double theta, double phi);

// Legendre polynomial coefficients of P_l (index = power of x). Exposed for tests.
std::vector<double> legendre_coefficients(int l);

}  // namespace lineq
