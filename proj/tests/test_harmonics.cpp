#include <doctest.h>

#include <cmath>

#include "lineq/harmonics.hpp"

using lineq::surface_harmonic_jet;

namespace {
const double kThetas[] = {0.3, 1.1, M_PI / 2, 2.2, 2.9};
const double kPhis[] = {0.0, 0.7, 2.5, 4.0, 5.9};
}  // namespace

TEST_CASE("harmonic table matches the fixed low-degree convention") {
    for (double th : kThetas) {
        for (double ph : kPhis) {
            const double s = std::sin(th), c = std::cos(th);
            CHECK(surface_harmonic_jet(0, 0, th, ph).value == doctest::Approx(1.0).epsilon(1e-14));
            CHECK(surface_harmonic_jet(1, 0, th, ph).value == doctest::Approx(c).epsilon(1e-14));
            CHECK(surface_harmonic_jet(1, 1, th, ph).value ==
                  doctest::Approx(s * std::cos(ph)).epsilon(1e-14));
            CHECK(surface_harmonic_jet(1, -1, th, ph).value ==
                  doctest::Approx(s * std::sin(ph)).epsilon(1e-14));
            CHECK(surface_harmonic_jet(2, 0, th, ph).value ==
                  doctest::Approx(0.5 * (3.0 * c * c - 1.0)).epsilon(1e-14));
            CHECK(surface_harmonic_jet(2, 1, th, ph).value ==
                  doctest::Approx(3.0 * s * c * std::cos(ph)).epsilon(1e-14));
            CHECK(surface_harmonic_jet(2, 2, th, ph).value ==
                  doctest::Approx(3.0 * s * s * std::cos(2.0 * ph)).epsilon(1e-13));
            CHECK(surface_harmonic_jet(2, -2, th, ph).value ==
                  doctest::Approx(3.0 * s * s * std::sin(2.0 * ph)).epsilon(1e-13));
        }
    }
}

TEST_CASE("harmonic derivatives agree with finite differences") {
    const double h = 1e-5;
    const int cases[][2] = {{1, 1}, {2, 0}, {2, 2}, {3, 1}, {4, 3}, {5, -2}, {6, 0}};
    for (const auto& lm : cases) {
        const int l = lm[0], m = lm[1];
        for (double th : {0.4, 1.3, 2.6}) {
            for (double ph : {0.3, 1.9, 4.4}) {
                auto S = [&](double t, double p) { return surface_harmonic_jet(l, m, t, p).value; };
                const auto jet = surface_harmonic_jet(l, m, th, ph);
                const double dth = (S(th + h, ph) - S(th - h, ph)) / (2.0 * h);
                const double dph = (S(th, ph + h) - S(th, ph - h)) / (2.0 * h);
                const double dth2 = (S(th + h, ph) - 2.0 * jet.value + S(th - h, ph)) / (h * h);
                const double dph2 = (S(th, ph + h) - 2.0 * jet.value + S(th, ph - h)) / (h * h);
                const double dthph = (S(th + h, ph + h) - S(th + h, ph - h) - S(th - h, ph + h) +
                                      S(th - h, ph - h)) /
                                     (4.0 * h * h);
                CHECK(jet.d_theta == doctest::Approx(dth).epsilon(1e-7));
                CHECK(jet.d_phi == doctest::Approx(dph).epsilon(1e-7));
                CHECK(jet.d_theta2 == doctest::Approx(dth2).epsilon(5e-5).scale(1.0));
                CHECK(jet.d_phi2 == doctest::Approx(dph2).epsilon(5e-5).scale(1.0));
                CHECK(jet.d_theta_phi == doctest::Approx(dthph).epsilon(5e-5).scale(1.0));
            }
        }
    }
}

TEST_CASE("harmonics stay finite and correct at the poles") {
    CHECK(surface_harmonic_jet(2, 0, 0.0, 1.0).value == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(surface_harmonic_jet(2, 0, M_PI, 1.0).value == doctest::Approx(1.0).epsilon(1e-14));
    // S_11 = sin(th) cos(ph): theta-derivative at the pole is cos(ph).
    CHECK(surface_harmonic_jet(1, 1, 0.0, 0.5).d_theta ==
          doctest::Approx(std::cos(0.5)).epsilon(1e-14));
    for (int l = 0; l <= 6; ++l)
        for (int m = -l; m <= l; ++m) {
            const auto jet = surface_harmonic_jet(l, m, 0.0, 2.0);
            CHECK(std::isfinite(jet.value));
            CHECK(std::isfinite(jet.d_theta2));
        }
}

TEST_CASE("legendre coefficients") {
    const auto p4 = lineq::legendre_coefficients(4);  // (35 x^4 - 30 x^2 + 3) / 8
    REQUIRE(p4.size() == 5);
    CHECK(p4[0] == doctest::Approx(3.0 / 8.0).epsilon(1e-15));
    CHECK(p4[2] == doctest::Approx(-30.0 / 8.0).epsilon(1e-15));
    CHECK(p4[4] == doctest::Approx(35.0 / 8.0).epsilon(1e-15));
    CHECK(p4[1] == 0.0);
    CHECK(p4[3] == 0.0);
}

TEST_CASE("degree/order bounds are enforced") {
    CHECK_THROWS(surface_harmonic_jet(13, 0, 1.0, 1.0));
    CHECK_THROWS(surface_harmonic_jet(2, 3, 1.0, 1.0));
}
