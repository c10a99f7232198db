#include <doctest.h>

#include <cmath>

#include "lineq/sharpness.hpp"
#include "oracles.hpp"

using namespace lineq;

namespace {
const LayerDomain kSpheres{RadialSurface::sphere(1.0), RadialSurface::sphere(1.4)};
const VolumeGrid kVol = volume_grid(kSpheres, 16, 24, 48);
const GeometryReport kGeometry = geometry_report(kSpheres, angular_grid(128, 256));
}  // namespace

TEST_CASE("one-dimensional gram matrices match the radial oracle") {
    // g(r) = 1.4 - r is exactly compliant on concentric spheres.
    const std::vector<VectorField> basis = {make_radial_field({1.4, -1.0})};
    const GramMatrices gram = assemble_gram(basis, kVol);
    const auto oracle = oracles::radial_bundle_oracle(
        [](double r) { return 1.4 - r; }, [](double) { return -1.0; }, 1.0, 1.4);
    CHECK(gram.A(0, 0) == doctest::Approx(oracle.vol_P2).epsilon(1e-10));
    CHECK(gram.G(0, 0) == doctest::Approx(oracle.vol_grad2).epsilon(1e-10));
    CHECK(gram.D(0, 0) == doctest::Approx(oracle.vol_divrot2).epsilon(1e-10));

    const QuotientExtremes q = extremal_quotients(gram);
    CHECK(q.quotient_max == doctest::Approx(oracle.vol_P2 / oracle.vol_grad2).epsilon(1e-10));
    CHECK(q.quotient_min == doctest::Approx(oracle.vol_divrot2 / oracle.vol_grad2).epsilon(1e-10));
    CHECK(q.quotient_max <= kGeometry.C1);
    CHECK(q.quotient_min >= kGeometry.C2);
}

TEST_CASE("fields in disjoint phi sectors assemble orthogonally") {
    auto window = [](double center) {
        return ScalarField{[center](const Vec3& p) {
                               const double phi = std::atan2(p.y(), p.x());
                               const double c = std::cos(phi - center);
                               return c > 0.5 ? std::pow(c - 0.5, 4) : 0.0;
                           },
                           "window"};
    };
    const std::vector<VectorField> basis = {
        bc_blend_field(kSpheres, window(0.0), make_constant_field(Vec3::Zero()), 2),
        bc_blend_field(kSpheres, window(M_PI), make_constant_field(Vec3::Zero()), 2)};
    const GramMatrices gram = assemble_gram(basis, kVol);
    CHECK(gram.A(0, 1) == 0.0);
    CHECK(gram.G(0, 1) == 0.0);
    CHECK(gram.D(0, 1) == 0.0);
    CHECK(gram.A(0, 0) > 0.0);
    CHECK(gram.A(1, 1) > 0.0);
}

TEST_CASE("synthetic matrices: proportional forms give the exact quotients") {
    GramMatrices gram;
    Eigen::MatrixXd g(3, 3);
    g << 4.0, 1.0, 0.5, 1.0, 3.0, 0.2, 0.5, 0.2, 2.0;
    gram.G = g;
    gram.A = g;            // identical forms: max quotient is exactly 1
    gram.D = 0.37 * g;     // proportional forms: min quotient is the factor
    const QuotientExtremes q = extremal_quotients(gram);
    CHECK(q.quotient_max == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(q.quotient_min == doctest::Approx(0.37).epsilon(1e-12));
    CHECK(q.deflated == 0);
}

TEST_CASE("duplicate generators are deflated away") {
    const VectorField f = make_radial_field({1.4, -1.0});
    const GramMatrices gram = assemble_gram({f, f}, kVol);
    const QuotientExtremes q = extremal_quotients(gram);
    CHECK(q.deflated == 1);
    const GramMatrices single = assemble_gram({f}, kVol);
    const QuotientExtremes q1 = extremal_quotients(single);
    CHECK(q.quotient_max == doctest::Approx(q1.quotient_max).epsilon(1e-10));
    CHECK(q.quotient_min == doctest::Approx(q1.quotient_min).epsilon(1e-10));
}

TEST_CASE("degenerate subspaces are rejected") {
    GramMatrices gram;
    gram.A = Eigen::MatrixXd::Identity(2, 2);
    gram.G = Eigen::MatrixXd::Zero(2, 2);
    gram.D = Eigen::MatrixXd::Identity(2, 2);
    CHECK_THROWS_WITH(extremal_quotients(gram), doctest::Contains("degenerate subspace"));
}

TEST_CASE("radial sweep: monotone columns within the proved bounds") {
    const auto spaces = radial_sweep_subspaces(kSpheres, 6, 2, false);
    REQUIRE(spaces.size() == 6);
    const SharpnessResult sweep = sharpness_sweep(spaces, kVol, kGeometry, true);
    CHECK(sweep.monotone);
    CHECK(sweep.bounds_pass);
    for (std::size_t i = 1; i < sweep.rows.size(); ++i) {
        CHECK(sweep.rows[i].quotient_max >= sweep.rows[i - 1].quotient_max - 1e-12);
        CHECK(sweep.rows[i].quotient_min <= sweep.rows[i - 1].quotient_min + 1e-12);
    }
    for (const auto& row : sweep.rows) {
        CHECK(row.quotient_max <= kGeometry.C1 + 1e-6);
        CHECK(row.quotient_min >= kGeometry.C2 - 1e-6);
    }
}

TEST_CASE("tangential generators extend the sweep and keep the bounds") {
    const auto spaces = radial_sweep_subspaces(kSpheres, 3, 2, true);
    REQUIRE(spaces.size() == 4);
    REQUIRE(spaces.back().basis.size() == 7);
    const SharpnessResult sweep = sharpness_sweep(spaces, kVol, kGeometry, true);
    CHECK(sweep.monotone);
    CHECK(sweep.bounds_pass);
}

TEST_CASE("non-nested sweeps skip the monotonicity check but keep the bounds") {
    auto spaces = radial_sweep_subspaces(kSpheres, 3, 2, false);
    std::swap(spaces[0], spaces[2]);  // deliberately out of order
    const SharpnessResult sweep = sharpness_sweep(spaces, kVol, kGeometry, /*nested=*/false);
    CHECK(sweep.monotone);  // vacuous when not nested
    CHECK(sweep.bounds_pass);
    CHECK_FALSE(sweep.nested);
}

TEST_CASE("inadmissible domains skip the C2 comparison but keep C1") {
    const LayerDomain wide{RadialSurface::sphere(1.0), RadialSurface::sphere(1.5)};
    const GeometryReport geo = geometry_report(wide, angular_grid(64, 128));
    REQUIRE_FALSE(geo.admissible);
    const VolumeGrid vol = volume_grid(wide, 8, 12, 24);
    const auto spaces = radial_sweep_subspaces(wide, 2, 2, false);
    const SharpnessResult sweep = sharpness_sweep(spaces, vol, geo, true);
    for (const auto& row : sweep.rows) {
        CHECK_FALSE(row.c2_checked);
        CHECK(row.c1_pass);
    }
    CHECK(sweep.bounds_pass);
}

TEST_CASE("rescaling the basis leaves the quotients unchanged") {
    const auto spaces = radial_sweep_subspaces(kSpheres, 3, 2, false);
    std::vector<VectorField> scaled;
    for (const auto& f : spaces.back().basis) scaled.push_back(f.scaled(7.0));
    const QuotientExtremes q0 = extremal_quotients(assemble_gram(spaces.back().basis, kVol));
    const QuotientExtremes q1 = extremal_quotients(assemble_gram(scaled, kVol));
    CHECK(q0.quotient_max == doctest::Approx(q1.quotient_max).epsilon(1e-11));
    CHECK(q0.quotient_min == doctest::Approx(q1.quotient_min).epsilon(1e-11));
}
