#include "lineq/sharpness.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <sstream>

#include "lineq/kernels.hpp"

namespace lineq {

GramMatrices assemble_gram(const std::vector<VectorField>& basis, const VolumeGrid& vol) {
    const int n = static_cast<int>(basis.size());
    if (n < 1) fail("empty basis");
    const std::size_t m = vol.size();

    // Cache values, Jacobian components, div and rot per basis field (SoA).
    struct FieldData {
        std::vector<double> px, py, pz;
        std::vector<double> j[9];
        std::vector<double> div, rx, ry, rz;
    };
    std::vector<FieldData> data(n);
    for (int k = 0; k < n; ++k) {
        FieldData& d = data[k];
        d.px.resize(m);
        d.py.resize(m);
        d.pz.resize(m);
        for (auto& c : d.j) c.resize(m);
        d.div.resize(m);
        d.rx.resize(m);
        d.ry.resize(m);
        d.rz.resize(m);
        for (std::size_t i = 0; i < m; ++i) {
            const Vec3 point = vol.point(i);
            const Vec3 v = basis[k].value(point);
            d.px[i] = v.x();
            d.py[i] = v.y();
            d.pz[i] = v.z();
            const Mat3 jac = basis[k].jacobian(point);
            for (int r = 0; r < 3; ++r)
                for (int c = 0; c < 3; ++c) d.j[3 * r + c][i] = jac(r, c);
            d.div[i] = jac(0, 0) + jac(1, 1) + jac(2, 2);
            d.rx[i] = jac(2, 1) - jac(1, 2);
            d.ry[i] = jac(0, 2) - jac(2, 0);
            d.rz[i] = jac(1, 0) - jac(0, 1);
        }
    }

    GramMatrices gram;
    gram.A.resize(n, n);
    gram.G.resize(n, n);
    gram.D.resize(n, n);
    const double* w = vol.w.data();
    for (int a = 0; a < n; ++a) {
        for (int b = a; b < n; ++b) {
            const FieldData& fa = data[a];
            const FieldData& fb = data[b];
            double va = kernels::weighted_dot(w, fa.px.data(), fb.px.data(), m) +
                        kernels::weighted_dot(w, fa.py.data(), fb.py.data(), m) +
                        kernels::weighted_dot(w, fa.pz.data(), fb.pz.data(), m);
            double vg = 0.0;
            for (int c = 0; c < 9; ++c)
                vg += kernels::weighted_dot(w, fa.j[c].data(), fb.j[c].data(), m);
            double vd = kernels::weighted_dot(w, fa.div.data(), fb.div.data(), m) +
                        kernels::weighted_dot(w, fa.rx.data(), fb.rx.data(), m) +
                        kernels::weighted_dot(w, fa.ry.data(), fb.ry.data(), m) +
                        kernels::weighted_dot(w, fa.rz.data(), fb.rz.data(), m);
            gram.A(a, b) = gram.A(b, a) = va;
            gram.G(a, b) = gram.G(b, a) = vg;
            gram.D(a, b) = gram.D(b, a) = vd;
        }
    }

    for (const auto* matrix : {&gram.A, &gram.G, &gram.D}) {
        const double asym = (*matrix - matrix->transpose()).cwiseAbs().maxCoeff();
        const double scale = std::max(1.0, matrix->cwiseAbs().maxCoeff());
        if (asym > 1e-10 * scale) fail("assembly asymmetry");
    }
    return gram;
}

QuotientExtremes extremal_quotients(const GramMatrices& gram, double deflation_threshold) {
    if (!(deflation_threshold > 0.0)) fail("deflation threshold must be positive");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> gsolve(gram.G);
    const Eigen::VectorXd evals = gsolve.eigenvalues();
    const double gmax = evals.maxCoeff();
    if (!(gmax > 0.0)) fail("degenerate subspace");

    std::vector<int> keep;
    for (int i = 0; i < evals.size(); ++i)
        if (evals[i] >= deflation_threshold * gmax) keep.push_back(i);
    if (keep.empty()) fail("degenerate subspace");

    Eigen::MatrixXd basis(evals.size(), static_cast<int>(keep.size()));
    double gmin = gmax;
    for (std::size_t c = 0; c < keep.size(); ++c) {
        basis.col(static_cast<int>(c)) =
            gsolve.eigenvectors().col(keep[c]) / std::sqrt(evals[keep[c]]);
        gmin = std::min(gmin, evals[keep[c]]);
    }

    const Eigen::MatrixXd a_red = basis.transpose() * gram.A * basis;
    const Eigen::MatrixXd d_red = basis.transpose() * gram.D * basis;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> asolve(0.5 * (a_red + a_red.transpose()));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> dsolve(0.5 * (d_red + d_red.transpose()));

    QuotientExtremes q;
    q.quotient_max = asolve.eigenvalues().maxCoeff();
    q.quotient_min = dsolve.eigenvalues().minCoeff();
    q.gram_condition = gmax / gmin;
    q.deflated = static_cast<int>(evals.size() - keep.size());
    return q;
}

SharpnessResult sharpness_sweep(const std::vector<Subspace>& subspaces, const VolumeGrid& vol,
                                const GeometryReport& geometry, bool nested, double eps,
                                double deflation_threshold) {
    SharpnessResult result;
    result.nested = nested;
    for (const Subspace& space : subspaces) {
        const GramMatrices gram = assemble_gram(space.basis, vol);
        const QuotientExtremes q = extremal_quotients(gram, deflation_threshold);
        SharpnessRow row;
        row.n = static_cast<int>(space.basis.size());
        row.quotient_max = q.quotient_max;
        row.quotient_min = q.quotient_min;
        row.gram_condition = q.gram_condition;
        row.deflated = q.deflated;
        row.c1_pass = q.quotient_max <= geometry.C1 + eps;
        row.c2_checked = geometry.admissible;
        row.c2_pass = !geometry.admissible || q.quotient_min >= geometry.C2 - eps;
        if (!row.c1_pass || (row.c2_checked && !row.c2_pass)) result.bounds_pass = false;
        result.rows.push_back(row);
    }
    if (nested) {
        for (std::size_t i = 1; i < result.rows.size(); ++i) {
            if (result.rows[i].quotient_max < result.rows[i - 1].quotient_max - 1e-12)
                result.monotone = false;
            if (result.rows[i].quotient_min > result.rows[i - 1].quotient_min + 1e-12)
                result.monotone = false;
        }
    }
    return result;
}

std::vector<Subspace> radial_sweep_subspaces(const LayerDomain& domain, int n_max, int p,
                                             bool include_tangential) {
    if (n_max < 1) fail("sweep needs at least one subspace");
    std::vector<VectorField> generators;
    for (int k = 0; k < n_max; ++k) {
        std::vector<double> coeffs(k + 1, 0.0);
        coeffs[k] = 1.0;  // g(r) = r^k
        generators.push_back(
            bc_blend_field(domain, make_scalar_radial_poly(coeffs), make_constant_field(Vec3::Zero()), p));
    }
    if (include_tangential) {
        const Vec3 axes[3] = {Vec3::UnitX(), Vec3::UnitY(), Vec3::UnitZ()};
        for (const Vec3& axis : axes)
            generators.push_back(
                bc_blend_field(domain, make_scalar_constant(0.0), make_constant_field(axis), p));
        VectorField spin = VectorField::analytic(
            [](const Vec3& q) { return Vec3(-q.y(), q.x(), 0.0); },
            [](const Vec3&) {
                Mat3 j = Mat3::Zero();
                j(0, 1) = -1.0;
                j(1, 0) = 1.0;
                return j;
            },
            "spin_z");
        generators.push_back(bc_blend_field(domain, make_scalar_constant(0.0), spin, p));
    }

    std::vector<Subspace> spaces;
    const int radial_rows = n_max;
    for (int n = 1; n <= radial_rows; ++n) {
        Subspace space;
        space.basis.assign(generators.begin(), generators.begin() + n);
        std::ostringstream os;
        os << "radial degrees 0.." << (n - 1);
        space.label = os.str();
        spaces.push_back(std::move(space));
    }
    if (include_tangential) {
        Subspace space;
        space.basis = generators;
        space.label = "radial + tangential";
        spaces.push_back(std::move(space));
    }
    return spaces;
}

}  // namespace lineq
