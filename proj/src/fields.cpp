#include "lineq/fields.hpp"

#include <cmath>
#include <random>
#include <sstream>

namespace lineq {

namespace {

// Deterministic [-1, 1] stream; mt19937_64 output mapped explicitly so the
// coefficients are bit-for-bit reproducible across platforms.
class UnitStream {
public:
    explicit UnitStream(std::uint64_t seed) : gen_(seed) {}
    double next() {
        const std::uint64_t u = gen_();
        return 2.0 * ((u >> 11) * 0x1.0p-53) - 1.0;
    }

private:
    std::mt19937_64 gen_;
};

Mat3 fd_jacobian(const std::function<Vec3(const Vec3&)>& value, const Vec3& p, double h) {
    Mat3 jac;
    for (int j = 0; j < 3; ++j) {
        Vec3 dp = Vec3::Zero();
        dp[j] = h;
        const Vec3 diff = (value(p + dp) - value(p - dp)) / (2.0 * h);
        jac.col(j) = diff;
    }
    return jac;
}

}  // namespace

VectorField VectorField::analytic(std::function<Vec3(const Vec3&)> value,
                                  std::function<Mat3(const Vec3&)> jacobian, std::string name) {
    VectorField f;
    f.value_ = std::move(value);
    f.jacobian_ = std::move(jacobian);
    f.provenance_ = Provenance::analytic;
    f.name_ = std::move(name);
    return f;
}

VectorField VectorField::with_fd_jacobian(std::function<Vec3(const Vec3&)> value, std::string name,
                                          double step, bool richardson) {
    VectorField f;
    f.value_ = std::move(value);
    f.provenance_ = Provenance::finite_difference;
    f.step_ = step;
    f.richardson_ = richardson;
    f.name_ = std::move(name);
    return f;
}

Mat3 VectorField::jacobian(const Vec3& p) const {
    if (jacobian_) return jacobian_(p);
    if (!richardson_) return fd_jacobian(value_, p, step_);
    const Mat3 coarse = fd_jacobian(value_, p, step_);
    const Mat3 fine = fd_jacobian(value_, p, 0.5 * step_);
    return (4.0 * fine - coarse) / 3.0;
}

VectorField VectorField::scaled(double s) const {
    VectorField f = *this;
    const auto base_value = value_;
    f.value_ = [base_value, s](const Vec3& p) { return (s * base_value(p)).eval(); };
    if (jacobian_) {
        const auto base_jac = jacobian_;
        f.jacobian_ = [base_jac, s](const Vec3& p) { return (s * base_jac(p)).eval(); };
    }
    f.name_ = name_ + "*scale";
    return f;
}

FirstOrderInvariants invariants_at(const VectorField& field, const Vec3& point) {
    const Mat3 j = field.jacobian(point);
    FirstOrderInvariants inv;
    inv.div = j(0, 0) + j(1, 1) + j(2, 2);
    inv.rot = Vec3(j(2, 1) - j(1, 2), j(0, 2) - j(2, 0), j(1, 0) - j(0, 1));
    inv.grad_norm_sq = j.squaredNorm();
    return inv;
}

VectorField make_radial_field(std::vector<double> g_coeffs) {
    std::ostringstream os;
    os << "radial(";
    for (std::size_t k = 0; k < g_coeffs.size(); ++k) os << (k ? "," : "") << g_coeffs[k];
    os << ")";
    auto eval_g = [g_coeffs](double r) {
        double v = 0.0;
        for (std::size_t k = g_coeffs.size(); k-- > 0;) v = v * r + g_coeffs[k];
        return v;
    };
    auto eval_gp = [g_coeffs](double r) {
        double v = 0.0;
        for (std::size_t k = g_coeffs.size(); k-- > 1;) v = v * r + k * g_coeffs[k];
        return v;
    };
    auto value = [eval_g](const Vec3& p) -> Vec3 {
        const double r = p.norm();
        return (eval_g(r) / r) * p;
    };
    auto jacobian = [eval_g, eval_gp](const Vec3& p) -> Mat3 {
        const double r = p.norm();
        const double g = eval_g(r), gp = eval_gp(r);
        const Vec3 u = p / r;
        return ((gp - g / r) * (u * u.transpose()) + (g / r) * Mat3::Identity()).eval();
    };
    return VectorField::analytic(std::move(value), std::move(jacobian), os.str());
}

VectorField make_constant_field(const Vec3& c) {
    std::ostringstream os;
    os << "constant(" << c.x() << "," << c.y() << "," << c.z() << ")";
    return VectorField::analytic([c](const Vec3&) { return c; },
                                 [](const Vec3&) { return Mat3::Zero().eval(); }, os.str());
}

std::vector<std::array<int, 3>> monomial_exponents(int deg) {
    std::vector<std::array<int, 3>> exps;
    for (int d = 0; d <= deg; ++d)
        for (int i = 0; i <= d; ++i)
            for (int j = 0; j <= d - i; ++j) exps.push_back({i, j, d - i - j});
    return exps;
}

namespace {

double eval_monomial(const std::array<int, 3>& e, const Vec3& p) {
    double v = 1.0;
    for (int k = 0; k < e[0]; ++k) v *= p.x();
    for (int k = 0; k < e[1]; ++k) v *= p.y();
    for (int k = 0; k < e[2]; ++k) v *= p.z();
    return v;
}

double eval_monomial_derivative(const std::array<int, 3>& e, int axis, const Vec3& p) {
    if (e[axis] == 0) return 0.0;
    std::array<int, 3> d = e;
    d[axis] -= 1;
    return e[axis] * eval_monomial(d, p);
}

}  // namespace

VectorField make_polynomial_field(const std::array<std::vector<double>, 3>& coeffs,
                                  std::string name) {
    const auto exps = monomial_exponents(3);
    for (const auto& c : coeffs)
        if (c.size() > exps.size()) fail("polynomial field degree above 3 is not supported");
    auto value = [coeffs, exps](const Vec3& p) -> Vec3 {
        Vec3 v = Vec3::Zero();
        for (int c = 0; c < 3; ++c)
            for (std::size_t m = 0; m < coeffs[c].size(); ++m)
                v[c] += coeffs[c][m] * eval_monomial(exps[m], p);
        return v;
    };
    auto jacobian = [coeffs, exps](const Vec3& p) -> Mat3 {
        Mat3 jac = Mat3::Zero();
        for (int c = 0; c < 3; ++c)
            for (std::size_t m = 0; m < coeffs[c].size(); ++m)
                for (int axis = 0; axis < 3; ++axis)
                    jac(c, axis) += coeffs[c][m] * eval_monomial_derivative(exps[m], axis, p);
        return jac;
    };
    return VectorField::analytic(std::move(value), std::move(jacobian), std::move(name));
}

VectorField make_seeded_field(std::uint64_t seed, int degree) {
    if (degree < 0 || degree > 3) fail("seeded field degree must be 0..3");
    UnitStream stream(seed);
    const std::size_t n = monomial_exponents(degree).size();
    std::array<std::vector<double>, 3> coeffs;
    for (auto& c : coeffs) {
        c.resize(n);
        for (auto& v : c) v = stream.next();
    }
    std::ostringstream os;
    os << "random(seed=" << seed << ",degree=" << degree << ")";
    return make_polynomial_field(coeffs, os.str());
}

ScalarField make_scalar_constant(double c) {
    std::ostringstream os;
    os << "const(" << c << ")";
    return {[c](const Vec3&) { return c; }, os.str()};
}

ScalarField make_scalar_radial_poly(std::vector<double> coeffs) {
    std::ostringstream os;
    os << "g(r)=poly(";
    for (std::size_t k = 0; k < coeffs.size(); ++k) os << (k ? "," : "") << coeffs[k];
    os << ")";
    return {[coeffs](const Vec3& p) {
                const double r = p.norm();
                double v = 0.0;
                for (std::size_t k = coeffs.size(); k-- > 0;) v = v * r + coeffs[k];
                return v;
            },
            os.str()};
}

ScalarField make_seeded_scalar(std::uint64_t seed, int degree) {
    if (degree < 0 || degree > 3) fail("seeded scalar degree must be 0..3");
    UnitStream stream(seed);
    const auto exps = monomial_exponents(degree);
    std::vector<double> coeffs(exps.size());
    for (auto& v : coeffs) v = stream.next();
    std::ostringstream os;
    os << "random_scalar(seed=" << seed << ",degree=" << degree << ")";
    return {[coeffs, exps](const Vec3& p) {
                double v = 0.0;
                for (std::size_t m = 0; m < coeffs.size(); ++m)
                    v += coeffs[m] * eval_monomial(exps[m], p);
                return v;
            },
            os.str()};
}

VectorField bc_blend_field(const LayerDomain& domain, ScalarField g, VectorField V, int p) {
    if (p < 1) fail("blend exponent must be >= 1");
    auto value = [domain, g, V, p](const Vec3& x) -> Vec3 {
        const Spherical sph = to_spherical(x);
        const SurfaceJet2 jin = surface_jet(domain.inner, sph.theta, sph.phi);
        const SurfaceJet2 jout = surface_jet(domain.outer, sph.theta, sph.phi);
        const double gap = jout.R - jin.R;
        const double t = (sph.r - jin.R) / gap;
        if (!(t >= -0.1 && t <= 1.1)) fail("outside layer");

        const auto [e_r, e_th, e_ph] = spherical_basis(sph.theta, sph.phi);
        const double s = std::sin(sph.theta);
        const Vec3 n_in =
            (jin.R * e_r - jin.R_theta * e_th - (jin.R_phi / s) * e_ph).normalized();
        const Vec3 n_out =
            (jout.R * e_r - jout.R_theta * e_th - (jout.R_phi / s) * e_ph).normalized();

        const Vec3 v = V.value(x);
        const double one_m_t = 1.0 - t;
        return std::pow(one_m_t, p) * g.value(x) * n_in +
               std::pow(t, p) * (v - v.dot(n_out) * n_out);
    };
    std::ostringstream os;
    os << "blend(g=" << g.name << ",V=" << V.name() << ",p=" << p << ")";
    return VectorField::with_fd_jacobian(std::move(value), os.str());
}

VectorField make_seeded_blend(const LayerDomain& domain, std::uint64_t seed, int degree, int p) {
    ScalarField g = make_seeded_scalar(seed, degree);
    VectorField v = make_seeded_field(seed + 0x9e3779b97f4a7c15ull, degree);
    std::ostringstream os;
    os << "random_blend(seed=" << seed << ",degree=" << degree << ",p=" << p << ")";
    VectorField f = bc_blend_field(domain, std::move(g), std::move(v), p);
    VectorField named = VectorField::with_fd_jacobian(
        [f](const Vec3& x) { return f.value(x); }, os.str(), f.fd_step());
    return named;
}

double pointwise_bound_check(const VectorField& field, std::span<const Vec3> points) {
    double worst = 0.0;
    for (const Vec3& p : points) {
        const FirstOrderInvariants inv = invariants_at(field, p);
        if (inv.grad_norm_sq <= 1e-30) continue;
        const double ratio = (inv.div * inv.div + inv.rot.squaredNorm()) / inv.grad_norm_sq;
        worst = std::max(worst, ratio);
    }
    return worst;
}

}  // namespace lineq
