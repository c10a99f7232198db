#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "lineq/domain.hpp"
#include "lineq/fields.hpp"

namespace lineq {

using ordered_json = nlohmann::ordered_json;

struct SurfaceConfig {
    bool sphere = true;
    double r0 = 1.0;
    std::vector<HarmonicTerm> terms;

    RadialSurface build() const;
    ordered_json to_json() const;
};

// One entry of the field suite. `blend` carries its own scalar g plus a nested
// non-blend field spec for V; `count` expands seeded specs into a family with
// consecutive seeds.
struct FieldConfig {
    enum class Type { radial, constant, polynomial, random, blend, random_blend };
    Type type = Type::radial;

    std::vector<double> radial_coeffs;                 // radial
    std::array<double, 3> constant_value{0, 0, 0};     // constant
    std::array<std::vector<double>, 3> poly_coeffs;    // polynomial
    std::uint64_t seed = 1;                            // random / random_blend
    int degree = 3;
    int count = 1;
    int p = 2;                                         // blend exponent
    struct Scalar {
        enum class Kind { constant, radial_poly };
        Kind kind = Kind::constant;
        double value = 1.0;
        std::vector<double> coeffs;
    } g;                                               // blend scalar factor
    std::shared_ptr<FieldConfig> v;                    // blend tangential source

    std::vector<VectorField> materialize(const LayerDomain& domain,
                                         std::optional<std::uint64_t> seed_override) const;
    ordered_json to_json() const;
};

struct ResolutionConfig {
    std::array<int, 2> extrema{128, 256};
    std::array<int, 3> volume{16, 24, 48};
    std::array<int, 2> surface{24, 48};
    std::array<int, 2> boundary_check{64, 128};
};

struct Thresholds {
    double identity_residual = 1e-6;
    double ineq_rtol = 1e-9;
    double bc_residual = 1e-8;
    double sharpness_eps = 1e-6;
    double convergence = 1e-8;
    double semidefinite_tol = 1e-9;
    double deflation = 1e-10;
};

struct SharpnessConfig {
    int n_max = 6;
    int p = 2;
    bool tangential = false;
};

struct RunConfig {
    SurfaceConfig inner, outer;
    ResolutionConfig resolution;
    std::vector<FieldConfig> fields;  // empty = default suite (radial + 20 seeded blends)
    Thresholds thresholds;
    SharpnessConfig sharpness;
    int identity_levels = 2;
    std::optional<std::uint64_t> seed_override;

    LayerDomain domain() const { return {inner.build(), outer.build()}; }
};

// Strict parsing: any unknown key aborts before computation.
RunConfig parse_config(const ordered_json& j);
RunConfig load_config_file(const std::string& path);

// The fully resolved configuration, defaults included, as echoed into reports.
ordered_json resolved_config(const RunConfig& config);

}  // namespace lineq
