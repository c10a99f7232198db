#include "lineq/config.hpp"

#include <fstream>

namespace lineq {

namespace {

void check_keys(const ordered_json& j, std::initializer_list<const char*> allowed,
                const std::string& context) {
    if (!j.is_object()) fail("config: expected an object at " + context);
    for (const auto& [key, value] : j.items()) {
        bool ok = false;
        for (const char* a : allowed)
            if (key == a) ok = true;
        if (!ok) fail("config: unknown key \"" + key + "\" in " + context);
    }
}

std::vector<double> parse_number_list(const ordered_json& j, const std::string& context) {
    if (!j.is_array()) fail("config: expected an array at " + context);
    std::vector<double> out;
    for (const auto& v : j) {
        if (!v.is_number()) fail("config: expected numbers in " + context);
        out.push_back(v.get<double>());
    }
    return out;
}

SurfaceConfig parse_surface(const ordered_json& j, const std::string& context) {
    check_keys(j, {"kind", "r0", "terms"}, context);
    if (!j.contains("kind") || !j.contains("r0")) fail("config: " + context + " needs kind and r0");
    SurfaceConfig s;
    const std::string kind = j.at("kind").get<std::string>();
    s.r0 = j.at("r0").get<double>();
    if (kind == "sphere") {
        s.sphere = true;
        if (j.contains("terms") && !j.at("terms").empty())
            fail("config: sphere takes no terms in " + context);
    } else if (kind == "harmonic") {
        s.sphere = false;
        if (!j.contains("terms")) fail("config: harmonic surface needs terms in " + context);
        for (const auto& term : j.at("terms")) {
            const auto nums = parse_number_list(term, context + ".terms");
            if (nums.size() != 3) fail("config: terms entries are [l, m, amplitude] in " + context);
            s.terms.push_back({static_cast<int>(nums[0]), static_cast<int>(nums[1]), nums[2]});
        }
    } else {
        fail("config: unknown surface kind \"" + kind + "\" in " + context);
    }
    return s;
}

FieldConfig parse_field(const ordered_json& j, const std::string& context, bool allow_blend);

FieldConfig::Scalar parse_scalar(const ordered_json& j, const std::string& context) {
    check_keys(j, {"kind", "value", "coeffs"}, context);
    FieldConfig::Scalar s;
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "constant") {
        s.kind = FieldConfig::Scalar::Kind::constant;
        s.value = j.at("value").get<double>();
    } else if (kind == "radial_poly") {
        s.kind = FieldConfig::Scalar::Kind::radial_poly;
        s.coeffs = parse_number_list(j.at("coeffs"), context + ".coeffs");
    } else {
        fail("config: unknown scalar kind \"" + kind + "\" in " + context);
    }
    return s;
}

FieldConfig parse_field(const ordered_json& j, const std::string& context, bool allow_blend) {
    if (!j.is_object() || !j.contains("type")) fail("config: field needs a type in " + context);
    const std::string type = j.at("type").get<std::string>();
    FieldConfig f;
    if (type == "radial") {
        check_keys(j, {"type", "coeffs"}, context);
        f.type = FieldConfig::Type::radial;
        f.radial_coeffs = parse_number_list(j.at("coeffs"), context + ".coeffs");
    } else if (type == "constant") {
        check_keys(j, {"type", "value"}, context);
        f.type = FieldConfig::Type::constant;
        const auto nums = parse_number_list(j.at("value"), context + ".value");
        if (nums.size() != 3) fail("config: constant field value is [x, y, z] in " + context);
        f.constant_value = {nums[0], nums[1], nums[2]};
    } else if (type == "polynomial") {
        check_keys(j, {"type", "coeffs"}, context);
        f.type = FieldConfig::Type::polynomial;
        const auto& comps = j.at("coeffs");
        if (!comps.is_array() || comps.size() != 3)
            fail("config: polynomial coeffs are three per-component lists in " + context);
        for (int c = 0; c < 3; ++c)
            f.poly_coeffs[c] = parse_number_list(comps[c], context + ".coeffs");
    } else if (type == "random") {
        check_keys(j, {"type", "seed", "degree", "count"}, context);
        f.type = FieldConfig::Type::random;
        if (j.contains("seed")) f.seed = j.at("seed").get<std::uint64_t>();
        if (j.contains("degree")) f.degree = j.at("degree").get<int>();
        if (j.contains("count")) f.count = j.at("count").get<int>();
    } else if (type == "blend" && allow_blend) {
        check_keys(j, {"type", "g", "v", "p"}, context);
        f.type = FieldConfig::Type::blend;
        if (j.contains("g")) f.g = parse_scalar(j.at("g"), context + ".g");
        if (j.contains("v"))
            f.v = std::make_shared<FieldConfig>(parse_field(j.at("v"), context + ".v", false));
        if (j.contains("p")) f.p = j.at("p").get<int>();
    } else if (type == "random_blend" && allow_blend) {
        check_keys(j, {"type", "seed", "degree", "count", "p"}, context);
        f.type = FieldConfig::Type::random_blend;
        if (j.contains("seed")) f.seed = j.at("seed").get<std::uint64_t>();
        if (j.contains("degree")) f.degree = j.at("degree").get<int>();
        if (j.contains("count")) f.count = j.at("count").get<int>();
        if (j.contains("p")) f.p = j.at("p").get<int>();
    } else {
        fail("config: unknown field type \"" + type + "\" in " + context);
    }
    if (f.count < 1) fail("config: field count must be >= 1 in " + context);
    return f;
}

template <std::size_t N>
void parse_int_array(const ordered_json& j, std::array<int, N>& out, const std::string& context) {
    const auto nums = parse_number_list(j, context);
    if (nums.size() != N) fail("config: " + context + " needs " + std::to_string(N) + " entries");
    for (std::size_t i = 0; i < N; ++i) out[i] = static_cast<int>(nums[i]);
}

}  // namespace

RadialSurface SurfaceConfig::build() const {
    return sphere ? RadialSurface::sphere(r0) : RadialSurface::harmonic(r0, terms);
}

ordered_json SurfaceConfig::to_json() const {
    ordered_json j;
    j["kind"] = sphere ? "sphere" : "harmonic";
    j["r0"] = r0;
    if (!sphere) {
        ordered_json terms_json = ordered_json::array();
        for (const auto& t : terms) terms_json.push_back({t.l, t.m, t.amplitude});
        j["terms"] = terms_json;
    }
    return j;
}

std::vector<VectorField> FieldConfig::materialize(
    const LayerDomain& domain, std::optional<std::uint64_t> seed_override) const {
    const std::uint64_t base_seed = seed_override.value_or(seed);
    std::vector<VectorField> fields;
    switch (type) {
        case Type::radial:
            fields.push_back(make_radial_field(radial_coeffs));
            break;
        case Type::constant:
            fields.push_back(
                make_constant_field(Vec3(constant_value[0], constant_value[1], constant_value[2])));
            break;
        case Type::polynomial:
            fields.push_back(make_polynomial_field(poly_coeffs));
            break;
        case Type::random:
            for (int k = 0; k < count; ++k) fields.push_back(make_seeded_field(base_seed + k, degree));
            break;
        case Type::blend: {
            ScalarField scalar = (g.kind == Scalar::Kind::constant)
                                     ? make_scalar_constant(g.value)
                                     : make_scalar_radial_poly(g.coeffs);
            VectorField tangential = v ? v->materialize(domain, std::nullopt).front()
                                       : make_constant_field(Vec3::Zero());
            fields.push_back(bc_blend_field(domain, std::move(scalar), std::move(tangential), p));
            break;
        }
        case Type::random_blend:
            for (int k = 0; k < count; ++k)
                fields.push_back(make_seeded_blend(domain, base_seed + k, degree, p));
            break;
    }
    return fields;
}

ordered_json FieldConfig::to_json() const {
    ordered_json j;
    switch (type) {
        case Type::radial:
            j["type"] = "radial";
            j["coeffs"] = radial_coeffs;
            break;
        case Type::constant:
            j["type"] = "constant";
            j["value"] = constant_value;
            break;
        case Type::polynomial:
            j["type"] = "polynomial";
            j["coeffs"] = {poly_coeffs[0], poly_coeffs[1], poly_coeffs[2]};
            break;
        case Type::random:
            j["type"] = "random";
            j["seed"] = seed;
            j["degree"] = degree;
            j["count"] = count;
            break;
        case Type::blend:
            j["type"] = "blend";
            j["g"] = ordered_json::object();
            if (g.kind == Scalar::Kind::constant) {
                j["g"]["kind"] = "constant";
                j["g"]["value"] = g.value;
            } else {
                j["g"]["kind"] = "radial_poly";
                j["g"]["coeffs"] = g.coeffs;
            }
            if (v) j["v"] = v->to_json();
            j["p"] = p;
            break;
        case Type::random_blend:
            j["type"] = "random_blend";
            j["seed"] = seed;
            j["degree"] = degree;
            j["count"] = count;
            j["p"] = p;
            break;
    }
    return j;
}

RunConfig parse_config(const ordered_json& j) {
    check_keys(j, {"domain", "resolution", "fields", "thresholds", "sharpness", "identity"},
               "config");
    if (!j.contains("domain")) fail("config: missing domain");
    const auto& dom = j.at("domain");
    check_keys(dom, {"inner", "outer"}, "domain");
    if (!dom.contains("inner") || !dom.contains("outer"))
        fail("config: domain needs inner and outer surfaces");

    RunConfig config;
    config.inner = parse_surface(dom.at("inner"), "domain.inner");
    config.outer = parse_surface(dom.at("outer"), "domain.outer");

    if (j.contains("resolution")) {
        const auto& res = j.at("resolution");
        check_keys(res, {"extrema", "volume", "surface", "boundary_check"}, "resolution");
        if (res.contains("extrema"))
            parse_int_array(res.at("extrema"), config.resolution.extrema, "resolution.extrema");
        if (res.contains("volume"))
            parse_int_array(res.at("volume"), config.resolution.volume, "resolution.volume");
        if (res.contains("surface"))
            parse_int_array(res.at("surface"), config.resolution.surface, "resolution.surface");
        if (res.contains("boundary_check"))
            parse_int_array(res.at("boundary_check"), config.resolution.boundary_check,
                            "resolution.boundary_check");
    }

    if (j.contains("fields")) {
        if (!j.at("fields").is_array()) fail("config: fields must be an array");
        int idx = 0;
        for (const auto& fj : j.at("fields"))
            config.fields.push_back(parse_field(fj, "fields[" + std::to_string(idx++) + "]", true));
    }

    if (j.contains("thresholds")) {
        const auto& th = j.at("thresholds");
        check_keys(th,
                   {"identity_residual", "ineq_rtol", "bc_residual", "sharpness_eps", "convergence",
                    "semidefinite_tol", "deflation"},
                   "thresholds");
        auto load = [&th](const char* key, double& slot) {
            if (th.contains(key)) slot = th.at(key).get<double>();
        };
        load("identity_residual", config.thresholds.identity_residual);
        load("ineq_rtol", config.thresholds.ineq_rtol);
        load("bc_residual", config.thresholds.bc_residual);
        load("sharpness_eps", config.thresholds.sharpness_eps);
        load("convergence", config.thresholds.convergence);
        load("semidefinite_tol", config.thresholds.semidefinite_tol);
        load("deflation", config.thresholds.deflation);
    }

    if (j.contains("sharpness")) {
        const auto& sh = j.at("sharpness");
        check_keys(sh, {"n_max", "p", "tangential"}, "sharpness");
        if (sh.contains("n_max")) config.sharpness.n_max = sh.at("n_max").get<int>();
        if (sh.contains("p")) config.sharpness.p = sh.at("p").get<int>();
        if (sh.contains("tangential")) config.sharpness.tangential = sh.at("tangential").get<bool>();
    }

    if (j.contains("identity")) {
        const auto& id = j.at("identity");
        check_keys(id, {"levels"}, "identity");
        if (id.contains("levels")) config.identity_levels = id.at("levels").get<int>();
        if (config.identity_levels < 1 || config.identity_levels > 4)
            fail("config: identity.levels must be 1..4");
    }

    return config;
}

RunConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail("cannot open config file: " + path);
    ordered_json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        fail("config parse error in " + path + ": " + e.what());
    }
    return parse_config(j);
}

ordered_json resolved_config(const RunConfig& config) {
    ordered_json j;
    j["domain"]["inner"] = config.inner.to_json();
    j["domain"]["outer"] = config.outer.to_json();
    j["resolution"]["extrema"] = config.resolution.extrema;
    j["resolution"]["volume"] = config.resolution.volume;
    j["resolution"]["surface"] = config.resolution.surface;
    j["resolution"]["boundary_check"] = config.resolution.boundary_check;
    ordered_json fields = ordered_json::array();
    for (const auto& f : config.fields) fields.push_back(f.to_json());
    j["fields"] = fields;
    j["thresholds"]["identity_residual"] = config.thresholds.identity_residual;
    j["thresholds"]["ineq_rtol"] = config.thresholds.ineq_rtol;
    j["thresholds"]["bc_residual"] = config.thresholds.bc_residual;
    j["thresholds"]["sharpness_eps"] = config.thresholds.sharpness_eps;
    j["thresholds"]["convergence"] = config.thresholds.convergence;
    j["thresholds"]["semidefinite_tol"] = config.thresholds.semidefinite_tol;
    j["thresholds"]["deflation"] = config.thresholds.deflation;
    j["sharpness"]["n_max"] = config.sharpness.n_max;
    j["sharpness"]["p"] = config.sharpness.p;
    j["sharpness"]["tangential"] = config.sharpness.tangential;
    j["identity"]["levels"] = config.identity_levels;
    if (config.seed_override) j["seed_override"] = *config.seed_override;
    return j;
}

}  // namespace lineq
