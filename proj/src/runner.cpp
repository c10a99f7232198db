#include "lineq/runner.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "lineq/sharpness.hpp"
#include "lineq/verifier.hpp"

namespace lineq {

namespace {

ordered_json report_header(const char* command, const RunConfig& config) {
    ordered_json j;
    j["schema_version"] = kReportSchemaVersion;
    j["tool"]["name"] = kToolName;
    j["tool"]["version"] = kToolVersion;
    j["command"] = command;
    j["config"] = resolved_config(config);
    return j;
}

void write_report(const ordered_json& report, const OutputOptions& options) {
    if (options.out_path.empty()) return;
    std::ofstream out(options.out_path);
    if (!out) fail("cannot write report to " + options.out_path);
    out << report.dump(2) << "\n";
}

void write_csv(const std::string& text, const OutputOptions& options) {
    if (options.csv_path.empty()) return;
    std::ofstream out(options.csv_path);
    if (!out) fail("cannot write csv to " + options.csv_path);
    out << text;
}

ordered_json geometry_json(const GeometryReport& g) {
    ordered_json j;
    j["R1"] = g.R1;
    j["R2"] = g.R2;
    j["R3"] = g.R3;
    j["deltaR"] = g.deltaR;
    j["xi1"] = g.xi1;
    j["xi2"] = g.xi2;
    j["R_curv"] = g.R_curv;
    j["convex_outer"] = g.convex_outer;
    j["admissibility_fraction"] = g.admissibility_fraction;
    j["admissible"] = g.admissible;
    j["C1"] = g.C1;
    j["C2"] = g.C2;
    j["C3"] = g.C3;
    j["C4"] = g.C4;
    j["resolution"] = {g.extrema_ntheta, g.extrema_nphi};
    return j;
}

GeometryReport compute_geometry(const RunConfig& config, const LayerDomain& domain) {
    const AngularGrid grid =
        angular_grid(config.resolution.extrema[0], config.resolution.extrema[1]);
    return geometry_report(domain, grid, config.thresholds.semidefinite_tol);
}

// Fills in the default suite (the radial family member g(r) = R3 - r plus 20
// seeded blends) when the config lists no fields.
RunConfig with_effective_fields(const RunConfig& config, const GeometryReport& geometry) {
    if (!config.fields.empty()) return config;
    RunConfig effective = config;
    FieldConfig radial;
    radial.type = FieldConfig::Type::radial;
    radial.radial_coeffs = {geometry.R3, -1.0};
    effective.fields.push_back(radial);
    FieldConfig blends;
    blends.type = FieldConfig::Type::random_blend;
    blends.seed = 1;
    blends.count = 20;
    blends.degree = 3;
    blends.p = 2;
    effective.fields.push_back(blends);
    return effective;
}

std::vector<VectorField> materialize_suite(const RunConfig& config, const LayerDomain& domain) {
    std::vector<VectorField> fields;
    for (const auto& spec : config.fields) {
        auto group = spec.materialize(domain, config.seed_override);
        for (auto& f : group) fields.push_back(std::move(f));
    }
    return fields;
}

ordered_json bundle_json(const IntegralBundle& b) {
    ordered_json j;
    j["vol_P2"] = b.vol_P2;
    j["vol_grad2"] = b.vol_grad2;
    j["vol_divrot2"] = b.vol_divrot2;
    j["surf_gamma_P2"] = b.surf_gamma_P2;
    j["surf_Gamma_P2"] = b.surf_Gamma_P2;
    j["bnd_Gamma"] = b.bnd_Gamma;
    j["bnd_gamma"] = b.bnd_gamma;
    return j;
}

}  // namespace

int run_geometry(const RunConfig& config, const OutputOptions& options, std::ostream& out) {
    const LayerDomain domain = config.domain();
    const GeometryReport geometry = compute_geometry(config, domain);

    const bool pass = geometry.admissible && geometry.convex_outer;
    ordered_json report = report_header("geometry", config);
    report["geometry"] = geometry_json(geometry);
    report["pass"] = pass;
    write_report(report, options);

    out << "geometry: inner=" << domain.inner.describe() << " outer=" << domain.outer.describe()
        << "\n";
    out << "  R1=" << geometry.R1 << " R2=" << geometry.R2 << " R3=" << geometry.R3
        << " deltaR=" << geometry.deltaR << "\n";
    out << "  xi1=" << geometry.xi1 << " xi2=" << geometry.xi2 << " R_curv=" << geometry.R_curv
        << "\n";
    out << "  fraction=" << geometry.admissibility_fraction
        << " admissible=" << (geometry.admissible ? "yes" : "no")
        << " convex_outer=" << (geometry.convex_outer ? "yes" : "no") << "\n";
    out << "  C1=" << geometry.C1 << " C2=" << geometry.C2 << " C3=" << geometry.C3
        << " C4=" << geometry.C4 << "\n";
    out << (pass ? "PASS" : "FAIL") << " geometry checks\n";
    return pass ? kExitPass : kExitChecksFailed;
}

int run_verify(const RunConfig& base_config, const OutputOptions& options, std::ostream& out) {
    const LayerDomain domain = base_config.domain();
    const GeometryReport geometry = compute_geometry(base_config, domain);
    const RunConfig config = with_effective_fields(base_config, geometry);

    const auto& res = config.resolution;
    const VolumeGrid vol = volume_grid(domain, res.volume[0], res.volume[1], res.volume[2]);
    const BoundaryGrids bnd = boundary_grids(domain, res.surface[0], res.surface[1]);
    const BoundaryGrids bc_grids =
        boundary_grids(domain, res.boundary_check[0], res.boundary_check[1]);

    ordered_json report = report_header("verify", config);
    report["geometry"] = geometry_json(geometry);
    report["resolutions"]["volume"] = res.volume;
    report["resolutions"]["surface"] = res.surface;
    report["resolutions"]["boundary_check"] = res.boundary_check;
    ordered_json fields_json = ordered_json::array();

    int passed = 0, failed = 0, not_applicable = 0;
    const std::vector<VectorField> suite = materialize_suite(config, domain);
    for (const VectorField& field : suite) {
        const VerificationReport rep =
            verify_inequalities(field, geometry, vol, bnd, config.thresholds.ineq_rtol,
                                config.thresholds.bc_residual, &bc_grids);

        ordered_json fj;
        fj["name"] = rep.field_name;
        fj["bc_residual"] = rep.bc_residual;
        fj["applicable"] = rep.applicable;
        fj["inconsistent"] = rep.inconsistent;
        fj["bundle"] = bundle_json(rep.bundle);
        ordered_json records = ordered_json::array();
        for (const auto& rec : rep.records) {
            ordered_json rj;
            rj["name"] = rec.name;
            rj["applicable"] = rec.applicable && rep.applicable;
            rj["lhs"] = rec.lhs;
            rj["rhs"] = rec.rhs;
            rj["ratio"] = rec.ratio;
            rj["constant"] = rec.constant;
            rj["margin"] = rec.margin;
            rj["pass"] = rec.pass;
            records.push_back(rj);
            if (!(rec.applicable && rep.applicable)) {
                ++not_applicable;
            } else if (rec.pass && !rep.inconsistent) {
                ++passed;
            } else {
                ++failed;
            }
        }
        fj["records"] = records;
        fields_json.push_back(fj);

        out << "field " << rep.field_name << ": bc_residual=" << rep.bc_residual
            << (rep.applicable ? "" : " (records not applicable)") << "\n";
        for (const auto& rec : rep.records) {
            if (!(rec.applicable && rep.applicable)) {
                out << "  " << rec.name << " not applicable\n";
            } else {
                out << "  " << rec.name << " ratio=" << rec.ratio
                    << (rec.pass ? " PASS" : " FAIL") << "\n";
            }
        }
    }

    report["fields"] = fields_json;
    report["summary"]["passed"] = passed;
    report["summary"]["failed"] = failed;
    report["summary"]["not_applicable"] = not_applicable;
    write_report(report, options);

    out << "verify: " << passed << " passed, " << failed << " failed, " << not_applicable
        << " not applicable\n";
    return failed == 0 ? kExitPass : kExitChecksFailed;
}

int run_identity(const RunConfig& base_config, const OutputOptions& options, std::ostream& out) {
    const LayerDomain domain = base_config.domain();
    const GeometryReport geometry = compute_geometry(base_config, domain);
    const RunConfig config = with_effective_fields(base_config, geometry);
    const auto& res = config.resolution;

    ordered_json report = report_header("identity", config);
    report["geometry"] = geometry_json(geometry);
    ordered_json fields_json = ordered_json::array();
    std::ostringstream csv;
    csv << "field,level,nr,ntheta,nphi,residual\n";

    const std::vector<VectorField> suite = materialize_suite(config, domain);
    std::vector<std::vector<double>> residuals(suite.size());
    for (int level = 0; level < config.identity_levels; ++level) {
        const int scale = 1 << level;
        const VolumeGrid vol = volume_grid(domain, res.volume[0] * scale, res.volume[1] * scale,
                                           res.volume[2] * scale);
        const BoundaryGrids bnd =
            boundary_grids(domain, res.surface[0] * scale, res.surface[1] * scale);
        for (std::size_t i = 0; i < suite.size(); ++i) {
            const double r = verify_identity(suite[i], vol, bnd);
            residuals[i].push_back(r);
            csv << suite[i].name() << "," << level << "," << res.volume[0] * scale << ","
                << res.volume[1] * scale << "," << res.volume[2] * scale << "," << r << "\n";
        }
    }

    bool pass = true;
    for (std::size_t i = 0; i < suite.size(); ++i) {
        ordered_json fj;
        fj["name"] = suite[i].name();
        fj["residuals"] = residuals[i];
        if (residuals[i].size() >= 2 && residuals[i][1] > 0.0)
            fj["refinement_ratio"] = residuals[i][0] / residuals[i][1];
        const bool field_pass = residuals[i][0] < config.thresholds.identity_residual;
        fj["pass"] = field_pass;
        pass = pass && field_pass;
        fields_json.push_back(fj);
        out << "field " << suite[i].name() << ": residual=" << residuals[i][0];
        if (residuals[i].size() >= 2) out << " refined=" << residuals[i][1];
        out << (field_pass ? " PASS" : " FAIL") << "\n";
    }

    report["fields"] = fields_json;
    report["pass"] = pass;
    write_report(report, options);
    write_csv(csv.str(), options);
    out << (pass ? "PASS" : "FAIL") << " identity residuals (threshold "
        << config.thresholds.identity_residual << ")\n";
    return pass ? kExitPass : kExitChecksFailed;
}

int run_sharpness(const RunConfig& config, const OutputOptions& options, std::ostream& out) {
    const LayerDomain domain = config.domain();
    const GeometryReport geometry = compute_geometry(config, domain);
    const auto& res = config.resolution;
    const VolumeGrid vol = volume_grid(domain, res.volume[0], res.volume[1], res.volume[2]);

    const std::vector<Subspace> spaces = radial_sweep_subspaces(
        domain, config.sharpness.n_max, config.sharpness.p, config.sharpness.tangential);
    // The pure radial rows are nested; a trailing tangential row is as well,
    // since it extends the full radial basis.
    const SharpnessResult sweep = sharpness_sweep(spaces, vol, geometry, /*nested=*/true,
                                                  config.thresholds.sharpness_eps,
                                                  config.thresholds.deflation);

    ordered_json report = report_header("sharpness", config);
    report["geometry"] = geometry_json(geometry);
    ordered_json rows = ordered_json::array();
    std::ostringstream csv;
    csv << "n,quotient_max,quotient_min,gram_condition,deflated,c1_pass,c2_pass\n";
    for (const auto& row : sweep.rows) {
        ordered_json rj;
        rj["n"] = row.n;
        rj["quotient_max"] = row.quotient_max;
        rj["quotient_min"] = row.quotient_min;
        rj["gram_condition"] = row.gram_condition;
        rj["deflated"] = row.deflated;
        rj["c1_pass"] = row.c1_pass;
        rj["c2_checked"] = row.c2_checked;
        rj["c2_pass"] = row.c2_pass;
        rows.push_back(rj);
        csv << row.n << "," << std::setprecision(17) << row.quotient_max << ","
            << row.quotient_min << "," << row.gram_condition << "," << row.deflated << ","
            << (row.c1_pass ? 1 : 0) << "," << (row.c2_pass ? 1 : 0) << "\n";
        out << "n=" << row.n << " quotient_max=" << row.quotient_max
            << " quotient_min=" << row.quotient_min << " C1 " << (row.c1_pass ? "ok" : "VIOLATED");
        if (row.c2_checked)
            out << " C2 " << (row.c2_pass ? "ok" : "VIOLATED");
        else
            out << " C2 skipped (domain not admissible)";
        out << "\n";
    }
    report["rows"] = rows;
    report["monotone"] = sweep.monotone;
    const bool pass = sweep.bounds_pass && sweep.monotone;
    report["pass"] = pass;
    write_report(report, options);
    write_csv(csv.str(), options);
    out << (pass ? "PASS" : "FAIL") << " sharpness bounds (C1=" << geometry.C1
        << ", C2=" << geometry.C2 << ")\n";
    return pass ? kExitPass : kExitChecksFailed;
}

int run_convergence(const RunConfig& base_config, const OutputOptions& options, std::ostream& out) {
    const LayerDomain domain = base_config.domain();
    const GeometryReport geometry = compute_geometry(base_config, domain);
    const RunConfig config = with_effective_fields(base_config, geometry);
    const auto& res = config.resolution;

    const std::vector<VectorField> suite = materialize_suite(config, domain);
    const VectorField& probe = suite.front();

    struct Row {
        std::string name;
        std::vector<double> values;
    };
    std::vector<Row> rows = {{"volume", {}},      {"area_gamma", {}},  {"area_Gamma", {}},
                             {"vol_P2", {}},      {"vol_grad2", {}}};

    for (int level = 0; level < 3; ++level) {
        const int scale = 1 << level;
        const VolumeGrid vol = volume_grid(domain, res.volume[0] * scale, res.volume[1] * scale,
                                           res.volume[2] * scale);
        const BoundaryGrids bnd =
            boundary_grids(domain, res.surface[0] * scale, res.surface[1] * scale);
        rows[0].values.push_back(integrate_volume(vol, [](const Vec3&) { return 1.0; }));
        rows[1].values.push_back(integrate_surface(bnd.inner, [](const SurfaceFrame&) { return 1.0; }));
        rows[2].values.push_back(integrate_surface(bnd.outer, [](const SurfaceFrame&) { return 1.0; }));
        const IntegralBundle bundle = integral_bundle(probe, vol, bnd);
        rows[3].values.push_back(bundle.vol_P2);
        rows[4].values.push_back(bundle.vol_grad2);
    }

    ordered_json report = report_header("convergence", config);
    report["geometry"] = geometry_json(geometry);
    report["probe_field"] = probe.name();
    ordered_json quantities = ordered_json::array();
    std::ostringstream csv;
    csv << "quantity,level,value,rel_change\n";
    bool pass = true;
    for (const auto& row : rows) {
        std::vector<double> changes;
        for (std::size_t k = 1; k < row.values.size(); ++k) {
            const double scale_v = std::max(std::abs(row.values[k]), 1e-300);
            changes.push_back(std::abs(row.values[k] - row.values[k - 1]) / scale_v);
        }
        ordered_json qj;
        qj["name"] = row.name;
        qj["values"] = row.values;
        qj["rel_changes"] = changes;
        const bool row_pass = changes.back() < config.thresholds.convergence;
        qj["pass"] = row_pass;
        pass = pass && row_pass;
        quantities.push_back(qj);
        for (std::size_t k = 0; k < row.values.size(); ++k)
            csv << row.name << "," << k << "," << std::setprecision(17) << row.values[k] << ","
                << (k == 0 ? 0.0 : changes[k - 1]) << "\n";
        out << row.name << ":";
        for (double v : row.values) out << " " << std::setprecision(12) << v;
        out << "  last rel change " << changes.back() << (row_pass ? " PASS" : " FAIL") << "\n";
    }
    report["quantities"] = quantities;
    report["pass"] = pass;
    write_report(report, options);
    write_csv(csv.str(), options);
    out << (pass ? "PASS" : "FAIL") << " convergence (threshold " << config.thresholds.convergence
        << ")\n";
    return pass ? kExitPass : kExitChecksFailed;
}

int run_command(const std::string& command, const RunConfig& config, const OutputOptions& options,
                std::ostream& out, std::ostream& err) {
    try {
        if (command == "geometry") return run_geometry(config, options, out);
        if (command == "verify") return run_verify(config, options, out);
        if (command == "identity") return run_identity(config, options, out);
        if (command == "sharpness") return run_sharpness(config, options, out);
        if (command == "convergence") return run_convergence(config, options, out);
        err << "unknown command: " << command << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitError;
    }
}

}  // namespace lineq
