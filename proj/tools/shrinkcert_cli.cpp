#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <numbers>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "shrinkcert/optimize.hpp"
#include "shrinkcert/report.hpp"

using namespace shrinkcert;
using nlohmann::json;

namespace {

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct SurfaceFlags {
    std::string type;
    std::string json_text;
    int multiplicity = 1;
    std::map<std::string, std::string> fields;

    void attach(CLI::App* sub) {
        sub->add_option("--surface", type, "Piece type (sphere, cylinder, doubled_annulus, doubled_cone, ...)");
        sub->add_option("--surface-json", json_text, "Surface JSON document, inline or a file path");
        sub->add_option("--multiplicity", multiplicity, "Multiplicity of a single piece")->check(CLI::PositiveNumber);
        for (const char* key : {"R", "h", "a", "b", "phi", "r_inner", "r_outer", "sheets", "count", "eps", "rho_in",
                                "rho_out", "delta", "ring_radius", "half_height", "Omega", "t"}) {
            std::string flag = std::string("--") + key;
            for (auto& c : flag)
                if (c == '_') c = '-';
            sub->add_option(flag, fields[key], std::string("Field ") + key + " (inf allowed)");
        }
    }

    CompositeSurface build() const {
        if (!json_text.empty()) {
            std::string text = json_text;
            if (text.front() != '{') {
                std::ifstream in(text);
                if (!in) throw UsageError("cannot open surface file " + text);
                std::stringstream buf;
                buf << in.rdbuf();
                text = buf.str();
            }
            return surface_from_json(json::parse(text));
        }
        if (type.empty()) throw UsageError("give --surface TYPE or --surface-json");
        json j = {{"type", type}, {"multiplicity", multiplicity}};
        for (const auto& [k, v] : fields) {
            if (v.empty()) continue;
            if (v == "inf" || v == "infinity") {
                j[k] = "inf";
            } else if (k == "count" || k == "sheets") {
                j[k] = std::stoi(v);
            } else {
                std::size_t used = 0;
                const double x = std::stod(v, &used);
                if (used != v.size()) throw UsageError("field " + k + " is not numeric: " + v);
                j[k] = x;
            }
        }
        // Unset fields take the defaults of the piece type.
        const json defaults = to_json(piece_from_json_defaults(type));
        for (auto it = defaults.begin(); it != defaults.end(); ++it)
            if (!j.contains(it.key())) j[it.key()] = it.value();
        return surface_from_json(j);
    }

    static Piece piece_from_json_defaults(const std::string& type) {
        static const std::map<std::string, Piece> table = {
            {"doubled_annulus", DoubledAnnulus{}}, {"cylinder", Cylinder{}},         {"sphere", Sphere{}},
            {"spherical_caps", SphericalCaps{}},   {"doubled_cone", DoubledCone{}},  {"ellipsoid", Ellipsoid{}},
            {"capped_graph", CappedGraph{}},       {"ray_tubes", RayTubes{}},        {"vertical_tubes", VerticalTubes{}},
            {"swept_ends", SweptEnds{}}};
        const auto it = table.find(type);
        if (it == table.end()) throw UsageError("unknown surface type " + type);
        return it->second;
    }

    std::string label() const { return json_text.empty() ? type : "surface-json"; }
};

CompositeSurface single(const Piece& p) {
    CompositeSurface s;
    s.pieces.push_back({p, 1, ""});
    s.label = piece_type(p);
    return s;
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

void print_summary(const ReportDocument& doc, const std::vector<std::string>& files) {
    for (const auto& s : doc.sections) {
        std::cout << s.name << ": " << (s.pass ? "PASS" : "FAIL") << " (" << s.seconds << " s)\n";
        for (const auto& f : s.failures) std::cerr << "  failing record: " << s.name << " / " << f << "\n";
    }
    for (const auto& f : files) std::cout << "wrote " << f << "\n";
    std::cout << "overall: " << (doc.pass() ? "PASS" : "FAIL") << "\n";
}

void print_records(const ReportSection& s) {
    for (const auto& r : s.body.at("records")) {
        std::cout << r.at("op").get<std::string>() << " " << r.at("inputs").at("label").get<std::string>() << " = "
                  << r.at("value").dump();
        if (r.contains("error_bound")) std::cout << " +- " << r.at("error_bound").dump();
        std::cout << " (" << r.at("method").get<std::string>() << ")\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Gaussian area and stability certificates for rotationally symmetric surfaces"};
    // --h is a surface field, so help is long-form only.
    app.set_help_flag("--help", "Print this help message and exit");
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", version());

    int threads = -1;
    std::string config_path, output_dir;
    std::vector<std::string> formats;
    app.add_option("--threads", threads, "Worker threads (0 = hardware default)")->check(CLI::NonNegativeNumber);
    app.add_option("--config", config_path, "INI-style key = value config file");
    app.add_option("--output-dir", output_dir, "Report directory (env SHRINKCERT_OUTPUT_DIR)");
    app.add_option("--format", formats, "Output formats: json, csv")->delimiter(',')->check(CLI::IsMember({"json", "csv"}));

    CLI::App* area_cmd = app.add_subcommand("area", "Gaussian area of one surface");
    SurfaceFlags area_surface;
    area_surface.attach(area_cmd);

    CLI::App* entropy_cmd = app.add_subcommand("entropy", "Entropy over centers and scales");
    SurfaceFlags entropy_surface;
    entropy_surface.attach(entropy_cmd);
    EntropySearch search;
    entropy_cmd->add_option("--tau-points", search.tau_points)->check(CLI::Range(2, 100000));
    entropy_cmd->add_option("--y-points", search.y_points)->check(CLI::Range(2, 100000));
    entropy_cmd->add_option("--off-axis", search.off_axis_samples)->check(CLI::NonNegativeNumber);

    CLI::App* bounds_cmd = app.add_subcommand("verify-bounds", "Certify the area bounds of the surface families");
    std::string prop = "all";
    int resolution = -1;
    bounds_cmd->add_option("--prop", prop, "Bound name or all");
    bounds_cmd->add_option("--resolution", resolution, "Grid resolution per axis")->check(CLI::Range(2, 100000));

    CLI::App* sweep_cmd = app.add_subcommand("sweepout", "Area profile of the inversion sweepout");
    std::vector<int> g_list;
    std::string R_grid, profiles_path;
    int t_res = -1, edge_res = -1;
    sweep_cmd->add_option("--g", g_list, "Genus list")->delimiter(',')->check(CLI::PositiveNumber);
    sweep_cmd->add_option("--R-grid", R_grid, "a:b:n");
    sweep_cmd->add_option("--t-res", t_res, "Samples per step")->check(CLI::Range(2, 1000000));
    sweep_cmd->add_option("--edge-res", edge_res, "Samples per edge variant")->check(CLI::Range(2, 1000000));
    sweep_cmd->add_option("--emit-profiles", profiles_path, "Per-step CSV output path");

    CLI::App* jacobi_cmd = app.add_subcommand("jacobi", "Radial Jacobi fields of the plane");
    std::string lambda_grid, curves_path;
    int sign_grid = -1;
    jacobi_cmd->add_option("--lambda-grid", lambda_grid, "default | logsym:lo:hi:n | a:b:n | comma list");
    jacobi_cmd->add_option("--sign-grid", sign_grid, "Points for the phi2 sign count")->check(CLI::Range(2, 10000000));
    jacobi_cmd->add_option("--emit-curves", curves_path, "Curves CSV output path");

    CLI::App* all_cmd = app.add_subcommand("all", "Every suite with the configured defaults");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    RunConfig cfg;
    try {
        if (!config_path.empty()) cfg = load_config_file(config_path, cfg);
        if (const char* env = std::getenv("SHRINKCERT_OUTPUT_DIR"); env && *env) cfg.output_dir = env;
        if (!output_dir.empty()) cfg.output_dir = output_dir;
        if (!formats.empty()) cfg.formats = formats;
        if (threads >= 0) cfg.threads = threads;
        if (resolution > 0) cfg.verifier_resolution = resolution;
        if (!g_list.empty()) cfg.g_list = g_list;
        if (!R_grid.empty()) set_config_value(cfg, "R_grid", R_grid);
        if (t_res > 0) cfg.t_resolution = t_res;
        if (edge_res > 0) cfg.edge_resolution = edge_res;
        if (!lambda_grid.empty()) cfg.lambda_grid = lambda_grid;
        if (sign_grid > 0) cfg.sign_grid_points = sign_grid;
        cfg.validate();
        if (bounds_cmd->parsed() && prop != "all") {
            const auto names = bound_names();
            if (std::find(names.begin(), names.end(), prop) == names.end())
                throw UsageError("unknown bound " + prop);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    }
    if (cfg.threads > 0) set_default_threads(cfg.threads);

    ReportDocument doc;
    doc.config = cfg;
    std::string stem = "report";
    try {
        if (area_cmd->parsed()) {
            stem = "area";
            CompositeSurface s;
            try {
                s = area_surface.build();
            } catch (const std::invalid_argument& e) {
                std::cerr << "usage error: " << e.what() << "\n";
                return 2;
            }
            doc.sections.push_back(area_section({{area_surface.label(), s}}, cfg));
            print_records(doc.sections.back());
        } else if (entropy_cmd->parsed()) {
            stem = "entropy";
            CompositeSurface s;
            try {
                s = entropy_surface.build();
            } catch (const std::invalid_argument& e) {
                std::cerr << "usage error: " << e.what() << "\n";
                return 2;
            }
            doc.sections.push_back(entropy_section({{entropy_surface.label(), s}}, search, cfg));
            print_records(doc.sections.back());
        } else if (bounds_cmd->parsed()) {
            stem = "verify_bounds";
            const auto t0 = std::chrono::steady_clock::now();
            const auto reports = verify_bounds(prop, cfg.verifier());
            doc.sections.push_back(bounds_section(reports));
            doc.sections.back().seconds =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            CsvTable t{"verify_bounds",
                       {"name", "computed_max", "paper_bound", "margin", "pass", "discrepancy", "argmax"},
                       {}};
            for (const auto& r : reports) {
                std::string arg;
                for (const auto& a : r.argmax) arg += (arg.empty() ? "" : ";") + a.name + "=" + format_double(a.value);
                t.add_row({r.name, format_double(r.computed_max), format_double(r.paper_bound), format_double(r.margin),
                           r.pass ? "1" : "0", r.discrepancy ? "1" : "0", arg});
                std::cout << r.name << ": max " << format_double(r.computed_max) << " bound "
                          << format_double(r.paper_bound) << (r.pass ? " pass" : " fail")
                          << (r.discrepancy ? " [discrepancy]" : "") << "\n";
            }
            doc.tables.push_back(t);
        } else if (sweep_cmd->parsed()) {
            stem = "sweepout";
            CsvTable prof{"sweepout_profiles",
                          {"g", "R", "profile", "step", "t", "area", "surface_area", "literal_tilt_area", "terms"},
                          {}};
            doc.sections.push_back(sweepout_section(cfg, &prof));
            const json& b = doc.sections.back().body;
            std::cout << "global max " << b.at("global_max").dump() << " min margin " << b.at("min_margin").dump()
                      << "\n";
            if (!profiles_path.empty()) write_text(profiles_path, to_csv(prof));
            doc.tables.push_back(std::move(prof));
        } else if (jacobi_cmd->parsed()) {
            stem = "jacobi";
            CsvTable curves{"jacobi_curves", {"r", "phi1", "phi2", "residual_phi1", "residual_phi2"}, {}};
            doc.sections.push_back(jacobi_section(cfg, &curves));
            const json& b = doc.sections.back().body;
            std::cout << "r1 " << b.at("r1").at("root").dump() << " r2 " << b.at("r2").at("root").dump() << "\n";
            if (!curves_path.empty()) write_text(curves_path, to_csv(curves));
            doc.tables.push_back(std::move(curves));
        } else if (all_cmd->parsed()) {
            const std::vector<std::pair<std::string, CompositeSurface>> stone = {
                {"sphere_R2", single(Sphere{2.0})}, {"cylinder_sqrt2", single(Cylinder{std::numbers::sqrt2, kInfinity})}};
            doc.sections.push_back(area_section(stone, cfg));
            {
                const AreaResult v = gaussian_volume_ball(kInfinity);
                doc.sections.back().body["records"].push_back(area_record("gaussian_volume_ball", {{"R", "inf"}}, v));
            }
            doc.sections.push_back(entropy_section(stone, EntropySearch{}, cfg));
            const auto t0 = std::chrono::steady_clock::now();
            doc.sections.push_back(bounds_section(verify_bounds("all", cfg.verifier())));
            doc.sections.back().seconds =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            CsvTable prof{"sweepout_profiles",
                          {"g", "R", "profile", "step", "t", "area", "surface_area", "literal_tilt_area", "terms"},
                          {}};
            doc.sections.push_back(sweepout_section(cfg, &prof));
            CsvTable curves{"jacobi_curves", {"r", "phi1", "phi2", "residual_phi1", "residual_phi2"}, {}};
            doc.sections.push_back(jacobi_section(cfg, &curves));
            doc.sections.push_back(properties_section(cfg));
            doc.tables.push_back(std::move(prof));
            doc.tables.push_back(std::move(curves));
        }
        const auto files = write_report(doc, stem);
        print_summary(doc, files);
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 1;
    }
    return doc.pass() ? 0 : 1;
}
