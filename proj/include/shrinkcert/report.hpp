#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "shrinkcert/bound_verifier.hpp"
#include "shrinkcert/gaussian_measure.hpp"
#include "shrinkcert/jacobi.hpp"
#include "shrinkcert/sweepout.hpp"

namespace shrinkcert {

std::string version();

struct RunConfig {
    double quad_abs_tol = 1e-11;
    double quad_rel_tol = 1e-10;
    double root_width = 1e-12;
    int verifier_resolution = 0;
    int verifier_rounds = 3;
    double polish_tol = 1e-8;
    std::vector<int> g_list{1, 5, 20};
    double R_min = 0.2;
    double R_max = 5.0;
    int R_points = 20;
    int t_resolution = 200;
    int edge_resolution = 50;
    std::string lambda_grid = "default";
    int sign_grid_points = 10000;
    std::uint64_t seed = 20240611;
    int threads = 0;  // 0 keeps the hardware default
    std::string output_dir = "shrinkcert-out";
    std::vector<std::string> formats{"json"};

    bool operator==(const RunConfig&) const = default;

    void validate() const;
    QuadratureSpec quad() const;
    VerifierOptions verifier() const;
    std::vector<double> R_grid() const;
};

// Flat key = value lines; '#' and ';' start comments, [section] headers are ignored.
// Unknown keys throw std::invalid_argument.
RunConfig parse_config(const std::string& text, RunConfig base = {});
RunConfig load_config_file(const std::string& path, RunConfig base = {});
void set_config_value(RunConfig& cfg, const std::string& key, const std::string& value);
std::string to_config_text(const RunConfig& cfg);

nlohmann::json to_json(const RunConfig& cfg);
RunConfig config_from_json(const nlohmann::json& j);

// "a:b:n" -> n evenly spaced values.
std::vector<double> parse_range(const std::string& spec);
// "default", "logsym:lo:hi:n" (n log-spaced in [lo, hi], their negatives and 0),
// "a:b:n", or a comma-separated list.
std::vector<double> parse_lambda_grid(const std::string& spec);

nlohmann::json encode(double x);  // +-inf as strings, NaN as null
nlohmann::json to_json(const std::vector<NamedValue>& values);
nlohmann::json to_json(const AreaResult& r);
nlohmann::json to_json(const EntropyResult& r);
nlohmann::json to_json(const BoundReport& r);
nlohmann::json to_json(const MonotonicityTrace& t);
nlohmann::json to_json(const SweepoutParams& p);
nlohmann::json to_json(const InequalityCheck& c);
nlohmann::json to_json(const StepProfile& s);  // summary; per-t data goes to CSV
nlohmann::json to_json(const InversionResult& r);
nlohmann::json to_json(const ZeroBracket& z);
nlohmann::json to_json(const Phi1ShapeReport& r);
nlohmann::json to_json(const SignCertificate& c);
nlohmann::json to_json(const NoPositiveRadialReport& r);
nlohmann::json to_json(const SphereComparison& s);

// {op, inputs, value, error_bound, method}
nlohmann::json area_record(const std::string& op, const nlohmann::json& inputs, const AreaResult& r);

struct CsvTable {
    std::string name;  // file stem
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    void add_row(std::vector<std::string> row);
};

std::string format_double(double x);  // %.17g
std::string to_csv(const CsvTable& t);

struct ReportSection {
    std::string name;
    nlohmann::json body;
    bool pass = true;
    double seconds = 0.0;
    std::vector<std::string> failures;
};

struct ReportDocument {
    RunConfig config;
    std::vector<ReportSection> sections;
    std::vector<CsvTable> tables;

    bool pass() const;
    // Timings are kept out of the main document so it stays byte-identical across runs.
    nlohmann::json to_json() const;
    nlohmann::json timings_json() const;
};

// Writes report.json (+ timings.json) and/or one CSV per table into cfg.output_dir.
std::vector<std::string> write_report(const ReportDocument& doc, const std::string& stem = "report");

// Section builders shared by the command line tool and the acceptance runner.
// A bound report counts as passing when it passes or is flagged as a discrepancy.
ReportSection area_section(const std::vector<std::pair<std::string, CompositeSurface>>& surfaces,
                           const RunConfig& cfg);
ReportSection entropy_section(const std::vector<std::pair<std::string, CompositeSurface>>& surfaces,
                              const EntropySearch& search, const RunConfig& cfg);
ReportSection bounds_section(const std::vector<BoundReport>& reports);
ReportSection sweepout_section(const RunConfig& cfg, CsvTable* profiles = nullptr);
ReportSection jacobi_section(const RunConfig& cfg, CsvTable* curves = nullptr);
ReportSection properties_section(const RunConfig& cfg);

}  // namespace shrinkcert
