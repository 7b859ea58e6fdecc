#include "shrinkcert/report.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

#include "shrinkcert/optimize.hpp"

#ifndef SHRINKCERT_VERSION
#define SHRINKCERT_VERSION "0.0.0"
#endif

namespace shrinkcert {

using nlohmann::json;

std::string version() { return SHRINKCERT_VERSION; }

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(s);
    while (std::getline(in, item, sep)) out.push_back(trim(item));
    return out;
}

double to_double(const std::string& key, const std::string& v) {
    std::size_t used = 0;
    double x = 0.0;
    try {
        x = std::stod(v, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("config key " + key + ": not a number: " + v);
    }
    if (used != v.size()) throw std::invalid_argument("config key " + key + ": trailing characters in " + v);
    return x;
}

long to_long(const std::string& key, const std::string& v) {
    std::size_t used = 0;
    long x = 0;
    try {
        x = std::stol(v, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("config key " + key + ": not an integer: " + v);
    }
    if (used != v.size()) throw std::invalid_argument("config key " + key + ": trailing characters in " + v);
    return x;
}

template <class T>
std::string join(const std::vector<T>& v) {
    std::ostringstream out;
    for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
    return out.str();
}

}  // namespace

void RunConfig::validate() const {
    auto need = [](bool ok, const char* msg) {
        if (!ok) throw std::invalid_argument(msg);
    };
    need(quad_abs_tol > 0.0 && quad_rel_tol > 0.0, "quadrature tolerances must be positive");
    need(root_width > 0.0, "root_width must be positive");
    need(polish_tol > 0.0, "polish_tol must be positive");
    need(verifier_resolution == 0 || verifier_resolution >= 2, "verifier_resolution must be 0 or >= 2");
    need(verifier_rounds >= 0, "verifier_rounds must be >= 0");
    need(!g_list.empty(), "g_list must not be empty");
    for (int g : g_list) need(g >= 1, "g_list entries must be >= 1");
    need(R_points >= 1 && R_min > 0.0 && R_max >= R_min, "R grid needs 0 < R_min <= R_max and R_points >= 1");
    need(R_points >= 2 || R_min == R_max, "R grid with distinct ends needs R_points >= 2");
    need(t_resolution >= 2, "t_resolution must be >= 2");
    need(edge_resolution >= 2, "edge_resolution must be >= 2");
    need(sign_grid_points >= 2, "sign_grid_points must be >= 2");
    need(threads >= 0, "threads must be >= 0");
    need(!output_dir.empty(), "output_dir must not be empty");
    need(!formats.empty(), "formats must not be empty");
    for (const auto& f : formats) need(f == "json" || f == "csv", "formats must be a subset of {json, csv}");
    parse_lambda_grid(lambda_grid);
}

QuadratureSpec RunConfig::quad() const {
    QuadratureSpec q;
    q.abs_tol = quad_abs_tol;
    q.rel_tol = quad_rel_tol;
    return q;
}

VerifierOptions RunConfig::verifier() const {
    VerifierOptions o;
    o.resolution = verifier_resolution;
    o.rounds = verifier_rounds;
    o.polish_tol = polish_tol;
    o.quad = quad();
    return o;
}

std::vector<double> RunConfig::R_grid() const {
    if (R_points == 1) return {R_min};
    return linspace(R_min, R_max, R_points);
}

void set_config_value(RunConfig& c, const std::string& key, const std::string& raw) {
    const std::string v = trim(raw);
    if (key == "quad_abs_tol") c.quad_abs_tol = to_double(key, v);
    else if (key == "quad_rel_tol") c.quad_rel_tol = to_double(key, v);
    else if (key == "root_width") c.root_width = to_double(key, v);
    else if (key == "verifier_resolution") c.verifier_resolution = int(to_long(key, v));
    else if (key == "verifier_rounds") c.verifier_rounds = int(to_long(key, v));
    else if (key == "polish_tol") c.polish_tol = to_double(key, v);
    else if (key == "g_list") {
        c.g_list.clear();
        for (const auto& s : split(v, ',')) c.g_list.push_back(int(to_long(key, s)));
    } else if (key == "R_grid") {
        const auto parts = split(v, ':');
        if (parts.size() != 3) throw std::invalid_argument("R_grid must look like a:b:n");
        c.R_min = to_double(key, parts[0]);
        c.R_max = to_double(key, parts[1]);
        c.R_points = int(to_long(key, parts[2]));
    } else if (key == "t_resolution") c.t_resolution = int(to_long(key, v));
    else if (key == "edge_resolution") c.edge_resolution = int(to_long(key, v));
    else if (key == "lambda_grid") c.lambda_grid = v;
    else if (key == "sign_grid_points") c.sign_grid_points = int(to_long(key, v));
    else if (key == "seed") c.seed = std::uint64_t(std::stoull(v));
    else if (key == "threads") c.threads = int(to_long(key, v));
    else if (key == "output_dir") c.output_dir = v;
    else if (key == "formats") c.formats = split(v, ',');
    else throw std::invalid_argument("unknown config key " + key);
}

RunConfig parse_config(const std::string& text, RunConfig base) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find_first_of("#;");
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty() || line.front() == '[') continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config line " + std::to_string(lineno) + ": expected key = value");
        set_config_value(base, trim(line.substr(0, eq)), line.substr(eq + 1));
    }
    base.validate();
    return base;
}

RunConfig load_config_file(const std::string& path, RunConfig base) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str(), base);
}

std::string to_config_text(const RunConfig& c) {
    std::ostringstream out;
    out << "quad_abs_tol = " << format_double(c.quad_abs_tol) << "\n"
        << "quad_rel_tol = " << format_double(c.quad_rel_tol) << "\n"
        << "root_width = " << format_double(c.root_width) << "\n"
        << "verifier_resolution = " << c.verifier_resolution << "\n"
        << "verifier_rounds = " << c.verifier_rounds << "\n"
        << "polish_tol = " << format_double(c.polish_tol) << "\n"
        << "g_list = " << join(c.g_list) << "\n"
        << "R_grid = " << format_double(c.R_min) << ":" << format_double(c.R_max) << ":" << c.R_points << "\n"
        << "t_resolution = " << c.t_resolution << "\n"
        << "edge_resolution = " << c.edge_resolution << "\n"
        << "lambda_grid = " << c.lambda_grid << "\n"
        << "sign_grid_points = " << c.sign_grid_points << "\n"
        << "seed = " << c.seed << "\n"
        << "threads = " << c.threads << "\n"
        << "output_dir = " << c.output_dir << "\n"
        << "formats = " << join(c.formats) << "\n";
    return out.str();
}

json to_json(const RunConfig& c) {
    return {{"quad_abs_tol", c.quad_abs_tol},
            {"quad_rel_tol", c.quad_rel_tol},
            {"root_width", c.root_width},
            {"verifier_resolution", c.verifier_resolution},
            {"verifier_rounds", c.verifier_rounds},
            {"polish_tol", c.polish_tol},
            {"g_list", c.g_list},
            {"R_min", c.R_min},
            {"R_max", c.R_max},
            {"R_points", c.R_points},
            {"t_resolution", c.t_resolution},
            {"edge_resolution", c.edge_resolution},
            {"lambda_grid", c.lambda_grid},
            {"sign_grid_points", c.sign_grid_points},
            {"seed", c.seed},
            {"threads", c.threads},
            {"output_dir", c.output_dir},
            {"formats", c.formats}};
}

RunConfig config_from_json(const json& j) {
    RunConfig c;
    c.quad_abs_tol = j.at("quad_abs_tol").get<double>();
    c.quad_rel_tol = j.at("quad_rel_tol").get<double>();
    c.root_width = j.at("root_width").get<double>();
    c.verifier_resolution = j.at("verifier_resolution").get<int>();
    c.verifier_rounds = j.at("verifier_rounds").get<int>();
    c.polish_tol = j.at("polish_tol").get<double>();
    c.g_list = j.at("g_list").get<std::vector<int>>();
    c.R_min = j.at("R_min").get<double>();
    c.R_max = j.at("R_max").get<double>();
    c.R_points = j.at("R_points").get<int>();
    c.t_resolution = j.at("t_resolution").get<int>();
    c.edge_resolution = j.at("edge_resolution").get<int>();
    c.lambda_grid = j.at("lambda_grid").get<std::string>();
    c.sign_grid_points = j.at("sign_grid_points").get<int>();
    c.seed = j.at("seed").get<std::uint64_t>();
    c.threads = j.at("threads").get<int>();
    c.output_dir = j.at("output_dir").get<std::string>();
    c.formats = j.at("formats").get<std::vector<std::string>>();
    c.validate();
    return c;
}

std::vector<double> parse_range(const std::string& spec) {
    const auto parts = split(spec, ':');
    if (parts.size() != 3) throw std::invalid_argument("range must look like a:b:n, got " + spec);
    const double a = to_double("range", parts[0]), b = to_double("range", parts[1]);
    const long n = to_long("range", parts[2]);
    if (n < 1) throw std::invalid_argument("range needs n >= 1");
    if (n == 1) return {a};
    return linspace(a, b, int(n));
}

std::vector<double> parse_lambda_grid(const std::string& spec) {
    if (spec == "default") return default_lambda_grid();
    if (spec.rfind("logsym:", 0) == 0) {
        const auto parts = split(spec.substr(7), ':');
        if (parts.size() != 3) throw std::invalid_argument("logsym grid must look like logsym:lo:hi:n");
        const double lo = to_double("lambda_grid", parts[0]), hi = to_double("lambda_grid", parts[1]);
        const long n = to_long("lambda_grid", parts[2]);
        if (!(lo > 0.0 && hi > lo) || n < 2) throw std::invalid_argument("logsym grid needs 0 < lo < hi, n >= 2");
        const std::vector<double> pos = logspace(lo, hi, int(n));
        std::vector<double> out;
        for (auto it = pos.rbegin(); it != pos.rend(); ++it) out.push_back(-*it);
        out.push_back(0.0);
        out.insert(out.end(), pos.begin(), pos.end());
        return out;
    }
    if (spec.find(':') != std::string::npos) return parse_range(spec);
    std::vector<double> out;
    for (const auto& s : split(spec, ',')) out.push_back(to_double("lambda_grid", s));
    if (out.empty()) throw std::invalid_argument("empty lambda grid");
    for (double x : out)
        if (!std::isfinite(x)) throw std::invalid_argument("lambda grid must be finite");
    return out;
}

json encode(double x) {
    if (std::isnan(x)) return nullptr;
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    return x;
}

namespace {

json encode_all(const std::vector<double>& v) {
    json out = json::array();
    for (double x : v) out.push_back(encode(x));
    return out;
}

}  // namespace

json to_json(const std::vector<NamedValue>& values) {
    json out = json::array();
    for (const auto& v : values) out.push_back({{"name", v.name}, {"value", encode(v.value)}});
    return out;
}

json to_json(const AreaResult& r) {
    json j = {{"value", encode(r.value)},
              {"error_bound", encode(r.error_bound)},
              {"method", to_string(r.method)},
              {"converged", r.converged}};
    if (!r.inequality.empty()) j["inequality"] = r.inequality;
    return j;
}

json to_json(const EntropyResult& r) {
    return {{"value", encode(r.value)},
            {"argmax", {{"y", {encode(r.argmax.y[0]), encode(r.argmax.y[1]), encode(r.argmax.y[2])}},
                        {"tau", encode(r.argmax.tau)}}},
            {"boundary_warning", r.boundary_warning},
            {"off_axis_max", encode(r.off_axis_max)},
            {"evaluations", r.evaluations}};
}

json to_json(const BoundReport& r) {
    return {{"name", r.name},
            {"computed_max", encode(r.computed_max)},
            {"argmax", to_json(r.argmax)},
            {"paper_bound", encode(r.paper_bound)},
            {"margin", encode(r.margin)},
            {"pass", r.pass},
            {"discrepancy", r.discrepancy},
            {"note", r.note},
            {"grid_spec",
             {{"resolution", r.grid.resolution},
              {"rounds", r.grid.rounds},
              {"shrink", encode(r.grid.shrink)},
              {"cell_diameter", encode(r.grid.cell_diameter)},
              {"lipschitz", encode(r.grid.lipschitz)},
              {"slack", encode(r.grid.slack)}}},
            {"tail_bound", encode(r.tail_bound)},
            {"details", to_json(r.details)}};
}

json to_json(const MonotonicityTrace& t) {
    return {{"R", t.R},
            {"growth_factor", encode(t.growth_factor)},
            {"phi", encode_all(t.phi)},
            {"derivative", encode_all(t.derivative)},
            {"analytic_bound", encode_all(t.analytic_bound)},
            {"pass", t.pass}};
}

json to_json(const SweepoutParams& p) {
    return {{"g", p.g},         {"R", p.R},           {"h", p.h},          {"Omega", p.Omega},
            {"eps", p.eps},     {"delta_tubes", p.delta_tubes},            {"A", p.A},
            {"B", p.B},         {"E", p.E},           {"F", p.F},          {"catenoid_C", p.catenoid_C},
            {"h0", p.h0},       {"h1", p.h1},         {"h2", p.h2},        {"h3", p.h3},
            {"h4", p.h4},       {"h_c", p.h_c},       {"Omega1", p.Omega1}, {"Omega2", p.Omega2},
            {"Omega3", p.Omega3}, {"eta1", p.eta1},   {"eta2", p.eta2},    {"iota", p.iota},
            {"delta1", p.delta1}, {"delta2", p.delta2}, {"delta3", p.delta3}, {"r_max", p.r_max()},
            {"r_necks", p.r_necks()}, {"ends_budget", p.ends_budget()}};
}

json to_json(const InequalityCheck& c) {
    return {{"name", c.name}, {"lhs", encode(c.lhs)}, {"rhs", encode(c.rhs)}, {"pass", c.pass}};
}

json to_json(const StepProfile& s) {
    return {{"id", s.id},
            {"step", s.step},
            {"samples", s.t_grid.size()},
            {"max_area", encode(s.max_area)},
            {"argmax_t", encode(s.argmax_t)},
            {"bound", encode(s.bound)},
            {"bound_label", s.bound_label},
            {"margin", encode(s.margin)},
            {"pass", s.pass},
            {"offending_t", encode(s.offending_t)},
            {"budget_breakdown", to_json(s.budget_breakdown)},
            {"checks", to_json(s.checks)}};
}

json to_json(const InversionResult& r) {
    json steps = json::array();
    for (const auto& s : r.steps) steps.push_back(to_json(s));
    return {{"g", r.g},
            {"R", r.R},
            {"max_area", encode(r.max_area)},
            {"margin", encode(r.margin)},
            {"argmax_step", r.argmax_step},
            {"argmax_t", encode(r.argmax_t)},
            {"continuity_gaps", encode_all(r.continuity_gaps)},
            {"expected_margin_floor", encode(r.expected_margin_floor)},
            {"pass", r.pass},
            {"steps", steps}};
}

json to_json(const ZeroBracket& z) {
    return {{"lo", encode(z.lo)}, {"hi", encode(z.hi)}, {"root", encode(z.root)}, {"residual", encode(z.residual)}};
}

json to_json(const Phi1ShapeReport& r) {
    return {{"pass", r.pass},
            {"value_at_0", r.value_at_0},
            {"grid_points", r.grid_points},
            {"max_first_derivative", encode(r.max_first_derivative)},
            {"max_second_derivative", encode(r.max_second_derivative)},
            {"violations", encode_all(r.violations)},
            {"r_check", r.r_check},
            {"leading_ratio", encode(r.leading_ratio)},
            {"series_ratio", encode(r.series_ratio)},
            {"leading_within_5pct", r.leading_within_5pct},
            {"series_within_5pct", r.series_within_5pct}};
}

json to_json(const SignCertificate& c) {
    return {{"subject", c.subject},
            {"lambda", encode(c.lambda)},
            {"log_r_negative", encode(c.log_r_negative)},
            {"value_negative", encode(c.value_negative)},
            {"r_positive", encode(c.r_positive)},
            {"value_positive", encode(c.value_positive)},
            {"method", c.method},
            {"certified", c.certified}};
}

json to_json(const NoPositiveRadialReport& r) {
    json certs = json::array();
    for (const auto& c : r.certificates) certs.push_back(to_json(c));
    return {{"pass", r.pass},
            {"r1", encode(r.r1)},
            {"r2", encode(r.r2)},
            {"phi2_sign_changes", r.phi2_sign_changes},
            {"sign_grid_points", r.sign_grid_points},
            {"phi2_increasing", r.phi2_increasing},
            {"wronskian_max_rel_error", encode(r.wronskian_max_rel_error)},
            {"wronskian_min", encode(r.wronskian_min)},
            {"failures", encode_all(r.failures)},
            {"certificates", certs}};
}

json to_json(const SphereComparison& s) {
    return {{"zero", to_json(s.zero)},
            {"before_equator", s.before_equator},
            {"cos_residual", encode(s.cos_residual)},
            {"steps", s.steps},
            {"eigen_degree", encode(s.eigen_degree)}};
}

json area_record(const std::string& op, const json& inputs, const AreaResult& r) {
    return {{"op", op},
            {"inputs", inputs},
            {"value", encode(r.value)},
            {"error_bound", encode(r.error_bound)},
            {"method", to_string(r.method)}};
}

void CsvTable::add_row(std::vector<std::string> row) {
    if (row.size() != header.size()) throw std::invalid_argument("csv row width does not match the header");
    rows.push_back(std::move(row));
}

std::string format_double(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string to_csv(const CsvTable& t) {
    auto quote = [](const std::string& s) {
        if (s.find_first_of(",\"\n") == std::string::npos) return s;
        std::string q = "\"";
        for (char c : s) q += (c == '"') ? std::string("\"\"") : std::string(1, c);
        return q + "\"";
    };
    std::ostringstream out;
    for (std::size_t i = 0; i < t.header.size(); ++i) out << (i ? "," : "") << quote(t.header[i]);
    out << "\n";
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << quote(row[i]);
        out << "\n";
    }
    return out.str();
}

bool ReportDocument::pass() const {
    return std::all_of(sections.begin(), sections.end(), [](const ReportSection& s) { return s.pass; });
}

json ReportDocument::to_json() const {
    json secs = json::array();
    for (const auto& s : sections)
        secs.push_back({{"name", s.name}, {"pass", s.pass}, {"failures", s.failures}, {"body", s.body}});
    return {{"schema", 1},
            {"tool", "shrinkcert"},
            {"version", version()},
            {"config", shrinkcert::to_json(config)},
            {"pass", pass()},
            {"sections", secs}};
}

json ReportDocument::timings_json() const {
    json t = json::object();
    for (const auto& s : sections) t[s.name] = s.seconds;
    return {{"schema", 1}, {"seconds", t}};
}

std::vector<std::string> write_report(const ReportDocument& doc, const std::string& stem) {
    namespace fs = std::filesystem;
    const fs::path dir(doc.config.output_dir);
    fs::create_directories(dir);
    std::vector<std::string> written;
    auto put = [&](const fs::path& p, const std::string& text) {
        std::ofstream out(p, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write " + p.string());
        out << text;
        written.push_back(p.string());
    };
    const auto& f = doc.config.formats;
    if (std::find(f.begin(), f.end(), "json") != f.end()) {
        put(dir / (stem + ".json"), doc.to_json().dump(2) + "\n");
        put(dir / (stem + ".timings.json"), doc.timings_json().dump(2) + "\n");
    }
    if (std::find(f.begin(), f.end(), "csv") != f.end())
        for (const auto& t : doc.tables) put(dir / (t.name + ".csv"), to_csv(t));
    return written;
}

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

}  // namespace

ReportSection area_section(const std::vector<std::pair<std::string, CompositeSurface>>& surfaces,
                           const RunConfig& cfg) {
    const auto t0 = Clock::now();
    ReportSection sec;
    sec.name = "area";
    json records = json::array();
    for (const auto& [label, s] : surfaces) {
        const AreaResult r = area(s, cfg.quad());
        records.push_back(area_record("area", {{"label", label}, {"surface", to_json(s)}}, r));
        if (s.pieces.size() == 1 && s.deductions.empty()) {
            const AreaResult q = area_by_quadrature(s.pieces[0].piece, cfg.quad());
            AreaResult qm = q;
            qm.value *= s.pieces[0].multiplicity;
            qm.error_bound *= s.pieces[0].multiplicity;
            records.push_back(area_record("area_by_quadrature", {{"label", label}, {"surface", to_json(s)}}, qm));
            if (!q.converged) {
                sec.pass = false;
                sec.failures.push_back(label + ": quadrature did not converge");
            }
        }
        if (!r.converged) {
            sec.pass = false;
            sec.failures.push_back(label + ": area did not converge");
        }
    }
    sec.body = {{"records", records}};
    sec.seconds = since(t0);
    return sec;
}

ReportSection entropy_section(const std::vector<std::pair<std::string, CompositeSurface>>& surfaces,
                              const EntropySearch& search, const RunConfig& cfg) {
    const auto t0 = Clock::now();
    ReportSection sec;
    sec.name = "entropy";
    json records = json::array();
    for (const auto& [label, s] : surfaces) {
        const EntropyResult e = entropy(s, search, cfg.quad());
        json rec = {{"op", "entropy"}, {"inputs", {{"label", label}, {"surface", to_json(s)}}}};
        rec.update(to_json(e));
        rec["method"] = "grid+pattern_search";
        records.push_back(rec);
        if (e.boundary_warning) {
            sec.pass = false;
            sec.failures.push_back(label + ": entropy argmax on the search boundary");
        }
    }
    sec.body = {{"records", records},
                {"search",
                 {{"tau_min", search.tau_min},
                  {"tau_max", search.tau_max},
                  {"tau_points", search.tau_points},
                  {"y_min", search.y_min},
                  {"y_max", search.y_max},
                  {"y_points", search.y_points},
                  {"rounds", search.rounds},
                  {"off_axis_samples", search.off_axis_samples}}}};
    sec.seconds = since(t0);
    return sec;
}

ReportSection bounds_section(const std::vector<BoundReport>& reports) {
    ReportSection sec;
    sec.name = "verify_bounds";
    json arr = json::array();
    for (const auto& r : reports) {
        arr.push_back(to_json(r));
        if (!r.pass && !r.discrepancy) {
            sec.pass = false;
            sec.failures.push_back(r.name);
        }
    }
    int flagged = 0;
    for (const auto& r : reports) flagged += r.discrepancy ? 1 : 0;
    sec.body = {{"reports", arr}, {"discrepancies", flagged}};
    return sec;
}

ReportSection sweepout_section(const RunConfig& cfg, CsvTable* profiles) {
    const auto t0 = Clock::now();
    ReportSection sec;
    sec.name = "sweepout";
    const std::vector<double> Rs = cfg.R_grid();
    struct Cell {
        SweepoutParams p;
        std::vector<InequalityCheck> checks;
        InversionResult inv;
    };
    std::vector<Cell> cells(cfg.g_list.size() * Rs.size());
    // inversion_max_area is serial; the (g, R) matrix is spread over the workers.
    parallel_for(int(cells.size()), default_threads(), [&](int i) {
        Cell& c = cells[i];
        c.p = select_parameters(cfg.g_list[i / Rs.size()], Rs[i % Rs.size()]);
        c.checks = check_invariants(c.p);
        c.inv = inversion_max_area(c.p, cfg.t_resolution);
    });

    json runs = json::array();
    double global_max = -1.0, min_margin = std::numeric_limits<double>::infinity();
    json argmax;
    for (const auto& c : cells) {
        json checks = json::array();
        bool inv_ok = true;
        for (const auto& k : c.checks) {
            checks.push_back(to_json(k));
            inv_ok = inv_ok && k.pass;
        }
        runs.push_back({{"params", to_json(c.p)}, {"invariants", checks}, {"result", to_json(c.inv)}});
        const std::string tag = "g=" + std::to_string(c.p.g) + " R=" + format_double(c.p.R);
        if (!inv_ok) sec.failures.push_back(tag + ": parameter invariants");
        if (!c.inv.pass) sec.failures.push_back(tag + ": inversion sweepout");
        if (c.inv.max_area > global_max) {
            global_max = c.inv.max_area;
            argmax = {{"g", c.p.g}, {"R", c.p.R}, {"step", c.inv.argmax_step}, {"t", c.inv.argmax_t}};
        }
        min_margin = std::min(min_margin, c.inv.margin);
        if (profiles)
            for (const auto& s : c.inv.steps)
                for (std::size_t k = 0; k < s.t_grid.size(); ++k) {
                    std::string terms;
                    for (const auto& t : s.terms[k]) terms += (terms.empty() ? "" : ";") + t.name + "=" + format_double(t.value);
                    const double lit = s.literal_tilt_areas.empty() ? std::numeric_limits<double>::quiet_NaN()
                                                                    : s.literal_tilt_areas[k];
                    profiles->add_row({std::to_string(c.p.g), format_double(c.p.R), s.id, std::to_string(s.step),
                                       format_double(s.t_grid[k]), format_double(s.areas[k].value),
                                       format_double(s.surface_areas[k]), format_double(lit), terms});
                }
    }

    json edges = json::array();
    const int g_edge = cfg.g_list.front();
    const auto edge = edge_variant_profiles(select_parameters(g_edge, 0.2), select_parameters(g_edge, 5.0),
                                            cfg.edge_resolution);
    for (const auto& s : edge) {
        edges.push_back(to_json(s));
        if (!s.pass) sec.failures.push_back("edge variant " + s.id);
    }
    if (profiles)
        for (const auto& s : edge)
            for (std::size_t k = 0; k < s.t_grid.size(); ++k) {
                std::string terms;
                for (const auto& t : s.terms[k]) terms += (terms.empty() ? "" : ";") + t.name + "=" + format_double(t.value);
                profiles->add_row({std::to_string(g_edge), format_double(s.id.rfind("left", 0) == 0 ? 0.2 : 5.0), s.id,
                                   std::to_string(s.step), format_double(s.t_grid[k]),
                                   format_double(s.areas[k].value), format_double(s.surface_areas[k]), "nan", terms});
            }
    const SweepoutParams right = select_parameters(g_edge, 5.0);
    const double tail = 2.0 * std::exp(-25.0 / 4.0);
    const bool margin_identity = right.delta3 > tail;
    if (!margin_identity) sec.failures.push_back("delta3 > 2 e^{-25/4}");

    json squeeze = json::array();
    for (auto [l, lp] : {std::pair{2.0, 3.0}, std::pair{1.9, 2.94}})
        squeeze.push_back({{"lambda", l}, {"lambda_prime", lp}, {"gap", squeeze_translation_gap(l, lp)}});

    json rh = json::array();
    bool rh_ok = true;
    for (int g = 1; g <= 10; ++g) {
        const int a = riemann_hurwitz_genus(2, 0, 2, g), b = riemann_hurwitz_genus(1, 1, 1, g);
        const int c = riemann_hurwitz_genus(4, 0, 1, g, Admissibility::formula_only);
        bool rejected = false;
        try {
            riemann_hurwitz_genus(2, 0, 0, g);
        } catch (const std::domain_error&) {
            rejected = true;
        }
        const bool ok = a == g && b == 0 && c == g + 1 && rejected;
        rh_ok = rh_ok && ok;
        rh.push_back({{"g", g}, {"k2_0_b2", a}, {"k1_1_b1", b}, {"k4_0_b1", c}, {"k2_0_b0_rejected", rejected}, {"pass", ok}});
    }
    if (!rh_ok) sec.failures.push_back("Riemann-Hurwitz table");

    sec.pass = sec.failures.empty();
    sec.body = {{"runs", runs},
                {"global_max", encode(global_max)},
                {"global_argmax", argmax},
                {"min_margin", encode(min_margin)},
                {"edge_variants", edges},
                {"margin_identity", {{"delta3", right.delta3}, {"two_exp_minus_25_over_4", tail}, {"pass", margin_identity}}},
                {"squeeze", squeeze},
                {"riemann_hurwitz", rh}};
    sec.seconds = since(t0);
    return sec;
}

ReportSection jacobi_section(const RunConfig& cfg, CsvTable* curves) {
    const auto t0 = Clock::now();
    ReportSection sec;
    sec.name = "jacobi";
    const JacobiSolution p1{JacobiKind::phi1}, p2{JacobiKind::phi2};
    double max_res = 0.0, max_kummer_gap = 0.0;
    for (double r : linspace(0.05, 6.0, 1000)) {
        const double a = stability_residual(p1, r), b = stability_residual(p2, r);
        max_res = std::max({max_res, a, b});
        const double xi = 0.25 * r * r;
        max_kummer_gap = std::max({max_kummer_gap, std::fabs(kummer_residual(p1, xi) - a),
                                   std::fabs(kummer_residual(p2, xi) - b)});
    }
    const ZeroBracket z1 = phi1_zero(cfg.root_width), z2 = phi2_zero(cfg.root_width);
    const Phi1ShapeReport shape = verify_phi1_shape();
    const NoPositiveRadialReport npr = verify_no_positive_radial(parse_lambda_grid(cfg.lambda_grid), cfg.sign_grid_points);
    const SphereComparison sphere = sphere_profile_first_zero();

    if (!(max_res < 1e-9)) sec.failures.push_back("ODE residual above 1e-9 on [0.05, 6]");
    if (!(z2.root < z1.root)) sec.failures.push_back("r2 < r1");
    if (!shape.pass) sec.failures.push_back("phi1 shape");
    if (!npr.pass) sec.failures.push_back("no positive radial Jacobi field");
    if (!(sphere.before_equator && sphere.cos_residual < 1e-10)) sec.failures.push_back("sphere comparison");
    sec.pass = sec.failures.empty();
    sec.body = {{"max_residual_0.05_6", encode(max_res)},
                {"max_kummer_polar_gap", encode(max_kummer_gap)},
                {"r1", to_json(z1)},
                {"r2", to_json(z2)},
                {"xi1", encode(0.25 * z1.root * z1.root)},
                {"phi1_shape", to_json(shape)},
                {"no_positive_radial", to_json(npr)},
                {"sphere_comparison", to_json(sphere)}};
    if (curves)
        for (double r : linspace(0.02, 8.0, 400)) {
            curves->add_row({format_double(r), format_double(evaluate(p1, r).value), format_double(evaluate(p2, r).value),
                             format_double(stability_residual(p1, r)), format_double(stability_residual(p2, r))});
        }
    sec.seconds = since(t0);
    return sec;
}

ReportSection properties_section(const RunConfig& cfg) {
    const auto t0 = Clock::now();
    ReportSection sec;
    sec.name = "properties";
    std::mt19937_64 rng(cfg.seed);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    auto single = [](const Piece& p) {
        CompositeSurface s;
        s.pieces.push_back({p, 1, ""});
        return s;
    };
    const std::vector<double> s_grid = linspace(0.0, 3.0, 301);
    json mono = json::array();
    for (const auto& [label, surf] :
         {std::pair{std::string("sphere_R2"), single(Sphere{2.0})},
          std::pair{std::string("cylinder_sqrt2"), single(Cylinder{std::numbers::sqrt2, kInfinity})}}) {
        for (int i = 0; i < 5; ++i) {
            const std::array<double, 3> y{2.0 * u(rng) - 1.0, 0.0, 2.0 * u(rng) - 1.0};
            const double a = u(rng);
            const MonotonicityCheck m = shrinker_monotonicity_check(surf, y, a, s_grid, 1e-8, cfg.quad());
            mono.push_back({{"surface", label},
                            {"y", {y[0], y[1], y[2]}},
                            {"a", a},
                            {"max_increase", encode(m.max_increase)},
                            {"pass", m.pass}});
            if (!m.pass) sec.failures.push_back("monotonicity " + label + " draw " + std::to_string(i));
        }
    }
    int translation_pass = 0;
    double worst_slack = std::numeric_limits<double>::infinity();
    for (int i = 0; i < 100; ++i) {
        Piece piece;
        switch (i % 3) {
            case 0: {
                const double r1 = 3.0 * u(rng);
                piece = DoubledAnnulus{r1, (i % 4 == 0) ? kInfinity : r1 + 0.1 + 3.0 * u(rng), 2.0 * u(rng)};
                break;
            }
            case 1:
                piece = SphericalCaps{0.2 + 2.5 * u(rng), 1.5 * u(rng)};
                break;
            default: {
                const double r1 = 2.0 * u(rng);
                piece = DoubledCone{r1, r1 + 0.2 + 3.0 * u(rng), 1.5 * u(rng), 1.4 * u(rng)};
                break;
            }
        }
        const double h = 0.05 + 2.0 * u(rng);
        TruncationRule rule;
        rule.threshold = cfg.quad().truncation_threshold;
        const TranslationCheck t = translate_area_bound_check(upper_sheet(lower_to_profile(piece, rule)), h, cfg.quad());
        translation_pass += t.pass ? 1 : 0;
        worst_slack = std::min(worst_slack, t.slack);
        if (!t.pass) sec.failures.push_back("translation draw " + std::to_string(i) + " " + piece_type(piece));
    }
    sec.pass = sec.failures.empty();
    sec.body = {{"monotonicity", mono},
                {"translation", {{"draws", 100}, {"passed", translation_pass}, {"min_slack", encode(worst_slack)}}}};
    sec.seconds = since(t0);
    return sec;
}

}  // namespace shrinkcert
