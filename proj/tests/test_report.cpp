#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "shrinkcert/report.hpp"

using namespace shrinkcert;

namespace {

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

TEST_CASE("config parsing, flags over file, round trip") {
    const RunConfig c = parse_config(
        "# comment\n[run]\nquad_rel_tol = 1e-9\ng_list = 1, 3\nR_grid = 0.5:2:4 ; trailing\nformats = json,csv\n"
        "lambda_grid = logsym:1e-2:1e2:5\nseed = 7\n");
    CHECK(c.quad_rel_tol == 1e-9);
    CHECK(c.g_list == std::vector<int>{1, 3});
    CHECK(c.R_grid().size() == 4);
    CHECK(c.R_grid().back() == doctest::Approx(2.0));
    CHECK(c.formats.size() == 2);
    CHECK(parse_lambda_grid(c.lambda_grid).size() == 11);
    CHECK(c.seed == 7);

    CHECK(config_from_json(nlohmann::json::parse(to_json(c).dump())) == c);
    CHECK(parse_config(to_config_text(c)) == c);

    RunConfig d = c;
    set_config_value(d, "t_resolution", "17");
    CHECK(d.t_resolution == 17);
    CHECK_FALSE(d == c);

    CHECK_THROWS_AS(parse_config("bogus = 1\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_config("t_resolution = 1\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_config("quad_abs_tol = -1\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_config("formats = xml\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_config("no equals sign\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_config("t_resolution = 12x\n"), std::invalid_argument);
}

TEST_CASE("grids") {
    CHECK(parse_range("0:1:5") == std::vector<double>{0, 0.25, 0.5, 0.75, 1});
    CHECK(parse_lambda_grid("default").size() == 201);
    CHECK(parse_lambda_grid("1,2.5,-3") == std::vector<double>{1, 2.5, -3});
    CHECK_THROWS_AS(parse_range("0:1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_lambda_grid("logsym:-1:2:3"), std::invalid_argument);
}

TEST_CASE("number formatting") {
    CHECK(format_double(0.1) == "0.10000000000000001");
    CHECK(std::stod(format_double(M_PI)) == M_PI);
    CHECK(format_double(INFINITY) == "inf");
    CHECK(encode(-INFINITY) == "-inf");
    CHECK(encode(NAN).is_null());
    CsvTable t{"x", {"a", "b"}, {}};
    t.add_row({"1", "p,q"});
    CHECK(to_csv(t) == "a,b\n1,\"p,q\"\n");
    CHECK_THROWS_AS(t.add_row({"1"}), std::invalid_argument);
}

TEST_CASE("records and pass aggregation") {
    AreaResult r{1.5, 1e-12, AreaMethod::closed_form, "", true};
    const auto rec = area_record("area", {{"R", 2}}, r);
    for (const char* k : {"op", "inputs", "value", "error_bound", "method"}) CHECK(rec.contains(k));

    BoundReport ok{"a"}, flagged{"b"}, bad{"c"};
    ok.pass = true;
    flagged.discrepancy = true;
    CHECK(bounds_section({ok, flagged}).pass);
    const ReportSection s = bounds_section({ok, bad});
    CHECK_FALSE(s.pass);
    CHECK(s.failures == std::vector<std::string>{"c"});
}

TEST_CASE("written report is deterministic and versioned") {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "shrinkcert_report_test";
    fs::remove_all(dir);
    RunConfig cfg;
    cfg.output_dir = dir.string();
    cfg.formats = {"json", "csv"};
    cfg.sign_grid_points = 500;
    cfg.lambda_grid = "logsym:1e-2:1e4:7";
    std::string first;
    for (int run = 0; run < 2; ++run) {
        ReportDocument doc;
        doc.config = cfg;
        CsvTable curves{"curves", {"r", "phi1", "phi2", "residual_phi1", "residual_phi2"}, {}};
        doc.sections.push_back(jacobi_section(cfg, &curves));
        doc.sections.push_back(properties_section(cfg));
        doc.tables.push_back(curves);
        const auto files = write_report(doc);
        CHECK(files.size() == 3);
        const std::string text = slurp(dir / "report.json");
        if (run == 0) first = text;
        else CHECK(text == first);
        CHECK(doc.pass());
    }
    const auto j = nlohmann::json::parse(first);
    CHECK(j.at("schema") == 1);
    CHECK(j.at("version") == version());
    CHECK(config_from_json(j.at("config")) == cfg);
    CHECK(fs::exists(dir / "report.timings.json"));
    CHECK(slurp(dir / "curves.csv").rfind("r,phi1,phi2,residual_phi1,residual_phi2\n", 0) == 0);
    fs::remove_all(dir);
}
