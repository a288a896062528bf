#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "schubert/report.hpp"

using namespace schubert;

namespace {

std::string data_dir() {
    if (const char* env = std::getenv("SCHUBERT_DATA_DIR")) return env;
    return "data";
}

ReportOptions options(bool as_json) {
    ReportOptions opt;
    opt.as_json = as_json;
    opt.data_dir = data_dir();
    return opt;
}

} // namespace

TEST_CASE("chern-matrices report carries the top-entry annotation") {
    auto text = reproduce("chern-matrices", options(true));
    json doc = json::parse(text);
    CHECK(doc.at("schema_version") == 1);
    REQUIRE(doc.at("matrices").size() == 3);

    const auto& gr = doc["matrices"][0];
    CHECK(gr.at("name") == "gr:2,5");
    REQUIRE(gr.at("annotations").size() == 1);
    const auto& note = gr["annotations"][0];
    CHECK(note.at("row") == 3);
    CHECK(note.at("col") == 3);
    CHECK(note.at("computed") == 10);
    CHECK(note.at("reference") == 33);

    // every cell carries provenance
    for (const auto& matrix : doc["matrices"])
        for (const auto& cell : matrix.at("cells"))
            CHECK_FALSE(cell.at("provenance").get<std::string>().empty());

    // masks mirror the reference tables cell for cell
    auto masked_cells = [](const json& matrix) {
        std::vector<std::pair<int, int>> out;
        for (const auto& cell : matrix.at("cells"))
            if (cell.at("masked").get<bool>())
                out.emplace_back(cell.at("row").get<int>(), cell.at("col").get<int>());
        return out;
    };
    const auto& v2 = doc["matrices"][1];
    CHECK(v2.at("name") == "V2");
    CHECK(masked_cells(v2) == std::vector<std::pair<int, int>>{{3, 2}, {3, 3}});
    const auto& v3 = doc["matrices"][2];
    CHECK(masked_cells(v3) ==
          std::vector<std::pair<int, int>>{{2, 2}, {3, 1}, {3, 2}, {3, 3}});
    CHECK(masked_cells(doc["matrices"][0]).empty());

    auto md = reproduce("chern-matrices", options(false));
    CHECK(md.find(" *") != std::string::npos);
    CHECK(md.find("annotation: entry (3,3) computed 10") != std::string::npos);
}

TEST_CASE("table1 report rows") {
    auto text = reproduce("table1", options(true));
    json doc = json::parse(text);
    REQUIRE(doc.at("rows").size() == 8);

    auto row = [&](const std::string& name) -> const json& {
        for (const auto& r : doc["rows"])
            if (r.at("name") == name) return r;
        FAIL("missing row " + name);
        return doc;
    };

    for (int m = 2; m <= 5; ++m) {
        const auto& r = row("X3(" + std::to_string(m) + "," + std::to_string(m - 1) + ")");
        CHECK(r.at("defect") == 0);
        CHECK(r.at("codegree") == m + 1);
    }
    CHECK(row("V2").at("codegree") == 4);
    CHECK(row("S1a").at("defect") == 1);
    CHECK(row("S1a").at("codegree").is_null());
    CHECK(row("S1a").at("defective") == true);
    CHECK(row("S2a").at("codegree") == 5);
    CHECK(row("S3a").at("codegree") == 10);

    for (const auto& r : doc["rows"])
        CHECK_FALSE(r.at("provenance").get<std::string>().empty());

    // a defective row renders as an em dash, not a number
    auto md = reproduce("table1", options(false));
    CHECK(md.find("| S1a | V_1 in P^8 | |O(1)| | 1 | — |") != std::string::npos);
}

TEST_CASE("knop and slope reports evaluate the registry") {
    auto knop = reproduce("knop-examples", options(true));
    json kdoc = json::parse(knop);
    CHECK(kdoc.at("examples").size() >= 5);
    CHECK(kdoc.at("divisor_checks").size() >= 2);
    bool saw_quintic = false;
    for (const auto& e : kdoc["examples"])
        if (e.at("name") == "quintic-del-pezzo") {
            saw_quintic = true;
            CHECK(e.at("moment_dim") == 3);
        }
    CHECK(saw_quintic);

    auto slopes = reproduce("slopes", options(true));
    json sdoc = json::parse(slopes);
    bool saw_m2 = false;
    for (const auto& r : sdoc["rows"])
        if (r.at("name") == "odd-lagrangian-m2") {
            saw_m2 = true;
            CHECK(r.at("slope") == "1/6");
            CHECK(r.at("big") == true);
        }
    CHECK(saw_m2);
}

TEST_CASE("reports are byte-identical across runs") {
    for (const std::string target : {"chern-matrices", "table1", "knop-examples", "slopes"}) {
        CHECK(reproduce(target, options(true)) == reproduce(target, options(true)));
        CHECK(reproduce(target, options(false)) == reproduce(target, options(false)));
    }
}

TEST_CASE("unknown target and missing data files") {
    CHECK_THROWS_AS(reproduce("everything", options(false)), invalid_input);
    ReportOptions opt = options(false);
    opt.data_dir = "no-such-directory";
    CHECK_THROWS_AS(reproduce("chern-matrices", opt), invalid_input);
    CHECK_THROWS_AS(reproduce("knop-examples", opt), invalid_input);
}

TEST_CASE("an empty erratum file turns the known discrepancy into a regression") {
    namespace fs = std::filesystem;
    fs::path scratch = fs::path("report_scratch_unit");
    fs::create_directories(scratch);
    {
        std::ofstream out(scratch / "errata.json");
        out << R"({"schema_version":1,"entries":[]})";
    }
    ReportOptions opt = options(false);
    opt.data_dir = scratch.string();
    CHECK_THROWS_AS(reproduce_chern_matrices(opt), anchor_regression);
    fs::remove_all(scratch);
}

TEST_CASE("a registry with a wrong expectation fails as a regression") {
    namespace fs = std::filesystem;
    fs::path scratch = fs::path("report_scratch_registry");
    fs::create_directories(scratch);
    {
        std::ofstream out(scratch / "registry.json");
        out << R"({"schema_version":1,
                   "knop_examples":[{"name":"bad","dim":3,"complexity":1,"rank":1,
                     "source":"test","expected_moment_dim":4}],
                   "divisor_checks":[],
                   "slopes":[]})";
    }
    ReportOptions opt = options(false);
    opt.data_dir = scratch.string();
    CHECK_THROWS_AS(reproduce_knop_examples(opt), anchor_regression);
    fs::remove_all(scratch);
}
