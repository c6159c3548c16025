#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "mixdimer_cli.hpp"

using namespace mixdimer;
using mixdimer::cli::run_cli;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

Table csv_of(const std::string& text) {
    std::istringstream is(text);
    return read_csv(is);
}

Table json_of(const std::string& text) { return table_from_json(nlohmann::json::parse(text)); }

double num(const Cell& c) { return std::get<double>(c); }

void expect_same_values(const Table& a, const Table& b) {
    ASSERT_EQ(a.columns, b.columns);
    ASSERT_EQ(a.rows.size(), b.rows.size());
    for (std::size_t r = 0; r < a.rows.size(); ++r)
        for (std::size_t c = 0; c < a.columns.size(); ++c) {
            if (std::holds_alternative<std::string>(a.rows[r][c])) {
                EXPECT_EQ(a.rows[r][c], b.rows[r][c]);
            } else {
                EXPECT_NEAR(num(a.rows[r][c]), num(b.rows[r][c]), 1e-15);
            }
        }
}

class TempDir {
public:
    TempDir() {
        path_ = std::filesystem::temp_directory_path() /
                ("mixdimer_cli_" + std::to_string(reinterpret_cast<std::uintptr_t>(this)) + "_" +
                 ::testing::UnitTest::GetInstance()->current_test_info()->name());
        std::filesystem::create_directories(path_);
    }
    ~TempDir() { std::filesystem::remove_all(path_); }
    std::string file(const std::string& name) const { return (path_ / name).string(); }

private:
    std::filesystem::path path_;
};

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

} // namespace

TEST(Cli, SpectrumRoundTrip) {
    const auto r = run({"spectrum", "--b", "0.4", "--e", "0.7", "--d-anis", "-0.3", "--g2", "1.1"});
    ASSERT_EQ(r.code, 0) << r.err;
    const Table t = csv_of(r.out);
    const Spectrum s = analytic_spectrum({1.0, 1.0, -0.3, 2.0, 1.1, 1.0}, {0.4, 0.7});
    ASSERT_EQ(t.rows.size(), 6u);
    for (std::size_t i = 0; i < 6; ++i) EXPECT_NEAR(num(t.rows[i][2]), s.eps[i], 1e-12);
    EXPECT_NEAR(num(t.rows[2][3]), s.c1_plus, 1e-12);
    EXPECT_NEAR(num(t.rows[4][4]), s.c2_minus, 1e-12);
    EXPECT_NEAR(num(t.rows[2][5]), s.phi, 1e-12);
}

TEST(Cli, SpectrumZeroFieldDefaults) {
    const auto r = run({"spectrum", "--format", "json"});
    ASSERT_EQ(r.code, 0);
    const Table t = json_of(r.out);
    EXPECT_EQ(num(t.rows[2][2]), -1.0);
    EXPECT_EQ(num(t.rows[4][2]), -1.0);
    for (const auto& row : t.rows) EXPECT_EQ(num(row[5]), 0.0);
}

TEST(Cli, CsvAndJsonAgree) {
    for (const std::vector<std::string>& base :
         {std::vector<std::string>{"thermo", "--axis", "e", "--e-range", "0:3:31", "--b", "0.5", "--t", "0.05,0.5"},
          std::vector<std::string>{"entropy-map", "--b-range", "0:2:21", "--t-range", "0.01:2:17", "--d-anis", "-1"},
          std::vector<std::string>{"delta-s", "--mode", "e", "--span-range", "0:2:11", "--t-range", "0.05:2:9"},
          std::vector<std::string>{"isentrope", "--levels", "ln2,0.3", "--b-range", "0:2:21"},
          std::vector<std::string>{"rc", "--span-range", "0.8:2:5", "--t-range", "0.01:3:200"},
          std::vector<std::string>{"spectrum", "--b", "1.1", "--e", "0.2"}}) {
        auto csv_args = base;
        auto json_args = base;
        json_args.insert(json_args.end(), {"--format", "json"});
        const auto c = run(csv_args);
        const auto j = run(json_args);
        ASSERT_EQ(c.code, 0) << c.err;
        ASSERT_EQ(j.code, 0) << j.err;
        const auto parsed = nlohmann::json::parse(j.out);
        Table jt;
        if (parsed.contains("grid"))
            jt = table_from_json(parsed.at("grid"));
        else if (parsed.contains("isentropes"))
            jt = table_from_json(parsed.at("isentropes"));
        else
            jt = table_from_json(parsed);
        expect_same_values(csv_of(c.out), jt);
    }
}

TEST(Cli, ThermoPolarizationZeroWithoutElectricField) {
    const auto r = run({"thermo", "--b-range", "0:3:31", "--t", "0.01"});
    ASSERT_EQ(r.code, 0);
    const Table t = csv_of(r.out);
    EXPECT_EQ(t.columns[4], "p_over_mu");
    for (const auto& row : t.rows) EXPECT_EQ(num(row[4]), 0.0);
    EXPECT_NEAR(num(t.rows[3][3]), 1.0 / 3.0, 1e-6);
}

TEST(Cli, ThermoMagnetizationMinimumNearElectricCrossing) {
    const auto r = run({"thermo", "--axis", "e", "--e-range", "0:2:201", "--b", "0.5", "--g2", "0.8", "--d-anis",
                        "-1", "--t", "0.01"});
    ASSERT_EQ(r.code, 0);
    const Table t = csv_of(r.out);
    std::size_t best = 0;
    for (std::size_t i = 0; i < t.rows.size(); ++i)
        if (num(t.rows[i][3]) < num(t.rows[best][3])) best = i;
    EXPECT_GT(best, 0u);
    EXPECT_LT(best + 1, t.rows.size());
}

TEST(Cli, PhaseDiagramLabelsAndBoundaryFile) {
    TempDir dir;
    const std::string out = dir.file("pd.csv");
    auto r = run({"phase-diagram", "--e-range", "0:2:41", "--b-range", "0:3:61", "--out", out});
    ASSERT_EQ(r.code, 0) << r.err;
    std::set<std::string> labels;
    for (const auto& row : csv_of(slurp(out)).rows) {
        const auto& name = std::get<std::string>(row[2]);
        if (name.find('|') == std::string::npos) labels.insert(name);
    }
    EXPECT_EQ(labels, (std::set<std::string>{"F+", "QF+"}));
    const Table bounds = csv_of(slurp(dir.file("pd.boundaries.csv")));
    EXPECT_EQ(bounds.columns, (std::vector<std::string>{"boundary", "segment", "e_over_J", "b_over_J"}));
    EXPECT_FALSE(bounds.rows.empty());

    r = run({"phase-diagram", "--e-range", "0:2:41", "--b-range", "0:3:61", "--g2", "0.8", "--d-anis", "-1",
             "--format", "json"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(nlohmann::json::parse(r.out).at("phases").size(), 3u);
}

TEST(Cli, SvgIsByteIdentical) {
    TempDir dir;
    for (const std::string cmd : {"entropy-map", "phase-diagram", "delta-s", "thermo", "isentrope", "rc"}) {
        std::vector<std::string> common{cmd, "--format", "svg", "--t-range", "0.01:2:40", "--b-range", "0:2:40",
                                        "--e-range", "0:2:30", "--span-range", "0.5:2:6"};
        auto a = common;
        a.insert(a.end(), {"--out", dir.file("a.svg"), "--threads", "1"});
        auto b = common;
        b.insert(b.end(), {"--out", dir.file("b.svg"), "--threads", "4"});
        ASSERT_EQ(run(a).code, 0) << cmd;
        ASSERT_EQ(run(b).code, 0) << cmd;
        const std::string sa = slurp(dir.file("a.svg"));
        EXPECT_FALSE(sa.empty());
        EXPECT_EQ(sa, slurp(dir.file("b.svg"))) << cmd;
    }
}

TEST(Cli, OutputIndependentOfThreads) {
    const auto a = run({"entropy-map", "--b-range", "0:3:40", "--t-range", "0.01:2:50", "--threads", "1"});
    const auto b = run({"entropy-map", "--b-range", "0:3:40", "--t-range", "0.01:2:50", "--threads", "5"});
    ASSERT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
}

TEST(Cli, RcFixedUpperLimit) {
    const auto a = run({"rc", "--span-range", "1.2:2:3", "--t-range", "0.01:3:300"});
    const auto b = run({"rc", "--span-range", "1.2:2:3", "--t-range", "0.01:3:300", "--fixed-t2", "2.8"});
    ASSERT_EQ(a.code, 0);
    ASSERT_EQ(b.code, 0) << b.err;
    const Table ta = csv_of(a.out), tb = csv_of(b.out);
    for (std::size_t i = 0; i < ta.rows.size(); ++i) {
        EXPECT_EQ(num(tb.rows[i][4]), 2.8);
        EXPECT_GE(num(tb.rows[i][2]), num(ta.rows[i][2]));
    }
    EXPECT_EQ(run({"rc", "--t-range", "0.01:3:300", "--fixed-t2", "5"}).code, 2);
}

TEST(Cli, IsentropeLevelsAcceptLogTokens) {
    const auto r = run({"isentrope", "--levels", "ln2", "--b-range", "0.1:1:10"});
    ASSERT_EQ(r.code, 0);
    const Table t = csv_of(r.out);
    for (const auto& row : t.rows) EXPECT_EQ(num(row[0]), std::log(2.0));
    EXPECT_EQ(run({"isentrope", "--levels", "lnx"}).code, 2);
    EXPECT_EQ(run({"isentrope", "--levels", "2.5"}).code, 2);
}

TEST(Cli, Validate) {
    auto r = run({"validate", "--sample", "200", "--thermo-sample", "40"});
    EXPECT_EQ(r.code, 0) << r.out;
    r = run({"validate", "--sample", "100", "--thermo-sample", "20", "--tol", "1e-15"});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.out.find("fail"), std::string::npos);
    r = run({"validate", "--sample", "10", "--format", "json"});
    ASSERT_EQ(r.code, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_TRUE(j.at("passed").get<bool>());
    for (const auto& c : j.at("checks"))
        if (c.at("name") == "spectrum_vs_eigensolver") {
            EXPECT_EQ(c.at("deviations").size(), 10u);
        }
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({"thermo", "--b-range", "1:0:5"}).code, 2);
    EXPECT_EQ(run({"thermo", "--b-range", "0:1"}).code, 2);
    EXPECT_EQ(run({"thermo", "--b-range", "0:1:1"}).code, 2);
    EXPECT_EQ(run({"thermo", "--format", "xml"}).code, 2);
    EXPECT_EQ(run({"thermo", "--axis", "z"}).code, 2);
    EXPECT_EQ(run({"thermo", "--t", "0"}).code, 2);
    EXPECT_EQ(run({"spectrum", "--j", "-1"}).code, 2);
    EXPECT_EQ(run({"spectrum", "--b", "-1"}).code, 2);
    EXPECT_EQ(run({"spectrum", "--format", "svg"}).code, 2);
    EXPECT_EQ(run({"spectrum", "--config", "/nonexistent/file.json"}).code, 2);
    EXPECT_EQ(run({"rc", "--effect", "sideways"}).code, 2);
    const auto r = run({"thermo", "--b-range", "x:1:5"});
    EXPECT_NE(r.err.find("--b-range"), std::string::npos);
}

TEST(Cli, Help) {
    const auto r = run({"--help"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("phase-diagram"), std::string::npos);
}

TEST(Cli, ConfigFileWithFlagOverride) {
    TempDir dir;
    const std::string cfg = dir.file("cfg.json");
    std::ofstream(cfg) << R"({"g2": 0.8, "d_anis": -1.0, "b": 0.5, "e": 0.25})";
    auto r = run({"spectrum", "--config", cfg});
    ASSERT_EQ(r.code, 0) << r.err;
    const Spectrum s = analytic_spectrum({1.0, 1.0, -1.0, 2.0, 0.8, 1.0}, {0.5, 0.25});
    EXPECT_NEAR(num(csv_of(r.out).rows[4][2]), s.eps[4], 1e-12);
    r = run({"spectrum", "--config", cfg, "--b", "1.5"});
    const Spectrum s2 = analytic_spectrum({1.0, 1.0, -1.0, 2.0, 0.8, 1.0}, {1.5, 0.25});
    EXPECT_NEAR(num(csv_of(r.out).rows[0][2]), s2.eps[0], 1e-12);

    std::ofstream(cfg) << R"({"bogus": 1})";
    EXPECT_EQ(run({"spectrum", "--config", cfg}).code, 2);
    std::ofstream(cfg) << R"({"g2": "heavy"})";
    EXPECT_EQ(run({"spectrum", "--config", cfg}).code, 2);
    std::ofstream(cfg) << "{not json";
    EXPECT_EQ(run({"spectrum", "--config", cfg}).code, 2);
}

TEST(Cli, ParseRange) {
    const auto r = cli::parse_range("0.5:2:7", "--b-range");
    EXPECT_EQ(r.lo, 0.5);
    EXPECT_EQ(r.hi, 2.0);
    EXPECT_EQ(r.n, 7u);
    EXPECT_THROW(cli::parse_range("0.5:2:7:1", "--b-range"), cli::UsageError);
    EXPECT_THROW(cli::parse_range("0.5:2:-3", "--b-range"), cli::UsageError);
    EXPECT_THROW(cli::parse_range("a:2:3", "--b-range"), cli::UsageError);
    EXPECT_NEAR(cli::parse_level("ln3"), std::log(3.0), 1e-15);
    EXPECT_EQ(cli::parse_level("0.25"), 0.25);
}
