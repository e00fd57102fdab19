#include <gtest/gtest.h>

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "kplex/cli.hpp"
#include "kplex/io.hpp"
#include "support.hpp"

namespace {

std::string write_file(const std::string& name, const std::string& text) {
    const std::string path = std::string(KPLEX_TEST_TMPDIR) + "/" + name;
    std::ofstream(path) << text;
    return path;
}

struct Run {
    int code;
    std::string out, err;
};

Run run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = kplex::run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

const std::string kK5 = "10 11\n10 12\n10 13\n10 14\n11 12\n11 13\n11 14\n12 13\n12 14\n13 14\n";

}  // namespace

TEST(Cli, OracleOnK5) {
    const auto path = write_file("k5.txt", kK5);
    const auto r = run({"--graph", path, "--k", "2", "--mode", "oracle", "--quiet"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "5\n10 11 12 13 14\n");
    EXPECT_TRUE(r.err.empty());
}

TEST(Cli, KBelowTwoIsAFlagError) {
    const auto path = write_file("k5.txt", kK5);
    EXPECT_EQ(run({"--graph", path, "--k", "1"}).code, kplex::kExitInvalidFlags);
    EXPECT_EQ(run({"--graph", path, "--k", "x"}).code, kplex::kExitInvalidFlags);
    EXPECT_EQ(run({"--graph", path, "--k", "2", "--mode", "fast"}).code, kplex::kExitInvalidFlags);
    EXPECT_EQ(run({"--k", "2"}).code, kplex::kExitInvalidFlags);
    EXPECT_EQ(run({"--graph", path, "--k", "2", "--time-limit", "-1"}).code, kplex::kExitInvalidFlags);
}

TEST(Cli, Help) {
    const auto r = run({"--help"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("--graph"), std::string::npos);
}

TEST(Cli, ParseFailure) {
    const auto path = write_file("bad.txt", "0 1\nfoo bar\n");
    const auto r = run({"--graph", path, "--k", "2"});
    EXPECT_EQ(r.code, kplex::kExitParseFailure);
    EXPECT_NE(r.err.find("line 2"), std::string::npos);
    EXPECT_EQ(run({"--graph", std::string(KPLEX_TEST_TMPDIR) + "/missing.txt", "--k", "2"}).code,
              kplex::kExitParseFailure);
}

TEST(Cli, OracleRefusesLargeGraphs) {
    std::string text;
    for (int i = 0; i < 30; ++i) text += std::to_string(i) + " " + std::to_string((i + 1) % 30) + "\n";
    const auto path = write_file("c30.txt", text);
    EXPECT_EQ(run({"--graph", path, "--k", "2", "--mode", "oracle"}).code, kplex::kExitTooLarge);
}

TEST(Cli, NoneStatusExitsZero) {
    const auto path = write_file("p4.txt", "0 1\n1 2\n2 3\n");
    const auto r = run({"--graph", path, "--k", "3"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "0\n\n");
    EXPECT_NE(r.err.find("status=none"), std::string::npos);
}

TEST(Cli, ReportsAgreeAcrossModes) {
    const auto path = write_file("dimacs.clq",
                                 "p edge 7 15\ne 1 2\ne 1 3\ne 1 4\ne 2 3\ne 2 4\ne 3 4\ne 4 5\ne 5 6\ne 5 7\n"
                                 "e 6 7\ne 1 5\ne 2 6\ne 3 7\ne 4 6\ne 4 7\n");
    std::vector<nlohmann::json> reports;
    for (const std::string mode : {"exact-altrb", "exact-seqrb"}) {
        const auto stats = std::string(KPLEX_TEST_TMPDIR) + "/stats-" + mode + ".json";
        const auto r = run({"--graph", path, "--k", "2", "--mode", mode, "--stats-json", stats, "--quiet"});
        ASSERT_EQ(r.code, 0);
        reports.push_back(nlohmann::json::parse(std::ifstream(stats)));
    }
    EXPECT_EQ(reports[0]["size"], reports[1]["size"]);
    EXPECT_EQ(reports[0]["status"], "found");
    EXPECT_EQ(reports[0]["mode"], "exact-altrb");
    EXPECT_EQ(reports[1]["mode"], "exact-seqrb");
}

TEST(Cli, ReportKeyOrderIsStable) {
    const auto path = write_file("k5b.txt", kK5);
    const auto stats = std::string(KPLEX_TEST_TMPDIR) + "/stats-order.json";
    ASSERT_EQ(run({"--graph", path, "--k", "2", "--stats-json", stats, "--quiet"}).code, 0);
    const auto j = nlohmann::ordered_json::parse(std::ifstream(stats));
    const std::vector<std::string> leading = {"n", "m", "k", "mode", "status", "size", "branches", "mean_r",
                                              "lb_initial", "lb_final", "t_heuristic_ms", "t_reduce_ms",
                                              "t_search_ms", "t_total_ms"};
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
    ASSERT_GE(keys.size(), leading.size());
    EXPECT_EQ(std::vector<std::string>(keys.begin(), keys.begin() + static_cast<std::ptrdiff_t>(leading.size())), leading);
    EXPECT_EQ(j["n"], 5);
    EXPECT_EQ(j["witness"], nlohmann::json::array({10, 11, 12, 13, 14}));
}

TEST(Cli, UnwritableStatsPath) {
    const auto path = write_file("k5c.txt", kK5);
    EXPECT_EQ(run({"--graph", path, "--k", "2", "--stats-json", "/nonexistent/dir/s.json"}).code, kplex::kExitIoFailure);
}

TEST(Cli, TimeoutHasItsOwnExitCode) {
    std::ostringstream text;
    kplex::write_edge_list(text, kplex::testing::johnson8_4_4());
    const auto path = write_file("johnson8-4-4.txt", text.str());
    const auto r = run({"--graph", path, "--k", "4", "--time-limit", "0.000001"});
    EXPECT_EQ(r.code, kplex::kExitTimeout);
    EXPECT_NE(r.err.find("status=timeout"), std::string::npos);
}
