#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "bdes/cli.hpp"

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "bdes");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = bdes::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string temp_config(const std::string& body) {
    auto path = std::filesystem::temp_directory_path() / ("bdes_cfg_" + std::to_string(std::hash<std::string>{}(body)) + ".json");
    std::ofstream(path) << body;
    return path.string();
}

using nlohmann::json;

}  // namespace

TEST(Cli, TableText) {
    auto r = run({"table", "--patterns", "231", "--n", "8"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "128 672 560 70 0 0 0 0 0\n");
    EXPECT_EQ(run({"table", "--patterns", "", "--n", "4"}).out, "8 14 2 0 0\n");
    EXPECT_EQ(run({"table", "--patterns", "132", "--n", "5", "--stat", "des"}).out, "1 10 20 10 1 0\n");
}

TEST(Cli, TableFormats) {
    auto j = json::parse(run({"--format", "json", "table", "--patterns", "231", "--n", "4"}).out);
    EXPECT_EQ(j["patterns"], "231");
    EXPECT_EQ(j["n"], 4);
    EXPECT_EQ(j["stat"], "bdes");
    EXPECT_EQ(j["counts"], json::array({8, 6, 0, 0, 0}));
    EXPECT_EQ(run({"--format", "tsv", "table", "--patterns", "231", "--n", "2"}).out, "k\tcount\n0\t2\n1\t0\n2\t0\n");
    EXPECT_EQ(run({"--format", "bfile", "table", "--patterns", "231", "--n", "3"}).out, "0 1\n1 1\n2 2\n3 4\n4 1\n");
    EXPECT_EQ(run({"--format", "bfile", "table", "--patterns", "231", "--n", "1", "--offset", "5"}).out, "5 1\n6 1\n");
}

TEST(Cli, Series) {
    auto r = run({"series", "--id", "R_run", "--r", "2", "--order", "5"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "0: 1\n1: 2\n2: 3+t\n3: 5+3t\n4: 8+8t\n5: 13+18t+t^2\n");
    EXPECT_EQ(run({"series", "--id", "W1_words", "--order", "8", "--route", "both"}).code, 0);
    EXPECT_EQ(run({"series", "--id", "B321", "--route", "both"}).code, 2);
    auto j = json::parse(run({"--format", "json", "series", "--id", "B132", "--order", "5"}).out);
    EXPECT_EQ(j["id"], "B132");
    EXPECT_EQ(j["rows"][5]["poly"], "5+25t+12t^2");
}

TEST(Cli, Bijection) {
    EXPECT_EQ(run({"bijection", "--id", "chi", "--input", "2413756"}).out, "UUDUUDDDUUUDDD\n");
    EXPECT_EQ(run({"bijection", "--id", "chi", "--input", "UUDUUDDDUUUDDD", "--inverse"}).out, "2413756\n");
    auto bad = run({"bijection", "--id", "omega_f", "--input", "2413"});
    EXPECT_EQ(bad.code, 2);
    EXPECT_FALSE(bad.err.empty());
}

TEST(Cli, Qsym) {
    EXPECT_EQ(run({"qsym", "--patterns", "123", "--n", "5"}).out, "s(2,2,1)+4s(3,2)+3s(4,1)+5s(5)\n");
    auto r = run({"qsym", "--patterns", "231", "--n", "3"});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.err.find("not symmetric"), std::string::npos);
    auto m = run({"qsym", "--patterns", "231", "--n", "3", "--basis", "monomial"});
    EXPECT_EQ(m.code, 0);
    EXPECT_EQ(m.out.rfind("symmetry=false\n", 0), 0u);
    EXPECT_EQ(run({"qsym", "--patterns", "123", "--n", "9"}).code, 3);
    EXPECT_EQ(run({"--qsym-max-n", "9", "qsym", "--patterns", "123", "--n", "3"}).code, 0);
}

TEST(Cli, Formula) {
    EXPECT_EQ(run({"formula", "--id", "b231", "--n", "7", "--k", "3"}).out, "5\n");
    EXPECT_EQ(run({"formula", "--id", "narayana", "--n", "4"}).out, "1 6 6 1 0\n");
    EXPECT_EQ(run({"formula", "--id", "b231_joint", "--n", "5", "--j", "2", "--k", "1"}).out, "12\n");
    EXPECT_EQ(run({"formula", "--id", "eulerian_r", "--n", "3", "--r", "0"}).out, "1 4 1\n");
    EXPECT_EQ(run({"formula", "--id", "carlitz_lhs_coeff", "--n", "2", "--r", "1", "--k", "0"}).out, "2\n");
}

TEST(Cli, VerifyAndConjecture) {
    auto v = run({"verify", "--scope", "bijections", "--max-n", "5"});
    EXPECT_EQ(v.code, 0);
    EXPECT_NE(v.out.find("checks passed"), std::string::npos);
    auto j = json::parse(run({"--format", "json", "verify", "--scope", "formulas", "--max-n", "6"}).out);
    ASSERT_TRUE(j["checks"].is_array());
    for (const auto& c : j["checks"]) {
        EXPECT_TRUE(c.contains("name") && c.contains("n") && c.contains("population") && c.contains("pass"));
        EXPECT_TRUE(c["pass"].get<bool>()) << c.dump();
    }
    EXPECT_EQ(run({"conjecture", "--which", "log-concave", "--max-n", "8"}).code, 0);
    auto rr = run({"--format", "json", "conjecture", "--which", "real-rooted", "--max-n", "6"});
    EXPECT_EQ(rr.code, 1);
    EXPECT_FALSE(json::parse(rr.out)["prediction_holds"].get<bool>());
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run({"table", "--patterns", "12a", "--n", "3"}).code, 2);
    EXPECT_EQ(run({"table", "--n", "3"}).code, 2);
    EXPECT_EQ(run({"--precision", "float", "table", "--patterns", "123", "--n", "3"}).code, 2);
    auto g = run({"table", "--patterns", "", "--n", "12"});
    EXPECT_EQ(g.code, 3);
    EXPECT_NE(g.err.find("max_n_unrestricted"), std::string::npos);
    EXPECT_EQ(run({"--max-n-unrestricted", "3", "table", "--patterns", "", "--n", "4"}).code, 3);
    EXPECT_EQ(run({"bogus"}).code, 2);
    EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, ConfigFile) {
    auto ok = temp_config(R"({"guards":{"max_n_unrestricted":4},"order":3,"precision":"exact"})");
    EXPECT_EQ(run({"--config", ok, "table", "--patterns", "", "--n", "5"}).code, 3);
    EXPECT_EQ(run({"--config", ok, "series", "--id", "B132"}).out, "0: 1\n1: 1\n2: 2\n3: 3+2t\n");
    auto unknown = temp_config(R"({"colour":"blue"})");
    EXPECT_EQ(run({"--config", unknown, "table", "--patterns", "", "--n", "2"}).code, 2);
    auto prec = temp_config(R"({"precision":"double"})");
    EXPECT_EQ(run({"--config", prec, "table", "--patterns", "", "--n", "2"}).code, 2);
    EXPECT_EQ(run({"--config", "/nonexistent/cfg.json", "table", "--patterns", "", "--n", "2"}).code, 2);
    std::filesystem::remove(ok);
    std::filesystem::remove(unknown);
    std::filesystem::remove(prec);
}

TEST(Cli, Deterministic) {
    const std::vector<std::string> args{"--format", "json", "conjecture", "--which", "unimodal", "--max-n", "7"};
    EXPECT_EQ(run(args).out, run(args).out);
}
