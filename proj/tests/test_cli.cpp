#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>
#include <json.hpp>

#include "cli_runner.hpp"
#include "hankel_lab/text.hpp"

using nlohmann::json;

namespace {

std::vector<std::string> lines(const std::string& s)
{
    std::vector<std::string> out;
    std::istringstream in(s);
    for (std::string l; std::getline(in, l);) {
        out.push_back(l);
    }
    return out;
}

std::vector<std::string> fields(const std::string& row)
{
    std::vector<std::string> out;
    std::string cur;
    for (char ch : row) {
        if (ch == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

} // namespace

TEST(CliBound, InRegionCorner)
{
    const auto r = cli::run("bound --alpha 0.2 --gamma 0.62 --json");
    ASSERT_EQ(r.exit_code, 0);
    const json j = json::parse(r.out);
    EXPECT_NEAR(j["bound"].get<double>(), 0.47456790, 1e-8);
    EXPECT_TRUE(j["in_region"].get<bool>());
    EXPECT_EQ(j["intermediates"]["A"].get<double>(), 0.0);

    const auto text = cli::run("bound --alpha 0.2 --gamma 0.62");
    ASSERT_EQ(text.exit_code, 0);
    EXPECT_NE(text.out.find(hankel_lab::format_real(j["bound"].get<double>())), std::string::npos);
}

TEST(CliBound, OutsideRegionAndBadInput)
{
    const auto r = cli::run("--json bound --alpha 0.5 --gamma 0.2");
    ASSERT_EQ(r.exit_code, 0);
    EXPECT_FALSE(json::parse(r.out)["in_region"].get<bool>());

    EXPECT_EQ(cli::run("bound --alpha 1.5 --gamma 0.5").exit_code, 2);
    EXPECT_EQ(cli::run("bound --alpha 0.5 --gamma 0").exit_code, 2);
    EXPECT_EQ(cli::run("bound --alpha abc --gamma 0.5").exit_code, 2);
    EXPECT_EQ(cli::run("bound --alpha 0.5").exit_code, 2);
    EXPECT_EQ(cli::run("frobnicate").exit_code, 2);
    EXPECT_EQ(cli::run("").exit_code, 2);
}

TEST(CliCoeffs, ExtremalTriple)
{
    const auto r = cli::run("coeffs --alpha 0.3 --gamma 0.4 --c 0,1,0 --json");
    ASSERT_EQ(r.exit_code, 0);
    const json j = json::parse(r.out);
    EXPECT_NEAR(j["closed_form"]["a3"][0].get<double>(), 0.470588, 1e-6);
    EXPECT_NEAR(j["h22"][0].get<double>(), -0.221453, 1e-6);
    EXPECT_LE(j["max_discrepancy"].get<double>(), 1e-12);
}

TEST(CliCoeffs, ZerosComplexAndInadmissible)
{
    const auto z = cli::run("coeffs --alpha 0.3 --gamma 0.4 --c 0,0,0 --json");
    ASSERT_EQ(z.exit_code, 0);
    const json j = json::parse(z.out);
    for (const char* k : {"a2", "a3", "a4"}) {
        EXPECT_EQ(j["closed_form"][k][0].get<double>(), 0.0);
        EXPECT_EQ(j["solver"][k][1].get<double>(), 0.0);
    }

    const auto c = cli::run("coeffs --alpha 0.3 --gamma 0.4 --c 0.1+0.2i,0.3-0.1i,0.05i --json");
    ASSERT_EQ(c.exit_code, 0);
    EXPECT_LE(json::parse(c.out)["max_discrepancy"].get<double>(), 1e-10);

    EXPECT_EQ(cli::run("coeffs --alpha 0.3 --gamma 0.4 --c 0.9,0.5,0").exit_code, 3);
    EXPECT_EQ(cli::run("coeffs --alpha 0.3 --gamma 0.4 --c 0.9,0.5").exit_code, 2);
    EXPECT_EQ(cli::run("coeffs --alpha 0.3 --gamma 0.4 --c x,0,0").exit_code, 2);
}

TEST(CliSearch, InRegionDeterministic)
{
    const auto a = cli::run("search --alpha 0.2 --gamma 0.62 --restarts 1 --seed 7");
    const auto b = cli::run("search --alpha 0.2 --gamma 0.62 --restarts 1 --seed 7");
    ASSERT_EQ(a.exit_code, 0);
    EXPECT_EQ(a.out, b.out);
    const json j = json::parse(a.out);
    EXPECT_LE(j["gap"].get<double>(), 1e-5);
    EXPECT_GE(j["gap"].get<double>(), -1e-8);
    EXPECT_FALSE(j["exploratory"].get<bool>());
}

TEST(CliSearch, OutOfRegionIsExploratory)
{
    const auto r = cli::run("search --alpha 0.2 --gamma 0.9 --restarts 8");
    ASSERT_EQ(r.exit_code, 0);
    const json j = json::parse(r.out);
    EXPECT_TRUE(j["exploratory"].get<bool>());
    EXPECT_FALSE(j["in_region"].get<bool>());

    // same keys regardless of flags
    const json k = json::parse(cli::run("search --alpha 0.2 --gamma 0.3 --restarts 2 --tolerance 1e-6").out);
    std::vector<std::string> ka;
    std::vector<std::string> kb;
    for (auto& [key, _] : j.items()) {
        ka.push_back(key);
    }
    for (auto& [key, _] : k.items()) {
        kb.push_back(key);
    }
    EXPECT_EQ(ka, kb);

    EXPECT_EQ(cli::run("search --alpha 0.2 --gamma 0.3 --tolerance 0.1").exit_code, 2);
    EXPECT_EQ(cli::run("search --alpha 0.2 --gamma 0.3 --restarts 0").exit_code, 2);
}

TEST(CliScan, GammaMaxRows)
{
    const auto r = cli::run("scan --alpha 0.05:0.55:0.05 --gamma max");
    ASSERT_EQ(r.exit_code, 0);
    const auto ls = lines(r.out);
    ASSERT_EQ(ls.size(), 12u);
    EXPECT_EQ(ls[0], "alpha,gamma,in_region,bound,attained,gap,A,B,nu1,ineq30");
    for (std::size_t i = 1; i < ls.size(); ++i) {
        const auto f = fields(ls[i]);
        ASSERT_EQ(f.size(), 10u);
        EXPECT_EQ(f[2], "true");
        EXPECT_EQ(f[4], "");
        EXPECT_EQ(f[5], "");
        EXPECT_EQ(f[9], "true");
        // 17 significant digits, scientific
        EXPECT_EQ(f[0].size(), std::string("5.0000000000000003e-02").size());
        EXPECT_EQ(hankel_lab::format_real(hankel_lab::parse_real(f[3])), f[3]);
    }
}

TEST(CliScan, SearchColumnAndErrors)
{
    const auto r = cli::run("scan --alpha 0.1:0.2:0.1 --gamma 0.3 --search --restarts 4");
    ASSERT_EQ(r.exit_code, 0);
    const auto ls = lines(r.out);
    ASSERT_EQ(ls.size(), 3u);
    for (std::size_t i = 1; i < ls.size(); ++i) {
        const auto f = fields(ls[i]);
        EXPECT_FALSE(f[4].empty());
        EXPECT_FALSE(f[5].empty());
    }
    EXPECT_EQ(cli::run("scan --alpha 0.5:0.1:0.05 --gamma max").exit_code, 2);
    EXPECT_EQ(cli::run("scan --alpha 0.1:0.5:0.5 --gamma max").exit_code, 2);
    EXPECT_EQ(cli::run("scan --alpha 0.1:0.5:0.1 --gamma 2").exit_code, 2);
    EXPECT_EQ(cli::run("scan --alpha 0.1:0.5:0.1 --gamma foo").exit_code, 2);
}

TEST(CliPhi, Certificate)
{
    const auto r = cli::run("phi --json");
    ASSERT_EQ(r.exit_code, 0);
    const json j = json::parse(r.out);
    EXPECT_GE(j["min_phi1"].get<double>(), -1e-9);
    EXPECT_NEAR(j["argmin_t"].get<double>(), 2.0, 1e-12);
    EXPECT_NEAR(j["phi1_prime_at_2"].get<double>(), -5.0, 1e-12);
    EXPECT_LE(j["max_phi1_second"].get<double>(), -1e-3);
    EXPECT_EQ(j["verdict"].get<std::string>(), "PASS");

    const auto text = cli::run("phi --step 1e-3");
    ASSERT_EQ(text.exit_code, 0);
    EXPECT_NE(text.out.find("PASS"), std::string::npos);
    EXPECT_EQ(cli::run("phi --step 0.5").exit_code, 2);
}

TEST(CliSelftest, Passes)
{
    const auto r = cli::run("selftest");
    EXPECT_EQ(r.exit_code, 0);
    const auto ls = lines(r.out);
    EXPECT_EQ(ls.size(), 9u);
    for (const auto& l : ls) {
        EXPECT_EQ(l.rfind("PASS", 0), 0u) << l;
    }
}
