#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "json.hpp"

namespace {

struct CliResult {
    int code = -1;
    std::string out;
};

CliResult run_cli(const std::string& args) {
    const char* bin = std::getenv("MINKCOVER_BIN");
    REQUIRE(bin != nullptr);
    const std::string cmd = std::string(bin) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t n = 0;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    const int status = pclose(pipe);
    CliResult r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = out;
    return r;
}

std::vector<std::string> lines_of(const std::string& s) {
    std::vector<std::string> lines;
    std::istringstream in(s);
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace

TEST_CASE("davis prints the branch crossover point") {
    const CliResult r = run_cli("davis");
    CHECK(r.code == 0);
    // the default tolerance pins ten digits; the residual there is shallow
    CHECK(r.out.find("2.572495154") != std::string::npos);
}

TEST_CASE("gamma at p = 2 prints the hexagonal constant") {
    const CliResult r = run_cli("gamma --p 2");
    CHECK(r.code == 0);
    CHECK(r.out.find("2.59807621135") != std::string::npos);
    CHECK(r.out.find("gamma_al") != std::string::npos);
    CHECK(r.out.find("sigma_star") != std::string::npos);
}

TEST_CASE("tau emits well-formed json") {
    const CliResult r = run_cli("tau --p 3 --format json");
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("command") == "tau");
    CHECK(j.at("p").get<double>() == 3.0);
    CHECK(std::abs(j.at("tau_p").get<double>() - 0.20405781723545582) <= 1e-12);
    CHECK(std::abs(j.at("residual").get<double>()) <= 1e-12);
}

TEST_CASE("limit markers pass through the cli") {
    CHECK(run_cli("volume --p 1").out.find("= 2") != std::string::npos);
    CHECK(run_cli("volume --p inf").out.find("= 4") != std::string::npos);
    const auto j = nlohmann::json::parse(run_cli("volume --p inf --format json").out);
    CHECK(j.at("p").is_null());
    CHECK(j.at("volume").get<double>() == 4.0);
}

TEST_CASE("exit codes distinguish usage, domain, and solver failures") {
    CHECK(run_cli("tau --p 0.5").code == 2);
    CHECK(run_cli("frobnicate").code == 64);
    CHECK(run_cli("volume --bogus 1").code == 64);
    CHECK(run_cli("volume --p 2 --tol -1").code == 64);
    CHECK(run_cli("--help").code == 0);
    CHECK(run_cli("--help").out.find("Usage") != std::string::npos);
    CHECK(run_cli("gamma --p 1 --general").code == 2);
}

TEST_CASE("scan csv has the documented shape") {
    const CliResult r = run_cli("scan --p-min 1.5 --p-max 3 --steps 4 --format csv");
    CHECK(r.code == 0);
    const auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 9);
    CHECK(lines[0] == "p,sigma_star,tau_star,gamma_al,density_al,alpha_fit");
    int comments = 0;
    for (const auto& l : lines)
        if (!l.empty() && l[0] == '#') ++comments;
    CHECK(comments == 4);

    const CliResult g = run_cli("scan --p-min 1.5 --p-max 3 --steps 4 --general --format csv");
    CHECK(lines_of(g.out)[0] ==
          "p,sigma_star,tau_star,gamma_al,density_al,alpha_fit,gamma_general,density_general");
}

TEST_CASE("scan output is byte identical across runs") {
    const std::string args = "scan --p-min 1.2 --p-max 8 --steps 25 --seed 0 --format csv";
    const CliResult a = run_cli(args);
    const CliResult b = run_cli(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(!a.out.empty());
}

TEST_CASE("verify distinguishes covering from non-covering bases") {
    const auto good =
        nlohmann::json::parse(run_cli("verify --p 2 --basis 1,0,0,1 --samples 2000 --format json").out);
    CHECK(good.at("covering").get<bool>());
    CHECK(good.at("covered_fraction").get<double>() == 1.0);
    const auto bad =
        nlohmann::json::parse(run_cli("verify --p 2 --basis 2,0,0,2 --samples 2000 --format json").out);
    CHECK(!bad.at("covering").get<bool>());
    CHECK(bad.at("covered_fraction").get<double>() < 1.0);
    CHECK(bad.at("worst_gap").get<double>() > 0.0);
}

TEST_CASE("the worked example report compares six quantities") {
    const CliResult r = run_cli("reproduce-p3 --format json");
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    const auto& comps = j.at("comparisons");
    REQUIRE(comps.size() == 6);
    int match = 0, discrepant = 0;
    for (const auto& c : comps) {
        CHECK(c.contains("name"));
        CHECK(c.contains("computed"));
        CHECK(c.contains("quoted"));
        CHECK(c.contains("difference"));
        const std::string v = c.at("verdict").get<std::string>();
        if (v == "MATCH") ++match;
        if (v == "DISCREPANT") ++discrepant;
    }
    CHECK(match == 3);
    CHECK(discrepant == 3);
    CHECK(j.at("mid_vertex_residual").get<double>() > 0.0);
}

TEST_CASE("svg output is deterministic") {
    const std::string path = "/tmp/minkcover_test_gamma.svg";
    CHECK(run_cli("gamma --p 3 --svg " + path).code == 0);
    const std::string first = slurp(path);
    CHECK(first.rfind("<svg", 0) == 0);
    CHECK(run_cli("gamma --p 3 --svg " + path).code == 0);
    CHECK(slurp(path) == first);
}

TEST_CASE("digits controls text precision") {
    const CliResult r = run_cli("volume --p 2 --digits 4");
    CHECK(r.code == 0);
    CHECK(r.out.find("3.142") != std::string::npos);
    CHECK(r.out.find("3.1416") == std::string::npos);
}
