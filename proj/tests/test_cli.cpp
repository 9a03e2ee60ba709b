#include <doctest.h>

#include <nlohmann/json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "stark_toric/toric_profile.hpp"

using stark_toric::cli::run;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "stark-toric");
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::vector<std::string>> read_csv(const std::string& text, std::string* header) {
    std::istringstream in(text);
    std::string line;
    std::getline(in, line);
    *header = line;
    std::vector<std::vector<std::string>> rows;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::string> cells;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) cells.push_back(cell);
        rows.push_back(cells);
    }
    return rows;
}

double field_value(const std::string& text, const std::string& key) {
    const auto pos = text.find(key + "=");
    REQUIRE(pos != std::string::npos);
    return std::stod(text.substr(pos + key.size() + 1));
}

}  // namespace

TEST_CASE("periods command") {
    const Result zero = invoke({"periods", "--eps", "0.05", "--c", "0"});
    CHECK(zero.code == 0);
    CHECK(field_value(zero.out, "formula") == doctest::Approx(2 * std::numbers::pi).epsilon(1e-15));
    CHECK(field_value(zero.out, "rel_residual") < 1e-14);

    const Result one = invoke({"periods", "--eps", "0.05", "--c", "1"});
    CHECK(one.code == 0);
    std::istringstream lines(one.out);
    std::string line;
    int count = 0;
    while (std::getline(lines, line)) {
        CHECK(field_value(line, "rel_residual") < 1e-9);
        ++count;
    }
    CHECK(count == 2);

    CHECK(invoke({"periods", "--eps", "0.05", "--c", "3", "--which", "minus"}).code == 2);
    CHECK(invoke({"periods", "--eps", "0.05", "--c", "3", "--which", "plus"}).code == 0);
    CHECK(invoke({"periods", "--eps", "abc", "--c", "1"}).code == 2);
    CHECK(invoke({"periods", "--c", "1"}).code == 2);
}

TEST_CASE("profile command") {
    const Result r = invoke({"profile", "--eps", "0.05", "--samples", "256"});
    REQUIRE(r.code == 0);
    std::string header;
    const auto rows = read_csv(r.out, &header);
    CHECK(header == "c,x,y,slope,f_second");
    REQUIRE(rows.size() == 256);

    // decimal round trip reproduces the in-memory profile bit for bit
    const auto profile = stark_toric::profile_sample(stark_toric::FieldStrength(0.05), 256);
    double previous_x = -1.0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        REQUIRE(rows[i].size() == 5);
        const double x = std::stod(rows[i][1]);
        CHECK(x > previous_x);
        previous_x = x;
        CHECK(std::stod(rows[i][4]) > 0.0);
        CHECK(x == profile.samples[i].x);
        CHECK(std::stod(rows[i][2]) == profile.samples[i].y);
        CHECK(std::stod(rows[i][4]) == profile.second_derivs[i]);
    }

    const Result ball = invoke({"profile", "--eps", "1e-6", "--samples", "64"});
    REQUIRE(ball.code == 0);
    for (const auto& row : read_csv(ball.out, &header))
        CHECK(std::abs(std::stod(row[1]) + std::stod(row[2]) - 4 * std::numbers::pi) < 1e-3);

    CHECK(invoke({"profile", "--eps", "0.2", "--samples", "10"}).code == 2);
}

TEST_CASE("profile command writes to --out") {
    const std::string path = "test_cli_profile.csv";
    const Result r = invoke({"profile", "--eps", "0.03", "--samples", "8", "--out", path});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    std::string header;
    std::getline(in, header);
    CHECK(header == "c,x,y,slope,f_second");
    std::remove(path.c_str());
}

TEST_CASE("verify command") {
    const Result r = invoke({"verify", "--eps", "0.01,0.04,0.0624", "--samples", "201", "--tol", "1e-4"});
    CHECK(r.code == 0);
    const auto report = nlohmann::json::parse(r.out);
    REQUIRE(report.is_array());
    REQUIRE(report.size() == 3);
    const double expected[] = {0.01, 0.04, 0.0624};
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(report[i]["schema"] == 1);
        CHECK(report[i]["eps"].get<double>() == expected[i]);
        CHECK(report[i]["verdict"] == "pass");
        CHECK(report[i]["min_f_second"].get<double>() > 0.0);
        CHECK(report[i]["c_grid"].size() == 201);
    }

    const Result coarse = invoke({"verify", "--eps", "0.05", "--samples", "3"});
    CHECK(coarse.code == 0);
    CHECK(nlohmann::json::parse(coarse.out)[0]["min_f_second"].get<double>() > 0.0);

    CHECK(invoke({"verify", "--eps", "0.05,,0.01"}).code == 2);
    CHECK(invoke({"verify", "--eps", "0.05x"}).code == 2);
    CHECK(invoke({"verify", "--eps", "0.07"}).code == 2);
    CHECK(invoke({"verify", "--eps", "0.05", "--samples", "11", "--tol", "1e-300"}).code == 1);
}

TEST_CASE("flow command") {
    const Result rest = invoke({"flow", "--eps", "0.05", "--init", "0,0,0,0", "--duration", "1", "--step", "0.01"});
    REQUIRE(rest.code == 0);
    std::string header;
    const auto rows = read_csv(rest.out, &header);
    CHECK(header == "s,t,z1,w1,z2,w2,E");
    CHECK(rows.size() == 101);
    for (const auto& row : rows) {
        for (int k = 1; k <= 5; ++k) CHECK(std::stod(row[k]) == 0.0);
        CHECK(std::stod(row[6]) == -2.0);
    }

    // bounded-component run: z1 at the E1 = 1 turning point, E2 = 1 at z2 = 0
    const double z1 = std::sqrt(4.0 / (1.0 + std::sqrt(1.0 + 8.0 * 0.05)));
    char init[128];
    std::snprintf(init, sizeof init, "%.17g,0,0,%.17g", z1, std::sqrt(2.0));
    const Result run_b = invoke({"flow", "--eps", "0.05", "--init", init, "--duration", "10", "--stride", "100"});
    REQUIRE(run_b.code == 0);
    CHECK(field_value(run_b.out, "# max_energy_drift") < 1e-8);

    const Result lc = invoke({"flow", "--eps", "0.05", "--init", init, "--duration", "5", "--check-lc"});
    REQUIRE(lc.code == 0);
    CHECK(field_value(lc.out, "max_deviation") < 1e-5);

    CHECK(invoke({"flow", "--eps", "0.05", "--init", "1,2,3"}).code == 2);
    CHECK(invoke({"flow", "--eps", "0.05", "--init", "1,0,0,1", "--check-lc"}).code == 2);
    CHECK(invoke({"flow", "--eps", "0.05", "--scheme", "rk4"}).code == 2);
}

TEST_CASE("hill command") {
    const Result r = invoke({"hill", "--eps", "0.05", "--resolution", "200"});
    REQUIRE(r.code == 0);
    CHECK(r.err.find("components: 2") != std::string::npos);
    std::string header;
    const auto rows = read_csv(r.out, &header);
    CHECK(header == "q1,q2,class");
    int bounded = 0, unbounded = 0;
    for (const auto& row : rows) {
        REQUIRE(row.size() == 3);
        CHECK((row[2] == "B" || row[2] == "U" || row[2] == "F"));
        if (row[2] == "B") ++bounded;
        if (row[2] == "U") ++unbounded;
        // cells next to the origin belong to the bounded component
        if (std::abs(std::stod(row[0])) < 0.2 && std::abs(std::stod(row[1])) < 0.2) CHECK(row[2] == "B");
    }
    CHECK(bounded > 0);
    CHECK(unbounded > 0);
    CHECK(invoke({"hill", "--eps", "0.2"}).code == 2);
}

TEST_CASE("usage errors") {
    CHECK(invoke({}).code == 2);
    CHECK(invoke({"frobnicate"}).code == 2);
    CHECK(invoke({"--help"}).code == 0);
}
