#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "localabc/cli.hpp"

using namespace localabc;

namespace {

struct Run {
    int code;
    Json doc;
    std::string text;
    std::string err;
};

Run run(const std::string& problem, const RunFlags& flags = {}) {
    std::ostringstream out, err;
    const int code = run_problem(Json::parse(problem), flags, out, err);
    return {code, Json::parse(out.str()), out.str(), err.str()};
}

}  // namespace

TEST_CASE("cli: example modes pass and echo their input") {
    const Run r = run(R"({"mode": "example1", "n": 2, "epsilon": 0.1})");
    CHECK(r.code == kExitPass);
    CHECK(r.doc["exit_code"] == 0);
    CHECK(r.doc["input"] == Json::parse(R"({"mode": "example1", "n": 2, "epsilon": 0.1})"));
    CHECK(std::abs(r.doc["result"]["certificate"]["slack_21"].get<double>()) < 1e-6);

    CHECK(run(R"({"mode": "example2", "n": 2, "m": 5, "epsilon": 0.1})").code == kExitPass);
}

TEST_CASE("cli: hypothesis failures") {
    const Run r = run(R"({"mode": "mason_a", "polynomials": [[0, 1], [0, 1], [0, 2]]})");
    CHECK(r.code == kExitHypothesisFailure);
    CHECK(r.doc["hypothesis"] == "not coprime");
    CHECK(r.doc["status"].is_string());
}

TEST_CASE("cli: malformed input exits 4 with a diagnostic") {
    for (const char* bad : {R"([1, 2])", R"({"mode": "nonsense"})", R"({"mode": "mason_a", "polynomials": [[1]]})",
                            R"({"mode": "abc", "polynomials": "z"})", R"({"mode": "example1", "n": 0})"}) {
        const Run r = run(bad);
        CHECK_MESSAGE(r.code == kExitInputError, bad);
        CHECK_FALSE(r.err.empty());
    }
    std::ostringstream out, err;
    CHECK(run_file("/nonexistent/problem.json", {}, out, err) == kExitInputError);
}

TEST_CASE("cli: limit_r writes its CSV") {
    const auto path = std::filesystem::temp_directory_path() / "localabc_cli_test.csv";
    std::filesystem::remove(path);
    RunFlags flags;
    flags.csv_path = path.string();
    const Run r = run(R"({"mode": "limit_r", "wronskian": [[0, 0], [1, 0], [0, 0], [1, 0]], "radii": [10, 40, 160]})",
                      flags);
    CHECK(r.code == kExitPass);
    std::ifstream csv(path);
    std::string header;
    std::getline(csv, header);
    CHECK(header == "R,kappa,mu");
    int lines = 0;
    for (std::string line; std::getline(csv, line);) ++lines;
    CHECK(lines == 3);
    std::filesystem::remove(path);
}

TEST_CASE("cli: output is deterministic for a fixed seed") {
    const std::string problem =
        R"({"mode": "abc", "domain": {"center": [0.5, 0], "radius": 2}, "random": {"count": 3, "max_n": 2, "max_degree": 3}})";
    RunFlags flags;
    flags.seed = 11;
    const Run a = run(problem, flags);
    const Run b = run(problem, flags);
    CHECK(a.text == b.text);
    flags.seed = 12;
    CHECK(run(problem, flags).text != a.text);
}

TEST_CASE("cli: alpha flag overrides the problem") {
    RunFlags flags;
    flags.alpha = 0.25;
    const Run r = run(R"({"mode": "truncation", "zero_rule": "origin", "levels": [16], "alpha": 0.5})", flags);
    REQUIRE(r.code == kExitPass);
    CHECK(r.doc["result"]["rows"][0]["norm_sq"].get<double>() == doctest::Approx(2.0));
}
