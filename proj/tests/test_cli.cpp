#include "doctest.h"

#include "bps/commands.hpp"

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>

using namespace bps;
using namespace bps::cli;

namespace {

struct Run {
    int exit_code;
    std::string out;
};

Run run(const std::string& args) {
    const std::string cmd = std::string(BPS_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string temp_file(const std::string& name, const std::string& content) {
    const auto path = std::filesystem::temp_directory_path() / ("bps_cli_test_" + name);
    std::ofstream(path) << content;
    return path.string();
}

// Every exact quantity is a string; only *_approx keys may hold floats.
void check_no_bare_floats(const Json& j, const std::string& key = "") {
    if (j.is_number_float()) CHECK_MESSAGE(key.ends_with("_approx"), key);
    if (j.is_object())
        for (const auto& [k, v] : j.items()) check_no_bare_floats(v, k);
    if (j.is_array())
        for (const auto& v : j) check_no_bare_floats(v, key);
}

} // namespace

TEST_CASE("verify-symplectic on a Y-family matrix") {
    const auto r = cmd_verify("[[26,0,3,4],[0,26,4,-3],[3,4,1,0],[4,-3,0,1]]", FormVariant::StandardBlock);
    CHECK(r.status == Status::Ok);
    CHECK(r.payload["symplectic"] == true);
    CHECK(r.payload["charpoly"] == Json::parse(R"(["1","-54","731","-54","1"])"));
    check_no_bare_floats(r.to_json());
}

TEST_CASE("command errors map to exit code 1") {
    const auto bad = cmd_verify("3\n1 2 3\n4 5 6\n7 8 9\n", FormVariant::StandardBlock);
    CHECK(bad.status == Status::Error);
    CHECK(bad.exit_code() == 1);
    CHECK(bad.payload["error"] == "odd-dimension");
    const auto parse = cmd_charpoly("2\n1 2\n3\n");
    CHECK(parse.payload["error"] == "parse");
    ConstructRequest req;
    req.family = "y";
    req.g = 2;
    req.a = "0";
    req.b = "0";
    CHECK(cmd_construct(req).payload["error"] == "bad-params");
}

TEST_CASE("construct family y") {
    ConstructRequest req;
    req.family = "y";
    req.g = 2;
    req.a = "0";
    req.b = "1";
    const auto r = cmd_construct(req);
    REQUIRE(r.status == Status::Ok);
    CHECK(r.payload["certificate"]["verdict"] == "BiPerron");
    CHECK(r.payload["certificate"]["nonsimple"] == true);
    check_no_bare_floats(r.to_json());
}

TEST_CASE("construct family block") {
    ConstructRequest req;
    req.family = "block";
    req.blocks_content = "[[[2,1],[1,1]],[[2,1],[1,1]]]";
    const auto r = cmd_construct(req);
    REQUIRE(r.status == Status::Ok);
    CHECK(r.payload["symplectic"] == true);
    CHECK(r.payload["form"] == "pairwise");
    CHECK(r.payload["charpoly"] == Json::parse(R"(["1","-6","11","-6","1"])"));
    CHECK(r.payload["verdict"] == "BiPerron");
}

TEST_CASE("certify-biperron") {
    CHECK(cmd_certify("1 -27 1", CertMode::FullSpectrum, 64).payload["verdict"] == "BiPerron");
    const auto none = cmd_certify("[1,10,30,10,1]", CertMode::FullSpectrum, 64);
    CHECK(none.status == Status::Ok);
    CHECK(none.payload["leading_bracket"] == "none");
    CHECK(none.payload["verdict"] == "NotBiPerron");
    // complex roots beat lambda: minimal-poly mode cannot decide
    const auto undecided = cmd_certify("-18 9 -2 1", CertMode::MinimalPoly, 64);
    CHECK(undecided.status == Status::Undecided);
    CHECK(undecided.exit_code() == 2);
    CHECK(cmd_certify("0", CertMode::FullSpectrum, 64).status == Status::Error);
}

TEST_CASE("scan-density renders csv with exact fractions") {
    const auto r = cmd_density({10}, 2);
    REQUIRE(r.status == Status::Ok);
    const std::string csv = render(r, OutputFormat::Csv);
    CHECK(csv.rfind(density_csv_header() + "\n", 0) == 0);
    const auto row = density_scan(10);
    CHECK(csv.find("\n" + density_csv_row(row) + "\n") != std::string::npos);
}

TEST_CASE("output formats") {
    CHECK(parse_output_format("json") == OutputFormat::Json);
    CHECK(parse_output_format("csv") == OutputFormat::Csv);
    CHECK(parse_output_format("text") == OutputFormat::Text);
    CHECK_THROWS_AS(parse_output_format("xml"), Error);
    const auto r = cmd_random_symplectic(2, 10, 1);
    CHECK(r.payload["palindromic"] == true);
    CHECK(render(r, OutputFormat::Text).rfind("status: ok\n", 0) == 0);
    CHECK(Json::parse(render(r, OutputFormat::Csv))["status"] == "ok"); // csv falls back to json
}

TEST_CASE("refinement budget from the environment") {
    unsetenv("BPS_MAX_REFINEMENT");
    CHECK(max_refinement_from_env() == 64);
    setenv("BPS_MAX_REFINEMENT", "12", 1);
    CHECK(max_refinement_from_env() == 12);
    setenv("BPS_MAX_REFINEMENT", "abc", 1);
    CHECK_THROWS_AS(max_refinement_from_env(), Error);
    unsetenv("BPS_MAX_REFINEMENT");
}

TEST_CASE("binary: exit codes and JSON on stdout") {
    const std::string matrix = temp_file("a.txt", "4\n2 0 0 1\n0 2 1 0\n0 1 1 0\n1 0 0 1\n");
    auto ok = run("verify-symplectic " + matrix);
    CHECK(ok.exit_code == 0);
    CHECK(Json::parse(ok.out)["payload"]["symplectic"] == true);

    auto pair = run("--form pairwise verify-symplectic " + matrix);
    CHECK(pair.exit_code == 0);
    CHECK(Json::parse(pair.out)["payload"]["symplectic"] == false);

    const std::string odd = temp_file("odd.txt", "1\n1\n");
    auto err = run("verify-symplectic " + odd);
    CHECK(err.exit_code == 1);
    CHECK(Json::parse(err.out)["status"] == "error");

    const std::string poly = temp_file("p.txt", "-18 9 -2 1\n");
    auto und = run("--mode minimal-poly certify-biperron " + poly);
    CHECK(und.exit_code == 2);
    CHECK(Json::parse(und.out)["status"] == "undecided");

    auto missing = run("charpoly /nonexistent/file");
    CHECK(missing.exit_code == 1);
    CHECK(Json::parse(missing.out)["payload"]["error"] == "io");
}

TEST_CASE("binary: construct, density, exceptional set, random") {
    auto y = run("construct --family y --g 3 --a 3 --b 4");
    CHECK(y.exit_code == 0);
    const Json cert = Json::parse(y.out)["payload"]["certificate"];
    CHECK(cert["charpoly"] == Json::parse(R"(["1","-56","840","-1570","840","-56","1"])"));
    CHECK(cert["verdict"] == "BiPerron");

    const std::string blocks = temp_file("blocks.json", "[[[2,1],[1,1]],[[2,1],[1,1]],[[1,0],[0,1]]]");
    auto b = run("construct --family block --blocks " + blocks);
    CHECK(b.exit_code == 0);
    CHECK(Json::parse(b.out)["payload"]["symplectic"] == true);

    auto csv = run("--out csv --jobs 2 scan-density --k 2 --k 10");
    CHECK(csv.exit_code == 0);
    CHECK(csv.out.rfind(density_csv_header(), 0) == 0);
    CHECK(std::count(csv.out.begin(), csv.out.end(), '\n') == 3);

    auto ex = run("exceptional-set --bound 10");
    CHECK(ex.exit_code == 0);
    CHECK(Json::parse(ex.out)["payload"]["all_abs_n_at_most_3"] == true);

    auto r1 = run("--seed 7 random-symplectic --g 3 --steps 12");
    auto r2 = run("--seed 7 random-symplectic --g 3 --steps 12");
    CHECK(r1.exit_code == 0);
    CHECK(r1.out == r2.out);
    CHECK(Json::parse(r1.out)["payload"]["symplectic"] == true);

    auto usage = run("no-such-command");
    CHECK(usage.exit_code == 1);
    CHECK(Json::parse(usage.out)["payload"]["error"] == "usage");
}
