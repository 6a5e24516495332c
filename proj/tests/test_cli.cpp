#include <doctest.h>

#include <nlohmann/json.hpp>
#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <string>

#include "rdom/edge_list.hpp"
#include "rdom/graph.hpp"

namespace {

struct CliResult {
    int exit_code = -1;
    std::string out;
};

CliResult run_cli(const std::string& args) {
    const std::string cmd =
        std::string(RDOM_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {};
    std::string out;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    const int status = pclose(pipe);
    CliResult r;
    if (WIFEXITED(status)) r.exit_code = WEXITSTATUS(status);
    r.out = std::move(out);
    return r;
}

// Writes text to a scratch file in the working directory and removes it when
// the guard dies.
struct ScratchFile {
    std::string path;
    explicit ScratchFile(const std::string& name, const std::string& text)
        : path(name) {
        std::ofstream f(path);
        f << text;
    }
    ~ScratchFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("cli: help and argument errors") {
    CHECK(run_cli("--help").exit_code == 0);
    CHECK(run_cli("compute --help").exit_code == 0);
    CHECK(run_cli("").exit_code == 2);         // a subcommand is required
    CHECK(run_cli("frobnicate").exit_code == 2);
    CHECK(run_cli("compute").exit_code == 2);  // --input is required
}

TEST_CASE("cli: compute") {
    ScratchFile file("cli_scratch_p10.el",
                     rdom::to_edge_list(rdom::path_graph(10)));

    auto r = run_cli("compute --input " + file.path + " --k 2");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("n") == 10);
    CHECK(j.at("m") == 9);
    CHECK(j.at("k") == 2);
    REQUIRE(j.at("invariants").size() == 4);
    CHECK(j.at("invariants").at(0).at("name") == "dim");
    CHECK(j.at("invariants").at(0).at("value") == 1);
    CHECK_FALSE(j.at("invariants").at(0).contains("k"));
    CHECK(j.at("invariants").at(2).at("name") == "gamma_rk");
    CHECK(j.at("invariants").at(2).at("value") == 2);
    CHECK(j.at("invariants").at(2).at("witness") ==
          nlohmann::json::array({2, 7}));

    r = run_cli("compute --input " + file.path +
                " --k 2 --invariants gammark --format csv");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out == "invariant,k,value,witness\ngamma_rk,2,2,2;7\n");

    r = run_cli("compute --input " + file.path + " --k 2 --out cli_scratch.out");
    CHECK(r.exit_code == 0);
    {
        std::ifstream f("cli_scratch.out");
        REQUIRE(f.good());
        nlohmann::json from_file;
        f >> from_file;
        CHECK(from_file.at("n") == 10);
    }
    std::remove("cli_scratch.out");

    CHECK(run_cli("compute --input cli_no_such_file.el").exit_code == 2);
    CHECK(run_cli("compute --input " + file.path + " --invariants bogus")
              .exit_code == 2);
    CHECK(run_cli("compute --input " + file.path + " --format yaml")
              .exit_code == 2);
    CHECK(run_cli("compute --input " + file.path + " --k 0").exit_code == 1);

    ScratchFile bad("cli_scratch_bad.el", "2 1\n0  1\n");
    CHECK(run_cli("compute --input " + bad.path).exit_code == 2);

    ScratchFile split("cli_scratch_split.el", "4 2\n0 1\n2 3\n");
    CHECK(run_cli("compute --input " + split.path).exit_code == 1);
}

TEST_CASE("cli: generate") {
    auto r = run_cli("generate --family extremal-gr --k 1 --r 2");
    REQUIRE(r.exit_code == 0);
    auto g = rdom::from_edge_list(r.out);
    CHECK(g.order() == 8);
    CHECK(rdom::is_connected(g));

    r = run_cli(
        "generate --family t4 --k 2 --m 1 --l 1 --r 3 --format json --certify");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("family") == "t4");
    CHECK(j.at("params").at("m") == 1);
    CHECK(j.at("claims").at("dim") == 4);
    CHECK(j.at("claims").at("gamma_k") == 3);
    CHECK(j.at("claims").at("gamma_rk") == 6);
    CHECK(j.at("certified") == true);

    r = run_cli("generate --family path --n 6 --k 1 --format json");
    REQUIRE(r.exit_code == 0);
    j = nlohmann::json::parse(r.out);
    CHECK(j.at("n") == 6);
    CHECK(j.at("edges").size() == 5);

    CHECK(run_cli("generate --family widget").exit_code == 2);
    CHECK(run_cli("generate --family t1 --k 2 --l 0").exit_code == 2);
    CHECK(run_cli("generate --family cycle --n 2").exit_code == 2);
}

TEST_CASE("cli: verify") {
    auto r = run_cli("verify --check chk_path_formula --level smoke");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("level") == "smoke");
    CHECK(j.at("summary").at("fail") == 0);
    CHECK(j.at("checks").size() > 0);

    r = run_cli("verify --check chk_sandwich --nmax 3 --kmax 1 --out "
                "cli_scratch_report.json");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("pass=") != std::string::npos);
    CHECK(r.out.find("fail=0") != std::string::npos);
    {
        std::ifstream f("cli_scratch_report.json");
        REQUIRE(f.good());
        nlohmann::json report;
        f >> report;
        CHECK(report.at("summary").at("fail") == 0);
    }
    std::remove("cli_scratch_report.json");

    CHECK(run_cli("verify").exit_code == 2);
    CHECK(run_cli("verify --check chk_bogus").exit_code == 2);
    CHECK(run_cli("verify --check chk_sandwich --level full").exit_code == 2);
}

TEST_CASE("cli: sweep") {
    auto r = run_cli("sweep --family cycle --k 2 --n 3..20");
    REQUIRE(r.exit_code == 0);
    REQUIRE(r.out.rfind("family,k,n,m,l,r,solver,predicted,match\n", 0) == 0);
    int lines = 0;
    for (char c : r.out) lines += c == '\n';
    CHECK(lines == 19);  // header + one row per order
    CHECK(r.out.find("cycle,2,10,,,,3,3,1\n") != std::string::npos);
    CHECK(r.out.find(",0\n") == std::string::npos);  // every row matches

    r = run_cli("sweep --family t4 --k 2 --m 1 --l 1 --r 3..4 --format json");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    REQUIRE(j.size() == 2);
    CHECK(j.at(0).at("match") == 1);
    CHECK(j.at(1).at("match") == 1);

    CHECK(run_cli("sweep --family widget --n 3..4").exit_code == 2);
    CHECK(run_cli("sweep --family bull").exit_code == 2);
    CHECK(run_cli("sweep --family cycle --n 5..3").exit_code == 2);
    CHECK(run_cli("sweep --family cycle --n 3..4 --m 1..2").exit_code == 2);
    CHECK(run_cli("sweep --family path --n x..y").exit_code == 2);
}

TEST_CASE("cli: enumerate") {
    auto r = run_cli("enumerate --n 1..4");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "n,count\n1,1\n2,1\n3,4\n4,38\n");

    r = run_cli("enumerate --n 5 --format json");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    REQUIRE(j.at("counts").size() == 1);
    CHECK(j.at("counts").at(0).at("n") == 5);
    CHECK(j.at("counts").at(0).at("count") == 728);

    CHECK(run_cli("enumerate --n 0..3").exit_code == 2);
    CHECK(run_cli("enumerate --n 8").exit_code == 2);
}
