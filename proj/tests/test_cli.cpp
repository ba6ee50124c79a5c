#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

const std::string kCli = EVOHAB_CLI_PATH;
const std::string kFixture = std::string(EVOHAB_DATA_DIR) + "/phl_trappist_fixture.csv";

struct RunResult {
    int exit_code;
    std::string stdout_text;
};

RunResult run_cli(const std::string& args) {
    const fs::path out = fs::temp_directory_path() / "evohab_cli_stdout.txt";
    const std::string cmd = kCli + " " + args + " > " + out.string() + " 2>/dev/null";
    const int status = std::system(cmd.c_str());
    std::ifstream in(out);
    std::stringstream buf;
    buf << in.rdbuf();
    return {WEXITSTATUS(status), buf.str()};
}

std::string read_file(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

int count_lines(const std::string& s) {
    int n = 0;
    for (char c : s)
        if (c == '\n') ++n;
    return n;
}

fs::path fresh_dir(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / name;
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

}  // namespace

TEST_CASE("unknown benchmark exits 2 with a name list") {
    auto r = run_cli("bench nosuchfn");
    CHECK(r.exit_code == 2);
}

TEST_CASE("bench pass path exits 0") {
    auto r = run_cli("bench beale --pop 200 --gens 400 --seed 7");
    CHECK(r.exit_code == 0);
    CHECK(r.stdout_text.find("PASS") != std::string::npos);
}

TEST_CASE("bench tolerance failure exits 3") {
    auto r = run_cli("bench eggholder --pop 4 --gens 2 --seed 1");
    CHECK(r.exit_code == 3);
    CHECK(r.stdout_text.find("FAIL") != std::string::npos);
}

TEST_CASE("mo writes front CSVs and is byte-identical per seed") {
    const fs::path dir = fresh_dir("evohab_mo_test");
    const std::string front = (dir / "front.csv").string();
    auto a = run_cli("mo schaffer1 --pop 100 --gens 300 --seed 5 --out " + front);
    CHECK(a.exit_code == 0);
    REQUIRE(fs::exists(front));
    REQUIRE(fs::exists(dir / "front_ref.csv"));
    const std::string first = read_file(front);
    CHECK(first.starts_with("f1,f2\n"));

    auto b = run_cli("mo schaffer1 --pop 100 --gens 300 --seed 5 --out " + front);
    CHECK(read_file(front) == first);

    auto unknown = run_cli("mo nosuch");
    CHECK(unknown.exit_code == 2);
}

TEST_CASE("cdhs single mode writes result JSON and manifest") {
    const fs::path dir = fresh_dir("evohab_cdhs_test");
    auto r = run_cli("cdhs --catalog " + kFixture +
                     " --planet \"TRAPPIST-1 e\" --mode single --pop 40 --gens 120 --seed 3 "
                     "--out " + dir.string());
    CHECK(r.exit_code == 0);
    CHECK(fs::exists(dir / "trappist-1-e_single.json"));
    CHECK(fs::exists(dir / "cdhs_single.manifest.json"));

    auto missing = run_cli("cdhs --catalog " + kFixture + " --planet \"Nonexistent-9 z\"");
    CHECK(missing.exit_code == 2);
}

TEST_CASE("cdhs bi mode writes front and sweep, infeasible coupling exits 4") {
    const fs::path dir = fresh_dir("evohab_cdhs_bi_test");
    auto r = run_cli("cdhs --catalog " + kFixture +
                     " --planet \"TRAPPIST-1 b\" --mode bi --pop 40 --gens 120 --seed 3 --out " +
                     dir.string());
    CHECK(r.exit_code == 0);
    CHECK(fs::exists(dir / "trappist-1-b_front.csv"));
    CHECK(fs::exists(dir / "trappist-1-b_sweep.csv"));
    const std::string front = read_file(dir / "trappist-1-b_front.csv");
    CHECK(front.starts_with("y_interior,y_surface,alpha,beta,gamma,delta,c\n"));

    // a coupling cap below eps/(Ve/R) leaves no feasible delta
    auto infeasible = run_cli("cdhs --catalog " + kFixture +
                              " --planet \"TRAPPIST-1 b\" --mode bi --pop 40 --gens 10 "
                              "--cmax 1e-9 --seed 3");
    CHECK(infeasible.exit_code == 4);
}

TEST_CASE("report consolidates manifests idempotently") {
    const fs::path dir = fresh_dir("evohab_report_test");
    run_cli("bench rastrigin --pop 40 --gens 50 --seed 2 --out " + (dir / "bench.csv").string());
    run_cli("cdhs --catalog " + kFixture +
            " --planet \"TRAPPIST-1 d\" --mode single --pop 40 --gens 60 --seed 2 --out " +
            dir.string());

    auto r = run_cli("report --out " + dir.string());
    CHECK(r.exit_code == 0);
    REQUIRE(fs::exists(dir / "report.md"));
    const std::string first = read_file(dir / "report.md");
    CHECK(first.find("bench rastrigin") != std::string::npos);
    CHECK(first.find("TRAPPIST-1 d") != std::string::npos);

    auto again = run_cli("report --out " + dir.string());
    CHECK(again.exit_code == 0);
    CHECK(read_file(dir / "report.md") == first);

    const fs::path empty = fresh_dir("evohab_report_empty");
    CHECK(run_cli("report --out " + empty.string()).exit_code == 2);
}

TEST_CASE("bench all prints exactly 16 result rows") {
    // tiny budget: row count is what matters here, not quality
    auto r = run_cli("bench all --pop 8 --gens 3 --seed 1");
    // header + 16 rows + summary
    CHECK(count_lines(r.stdout_text) == 18);
}
