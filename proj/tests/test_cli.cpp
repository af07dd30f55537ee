#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

namespace {

namespace fs = std::filesystem;

struct RunResult {
    int status = -1;
    std::string out;
};

RunResult run_shell(const std::string& cmd_line) {
    const std::string cmd = cmd_line + " 2>&1";
    RunResult res;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
        res.out.append(buf.data(), got);
    }
    const int rc = pclose(pipe);
    res.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return res;
}

// Runs the built CLI with stderr folded into stdout.
RunResult run_cli(const std::string& args) {
    return run_shell(std::string(SEGRE_CLI_PATH) + " " + args);
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("segre-cli-" + std::to_string(::getpid()) + "-" +
                std::to_string(counter()++));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    static int& counter() {
        static int c = 0;
        return c;
    }
};

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("integrals text output") {
    const RunResult r = run_cli("integrals --n-max 2 --d symbolic");
    CHECK(r.status == 0);
    CHECK(r.out == "n=0: 1\nn=1: 0\nn=2: 3/2*d - 1/2*d^2\n");
}

TEST_CASE("integrals at the anticanonical degree") {
    const RunResult r = run_cli("integrals --n-max 3 --d 3");
    CHECK(r.status == 0);
    CHECK(r.out == "n=0: d=3: 1\nn=1: d=3: 0\nn=2: d=3: 0\nn=3: d=3: 0\n");
}

TEST_CASE("integrals at degree one") {
    const RunResult r = run_cli("integrals --n-max 2 --d 1");
    CHECK(r.status == 0);
    CHECK(r.out == "n=0: d=1: 1\nn=1: d=1: 0\nn=2: d=1: 1\n");
}

TEST_CASE("json output parses against the schema") {
    const RunResult r = run_cli("integrals --n-max 2 --format json");
    CHECK(r.status == 0);
    const auto doc = nlohmann::json::parse(r.out);
    REQUIRE(doc.is_array());
    CHECK(doc[2]["n"] == 2);
    for (const auto& pair : doc[2]["poly"]) {
        REQUIRE(pair.size() == 2);
        CHECK(pair[0].is_string());
        CHECK(pair[1].is_string());
    }
}

TEST_CASE("thread count does not change the bytes") {
    const RunResult one = run_cli("integrals --n-max 5 --threads 1 --format json");
    const RunResult four = run_cli("integrals --n-max 5 --threads 4 --format json");
    CHECK(one.status == 0);
    CHECK(four.status == 0);
    CHECK(one.out == four.out);
}

TEST_CASE("cache warm-up is byte-identical") {
    TempDir dir;
    const std::string args =
        "integrals --n-max 4 --format csv --cache-dir " + dir.path.string();
    const RunResult cold = run_cli(args);
    REQUIRE(cold.status == 0);
    REQUIRE(fs::exists(dir.path / "integrals-cache.json"));
    const RunResult warm = run_cli(args);
    CHECK(warm.status == 0);
    CHECK(cold.out == warm.out);
}

TEST_CASE("cache directory from the environment") {
    TempDir dir;
    const RunResult r = run_shell("SEGRE_CACHE_DIR=" + dir.path.string() + " " +
                                  SEGRE_CLI_PATH + " integrals --n-max 1");
    CHECK(r.status == 0);
    CHECK(fs::exists(dir.path / "integrals-cache.json"));
}

TEST_CASE("output file matches stdout bytes") {
    TempDir dir;
    const fs::path out_path = dir.path / "table.csv";
    const RunResult direct = run_cli("integrals --n-max 3 --format csv");
    const RunResult filed =
        run_cli("integrals --n-max 3 --format csv --output " + out_path.string());
    CHECK(filed.status == 0);
    CHECK(filed.out.empty());
    std::ifstream in(out_path, std::ios::binary);
    const std::string bytes((std::istreambuf_iterator<char>(in)),
                            std::istreambuf_iterator<char>());
    CHECK(bytes == direct.out);
}

TEST_CASE("verify suites exit zero") {
    CHECK(run_cli("verify vanishing --n-max 3").status == 0);
    CHECK(run_cli("verify main-theorem --k-max 2 --m-max 3 --n-max 3").status == 0);
    CHECK(run_cli("verify wkmain --k-max 1 --m-max 3 --n-max 3").status == 0);
    CHECK(run_cli("verify xi --k-max 0 --m-max 3 --n-max 3").status == 0);
    CHECK(run_cli("verify chains --k-max 2 --m-max 3 --n-max 3").status == 0);
    CHECK(run_cli("verify identities --combi-k-max 5 --combi2-k-max 2").status == 0);
}

TEST_CASE("series commands") {
    const RunResult closed =
        run_cli("series closed-form --c2 9 --c1sq 9 --c1k -9 --order 6");
    CHECK(closed.status == 0);
    CHECK(closed.out == "1, 0, 0, 0, 0, 0, 0\n");

    CHECK(run_cli("series compare --d 2 --order 4").status == 0);
    const RunResult fit = run_cli("series fit --d-list 1,2,4,5 --order 5");
    CHECK(fit.status == 0);
    CHECK(fit.out.find("fit consistent: L = -3Q, C = 0") != std::string::npos);
}

TEST_CASE("invalid parameters exit 2") {
    CHECK(run_cli("integrals").status == 2);
    CHECK(run_cli("nonsense").status == 2);
    CHECK(run_cli("integrals --n-max 2 --d wat").status == 2);
    CHECK(run_cli("integrals --n-max 2 --format yaml").status == 2);
    CHECK(run_cli("verify").status == 2);
    // degree 3 carries no information and is rejected by the fit
    CHECK(run_cli("series fit --d-list 1,2,3,4 --order 3").status == 2);
}

TEST_CASE("help exits zero") {
    CHECK(run_cli("--help").status == 0);
    CHECK(run_cli("integrals --help").status == 0);
}

TEST_SUITE_END();
