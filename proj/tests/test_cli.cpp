#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace {

namespace fs = std::filesystem;

const std::string kCli = SPINMEM_CLI_PATH;

struct TempDir {
    fs::path path;
    TempDir() : path(fs::temp_directory_path() / "spinmem_cli_test") {
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

int run(const std::string& args) {
    const int rc = std::system((kCli + " " + args + " > /dev/null 2>&1").c_str());
    return WEXITSTATUS(rc);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::size_t count_lines_with(const std::string& text, const std::string& needle) {
    std::size_t count = 0;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line))
        if (line.find(needle) != std::string::npos) ++count;
    return count;
}

}  // namespace

TEST_CASE("curve: analytic N=9 theta=0 endpoints and embedded config") {
    TempDir dir;
    const auto out = dir.file("curve.csv");
    REQUIRE(run("curve --n 9 --theta 0 --method analytic --out " + out) == 0);
    const auto text = slurp(out);
    CHECK(text.starts_with("# config: "));
    CHECK(count_lines_with(text, ",,analytic,") == 10);  // one row per m
    CHECK(count_lines_with(text, "0,0,1,0,1,,analytic") == 1);   // m=0: P=1
    CHECK(count_lines_with(text, "9,1,0,0,0.5,,analytic") == 1); // m=9: P=0.5
}

TEST_CASE("curve: exact run emits byte-identical P columns to analytic") {
    TempDir dir;
    const auto a = dir.file("analytic.csv");
    const auto e = dir.file("exact.csv");
    REQUIRE(run("curve --n 9 --theta -4 --theta 0 --theta 6 --method analytic --out " + a) == 0);
    REQUIRE(run("curve --n 9 --theta -4 --theta 0 --theta 6 --method exact --out " + e) == 0);
    auto strip = [](std::string text) {
        // drop the config header and method column; P columns must coincide
        std::ostringstream os;
        std::istringstream is(text);
        std::string line;
        while (std::getline(is, line)) {
            if (line.starts_with("#")) continue;
            auto pos = line.find(",,");
            os << (pos == std::string::npos ? line : line.substr(0, pos)) << "\n";
        }
        return os.str();
    };
    CHECK(strip(slurp(a)) == strip(slurp(e)));
}

TEST_CASE("exact method over the guard exits 3") {
    CHECK(run("curve --n 25 --theta 0 --method exact") == 3);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run("curve --n 9 --method nosuch") == 2);
    CHECK(run("nosuchcommand") == 2);
    CHECK(run("curve --n 9 --theta 99 --method analytic") == 2);
    CHECK(run("amu --n 9 --q 0.123 --runs 10") == 2);
}

TEST_CASE("roc: m=9 rows sit on the chance diagonal, m=7 has the known theta=0 point") {
    TempDir dir;
    const auto out = dir.file("roc.csv");
    REQUIRE(run("roc --n 9 --m 7 --m 9 --method analytic --out " + out) == 0);
    const auto text = slurp(out);
    CHECK(count_lines_with(text, "7,0.77734375") == 0);  // sanity: no malformed rows
    // m=7 theta=0 row: P = 0.7734375, F = 0.5
    CHECK(count_lines_with(text, ",0,0.7734375,0.5,") == 1);
    // m=9 rows: P column equals F column
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        if (line.starts_with("9,1,0,")) {
            std::istringstream cells(line);
            std::string cell;
            std::vector<std::string> row;
            while (std::getline(cells, cell, ',')) row.push_back(cell);
            REQUIRE(row.size() >= 6);
            CHECK(row[4] == row[5]);
        }
    }
}

TEST_CASE("rerun with identical config is byte-identical") {
    TempDir dir;
    const auto a = dir.file("a.csv");
    const auto b = dir.file("b.csv");
    REQUIRE(run("curve --n 9 --theta 0 --method mc --trials 2000 --seed 7 --out " + a) == 0);
    REQUIRE(run("curve --n 9 --theta 0 --method mc --trials 2000 --seed 7 --out " + b) == 0);
    CHECK(slurp(a) == slurp(b));

    const auto r1 = dir.file("amu1.json");
    const auto r2 = dir.file("amu2.json");
    REQUIRE(run("amu --n 9 --q 0 --t0 50 --freq 1 --runs 300 --seed 3 --format json --out " +
                r1) == 0);
    REQUIRE(run("amu --n 9 --q 0 --t0 50 --freq 1 --runs 300 --seed 3 --format json --out " +
                r2) == 0);
    CHECK(slurp(r1) == slurp(r2));
}

TEST_CASE("damage: recognition row is 1 for both columns under N_k=4") {
    TempDir dir;
    const auto out = dir.file("damage.csv");
    REQUIRE(run("damage --n 9 --theta 0 --random-kill 4 --seed 11 --out " + out) == 0);
    const auto text = slurp(out);
    CHECK(count_lines_with(text, "recognition,,0,1,1,1") == 1);
    CHECK(count_lines_with(text, "kill:") == 1);  // resolved spec echoed in config
}

TEST_CASE("amu: recognition cue always succeeds on attempt 1") {
    TempDir dir;
    const auto out = dir.file("amu.csv");
    REQUIRE(run("amu --n 9 --q 1 --runs 100 --seed 1 --out " + out) == 0);
    const auto text = slurp(out);
    CHECK(count_lines_with(text, "success_rate,,1") == 1);
    CHECK(count_lines_with(text, "histogram,1,100") == 1);
}

TEST_CASE("verify passes clean and catches a corrupted kmax rule") {
    CHECK(run("verify --n 9") == 0);
    CHECK(run("verify --n 5 --n 6 --n 7") == 0);
    const int rc = std::system(("SPINMEM_VERIFY_FAULT=kmax " + kCli +
                                " verify --n 9 > /dev/null 2>&1")
                                   .c_str());
    CHECK(WEXITSTATUS(rc) == 1);
}

TEST_CASE("store and validate round-trip through the catalog file") {
    TempDir dir;
    const auto cat = dir.file("catalog.txt");
    REQUIRE(run("store --catalog " + cat + " --id t1 --x0 +-++-++-- --eta 1") == 0);
    const int rc = std::system((kCli + " validate --catalog " + cat + " --id t1").c_str());
    CHECK(WEXITSTATUS(rc) == 0);

    // duplicate id is rejected
    CHECK(run("store --catalog " + cat + " --id t1 --x0 +++++++++ --eta 1") == 2);

    // env-var default catalog path
    const int rc2 = std::system(("SPINMEM_CATALOG=" + cat + " " + kCli +
                                 " validate --id t1 > " + dir.file("v.txt"))
                                    .c_str());
    CHECK(WEXITSTATUS(rc2) == 0);
    CHECK(slurp(dir.file("v.txt")) == "true\n");
}
