#include <catch2/catch_amalgamated.hpp>

#include <json.hpp>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

namespace fs = std::filesystem;

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

fs::path scratch_dir() {
    static fs::path dir = [] {
        fs::path d = fs::temp_directory_path() /
                     ("scrollulrich-cli-" + std::to_string(::getpid()));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

RunResult run_cli(const std::string& args, const std::string& env_prefix = {}) {
    fs::path out = scratch_dir() / "stdout.txt";
    fs::path err = scratch_dir() / "stderr.txt";
    std::string cmd = env_prefix + std::string(SCROLLULRICH_CLI_PATH) + " " + args + " >" +
                      out.string() + " 2>" + err.string();
    int status = std::system(cmd.c_str());
    RunResult r;
    if (status != -1 && WIFEXITED(status)) r.exit_code = WEXITSTATUS(status);
    r.out = slurp(out);
    r.err = slurp(err);
    return r;
}

std::size_t count_lines(const std::string& s) {
    std::size_t n = 0;
    for (char c : s)
        if (c == '\n') ++n;
    return n;
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("coh prints the full profile") {
    RunResult r = run_cli("coh --t 1 --xi 2 --alpha -3 --beta -4");
    CHECK(r.exit_code == 0);
    CHECK(r.out ==
          "class: 2xi+(-3,-4)\n"
          "h^0 = 0\n"
          "h^1 = 3\n"
          "h^2 = 0\n"
          "h^3 = 0\n"
          "chi = -3\n");

    RunResult zero = run_cli("coh --t 1 --xi -1 --alpha 5 --beta 5");
    CHECK(zero.exit_code == 0);
    CHECK(contains(zero.out, "h^0 = 0"));
    CHECK(contains(zero.out, "h^1 = 0"));
    CHECK(contains(zero.out, "h^2 = 0"));
    CHECK(contains(zero.out, "h^3 = 0"));
    CHECK(contains(zero.out, "chi = 0"));

    RunResult t2 = run_cli("coh --t 2 --xi 1 --alpha 0 --beta -6");
    CHECK(t2.exit_code == 0);
    CHECK(contains(t2.out, "h^1 = 15"));
}

TEST_CASE("parameter validation exits 2") {
    CHECK(run_cli("coh --e 0 --b 3 --k 3").exit_code == 2);
    CHECK(run_cli("coh --t 1 --e 1 --b 5 --k 5").exit_code == 2);  // ambiguous
    CHECK(run_cli("coh --xi 1").exit_code == 2);                   // no parameters
    CHECK(run_cli("coh --t 0").exit_code == 2);
    RunResult r = run_cli("coh --e 0 --b 3 --k 3");
    CHECK(contains(r.err, "error:"));
}

TEST_CASE("chi prints the exact Euler characteristic") {
    RunResult r = run_cli("chi --t 1 --xi 1");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "chi(xi) = 10\n");
}

TEST_CASE("chow summarizes the scroll and multiplies classes") {
    RunResult r = run_cli("chow --t 1");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "scroll (e,b,k) = (0,2,3)"));
    CHECK(contains(r.out, "sporadic t = 1"));
    CHECK(contains(r.out, "degree xi^3 = 9"));
    CHECK(contains(r.out, "sectional genus = 2"));
    CHECK(contains(r.out, "tangent c3 = 8"));

    RunResult triple = run_cli("chow --t 1 --d 1:0:0 --d 1:0:0 --d 1:0:0");
    CHECK(triple.exit_code == 0);
    CHECK(contains(triple.out, "D1.D2.D3 = 9"));

    RunResult square = run_cli("chow --e 2 --b 8 --k 7 --d 1:0:0");
    CHECK(square.exit_code == 0);
    CHECK(contains(square.out, "D1.D1 = (3,8,-7)"));
    CHECK(contains(square.out, "D1.D1.D1 = 23"));  // 6b - 9e - k
}

TEST_CASE("ulrich check classifies single classes") {
    RunResult m1 = run_cli("ulrich check --t 3 --xi 2 --alpha -1 --beta -4");
    CHECK(m1.exit_code == 0);
    CHECK(m1.out == "2xi+(-1,-4): ULRICH\n");

    RunResult o = run_cli("ulrich check --t 1 --verbose");
    CHECK(o.exit_code == 0);
    CHECK(contains(o.out, ": NOT_ULRICH"));
    CHECK(contains(o.out, "twist -1xi:"));
    CHECK(contains(o.out, "twist -3xi:"));
}

TEST_CASE("ulrich scan prints one row per non-excluded class") {
    RunResult t1 = run_cli("ulrich scan --t 1");
    CHECK(t1.exit_code == 0);
    CHECK(t1.out ==
          "(2,2)\tULRICH\n"
          "xi+(-1,1)\tULRICH\n"
          "xi+(2,-1)\tULRICH\n"
          "2xi+(-1,-2)\tULRICH\n");
    CHECK(contains(t1.err, "4 ULRICH"));
    CHECK(contains(t1.err, "0 UNDECIDED"));

    RunResult empty = run_cli("ulrich scan --e 1 --b 5 --k 5");
    CHECK(empty.exit_code == 0);
    CHECK(empty.out.empty());

    // out-of-range parameters are refused...
    CHECK(run_cli("ulrich scan --e 0 --b 3 --k 3").exit_code == 2);
    // ...unless explicitly unchecked, where the scan finds a non-standard set
    RunResult forced = run_cli("ulrich scan --e 0 --b 3 --k 3 --unchecked");
    CHECK(forced.exit_code == 0);
    CHECK(count_lines(forced.out) == 4);
    CHECK(contains(forced.out, "(4,2)\tULRICH"));
    CHECK(contains(forced.out, "2xi+(-3,-1)\tULRICH"));
}

TEST_CASE("tower build prints the numerical class") {
    RunResult r = run_cli("tower build --t 1 --family sporadic --rank 2");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "layers: M1,M2"));
    CHECK(contains(r.out, "rank = 2"));
    CHECK(contains(r.out, "c1 = 2xi+(1,0)"));
    CHECK(contains(r.out, "c2 = (4,4,-6)"));
    CHECK(contains(r.out, "c3 = 0"));
    CHECK(contains(r.out, "slope = 10"));
    CHECK(contains(r.out, "chi(End) = -4"));
    CHECK(contains(r.out, "moduli dim = 5"));

    RunResult layers = run_cli("tower build --t 1 --layers M1,M2,L2");
    CHECK(layers.exit_code == 0);
    CHECK(contains(layers.out, "rank = 3"));
    CHECK(contains(layers.out, "chi(End) = -9"));

    CHECK(run_cli("tower build --t 1").exit_code == 2);  // neither family nor layers
    CHECK(run_cli("tower build --t 1 --family sporadic").exit_code == 2);  // missing rank
    CHECK(run_cli("tower build --t 1 --layers M1,XX").exit_code == 2);
    CHECK(run_cli("tower build --e 1 --b 5 --k 5 --layers M1,M2").exit_code == 2);
}

TEST_CASE("tower verify runs the consistency checks") {
    RunResult r = run_cli("tower verify --t 2 --family mixed --rank 4");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "all checks passed"));
    CHECK_FALSE(contains(r.out, "[FAIL]"));

    RunResult lonly = run_cli("tower verify --e 0 --b 4 --k 5 --layers L1,L2");
    CHECK(lonly.exit_code == 0);
    CHECK(contains(lonly.out, "all checks passed"));
}

TEST_CASE("report emits TSV with the documented columns") {
    RunResult r = run_cli("report --claims THM21-DIM --t-range 1:50");
    CHECK(r.exit_code == 0);
    CHECK(count_lines(r.out) == 51);  // header + one row per t
    CHECK(contains(r.out, "claim_id\tt\tr\texpected\tcomputed\tstatus"));
    CHECK(contains(r.out, "THM21-DIM\t1\t-\t5\t5\tPASS"));
    CHECK(contains(r.out, "THM21-DIM\t50\t-\t397\t397\tPASS"));
    CHECK_FALSE(contains(r.out, "FAIL"));
}

TEST_CASE("report emits canonical JSON") {
    RunResult r = run_cli("report --claims ULRICH-SCAN --t-range 1:2 --format json");
    CHECK(r.exit_code == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j.at("engine").at("name") == "scroll-ulrich");
    REQUIRE(j.at("results").size() == 2);
    CHECK(j.at("results")[0].at("status") == "PASS");
    CHECK(j.at("results")[0].at("r").is_null());
    CHECK(j.at("summary").at("fail") == 0);
}

TEST_CASE("report exit codes distinguish expected and unexpected failures") {
    // documented discrepancy rows: FAIL in the table, exit 0 by default
    RunResult c1 = run_cli("report --claims C1-MIXED --t-range 2:2 --r-range 3:4");
    CHECK(c1.exit_code == 0);
    CHECK(contains(c1.out, "FAIL"));
    CHECK(run_cli("report --claims C1-MIXED --t-range 2:2 --r-range 3:4 --strict").exit_code ==
          1);

    // a mixed-tower chi(End) mismatch is always unexpected
    RunResult chi = run_cli("report --claims CHI-MIXED --t-range 1:1 --r-range 4:4");
    CHECK(chi.exit_code == 1);
    CHECK(contains(chi.out, "FAIL"));

    RunResult ineq = run_cli("report --claims INEQPAL --t-range 1:30 --r-range 2:30");
    CHECK(ineq.exit_code == 0);
    CHECK_FALSE(contains(ineq.out, "FAIL"));
}

TEST_CASE("report usage errors exit 2") {
    CHECK(run_cli("report --t-range 5").exit_code == 2);
    CHECK(run_cli("report --t-range 3:1").exit_code == 2);
    CHECK(run_cli("report --r-range x:y").exit_code == 2);
    CHECK(run_cli("report --format xml").exit_code == 2);
    CHECK(run_cli("report --claims NOT-A-CLAIM").exit_code == 2);
    CHECK(run_cli("report --registry /no/such/file.json").exit_code == 2);
}

TEST_CASE("report can load an external registry") {
    // the shipped manifest file is equivalent to the builtin registry
    RunResult shipped = run_cli(std::string("report --registry ") + SCROLLULRICH_REGISTRY_PATH +
                                " --claims INEQPAL --t-range 1:2 --r-range 2:3");
    CHECK(shipped.exit_code == 0);
    CHECK(count_lines(shipped.out) == 5);

    // a custom manifest with its own claim id
    fs::path custom = scratch_dir() / "custom.json";
    {
        std::ofstream out(custom);
        out << R"({
  "format": 1,
  "claims": [
    {
      "id": "CUSTOM-DIM",
      "ref": "local experiment",
      "evaluator": { "name": "moduli_dim", "base": ["M1", "M2"] },
      "domain": { "t_min": 1 },
      "expected": { "kind": "int", "all": "8*t-3" }
    }
  ]
})";
    }
    RunResult r = run_cli("report --registry " + custom.string() +
                          " --claims CUSTOM-DIM --t-range 1:3");
    CHECK(r.exit_code == 0);
    CHECK(count_lines(r.out) == 4);
    CHECK(contains(r.out, "CUSTOM-DIM\t3\t-\t21\t21\tPASS"));
}

TEST_CASE("report output is byte-identical across thread counts") {
    std::string args = "report --claims L34-RECURSIONS --t-range 1:3 --r-range 2:6";
    RunResult one = run_cli(args, "SCROLL_ULRICH_THREADS=1 ");
    RunResult five = run_cli(args, "SCROLL_ULRICH_THREADS=5 ");
    CHECK(one.exit_code == 0);
    CHECK(five.exit_code == 0);
    CHECK_FALSE(one.out.empty());
    CHECK(one.out == five.out);
}

TEST_CASE("help and unknown commands") {
    CHECK(run_cli("--help").exit_code == 0);
    CHECK(contains(run_cli("--help").out, "ulrich"));
    CHECK(run_cli("frobnicate").exit_code == 2);
    CHECK(run_cli("").exit_code == 2);
    CHECK(run_cli("ulrich").exit_code == 2);  // needs check or scan
}
