#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

// Drives the installed binary end to end through a shell.  LATGB_CLI_PATH is
// injected by the build.

namespace {

namespace fs = std::filesystem;
using Json = nlohmann::json;

struct RunResult {
    int code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

fs::path scratch_dir() {
    const fs::path dir =
        fs::temp_directory_path() / ("latgb_cli_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    return dir;
}

RunResult run_cli(const std::string& args) {
    static int counter = 0;
    const fs::path dir = scratch_dir();
    const fs::path o = dir / ("out" + std::to_string(++counter));
    const fs::path e = dir / ("err" + std::to_string(counter));
    const std::string cmd = std::string(LATGB_CLI_PATH) + " " + args + " >" +
                            o.string() + " 2>" + e.string();
    const int status = std::system(cmd.c_str());
    RunResult r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(o);
    r.err = slurp(e);
    return r;
}

fs::path write_problem(const std::string& name, const std::string& content) {
    const fs::path p = scratch_dir() / name;
    std::ofstream out(p, std::ios::binary);
    out << content;
    return p;
}

const std::string kWorked =
    "# three generators, two survive\n"
    "ring x, y order grevlex\n"
    "gen 3*x^2\n"
    "gen 5*x^2\n"
    "gen y\n";

}  // namespace

TEST_CASE("gb emits the canonical basis as text plus JSON") {
    const fs::path f = write_problem("worked.txt", kWorked);
    const RunResult r = run_cli("gb " + f.string());
    REQUIRE(r.code == 0);
    CHECK(r.out.find("short reduced basis") != std::string::npos);
    CHECK(r.out.find("x^2") != std::string::npos);

    const RunResult j = run_cli("gb " + f.string() + " --json");
    REQUIRE(j.code == 0);
    const Json doc = Json::parse(j.out);
    CHECK(doc["variables"] == Json::parse(R"(["x","y"])"));
    CHECK(doc["order"] == "grevlex");
    CHECK(doc["basis"] == Json::parse(R"(["y","x^2"])"));
    CHECK(doc["monic"] == true);
    // JSON-only mode prints nothing but the document
    CHECK(j.out.front() == '{');
}

TEST_CASE("free reports rank and monomial basis for free quotients") {
    const fs::path f = write_problem("worked2.txt", kWorked);
    const RunResult r = run_cli("free " + f.string() + " --json");
    REQUIRE(r.code == 0);
    const Json doc = Json::parse(r.out);
    CHECK(doc["free"] == true);
    CHECK(doc["rank"] == 2);
    CHECK(doc["basis_monomials"] == Json::parse(R"(["1","x"])"));
}

TEST_CASE("free names the obstructing leading coefficient when not free") {
    const fs::path f = write_problem("nonfree.txt", "ring x, y\ngen 2*x\ngen y\n");
    const RunResult r = run_cli("free " + f.string() + " --json");
    REQUIRE(r.code == 0);
    const Json doc = Json::parse(r.out);
    CHECK(doc["free"] == false);
    CHECK(doc["witness"]["monomial"] == "x");
    CHECK(doc["witness"]["leading_coefficient"] == 2);
}

TEST_CASE("embed produces the canonical lattice with rank flags") {
    const fs::path f = write_problem("worked3.txt", kWorked);
    const RunResult r = run_cli("embed " + f.string() + " --ideal '6*x' --json");
    REQUIRE(r.code == 0);
    const Json doc = Json::parse(r.out);
    CHECK(doc["lattice"]["ambient_dim"] == 2);
    CHECK(doc["lattice"]["basis"] == Json::parse("[[0,6]]"));
    CHECK(doc["rank"] == 1);
    CHECK(doc["full_rank"] == false);
    CHECK(!doc.contains("det"));
}

TEST_CASE("embed reports the determinant of full-rank images") {
    const fs::path f = write_problem(
        "gauss.txt", "ring y, x order lex\ngen y - x\ngen x^2 + 1\n");
    const RunResult r = run_cli("embed " + f.string() + " --ideal '1 + x' --json");
    REQUIRE(r.code == 0);
    const Json doc = Json::parse(r.out);
    CHECK(doc["lattice"]["basis"] == Json::parse("[[1,1],[0,2]]"));
    CHECK(doc["full_rank"] == true);
    CHECK(doc["det"] == 2);
}

TEST_CASE("embed refuses non-free quotients with exit code 2") {
    const fs::path f = write_problem("nonfree2.txt", "ring x, y\ngen 2*x\ngen y\n");
    const RunResult r = run_cli("embed " + f.string() + " --ideal 'x' --json");
    CHECK(r.code == 2);
    CHECK(r.err.find("no ideal") != std::string::npos);
    CHECK(r.err.find("integer lattice") != std::string::npos);
}

TEST_CASE("cyclic-check accepts an ideal and blesses its image") {
    const fs::path f =
        write_problem("cyc.txt", "ring x\ngen x^3 - 1\nshape 3\n");
    const RunResult r = run_cli("cyclic-check " + f.string() + " --ideal '1 + x' --json");
    REQUIRE(r.code == 0);
    const Json doc = Json::parse(r.out);
    CHECK(doc["cyclic"] == true);
    CHECK(doc["shape"] == Json::parse("[3]"));
    CHECK(doc["lattice"]["basis"] == Json::parse("[[1,0,1],[0,1,1],[0,0,2]]"));
}

TEST_CASE("cyclic-check pinpoints the violating row and axis") {
    const fs::path f =
        write_problem("cyc2.txt", "ring x\ngen x^3 - 1\nshape 3\n");
    const RunResult r =
        run_cli("cyclic-check " + f.string() + " --lattice '[[1,0,0]]' --json");
    REQUIRE(r.code == 0);
    const Json doc = Json::parse(r.out);
    CHECK(doc["cyclic"] == false);
    CHECK(doc["witness"]["row"] == 0);
    CHECK(doc["witness"]["axis"] == 1);
}

TEST_CASE("cyclic-check without a lattice or ideal is a usage error") {
    const fs::path f =
        write_problem("cyc3.txt", "ring x\ngen x^3 - 1\nshape 3\n");
    const RunResult r = run_cli("cyclic-check " + f.string());
    CHECK(r.code == 1);
}

TEST_CASE("lattice-ideal distinguishes binomial and toric generators") {
    const RunResult r = run_cli("lattice-ideal --lattice '[[2,-2]]' --json");
    REQUIRE(r.code == 0);
    const Json doc = Json::parse(r.out);
    CHECK(doc["saturated"] == false);
    CHECK(doc["binomial_generators"] == Json::parse(R"(["x1^2 - x2^2"])"));
    CHECK(doc["toric_basis"] == Json::parse(R"(["x1 - x2"])"));
}

TEST_CASE("lattice-ideal takes variable names from a problem file") {
    const fs::path f = write_problem("ringonly.txt", "ring x, y\n");
    const RunResult r =
        run_cli("lattice-ideal " + f.string() + " --lattice '[[2,-2]]' --json");
    REQUIRE(r.code == 0);
    const Json doc = Json::parse(r.out);
    CHECK(doc["binomial_generators"] == Json::parse(R"(["x^2 - y^2"])"));
    CHECK(doc["toric_basis"] == Json::parse(R"(["x - y"])"));
}

TEST_CASE("sat reports invariant factors and the saturation") {
    const RunResult r = run_cli("sat --lattice '[[2,0]]' --json");
    REQUIRE(r.code == 0);
    const Json doc = Json::parse(r.out);
    CHECK(doc["invariant_factors"] == Json::parse("[2]"));
    CHECK(doc["saturated"] == false);
    CHECK(doc["saturation"]["basis"] == Json::parse("[[1,0]]"));
}

TEST_CASE("sat accepts the emitted lattice document form") {
    const RunResult r =
        run_cli(R"(sat --lattice '{"ambient_dim":2,"basis":[]}' --json)");
    REQUIRE(r.code == 0);
    const Json doc = Json::parse(r.out);
    CHECK(doc["invariant_factors"] == Json::parse("[]"));
    CHECK(doc["saturated"] == true);
    CHECK(doc["saturation"]["basis"] == Json::parse("[]"));
}

TEST_CASE("parse failures exit with code 1") {
    CHECK(run_cli("gb /definitely/not/a/file.txt").code == 1);
    const fs::path f = write_problem("bad.txt", "ring x\ngen x^\n");
    CHECK(run_cli("gb " + f.string()).code == 1);
    const fs::path g = write_problem("badlat.txt", "ring x\n");
    CHECK(run_cli("sat --lattice 'not json'").code == 1);
    CHECK(run_cli("sat --lattice '[[1,2],[3]]'").code == 1);
}

TEST_CASE("usage errors exit with code 1 and help with 0") {
    CHECK(run_cli("nosuchcommand").code == 1);
    CHECK(run_cli("").code == 1);
    CHECK(run_cli("--help").code == 0);
    CHECK(run_cli("embed").code == 1);  // missing file and --ideal
}

TEST_CASE("the completion step guard exits with code 3") {
    const fs::path f = write_problem("pairs.txt", "ring x, y\ngen 2*x\ngen 3*y\n");
    const RunResult r = run_cli("gb " + f.string() + " --max-steps 1");
    CHECK(r.code == 3);
    CHECK(r.err.find("resource") != std::string::npos);
}

TEST_CASE("--order overrides the declaration in the file") {
    const fs::path f =
        write_problem("ord.txt", "ring x, y order lex\ngen x + y\n");
    const RunResult a = run_cli("gb " + f.string() + " --json");
    const RunResult b = run_cli("gb " + f.string() + " --order grevlex --json");
    REQUIRE(a.code == 0);
    REQUIRE(b.code == 0);
    CHECK(Json::parse(a.out)["order"] == "lex");
    CHECK(Json::parse(b.out)["order"] == "grevlex");
}

TEST_CASE("--out writes exactly the JSON document") {
    const fs::path f = write_problem("worked4.txt", kWorked);
    const fs::path out = scratch_dir() / "artifact.json";
    const RunResult r =
        run_cli("free " + f.string() + " --json --out " + out.string());
    REQUIRE(r.code == 0);
    CHECK(slurp(out) == r.out);
}

TEST_CASE("identical invocations produce byte-identical output") {
    const fs::path f = write_problem("worked5.txt", kWorked);
    const std::vector<std::string> cases = {
        "gb " + f.string() + " --json",
        "free " + f.string() + " --json",
        "embed " + f.string() + " --ideal '6*x' --json",
        "sat --lattice '[[4,2],[0,6]]' --json",
        "lattice-ideal --lattice '[[2,-2]]' --json",
    };
    for (const auto& args : cases) {
        const RunResult a = run_cli(args);
        const RunResult b = run_cli(args);
        REQUIRE(a.code == 0);
        CHECK(a.out == b.out);
    }
}
