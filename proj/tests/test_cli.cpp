// End-to-end checks of the command-line tool: spawns the real binary, then
// inspects exit codes, written files, and report text.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "bchcs/bsm_io.hpp"
#include "bchcs/codes.hpp"
#include "bchcs/sensing_matrix.hpp"

using namespace bchcs;

namespace {

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    const std::string out_file = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") +
                                 "/bchcs_cli_out.txt";
    const std::string cmd = std::string(BCHCS_CLI_PATH) + " " + args + " > " + out_file + " 2>&1";
    const int status = std::system(cmd.c_str());
    std::ifstream f(out_file);
    std::stringstream ss;
    ss << f.rdbuf();
    return RunResult{WEXITSTATUS(status), ss.str()};
}

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

const std::string kTmp = "/tmp/bchcs_test_";

}  // namespace

TEST_CASE("construct writes the expected header and is deterministic") {
    const std::string f1 = kTmp + "m4a.bsm", f2 = kTmp + "m4b.bsm";
    CHECK(run_cli("construct --mtilde 4 --i 3 --out " + f1).exit_code == 0);
    CHECK(run_cli("construct --mtilde 4 --i 3 --out " + f2).exit_code == 0);
    const std::string body = slurp(f1);
    CHECK(body.rfind("BSM1 PM1 15 16\n", 0) == 0);
    CHECK(body.find("# mtilde=4 i=3 primpoly=0x13 parity=even\n") != std::string::npos);
    CHECK(body == slurp(f2));

    // an explicit polynomial in either rendering gives the same bytes
    CHECK(run_cli("construct --mtilde 4 --i 3 --primpoly x^4+x+1 --out " + f2).exit_code == 0);
    CHECK(body == slurp(f2));
    CHECK(run_cli("construct --mtilde 4 --i 3 --primpoly 0x13 --out " + f2).exit_code == 0);
    CHECK(body == slurp(f2));
}

TEST_CASE("construct accepts k and maps it to the gap") {
    const std::string f = kTmp + "pns.bsm";
    const RunResult r = run_cli("construct --mtilde 3 --k 7 --out " + f);
    CHECK(r.exit_code == 0);
    CHECK(slurp(f).rfind("BSM1 PM1 7 8\n", 0) == 0);
}

TEST_CASE("construct rejects i above the extension degree") {
    CHECK(run_cli("construct --mtilde 4 --i 5 --out " + kTmp + "x.bsm").exit_code == 1);
}

TEST_CASE("analyze reports the exact coherence and round-trips the file") {
    const std::string f = kTmp + "m4.bsm";
    REQUIRE(run_cli("construct --mtilde 4 --i 3 --out " + f).exit_code == 0);
    const RunResult r = run_cli("analyze --in " + f);
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("coherence = 1/15") != std::string::npos);
    CHECK(r.output.find("k = 15") != std::string::npos);
    // determinism of the report
    CHECK(run_cli("analyze --in " + f).output == r.output);

    const RunResult gersh = run_cli("analyze --in " + f + " --gersh-trials 50 --seed 3");
    CHECK(gersh.exit_code == 0);
    CHECK(gersh.output.find("-> ok") != std::string::npos);
}

TEST_CASE("analyze propagates io failures as exit 2") {
    CHECK(run_cli("analyze --in /nonexistent/path.bsm").exit_code == 2);
}

TEST_CASE("recover finds the support of a single column") {
    const std::string f = kTmp + "m4r.bsm";
    REQUIRE(run_cli("construct --mtilde 4 --i 3 --out " + f).exit_code == 0);
    const SensingMatrix A = read_bsm_file(f);
    write_vector_file(kTmp + "y.txt", A.column(5));
    const RunResult r = run_cli("recover --matrix " + f + " --samples " + kTmp + "y.txt --out " +
                                kTmp + "coef.txt");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("support = 5\n") != std::string::npos);
    const std::vector<double> coef = read_vector_file(kTmp + "coef.txt");
    REQUIRE(coef.size() == 16);
    CHECK(coef[5] == doctest::Approx(1.0).epsilon(1e-9));

    // dft backend drives the orbit records stored in the file
    const RunResult rd = run_cli("recover --matrix " + f + " --samples " + kTmp +
                                 "y.txt --backend dft");
    CHECK(rd.exit_code == 0);
    CHECK(rd.output.find("support = 5\n") != std::string::npos);
}

TEST_CASE("simulate reaches full success in the guaranteed regime") {
    const RunResult r =
        run_cli("simulate --mtilde 6 --i 3 --k 4 --trials 50 --seed 11 --mode ls_refine");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("success_rate = 1") != std::string::npos);
    CHECK(r.output.find("all selections inside true support: yes") != std::string::npos);
    // same seed, dft backend: same success, fewer multiplications per pass
    const RunResult rd =
        run_cli("simulate --mtilde 6 --i 3 --k 4 --trials 50 --seed 11 --backend dft");
    CHECK(rd.exit_code == 0);
    CHECK(rd.output.find("success_rate = 1") != std::string::npos);

    // matrix loaded from file instead of built in place
    const std::string f = kTmp + "m6sim.bsm";
    REQUIRE(run_cli("construct --mtilde 6 --i 3 --out " + f).exit_code == 0);
    const RunResult rf = run_cli("simulate --matrix " + f + " --k 4 --trials 20 --seed 11");
    CHECK(rf.exit_code == 0);
    CHECK(rf.output.find("success_rate = 1") != std::string::npos);
}

TEST_CASE("tables emits the reference rows") {
    const RunResult r = run_cli("tables --i 3 --mtilde 4,6,8,10");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("4, 3, 0x13, 0x35, 5") != std::string::npos);
    CHECK(r.output.find("6, 3, 0x43, 0xc5, 7") != std::string::npos);
    CHECK(r.output.find("8, 3, 0x11d, 0x3719, 13") != std::string::npos);
    CHECK(r.output.find("10, 3, 0x409, 0x71176bb, 26") != std::string::npos);
}

TEST_CASE("count prints the kappa and tau columns") {
    const RunResult r = run_cli("count --a 3 --b 1..8");
    CHECK(r.exit_code == 0);
    std::istringstream lines(r.output);
    std::string line;
    std::vector<std::string> rows;
    while (std::getline(lines, line)) rows.push_back(line);
    REQUIRE(rows.size() == 8);
    CHECK(rows[0] == "3 1 2 2");
    CHECK(rows[4] == "3 5 7 6");
    CHECK(rows[7] == "3 8 19 13");
}

TEST_CASE("devore and combine write the expected shapes") {
    const std::string fd = kTmp + "dev.bsm", fc = kTmp + "comb.bsm";
    CHECK(run_cli("devore --p 3 --r 1 --out " + fd).exit_code == 0);
    CHECK(slurp(fd).rfind("BSM1 BIN 9 9\n", 0) == 0);
    CHECK(run_cli("combine --p 3 --k 2 --out " + fc).exit_code == 0);
    CHECK(slurp(fc).rfind("BSM1 TERN 9 36\n", 0) == 0);
    CHECK(run_cli("combine --p 7 --k 3 --out " + fc).exit_code == 0);
    CHECK(slurp(fc).rfind("BSM1 TERN 49 2744\n", 0) == 0);
    CHECK(run_cli("devore --p 6 --r 1 --out " + fd).exit_code == 1);
}

TEST_CASE("single-column matrices report zero coherence") {
    const std::string f = kTmp + "one.bsm";
    std::ofstream out(f, std::ios::binary);
    out << "BSM1 BIN 3 1\n+\n0\n+\n";
    out.close();
    const RunResult r = run_cli("analyze --in " + f);
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("coherence = 0/1") != std::string::npos);
    CHECK(r.output.find("delta_k table empty") != std::string::npos);
}

TEST_CASE("csv format variants") {
    const std::string f = kTmp + "m4c.bsm";
    REQUIRE(run_cli("construct --mtilde 4 --i 3 --out " + f).exit_code == 0);
    const RunResult r = run_cli("analyze --in " + f + " --format csv");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("coherence_exact,1/15") != std::string::npos);
    const RunResult c = run_cli("count --a 3 --b 8 --format csv");
    CHECK(c.output.find("a,b,kappa,tau") != std::string::npos);
    CHECK(c.output.find("3,8,19,13") != std::string::npos);
}
