// End-to-end contract tests for the matchfab binary (path given as argv[1]):
// formats, determinism, exit codes, sidecar files.
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

int failures = 0;

#define CHECK_MSG(cond, msg)                                                     \
    do {                                                                         \
        if (!(cond)) {                                                           \
            std::cerr << "[FAIL] " << __FILE__ << ":" << __LINE__ << " " << msg  \
                      << "\n";                                                   \
            ++failures;                                                          \
        }                                                                        \
    } while (0)

std::string g_binary;

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args, const std::string& env = "") {
    const std::string cmd = env + g_binary + " " + args + " 2>/dev/null";
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string slurp(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    std::ostringstream os;
    os << is.rdbuf();
    return os.str();
}

size_t count_lines(const std::string& s) {
    size_t lines = 0;
    for (char c : s)
        if (c == '\n') ++lines;
    return lines;
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: test_cli <path-to-matchfab>\n";
        return 2;
    }
    g_binary = argv[1];

    { // edge list generation
        const auto r = run("generate --family nonfractal --g 2 --format edgelist");
        CHECK_MSG(r.exit_code == 0, "generate exit code");
        CHECK_MSG(r.out.substr(0, 6) == "12 16\n", "edge list header, got: " + r.out.substr(0, 6));
        CHECK_MSG(count_lines(r.out) == 17, "header plus 16 edge lines");
    }

    { // determinism: identical invocations byte-identical
        const auto a = run("generate --family fractal --g 3 --format edgelist");
        const auto b = run("generate --family fractal --g 3 --format edgelist");
        CHECK_MSG(a.out == b.out && !a.out.empty(), "bit-identical repeated runs");
    }

    { // K4 via sierpinski g=1
        const auto r = run("generate --family sierpinski --g 1 --format edgelist");
        CHECK_MSG(r.out == "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n", "S++_1 is K4");
    }

    { // dot output
        const auto r = run("generate --family sierpinski --g 1 --format dot");
        CHECK_MSG(r.exit_code == 0, "dot exit code");
        CHECK_MSG(r.out.find("graph matchfab {") == 0, "dot header");
        CHECK_MSG(r.out.find("0 -- 1;") != std::string::npos, "dot edge line");
    }

    { // json output carries hubs and edges
        const auto r = run("generate --family nonfractal --g 1 --format json");
        CHECK_MSG(r.exit_code == 0, "json exit code");
        CHECK_MSG(r.out.find("\"n\": 4") != std::string::npos, "json n");
        CHECK_MSG(r.out.find("\"hubs\"") != std::string::npos, "json hubs");
    }

    { // orientation sidecar
        const std::string base = "/tmp/matchfab_cli_test_h2";
        std::remove(base.c_str());
        std::remove((base + ".orient").c_str());
        const auto r = run("generate --family nonfractal --g 2 --oriented --out " + base);
        CHECK_MSG(r.exit_code == 0, "oriented generate exit code");
        CHECK_MSG(slurp(base).substr(0, 6) == "12 16\n", "graph file written");
        const std::string orient = slurp(base + ".orient");
        CHECK_MSG(count_lines(orient) == 16, "sidecar has one line per edge");
        CHECK_MSG(orient.substr(0, 4) == "0 1\n", "first directed edge v1->v2");
        std::remove(base.c_str());
        std::remove((base + ".orient").c_str());
    }

    { // exit code contract
        CHECK_MSG(run("generate --family fractal --g 99").exit_code == 3, "cap exceeded is 3");
        CHECK_MSG(run("generate --family farey --g 2").exit_code == 2, "bad family is 2");
        CHECK_MSG(run("generate --family fractal").exit_code == 2, "missing --g is 2");
        CHECK_MSG(run("generate --family fractal --g 0").exit_code == 2, "nonpositive g is 2");
        CHECK_MSG(run("nonsense").exit_code == 2, "unknown subcommand is 2");
        CHECK_MSG(run("generate --family fractal --g 2 --format xml").exit_code == 2,
                  "unknown format is 2");
    }

    { // env var generation cap
        const auto r = run("generate --family fractal --g 4", "MATCHFAB_MAX_G=3 ");
        CHECK_MSG(r.exit_code == 3, "MATCHFAB_MAX_G lowers the cap");
        const auto ok = run("generate --family fractal --g 4", "MATCHFAB_MAX_G=4 ");
        CHECK_MSG(ok.exit_code == 0, "cap boundary is inclusive");
    }

    { // verify: all checks pass at small generations
        const auto r = run("verify --family fractal --g 2");
        CHECK_MSG(r.exit_code == 0, "verify fractal g=2 exit 0");
        CHECK_MSG(r.out.find("\"fail\"") == std::string::npos, "no failing checks");
        CHECK_MSG(r.out.find("\"maximum_matching_count_bruteforce\": \"pass\"") != std::string::npos,
                  "brute-force count check ran");

        const auto rn = run("verify --family nonfractal --g 3");
        CHECK_MSG(rn.exit_code == 0, "verify nonfractal g=3 exit 0");
        CHECK_MSG(rn.out.find("\"pfaffian_certification\": \"pass\"") != std::string::npos,
                  "pfaffian check ran");
        CHECK_MSG(rn.out.find("\"pm_count_determinant\": \"pass\"") != std::string::npos,
                  "determinant count check ran");
        // matchings serialize as JSON [u, v] pairs
        CHECK_MSG(rn.out.find("\"perfect_matching\": [") != std::string::npos &&
                      rn.out.find("[\n          0,\n") != std::string::npos,
                  "matching serialized as pair list");

        const auto rs = run("verify --family sierpinski --g 2");
        CHECK_MSG(rs.exit_code == 0, "verify sierpinski g=2 exit 0");
    }

    { // verify beyond a cap: skipped checks, exit 3, nothing failed
        const auto r = run("verify --family nonfractal --g 4 --enum-cap 10 --det-cap 10 --cycle-cap 10");
        CHECK_MSG(r.exit_code == 3, "skipped-only verify exits 3");
        CHECK_MSG(r.out.find("\"fail\"") == std::string::npos, "skips are not failures");
        CHECK_MSG(r.out.find("\"skipped\"") != std::string::npos, "skips are reported");
    }

    { // report table: closed-form matching numbers
        const auto r = run("report --family fractal --g 1 --g-max 4");
        CHECK_MSG(r.exit_code == 0, "report exit code");
        std::istringstream is(r.out);
        std::string line;
        std::getline(is, line); // header
        const int expect_nu[] = {2, 4, 12, 44};
        for (int i = 0; i < 4; ++i) {
            std::getline(is, line);
            std::istringstream row(line);
            int g;
            std::string n, e, nu;
            row >> g >> n >> e >> nu;
            CHECK_MSG(g == i + 1 && nu == std::to_string(expect_nu[i]),
                      "fractal nu row " + std::to_string(i + 1) + ": " + line);
        }
    }

    { // report json: exact decimal strings
        const auto r = run("report --family sierpinski --g 2 --g-max 4 --format json");
        CHECK_MSG(r.exit_code == 0, "json report exit code");
        CHECK_MSG(r.out.find("\"perfect_matchings\": \"8\"") != std::string::npos, "psi(S2)=8");
        CHECK_MSG(r.out.find("\"perfect_matchings\": \"128\"") != std::string::npos, "psi(S3)=128");
        CHECK_MSG(r.out.find("\"perfect_matchings\": \"524288\"") != std::string::npos,
                  "psi(S4)=2^19 exact decimal");
    }

    { // report range validation
        CHECK_MSG(run("report --family fractal --g 3 --g-max 2").exit_code == 2, "bad range is 2");
    }

    if (failures == 0) {
        std::cout << "test_cli: all checks passed\n";
        return 0;
    }
    std::cerr << "test_cli: " << failures << " failure(s)\n";
    return 1;
}
