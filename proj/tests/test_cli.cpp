// Integration tests driving the tga binary end to end. The binary path
// arrives as argv[1] from ctest.
#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

namespace {

std::string g_binary;

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = g_binary + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("eval prints canonical text and round trips") {
    CHECK(run("eval \"e[2]*e[1]\"").out == "(w^2)*e[1]*e[2]\n");
    CHECK(run("eval \"inv(1 + e[1])\"").out == "1 + (-1)*e[1] + e[1]^2\n");
    CHECK(run("eval \"grade(0, conj(e[1])*e[1])\"").out == "0\n");

    // output re-parses to an equal element
    RunResult first = run("eval \"(1/2 + i)*e[1]*e[2] + w*e[3] - 2\"");
    CHECK(first.exit_code == 0);
    std::string echo = first.out.substr(0, first.out.size() - 1);
    RunResult second = run("eval \"" + echo + "\"");
    CHECK(second.out == first.out);
}

TEST_CASE("exit codes: 0 ok, 1 domain, 2 parse") {
    CHECK(run("eval \"1 + e[1]\"").exit_code == 0);
    CHECK(run("eval \"inv(e[1])\"").exit_code == 1);
    CHECK(run("eval \"e[\"").exit_code == 2);
    CHECK(run("covariance --density \"fbm:H=2\" --t-grid 0.5").exit_code == 1);
}

TEST_CASE("determinism: identical invocations are byte-identical") {
    std::string args = "covariance --t-grid 0.1:1.0:5 --mode quadrature";
    CHECK(run(args).out == run(args).out);
    std::string series = "covariance --t-grid 0.25,0.75 --mode series --orders 32";
    CHECK(run(series).out == run(series).out);
}

TEST_CASE("laws subcommand") {
    RunResult ok = run("laws --seed 1 --trials 25");
    CHECK(ok.exit_code == 0);
    CHECK(run("laws --trials 0").exit_code == 0);  // vacuous pass
}

TEST_CASE("covariance CSV: Brownian grid matches min(t,s)") {
    RunResult r = run("covariance --t-grid 0.25,0.5,1.0 --mode quadrature");
    REQUIRE(r.exit_code == 0);
    std::istringstream in(r.out);
    std::string header;
    std::getline(in, header);
    CHECK(header == "s\\t,0.25,0.5,1");
    std::vector<double> ts = {0.25, 0.5, 1.0};
    for (double s : ts) {
        std::string line;
        REQUIRE(std::getline(in, line));
        std::replace(line.begin(), line.end(), ',', ' ');
        std::istringstream row(line);
        double sval = 0;
        row >> sval;
        CHECK(sval == doctest::Approx(s));
        for (double t : ts) {
            double v = 0;
            row >> v;
            CHECK(v == doctest::Approx(std::min(t, s)).epsilon(1e-6));
        }
    }
}

TEST_CASE("fbm at H=0.5 equals the Brownian table") {
    RunResult bm = run("covariance --t-grid 0.2,0.6,0.9 --mode quadrature");
    RunResult fbm = run("covariance --density fbm:H=0.5 --t-grid 0.2,0.6,0.9 --mode quadrature");
    REQUIRE(bm.exit_code == 0);
    REQUIRE(fbm.exit_code == 0);
    std::istringstream in_b(bm.out), in_f(fbm.out);
    std::string line_b, line_f;
    std::getline(in_b, line_b);
    std::getline(in_f, line_f);
    CHECK(line_b == line_f);  // same header
    while (std::getline(in_b, line_b) && std::getline(in_f, line_f)) {
        std::replace(line_b.begin(), line_b.end(), ',', ' ');
        std::replace(line_f.begin(), line_f.end(), ',', ' ');
        std::istringstream rb(line_b), rf(line_f);
        double vb = 0, vf = 0;
        while (rb >> vb && rf >> vf) CHECK(vb == doctest::Approx(vf).epsilon(1e-6));
    }
}

TEST_CASE("table densities pass the envelope gate") {
    std::string path = "/tmp/tga_density_table.csv";
    {
        std::ofstream t(path);
        for (double u = 0.0; u <= 2.0; u += 0.1)
            t << u << "," << std::min(u * u, 1.0) << "\n";
    }
    RunResult r = run("covariance --density table:" + path + " --t-grid 0.3,0.8");
    CHECK(r.exit_code == 0);
    std::remove(path.c_str());
}

TEST_CASE("norm, vage-check, berezin, diff-check produce flat reports") {
    RunResult n = run("norm --input \"3*e[1]\" --p 2 --hp -1");
    CHECK(n.exit_code == 0);
    CHECK(n.out.rfind("kind,value\np2,3\n", 0) == 0);

    RunResult v = run("vage-check --random 5 --seed 3 --p 3 --q 1");
    CHECK(v.exit_code == 0);
    CHECK(v.out.rfind("lhs,rhs,constant,margin,holds\n", 0) == 0);
    CHECK(std::count(v.out.begin(), v.out.end(), '\n') == 6);

    RunResult b = run("berezin --index \"e[1]\" --input \"2*e[1] + e[2]\"");
    CHECK(b.out == "2\n");

    RunResult d = run("diff-check --t 0.5 --orders 48");
    CHECK(d.exit_code == 0);
    CHECK(d.out.rfind("h,error\n", 0) == 0);
    CHECK(d.out.find("ratios,") != std::string::npos);
}

TEST_CASE("config file adjusts defaults and flags override") {
    std::string path = "/tmp/tga_config.cfg";
    {
        std::ofstream c(path);
        c << "# defaults\nseries.orders = 16\nthreads = 1\n";
    }
    RunResult r = run("--config " + path + " covariance --t-grid 0.5,0.9 --mode series");
    CHECK(r.exit_code == 0);
    RunResult r2 = run("--config " + path +
                       " covariance --t-grid 0.5,0.9 --mode series --orders 64");
    CHECK(r2.exit_code == 0);
    CHECK(r.out != r2.out);  // truncation override changed the numbers
    std::remove(path.c_str());

    CHECK(run("--config /nonexistent.cfg eval 1").exit_code == 1);
}

int main(int argc, char** argv) {
    if (argc > 1) g_binary = argv[1];
    doctest::Context ctx;
    ctx.applyCommandLine(1, argv);
    return ctx.run();
}
