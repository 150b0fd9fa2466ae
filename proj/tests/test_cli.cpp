#include <doctest.h>

#include <array>
#include <cstdio>
#include <unistd.h>
#include <string>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run(const std::string& args) {
    RunResult r;
    std::string cmd = std::string(MVTR_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 512> buf{};
    while (fgets(buf.data(), buf.size(), pipe)) r.output += buf.data();
    int status = pclose(pipe);
    r.exit_code = WEXITSTATUS(status);
    return r;
}

}  // namespace

TEST_CASE("volume command") {
    auto r = run("volume --g 1 --n 1");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "2/3 * pi^2\n");
    CHECK(run("volume --g 0 --n 4").output == "2 * pi^2\n");
    CHECK(run("volume --g 2 --n 0").output == "1/15 * pi^6\n");
    CHECK(run("volume --g 0 --n 3").output == "4\n");

    auto bad = run("volume --g 1 --n 0");
    CHECK(bad.exit_code != 0);
    CHECK(bad.output.find("undefined volume") != std::string::npos);

    auto dec = run("volume --g 1 --n 1 --format decimal");
    CHECK(dec.output.substr(0, 10) == "6.57973626");
    CHECK(run("volume --g 1 --n 1 --format latex").output == "\\frac{2}{3}\\pi^{2}\n");
}

TEST_CASE("polynomial command and method agreement") {
    CHECK(run("polynomial --g 1 --n 1").output == "d=[0]: 1/12*pi^2 ; d=[1]: 1/8\n");
    CHECK(run("polynomial --g 0 --n 3").output == "d=[0,0,0]: 1\n");
    CHECK(run("polynomial --g 1 --n 2 --method graphs").output ==
          run("polynomial --g 1 --n 2 --method virasoro").output);
}

TEST_CASE("sv and sts commands") {
    CHECK(run("sv --g 2 --n 0").output == "pi^2*SV = 19/6\n");
    CHECK(run("sv --g 0 --n 4").output == "pi^2*SV = 3/2\n");
    CHECK(run("sts --g 1 --n 1 --lengths 2 --order 3").output == "1/2*q + 3/2*q^2 + 2*q^3\n");
    auto bad = run("sv --g 0 --n 3");
    CHECK(bad.exit_code != 0);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run("").exit_code == 2);
    CHECK(run("volume --g 1").exit_code == 2);  // missing --n
    CHECK(run("volume --g 1 --n 1 --format bogus").exit_code == 2);
}

TEST_CASE("verify suite is deterministic and exits 0") {
    auto r1 = run("verify --suite oracle");
    auto r2 = run("verify --suite oracle");
    CHECK(r1.exit_code == 0);
    CHECK(r1.output == r2.output);
    CHECK(r1.output.find("MISMATCH") == std::string::npos);
    CHECK(r1.output.find("suite oracle: PASS") != std::string::npos);
}

TEST_CASE("cache round trip through the CLI") {
    std::string path = "/tmp/mvtr_cli_cache_" + std::to_string(::getpid());
    auto saved = run("cache save --path " + path + " --gmax 1 --nmax 2");
    CHECK(saved.exit_code == 0);
    auto loaded = run("cache load --path " + path);
    CHECK(loaded.exit_code == 0);
    CHECK(loaded.output.find("levels") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("table emission") {
    auto csv = run("table --which mv --gmax 1 --nmax 3 --format csv");
    CHECK(csv.exit_code == 0);
    CHECK(csv.output.find("g,n,value_rational,pi_power\n") == 0);
    CHECK(csv.output.find("1,1,2/3,2") != std::string::npos);
    auto latex = run("table --which sv --gmax 1 --nmax 2 --format latex");
    CHECK(latex.output.find("\\frac{7}{3}") != std::string::npos);
}

TEST_CASE("graph dump") {
    auto r = run("graphs --g 1 --n 1");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "g=0;edges=[(0,0,0,1)];leaves=[0];aut=2\ng=1;edges=[];leaves=[0];aut=1\n");
}
