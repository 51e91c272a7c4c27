#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#include <sys/wait.h>

namespace {

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(BDABD_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 256> buf;
    while (fgets(buf.data(), buf.size(), pipe)) out += buf.data();
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string problem(const char* name) {
    return std::string(BDABD_PROBLEM_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("eval") {
    RunResult r = run("eval -f '@p & q' -v 'p=T, q=B'");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "B\n");
    CHECK(run("eval -f '#p'").output == "F\n");  // unmapped variable reads N
    CHECK(run("eval -f 'p &' -v p=T").exit_code == 1);
    CHECK(run("eval -f p -v p=X").exit_code == 1);
}

TEST_CASE("sat") {
    RunResult r = run("sat -t 'p; !p'");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "yes\np=B\n");
    CHECK(run("sat -t '#p & !#p'").output == "no\n");
}

TEST_CASE("entail") {
    RunResult r = run("entail -t 'p & !p' -c q");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "no\np=B, q=N\n");
    CHECK(run("entail -t 'p | q; !p & @p' -c q").output == "yes\n");
    CHECK(run("entail -t 'p | q; !p & @p' -c q --engine oracle").output == "yes\n");
    CHECK(run("entail -t p -c q --engine wat").exit_code == 1);
}

TEST_CASE("equiv") {
    CHECK(run("equiv -f p -c '#p'").output == "yes\n");
    CHECK(run("equiv -f p -c '#p' --strong").output == "no\n");
    CHECK(run("equiv -f 'p & !p' -c 'p & %p' --strong").output == "yes\n");
}

TEST_CASE("translate") {
    CHECK(run("translate --to cl -f '!#p | q'").output == "~p__pos | q__pos\n");
    CHECK(run("translate --to triangle-embed -f 'p | !p'").output == "#p | !#p\n");
    CHECK(run("translate --to circ-embed -f 'p | !p'").output == "@p | %p\n");
    CHECK(run("translate --to cl -f '@p'").exit_code == 1);  // outside the fragment
}

TEST_CASE("solve on the bundled problems") {
    RunResult r = run("solve " + problem("example1_circ.bd") + " --class bd-minimal");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "@p\n");
    CHECK(run("solve " + problem("example1_triangle.bd") + " --class bd-minimal").output ==
          "!#p\n");
    CHECK(run("solve " + problem("example2_circ.bd") + " --class bd-minimal").output == "%p\n");
    CHECK(run("solve " + problem("example2_triangle.bd") + " --class proper").output.empty());
    CHECK(run("solve " + problem("example3_triangle.bd") + " --class theory-minimal")
              .output == "!#p & !#!p\n");
    CHECK(run("solve " + problem("minimality_triangle.bd") + " --class bd-minimal").output ==
          "!#p\nq\n");
    CHECK(run("solve " + problem("minimality_triangle.bd") + " --class theory-minimal")
              .output == "q\n");
}

TEST_CASE("solve via the classical reduction") {
    CHECK(run("solve " + problem("example1_triangle.bd") + " --class bd-minimal --via classical")
              .output == "!#p\n");
    CHECK(run("solve " + problem("example1_circ.bd") + " --class theory-minimal --via classical")
              .output == run("solve " + problem("example1_circ.bd") +
                             " --class theory-minimal").output);
    // the @-reduction does not preserve bd-minimality
    CHECK(run("solve " + problem("example1_circ.bd") + " --class bd-minimal --via classical")
              .exit_code == 1);
}

TEST_CASE("check") {
    RunResult r = run("check " + problem("minimality_triangle.bd") +
                      " --candidate '!#p' --class theory-minimal");
    CHECK(r.exit_code == 0);
    CHECK(r.output.substr(0, 3) == "no ");
    CHECK(r.output.find("q") != std::string::npos);
    CHECK(run("check " + problem("minimality_triangle.bd") +
              " --candidate '!#p' --class bd-minimal")
              .output == "yes\n");
    CHECK(run("check " + problem("example1_circ.bd") + " --candidate '@q'").exit_code == 1);
}

TEST_CASE("relevance") {
    CHECK(run("relevance " + problem("example1_circ.bd") + " --hyp '@p' --class bd-minimal")
              .output == "yes\n");
    CHECK(run("relevance " + problem("example1_circ.bd") + " --hyp '%p'").output == "no\n");
    CHECK(run("relevance " + problem("example2_triangle.bd") +
              " --hyp 'p' --necessary").output == "yes (vacuous)\n");
    CHECK(run("relevance " + problem("example1_circ.bd") + " --hyp 'p | q'").exit_code == 1);
}

TEST_CASE("reduce") {
    RunResult r = run("reduce " + problem("example1_triangle.bd"));
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("classical: true") != std::string::npos);
    CHECK(r.output.find("observe: q__pos") != std::string::npos);
    CHECK(r.output.find("p__neg") != std::string::npos);
}

TEST_CASE("input failures exit with 1") {
    CHECK(run("solve /no/such/file.bd").exit_code == 1);
    CHECK(run("solve " + problem("example1_circ.bd") + " --class wat").exit_code == 1);
    CHECK(run("wat").exit_code != 0);
}
