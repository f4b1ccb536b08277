#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(SUMMA_CLI_PATH) + " " + args + " 2>&1";
  std::array<char, 4096> buf{};
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  while (fgets(buf.data(), buf.size(), pipe) != nullptr) out += buf.data();
  int status = pclose(pipe);
  int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return {code, out};
}

}  // namespace

TEST_CASE("sum: euler-rational on Z16 is exact and exits 0") {
  auto r = run_cli("sum --method euler-rational \"fixture(Z16)\"");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("1/17") != std::string::npos);
  CHECK(r.out.find("Summed") != std::string::npos);
}

TEST_CASE("sum: borel on G-2") {
  auto r = run_cli("sum --method borel --tol 1e-6 \"fixture(G-2)\"");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("Summed") != std::string::npos);
  CHECK(r.out.find("0.333333") != std::string::npos);
}

TEST_CASE("sum: p-adic method spec") {
  auto r = run_cli("sum --method padic:p=7,k=12 \"sqrt(1+(7/9)*s)\"");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("Summed") != std::string::npos);
  CHECK(r.out.find("7^") != std::string::npos);
}

TEST_CASE("telescope: one-one over Q and over Z") {
  auto q = run_cli("telescope --base add --codomain Q \"fixture(one-one)\"");
  CHECK(q.exit_code == 0);
  CHECK(q.out.find("1/2") != std::string::npos);
  CHECK(q.out.find("1 + s") != std::string::npos);

  auto z = run_cli("telescope --base add --codomain Z \"fixture(one-one)\"");
  CHECK(z.exit_code == 3);
  CHECK(z.out.find("ValueEscapesCodomain") != std::string::npos);
}

TEST_CASE("telescope: gap counterexample is inconclusive with exit 2") {
  auto r = run_cli(
      "telescope --base absolute --max-degree 8 --n-max 4000 \"fixture(conv-not-tel)\"");
  CHECK(r.exit_code == 2);
  CHECK(r.out.find("Inconclusive") != std::string::npos);
}

TEST_CASE("coeffs dump format") {
  auto r = run_cli("coeffs -n 5 \"fixture(ratnottel-T)\"");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "0: 1\n1: -2\n2: 1/2\n3: 1/3\n4: 5/24\n");
  auto r2 = run_cli("coeffs -n 4 \"1/(1+2*s)\"");
  CHECK(r2.out == "0: 1\n1: -2\n2: 4\n3: -8\n");
  auto r3 = run_cli("coeffs -n 3 \"0\"");
  CHECK(r3.out == "0: 0\n1: 0\n2: 0\n");
}

TEST_CASE("fixtures list mentions the catalog") {
  auto r = run_cli("fixtures list");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("G-2") != std::string::npos);
  CHECK(r.out.find("Borel") != std::string::npos);  // citation line for G-2
}

TEST_CASE("json report validates against the schema shape") {
  auto r = run_cli("sum --method euler-rational --json \"fixture(Z16)\"");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["schema"] == "summa-report/1");
  CHECK(j["command"] == "sum");
  CHECK(j["results"].size() == 1);
  CHECK(j["results"][0]["verdict"] == "Summed");
  CHECK(j["results"][0]["value"]["exact"] == "1/17");
  CHECK(j["results"][0]["schema"] == "summa-report/1");

  // text and json carry the same numeric content
  auto t = run_cli("sum --method euler-rational \"fixture(Z16)\"");
  CHECK(t.out.find("1/17") != std::string::npos);
}

TEST_CASE("mult and rational verbs") {
  auto m = run_cli("mult --base classical --tol 1e-2 --n-max 20000 \"pow(1+s,-1/2)^2\"");
  CHECK(m.exit_code == 0);
  CHECK(m.out.find("Summed") != std::string::npos);

  auto q = run_cli("rational --base add \"fixture(G2)\"");
  CHECK(q.exit_code == 0);
  CHECK(q.out.find("-1") != std::string::npos);
}

TEST_CASE("norlund verb") {
  auto r = run_cli("norlund --weights \"1+s\" \"fixture(one-one)\"");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("0.5") != std::string::npos);
}

TEST_CASE("rational verb with explicit decomposition") {
  auto r = run_cli(
      "rational --base add --num \"1\" --den \"1+s\" \"fixture(one-one)\"");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("1/2") != std::string::npos);
}

TEST_CASE("cesaro scan method at the CLI") {
  auto r = run_cli("sum --method cesaro-scan:k=3 --tol 1e-3 \"fixture(one-one)\" --json");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["results"][0]["witness"]["k_scan"]["least_k"] == 1);
}

TEST_CASE("compare verb emits a matrix") {
  auto r = run_cli("compare -m borel-int -m euler-rational -f G-2 --tol 1e-6");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("G-2") != std::string::npos);
  auto j = run_cli("compare -m classical -m abel -f \"geom(1/2)\" --json --n-max 4000");
  auto parsed = nlohmann::json::parse(j.out);
  CHECK(parsed["pairs"][0]["consistent"].get<bool>());
}

TEST_CASE("usage errors exit 1") {
  auto r = run_cli("sum --method euler-rational \"1+\"");
  CHECK(r.exit_code == 1);
  auto r2 = run_cli("sum \"1+s\"");
  CHECK(r2.exit_code != 0);  // missing required --method
}

TEST_CASE("config file applies with flags overriding") {
  std::string path = "/tmp/summa_test_config.txt";
  {
    FILE* f = fopen(path.c_str(), "w");
    REQUIRE(f != nullptr);
    fputs("tolerance = 1e-3\nn-max = 2000\n# comment\nwindow = 8\n", f);
    fclose(f);
  }
  auto r = run_cli("sum --method classical --config " + path + " \"geom(1/2)\"");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("Summed") != std::string::npos);
  // flag overrides the file: an absurd n-max from the flag wins and still works
  auto r2 = run_cli("sum --method classical --config " + path + " --tol 1e-9 \"geom(1/2)\"");
  CHECK(r2.exit_code == 0);
}
