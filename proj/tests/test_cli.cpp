#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <nlohmann/json.hpp>

using Json = nlohmann::ordered_json;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  RunResult r;
  std::string cmd = std::string(POLYCERT_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.output.append(buf, got);
  int status = pclose(pipe);
  if (WIFEXITED(status)) r.exit_code = WEXITSTATUS(status);
  return r;
}

bool has(const std::string& text, const std::string& needle) {
  return text.find(needle) != std::string::npos;
}

std::string write_temp(const std::string& name, const std::string& content) {
  auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream out(path);
  out << content;
  return path.string();
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("check maps verdicts to exit codes") {
    RunResult certified = run_cli("check 'x^5 + x^3 + 32'");
    CHECK(certified.exit_code == 0);
    CHECK(has(certified.output, "verdict: Irreducible"));
    CHECK(has(certified.output, "criterion: Theorem"));
    CHECK(has(certified.output, "p = 2, u = 5, m = 3"));
    CHECK(has(certified.output, "bound: 32 > 2"));
    CHECK(has(certified.output, "[ ok ]"));

    RunResult open = run_cli("check 'x^2 + x + 1'");
    CHECK(open.exit_code == 1);
    CHECK(has(open.output, "verdict: Inconclusive"));
    CHECK(has(open.output, "[fail]"));

    RunResult witnessed = run_cli("check --oracle 'x^3 - x^2 - 10x + 16'");
    CHECK(witnessed.exit_code == 2);
    CHECK(has(witnessed.output, "verdict: ReducibleWitness"));
    CHECK(has(witnessed.output, "witness: (x - 2)(x^2 + x - 8)"));
    CHECK(has(witnessed.output, "witness search exhaustive: yes"));

    RunResult open_oracle = run_cli("check --oracle 'x^2 + x + 1'");
    CHECK(open_oracle.exit_code == 1);
    CHECK(has(open_oracle.output, "exhaustive search found no factor"));
  }

  TEST_CASE("polynomial arguments accept text, inline JSON and @file") {
    CHECK(run_cli("check '[4, 1, 1]'").exit_code == 0);
    std::string path = write_temp("polycert_cli_poly.json", "[16,-10,-1,1]");
    RunResult from_file = run_cli("check --oracle @" + path);
    CHECK(from_file.exit_code == 2);
    CHECK(has(from_file.output, "f = x^3 - x^2 - 10x + 16"));
  }

  TEST_CASE("malformed input and usage mistakes exit 64") {
    CHECK(run_cli("").exit_code == 64);
    CHECK(run_cli("frobnicate").exit_code == 64);
    CHECK(run_cli("check").exit_code == 64);
    CHECK(run_cli("check 'x^-2'").exit_code == 64);
    CHECK(run_cli("check 'x^2 +'").exit_code == 64);
    CHECK(run_cli("check '[1.5]'").exit_code == 64);
    CHECK(run_cli("check '[16,'").exit_code == 64);
    CHECK(run_cli("check @/nonexistent/poly.json").exit_code == 64);
    CHECK(run_cli("polygon 'x^2 + 1' -p 4").exit_code == 64);
    CHECK(run_cli("polygon 'x^2 + 1' -p abc").exit_code == 64);
    CHECK(run_cli("polygon 'x^2 + 1'").exit_code == 64);
    CHECK(run_cli("--help").exit_code == 0);
  }

  TEST_CASE("quiet mode suppresses output but keeps exit codes") {
    RunResult certified = run_cli("--quiet check 'x^5 + x^3 + 32'");
    CHECK(certified.exit_code == 0);
    CHECK(certified.output.empty());

    RunResult witnessed = run_cli("--quiet check --oracle 'x^3 - x^2 - 10x + 16'");
    CHECK(witnessed.exit_code == 2);
    CHECK(witnessed.output.empty());

    RunResult corpus = run_cli("--quiet corpus");
    CHECK(corpus.exit_code == 0);
    CHECK(corpus.output.empty());
  }

  TEST_CASE("json output is valid and stable under re-dump") {
    for (const std::string& args :
         {std::string("--json check 'x^5 + x^3 + 32'"),
          std::string("--json check --oracle 'x^3 - x^2 - 10x + 16'"),
          std::string("--json polygon 'x^3 - x^2 - 10x + 16' -p 2"),
          std::string("--json factor 'x^3 - x^2 - 10x + 16'"),
          std::string("--json roots 'x^2 + x + 3'"),
          std::string("--json dumas 'x + 2' 'x + 2' -p 2"), std::string("--json corpus")}) {
      CAPTURE(args);
      RunResult r = run_cli(args);
      Json parsed = Json::parse(r.output);
      CHECK(parsed.dump(2) + "\n" == r.output);
    }
  }

  TEST_CASE("json check carries the certificate") {
    RunResult r = run_cli("--json check 'x^5 + x^3 + 32'");
    CHECK(r.exit_code == 0);
    Json j = Json::parse(r.output);
    CHECK(j["verdict"] == "Irreducible");
    CHECK(j["criterion"] == "Theorem");
    CHECK(j["prime"] == 2);
    CHECK(j["exponent"] == 5);
    CHECK(j["reports"].size() == 5);

    RunResult w = run_cli("--json check --oracle 'x^3 - x^2 - 10x + 16'");
    CHECK(w.exit_code == 2);
    Json wj = Json::parse(w.output);
    CHECK(wj["witness"]["factors"].dump() == "[[-2,1],[-8,1,1]]");
  }

  TEST_CASE("polygon subcommand prints hull data") {
    RunResult r = run_cli("polygon 'x^3 - x^2 - 10x + 16' -p 2");
    CHECK(r.exit_code == 0);
    CHECK(has(r.output, "vertices: (0, 4) (1, 1) (2, 0) (3, 0)"));
    CHECK(has(r.output, "slope -3"));
    CHECK(has(r.output, "segments: (1, -3) x1, (1, -1) x1, (1, 0) x1"));

    RunResult j = run_cli("--json polygon 'x^5 + x^3 + 32' -p 2");
    Json parsed = Json::parse(j.output);
    CHECK(parsed["vertices"].dump() == "[[0,5],[3,0],[5,0]]");
  }

  TEST_CASE("factor subcommand") {
    RunResult split = run_cli("factor 'x^3 - x^2 - 10x + 16'");
    CHECK(split.exit_code == 0);
    CHECK(has(split.output, "x^3 - x^2 - 10x + 16 = (x - 2)(x^2 + x - 8)"));
    CHECK(has(split.output, "search exhaustive"));

    RunResult whole = run_cli("factor 'x^2 + x + 2'");
    CHECK(whole.exit_code == 0);
    CHECK(has(whole.output, "irreducible (exhaustive)"));

    RunResult capped = run_cli("factor 'x^2 + 3x + 8' --divisor-cap 1");
    CHECK(capped.exit_code == 0);
    CHECK(has(capped.output, "no factor found (search truncated)"));
  }

  TEST_CASE("roots subcommand") {
    RunResult r = run_cli("roots 'x^2 + x + 3'");
    CHECK(r.exit_code == 0);
    CHECK(has(r.output, "min |z| = 1.73205080757"));
    CHECK(has(r.output, "vieta product = 3"));

    RunResult seeded = run_cli("--seed 999 roots 'x^2 + x + 3'");
    CHECK(seeded.exit_code == 0);
    CHECK(has(seeded.output, "min |z| = 1.73205080757"));

    RunResult j = run_cli("--json roots 'x^2 - 1'");
    Json parsed = Json::parse(j.output);
    CHECK(parsed["min_modulus"].get<double>() == doctest::Approx(1.0));
    CHECK(parsed["vieta_product"].get<double>() == doctest::Approx(1.0));
    CHECK(parsed["constant_leading_ratio"].get<double>() == doctest::Approx(1.0));
  }

  TEST_CASE("dumas subcommand checks the product identity") {
    RunResult worked = run_cli("dumas 'x+2' 'x^2+x+2' -p 2");
    CHECK(worked.exit_code == 0);
    CHECK(has(worked.output, "union: (1, -1) x2, (1, 0) x1"));
    CHECK(has(worked.output, "Dumas property holds"));

    RunResult r = run_cli("dumas 'x + 2' 'x + 2' -p 2");
    CHECK(r.exit_code == 0);
    CHECK(has(r.output, "union: (1, -1) x2"));
    CHECK(has(r.output, "product: (1, -1) x2"));
    CHECK(has(r.output, "Dumas property holds"));

    RunResult j = run_cli("--json dumas 'x^2 + 2x + 4' '3x + 6' -p 2");
    CHECK(j.exit_code == 0);
    CHECK(Json::parse(j.output)["holds"] == true);
  }

  TEST_CASE("corpus subcommand runs the bundled expectations") {
    RunResult bundled = run_cli("corpus");
    CHECK(bundled.exit_code == 0);
    CHECK(has(bundled.output, "corpus entries passed"));
    CHECK_FALSE(has(bundled.output, "[FAIL]"));

    RunResult explicit_path = run_cli(std::string("corpus ") + POLYCERT_CORPUS_PATH);
    CHECK(explicit_path.exit_code == 0);

    RunResult json_mode = run_cli("--json corpus");
    Json parsed = Json::parse(json_mode.output);
    CHECK(parsed["total"] == parsed["passed"]);
    CHECK(parsed["results"].size() == parsed["total"]);
  }

  TEST_CASE("corpus failures and unreadable files are reported") {
    std::string wrong = write_temp("polycert_cli_wrong.json",
                                   R"([{"id": "mislabeled", "polynomial": "x^2 + x + 4",
                                        "expected": {"verdict": "Inconclusive"}}])");
    RunResult failing = run_cli("corpus " + wrong);
    CHECK(failing.exit_code == 1);
    CHECK(has(failing.output, "[FAIL] mislabeled"));
    CHECK(has(failing.output, "0/1 corpus entries passed"));

    std::string wrong_factor = write_temp("polycert_cli_wrong_factor.json",
                                          R"([{"id": "wrong-split",
                                               "polynomial": "x^3 - x^2 - 10x + 16",
                                               "expected": {"factors": [[-1, 1], [-16, 0, 1]]}}])");
    RunResult factor_miss = run_cli("corpus " + wrong_factor);
    CHECK(factor_miss.exit_code == 1);
    CHECK(has(factor_miss.output, "[FAIL] wrong-split"));

    std::string empty = write_temp("polycert_cli_empty.json", "[]");
    CHECK(run_cli("corpus " + empty).exit_code == 64);

    std::string broken = write_temp("polycert_cli_broken.json", "{ not json");
    CHECK(run_cli("corpus " + broken).exit_code == 64);

    CHECK(run_cli("corpus /nonexistent/corpus.json").exit_code == 64);
  }
}
