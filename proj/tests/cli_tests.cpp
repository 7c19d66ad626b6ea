// End-to-end checks of the command line binary. The binary path and the data
// directory arrive through the BERGMAN_CLI and BERGMAN_DATA environment
// variables, set by the test harness.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "json.hpp"

using nlohmann::json;

namespace {

std::string require_env(const char* name) {
  const char* value = std::getenv(name);
  REQUIRE_MESSAGE(value != nullptr, name << " must be set");
  return value;
}

std::string data_file(const std::string& name) {
  return require_env("BERGMAN_DATA") + "/" + name;
}

struct RunResult {
  int status = -1;
  std::string out;
};

// writes `input` to a scratch file, feeds it to the binary, captures stdout
RunResult run_cli(const std::string& args, const std::string& input = "",
                  bool merge_stderr = false) {
  std::string command = "\"" + require_env("BERGMAN_CLI") + "\" " + args;
  char scratch[] = "/tmp/bergman_cli_test_XXXXXX";
  if (!input.empty()) {
    const int fd = mkstemp(scratch);
    REQUIRE(fd >= 0);
    REQUIRE(write(fd, input.data(), input.size()) ==
            static_cast<ssize_t>(input.size()));
    close(fd);
    command += std::string(" < \"") + scratch + "\"";
  }
  command += merge_stderr ? " 2>&1" : " 2>/dev/null";
  RunResult result;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buffer;
  std::size_t got = 0;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
    result.out.append(buffer.data(), got);
  }
  const int rc = pclose(pipe);
  result.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  if (!input.empty()) unlink(scratch);
  return result;
}

int count_occurrences(const std::string& text, const std::string& needle) {
  int count = 0;
  for (std::size_t at = text.find(needle); at != std::string::npos;
       at = text.find(needle, at + needle.size())) {
    ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("mobius of the complete graph") {
  const auto r = run_cli("mobius --in \"" + data_file("k4.json") + "\"");
  CHECK(r.status == 0);
  CHECK(r.out == "6\n");
}

TEST_CASE("fan membership answers") {
  const auto inside =
      run_cli("member --in \"" + data_file("weighted_k4.json") + "\"");
  CHECK(inside.status == 0);
  CHECK(inside.out == "true\n");

  // level set {1,2} is not closed, so this weighting falls outside
  const auto outside = run_cli(
      "member", R"({
        "matroid": {"type": "graphic", "vertices": 4,
                    "edges": [[1,2],[1,3],[1,4],[2,3],[2,4],[3,4]]},
        "weights": ["0", "0", "1", "1", "1", "1"]
      })");
  CHECK(outside.status == 0);
  CHECK(outside.out == "false\n");
}

TEST_CASE("minimum bases feed back in as a matroid") {
  const auto bases =
      run_cli("minbases --in \"" + data_file("weighted_k4.json") + "\"");
  REQUIRE(bases.status == 0);
  const json parsed = json::parse(bases.out);
  CHECK(parsed["type"] == "bases");
  CHECK(parsed["n"] == 6);
  CHECK(parsed["bases"].size() == 8);
  for (const auto& b : parsed["bases"]) CHECK(b[0] == 1);

  const auto reused = run_cli("flats", bases.out);
  CHECK(reused.status == 0);
  CHECK(json::parse(reused.out)["rank"] == 3);
}

TEST_CASE("fine and coarse dot output") {
  const auto fine = run_cli("fine --format dot --in \"" +
                            data_file("k4.json") + "\"");
  CHECK(fine.status == 0);
  CHECK(fine.out.substr(0, 12) == "graph fine {");
  CHECK(count_occurrences(fine.out, " -- ") == 18);
  CHECK(count_occurrences(fine.out, "label=") == 13);

  const auto coarse = run_cli("coarse --format dot --in \"" +
                              data_file("k4.json") + "\"");
  CHECK(coarse.status == 0);
  CHECK(coarse.out.substr(0, 14) == "graph coarse {");
  CHECK(count_occurrences(coarse.out, " -- ") == 15);
  CHECK(count_occurrences(coarse.out, "label=") == 10);
}

TEST_CASE("tree and distance conversions round trip") {
  const auto dist =
      run_cli("tree-to-dist --in \"" + data_file("caterpillar_tree.json") + "\"");
  REQUIRE(dist.status == 0);

  std::string expected;
  {
    FILE* f = fopen(data_file("caterpillar_dist.json").c_str(), "r");
    REQUIRE(f != nullptr);
    std::array<char, 4096> buffer;
    std::size_t got = 0;
    while ((got = fread(buffer.data(), 1, buffer.size(), f)) > 0) {
      expected.append(buffer.data(), got);
    }
    fclose(f);
  }
  CHECK(json::parse(dist.out) == json::parse(expected));

  const auto tree = run_cli("dist-to-tree", dist.out);
  REQUIRE(tree.status == 0);
  const auto back = run_cli("tree-to-dist", tree.out);
  REQUIRE(back.status == 0);
  CHECK(json::parse(back.out) == json::parse(dist.out));
}

TEST_CASE("newick export") {
  const auto r = run_cli("dist-to-tree --format newick --in \"" +
                         data_file("caterpillar_dist.json") + "\"");
  CHECK(r.status == 0);
  CHECK(r.out == "(((1:0.5,2:0.5):0.25,3:0.75):0.25,4:1);\n");
}

TEST_CASE("ultrametric checking") {
  const auto good = run_cli("check-ultrametric --in \"" +
                            data_file("caterpillar_dist.json") + "\"");
  CHECK(good.status == 0);
  CHECK(good.out == "true\n");

  const auto bad = run_cli("check-ultrametric --in \"" +
                           data_file("not_ultrametric.json") + "\"");
  CHECK(bad.status == 0);
  CHECK(bad.out == "false\n");

  const auto witness = run_cli("check-ultrametric --in \"" +
                               data_file("not_ultrametric.json") + "\"",
                               "", true);
  CHECK(witness.out.find("violated on triple {1,2,3}") != std::string::npos);
}

TEST_CASE("exit codes") {
  SUBCASE("domain error") {
    const auto r = run_cli("dist-to-tree --in \"" +
                           data_file("not_ultrametric.json") + "\"");
    CHECK(r.status == 1);
  }

  SUBCASE("malformed input") {
    CHECK(run_cli("mobius --in \"" + data_file("malformed.json") + "\"")
              .status == 2);
    CHECK(run_cli("mobius", R"({"type":"mystery"})").status == 2);
    CHECK(run_cli("mobius --in /no/such/file").status == 2);
    CHECK(run_cli("member", R"({"matroid":{"type":"uniform","r":1,"n":2},)"
                            R"("weights":["1"]})")
              .status == 2);
  }

  SUBCASE("blown budget") {
    const auto r =
        run_cli("mobius --budget 5 --in \"" + data_file("k4.json") + "\"");
    CHECK(r.status == 3);
  }

  SUBCASE("usage errors") {
    CHECK(run_cli("").status == 2);
    CHECK(run_cli("no-such-command").status == 2);
    CHECK(run_cli("--help").status == 0);
    CHECK(run_cli("fine --format pdf --in \"" + data_file("k4.json") + "\"")
              .status == 2);
  }
}

TEST_CASE("verify subcommand") {
  const auto listed = run_cli("verify --list");
  CHECK(listed.status == 0);
  CHECK(count_occurrences(listed.out, "\n") == 12);

  const auto one = run_cli("verify --suite k4-golden");
  CHECK(one.status == 0);
  CHECK(one.out.find("[PASS] k4-golden:") != std::string::npos);
  CHECK(one.out.find("[FAIL]") == std::string::npos);
  CHECK(one.out.find("suites passed: 1/1") != std::string::npos);

  const auto unknown = run_cli("verify --suite no-such-suite");
  CHECK(unknown.status == 2);

  const auto as_json =
      run_cli("verify --suite petersen --suite k4-golden --format json");
  CHECK(as_json.status == 0);
  const json parsed = json::parse(as_json.out);
  CHECK(parsed["passed"] == true);
  REQUIRE(parsed["suites"].size() == 2);
  CHECK(parsed["suites"][0]["suite"] == "petersen");
  CHECK(parsed["suites"][1]["checks"].size() > 0);
}
