// Process-level checks of the installed command surface: exit codes, stream
// routing, and byte-level determinism of seeded JSON output. The binary under
// test arrives as argv[1].
#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <json.hpp>
#include <string>
#include <vector>

namespace {

std::string g_binary;

std::string shell_quote(const std::string& s) {
  std::string q = "'";
  for (char c : s) {
    if (c == '\'') q += "'\\''";
    else q += c;
  }
  return q + "'";
}

struct ProcResult {
  int code;
  std::string output;
};

// Runs the binary with the given arguments; stderr is folded into stdout
// when merge_stderr is set, discarded otherwise.
ProcResult run_proc(const std::vector<std::string>& args, bool merge_stderr = false) {
  std::string cmd = shell_quote(g_binary);
  for (const auto& a : args) cmd += " " + shell_quote(a);
  cmd += merge_stderr ? " 2>&1" : " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string output;
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) output.append(buf.data(), got);
  const int status = pclose(pipe);
  REQUIRE(status != -1);
  return {WEXITSTATUS(status), output};
}

std::vector<std::string> lines_of(const std::string& s) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start < s.size()) {
    const std::size_t nl = s.find('\n', start);
    if (nl == std::string::npos) {
      lines.push_back(s.substr(start));
      break;
    }
    lines.push_back(s.substr(start, nl - start));
    start = nl + 1;
  }
  return lines;
}

}  // namespace

TEST_CASE("exit-code contract: pass 0, injected fail 1, usage 2") {
  CHECK(run_proc({"verify", "finite", "--m", "5"}).code == 0);
  CHECK(run_proc({"verify", "finite", "--m", "5", "--mutate", "drop-one-plus-xq"}).code ==
        1);
  CHECK(run_proc({"verify", "bogus"}).code == 2);
  CHECK(run_proc({"nonsense"}).code == 2);
  CHECK(run_proc({}).code == 2);
  CHECK(run_proc({"--help"}).code == 0);
}

TEST_CASE("failure reports carry a witness on stdout, diagnostics on stderr") {
  const auto fail = run_proc(
      {"verify", "quintuple", "--order", "10", "--mutate", "shrink-theta-exponent"});
  CHECK(fail.code == 1);
  CHECK(fail.output.find("[FAIL] quintuple-series") != std::string::npos);
  CHECK(fail.output.find("witness") != std::string::npos);

  const auto usage = run_proc({"verify", "finite", "--format", "csv"});
  CHECK(usage.code == 2);
  CHECK(usage.output.empty());  // message went to stderr
  const auto merged = run_proc({"verify", "finite", "--format", "csv"}, true);
  CHECK(merged.output.find("csv output is only available") != std::string::npos);
}

TEST_CASE("seeded JSON runs are byte-identical with timing excluded") {
  const std::vector<std::string> argv = {
      "verify", "qdixon", "--m-max", "6",      "--trials", "20",
      "--seed", "42",     "--format", "json",  "--no-timing"};
  const auto a = run_proc(argv);
  const auto b = run_proc(argv);
  CHECK(a.code == 0);
  CHECK(a.output == b.output);
  CHECK(lines_of(a.output).size() == 7);

  auto argv2 = argv;
  argv2[7] = "43";
  CHECK(run_proc(argv2).output != a.output);
}

TEST_CASE("JSON lines follow the report schema") {
  const auto r = run_proc({"verify", "bilateral", "--m-max", "1", "--n-max", "1",
                           "--format", "json", "--no-timing"});
  CHECK(r.code == 0);
  const auto lines = lines_of(r.output);
  REQUIRE(lines.size() == 4);
  for (const auto& line : lines) {
    const auto j = nlohmann::ordered_json::parse(line);
    REQUIRE(j.is_object());
    auto it = j.begin();
    CHECK(it.key() == "identity");
    CHECK((++it).key() == "params");
    CHECK((++it).key() == "status");
    CHECK((++it).key() == "witness");
    CHECK((++it).key() == "metrics");
    CHECK(j["identity"] == "bilateral");
    CHECK(j["status"] == "pass");
    CHECK(j["witness"].is_null());
    CHECK(j["params"]["m"].is_number_integer());
    CHECK(j["metrics"]["terms"].is_number_integer());
    CHECK_FALSE(j["metrics"].contains("elapsed_ms"));
  }

  const auto timed = run_proc({"verify", "finite", "--m", "1", "--format", "json"});
  const auto jt = nlohmann::ordered_json::parse(lines_of(timed.output).at(0));
  CHECK(jt["metrics"]["elapsed_ms"].is_number());

  const auto failed = run_proc({"verify", "relation", "--order", "8", "--mutate",
                                "drop-euler-factor", "--format", "json", "--no-timing"});
  CHECK(failed.code == 1);
  const auto jf = nlohmann::ordered_json::parse(lines_of(failed.output).at(0));
  CHECK(jf["status"] == "fail");
  REQUIRE(jf["witness"].is_object());
  CHECK(jf["witness"].contains("q_exp"));
  CHECK(jf["witness"].contains("lhs"));
}

TEST_CASE("expansion output is stable across formats") {
  const auto text = run_proc({"expand", "[q;q]", "--order", "7"});
  CHECK(text.code == 0);
  CHECK(text.output == "q^0 x^0: 1\nq^1 x^0: -1\nq^2 x^0: -1\nq^5 x^0: 1\nq^7 x^0: 1\n");

  const auto csv = run_proc({"expand", "[q;q]", "--order", "7", "--format", "csv"});
  CHECK(csv.output == "q_exp,x_exp,coeff\n0,0,1\n1,0,-1\n2,0,-1\n5,0,1\n7,0,1\n");

  const auto sq = run_proc({"expand", "[q,x,q/x;q] [q*x^2,q/x^2;q^2]", "--order", "1"});
  CHECK(sq.code == 0);
  CHECK(sq.output == "q^0 x^0: 1\nq^0 x^1: -1\nq^1 x^-2: -1\nq^1 x^3: 1\n");

  const auto coeff = run_proc({"coeff", "[q;q]", "--q", "5", "--x", "0"});
  CHECK(coeff.output == "1\n");
}

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: cli_contract_test <path-to-qident> [doctest args]\n");
    return 1;
  }
  g_binary = argv[1];
  doctest::Context ctx;
  ctx.applyCommandLine(argc - 1, argv + 1);
  return ctx.run();
}
