#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "locsys/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "locsys");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = locsys::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string data(const char* name) { return std::string(LOCSYS_DATA_DIR) + "/" + name; }

bool has(const std::string& text, const std::string& needle) { return text.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("h1 of the five-line example") {
  const auto r = run({"h1", "--arrangement", data("five_lines.txt"), "--local-system", "torsion 4; 0 1 3 2 0", "--check"});
  CHECK(r.code == locsys::cli::kExitOk);
  CHECK(has(r.out, "h1 = 2"));
  CHECK(has(r.out, "oracle h1 = 2"));
  CHECK(has(r.out, "check: agree"));
}

TEST_CASE("q_inf = 1 moves another line to infinity") {
  const auto r = run({"h1", "--arrangement", data("five_lines.txt"), "--local-system", "torsion 4; 0 1 3 0 0"});
  CHECK(r.code == locsys::cli::kExitOk);
  CHECK(has(r.out, "note: q_infinity = 1; line"));
  CHECK(has(r.out, "h1 = "));
}

TEST_CASE("input errors exit with status 2") {
  CHECK(run({"h1", "--arrangement", data("missing.txt"), "--local-system", "torsion 2; 1 1 0 0 0"}).code ==
        locsys::cli::kExitPrecondition);
  CHECK(run({"h1", "--arrangement", data("five_lines.txt"), "--local-system", "torsion 2; 1 x"}).code ==
        locsys::cli::kExitPrecondition);
  CHECK(run({"h1", "--arrangement", data("five_lines.txt"), "--local-system", "torsion 2; 1 1"}).code ==
        locsys::cli::kExitPrecondition);
}

TEST_CASE("budget overrun exits with status 3") {
  const auto r = run({"scan", "--arrangement", "b3", "--order", "4", "--budget", "10"});
  CHECK(r.code == locsys::cli::kExitBudget);
  CHECK_FALSE(r.err.empty());
}

TEST_CASE("scan of deleted B3 lists both resonant double-point systems") {
  const auto r = run({"scan", "--arrangement", "b3", "--order", "2"});
  CHECK(r.code == locsys::cli::kExitOk);
  CHECK(has(r.out, "\n2\t0,1,1,0,0,1,0,1\t2"));
  CHECK(has(r.out, "\n2\t1,0,0,1,0,1,0,1\t2"));
  CHECK(run({"scan", "--arrangement", "b3", "--order", "2"}).out == r.out);
}

TEST_CASE("reports go to --out") {
  const std::string path = "cli_test_chambers.txt";
  const auto r = run({"chambers", "--arrangement", data("five_lines.txt"), "--out", path});
  CHECK(r.code == locsys::cli::kExitOk);
  std::ifstream in(path);
  std::stringstream text;
  text << in.rdbuf();
  CHECK(has(text.str(), "# index\tsigns\tbounded\tdegree\topposite"));
  std::remove(path.c_str());
}

TEST_CASE("complex and certify commands") {
  const auto cx = run({"complex", "--arrangement", data("five_lines.txt"), "--local-system", "torsion 4; 0 1 3 2 0"});
  CHECK(cx.code == locsys::cli::kExitOk);
  CHECK(has(cx.out, "d1"));
  const auto cert =
      run({"certify", "--arrangement", "b3", "--local-system", "torsion 5; 0 0 0 0 1 2 3 4", "--check"});
  CHECK(cert.code == locsys::cli::kExitOk);
  CHECK(has(cert.out, "line 5: resonant_points=1 certificate=unique-resonant-point"));
}

TEST_CASE("the B3 table ends with a verdict") {
  const auto r = run({"b3"});
  CHECK(r.code == locsys::cli::kExitOk);
  CHECK(has(r.out, "## verdict: all checks passed"));
}
