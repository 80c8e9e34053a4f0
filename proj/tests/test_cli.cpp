#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <string>

#include "helpers.hpp"
#include "tracealg/series.hpp"

namespace {

struct RunResult {
  int status = -1;
  std::string out;
};

std::string bin() {
  const char* b = std::getenv("TRACEALG_BIN");
  REQUIRE_MESSAGE(b != nullptr, "TRACEALG_BIN not set");
  return b;
}

std::string data(const std::string& name) {
  const char* d = std::getenv("TRACEALG_DATA");
  REQUIRE_MESSAGE(d != nullptr, "TRACEALG_DATA not set");
  return std::string(d) + "/" + name;
}

RunResult run(const std::string& args) {
  RunResult r;
  std::string cmd = bin() + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  int status = pclose(p);
  r.status = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("tfsa command") {
  auto r = run("tfsa --alphabet " + data("ab_c.alpha") + " --subset c");
  CHECK(r.status == 0);
  CHECK(r.out == "NOT TFSA\nwitness: a - c - b\n");

  auto r2 = run("tfsa --alphabet " + data("p3.alpha") + " --subset c");
  CHECK(r2.status == 0);
  CHECK(r2.out == "TFSA\n");

  auto r3 = run("tfsa --alphabet " + data("ab_c.alpha") + " --subset c --format machine");
  CHECK(r3.status == 0);
  CHECK(r3.out == "tfsa\tfalse\ta\tc\tb\n");
}

TEST_CASE("beta command") {
  auto r = run("beta --alphabet " + data("p3.alpha") + " --subset c --maxlen 5");
  CHECK(r.status == 0);
  CHECK(r.out == "a\nb\nac\nacc\naccc\nacccc\ncomplete: no\n");
}

TEST_CASE("mobius command is a thin wrapper") {
  auto r = run("mobius --alphabet " + data("ab_c.alpha"));
  CHECK(r.status == 0);
  auto alpha = th::ab_c();
  CHECK(r.out == tracealg::mobius_polynomial(alpha).str() + "\n");
  CHECK(r.out == "1 - a - b - c + ab\n");
}

TEST_CASE("counts command") {
  auto r = run("counts --alphabet " + data("p4.alpha") + " --maxlen 3 --witt --format machine");
  CHECK(r.status == 0);
  CHECK(r.out ==
        "count\t0\t1\ncount\t1\t4\ncount\t2\t13\ncount\t3\t40\n"
        "witt\t1\t4\nwitt\t2\t3\nwitt\t3\t8\n");
}

TEST_CASE("factorize command") {
  auto r = run("factorize --alphabet " + data("p4.alpha") +
               " --plan \"c;acc;b;d;ac;a\" --maxlen 5 --check 4");
  CHECK(r.status == 0);
  CHECK(r.out == "factorization verified\n");

  auto r2 = run("factorize --alphabet " + data("p4.alpha") +
                " --plan \"c;acc;b;d;ac;a\" --maxlen 5 --word ca");
  CHECK(r2.status == 0);
  CHECK(r2.out == "c@0 . a@5\n");
}

TEST_CASE("factorize prints levels when given no trace") {
  auto r = run("factorize --alphabet " + data("p4.alpha") + " --plan \"c;acc\" --maxlen 3");
  CHECK(r.status == 0);
  CHECK(r.out.rfind("level 0: c\nlevel 1: acc\nlevel 2:", 0) == 0);
}

TEST_CASE("lie-basis command") {
  auto r = run("lie-basis --alphabet " + data("p4.alpha") +
               " --plan \"c;acc;b;d;ac;a\" --degree 3");
  CHECK(r.status == 0);
  int lines = 0, d1 = 0, d2 = 0, d3 = 0;
  for (size_t pos = 0; pos < r.out.size();) {
    auto nl = r.out.find('\n', pos);
    if (nl == std::string::npos) break;
    std::string line = r.out.substr(pos, nl - pos);
    pos = nl + 1;
    ++lines;
    if (line.rfind("1 ", 0) == 0) ++d1;
    if (line.rfind("2 ", 0) == 0) ++d2;
    if (line.rfind("3 ", 0) == 0) ++d3;
  }
  CHECK(lines == 15);
  CHECK(d1 == 4);
  CHECK(d2 == 3);
  CHECK(d3 == 8);

  // Deterministic output across runs.
  auto again = run("lie-basis --alphabet " + data("p4.alpha") +
                   " --plan \"c;acc;b;d;ac;a\" --degree 3");
  CHECK(again.out == r.out);
}

TEST_CASE("group-reduce command") {
  auto r = run("group-reduce --alphabet " + data("ab.alpha") + " --word \"a b a'\"");
  CHECK(r.status == 0);
  CHECK(r.out == "b\n");

  auto r2 = run("group-reduce --alphabet " + data("p3.alpha") + " --word \"c' a c\"");
  CHECK(r2.status == 0);
  CHECK(r2.out == "c' a c\n");

  auto r3 = run("group-reduce --alphabet " + data("p3.alpha") + " --word \"a a'\"");
  CHECK(r3.status == 0);
  CHECK(r3.out == "1\n");
}

TEST_CASE("exit codes") {
  CHECK(run("tfsa --alphabet /nonexistent.alpha --subset c").status == 1);
  CHECK(run("tfsa --alphabet " + data("p3.alpha") + " --subset c --bogus-flag").status == 2);
  CHECK(run("frobnicate").status == 2);
  CHECK(run("tfsa --alphabet " + data("p3.alpha") + " --subset q").status == 1);
}
