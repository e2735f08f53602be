#include <doctest.h>

#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "ptlab/dot.hpp"
#include "ptlab/rpt.hpp"

using namespace ptlab;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines_of(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::vector<std::string> lines;
  for (std::string l; std::getline(in, l);) {
    if (!l.empty()) lines.push_back(l);
  }
  return lines;
}

std::size_t count(const std::string& s, const std::string& needle) {
  std::size_t n = 0;
  for (auto p = s.find(needle); p != std::string::npos; p = s.find(needle, p + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("command examples") {
  auto eq = run({"theory", "equal", "beta-eta", "\\x y. x y", "\\x.x"});
  CHECK(eq.code == 0);
  CHECK(eq.out == "yes\n");

  auto mx = run({"tree", "max", "([1 2]; ([2 1]; *, *), *)"});
  CHECK(mx.code == 0);
  CHECK(mx.out == "([1]; ([2 1]; *, *))\n");

  auto bt = run({"term", "bt", "--depth", "2", "(\\x.x x)(\\x.x x)"});
  CHECK(bt.code == 2);
  CHECK(bt.out.find("unknown") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(run({"theory", "equal", "beta", "\\x y. x y", "\\x.x"}).code == 1);
  CHECK(run({"tree", "leq", "*", "([1]; *)"}).code == 1);
  CHECK(run({"tree", "leq", "([1]; *)", "*"}).code == 0);
  CHECK(run({"tree", "parse", "(["}).code == 3);
  CHECK(run({"nonsense"}).code == 3);
  CHECK(run({"algebra", "subgroup", "([2 1]; *, *)"}).code == 4);
  CHECK(run({"theory", "equal", "hstar", "\\x y. x", "\\x. x"}).code == 4);
  auto missing = run({"tree", "parse", "@/nonexistent/file"});
  CHECK(missing.code == 5);
  CHECK_FALSE(missing.err.empty());
}

TEST_CASE("defaults and formats") {
  auto j = run({"--format", "json", "tree", "star", "([2 1]; *, ([2 1]; *, *))"});
  CHECK(j.code == 0);
  CHECK(j.out == "{\"result\":\"([2 1]; ([2 1]; *, *), *)\"}\n");
  auto a = run({"theory", "equal", "hstar", "builtin:J", "builtin:I"});
  auto b = run({"theory", "equal", "hstar", "builtin:J", "builtin:I"});
  CHECK(a.out == b.out);
  CHECK(a.out == "yes at depth 8\n");
  CHECK(run({"--depth", "3", "theory", "equal", "hstar", "builtin:J", "builtin:I"}).out == "yes at depth 3\n");
}

TEST_CASE("golden round trips") {
  for (const auto& line : lines_of(PTLAB_GOLDEN_DIR "/trees.txt")) {
    auto r = run({"tree", "parse", line});
    CHECK(r.code == 0);
    CHECK(r.out == line + "\n");
  }
  for (const auto& line : lines_of(PTLAB_GOLDEN_DIR "/terms.txt")) {
    auto r = run({"term", "parse", line});
    CHECK(r.code == 0);
    CHECK(r.out == line + "\n");
  }
}

TEST_CASE("render_dot") {
  const std::string leaf = render_dot(Fpt::leaf());
  CHECK(leaf.rfind("digraph", 0) == 0);
  CHECK(count(leaf, "[label=") == 1);
  CHECK(count(leaf, "->") == 0);

  const std::string j = render_dot(j_machine());
  CHECK(count(j, "\n  n0 [label=") == 1);
  CHECK(count(j, "n0 -> n0") == 1);
  CHECK(count(j, "->") == 1);

  const std::string flip = render_dot(Fpt::parse("([2 1]; *, *)"));
  CHECK(count(flip, "[label=\"") - count(flip, "->") == 3);
  CHECK(flip.find("n0 [label=\"[2 1]\"]") != std::string::npos);

  const std::string bt = render_dot(bohm_approx(builtin("J"), 2, 10000));
  CHECK(bt.find("cut") != std::string::npos);
  CHECK(render_dot(Fpt::parse("([2 1]; *, *)")) == flip);
}
