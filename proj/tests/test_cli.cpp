#include <doctest.h>

#include <sstream>

#include "ospo/cli.hpp"
#include "ospo/json_io.hpp"

namespace {

struct Out {
  int code;
  std::string out, err;
};

Out run(std::vector<std::string> args) {
  std::ostringstream o, e;
  int c = ospo::run(args, o, e);
  return {c, o.str(), e.str()};
}

}  // namespace

TEST_CASE("presentation check from the command line") {
  auto r = run({"verify", "presentation", "--k", "3", "--eta", "-2"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("PASS presentation", 0) == 0);
}

TEST_CASE("worked insertion round trip") {
  auto r = run({"tab", "insert", "--r", "4", "--n", "4", "v2 t2 t1* t1 v3 t1"});
  CHECK(r.code == 0);
  CHECK(r.out == "[[t1,v2],[t2,v3]] ((),(1),(2),(2,1),(2),(2,1),(2,2))\n");
  auto d = run({"tab", "delete", "--r", "4", "--n", "4", "--tableau", "[[t1,v2],[t2,v3]]", "--chain",
                "((),(1),(2),(2,1),(2),(2,1),(2,2))"});
  CHECK(d.code == 0);
  CHECK(d.out == "v2 t2 t1* t1 v3 t1\n");
}

TEST_CASE("json output") {
  auto r = run({"--format", "json", "tab", "insert", "--r", "4", "--n", "4", "v2 t2 t1* t1 v3 t1"});
  REQUIRE(r.code == 0);
  auto j = ospo::Json::parse(r.out);
  CHECK(j["schema"] == 1);
  CHECK(j["command"] == "tab insert");
  CHECK(j["chain"].dump() == "[[],[1],[2],[2,1],[2],[2,1],[2,2]]");
  auto m = ospo::Json::parse(
      run({"--format", "json", "brauer", "mult", "((1,2)(1',2'))", "((1,2)(1',2'))", "--eta", "3"}).out);
  CHECK(m["loops"] == 1);
  CHECK(m["coefficient"]["num"] == 3);
}

TEST_CASE("characters from the command line") {
  auto r = run({"char", "sc", "--r", "1", "--n", "1", "--lambda", "[1,1]", "--method", "tableaux"});
  CHECK(r.code == 0);
  CHECK(r.out == "z_t1 + 1 + z_t1^-1\n");
  auto h = run({"char", "sc", "--r", "1", "--n", "1", "--lambda", "(1,1)", "--method", "h"});
  CHECK(h.out == r.out);
  auto d = run({"char", "sc", "--r", "1", "--n", "1", "--lambda", "[2]", "--at-one"});
  CHECK(d.code == 0);
  CHECK(d.out == "5\n");
}

TEST_CASE("unfolding from the command line") {
  auto r = run({"brauer", "unfold", "((1,4')(2,1')(3,5)(4,6')(6,5')(2',3'))"});
  CHECK(r.code == 0);
  CHECK(r.out.find("(1,2,4,5,6,8,10,9,7,12,3,11)") != std::string::npos);
  CHECK(r.out.find("((1,11)(2,3)(4,12)(5,7)(6,9)(8,10))") != std::string::npos);
}

TEST_CASE("usage and input errors exit with 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"char", "sc", "--r", "1", "--n", "1", "--lambda", "[1,x]"}).code == 2);
  CHECK(run({"tab", "insert", "--r", "1", "--n", "1", "v7"}).code == 2);
  CHECK(run({"brauer", "mult", "((1,2)", "((1,2)(1',2'))"}).code == 2);
  CHECK(run({"verify", "no-such-suite"}).code == 2);
  auto bad = run({"tab", "delete", "--r", "1", "--n", "1", "--tableau", "[[t1*]]", "--chain", "((),(1),(1,1),(1))"});
  CHECK(bad.code == 2);
  CHECK_FALSE(bad.err.empty());
}

TEST_CASE("failing verification exits with 1") {
  CHECK(run({"verify", "counting", "--r", "1", "--n", "1", "--k", "3"}).code == 1);
  CHECK(run({"verify", "counting", "--r", "1", "--n", "1", "--k", "2"}).code == 0);
}

TEST_CASE("aliases and determinism") {
  auto a = run({"verify", "thm5.5", "--small"});
  auto b = run({"verify", "bijection", "--small"});
  CHECK(a.out == b.out);
  CHECK(a.code == b.code);
  auto c1 = run({"--format", "json", "verify", "commuting", "--small", "--seed", "4"});
  auto c2 = run({"--format", "json", "verify", "commuting", "--small", "--seed", "4"});
  CHECK(c1.out == c2.out);
  CHECK(c1.code == 0);
}
