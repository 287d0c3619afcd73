#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#include "corpus.hpp"
#include "subshift/specfile.hpp"

#ifndef SXT_CLI_PATH
#define SXT_CLI_PATH "sxt"
#endif

namespace {

struct RunResult {
  int status;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(SXT_CLI_PATH) + " " + args + " 2>/dev/null";
  std::array<char, 4096> buf;
  RunResult res{-1, {}};
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.out.append(buf.data(), n);
  int rc = pclose(pipe);
  res.status = WEXITSTATUS(rc);
  return res;
}

std::string data(const std::string& name) {
  return std::string(SXT_DATA_DIR) + "/" + name + ".shift";
}

}  // namespace

TEST_CASE("bundled presentations parse to the expected specs") {
  using namespace subshift;
  SubshiftSpec golden = corpus::load_spec("golden");
  CHECK(golden.alphabet.size() == 2);
  REQUIRE(golden.forbidden.size() == 1);
  CHECK(golden.forbidden[0].size() == 2);

  SubshiftSpec ex4 = corpus::load_spec("ex4");
  CHECK(ex4.alphabet.size() == 5);
  REQUIRE(ex4.forbidden.size() == 3);
  CHECK(ex4.forbidden[0][0] == PatternAtom::lit(1));
  CHECK(ex4.forbidden[0][1] == PatternAtom::plus(0));
  CHECK(ex4.forbidden[0][2] == PatternAtom::lit(4));
  CHECK(ex4.forbidden[0][3] == PatternAtom::one_of({0, 2, 3, 4}));
  CHECK(ex4.forbidden[2].size() == 3);

  SubshiftSpec abc = corpus::load_spec("abc");
  CHECK(abc.alphabet.size() == 3);
  CHECK(abc.forbidden.size() == 21);  // every three letter word with a repeat
  for (const auto& p : abc.forbidden) {
    REQUIRE(p.size() == 3);
    bool repeat = p[0] == p[1] || p[1] == p[2] || p[0] == p[2];
    CHECK(repeat);
  }
}

TEST_CASE("serialization round trips byte for byte") {
  using namespace subshift;
  for (const char* name : corpus::kAll) {
    SubshiftSpec spec = corpus::load_spec(name);
    std::string once = serialize_spec(spec);
    std::string twice = serialize_spec(parse_spec_text(once));
    CHECK(once == twice);
  }
}

TEST_CASE("spec parser reports malformed input") {
  using namespace subshift;
  CHECK_THROWS_AS(parse_spec_text("alphabet: a\nforbidden: * a\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_spec_text("alphabet: a\nforbidden: z\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_spec_text("name: x\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_spec_text("alphabet: a\nbogus: 1\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_spec_text("alphabet: a\nforbidden: a*\n"), std::invalid_argument);
}

TEST_CASE("follower command answers the singleton example") {
  RunResult r = run_cli("--spec " + data("abc") + " --json follower --lambda a,b");
  CHECK(r.status == 0);
  CHECK(r.out.find("\"Finite\"") != std::string::npos);
  CHECK(r.out.find("\"c\"") != std::string::npos);
}

TEST_CASE("language counts through the command line") {
  RunResult r = run_cli("--spec " + data("golden") + " --json lang --max-len 3 --count");
  CHECK(r.status == 0);
  bool has_counts = r.out.find("[2,3,5]") != std::string::npos ||
                    r.out.find("2,\n") != std::string::npos;
  CHECK(has_counts);
}

TEST_CASE("machine reports are byte identical across runs") {
  for (const std::string args : {
           "--spec " + data("ex4") + " --json cover --set F:1,2 --with \"E:1;E:2;E:3;E:4;C:0|10,20,30\"",
           "--spec " + data("golden") + " --json star",
           "--spec " + data("abc") + " --json ground",
           "--spec " + data("golden") + " --json hull-mul --a th:0 --b ~th:0",
           "--spec " + data("ex4") + " --json hyp",
       }) {
    RunResult a = run_cli(args);
    RunResult b = run_cli(args);
    CHECK(a.status == 0);
    CHECK(a.out == b.out);
    CHECK_FALSE(a.out.empty());
  }
}

TEST_CASE("negative verdicts still exit zero, usage errors do not") {
  CHECK(run_cli("--spec " + data("abc") + " ground").status == 0);
  CHECK(run_cli("--spec " + data("golden") + " follower --lambda zz").status != 0);
  CHECK(run_cli("nonsense-command").status != 0);
  CHECK(run_cli("--spec /does/not/exist.shift lang --max-len 2").status != 0);
}

TEST_CASE("unit spelling follows the alphabet") {
  // In the golden alphabet the symbol 1 is a word, so the unit is _ there.
  RunResult r = run_cli("--spec " + data("golden") + " --json hull-mul --a id --b th:1");
  CHECK(r.status == 0);
  CHECK(r.out.find("\"_\"") != std::string::npos);
  // In the abc alphabet the token 1 denotes the unit.
  RunResult s = run_cli("--spec " + data("abc") + " --json follower --lambda 1,a");
  CHECK(s.status == 0);
  CHECK(s.out.find("\"cardinality\"") != std::string::npos);
}
