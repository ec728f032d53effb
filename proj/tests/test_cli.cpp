#include <catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "orbibraid/cli.hpp"
#include "orbibraid/coherence.hpp"
#include "orbibraid/rep_file.hpp"
#include "support/corpus.hpp"

using namespace orbibraid;
using nlohmann::json;

namespace {
  struct Run {
    int         code;
    std::string out, err;
    json        j() const { return json::parse(out); }
  };

  Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int                c = cli::run(args, out, err);
    return {c, out.str(), err.str()};
  }

  std::string rep(std::string const& f) { return std::string(ORBIBRAID_DATA_DIR) + "/rep/" + f; }
}  // namespace

TEST_CASE("braid subcommand") {
  auto r = run({"--json", "braid", "eq", "-n", "3", "s1 s2 s1", "s2 s1 s2"});
  CHECK(r.code == 0);
  CHECK(r.j()["status"] == "ok");
  CHECK(r.j()["result"]["equal"] == true);

  r = run({"--json", "braid", "nf", "-n", "2", "s1 S1"});
  CHECK(r.code == 0);
  CHECK(r.j()["result"]["trivial"] == true);

  r = run({"--json", "braid", "eq", "--cyl", "-n", "2", "k s1 k s1", "s1 k s1 k"});
  CHECK(r.code == 0);
  CHECK(r.j()["result"]["equal"] == true);

  r = run({"--json", "braid", "eq", "-n", "2", "s1 s1", ""});
  CHECK(r.code == 1);
  CHECK(r.j()["status"] == "fail");

  r = run({"braid", "nf", "-n", "2", "s1 x3"});
  CHECK(r.code == 2);
  CHECK(r.out.find("status:  error") != std::string::npos);

  r = run({"braid", "nf", "-n", "2", "s2"});
  CHECK(r.code == 2);
  CHECK(run({"braid", "frob"}).code == 2);
  CHECK(run({}).code == 2);
}

TEST_CASE("operad subcommand") {
  auto r = run({"--json", "operad", "classify", "-k", "2"});
  CHECK(r.code == 0);
  CHECK(r.j()["result"]["count"] == 8);

  r = run({"--json", "operad", "classify", "-k", "3", "--out", "Dstar", "--inputs", "D,Dstar,D"});
  CHECK(r.code == 0);
  CHECK(r.j()["result"]["count"] == 8);  // the Dstar input is pinned

  // unit on the left
  r = run({"--json", "operad", "compose", "op D [D] eps=0 perm=1", "op D [D,D] eps=01 perm=21"});
  CHECK(r.code == 0);
  CHECK(r.j()["result"]["result"] == "op D [D,D] eps=01 perm=21");

  CHECK(run({"operad", "compose", "op D [D,D] eps=00 perm=12", "op D [D] eps=0 perm=1"}).code
        == 2);
}

TEST_CASE("coherence subcommand") {
  for (auto const& e : testing::corpus()) {
    auto r = run({"--json", "coherence", "check", testing::diagram_path(e.file)});
    INFO(e.file);
    CHECK(r.code == (e.expected == Status::commutes ? 0 : 1));
    CHECK(r.j()["result"]["verdict"] == to_string(e.expected));
  }
  auto r = run({"coherence", "check", testing::diagram_path("sigma_squared_braided.diag"),
                "--flavor", "symmetric"});
  CHECK(r.code == 0);
  CHECK(run({"coherence", "check", "/nonexistent.diag"}).code == 2);
}

TEST_CASE("coherence subcommand rejects bad input") {
  auto path = (std::filesystem::temp_directory_path() / "orbibraid_cli_bad.diag").string();
  {
    std::ofstream f(path);
    f << "flavor = braided\nlhs = vert(kappa(M, X1), a(M, X1, X2))\nrhs = id(act(M, X1))\n";
  }
  auto r = run({"--json", "coherence", "check", path});
  CHECK(r.code == 2);
  CHECK(r.j()["status"] == "error");
  {
    std::ofstream f(path);
    f << "flavor = braided\nlhs = kappa(M,\nrhs = id(M)\n";
  }
  CHECK(run({"coherence", "check", path}).code == 2);
  std::remove(path.c_str());
}

TEST_CASE("rep subcommand") {
  auto r = run({"--json", "rep", "verify", rep("sl2.rep")});
  CHECK(r.code == 0);
  CHECK(r.j()["result"]["yang_baxter"] == true);
  CHECK(r.j()["result"]["reflection"] == true);
  CHECK(run({"rep", "verify", rep("sl2_twisted.rep")}).code == 0);
  CHECK(run({"rep", "verify", rep("broken.rep")}).code == 2);

  auto a = run({"--json", "rep", "eval", rep("sl2.rep"), "-n", "2", "k s1 k s1"});
  auto b = run({"--json", "rep", "eval", rep("sl2.rep"), "-n", "2", "s1 k s1 k"});
  CHECK(a.code == 0);
  CHECK(a.j()["result"]["matrix"] == b.j()["result"]["matrix"]);
  auto c = run({"--json", "rep", "eval", rep("sl2.rep"), "-n", "2", "k s1"});
  CHECK(a.j()["result"]["matrix"] != c.j()["result"]["matrix"]);

  auto s = run({"--json", "rep", "eval", rep("sl2.rep"), "-n", "1", "k", "--at", "2"});
  CHECK(s.j()["result"]["specialized"] == json::parse(R"([["3/2","2"],["1","0"]])"));

  auto m = run({"--json", "rep", "eval", rep("sl2.rep"), "--mor", "sigma(X1, X2)"});
  CHECK(m.code == 0);
  CHECK(m.j()["result"]["rows"] == 4);
}

TEST_CASE("reports are deterministic and timing is opt-in") {
  std::vector<std::vector<std::string>> cmds{
      {"braid", "nf", "-n", "4", "s1 s2 S3 s1 s2"},
      {"coherence", "check", testing::diagram_path("bp2.diag")},
      {"--json", "rep", "eval", rep("sl2_twisted.rep"), "-n", "2", "k s1 k s1"}};
  for (auto const& c : cmds) {
    auto x = run(c), y = run(c);
    CHECK(x.out == y.out);
    CHECK(x.out.find("elapsed") == std::string::npos);
  }
  auto t = run({"--json", "--timing", "braid", "nf", "-n", "2", "s1"});
  CHECK(t.j().contains("elapsed_ms"));
}

TEST_CASE("bundled files round-trip") {
  for (auto const& e : testing::corpus()) {
    Diagram d = load_diagram(testing::diagram_path(e.file));
    Diagram back = parse_diagram(to_string(d));
    CHECK(check(back).status == e.expected);
  }
  for (auto const* f : {"sl2.rep", "sl2_twisted.rep", "broken.rep"}) {
    RepData d = load_rep(rep(f));
    CHECK(to_json(parse_rep(to_json(d).dump())) == to_json(d));
  }
}
