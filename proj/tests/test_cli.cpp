#include <doctest.h>

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "preriesz/cli.hpp"
#include "preriesz/cover.hpp"
#include "preriesz/goperator.hpp"
#include "support/generators.hpp"

using namespace preriesz;
using namespace preriesz::cli;

namespace {

const std::string kFixtures = PRERIESZ_FIXTURES;

std::string fixture(const std::string& name) { return kFixtures + "/" + name; }

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Run {
  int status;
  std::string out;
  std::string err;
};

Run run(Verb verb, std::vector<std::string> targets, OutputMode mode = OutputMode::text) {
  Command cmd;
  cmd.verb = verb;
  cmd.targets = std::move(targets);
  cmd.output = mode;
  std::ostringstream out, err;
  const int status = dispatch(cmd, out, err);
  return {status, out.str(), err.str()};
}

std::string text_verdict(const std::string& out) {
  const auto pos = out.rfind("verdict: ");
  REQUIRE(pos != std::string::npos);
  return out.substr(pos + 9, out.size() - pos - 10);
}

std::string temp_file(const std::string& name, const std::string& content) {
  const std::string path = std::string(PRERIESZ_BINARY_DIR) + "/" + name;
  std::ofstream(path) << content;
  return path;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("fixtures are the canonical text of the bundled matrices") {
  const LMatrix p = example22_P(), q = example22_Q();
  const CoverMatrix fp = embed_F(p), fq = embed_F(q);
  const CoverMatrix m2 = cover_lattice(fp, fq, LatticeOp::meet);
  CHECK(slurp(fixture("P.lmatrix")) == p.str());
  CHECK(slurp(fixture("Q.lmatrix")) == q.str());
  CHECK(slurp(fixture("FP.cover")) == fp.str());
  CHECK(slurp(fixture("FQ.cover")) == fq.str());
  CHECK(slurp(fixture("M2.cover")) == m2.str());
  CHECK(slurp(fixture("M1.cover")) == preimage_solve(m2).m1.str());
  CHECK(slurp(fixture("T.gop")) == build_T_example21().str());
}

TEST_CASE("check on P") {
  const Run r = run(Verb::check, {fixture("P.lmatrix")});
  CHECK(r.status == 0);
  CHECK(text_verdict(r.out) == "positive: yes, regular: yes (sup 3), order-continuous: yes");
  const Run bad = run(Verb::check, {temp_file("neg.lmatrix", "lmatrix window 1 1\n0 1 -1\ntail zero\n")});
  CHECK(bad.status == 0);
  CHECK(text_verdict(bad.out) == "positive: no, regular: yes (sup 1), order-continuous: no");
  CHECK(bad.out.find("(alpha) fails at row 1, column 1") != std::string::npos);
}

TEST_CASE("preimage on M2 is a successful inconsistency verdict") {
  const Run r = run(Verb::preimage, {fixture("M2.cover")});
  CHECK(r.status == 0);
  CHECK(text_verdict(r.out) == "inconsistent: column 0 alternates (2, 1), no preimage");
  const Run ok = run(Verb::preimage, {fixture("FQ.cover")}, OutputMode::structured);
  CHECK(ok.status == 0);
  const auto doc = nlohmann::json::parse(ok.out);
  CHECK(doc["verdict"] == "preimage exists");
  CHECK(LMatrix::parse(doc["steps"][1]["data"]["A"].get<std::string>()) == example22_Q());
}

TEST_CASE("example 22") {
  const Run r = run(Verb::example, {"22"});
  CHECK(r.status == 0);
  CHECK(text_verdict(r.out) == "𝓝 is not a vector lattice");
}

TEST_CASE("input errors are nonzero") {
  const Run empty = run(Verb::check, {fixture("empty.lmatrix")});
  CHECK(empty.status != 0);
  CHECK(empty.out.empty());
  CHECK(empty.err.find("line 1") != std::string::npos);
  const Run mismatch = run(Verb::check, {fixture("M2.cover")});
  CHECK(mismatch.status != 0);
  CHECK(mismatch.err.find("format error") != std::string::npos);
  const Run mismatch2 = run(Verb::preimage, {fixture("P.lmatrix")});
  CHECK(mismatch2.status != 0);
  const Run missing = run(Verb::embed, {fixture("no-such-file")});
  CHECK(missing.status != 0);
  const Run malformed = run(Verb::check, {temp_file("bad.lmatrix", "lmatrix window 1 1\n0 0 2\n0 1 x\ntail zero\n")});
  CHECK(malformed.status != 0);
  CHECK(malformed.err.find("line 3") != std::string::npos);
  CHECK(run(Verb::meet, {fixture("FP.cover")}).status != 0);
}

TEST_CASE("text and structured verdicts agree") {
  const std::vector<std::pair<Verb, std::vector<std::string>>> cmds = {
      {Verb::check, {fixture("P.lmatrix")}},
      {Verb::check, {fixture("Q.lmatrix")}},
      {Verb::embed, {fixture("P.lmatrix")}},
      {Verb::meet, {fixture("FP.cover"), fixture("FQ.cover")}},
      {Verb::preimage, {fixture("M2.cover")}},
      {Verb::preimage, {fixture("FP.cover")}},
      {Verb::refute_majorant, {fixture("P.lmatrix")}},
      {Verb::example, {"18"}},
      {Verb::example, {"21"}},
      {Verb::example, {"22"}},
      {Verb::example, {"23"}},
  };
  for (const auto& [verb, targets] : cmds) {
    CAPTURE(std::string(verb_name(verb)));
    const Run t = run(verb, targets);
    const Run s = run(verb, targets, OutputMode::structured);
    REQUIRE(t.status == 0);
    REQUIRE(s.status == 0);
    CHECK(nlohmann::json::parse(s.out)["verdict"] == text_verdict(t.out));
  }
}

TEST_CASE("structured output round-trips matrices") {
  testing::Rng rng(61);
  for (int k = 0; k < 100; ++k) {
    const LMatrix a = testing::random_lmatrix(rng);
    const std::string path = temp_file("roundtrip.lmatrix", a.str());
    const Run r = run(Verb::embed, {path}, OutputMode::structured);
    REQUIRE(r.status == 0);
    const auto doc = nlohmann::json::parse(r.out);
    const auto& data = doc["steps"][0]["data"];
    const LMatrix back = LMatrix::parse(data["A"].get<std::string>());
    CHECK(back == a);
    CHECK(back.str() == a.str());
    const CoverMatrix fa = CoverMatrix::parse(data["F(A)"].get<std::string>());
    CHECK(fa == embed_F(a));
    CHECK(fa.str() == embed_F(a).str());
  }
}

TEST_CASE("verbosity") {
  CHECK(verbosity_from_env(nullptr) == 2);
  CHECK(verbosity_from_env("0") == 0);
  CHECK(verbosity_from_env("1") == 1);
  Report r{"t", {{"s", true, "d", {{"k", "v"}}}}, "done"};
  CHECK(render_text(r, 0) == "verdict: done\n");
  CHECK(render_text(r, 1) == "t\n  [ok]   s: d\nverdict: done\n");
  CHECK(render_text(r, 2) == "t\n  [ok]   s: d\n         k = v\nverdict: done\n");
  CHECK(parse_verb("refute-majorant") == Verb::refute_majorant);
  CHECK_FALSE(parse_verb("frobnicate"));
}

}  // TEST_SUITE
