#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>
#include <sstream>

#include "ordercalc/cli.hpp"

using nlohmann::json;

namespace {

struct CliRun {
  int code = 0;
  std::string out;
  std::string err;
};

CliRun run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = ordercalc::run_cli(args, out, err);
  return CliRun{code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("compare") {
  const CliRun r = run({"compare", "--order", "exoticC", "Y", "x"});
  CHECK(r.code == 0);
  CHECK(r.out == "Y ≺ x\n");

  const CliRun j = run({"--json", "compare", "--order", "exoticC", "Y", "x"});
  CHECK(j.code == 0);
  const json doc = json::parse(j.out);
  CHECK(doc.at("schema") == "ordercalc/1");
  CHECK(doc.at("relation") == "<");

  // byte-identical on identical inputs
  const CliRun j2 = run({"--json", "compare", "--order", "exoticC", "Y", "x"});
  CHECK(j.out == j2.out);
}

TEST_CASE("reduce and classify") {
  const CliRun r = run({"reduce", "--strands", "3", "s1 s2 S1"});
  CHECK(r.code == 0);
  CHECK(r.out == "S2 s1 s2\n");

  const CliRun c = run({"classify", "--strands", "3", "S1 S1 S2 S2 s1 s1 s1 s1"});
  CHECK(c.code == 0);
  CHECK(c.out.find("1-negative") == 0);
}

TEST_CASE("crossing verify exit codes") {
  const std::string cand = R"({"f":"Y","g":"x","u":"1","v":"yx","w":"xx","M":3,"N":1})";
  const CliRun ok = run({"crossing", "verify", "--order", "exoticC", "--nmax", "25", cand});
  CHECK(ok.code == 0);
  CHECK(ok.out == "verified up to n = 25\n");

  const std::string bad = R"({"f":"Y","g":"x","u":"yx","v":"yx","w":"xx","M":3,"N":1})";
  const CliRun refuted =
      run({"crossing", "verify", "--order", "exoticC", "--nmax", "25", bad});
  CHECK(refuted.code == 1);

  const CliRun json_ok =
      run({"--json", "crossing", "verify", "--order", "exoticC", "--nmax", "25", cand});
  const json doc = json::parse(json_ok.out);
  CHECK(doc.at("report").at("status") == "verified_up_to");
  CHECK(doc.at("report").at("n") == 25);
}

TEST_CASE("crossing pipeline: from-witness, convert, to-witness") {
  const CliRun fw = run({"--json", "crossing", "from-witness", "--order", "exoticC", "Y", "x"});
  REQUIRE(fw.code == 0);
  const json cand = json::parse(fw.out).at("candidate");
  CHECK(cand.at("f") == "Y");
  CHECK(cand.at("M") == 3);

  const CliRun conv =
      run({"--json", "crossing", "convert", "--order", "exoticC", cand.dump()});
  REQUIRE(conv.code == 0);
  CHECK(json::parse(conv.out).at("report").at("status") == "exact_verified");

  const CliRun tw = run({"--json", "crossing", "to-witness", "--order", "exoticC", "--nmax",
                         "25", cand.dump()});
  REQUIRE(tw.code == 0);
  const json witness = json::parse(tw.out).at("witness");
  CHECK(witness.at("h") == "xYxx");
  CHECK(witness.at("h_bar") == "xxx");
  CHECK(witness.at("n_checked") == 25);
}

TEST_CASE("crossing search") {
  const CliRun r = run({"--json", "crossing", "search", "--order", "exoticC", "--radius", "2",
                        "--max-m", "4", "--max-n", "4", "--nmax", "10", "--limit", "3"});
  REQUIRE(r.code == 0);
  const json doc = json::parse(r.out);
  CHECK(doc.at("found") == doc.at("results").size());
}

TEST_CASE("space commands") {
  const CliRun fp = run({"--json", "space", "fingerprint", "--order", "klein:++", "--radius",
                         "1"});
  REQUIRE(fp.code == 0);
  const json doc = json::parse(fp.out);
  CHECK(doc.at("signs").at("a") == "+");
  CHECK(doc.at("signs").at("B") == "-");

  const CliRun ar = run({"space", "agreement", "--order", "exoticC", "--other",
                         "conj(exoticC,y)", "--max-radius", "3"});
  CHECK(ar.code == 0);
  CHECK(ar.out == "3\n");

  const CliRun orbit =
      run({"--json", "space", "orbit", "--order", "klein:++", "--conj-radius", "1",
           "--fp-radius", "1"});
  REQUIRE(orbit.code == 0);
  CHECK(json::parse(orbit.out).at("distinct_fingerprints") == 2);
}

TEST_CASE("soul command") {
  const CliRun r = run({"--json", "soul", "--order", "exoticC", "--radius", "1",
                        "--ball-radius", "3", "--max-m", "4", "--max-n", "4", "--nmax", "10"});
  REQUIRE(r.code == 0);
  const json doc = json::parse(r.out);
  CHECK(doc.at("bounds").at("ball_radius") == 3);
  CHECK(doc.at("caveat").is_string());
  bool x_excluded = false;
  for (const auto& row : doc.at("excluded"))
    if (row.at("element") == "x") x_excluded = true;
  CHECK(x_excluded);

  const CliRun text = run({"soul", "--order", "exoticC", "--radius", "1", "--ball-radius", "2",
                           "--max-m", "3", "--max-n", "3", "--nmax", "10"});
  CHECK(text.code == 0);
  CHECK(text.out.find("bounded evidence") != std::string::npos);
}

TEST_CASE("experiments") {
  const CliRun klein = run({"--json", "experiment", "klein", "--radius", "2"});
  CHECK(klein.code == 0);
  CHECK(json::parse(klein.out).at("verdict") == "pass");

  const CliRun rigidity =
      run({"experiment", "rigidity", "--conj-radius", "2", "--check-radius", "2"});
  CHECK(rigidity.code == 0);
  CHECK(rigidity.out == "rigidity: pass\n");

  const CliRun convex = run({"experiment", "convex", "--radius", "2"});
  CHECK(convex.code == 0);
}

TEST_CASE("exhausted step budget exits 3") {
  const CliRun r =
      run({"reduce", "--strands", "3", "--max-steps", "2", "S1 S1 S2 S2 s1 s1 s1 s1"});
  CHECK(r.code == 3);
  CHECK(r.err.find("exceeded") != std::string::npos);
}

TEST_CASE("usage and domain errors exit 2") {
  CHECK(run({"compare", "--order", "exoticC", "Y"}).code == 2);       // missing word
  CHECK(run({"compare", "--order", "nope", "Y", "x"}).code == 2);     // bad designator
  CHECK(run({"compare", "--order", "exoticC", "a", "b"}).code == 2);  // wrong group
  CHECK(run({"crossing", "verify", "--order", "exoticC", "{oops"}).code == 2);
  CHECK(run({"crossing", "from-witness", "--order", "exoticC", "y", "x"}).code == 2);
  CHECK(run({"nonsense"}).code == 2);
}

TEST_CASE("help exits 0") {
  const CliRun r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("ordercalc") != std::string::npos);
}
