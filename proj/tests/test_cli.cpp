// End-to-end coverage of the command-line tool: golden outputs, exit
// codes, and byte-stable rendering, driven through a real subprocess.

#include "spinq/families.hpp"
#include "spinq/fixed_point_data.hpp"
#include "spinq/localization.hpp"

#include "support/process.hpp"

#include <doctest.h>
#include <json.hpp>

using namespace spinq;
using testsupport::RunResult;
using testsupport::TempFile;
using testsupport::run_cli;

namespace {

std::string golden(const std::string& name) {
  return std::string(SPINQ_DATA_DIR) + "/" + name;
}

} // namespace

TEST_CASE("usage errors exit with the input-error code") {
  CHECK(run_cli({}).exit_code == 2);
  CHECK(run_cli({"frobnicate"}).exit_code == 2);
  CHECK(run_cli({"gen", "sphere", "--l", "1"}).exit_code == 2); // missing required options
  CHECK(run_cli({"quantize", "/nonexistent/manifest.json"}).exit_code == 2);
  CHECK(run_cli({"check", "nonsense"}).exit_code == 2);

  const RunResult help = run_cli({"--help"});
  CHECK(help.exit_code == 0);
  CHECK(help.out.find("quantize") != std::string::npos);
}

TEST_CASE("quantize: golden manifests under every convention") {
  const std::string m = golden("s2xs1_1_3_-3_1.json");

  CHECK(run_cli({"quantize", m}).out == "z^-2 + z^2\n");
  CHECK(run_cli({"quantize", m, "--codim-sign", "on"}).out == "-z^-2 - z^2\n");
  CHECK(run_cli({"quantize", m, "--normal-factor", "euler"}).out == "z^-1 + 1 + z\n");
  const RunResult full =
      run_cli({"quantize", m, "--normal-factor", "euler", "--codim-sign", "on"});
  CHECK(full.exit_code == 0);
  CHECK(full.out == "-z^-1 - 1 - z\n");

  CHECK(run_cli({"quantize", golden("sphere_1_3_-3.json")}).out == "-z^-1 - 1 - z\n");
  CHECK(run_cli({"quantize", golden("sphere_2_4_-4.json")}).out == "-z^-1 - z\n");
  CHECK(run_cli({"quantize", golden("s3_2_3_0.json")}).out == "0\n");
}

TEST_CASE("quantize: malformed or irreducible input selects the exit code") {
  const TempFile junk("junk", "{ not json");
  CHECK(run_cli({"quantize", junk.path()}).exit_code == 2);

  const TempFile unknown_field(
      "unknown_field",
      R"({"name":"x","kind":"odd3","circles":[],"alpha":{},"extra":0})");
  CHECK(run_cli({"quantize", unknown_field.path()}).exit_code == 2);

  const TempFile lone(
      "lone",
      R"({"name":"lone","kind":"odd3","circles":[{"id":"F","mu":1,"n":1,"sigma":1}],"alpha":{"F":3}})");
  const RunResult r = run_cli({"quantize", lone.path(), "--normal-factor", "euler"});
  CHECK(r.exit_code == 3);
  CHECK(r.err.find("not divisible") != std::string::npos);
  // The literal reading of the same data is fine.
  CHECK(run_cli({"quantize", lone.path()}).exit_code == 0);
}

TEST_CASE("gen: output re-parses and matches the in-process generator") {
  const RunResult r = run_cli({"gen", "sphere", "--l", "2", "--mu-n", "4", "--mu-s", "-4"});
  CHECK(r.exit_code == 0);
  CHECK(r.out == emit_manifest(ManifoldData{make_sphere(2, 4, -4)}));
  CHECK(parse_manifest(r.out) == ManifoldData{make_sphere(2, 4, -4)});

  CHECK(run_cli({"gen", "s2xs1", "--l", "1", "--mu-n", "3", "--mu-s", "-3", "--a", "1"}).out ==
        emit_manifest(ManifoldData{make_s2xs1(1, 3, -3, 1)}));
  CHECK(run_cli({"gen", "s3", "--n1", "0", "--n2", "4", "--mu", "7"}).out ==
        emit_manifest(ManifoldData{make_s3(0, 4, 7)}));

  // Out-of-range parameters are input errors.
  CHECK(run_cli({"gen", "sphere", "--l", "0", "--mu-n", "0", "--mu-s", "0"}).exit_code == 2);
  CHECK(run_cli({"gen", "s3", "--n1", "0", "--n2", "0", "--mu", "1"}).exit_code == 2);
}

TEST_CASE("up: crossing with the circle matches the library") {
  const RunResult r = run_cli({"up", golden("sphere_1_3_-3.json")});
  CHECK(r.exit_code == 0);
  CHECK(r.out == emit_manifest(ManifoldData{up_surface_to_3(make_sphere(1, 3, -3))}));

  // Crossing an odd manifest is a spec violation, hence an input error.
  CHECK(run_cli({"up", golden("s2xs1_1_3_-3_1.json")}).exit_code == 2);
}

TEST_CASE("consum: merges the designated circles and hits the identity") {
  const RunResult r = run_cli({"consum", golden("consum_m1.json"), golden("consum_m2.json"),
                               "--left", "F1", "--right", "G1", "--l", "2"});
  CHECK(r.exit_code == 0);

  const auto glued = std::get<OddManifoldData>(parse_manifest(r.out));
  const FixedCircle* merged = glued.find_circle("F1#G1");
  REQUIRE(merged != nullptr);
  CHECK(merged->mu == 6);
  CHECK(merged->n == 2);
  CHECK(glued.alpha.at("F1#G1") == 2);

  const TempFile out("consum_out", r.out);
  CHECK(run_cli({"quantize", out.path()}).out == "2*z^4\n");

  CHECK(run_cli({"consum", golden("consum_m1.json"), golden("consum_m2.json"), "--left",
                 "F1", "--right", "G1", "--l", "3"})
            .exit_code == 2); // normal weight mismatch
}

TEST_CASE("cut: default output is a two-element manifest array") {
  const RunResult r =
      run_cli({"cut", golden("t3_empty.json"), "--spec", golden("t3_cut.json")});
  CHECK(r.exit_code == 0);
  const nlohmann::json doc = nlohmann::json::parse(r.out);
  REQUIRE(doc.is_array());
  REQUIRE(doc.size() == 2);

  const auto plus = std::get<OddManifoldData>(parse_manifest(doc[0].dump()));
  CHECK(plus.circles.size() == 2);
}

TEST_CASE("cut: --out files hold loadable pieces") {
  const auto plus_path = testsupport::fresh_temp_path("cut_plus");
  const auto minus_path = testsupport::fresh_temp_path("cut_minus");
  const RunResult r =
      run_cli({"cut", golden("t3_empty.json"), "--spec", golden("t3_cut.json"), "--out-plus",
               plus_path.string(), "--out-minus", minus_path.string()});
  CHECK(r.exit_code == 0);
  CHECK(r.out.empty());

  CHECK(run_cli({"quantize", plus_path.string(), "--normal-factor", "euler"}).out == "-2*z\n");
  CHECK(run_cli({"quantize", minus_path.string(), "--normal-factor", "euler"}).out == "2*z\n");
  std::filesystem::remove(plus_path);
  std::filesystem::remove(minus_path);
}

TEST_CASE("reduce: sums the seam alpha degrees") {
  const RunResult r = run_cli({"reduce", "--spec", golden("t3_cut.json")});
  CHECK(r.exit_code == 0);
  CHECK(r.out == "0\n");

  const TempFile spec("reduce_spec", R"({"seam":[{"mu":7,"a":3},{"mu":0,"a":-1}]})");
  CHECK(run_cli({"reduce", "--spec", spec.path()}).out == "2\n");
}

TEST_CASE("qr: reports both sides of the comparison") {
  const TempFile spec("qr_spec", R"({"plus":["N","S"],"seam":[{"mu":0,"a":1}]})");
  const RunResult r = run_cli({"qr", golden("s2xs1_1_3_-3_1.json"), "--spec", spec.path(),
                               "--normal-factor", "euler"});
  CHECK(r.exit_code == 0);
  CHECK(r.out == "q_invariant: 1\nq_reduced: 1\nequal: true\nresult: pass\n");

  const RunResult literal =
      run_cli({"qr", golden("s2xs1_1_3_-3_1.json"), "--spec", spec.path()});
  CHECK(literal.exit_code == 0);
  CHECK(literal.out == "q_invariant: 0\nq_reduced: 1\nequal: false\nresult: fail\n");
}

TEST_CASE("check: pass/fail reports with explicit case counts") {
  const RunResult r = run_cli({"check", "s3zero", "--cases", "5"});
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("check: s3zero\n") == 0);
  CHECK(r.out.find("cases: 5\n") != std::string::npos);
  CHECK(r.out.find("result: pass\n") != std::string::npos);
}

TEST_CASE("identical invocations produce identical bytes") {
  const std::vector<std::string> args = {"check", "ring", "--seed", "7", "--cases", "50"};
  const RunResult a = run_cli(args);
  const RunResult b = run_cli(args);
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK_FALSE(a.out.empty());

  const std::vector<std::string> gen_args = {"gen", "s2xs1", "--l", "1", "--mu-n", "3",
                                             "--mu-s", "-3", "--a", "1"};
  CHECK(run_cli(gen_args).out == run_cli(gen_args).out);
}

TEST_CASE("golden manifests round-trip byte for byte") {
  for (const char* name : {"sphere_1_3_-3.json", "sphere_2_4_-4.json", "s2xs1_1_3_-3_1.json",
                           "s3_2_3_0.json", "s3_0_4_7.json", "consum_m1.json",
                           "consum_m2.json", "t3_empty.json"}) {
    CAPTURE(name);
    const std::string text = testsupport::read_file(golden(name));
    REQUIRE_FALSE(text.empty());
    CHECK(emit_manifest(parse_manifest(text)) == text);
  }
}
