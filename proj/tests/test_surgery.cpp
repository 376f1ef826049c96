// Surgery layer: connected sums and the correction character, cutting
// along invariant tori, reduction, and the comparison report.

#include "spinq/checks.hpp"
#include "spinq/families.hpp"
#include "spinq/surgery.hpp"

#include <doctest.h>

using namespace spinq;

namespace {

VirtualCharacter mono(std::int64_t s_exp, Coeff c = 1) {
  return VirtualCharacter::monomial(s_exp, std::move(c));
}

// Two one-circle manifolds glued along spheres of speed 2 further down.
OddManifoldData piece_m1() {
  OddManifoldData m{"m1", {{"F1", 2, 2, +1}}, {}};
  m.alpha.integrals["F1"] = 1;
  return m;
}

OddManifoldData piece_m2() {
  OddManifoldData m{"m2", {{"G1", 4, 2, +1}}, {}};
  m.alpha.integrals["G1"] = 1;
  return m;
}

} // namespace

TEST_CASE("correction character: frozen instance and degenerate cases") {
  const VirtualCharacter d = correction_D(2, 4, 1, 1, 2);
  CHECK(canonical_string(d) == "-z^2 - z^3 + 2*z^4");
  CHECK(d == mono(8, 2) - mono(4) - mono(6));

  CHECK(correction_D(2, 4, 0, 0, 2).is_zero());
  // Only the second designated circle carries alpha.
  CHECK(correction_D(1, 3, 0, 2, 1) == mono(5, 2) - mono(4, 2));
  // mu2 == 0 collapses the first difference.
  CHECK(correction_D(6, 0, 5, 0, 3).is_zero());
}

TEST_CASE("connected sum merges the designated circles") {
  std::string warning;
  const OddManifoldData glued =
      connected_sum(piece_m1(), piece_m2(), {"F1", "G1", 2}, &warning);

  CHECK(warning.empty());
  CHECK(glued.name == "m1#m2");
  REQUIRE(glued.circles.size() == 1);
  CHECK(glued.circles[0] == FixedCircle{"F1#G1", 6, 2, +1});
  CHECK(glued.alpha.at("F1#G1") == 2);
  CHECK_NOTHROW(validate(glued));
}

TEST_CASE("connected sum keeps untouched circles and their alpha") {
  OddManifoldData m1 = piece_m1();
  m1.circles.push_back({"X", -1, 3, -1});
  m1.alpha.integrals["X"] = 9;
  OddManifoldData m2 = piece_m2();
  m2.circles.push_back({"Y", 5, -4, +1});

  const OddManifoldData glued = connected_sum(m1, m2, {"F1", "G1", 2});
  REQUIRE(glued.circles.size() == 3);
  CHECK(glued.find_circle("X") != nullptr);
  CHECK(*glued.find_circle("X") == FixedCircle{"X", -1, 3, -1});
  CHECK(*glued.find_circle("Y") == FixedCircle{"Y", 5, -4, +1});
  CHECK(glued.alpha.at("X") == 9);
  CHECK(glued.alpha.at("Y") == 0);
}

TEST_CASE("connected sum surfaces a warning on sigma disagreement") {
  OddManifoldData m2 = piece_m2();
  m2.circles[0].sigma = -1;
  std::string warning;
  const OddManifoldData glued = connected_sum(piece_m1(), m2, {"F1", "G1", 2}, &warning);
  CHECK_FALSE(warning.empty());
  CHECK(glued.circles[0].sigma == +1); // taken from the left designated circle
}

TEST_CASE("connected sum rejects mismatched specs") {
  CHECK_THROWS_AS(connected_sum(piece_m1(), piece_m2(), {"nope", "G1", 2}), SpecError);
  CHECK_THROWS_AS(connected_sum(piece_m1(), piece_m2(), {"F1", "nope", 2}), SpecError);
  CHECK_THROWS_AS(connected_sum(piece_m1(), piece_m2(), {"F1", "G1", 0}), SpecError);
  CHECK_THROWS_AS(connected_sum(piece_m1(), piece_m2(), {"F1", "G1", 3}), SpecError);

  // Colliding ids among untouched circles invalidate the result.
  OddManifoldData m1 = piece_m1();
  m1.circles.push_back({"X", 0, 1, +1});
  OddManifoldData m2 = piece_m2();
  m2.circles.push_back({"X", 0, 1, +1});
  CHECK_THROWS_AS(connected_sum(m1, m2, {"F1", "G1", 2}), SpecError);
}

TEST_CASE("connected sum identity: frozen worked instance") {
  const OddManifoldData m1 = piece_m1();
  const OddManifoldData m2 = piece_m2();
  const OddManifoldData glued = connected_sum(m1, m2, {"F1", "G1", 2});

  const VirtualCharacter q1 = quantize_odd3(m1);
  const VirtualCharacter q2 = quantize_odd3(m2);
  const VirtualCharacter qg = quantize_odd3(glued);
  CHECK(canonical_string(q1) == "z^2");
  CHECK(canonical_string(q2) == "z^3");
  CHECK(canonical_string(qg) == "2*z^4");
  CHECK(qg == q1 + q2 + correction_D(2, 4, 1, 1, 2));
}

TEST_CASE("connected sum identity on random pieces") {
  spinq::checks::Rng rng(1618);
  for (int i = 0; i < 100; ++i) {
    const std::int64_t l = rng.range(1, 6);
    auto draw = [&](const std::string& prefix) {
      OddManifoldData m = spinq::checks::random_odd_manifold(rng, 3, prefix);
      std::int64_t mu = 0;
      do {
        mu = rng.range(-20, 20);
      } while ((mu - l) % 2 != 0);
      const std::int64_t a = rng.range(-10, 10);
      m.circles.push_back({prefix + "glue", mu, l, +1});
      m.alpha.integrals[prefix + "glue"] = a;
      return std::tuple{m, mu, a};
    };
    const auto [m1, mu1, a1] = draw("A");
    const auto [m2, mu2, a2] = draw("B");

    const OddManifoldData glued = connected_sum(m1, m2, {"Aglue", "Bglue", l});
    CHECK(quantize_odd3(glued) ==
          quantize_odd3(m1) + quantize_odd3(m2) + correction_D(mu1, mu2, a1, a2, l));
  }
}

TEST_CASE("cut splits circles and adds mirrored seam circles") {
  OddManifoldData m{"m", {{"A", 1, 2, +1}, {"B", -2, -3, -1}}, {}};
  m.alpha.integrals["A"] = 3;

  CutSpec spec;
  spec.plus_side = {"A"};
  spec.minus_side = {"B"};
  spec.seam = {{0, 5}};

  const auto [plus, minus] = cut_split(m, spec);

  CHECK(plus.name == "m+");
  REQUIRE(plus.circles.size() == 2);
  CHECK(plus.circles[0] == FixedCircle{"A", 1, 2, +1});
  CHECK(plus.circles[1] == FixedCircle{"Z1", 0, 1, +1});
  CHECK(plus.alpha.at("A") == 3);
  CHECK(plus.alpha.at("Z1") == 5);

  CHECK(minus.name == "m-");
  REQUIRE(minus.circles.size() == 2);
  CHECK(minus.circles[0] == FixedCircle{"B", -2, -3, -1});
  CHECK(minus.circles[1] == FixedCircle{"Z1", 0, 1, -1});
  CHECK(minus.alpha.at("Z1") == 5);

  // The mirrored seam circles cancel, so quantization is additive.
  for (Convention conv : {kLiteralOff, kLiteralOn})
    CHECK(quantize_odd3(plus, conv) + quantize_odd3(minus, conv) == quantize_odd3(m, conv));
}

TEST_CASE("cut rejects specs that do not partition the circles") {
  const OddManifoldData m{"m", {{"A", 1, 2, +1}, {"B", -2, -3, -1}}, {}};

  CutSpec both;
  both.plus_side = {"A", "B"};
  both.minus_side = {"B"};
  CHECK_THROWS_AS(cut_split(m, both), SpecError);

  CutSpec missing;
  missing.plus_side = {"A"};
  CHECK_THROWS_AS(cut_split(m, missing), SpecError);

  CutSpec unknown;
  unknown.plus_side = {"A", "C"};
  unknown.minus_side = {"B"};
  CHECK_THROWS_AS(cut_split(m, unknown), SpecError);

  CutSpec dup;
  dup.plus_side = {"A", "A"};
  dup.minus_side = {"B"};
  CHECK_THROWS_AS(cut_split(m, dup), SpecError);

  // A seam id colliding with an interior circle is refused.
  OddManifoldData z{"z", {{"Z1", 1, 2, +1}}, {}};
  CutSpec seam_collision;
  seam_collision.plus_side = {"Z1"};
  seam_collision.seam = {{0, 1}};
  CHECK_THROWS_AS(cut_split(z, seam_collision), SpecError);
}

TEST_CASE("cutting the trivial torus bundle: pieces are exact opposites") {
  const OddManifoldData torus{"t3", {}, {}};
  CutSpec spec;
  spec.seam = {{1, 2}, {3, -2}};

  const auto [plus, minus] = cut_split(torus, spec);
  CHECK(canonical_string(quantize_odd3(plus, kEulerOff)) == "-2*z");
  CHECK(canonical_string(quantize_odd3(minus, kEulerOff)) == "2*z");
  CHECK(canonical_string(quantize_odd3(plus, kLiteralOff)) == "2*z - 2*z^2");
  for (Convention conv : kAllConventions) {
    CHECK(quantize_odd3(plus, conv) == -quantize_odd3(minus, conv));
    CHECK((quantize_odd3(plus, conv) + quantize_odd3(minus, conv)) ==
          quantize_odd3(torus, conv));
  }
}

TEST_CASE("cut additivity on random manifolds") {
  spinq::checks::Rng rng(2718);
  for (int i = 0; i < 100; ++i) {
    const OddManifoldData m = spinq::checks::random_odd_manifold(rng);
    CutSpec spec;
    for (const auto& c : m.circles)
      (rng.coin() ? spec.plus_side : spec.minus_side).push_back(c.id);
    const std::int64_t seams = rng.range(0, 3);
    for (std::int64_t k = 0; k < seams; ++k)
      spec.seam.push_back({rng.range(-10, 10), rng.range(-10, 10)});

    const auto [plus, minus] = cut_split(m, spec);
    for (Convention conv : {kLiteralOff, kLiteralOn})
      CHECK(quantize_odd3(plus, conv) + quantize_odd3(minus, conv) == quantize_odd3(m, conv));
    for (Convention conv : {kEulerOff, kEulerOn})
      CHECK(odd3_localization_sum(plus, conv) + odd3_localization_sum(minus, conv) ==
            odd3_localization_sum(m, conv));
  }
}

TEST_CASE("reduction counts alpha degrees over the seam") {
  CHECK(reduce_circles({}) == 0);

  CutSpec spec;
  spec.seam = {{7, 3}, {0, -1}};
  CHECK(reduce_circles(spec) == 2);
}

TEST_CASE("quantization-vs-reduction report") {
  // Free action on the 3-sphere: both sides vanish.
  const OddManifoldData s3 = make_s3(2, 3, 0);
  CutSpec trivial;
  trivial.seam = {{0, 0}};
  const QrReport zero = qr_report(s3, trivial);
  CHECK(zero.q_invariant == 0);
  CHECK(zero.q_reduced == 0);
  CHECK(zero.equal);

  // Under the euler convention Q(S^2 x S^1) has invariant part 1.
  const OddManifoldData m = make_s2xs1(1, 3, -3, 1);
  CutSpec spec;
  spec.plus_side = {"N", "S"};
  spec.seam = {{0, 1}};
  const QrReport agree = qr_report(m, spec, kEulerOff);
  CHECK(agree.q_invariant == 1);
  CHECK(agree.q_reduced == 1);
  CHECK(agree.equal);

  // The literal reading has no invariant part here; the report records
  // the disagreement instead of asserting.
  const QrReport disagree = qr_report(m, spec, kLiteralOff);
  CHECK(disagree.q_invariant == 0);
  CHECK(disagree.q_reduced == 1);
  CHECK_FALSE(disagree.equal);

  // The spec is still validated against the manifold.
  CutSpec bad;
  bad.plus_side = {"N"};
  CHECK_THROWS_AS(qr_report(m, bad), SpecError);
}

TEST_CASE("cut spec documents") {
  const CutSpec spec = parse_cut_spec(
      R"({"plus":["A"],"minus":["B"],"seam":[{"mu":1,"a":2},{"mu":3,"a":-2}]})");
  CHECK(spec.plus_side == std::vector<std::string>{"A"});
  CHECK(spec.minus_side == std::vector<std::string>{"B"});
  REQUIRE(spec.seam.size() == 2);
  CHECK(spec.seam[0].mu == 1);
  CHECK(spec.seam[0].a == 2);
  CHECK(spec.seam[1].mu == 3);
  CHECK(spec.seam[1].a == -2);

  // All fields are optional; an empty object is the empty cut.
  const CutSpec empty = parse_cut_spec("{}");
  CHECK(empty.plus_side.empty());
  CHECK(empty.minus_side.empty());
  CHECK(empty.seam.empty());

  CHECK_THROWS_AS(parse_cut_spec("null"), SchemaError);
  CHECK_THROWS_AS(parse_cut_spec(R"({"plus":[], "sides":[]})"), SchemaError);
  CHECK_THROWS_AS(parse_cut_spec(R"({"seam":[{"mu":1}]})"), SchemaError);
  CHECK_THROWS_AS(parse_cut_spec(R"({"seam":[{"mu":1,"a":2,"x":3}]})"), SchemaError);
  CHECK_THROWS_AS(parse_cut_spec(R"({"seam":[{"mu":"1","a":2}]})"), SchemaError);
  CHECK_THROWS_AS(load_cut_spec("/nonexistent/spec.json"), SchemaError);
}
