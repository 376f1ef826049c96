#include "spinq/checks.hpp"

#include "spinq/families.hpp"
#include "spinq/localization.hpp"
#include "spinq/surgery.hpp"

#include <functional>
#include <map>
#include <sstream>

namespace spinq::checks {

//
// Random data
//

std::int64_t Rng::range(std::int64_t lo, std::int64_t hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(next() % span);
}

std::int64_t Rng::nonzero(std::int64_t lo, std::int64_t hi) {
  for (;;) {
    const std::int64_t v = range(lo, hi);
    if (v != 0)
      return v;
  }
}

VirtualCharacter random_character(Rng& rng, std::size_t max_terms, std::int64_t max_abs_exp,
                                  std::int64_t max_abs_coeff) {
  VirtualCharacter out;
  const std::size_t terms = static_cast<std::size_t>(rng.range(0, static_cast<std::int64_t>(max_terms)));
  for (std::size_t i = 0; i < terms; ++i)
    out += VirtualCharacter::monomial(rng.range(-max_abs_exp, max_abs_exp),
                                      rng.range(-max_abs_coeff, max_abs_coeff));
  return out;
}

VirtualCharacter random_nonzero_character(Rng& rng) {
  for (;;) {
    VirtualCharacter c = random_character(rng);
    if (!c.is_zero())
      return c;
  }
}

OddManifoldData random_odd_manifold(Rng& rng, std::size_t max_circles,
                                    const std::string& id_prefix) {
  OddManifoldData m;
  m.name = "random-" + id_prefix;
  const std::size_t count =
      static_cast<std::size_t>(rng.range(0, static_cast<std::int64_t>(max_circles)));
  for (std::size_t i = 0; i < count; ++i) {
    FixedCircle c;
    c.id = id_prefix + std::to_string(i + 1);
    c.mu = rng.range(-20, 20);
    c.n = rng.nonzero(-6, 6);
    c.sigma = rng.sign();
    m.circles.push_back(c);
  }
  m.alpha = random_alpha(rng, m);
  validate(m);
  return m;
}

AlphaData random_alpha(Rng& rng, const OddManifoldData& m) {
  AlphaData alpha;
  for (const auto& c : m.circles)
    if (rng.range(0, 4) != 0) // leave some integrals implicit (= 0)
      alpha.integrals[c.id] = rng.range(-10, 10);
  return alpha;
}

AlphaData add_alpha(const AlphaData& a, const AlphaData& b) {
  AlphaData sum = a;
  for (const auto& [id, value] : b.integrals)
    sum.integrals[id] += value;
  return sum;
}

namespace {

// mu in [-15, 15] with the parity of l.
std::int64_t parity_weight(Rng& rng, std::int64_t l) {
  for (;;) {
    const std::int64_t mu = rng.range(-15, 15);
    if ((mu - l) % 2 == 0)
      return mu;
  }
}

struct SpherePick {
  std::int64_t l, mu_n, mu_s;
};

SpherePick pick_sphere(Rng& rng) {
  for (;;) {
    const std::int64_t l = rng.range(1, 5);
    const std::int64_t mu_n = parity_weight(rng, l);
    const std::int64_t mu_s = mu_n - 2 * l * rng.range(-2, 2); // 2l | mu_N - mu_S
    if (mu_s >= -15 && mu_s <= 15)
      return {l, mu_n, mu_s};
  }
}

} // namespace

EvenManifoldData random_sphere_family(Rng& rng) {
  const SpherePick p = pick_sphere(rng);
  return make_sphere(p.l, p.mu_n, p.mu_s);
}

PairedManifold random_paired_manifold(Rng& rng, std::size_t max_pairs) {
  PairedManifold pm;
  pm.manifold.name = "paired";
  const std::size_t pairs =
      static_cast<std::size_t>(rng.range(1, static_cast<std::int64_t>(max_pairs)));
  for (std::size_t i = 0; i < pairs; ++i) {
    const SpherePick p = pick_sphere(rng);
    const std::string north = "P" + std::to_string(i + 1) + "N";
    const std::string south = "P" + std::to_string(i + 1) + "S";
    pm.manifold.circles.push_back({north, p.mu_n, p.l, +1});
    pm.manifold.circles.push_back({south, p.mu_s, -p.l, +1});
    pm.pairs.emplace_back(north, south);
  }
  validate(pm.manifold);
  return pm;
}

AlphaData random_pair_alpha(Rng& rng, const PairedManifold& pm) {
  AlphaData alpha;
  for (const auto& [north, south] : pm.pairs) {
    const std::int64_t a = rng.range(-10, 10);
    alpha.integrals[north] = a;
    alpha.integrals[south] = a;
  }
  return alpha;
}

//
// Reporting plumbing
//

namespace {

std::uint64_t fnv1a(std::string_view text) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  std::ostringstream os;
  os << std::hex << v;
  return os.str();
}

class Recorder {
public:
  explicit Recorder(CheckReport& report) : report_(report) {}

  void label(std::size_t case_index, std::string inputs_text) {
    case_ = case_index;
    digest_ = hex64(fnv1a(inputs_text));
  }

  void equal(const std::string& what, const VirtualCharacter& expected,
             const VirtualCharacter& actual) {
    if (expected != actual)
      fail(what, canonical_string(expected), canonical_string(actual));
  }

  void equal(const std::string& what, const RationalCharacter& expected,
             const RationalCharacter& actual) {
    if (expected != actual)
      fail(what,
           canonical_string(expected.numerator()) + " / " + canonical_string(expected.denominator()),
           canonical_string(actual.numerator()) + " / " + canonical_string(actual.denominator()));
  }

  void is_true(const std::string& what, bool ok, const std::string& expected,
               const std::string& actual) {
    if (!ok)
      fail(what, expected, actual);
  }

  void fail(const std::string& what, const std::string& expected, const std::string& actual) {
    report_.failures.push_back(
        {"case " + std::to_string(case_) + " " + what + " [" + digest_ + "]", expected, actual});
  }

private:
  CheckReport& report_;
  std::size_t case_ = 0;
  std::string digest_;
};

std::string describe(const OddManifoldData& m) { return emit_manifest(ManifoldData(m)); }
std::string describe(const EvenManifoldData& m) { return emit_manifest(ManifoldData(m)); }

//
// Suites
//

void suite_ring(Rng& rng, std::size_t cases, CheckReport& report) {
  Recorder rec(report);
  for (std::size_t i = 0; i < cases; ++i) {
    const VirtualCharacter a = random_character(rng);
    const VirtualCharacter b = random_character(rng);
    const VirtualCharacter c = random_character(rng);
    rec.label(i, canonical_string(a) + "|" + canonical_string(b) + "|" + canonical_string(c));

    rec.equal("add-assoc", (a + b) + c, a + (b + c));
    rec.equal("add-comm", a + b, b + a);
    rec.equal("mul-assoc", (a * b) * c, a * (b * c));
    rec.equal("mul-comm", a * b, b * a);
    rec.equal("distrib", a * (b + c), a * b + a * c);
    rec.equal("add-identity", a + VirtualCharacter(), a);
    rec.equal("mul-identity", a * VirtualCharacter::one(), a);
    rec.equal("add-inverse", a + (-a), VirtualCharacter());
    if (!b.is_zero())
      rec.equal("quotient-of-product", exact_quotient(a * b, b), a);
    rec.is_true("invariant-additive",
                (a + b).invariant_part() == a.invariant_part() + b.invariant_part(),
                (a.invariant_part() + b.invariant_part()).str(),
                (a + b).invariant_part().str());
    rec.equal("parse-roundtrip", parse_character(canonical_string(a)), a);
  }
  report.cases_run = cases;
}

void suite_linearity(Rng& rng, std::size_t cases, CheckReport& report) {
  Recorder rec(report);
  for (std::size_t i = 0; i < cases; ++i) {
    // Sphere-pair unions: certified characters exist under every
    // convention, so linearity is checked on the reduced values.
    PairedManifold pm = random_paired_manifold(rng);
    const AlphaData alpha1 = random_pair_alpha(rng, pm);
    const AlphaData alpha2 = random_pair_alpha(rng, pm);
    rec.label(i, describe(pm.manifold));

    OddManifoldData with_sum = pm.manifold;
    with_sum.alpha = add_alpha(alpha1, alpha2);
    OddManifoldData with_first = pm.manifold;
    with_first.alpha = alpha1;
    OddManifoldData with_second = pm.manifold;
    with_second.alpha = alpha2;

    for (Convention conv : kAllConventions)
      rec.equal("pairs(" + to_string(conv) + ")",
                quantize_odd3(with_first, conv) + quantize_odd3(with_second, conv),
                quantize_odd3(with_sum, conv));

    // Arbitrary circle data with independent per-circle alpha: certified
    // characters under the literal conventions, the raw localization sum
    // under euler (the individual terms need not reduce there).
    OddManifoldData arb = random_odd_manifold(rng);
    const AlphaData beta1 = random_alpha(rng, arb);
    const AlphaData beta2 = random_alpha(rng, arb);
    OddManifoldData arb_sum = arb, arb_first = arb, arb_second = arb;
    arb_sum.alpha = add_alpha(beta1, beta2);
    arb_first.alpha = beta1;
    arb_second.alpha = beta2;

    for (Convention conv : {kLiteralOff, kLiteralOn})
      rec.equal("arbitrary(" + to_string(conv) + ")",
                quantize_odd3(arb_first, conv) + quantize_odd3(arb_second, conv),
                quantize_odd3(arb_sum, conv));
    for (Convention conv : {kEulerOff, kEulerOn})
      rec.equal("arbitrary-sum(" + to_string(conv) + ")",
                odd3_localization_sum(arb_first, conv) + odd3_localization_sum(arb_second, conv),
                odd3_localization_sum(arb_sum, conv));
  }
  report.cases_run = cases;
}

void suite_updown(Rng& rng, std::size_t cases, CheckReport& report) {
  Recorder rec(report);
  for (std::size_t i = 0; i < cases; ++i) {
    const EvenManifoldData sphere = random_sphere_family(rng);
    rec.label(i, describe(sphere));

    const VirtualCharacter even = quantize_even_isolated(sphere);
    const VirtualCharacter odd = quantize_odd3(up_surface_to_3(sphere), kEulerOn);
    rec.equal("even-equals-odd-up", even, odd);

    const bool weights_differ = sphere.points.at(0).mu != sphere.points.at(1).mu;
    rec.is_true("nontrivial-iff-weights-differ", even.is_zero() != weights_differ,
                weights_differ ? "nonzero character" : "0", canonical_string(even));
  }
  report.cases_run = cases;
}

struct ConSumPiece {
  OddManifoldData manifold;
  std::string designated;
  std::int64_t mu, a;
};

// Random manifold with a designated sigma=+1 circle of normal weight l.
ConSumPiece consum_piece(Rng& rng, std::int64_t l, const std::string& prefix) {
  ConSumPiece piece;
  piece.manifold = random_odd_manifold(rng, 3, prefix);
  piece.designated = prefix + "glue";
  do {
    piece.mu = rng.range(-20, 20);
  } while ((piece.mu - l) % 2 != 0); // mu + l even
  piece.a = rng.range(-10, 10);
  piece.manifold.circles.push_back({piece.designated, piece.mu, l, +1});
  piece.manifold.alpha.integrals[piece.designated] = piece.a;
  validate(piece.manifold);
  return piece;
}

void suite_consum(Rng& rng, std::size_t cases, CheckReport& report) {
  Recorder rec(report);
  for (std::size_t i = 0; i < cases; ++i) {
    const std::int64_t l = rng.range(1, 6);
    const ConSumPiece left = consum_piece(rng, l, "A");
    const ConSumPiece right = consum_piece(rng, l, "B");
    rec.label(i, describe(left.manifold) + describe(right.manifold));

    const ConSumSpec spec{left.designated, right.designated, l};
    const OddManifoldData glued = connected_sum(left.manifold, right.manifold, spec);

    rec.equal("sum-plus-correction",
              quantize_odd3(left.manifold) + quantize_odd3(right.manifold) +
                  correction_D(left.mu, right.mu, left.a, right.a, l),
              quantize_odd3(glued));

    const ConSumSpec swapped{right.designated, left.designated, l};
    const OddManifoldData glued_swapped = connected_sum(right.manifold, left.manifold, swapped);
    for (Convention conv : {kLiteralOff, kLiteralOn})
      rec.equal("commutativity(" + to_string(conv) + ")", quantize_odd3(glued, conv),
                quantize_odd3(glued_swapped, conv));
  }
  report.cases_run = cases;
}

void suite_additivity(Rng& rng, std::size_t cases, CheckReport& report) {
  Recorder rec(report);
  for (std::size_t i = 0; i < cases; ++i) {
    const OddManifoldData m = random_odd_manifold(rng);
    CutSpec spec;
    for (const auto& c : m.circles)
      (rng.coin() ? spec.plus_side : spec.minus_side).push_back(c.id);
    const std::size_t seams = static_cast<std::size_t>(rng.range(0, 3));
    for (std::size_t k = 0; k < seams; ++k)
      spec.seam.push_back({rng.range(-10, 10), rng.range(-10, 10)});
    rec.label(i, describe(m) + std::to_string(seams));

    const auto [plus, minus] = cut_split(m, spec);
    for (Convention conv : {kLiteralOff, kLiteralOn})
      rec.equal("cut-additivity(" + to_string(conv) + ")",
                quantize_odd3(plus, conv) + quantize_odd3(minus, conv), quantize_odd3(m, conv));
    for (Convention conv : {kEulerOff, kEulerOn})
      rec.equal("cut-additivity-sum(" + to_string(conv) + ")",
                odd3_localization_sum(plus, conv) + odd3_localization_sum(minus, conv),
                odd3_localization_sum(m, conv));

    // T^3 pattern: both interiors empty, everything comes from the seam,
    // mirrored signs make the two pieces exact opposites.  Matching seam
    // parities with opposite degrees keep the euler sums reducible.
    OddManifoldData torus;
    torus.name = "t3";
    CutSpec torus_spec;
    const std::int64_t mu = rng.range(-10, 10);
    const std::int64_t mu2 = mu + 2 * rng.range(-3, 3);
    const std::int64_t d = rng.range(-10, 10);
    torus_spec.seam = {{mu, d}, {mu2, -d}};
    const auto [tp, tm] = cut_split(torus, torus_spec);
    for (Convention conv : kAllConventions)
      rec.equal("opposite-pieces(" + to_string(conv) + ")", quantize_odd3(tp, conv),
                -quantize_odd3(tm, conv));
  }
  report.cases_run = cases;
}

void suite_integrality(Rng& rng, std::size_t cases, CheckReport& report) {
  Recorder rec(report);

  rec.label(0, "lone fixed point");
  bool threw = false;
  try {
    quantize_even_isolated({"lone", 1, {{"p", 1, {1}, +1}}});
  } catch (const NotDivisibleError&) {
    threw = true;
  }
  rec.is_true("lone-point-not-divisible", threw, "NotDivisibleError", "a character");

  for (std::size_t i = 0; i < cases; ++i) {
    const EvenManifoldData sphere = random_sphere_family(rng);
    rec.label(i, describe(sphere));

    VirtualCharacter q;
    try {
      q = even_localization_sum(sphere).certify();
    } catch (const NotDivisibleError& e) {
      rec.fail("localization-sum-reduces", "a character", e.what());
      continue;
    }
    rec.is_true("only-integer-z-powers", q.lies_in_integer_ring(), "integer powers of z only",
                canonical_string(q));

    EvenManifoldData broken = sphere;
    broken.points.at(0).mu += 1;
    bool rejected = false;
    try {
      validate(broken);
    } catch (const ValidationError&) {
      rejected = true;
    }
    rec.is_true("parity-break-rejected", rejected, "ValidationError", "accepted");
  }
  report.cases_run = cases;
}

void suite_s3zero(Rng& rng, std::size_t cases, CheckReport& report) {
  Recorder rec(report);
  for (std::size_t i = 0; i < cases; ++i) {
    const OddManifoldData m =
        make_s3(rng.nonzero(-5, 5), rng.nonzero(-5, 5), rng.range(-10, 10));
    rec.label(i, describe(m));

    for (Convention conv : kAllConventions)
      rec.equal("zero-quantization(" + to_string(conv) + ")", VirtualCharacter(),
                quantize_odd3(m, conv));

    CutSpec spec;
    spec.seam = {{rng.range(-10, 10), 0}}; // alpha restricts to zero on any cut of S^3
    const QrReport qr = qr_report(m, spec);
    rec.is_true("qr-both-zero", qr.q_invariant == 0 && qr.q_reduced == 0 && qr.equal,
                "{0, 0, true}",
                "{" + qr.q_invariant.str() + ", " + std::to_string(qr.q_reduced) + ", " +
                    (qr.equal ? "true" : "false") + "}");
  }
  report.cases_run = cases;
}

struct SuiteInfo {
  std::size_t default_cases;
  void (*run)(Rng&, std::size_t, CheckReport&);
};

const std::map<std::string, SuiteInfo, std::less<>>& suite_table() {
  static const std::map<std::string, SuiteInfo, std::less<>> table = {
      {"ring", {200, suite_ring}},
      {"linearity", {100, suite_linearity}},
      {"updown", {50, suite_updown}},
      {"consum", {100, suite_consum}},
      {"additivity", {100, suite_additivity}},
      {"integrality", {50, suite_integrality}},
      {"s3zero", {25, suite_s3zero}},
  };
  return table;
}

} // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, info] : suite_table())
      out.push_back(name);
    return out;
  }();
  return names;
}

std::size_t suite_default_cases(std::string_view suite) {
  auto it = suite_table().find(suite);
  if (it == suite_table().end())
    throw BadParamsError("unknown check suite '" + std::string(suite) + "'");
  return it->second.default_cases;
}

CheckReport run_check(std::string_view suite, std::uint64_t seed, std::size_t cases) {
  auto it = suite_table().find(suite);
  if (it == suite_table().end())
    throw BadParamsError("unknown check suite '" + std::string(suite) + "'");
  CheckReport report;
  report.check_name = it->first;
  report.seed = seed;
  Rng rng(seed);
  it->second.run(rng, cases == 0 ? it->second.default_cases : cases, report);
  return report;
}

std::string render_report(const CheckReport& report) {
  std::ostringstream os;
  os << "check: " << report.check_name << "\n";
  os << "seed: " << report.seed << "\n";
  os << "cases: " << report.cases_run << "\n";
  os << "failures: " << report.failures.size() << "\n";
  for (std::size_t i = 0; i < report.failures.size(); ++i) {
    const CheckFailure& f = report.failures[i];
    os << "failure[" << i << "]: " << f.input_digest << " expected=" << f.expected
       << " actual=" << f.actual << "\n";
  }
  os << "result: " << (report.passed() ? "pass" : "fail") << "\n";
  return os.str();
}

} // namespace spinq::checks
