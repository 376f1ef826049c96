// Randomized theorem-check suites.
//
// Each suite draws seeded random data, evaluates one structural identity
// of the quantization (ring axioms, linearity in alpha, the even/odd
// correspondence, the connected-sum correction, additivity under cutting,
// integrality, the vanishing on S^3) and reports every violation.  All
// arithmetic is exact, so a single failure is a real counterexample.
// Fixed seed in, identical report out.

#ifndef SPINQ_CHECKS_HPP
#define SPINQ_CHECKS_HPP

#include "spinq/character.hpp"
#include "spinq/fixed_point_data.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace spinq::checks {

/// Deterministic random source.  mt19937_64 output is pinned by the
/// standard and the range reduction below avoids distribution objects,
/// so a seed yields the same stream on every platform.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform-ish draw from [lo, hi], inclusive.
  std::int64_t range(std::int64_t lo, std::int64_t hi);

  /// Draw from [lo, hi] excluding zero.
  std::int64_t nonzero(std::int64_t lo, std::int64_t hi);

  bool coin() { return (next() & 1) != 0; }
  int sign() { return coin() ? +1 : -1; }

private:
  std::mt19937_64 engine_;
};

VirtualCharacter random_character(Rng& rng, std::size_t max_terms = 20,
                                  std::int64_t max_abs_exp = 40,
                                  std::int64_t max_abs_coeff = 100);
VirtualCharacter random_nonzero_character(Rng& rng);

/// Random fixed-circle data with ids prefix1, prefix2, ... and a partial
/// alpha assignment.
OddManifoldData random_odd_manifold(Rng& rng, std::size_t max_circles = 5,
                                    const std::string& id_prefix = "F");

/// Fresh alpha integrals for the circles of m (some entries omitted).
AlphaData random_alpha(Rng& rng, const OddManifoldData& m);

/// alpha + alpha' pointwise.
AlphaData add_alpha(const AlphaData& a, const AlphaData& b);

/// A rotation sphere with speeds and determinant weights drawn so that
/// the localization sum reduces: 1 <= l <= 5, |mu| <= 15, parity-valid,
/// and 2l dividing mu_N - mu_S.
EvenManifoldData random_sphere_family(Rng& rng);

/// A disjoint union of sphere-pair circle families (the fixed-point data
/// of connected sums of S^2 x S^1 pieces).  Within a pair both circles
/// are homologous, so alpha assigns them a common value; under that
/// constraint the euler-convention sum reduces for every alpha.
struct PairedManifold {
  OddManifoldData manifold;
  std::vector<std::pair<std::string, std::string>> pairs;
};
PairedManifold random_paired_manifold(Rng& rng, std::size_t max_pairs = 3);
AlphaData random_pair_alpha(Rng& rng, const PairedManifold& pm);

struct CheckFailure {
  std::string input_digest;
  std::string expected;
  std::string actual;
};

struct CheckReport {
  std::string check_name;
  std::uint64_t seed = 0;
  std::size_t cases_run = 0;
  std::vector<CheckFailure> failures;

  bool passed() const { return failures.empty(); }
};

inline constexpr std::uint64_t kDefaultSeed = 1729;

/// Names of the available suites, in canonical order.
const std::vector<std::string>& suite_names();

/// Case count used when the caller passes cases = 0.
std::size_t suite_default_cases(std::string_view suite);

/// Run one suite.  Throws BadParamsError for an unknown suite name.
CheckReport run_check(std::string_view suite, std::uint64_t seed = kDefaultSeed,
                      std::size_t cases = 0);

/// Line-oriented "name: value" rendering with a final "result: pass|fail".
std::string render_report(const CheckReport& report);

} // namespace spinq::checks

#endif
