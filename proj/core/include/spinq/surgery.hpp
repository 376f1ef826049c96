// Surgery on fixed-point data: equivariant connected sums along spinning
// spheres, cutting along invariant tori, reduction to circles, and the
// quantization-vs-reduction comparison report.

#ifndef SPINQ_SURGERY_HPP
#define SPINQ_SURGERY_HPP

#include "spinq/character.hpp"
#include "spinq/fixed_point_data.hpp"
#include "spinq/localization.hpp"

#include <utility>

namespace spinq {

/// Connected sum along S^2_{+-l}: the designated circles run through the
/// poles of the gluing spheres, so both must have normal weight equal
/// to l.
struct ConSumSpec {
  std::string left_circle;   // id in the first manifold
  std::string right_circle;  // id in the second manifold
  std::int64_t l = 1;        // spinning speed of the gluing spheres, nonzero
};

/// One component of the reduced manifold Z/S^1: a circle with determinant
/// weight mu and alpha-degree a.
struct SeamRecord {
  std::int64_t mu = 0;
  std::int64_t a = 0;
};

/// A cut along an invariant torus family: the interior fixed circles are
/// partitioned between the two sides, and each seam record describes one
/// component of the reduced manifold.
struct CutSpec {
  std::vector<std::string> plus_side;
  std::vector<std::string> minus_side;
  std::vector<SeamRecord> seam;
};

/// Merge two manifolds along the designated circles.  The merged circle
/// gets mu = mu_1 + mu_2, n = l and a = a_1 + a_2; its sigma is taken from
/// the left circle, and *warning is set when the two inputs disagree.
/// Untouched circles are kept unchanged.  Throws SpecError for unknown
/// ids, an n/l mismatch, or colliding ids in the result.
OddManifoldData connected_sum(const OddManifoldData& m1, const OddManifoldData& m2,
                              const ConSumSpec& spec, std::string* warning = nullptr);

/// The correction character by which Q of a connected sum differs from
/// the sum of the pieces (literal convention, no codim sign):
///   D = a1 * (z^{(l+mu1+mu2)/2} - z^{(l+mu1)/2})
///     + a2 * (z^{(l+mu1+mu2)/2} - z^{(l+mu2)/2}).
VirtualCharacter correction_D(std::int64_t mu1, std::int64_t mu2, std::int64_t a1,
                              std::int64_t a2, std::int64_t l);

/// Split m along the cut: each side keeps its interior circles and gains
/// one new circle per seam record with n = +1 and the record's (mu, a);
/// the plus side with sigma = +1, the minus side with sigma = -1, so the
/// seam contributions cancel in Q(M+) + Q(M-).  Throws SpecError when the
/// sides do not partition the circle ids.
std::pair<OddManifoldData, OddManifoldData> cut_split(const OddManifoldData& m,
                                                      const CutSpec& spec);

/// Quantization of the reduced manifold: each reduced circle contributes
/// its alpha-degree, summed under K^1(S^1) ~ Z.
std::int64_t reduce_circles(const CutSpec& spec);

struct QrReport {
  Coeff q_invariant;        // multiplicity of the trivial representation in Q(M)
  std::int64_t q_reduced;   // Q of the reduced manifold
  bool equal;
};

/// Compare the invariant part of Q(M) with Q(M_red).  Reports both sides
/// without asserting a theorem; errors from quantization propagate.
QrReport qr_report(const OddManifoldData& m, const CutSpec& spec, Convention conv = {});

/// Decode a cut spec document {"plus": [...], "minus": [...],
/// "seam": [{"mu": int, "a": int}, ...]}.  Unknown fields are rejected.
CutSpec parse_cut_spec(const std::string& text);
CutSpec load_cut_spec(const std::filesystem::path& path);

} // namespace spinq

#endif
