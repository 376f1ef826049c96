// Fixed-point evaluation of the quantization character.
//
// Odd 3-manifolds: each fixed circle F contributes a term built from
// z^{mu_F/2}, the normal-bundle factor, the orientation sign and the
// alpha-integral a_F.  Two readings of the normal-bundle factor are
// implemented behind an explicit flag:
//
//   literal  - the factor is the plain representation z^{n_F/2}, giving
//              chi = sum_F sigma_F a_F z^{(mu_F + n_F)/2};
//   euler    - the factor is 1 / (z^{n_F/2} - z^{-n_F/2}), the inverse
//              equivariant Euler form; the sum of rational terms is then
//              reduced by exact division and must come out polynomial.
//
// The complex-codimension sign (-1)^{m(F)} is likewise a flag: m(F) = 1
// for every fixed circle in a 3-manifold, so codim_sign = on multiplies
// every term by -1.
//
// Even manifolds with isolated fixed points always use the Euler-form
// denominators and the global sign (-1)^{half_dim}.

#ifndef SPINQ_LOCALIZATION_HPP
#define SPINQ_LOCALIZATION_HPP

#include "spinq/character.hpp"
#include "spinq/fixed_point_data.hpp"

namespace spinq {

enum class NormalFactor { literal, euler };
enum class CodimSign { off, on };

struct Convention {
  NormalFactor normal_factor = NormalFactor::literal;
  CodimSign codim_sign = CodimSign::off;
};

inline constexpr Convention kLiteralOff{NormalFactor::literal, CodimSign::off};
inline constexpr Convention kLiteralOn{NormalFactor::literal, CodimSign::on};
inline constexpr Convention kEulerOff{NormalFactor::euler, CodimSign::off};
inline constexpr Convention kEulerOn{NormalFactor::euler, CodimSign::on};

/// All four convention combinations, in a fixed order.
inline constexpr Convention kAllConventions[] = {kLiteralOff, kLiteralOn, kEulerOff, kEulerOn};

NormalFactor parse_normal_factor(std::string_view text);  // "literal" | "euler"
CodimSign parse_codim_sign(std::string_view text);        // "off" | "on"
std::string_view to_string(NormalFactor f);
std::string_view to_string(CodimSign s);
std::string to_string(Convention conv);

/// Quantization character of a 3-manifold from its fixed-circle data.
/// Under the euler convention the rational localization sum is reduced by
/// exact division; NotDivisibleError signals data that does not arise from
/// a genuine closed manifold.  An empty fixed set gives 0.
VirtualCharacter quantize_odd3(const OddManifoldData& m, Convention conv = {});

/// The localization sum before certification, as a rational character.
/// Under the literal convention the denominator is 1.  Exposes the level
/// at which additivity and linearity hold for arbitrary data.
RationalCharacter odd3_localization_sum(const OddManifoldData& m, Convention conv = {});

/// Even-dimensional quantization character at isolated fixed points:
///   chi = sum_p sigma_p (-1)^{half_dim} z^{mu_p/2}
///                prod_j (z^{w_j/2} - z^{-w_j/2})^{-1},
/// reduced by exact division.  For valid Spin^c data the result has only
/// integer powers of z.  Negative weights keep their computed sign via
/// (z^{-w/2} - z^{w/2})^{-1} = -(z^{w/2} - z^{-w/2})^{-1}.
VirtualCharacter quantize_even_isolated(const EvenManifoldData& m);

/// The even localization sum before certification.
RationalCharacter even_localization_sum(const EvenManifoldData& m);

/// Data-level crossing from a surface to the 3-manifold N x S^1: every
/// isolated fixed point p of N^2 becomes the fixed circle p x S^1 with the
/// same mu and sigma, normal weight equal to the point's rotation weight,
/// and alpha-integral 1 (the generator of H^1 of the new circle factor).
/// Requires half_dim == 1; throws SpecError otherwise.
OddManifoldData up_surface_to_3(const EvenManifoldData& m);

} // namespace spinq

#endif
