// Generators for the concrete families the theorem checks run on:
// rotation spheres S^2_l, their products with S^1, and circle actions
// on S^3.

#ifndef SPINQ_FAMILIES_HPP
#define SPINQ_FAMILIES_HPP

#include "spinq/fixed_point_data.hpp"

#include <span>
#include <string_view>

namespace spinq {

/// S^2 with the rotation action of speed l around the poles.  The north
/// pole carries normal weight +l, the south pole -l, both with sigma = +1
/// (the convention is pinned by the even/odd cross-check, not by a fact
/// about the sphere).  Requires l >= 1 and mu_n == mu_s == l (mod 2).
EvenManifoldData make_sphere(std::int64_t l, std::int64_t mu_n, std::int64_t mu_s);

/// S^2_l x S^1 with trivial action on the S^1 factor: two fixed circles
/// through the poles, each with alpha-integral a.  Same parameter
/// constraints as make_sphere.
OddManifoldData make_s2xs1(std::int64_t l, std::int64_t mu_n, std::int64_t mu_s, std::int64_t a);

/// S^3 in C^2 with the action (z^{n1}, z^{n2}).  Both n_i nonzero gives a
/// fixed-point-free action (empty circle list); exactly one zero gives a
/// single fixed circle of normal weight n_i with the given mu.
/// Requires (n1, n2) != (0, 0).
OddManifoldData make_s3(std::int64_t n1, std::int64_t n2, std::int64_t mu);

/// Dispatch by family name: "sphere" (l, mu_n, mu_s), "s2xs1"
/// (l, mu_n, mu_s, a), "s3" (n1, n2, mu).  Throws BadParamsError for an
/// unknown family or wrong parameter count.
ManifoldData generate(std::string_view family, std::span<const std::int64_t> params);

} // namespace spinq

#endif
