// Fixed-point descriptions of S^1-manifolds.
//
// A closed oriented 3-manifold with circle action enters the calculator
// through its fixed circles F, each carrying the determinant-bundle weight
// mu_F, the rotation weight n_F of the normal 2-plane bundle, an
// orientation sign sigma_F, and the integral a_F of the invariant one-form
// alpha over F.  Even-dimensional manifolds enter through isolated fixed
// points with a full list of normal rotation weights.

#ifndef SPINQ_FIXED_POINT_DATA_HPP
#define SPINQ_FIXED_POINT_DATA_HPP

#include "spinq/errors.hpp"

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <variant>
#include <vector>

namespace spinq {

/// An isolated fixed circle in a 3-manifold.
struct FixedCircle {
  std::string id;
  std::int64_t mu = 0;  ///< weight of the action on the determinant line bundle over F
  std::int64_t n = 0;   ///< rotation weight of the normal 2-plane bundle, nonzero
  int sigma = 1;        ///< orientation sign, +1 or -1

  bool operator==(const FixedCircle&) const = default;
};

/// Integrals a_F of the invariant one-form over each fixed circle.
/// An absent key means a_F = 0.
struct AlphaData {
  std::map<std::string, std::int64_t> integrals;

  std::int64_t at(const std::string& circle_id) const {
    auto it = integrals.find(circle_id);
    return it == integrals.end() ? 0 : it->second;
  }

  bool operator==(const AlphaData&) const = default;
};

struct OddManifoldData {
  std::string name;
  std::vector<FixedCircle> circles;  // possibly empty (fixed-point-free action)
  AlphaData alpha;

  const FixedCircle* find_circle(const std::string& id) const;

  bool operator==(const OddManifoldData&) const = default;
};

/// An isolated fixed point of an even-dimensional manifold N^{2n}.
struct IsolatedFixedPoint {
  std::string id;
  std::int64_t mu = 0;                 ///< weight on the determinant line at p
  std::vector<std::int64_t> weights;   ///< rotation weights of the n complex normal planes
  int sigma = 1;

  bool operator==(const IsolatedFixedPoint&) const = default;
};

struct EvenManifoldData {
  std::string name;
  std::int64_t half_dim = 1;  // n for N^{2n}
  std::vector<IsolatedFixedPoint> points;

  bool operator==(const EvenManifoldData&) const = default;
};

using ManifoldData = std::variant<OddManifoldData, EvenManifoldData>;

/// Check all invariants; throws ValidationError on the first violation.
/// Odd: nonzero normal weights, sigma in {+1,-1}, distinct ids, alpha keys
/// a subset of the circle ids.  Even: positive half_dim, distinct ids,
/// weight lists of length half_dim with nonzero entries, and the
/// parity constraint mu + sum(weights) even at every point.
void validate(const OddManifoldData& m);
void validate(const EvenManifoldData& m);
void validate(const ManifoldData& m);

/// Decode a manifest document (JSON text).  Unknown fields are rejected.
/// Throws SchemaError for malformed documents and ValidationError when the
/// decoded data violates an invariant.
ManifoldData parse_manifest(const std::string& text);

/// Canonical JSON rendering; parse_manifest(emit_manifest(m)) == m and the
/// output is byte-stable for identical data.
std::string emit_manifest(const ManifoldData& m);

/// parse_manifest applied to the contents of a file.
ManifoldData load_manifest(const std::filesystem::path& path);

} // namespace spinq

#endif
