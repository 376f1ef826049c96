#include "spinq/families.hpp"

#include <sstream>

namespace spinq {

namespace {

bool same_parity(std::int64_t a, std::int64_t b) { return (a - b) % 2 == 0; }

void check_sphere_params(std::int64_t l, std::int64_t mu_n, std::int64_t mu_s) {
  if (l < 1)
    throw BadParamsError("sphere speed l must be >= 1");
  if (!same_parity(mu_n, l) || !same_parity(mu_s, l))
    throw BadParamsError("mu_N and mu_S must have the parity of l");
}

std::string format_name(const char* family, std::initializer_list<std::int64_t> params) {
  std::ostringstream os;
  os << family << '(';
  bool first = true;
  for (std::int64_t p : params) {
    if (!first)
      os << ',';
    os << p;
    first = false;
  }
  os << ')';
  return os.str();
}

} // namespace

EvenManifoldData make_sphere(std::int64_t l, std::int64_t mu_n, std::int64_t mu_s) {
  check_sphere_params(l, mu_n, mu_s);
  EvenManifoldData m;
  m.name = format_name("sphere", {l, mu_n, mu_s});
  m.half_dim = 1;
  m.points.push_back({"N", mu_n, {l}, +1});
  m.points.push_back({"S", mu_s, {-l}, +1});
  validate(m);
  return m;
}

OddManifoldData make_s2xs1(std::int64_t l, std::int64_t mu_n, std::int64_t mu_s, std::int64_t a) {
  check_sphere_params(l, mu_n, mu_s);
  OddManifoldData m;
  m.name = format_name("s2xs1", {l, mu_n, mu_s, a});
  m.circles.push_back({"N", mu_n, l, +1});
  m.circles.push_back({"S", mu_s, -l, +1});
  m.alpha.integrals["N"] = a;
  m.alpha.integrals["S"] = a;
  validate(m);
  return m;
}

OddManifoldData make_s3(std::int64_t n1, std::int64_t n2, std::int64_t mu) {
  if (n1 == 0 && n2 == 0)
    throw BadParamsError("s3 action (0, 0) is trivial");
  OddManifoldData m;
  m.name = format_name("s3", {n1, n2, mu});
  if (n1 != 0 && n2 != 0)
    return m; // fixed-point-free
  m.circles.push_back({"F", mu, n1 != 0 ? n1 : n2, +1});
  validate(m);
  return m;
}

ManifoldData generate(std::string_view family, std::span<const std::int64_t> params) {
  auto want = [&](std::size_t n) {
    if (params.size() != n) {
      std::ostringstream os;
      os << "family '" << family << "' takes " << n << " parameters, got " << params.size();
      throw BadParamsError(os.str());
    }
  };
  if (family == "sphere") {
    want(3);
    return make_sphere(params[0], params[1], params[2]);
  }
  if (family == "s2xs1") {
    want(4);
    return make_s2xs1(params[0], params[1], params[2], params[3]);
  }
  if (family == "s3") {
    want(3);
    return make_s3(params[0], params[1], params[2]);
  }
  throw BadParamsError("unknown family '" + std::string(family) + "'");
}

} // namespace spinq
