#include "spinq/localization.hpp"

namespace spinq {

NormalFactor parse_normal_factor(std::string_view text) {
  if (text == "literal")
    return NormalFactor::literal;
  if (text == "euler")
    return NormalFactor::euler;
  throw BadParamsError("normal factor must be 'literal' or 'euler'");
}

CodimSign parse_codim_sign(std::string_view text) {
  if (text == "off")
    return CodimSign::off;
  if (text == "on")
    return CodimSign::on;
  throw BadParamsError("codim sign must be 'on' or 'off'");
}

std::string_view to_string(NormalFactor f) {
  return f == NormalFactor::literal ? "literal" : "euler";
}

std::string_view to_string(CodimSign s) { return s == CodimSign::off ? "off" : "on"; }

std::string to_string(Convention conv) {
  return std::string(to_string(conv.normal_factor)) + "," + std::string(to_string(conv.codim_sign));
}

namespace {

// z^{w/2} - z^{-w/2} as a character in s-units; the sign of w is kept.
VirtualCharacter euler_form(std::int64_t w) {
  return VirtualCharacter::monomial(w) - VirtualCharacter::monomial(-w);
}

} // namespace

RationalCharacter odd3_localization_sum(const OddManifoldData& m, Convention conv) {
  // m(F) = 1 for every fixed circle, so the codim sign is a global -1.
  const int codim = conv.codim_sign == CodimSign::on ? -1 : 1;
  RationalCharacter sum;
  for (const auto& circle : m.circles) {
    const Coeff weight = Coeff(circle.sigma * codim) * m.alpha.at(circle.id);
    if (conv.normal_factor == NormalFactor::literal) {
      sum += RationalCharacter(VirtualCharacter::monomial(circle.mu + circle.n, weight));
    } else {
      sum += RationalCharacter(VirtualCharacter::monomial(circle.mu, weight),
                               euler_form(circle.n));
    }
  }
  return sum;
}

VirtualCharacter quantize_odd3(const OddManifoldData& m, Convention conv) {
  return odd3_localization_sum(m, conv).certify();
}

RationalCharacter even_localization_sum(const EvenManifoldData& m) {
  const int global_sign = m.half_dim % 2 == 0 ? 1 : -1;
  RationalCharacter sum;
  for (const auto& point : m.points) {
    VirtualCharacter den = VirtualCharacter::one();
    for (std::int64_t w : point.weights)
      den *= euler_form(w);
    sum += RationalCharacter(
        VirtualCharacter::monomial(point.mu, Coeff(point.sigma * global_sign)), den);
  }
  return sum;
}

VirtualCharacter quantize_even_isolated(const EvenManifoldData& m) {
  return even_localization_sum(m).certify();
}

OddManifoldData up_surface_to_3(const EvenManifoldData& m) {
  if (m.half_dim != 1)
    throw SpecError("up_surface_to_3 needs a surface (half_dim == 1), got half_dim = " +
                    std::to_string(m.half_dim));
  OddManifoldData out;
  out.name = m.name + "xS1";
  for (const auto& point : m.points) {
    out.circles.push_back({point.id, point.mu, point.weights.at(0), point.sigma});
    out.alpha.integrals[point.id] = 1;
  }
  validate(out);
  return out;
}

} // namespace spinq
