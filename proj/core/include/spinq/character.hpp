// Exact arithmetic for virtual characters of S^1 with half-integer weights.
//
// A virtual character is a finitely supported integer combination of powers
// z^{k/2}.  Internally each exponent is stored in "s-units": s = z^{1/2},
// so the s-exponent k stands for z^{k/2}.  Coefficients are arbitrary
// precision integers, so long surgery chains stay exact.

#ifndef SPINQ_CHARACTER_HPP
#define SPINQ_CHARACTER_HPP

#include "spinq/errors.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

namespace spinq {

using Coeff = boost::multiprecision::cpp_int;

class VirtualCharacter {
public:
  using TermMap = std::map<std::int64_t, Coeff>;

  /// The zero character.
  VirtualCharacter() = default;

  /// c * z^{s_exp/2}.  A zero coefficient gives the zero character.
  static VirtualCharacter monomial(std::int64_t s_exp, Coeff c = 1);

  /// The constant character c * z^0.
  static VirtualCharacter constant(Coeff c);

  static VirtualCharacter one() { return constant(1); }

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  /// Coefficient of z^{s_exp/2}; zero if the term is absent.
  Coeff coefficient(std::int64_t s_exp) const;

  /// Multiplicity of the trivial representation (coefficient of z^0).
  Coeff invariant_part() const { return coefficient(0); }

  /// True iff every exponent is an integer power of z, i.e. the character
  /// lies in the honest representation ring R(S^1).  Vacuously true for 0.
  bool lies_in_integer_ring() const;

  /// Smallest / largest s-exponent with nonzero coefficient.
  /// Precondition: !is_zero().
  std::int64_t min_exponent() const;
  std::int64_t max_exponent() const;

  VirtualCharacter& operator+=(const VirtualCharacter& rhs);
  VirtualCharacter& operator-=(const VirtualCharacter& rhs);
  VirtualCharacter& operator*=(const VirtualCharacter& rhs);
  VirtualCharacter& operator*=(const Coeff& c);

  friend VirtualCharacter operator+(VirtualCharacter a, const VirtualCharacter& b) {
    a += b;
    return a;
  }
  friend VirtualCharacter operator-(VirtualCharacter a, const VirtualCharacter& b) {
    a -= b;
    return a;
  }
  friend VirtualCharacter operator*(const VirtualCharacter& a, const VirtualCharacter& b);
  friend VirtualCharacter operator*(VirtualCharacter a, const Coeff& c) {
    a *= c;
    return a;
  }
  friend VirtualCharacter operator*(const Coeff& c, VirtualCharacter a) {
    a *= c;
    return a;
  }
  VirtualCharacter operator-() const;

  bool operator==(const VirtualCharacter& rhs) const { return terms_ == rhs.terms_; }
  bool operator!=(const VirtualCharacter& rhs) const { return !(*this == rhs); }

private:
  // Canonical form: no stored coefficient is zero.
  TermMap terms_;

  void add_term(std::int64_t s_exp, const Coeff& c);
};

/// Exact division in Z[s, s^-1]: returns the unique q with q * den == num.
/// Throws NotDivisibleError when no such q exists and std::invalid_argument
/// when den is zero.  Implemented by long division after shifting both
/// operands to lowest exponent zero.
VirtualCharacter exact_quotient(const VirtualCharacter& num, const VirtualCharacter& den);

/// True iff den divides num exactly (den must be nonzero).
bool divides(const VirtualCharacter& den, const VirtualCharacter& num);

/// Deterministic rendering, terms in strictly increasing exponent order.
///
///   term  := [sign] [coeff "*"] ("z" | "z^" exp)
///   exp   := integer | "(" odd-integer "/2" ")"
///
/// Terms are joined by " + " / " - "; a coefficient of magnitude one is
/// suppressed except on the constant term; the zero character is "0".
/// Example: "-3*z^(-1/2) + 2 + z^2".
std::string canonical_string(const VirtualCharacter& a);

/// Inverse of canonical_string; accepts any sum of grammar terms and
/// collects like terms.  Throws SchemaError on input outside the grammar.
VirtualCharacter parse_character(std::string_view text);

/// Quotient of two virtual characters, kept unreduced.  Houses the local
/// fixed-point terms of the localization formulas before the global sum
/// is certified to be a polynomial.
class RationalCharacter {
public:
  /// The zero rational character 0/1.
  RationalCharacter();

  /// num / den; den must be nonzero.
  RationalCharacter(VirtualCharacter num, VirtualCharacter den);

  /// whole / 1.
  explicit RationalCharacter(VirtualCharacter whole);

  const VirtualCharacter& numerator() const { return num_; }
  const VirtualCharacter& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }

  RationalCharacter& operator+=(const RationalCharacter& rhs);
  RationalCharacter& operator*=(const RationalCharacter& rhs);

  friend RationalCharacter operator+(RationalCharacter a, const RationalCharacter& b) {
    a += b;
    return a;
  }
  friend RationalCharacter operator*(RationalCharacter a, const RationalCharacter& b) {
    a *= b;
    return a;
  }
  RationalCharacter operator-() const;

  /// Equality by cross-multiplication: a/b == c/d iff a*d == c*b.
  bool operator==(const RationalCharacter& rhs) const;
  bool operator!=(const RationalCharacter& rhs) const { return !(*this == rhs); }

  /// Reduce to a virtual character via exact division.
  /// Throws NotDivisibleError when the quotient does not exist.
  VirtualCharacter certify() const { return exact_quotient(num_, den_); }

private:
  VirtualCharacter num_;
  VirtualCharacter den_;
};

} // namespace spinq

#endif
