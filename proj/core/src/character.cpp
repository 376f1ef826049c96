#include "spinq/character.hpp"

#include <cctype>
#include <charconv>
#include <sstream>
#include <utility>

namespace spinq {

//
// VirtualCharacter
//

VirtualCharacter VirtualCharacter::monomial(std::int64_t s_exp, Coeff c) {
  VirtualCharacter out;
  out.add_term(s_exp, c);
  return out;
}

VirtualCharacter VirtualCharacter::constant(Coeff c) { return monomial(0, std::move(c)); }

Coeff VirtualCharacter::coefficient(std::int64_t s_exp) const {
  auto it = terms_.find(s_exp);
  return it == terms_.end() ? Coeff(0) : it->second;
}

bool VirtualCharacter::lies_in_integer_ring() const {
  for (const auto& [exp, c] : terms_)
    if (exp % 2 != 0)
      return false;
  return true;
}

std::int64_t VirtualCharacter::min_exponent() const { return terms_.begin()->first; }

std::int64_t VirtualCharacter::max_exponent() const { return terms_.rbegin()->first; }

void VirtualCharacter::add_term(std::int64_t s_exp, const Coeff& c) {
  if (c == 0)
    return;
  auto [it, inserted] = terms_.try_emplace(s_exp, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0)
      terms_.erase(it);
  }
}

VirtualCharacter& VirtualCharacter::operator+=(const VirtualCharacter& rhs) {
  for (const auto& [exp, c] : rhs.terms_)
    add_term(exp, c);
  return *this;
}

VirtualCharacter& VirtualCharacter::operator-=(const VirtualCharacter& rhs) {
  for (const auto& [exp, c] : rhs.terms_)
    add_term(exp, -c);
  return *this;
}

VirtualCharacter operator*(const VirtualCharacter& a, const VirtualCharacter& b) {
  VirtualCharacter out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_)
      out.add_term(ea + eb, ca * cb);
  return out;
}

VirtualCharacter& VirtualCharacter::operator*=(const VirtualCharacter& rhs) {
  *this = *this * rhs;
  return *this;
}

VirtualCharacter& VirtualCharacter::operator*=(const Coeff& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [exp, coeff] : terms_)
    coeff *= c;
  return *this;
}

VirtualCharacter VirtualCharacter::operator-() const {
  VirtualCharacter out(*this);
  for (auto& [exp, c] : out.terms_)
    c = -c;
  return out;
}

//
// Exact division
//

VirtualCharacter exact_quotient(const VirtualCharacter& num, const VirtualCharacter& den) {
  if (den.is_zero())
    throw std::invalid_argument("exact_quotient: zero denominator");
  if (num.is_zero())
    return {};

  // Shift both operands so their lowest exponent is zero; s is a unit in
  // Z[s, s^-1], so divisibility is unaffected.
  const std::int64_t shift = num.min_exponent() - den.min_exponent();
  VirtualCharacter::TermMap rem;
  for (const auto& [exp, c] : num.terms())
    rem.emplace(exp - num.min_exponent(), c);
  VirtualCharacter::TermMap div;
  for (const auto& [exp, c] : den.terms())
    div.emplace(exp - den.min_exponent(), c);

  const std::int64_t div_deg = div.rbegin()->first;
  const Coeff& div_lead = div.rbegin()->second;

  auto subtract_into = [](VirtualCharacter::TermMap& m, std::int64_t exp, const Coeff& c) {
    auto [it, inserted] = m.try_emplace(exp, Coeff(-c));
    if (!inserted) {
      it->second -= c;
      if (it->second == 0)
        m.erase(it);
    }
  };

  VirtualCharacter quotient;
  while (!rem.empty()) {
    const auto& [rem_deg, rem_lead] = *rem.rbegin();
    if (rem_deg < div_deg)
      throw NotDivisibleError("long division leaves a nonzero remainder");
    if (rem_lead % div_lead != 0)
      throw NotDivisibleError("leading coefficient is not an integer multiple");
    const Coeff q_c = rem_lead / div_lead;
    const std::int64_t q_exp = rem_deg - div_deg;
    quotient += VirtualCharacter::monomial(q_exp + shift, q_c);
    for (const auto& [exp, c] : div)
      subtract_into(rem, exp + q_exp, q_c * c);
  }
  return quotient;
}

bool divides(const VirtualCharacter& den, const VirtualCharacter& num) {
  try {
    exact_quotient(num, den);
    return true;
  } catch (const NotDivisibleError&) {
    return false;
  }
}

//
// Canonical text form
//

namespace {

std::string render_exponent(std::int64_t s_exp) {
  // s_exp is in s-units; even values are integer powers of z.
  std::ostringstream os;
  if (s_exp % 2 == 0) {
    const std::int64_t z_exp = s_exp / 2;
    if (z_exp == 1)
      os << "z";
    else
      os << "z^" << z_exp;
  } else {
    os << "z^(" << s_exp << "/2)";
  }
  return os.str();
}

} // namespace

std::string canonical_string(const VirtualCharacter& a) {
  if (a.is_zero())
    return "0";
  std::string out;
  bool first = true;
  for (const auto& [exp, c] : a.terms()) {
    const bool negative = c < 0;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    const Coeff mag = negative ? Coeff(-c) : c;
    if (exp == 0) {
      out += mag.str();
    } else {
      if (mag != 1)
        out += mag.str() + "*";
      out += render_exponent(exp);
    }
    first = false;
  }
  return out;
}

namespace {

// Hand-rolled scanner for the character grammar.  Only canonical output
// needs to round-trip, but the scanner is lenient about whitespace.
class CharacterScanner {
public:
  explicit CharacterScanner(std::string_view text) : text_(text) {}

  VirtualCharacter parse() {
    skip_spaces();
    if (peek() == 0)
      throw SchemaError("empty character text");
    VirtualCharacter out;
    bool negative = take_sign(true);
    for (;;) {
      out += parse_term(negative);
      skip_spaces();
      if (peek() == 0)
        break;
      negative = take_sign(false);
    }
    return out;
  }

private:
  std::string_view text_;
  std::size_t pos_ = 0;

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  char take() { return pos_ < text_.size() ? text_[pos_++] : '\0'; }

  void skip_spaces() {
    while (peek() == ' ')
      ++pos_;
  }

  bool take_sign(bool optional) {
    if (peek() == '-') {
      ++pos_;
      skip_spaces();
      return true;
    }
    if (peek() == '+') {
      ++pos_;
      skip_spaces();
      return false;
    }
    if (!optional)
      throw SchemaError("expected '+' or '-' between terms");
    return false;
  }

  std::string take_digits() {
    std::string digits;
    while (std::isdigit(static_cast<unsigned char>(peek())))
      digits.push_back(take());
    return digits;
  }

  std::int64_t take_integer() {
    bool neg = false;
    if (peek() == '-') {
      neg = true;
      ++pos_;
    }
    const std::string digits = take_digits();
    if (digits.empty())
      throw SchemaError("expected an integer exponent");
    std::int64_t value = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc() || ptr != digits.data() + digits.size())
      throw SchemaError("exponent out of range: " + digits);
    return neg ? -value : value;
  }

  VirtualCharacter parse_term(bool negative) {
    Coeff coeff = 1;
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = Coeff(take_digits());
      have_coeff = true;
    }
    if (negative)
      coeff = -coeff;

    if (have_coeff) {
      if (peek() == 'z')
        throw SchemaError("expected '*' between coefficient and z");
      if (peek() != '*')
        return VirtualCharacter::constant(coeff); // bare integer constant
      ++pos_; // consume '*'
    }
    if (take() != 'z')
      throw SchemaError("expected 'z' in term");

    std::int64_t s_exp = 2; // plain "z"
    if (peek() == '^') {
      ++pos_;
      if (peek() == '(') {
        ++pos_;
        const std::int64_t numerator = take_integer();
        if (numerator % 2 == 0)
          throw SchemaError("half-exponent numerator must be odd");
        for (char expected : {'/', '2', ')'})
          if (take() != expected)
            throw SchemaError("malformed half-integer exponent");
        s_exp = numerator;
      } else {
        const std::int64_t z_exp = take_integer();
        if (z_exp > INT64_MAX / 2 || z_exp < INT64_MIN / 2)
          throw SchemaError("exponent out of range");
        s_exp = 2 * z_exp;
      }
    }
    return VirtualCharacter::monomial(s_exp, coeff);
  }
};

} // namespace

VirtualCharacter parse_character(std::string_view text) {
  // The zero character renders as a single "0".
  std::string_view trimmed = text;
  while (!trimmed.empty() && trimmed.front() == ' ')
    trimmed.remove_prefix(1);
  while (!trimmed.empty() && trimmed.back() == ' ')
    trimmed.remove_suffix(1);
  if (trimmed == "0")
    return {};
  return CharacterScanner(trimmed).parse();
}

//
// RationalCharacter
//

RationalCharacter::RationalCharacter() : num_(), den_(VirtualCharacter::one()) {}

RationalCharacter::RationalCharacter(VirtualCharacter num, VirtualCharacter den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero())
    throw std::invalid_argument("RationalCharacter: zero denominator");
}

RationalCharacter::RationalCharacter(VirtualCharacter whole)
    : num_(std::move(whole)), den_(VirtualCharacter::one()) {}

RationalCharacter& RationalCharacter::operator+=(const RationalCharacter& rhs) {
  num_ = num_ * rhs.den_ + rhs.num_ * den_;
  den_ = den_ * rhs.den_;
  return *this;
}

RationalCharacter& RationalCharacter::operator*=(const RationalCharacter& rhs) {
  num_ *= rhs.num_;
  den_ *= rhs.den_;
  return *this;
}

RationalCharacter RationalCharacter::operator-() const {
  RationalCharacter out(*this);
  out.num_ = -out.num_;
  return out;
}

bool RationalCharacter::operator==(const RationalCharacter& rhs) const {
  return num_ * rhs.den_ == rhs.num_ * den_;
}

} // namespace spinq
