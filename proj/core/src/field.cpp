#include "qgrass/field.hpp"

#include "qgrass/error.hpp"

namespace qgrass {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Field Field::prime(std::uint32_t p) {
  if (!qgrass::is_prime(p)) throw DomainError("field characteristic " + std::to_string(p) + " is not prime");
  return Field(p);
}

std::string Field::name() const {
  return is_rationals() ? std::string("Q") : "Fp:" + std::to_string(p_);
}

Field Field::parse(const std::string& spec) {
  if (spec == "Q") return rationals();
  if (spec.rfind("Fp:", 0) == 0) {
    const std::string digits = spec.substr(3);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos || digits.size() > 9)
      throw DomainError("bad field specification '" + spec + "'");
    return prime(static_cast<std::uint32_t>(std::stoul(digits)));
  }
  throw DomainError("bad field specification '" + spec + "' (expected Q or Fp:<prime>)");
}

bool Field::reduces(const Rational& x) const {
  if (is_rationals()) return true;
  return mpz_divisible_ui_p(x.get_den_mpz_t(), p_) == 0;
}

Rational Field::normalize(const Rational& x) const {
  if (is_rationals()) return x;
  Integer p(p_);
  Integer den = x.get_den();
  Integer inv_den;
  if (mpz_invert(inv_den.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0)
    throw DomainError("value " + to_string(x) + " has no reduction modulo " + std::to_string(p_));
  Integer r = (x.get_num() * inv_den) % p;
  if (r < 0) r += p;
  return Rational(r);
}

Rational Field::add(const Rational& a, const Rational& b) const {
  if (is_rationals()) return a + b;
  Integer r = a.get_num() + b.get_num();
  if (r >= p_) r -= p_;
  return Rational(r);
}

Rational Field::sub(const Rational& a, const Rational& b) const {
  if (is_rationals()) return a - b;
  Integer r = a.get_num() - b.get_num();
  if (r < 0) r += p_;
  return Rational(r);
}

Rational Field::mul(const Rational& a, const Rational& b) const {
  if (is_rationals()) return a * b;
  Integer r = (a.get_num() * b.get_num()) % p_;
  return Rational(r);
}

Rational Field::neg(const Rational& a) const {
  if (is_rationals()) return -a;
  if (a == 0) return a;
  return Rational(Integer(p_) - a.get_num());
}

Rational Field::inv(const Rational& a) const {
  if (a == 0) throw DomainError("division by zero");
  if (is_rationals()) return 1 / a;
  Integer p(p_), r;
  mpz_invert(r.get_mpz_t(), a.get_num_mpz_t(), p.get_mpz_t());
  return Rational(r);
}

Rational parse_rational(const std::string& text) {
  const auto bad = [&] { return DomainError("malformed rational '" + text + "'"); };
  if (text.empty()) throw bad();
  const auto slash = text.find('/');
  const auto check_int = [&](const std::string& s, bool allow_sign) {
    std::size_t start = (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (s.size() == start || s.find_first_not_of("0123456789", start) != std::string::npos) throw bad();
  };
  if (slash == std::string::npos) {
    check_int(text, true);
    return Rational(Integer(text[0] == '+' ? text.substr(1) : text));
  }
  const std::string num = text.substr(0, slash), den = text.substr(slash + 1);
  check_int(num, true);
  check_int(den, false);
  Integer d(den);
  if (d == 0) throw DomainError("zero denominator in '" + text + "'");
  Rational r(Integer(num[0] == '+' ? num.substr(1) : num), d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_str();
}

}  // namespace qgrass
