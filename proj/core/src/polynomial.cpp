#include "qgrass/polynomial.hpp"

#include <numeric>

#include "qgrass/error.hpp"

namespace qgrass {

bool GradedLex::operator()(const Exponents& a, const Exponents& b) const {
  const long da = std::accumulate(a.begin(), a.end(), 0L);
  const long db = std::accumulate(b.begin(), b.end(), 0L);
  if (da != db) return da < db;
  return a < b;
}

LaurentPoly LaurentPoly::constant(std::size_t vars, const Integer& c) {
  LaurentPoly p(vars);
  p.add_term(Exponents(vars, 0), c);
  return p;
}

LaurentPoly LaurentPoly::monomial(const Exponents& e, const Integer& c) {
  LaurentPoly p(e.size());
  p.add_term(e, c);
  return p;
}

Integer LaurentPoly::coefficient(const Exponents& e) const {
  const auto it = terms_.find(e);
  return it == terms_.end() ? Integer(0) : it->second;
}

void LaurentPoly::add_term(const Exponents& e, const Integer& c) {
  if (e.size() != vars_) throw DomainError("monomial has the wrong number of variables");
  if (c == 0) return;
  auto [it, fresh] = terms_.try_emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void LaurentPoly::check(const LaurentPoly& o) const {
  if (o.vars_ != vars_) throw DomainError("polynomials in different numbers of variables");
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  check(o);
  LaurentPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  check(o);
  LaurentPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  check(o);
  LaurentPoly r(vars_);
  Exponents m(vars_);
  for (const auto& [a, c] : terms_)
    for (const auto& [b, d] : o.terms_) {
      for (std::size_t i = 0; i < vars_; ++i) m[i] = a[i] + b[i];
      r.add_term(m, c * d);
    }
  return r;
}

Integer LaurentPoly::at_ones() const {
  Integer s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

std::string to_string(const LaurentPoly& p, const std::vector<std::string>& names) {
  if (names.size() != p.variables()) throw DomainError("one name per variable expected");
  std::string s;
  for (const auto& [e, c] : p.terms()) {
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names[i];
      if (e[i] != 1) mono += "^" + std::to_string(e[i]);
    }
    const bool neg = c < 0;
    const Integer a = neg ? Integer(-c) : c;
    if (!s.empty())
      s += neg ? " - " : " + ";
    else if (neg)
      s += "-";
    if (mono.empty())
      s += a.get_str();
    else if (a == 1)
      s += mono;
    else
      s += a.get_str() + "*" + mono;
  }
  return s.empty() ? "0" : s;
}

std::vector<std::string> xy_names(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back("x" + std::to_string(i));
  for (std::size_t i = 1; i <= n; ++i) out.push_back("y" + std::to_string(i));
  return out;
}

std::vector<std::string> y_names(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back("y" + std::to_string(i));
  return out;
}

}  // namespace qgrass
