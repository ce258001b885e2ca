#include "kausz/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace kausz {

std::string Variable::str() const {
  static const char* names[] = {"a", "b", "x", "y", "z", "w", "xi"};
  std::string out = names[static_cast<int>(tag)];
  for (int i = 0; i < arity(); ++i) out += "_" + std::to_string(sub[i]);
  return out;
}

Monomial monomial_product(const Monomial& u, const Monomial& v) {
  Monomial out;
  out.reserve(u.size() + v.size());
  auto i = u.begin();
  auto j = v.begin();
  while (i != u.end() || j != v.end()) {
    if (j == v.end() || (i != u.end() && i->first < j->first)) {
      out.push_back(*i++);
    } else if (i == u.end() || j->first < i->first) {
      out.push_back(*j++);
    } else {
      out.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  return out;
}

std::string monomial_string(const Monomial& m) {
  if (m.empty()) return "1";
  std::string out;
  for (const auto& [v, e] : m) {
    if (!out.empty()) out += "*";
    out += v.str();
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

Polynomial::Polynomial(const Integer& c) {
  if (c != 0) terms_.emplace(Monomial{}, c);
}

Polynomial::Polynomial(const Variable& v) { terms_.emplace(Monomial{{v, 1}}, Integer(1)); }

Polynomial Polynomial::monomial(const Monomial& m, const Integer& c) {
  Polynomial out;
  out.add_term(m, c);
  return out;
}

Polynomial Polynomial::power(const Variable& v, int e) {
  if (e < 0) throw std::invalid_argument("negative exponent");
  if (e == 0) return Polynomial(1);
  return monomial({{v, e}});
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Integer Polynomial::constant_term() const {
  auto it = terms_.find(Monomial{});
  return it == terms_.end() ? Integer(0) : it->second;
}

std::vector<Variable> Polynomial::variables() const {
  std::vector<Variable> out;
  for (const auto& [m, c] : terms_)
    for (const auto& [v, e] : m) out.push_back(v);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void Polynomial::add_term(const Monomial& m, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(monomial_product(ma, mb), ca * cb);
  return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) { return *this = *this * o; }

Polynomial Polynomial::divided_exactly(const Integer& c) const {
  if (c == 0) throw std::domain_error("division by zero");
  Polynomial out;
  for (const auto& [m, coeff] : terms_) {
    if (coeff % c != 0) throw std::domain_error("inexact polynomial division");
    out.terms_.emplace(m, coeff / c);
  }
  return out;
}

Rational Polynomial::evaluate(const std::map<Variable, Rational>& assignment) const {
  Rational total = 0;
  for (const auto& [m, c] : terms_) {
    Rational term = Rational(c);
    for (const auto& [v, e] : m) {
      auto it = assignment.find(v);
      if (it == assignment.end())
        throw std::invalid_argument("evaluate: no value for variable " + v.str());
      for (int i = 0; i < e; ++i) term *= it->second;
    }
    total += term;
  }
  return total;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    const bool negative = c < 0;
    const Integer magnitude = negative ? Integer(-c) : c;
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    if (m.empty())
      out += magnitude.str();
    else if (magnitude == 1)
      out += monomial_string(m);
    else
      out += magnitude.str() + "*" + monomial_string(m);
  }
  return out;
}

Polynomial poly_arith(PolyOp op, const Polynomial& a, const Polynomial& b) {
  switch (op) {
    case PolyOp::add: return a + b;
    case PolyOp::mul: return a * b;
    case PolyOp::neg: return -a;
  }
  throw std::invalid_argument("unknown polynomial operation");
}

}  // namespace kausz
