#include "flatcx/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "flatcx/errors.hpp"

namespace flatcx {

namespace {

void strip(Exponents& e) {
  while (!e.empty() && e.back() == 0) e.pop_back();
}

Exponents multiply(const Exponents& a, const Exponents& b) {
  Exponents r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return r;
}

bool divides(const Exponents& d, const Exponents& e) {
  if (d.size() > e.size()) return false;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] > e[i]) return false;
  }
  return true;
}

Exponents quotient(const Exponents& e, const Exponents& d) {
  Exponents r = e;
  for (std::size_t i = 0; i < d.size(); ++i) r[i] -= d[i];
  strip(r);
  return r;
}

}  // namespace

Polynomial::Polynomial(const Rational& constant, std::size_t num_vars) : num_vars_(num_vars) {
  if (!constant.is_zero()) terms_.emplace(Exponents{}, constant);
}

Polynomial Polynomial::variable(std::size_t index, std::size_t num_vars) {
  if (index >= num_vars) throw IndexError("variable index out of range");
  Exponents e(index + 1, 0);
  e[index] = 1;
  return monomial(Rational(1), std::move(e), num_vars);
}

Polynomial Polynomial::monomial(const Rational& coeff, Exponents exponents, std::size_t num_vars) {
  strip(exponents);
  if (exponents.size() > num_vars) throw IndexError("monomial uses more variables than declared");
  Polynomial p;
  p.num_vars_ = num_vars;
  p.add_term(exponents, coeff);
  return p;
}

Polynomial Polynomial::with_num_vars(std::size_t num_vars) const {
  for (const auto& [e, c] : terms_) {
    if (e.size() > num_vars) throw IndexError("polynomial uses more variables than requested");
  }
  Polynomial p = *this;
  p.num_vars_ = num_vars;
  return p;
}

void Polynomial::add_term(const Exponents& e, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rational Polynomial::constant_term() const { return coefficient({}); }

Rational Polynomial::coefficient(const Exponents& exponents) const {
  Exponents key = exponents;
  strip(key);
  const auto it = terms_.find(key);
  return it == terms_.end() ? Rational(0) : it->second;
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int total = 0;
    for (auto x : e) total += static_cast<int>(x);
    d = std::max(d, total);
  }
  return d;
}

int Polynomial::degree_in(std::size_t var) const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    d = std::max(d, var < e.size() ? static_cast<int>(e[var]) : 0);
  }
  return d;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  Rational sum;
  for (const auto& [e, c] : terms_) {
    if (e.size() > point.size()) throw ShapeError("evaluation point has too few coordinates");
    Rational term = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (std::uint32_t k = 0; k < e[i]; ++k) term *= point[i];
    }
    sum += term;
  }
  return sum;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest lex term first.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational mag = abs(c);
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == Rational(1);
    if (!unit || e.empty()) os << mag.str();
    bool need_star = !unit;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (need_star) os << "*";
      os << "x" << (i + 1);
      if (e[i] > 1) os << "^" << e[i];
      need_star = true;
    }
  }
  return os.str();
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  num_vars_ = std::max(num_vars_, rhs.num_vars_);
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  num_vars_ = std::max(num_vars_, rhs.num_vars_);
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) { return *this = *this * rhs; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial r;
  r.num_vars_ = std::max(a.num_vars_, b.num_vars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) r.add_term(multiply(ea, eb), ca * cb);
  }
  return r;
}

Polynomial operator-(const Polynomial& a) {
  Polynomial r;
  r.num_vars_ = a.num_vars_;
  for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, -c);
  return r;
}

Polynomial operator*(const Rational& c, const Polynomial& p) {
  Polynomial r;
  r.num_vars_ = p.num_vars_;
  if (c.is_zero()) return r;
  for (const auto& [e, x] : p.terms_) r.terms_.emplace(e, c * x);
  return r;
}

Polynomial poly_partial(const Polynomial& p, std::size_t var) {
  if (var >= p.num_vars()) throw IndexError("partial derivative variable out of range");
  Polynomial r(Rational(0), p.num_vars());
  for (const auto& [e, c] : p.terms()) {
    if (var >= e.size() || e[var] == 0) continue;
    Exponents d = e;
    d[var] -= 1;
    r += Polynomial::monomial(c * Rational(static_cast<long>(e[var])), std::move(d), p.num_vars());
  }
  return r;
}

Polynomial divide_exact(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  const std::size_t vars = std::max(a.num_vars(), b.num_vars());
  const auto& [lead_e, lead_c] = *b.terms().rbegin();
  Polynomial q(Rational(0), vars);
  Polynomial r = a;
  // Lex division by the leading term; exact quotients never stall.
  while (!r.is_zero()) {
    const auto& [re, rc] = *r.terms().rbegin();
    if (!divides(lead_e, re)) throw std::domain_error("polynomial division is not exact");
    const Polynomial t = Polynomial::monomial(rc / lead_c, quotient(re, lead_e), vars);
    q += t;
    r -= t * b;
  }
  return q;
}

}  // namespace flatcx
