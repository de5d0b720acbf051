#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "flatcx/rational.hpp"

namespace flatcx {

// Exponent multi-index with trailing zeros stripped, so that a monomial has
// a unique key regardless of the ambient variable count. std::vector's
// lexicographic order on these keys is the lex monomial order x1 > x2 > ...
using Exponents = std::vector<std::uint32_t>;

// Sparse multivariate polynomial over Q in variables x1..xm (0-based index
// k refers to x_{k+1}). Zero coefficients are never stored.
class Polynomial {
 public:
  using TermMap = std::map<Exponents, Rational>;

  Polynomial() = default;
  Polynomial(int constant) : Polynomial(Rational(constant)) {}
  Polynomial(const Rational& constant, std::size_t num_vars = 0);

  static Polynomial variable(std::size_t index, std::size_t num_vars);
  static Polynomial monomial(const Rational& coeff, Exponents exponents,
                             std::size_t num_vars);

  // Number of variables of the ambient ring; at least one past the highest
  // variable actually used.
  std::size_t num_vars() const { return num_vars_; }
  Polynomial with_num_vars(std::size_t num_vars) const;

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Coefficient of the monomial 1.
  Rational constant_term() const;
  Rational coefficient(const Exponents& exponents) const;

  // Total degree; -1 for the zero polynomial.
  int degree() const;
  int degree_in(std::size_t var) const;

  Rational evaluate(std::span<const Rational> point) const;

  std::string str() const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a);
  friend Polynomial operator*(const Rational& c, const Polynomial& p);

  // Equality of term maps; the ambient variable count is not compared.
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }
  friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.str(); }

 private:
  void add_term(const Exponents& e, const Rational& c);

  std::size_t num_vars_ = 0;
  TermMap terms_;
};

// Formal partial derivative with respect to x_{var+1}.
// Throws IndexError unless var < p.num_vars().
Polynomial poly_partial(const Polynomial& p, std::size_t var);

// Exact quotient a / b; throws std::domain_error if b does not divide a.
Polynomial divide_exact(const Polynomial& a, const Polynomial& b);

}  // namespace flatcx

namespace Eigen {

template <>
struct NumTraits<flatcx::Polynomial> : GenericNumTraits<flatcx::Polynomial> {
  using Real = flatcx::Polynomial;
  using NonInteger = flatcx::Polynomial;
  using Nested = flatcx::Polynomial;
  using Literal = flatcx::Polynomial;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 16,
    AddCost = 64,
    MulCost = 256
  };
  static Real epsilon() { return Real(0); }
  static Real dummy_precision() { return Real(0); }
  static int digits10() { return 0; }
};

}  // namespace Eigen
