#pragma once

#include "kausz/rational.hpp"

#include <Eigen/Core>

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace kausz {

/**
 * Chart variable a_{ij}, b_{ij}, x_{ij}, y_{ij}, z_{ij}, w_{ij} or xi^{(k)}_{ij}.
 * Ordered by tag, then subscripts lexicographically.
 */
struct Variable {
  enum class Tag : std::uint8_t { a, b, x, y, z, w, xi };

  Tag tag = Tag::x;
  std::array<int, 3> sub{};  // xi uses all three as (k, i, j); the others use (i, j)

  static Variable a(int i, int j) { return {Tag::a, {i, j, 0}}; }
  static Variable b(int i, int j) { return {Tag::b, {i, j, 0}}; }
  static Variable x(int i, int j) { return {Tag::x, {i, j, 0}}; }
  static Variable y(int i, int j) { return {Tag::y, {i, j, 0}}; }
  static Variable z(int i, int j) { return {Tag::z, {i, j, 0}}; }
  static Variable w(int i, int j) { return {Tag::w, {i, j, 0}}; }
  static Variable xi(int k, int i, int j) { return {Tag::xi, {k, i, j}}; }

  int arity() const { return tag == Tag::xi ? 3 : 2; }
  std::string str() const;  // "b_1_4", "xi_2_1_5"

  friend bool operator==(const Variable&, const Variable&) = default;
  friend auto operator<=>(const Variable&, const Variable&) = default;
};

/** Sorted (variable, exponent) pairs with positive exponents. */
using Monomial = std::vector<std::pair<Variable, int>>;

Monomial monomial_product(const Monomial& u, const Monomial& v);
std::string monomial_string(const Monomial& m);

/** Sparse polynomial over Integer with no stored zero coefficients. */
class Polynomial {
 public:
  using Terms = std::map<Monomial, Integer>;

  Polynomial() = default;
  Polynomial(int c) : Polynomial(Integer(c)) {}  // NOLINT: Eigen builds Scalar(0), Scalar(1)
  Polynomial(const Integer& c);                   // NOLINT
  Polynomial(const Variable& v);                  // NOLINT

  static Polynomial monomial(const Monomial& m, const Integer& c = 1);
  static Polynomial power(const Variable& v, int e);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Integer constant_term() const;
  std::vector<Variable> variables() const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial operator-() const;

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /** Divides every coefficient by c exactly; throws if some coefficient is not divisible. */
  Polynomial divided_exactly(const Integer& c) const;

  /** Exact value; throws std::invalid_argument if a variable is missing. */
  Rational evaluate(const std::map<Variable, Rational>& assignment) const;

  std::string str() const;

 private:
  void add_term(const Monomial& m, const Integer& c);
  Terms terms_;
};

enum class PolyOp { add, mul, neg };
Polynomial poly_arith(PolyOp op, const Polynomial& a, const Polynomial& b = Polynomial());

inline bool is_zero(const Polynomial& x) { return x.is_zero(); }
inline bool is_zero(const Rational& x) { return x == 0; }

}  // namespace kausz

namespace Eigen {

template <>
struct NumTraits<kausz::Polynomial> : GenericNumTraits<kausz::Polynomial> {
  using Real = kausz::Polynomial;
  using NonInteger = kausz::Polynomial;
  using Nested = kausz::Polynomial;
  using Literal = kausz::Polynomial;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 8,
    MulCost = 32
  };
};

}  // namespace Eigen
