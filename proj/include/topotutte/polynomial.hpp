#pragma once

// Sparse multivariate Laurent polynomials with half-integer exponents and
// exact rational coefficients.
//
// Exponents are stored doubled, so A^(1/2) is the factor (A, 1) and A^-1 is
// (A, -2). Coefficients are rationals; integer coefficients print without a
// denominator, which is the common case.

#include "topotutte/rational.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace topotutte {

// An interned variable name. Cheap to copy and compare.
class Var {
 public:
  Var() = default;
  explicit Var(std::string_view name);

  const std::string& name() const;
  std::uint32_t id() const { return id_; }

  friend bool operator==(Var a, Var b) { return a.id_ == b.id_; }
  friend auto operator<=>(Var a, Var b) { return a.id_ <=> b.id_; }

  // The arrow family variable K_c for a half-integer index c > 0.
  static Var arrow(const Rational& index);

 private:
  std::uint32_t id_ = 0;
};

// Product of variables raised to doubled exponents. Factors are sorted by
// variable id and never carry a zero exponent.
class Monomial {
 public:
  Monomial() = default;
  Monomial(Var v, int doubled_exponent);

  const std::vector<std::pair<Var, int>>& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }
  int doubled_exponent(Var v) const;

  Monomial operator*(const Monomial& other) const;
  Monomial inverse() const;
  // Multiplies every doubled exponent by num/den. Throws if a result is not
  // an integer number of halves.
  Monomial scaled(int num, int den) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  std::vector<std::pair<Var, int>> factors_;
};

class Poly {
 public:
  using TermMap = std::map<Monomial, Rational>;

  Poly() = default;
  Poly(const Rational& constant);  // NOLINT: implicit by design of the arithmetic
  Poly(long constant) : Poly(Rational(constant)) {}  // NOLINT
  Poly(int constant) : Poly(Rational(constant)) {}   // NOLINT

  static Poly variable(Var v, int doubled_exponent = 2);
  static Poly variable(std::string_view name, int doubled_exponent = 2) { return variable(Var(name), doubled_exponent); }
  static Poly term(const Rational& coefficient, Monomial m);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_single_term() const { return terms_.size() == 1; }
  std::size_t size() const { return terms_.size(); }
  std::vector<Var> variables() const;

  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Poly& other);
  void add_term(const Monomial& m, const Rational& coefficient);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly operator-() const;
  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

  Poly pow(unsigned exponent) const;

  // Canonical text, e.g. "A + 3*B + B*X + 3".
  std::string to_string() const;
  static Poly parse(std::string_view text);

 private:
  TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const Poly& p);

using Assignment = std::map<Var, Rational>;

// Exact value of p at the assignment. Half exponents require a rational
// square value (its non-negative root is used). Throws std::domain_error for
// unassigned variables, 0 to a negative power, or non-square half powers.
Rational evaluate(const Poly& p, const Assignment& values);

// Replaces each ruled variable by a single-term polynomial (rational times
// monomial). Throws std::invalid_argument when a rule target has several terms
// or a half power of the coefficient is not rational.
Poly substitute_monomial(const Poly& p, const std::map<Var, Poly>& rules);

// Replaces ruled variables by arbitrary polynomials. The ruled variables must
// occur with non-negative integer exponents only.
Poly substitute(const Poly& p, const std::map<Var, Poly>& rules);

}  // namespace topotutte
