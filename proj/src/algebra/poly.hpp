#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "algebra/rational.hpp"

namespace tanlift::algebra {

using VarList = std::vector<std::string>;
using VarsPtr = std::shared_ptr<const VarList>;

VarsPtr make_vars(VarList names);

using Exponent = std::uint16_t;
using Monomial = boost::container::small_vector<Exponent, 12>;

struct Term {
  Monomial exps;
  Rational coef;
};

/// Multivariate polynomial with exact rational coefficients.
///
/// Terms are kept in descending graded-lexicographic order over the declared
/// variable order, with no zero coefficients, so two equal polynomials over
/// the same variables have identical term vectors. A null variable list is
/// the empty list; such polynomials are constants and align with anything.
class Poly {
 public:
  Poly() = default;
  explicit Poly(VarsPtr vars) : vars_(std::move(vars)) {}
  Poly(const Rational& c, VarsPtr vars = {});  // NOLINT: constants convert

  static Poly variable(const VarsPtr& vars, std::size_t index);
  static Poly variable(const VarsPtr& vars, std::string_view name);
  /// Canonicalizes: sorts, merges duplicate monomials, drops zeros.
  static Poly from_terms(VarsPtr vars, std::vector<Term> terms);

  const VarsPtr& vars() const { return vars_; }
  std::size_t nvars() const { return vars_ ? vars_->size() : 0; }
  const std::vector<Term>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Throws InvalidArgument when the polynomial is not constant.
  Rational constant_value() const;
  int total_degree() const;

  /// Re-expresses this polynomial over `target`, matching variables by name.
  /// Variables that do not occur in any term may be absent from `target`.
  Poly embed(const VarsPtr& target) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Poly& other);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly scaled(const Rational& s) const;

  Poly diff(std::size_t var_index) const;
  /// Derivative with respect to a named variable; zero when the name is not
  /// one of this polynomial's variables.
  Poly diff(std::string_view name) const;

  /// Values are positional over vars().
  Rational eval(std::span<const Rational> values) const;
  /// Throws MissingAssignment when a variable is not assigned.
  Rational eval(const std::map<std::string, Rational, std::less<>>& point) const;

  /// Exact quotient; throws InexactDivision when `divisor` does not divide.
  Poly divide_exact(const Poly& divisor) const;

  /// Canonical text, e.g. "3*x*y^2 - 1/2*z + 1"; "0" for the zero polynomial.
  std::string str() const;

  friend bool operator==(const Poly& a, const Poly& b);

 private:
  VarsPtr vars_;
  std::vector<Term> terms_;
};

Poly poly_add(const Poly& a, const Poly& b);
Poly poly_sub(const Poly& a, const Poly& b);
Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_diff(const Poly& p, std::string_view var);

/// True when both lists contain the same names in the same order.
bool same_vars(const VarsPtr& a, const VarsPtr& b);

}  // namespace tanlift::algebra
