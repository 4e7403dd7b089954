#include "algebra/poly.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "common/error.hpp"

namespace tanlift::algebra {

namespace {

int degree_of(const Monomial& m) {
  return std::accumulate(m.begin(), m.end(), 0);
}

// Descending graded-lex: higher total degree first, ties broken by the
// exponent of the earliest variable.
bool grlex_greater(const Monomial& a, const Monomial& b) {
  const int da = degree_of(a);
  const int db = degree_of(b);
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

void canonicalize(std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& x, const Term& y) { return grlex_greater(x.exps, y.exps); });
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i + 1;
    Rational sum = terms[i].coef;
    while (j < terms.size() && terms[j].exps == terms[i].exps) {
      sum += terms[j].coef;
      ++j;
    }
    if (sgn(sum) != 0) {
      if (out != i) terms[out].exps = std::move(terms[i].exps);
      terms[out].coef = std::move(sum);
      ++out;
    }
    i = j;
  }
  terms.resize(out);
}

bool is_prefix(const VarList& shorter, const VarList& longer) {
  return shorter.size() <= longer.size() &&
         std::equal(shorter.begin(), shorter.end(), longer.begin());
}

std::size_t size_of(const VarsPtr& v) { return v ? v->size() : 0; }

bool used_vars_within(const Poly& p, const VarsPtr& target) {
  if (!p.vars()) return true;
  const VarList& src = *p.vars();
  for (std::size_t i = 0; i < src.size(); ++i) {
    bool used = std::any_of(p.terms().begin(), p.terms().end(),
                            [i](const Term& t) { return t.exps[i] != 0; });
    if (!used) continue;
    if (!target || std::find(target->begin(), target->end(), src[i]) == target->end()) {
      return false;
    }
  }
  return true;
}

std::string describe(const VarsPtr& v) {
  std::string out = "(";
  if (v) {
    for (std::size_t i = 0; i < v->size(); ++i) {
      if (i) out += ", ";
      out += (*v)[i];
    }
  }
  return out + ")";
}

// Variable list both operands can be expressed over.
VarsPtr common_vars(const Poly& a, const Poly& b) {
  const VarsPtr& va = a.vars();
  const VarsPtr& vb = b.vars();
  if (va == vb) return va;
  if (size_of(va) == 0) return vb;
  if (size_of(vb) == 0) return va;
  if (*va == *vb) return va;
  if (is_prefix(*va, *vb)) return vb;
  if (is_prefix(*vb, *va)) return va;
  if (a.is_constant() || used_vars_within(a, vb)) return vb;
  if (b.is_constant() || used_vars_within(b, va)) return va;
  throw Error(ErrorCode::VariableMismatch,
              "cannot align polynomial variables " + describe(va) + " and " + describe(vb));
}

Poly aligned(const Poly& p, const VarsPtr& target) {
  if (p.vars() == target) return p;
  return p.embed(target);
}

std::vector<Term> merge_terms(const std::vector<Term>& x, const std::vector<Term>& y, bool negate_y) {
  std::vector<Term> out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && grlex_greater(x[i].exps, y[j].exps))) {
      out.push_back(x[i++]);
    } else if (i == x.size() || grlex_greater(y[j].exps, x[i].exps)) {
      Term t = y[j++];
      if (negate_y) t.coef = -t.coef;
      out.push_back(std::move(t));
    } else {
      Rational c = negate_y ? Rational(x[i].coef - y[j].coef) : Rational(x[i].coef + y[j].coef);
      if (sgn(c) != 0) out.push_back(Term{x[i].exps, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

Rational power(const Rational& base, unsigned e) {
  Rational out;
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), e);
  return out;
}

}  // namespace

VarsPtr make_vars(VarList names) {
  return std::make_shared<const VarList>(std::move(names));
}

bool same_vars(const VarsPtr& a, const VarsPtr& b) {
  if (a == b) return true;
  if (size_of(a) == 0 || size_of(b) == 0) return size_of(a) == size_of(b);
  return *a == *b;
}

Poly::Poly(const Rational& c, VarsPtr vars) : vars_(std::move(vars)) {
  if (sgn(c) != 0) terms_.push_back(Term{Monomial(nvars(), 0), c});
}

Poly Poly::variable(const VarsPtr& vars, std::size_t index) {
  if (index >= size_of(vars)) {
    throw Error(ErrorCode::InvalidArgument, "variable index out of range");
  }
  Poly p(vars);
  Monomial m(vars->size(), 0);
  m[index] = 1;
  p.terms_.push_back(Term{std::move(m), Rational(1)});
  return p;
}

Poly Poly::variable(const VarsPtr& vars, std::string_view name) {
  if (vars) {
    auto it = std::find(vars->begin(), vars->end(), name);
    if (it != vars->end()) return variable(vars, static_cast<std::size_t>(it - vars->begin()));
  }
  throw Error(ErrorCode::VariableMismatch, "unknown variable '" + std::string(name) + "'");
}

Poly Poly::from_terms(VarsPtr vars, std::vector<Term> terms) {
  Poly p(std::move(vars));
  for (const Term& t : terms) {
    if (t.exps.size() != p.nvars()) {
      throw Error(ErrorCode::InvalidArgument, "exponent vector length does not match variables");
    }
  }
  canonicalize(terms);
  p.terms_ = std::move(terms);
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && degree_of(terms_.front().exps) == 0);
}

Rational Poly::constant_value() const {
  if (!is_constant()) {
    throw Error(ErrorCode::InvalidArgument, "polynomial " + str() + " is not constant");
  }
  return terms_.empty() ? Rational(0) : terms_.front().coef;
}

int Poly::total_degree() const {
  return terms_.empty() ? -1 : degree_of(terms_.front().exps);
}

Poly Poly::embed(const VarsPtr& target) const {
  if (same_vars(vars_, target)) {
    Poly p(target);
    p.terms_ = terms_;
    return p;
  }
  const std::size_t n = nvars();
  std::vector<std::size_t> where(n, std::numeric_limits<std::size_t>::max());
  for (std::size_t i = 0; i < n; ++i) {
    const std::string& name = (*vars_)[i];
    if (target) {
      auto it = std::find(target->begin(), target->end(), name);
      if (it != target->end()) where[i] = static_cast<std::size_t>(it - target->begin());
    }
  }
  Poly p(target);
  p.terms_.reserve(terms_.size());
  const std::size_t m = size_of(target);
  for (const Term& t : terms_) {
    Monomial e(m, 0);
    for (std::size_t i = 0; i < n; ++i) {
      if (t.exps[i] == 0) continue;
      if (where[i] == std::numeric_limits<std::size_t>::max()) {
        throw Error(ErrorCode::VariableMismatch,
                    "variable '" + (*vars_)[i] + "' is not in " + describe(target));
      }
      e[where[i]] = t.exps[i];
    }
    p.terms_.push_back(Term{std::move(e), t.coef});
  }
  // A permuted variable order changes the term order.
  canonicalize(p.terms_);
  return p;
}

Poly Poly::operator-() const {
  Poly p = *this;
  for (Term& t : p.terms_) t.coef = -t.coef;
  return p;
}

Poly& Poly::operator+=(const Poly& other) {
  if (other.is_zero()) return *this;
  VarsPtr v = common_vars(*this, other);
  if (vars_ != v) *this = embed(v);
  if (other.vars() == v) {
    terms_ = merge_terms(terms_, other.terms_, false);
  } else {
    terms_ = merge_terms(terms_, other.embed(v).terms_, false);
  }
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  if (other.is_zero()) return *this;
  VarsPtr v = common_vars(*this, other);
  if (vars_ != v) *this = embed(v);
  if (other.vars() == v) {
    terms_ = merge_terms(terms_, other.terms_, true);
  } else {
    terms_ = merge_terms(terms_, other.embed(v).terms_, true);
  }
  return *this;
}

Poly& Poly::operator*=(const Poly& other) {
  *this = *this * other;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  VarsPtr v = common_vars(a, b);
  if (a.is_zero() || b.is_zero()) return Poly(v);
  Poly a_tmp, b_tmp;
  const Poly* pa = &a;
  const Poly* pb = &b;
  if (a.vars() != v) pa = &(a_tmp = a.embed(v));
  if (b.vars() != v) pb = &(b_tmp = b.embed(v));
  const Poly& x = *pa;
  const Poly& y = *pb;
  const std::size_t n = size_of(v);
  Poly out(v);
  out.terms_.reserve(x.terms_.size() * y.terms_.size());
  for (const Term& s : x.terms_) {
    for (const Term& t : y.terms_) {
      Monomial e(n, 0);
      for (std::size_t i = 0; i < n; ++i) {
        const unsigned sum = unsigned(s.exps[i]) + unsigned(t.exps[i]);
        if (sum > std::numeric_limits<Exponent>::max()) {
          throw Error(ErrorCode::InvalidArgument, "exponent overflow");
        }
        e[i] = static_cast<Exponent>(sum);
      }
      out.terms_.push_back(Term{std::move(e), s.coef * t.coef});
    }
  }
  // Multiplying by a single term preserves the monomial order.
  if (x.terms_.size() > 1 && y.terms_.size() > 1) canonicalize(out.terms_);
  return out;
}

Poly Poly::scaled(const Rational& s) const {
  if (sgn(s) == 0) return Poly(vars_);
  Poly p = *this;
  for (Term& t : p.terms_) t.coef *= s;
  return p;
}

Poly Poly::diff(std::size_t var_index) const {
  Poly p(vars_);
  if (var_index >= nvars()) return p;
  for (const Term& t : terms_) {
    const Exponent e = t.exps[var_index];
    if (e == 0) continue;
    Term d{t.exps, t.coef * e};
    d.exps[var_index] = static_cast<Exponent>(e - 1);
    p.terms_.push_back(std::move(d));
  }
  return p;
}

Poly Poly::diff(std::string_view name) const {
  if (vars_) {
    auto it = std::find(vars_->begin(), vars_->end(), name);
    if (it != vars_->end()) return diff(static_cast<std::size_t>(it - vars_->begin()));
  }
  return Poly(vars_);
}

Rational Poly::eval(std::span<const Rational> values) const {
  if (values.size() != nvars()) {
    throw Error(ErrorCode::MissingAssignment, "point has " + std::to_string(values.size()) +
                                                  " values for " + std::to_string(nvars()) +
                                                  " variables");
  }
  Rational sum = 0;
  for (const Term& t : terms_) {
    Rational v = t.coef;
    for (std::size_t i = 0; i < t.exps.size(); ++i) {
      if (t.exps[i] == 1) {
        v *= values[i];
      } else if (t.exps[i] > 1) {
        v *= power(values[i], t.exps[i]);
      }
    }
    sum += v;
  }
  return sum;
}

Rational Poly::eval(const std::map<std::string, Rational, std::less<>>& point) const {
  std::vector<Rational> values(nvars());
  for (std::size_t i = 0; i < nvars(); ++i) {
    const std::string& name = (*vars_)[i];
    auto it = point.find(name);
    if (it != point.end()) {
      values[i] = it->second;
      continue;
    }
    bool used = std::any_of(terms_.begin(), terms_.end(),
                            [i](const Term& t) { return t.exps[i] != 0; });
    if (used) throw Error(ErrorCode::MissingAssignment, "no value for variable '" + name + "'");
  }
  return eval(values);
}

Poly Poly::divide_exact(const Poly& divisor) const {
  if (divisor.is_zero()) throw Error(ErrorCode::InexactDivision, "division by zero polynomial");
  VarsPtr v = common_vars(*this, divisor);
  Poly rem = aligned(*this, v);
  const Poly d = aligned(divisor, v);
  const Term& lead = d.terms_.front();
  Poly quotient(v);
  while (!rem.is_zero()) {
    const Term& top = rem.terms_.front();
    Monomial e(top.exps.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (top.exps[i] < lead.exps[i]) {
        throw Error(ErrorCode::InexactDivision,
                    "polynomial " + divisor.str() + " does not divide " + str());
      }
      e[i] = static_cast<Exponent>(top.exps[i] - lead.exps[i]);
    }
    Poly step(v);
    step.terms_.push_back(Term{std::move(e), top.coef / lead.coef});
    quotient.terms_.push_back(step.terms_.front());
    rem -= step * d;
  }
  // Quotient terms were produced in descending order already.
  return quotient;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const Term& t : terms_) {
    std::string mono;
    for (std::size_t i = 0; i < t.exps.size(); ++i) {
      if (t.exps[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += (*vars_)[i];
      if (t.exps[i] > 1) mono += "^" + std::to_string(t.exps[i]);
    }
    const bool negative = sgn(t.coef) < 0;
    const Rational mag = abs(t.coef);
    std::string body;
    if (mono.empty()) {
      body = mag.get_str();
    } else if (mag == 1) {
      body = mono;
    } else {
      body = mag.get_str() + "*" + mono;
    }
    if (first) {
      out = negative ? "-" + body : body;
      first = false;
    } else {
      out += negative ? " - " : " + ";
      out += body;
    }
  }
  return out;
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  if (a.is_zero()) return true;
  VarsPtr v;
  try {
    v = common_vars(a, b);
  } catch (const Error&) {
    return false;
  }
  const Poly x = aligned(a, v);
  const Poly y = aligned(b, v);
  for (std::size_t i = 0; i < x.terms_.size(); ++i) {
    if (x.terms_[i].exps != y.terms_[i].exps || x.terms_[i].coef != y.terms_[i].coef) return false;
  }
  return true;
}

Poly poly_add(const Poly& a, const Poly& b) { return a + b; }
Poly poly_sub(const Poly& a, const Poly& b) { return a - b; }
Poly poly_mul(const Poly& a, const Poly& b) { return a * b; }
Poly poly_diff(const Poly& p, std::string_view var) { return p.diff(var); }

}  // namespace tanlift::algebra
