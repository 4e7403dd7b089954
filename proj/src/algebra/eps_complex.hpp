#pragma once

#include <string>

#include "algebra/rational.hpp"

namespace tanlift::algebra {

/// Number re + im*i with i*i = epsilon. epsilon = -1 gives the ordinary
/// complex numbers, epsilon = +1 the split-complex (hyperbolic) numbers.
class EpsComplex {
 public:
  EpsComplex(Rational re, Rational im, int epsilon);

  static EpsComplex unit(int epsilon) { return {0, 1, epsilon}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }
  int epsilon() const { return epsilon_; }

  EpsComplex conj() const { return {re_, -im_, epsilon_}; }
  /// re^2 - epsilon*im^2; equals |z|^2 for epsilon = -1.
  Rational norm() const;

  std::string str() const;

  friend EpsComplex operator+(const EpsComplex& a, const EpsComplex& b);
  friend EpsComplex operator-(const EpsComplex& a, const EpsComplex& b);
  friend EpsComplex operator*(const EpsComplex& a, const EpsComplex& b);
  friend EpsComplex operator*(const Rational& s, const EpsComplex& z);
  friend bool operator==(const EpsComplex& a, const EpsComplex& b);

 private:
  Rational re_;
  Rational im_;
  int epsilon_;
};

EpsComplex eps_mul(const EpsComplex& a, const EpsComplex& b);

}  // namespace tanlift::algebra
