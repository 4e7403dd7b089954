#include "algebra/eps_complex.hpp"

#include "common/error.hpp"

namespace tanlift::algebra {

namespace {

void require_same_epsilon(const EpsComplex& a, const EpsComplex& b) {
  if (a.epsilon() != b.epsilon()) {
    throw Error(ErrorCode::EpsilonMismatch,
                "epsilon-complex operands use epsilon " + std::to_string(a.epsilon()) +
                    " and " + std::to_string(b.epsilon()));
  }
}

}  // namespace

EpsComplex::EpsComplex(Rational re, Rational im, int epsilon)
    : re_(std::move(re)), im_(std::move(im)), epsilon_(epsilon) {
  if (epsilon != -1 && epsilon != 1) {
    throw Error(ErrorCode::InvalidArgument, "epsilon must be -1 or +1");
  }
}

Rational EpsComplex::norm() const {
  Rational out = re_ * re_ - epsilon_ * im_ * im_;
  return out;
}

std::string EpsComplex::str() const {
  std::string out = re_.get_str();
  if (sgn(im_) < 0) {
    out += " - " + Rational(-im_).get_str() + "i";
  } else {
    out += " + " + im_.get_str() + "i";
  }
  return out;
}

EpsComplex operator+(const EpsComplex& a, const EpsComplex& b) {
  require_same_epsilon(a, b);
  return {a.re_ + b.re_, a.im_ + b.im_, a.epsilon_};
}

EpsComplex operator-(const EpsComplex& a, const EpsComplex& b) {
  require_same_epsilon(a, b);
  return {a.re_ - b.re_, a.im_ - b.im_, a.epsilon_};
}

EpsComplex operator*(const EpsComplex& a, const EpsComplex& b) {
  require_same_epsilon(a, b);
  Rational re = a.re_ * b.re_ + a.epsilon_ * a.im_ * b.im_;
  Rational im = a.re_ * b.im_ + a.im_ * b.re_;
  return {std::move(re), std::move(im), a.epsilon_};
}

EpsComplex operator*(const Rational& s, const EpsComplex& z) {
  return {s * z.re_, s * z.im_, z.epsilon_};
}

bool operator==(const EpsComplex& a, const EpsComplex& b) {
  return a.epsilon_ == b.epsilon_ && a.re_ == b.re_ && a.im_ == b.im_;
}

EpsComplex eps_mul(const EpsComplex& a, const EpsComplex& b) { return a * b; }

}  // namespace tanlift::algebra
