#pragma once

#include <random>
#include <string>
#include <vector>

#include "algebra/poly.hpp"
#include "tensor/tensor_field.hpp"

namespace tanlift::testing {

using algebra::Poly;
using algebra::Rational;
using algebra::VarsPtr;

// Random polynomial with small integer/half-integer coefficients.
inline Poly random_poly(std::mt19937_64& rng, const VarsPtr& vars, int max_terms = 3, int max_deg = 2) {
  Poly p(vars);
  std::uniform_int_distribution<int> nterms(0, max_terms);
  std::uniform_int_distribution<int> coef(-4, 4);
  std::uniform_int_distribution<int> den(1, 2);
  std::uniform_int_distribution<std::size_t> var(0, vars->size() - 1);
  std::uniform_int_distribution<int> deg(0, max_deg);
  const int k = nterms(rng);
  for (int i = 0; i < k; ++i) {
    Poly m(algebra::make_rational(coef(rng), den(rng)), vars);
    const int d = deg(rng);
    for (int j = 0; j < d; ++j) m *= Poly::variable(vars, var(rng));
    p += m;
  }
  return p;
}

inline std::vector<Poly> random_polys(std::mt19937_64& rng, const VarsPtr& vars, std::size_t n,
                                      int max_terms = 2, int max_deg = 2) {
  std::vector<Poly> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(random_poly(rng, vars, max_terms, max_deg));
  return out;
}

inline std::vector<Rational> random_point(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> num(-7, 7);
  std::uniform_int_distribution<int> den(1, 3);
  std::vector<Rational> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(algebra::make_rational(num(rng), den(rng)));
  return out;
}

}  // namespace tanlift::testing
