#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "algebra/poly.hpp"
#include "algebra/poly_matrix.hpp"

namespace tanlift::tensor {

using algebra::Poly;
using algebra::PolyMatrix;
using algebra::Rational;
using algebra::VarsPtr;

/// Named coordinate chart. Coordinate order is the polynomial variable order.
class Chart {
 public:
  Chart() = default;
  Chart(std::string name, std::vector<std::string> coords);

  const std::string& name() const { return name_; }
  std::size_t dim() const { return coords_ ? coords_->size() : 0; }
  const VarsPtr& coords() const { return coords_; }
  const std::string& coord(std::size_t i) const { return (*coords_)[i]; }
  std::optional<std::size_t> index_of(std::string_view coord) const;

  friend bool operator==(const Chart& a, const Chart& b);

 private:
  std::string name_;
  VarsPtr coords_;
};

/// Supported valences: (0,0), (1,0), (0,1), (1,1), (0,2).
enum class Valence { Scalar, Vector, OneForm, Endo, Bilinear };

const char* to_string(Valence v);

/// Polynomial tensor field on a chart.
///
/// Component layout: scalar [f]; vector X^i; one-form w_i; endomorphism F^i_j
/// row-major with the upper (output) index as the row; bilinear G_ij row-major.
class TensorField {
 public:
  TensorField() = default;
  TensorField(Chart chart, Valence valence, std::vector<Poly> components);

  static TensorField zero(const Chart& chart, Valence valence);
  static TensorField scalar(const Chart& chart, Poly value);
  static TensorField vector(const Chart& chart, std::vector<Poly> components);
  static TensorField one_form(const Chart& chart, std::vector<Poly> components);
  static TensorField endo(const Chart& chart, std::vector<Poly> row_major);
  static TensorField endo(const Chart& chart, const PolyMatrix& m);
  static TensorField bilinear(const Chart& chart, std::vector<Poly> row_major);
  static TensorField identity(const Chart& chart);
  /// Coordinate vector field d/dx^i.
  static TensorField coordinate_vector(const Chart& chart, std::size_t i);
  /// Coordinate one-form dx^i.
  static TensorField coordinate_form(const Chart& chart, std::size_t i);

  const Chart& chart() const { return chart_; }
  Valence valence() const { return valence_; }
  const std::vector<Poly>& components() const { return components_; }

  const Poly& operator[](std::size_t i) const { return components_[i]; }
  const Poly& operator()(std::size_t i, std::size_t j) const {
    return components_[i * chart_.dim() + j];
  }
  const Poly& value() const { return components_.front(); }

  PolyMatrix matrix() const;
  bool is_zero() const;
  std::string str() const;

  TensorField scaled(const Rational& s) const;
  TensorField scaled(const Poly& f) const;

  friend TensorField operator+(const TensorField& a, const TensorField& b);
  friend TensorField operator-(const TensorField& a, const TensorField& b);
  friend TensorField operator-(const TensorField& a);
  friend bool operator==(const TensorField& a, const TensorField& b);

 private:
  Chart chart_;
  Valence valence_ = Valence::Scalar;
  std::vector<Poly> components_;
};

/// Exact point on a chart; values are positional over the coordinates.
struct Point {
  Chart chart;
  std::vector<Rational> values;

  std::string str() const;
};

Point make_point(const Chart& chart, std::vector<Rational> values);

// (FX)^i = F^i_j X^j
TensorField endo_apply(const TensorField& f, const TensorField& x);
// w_i X^i
TensorField oneform_apply(const TensorField& w, const TensorField& x);
// (F o H)^i_j = F^i_k H^k_j
TensorField endo_compose(const TensorField& f, const TensorField& h);
// (X (x) w)^i_j = X^i w_j
TensorField outer(const TensorField& x, const TensorField& w);
// (w (x) v)_ij = w_i v_j
TensorField form_outer(const TensorField& w, const TensorField& v);
// Transposed components; acts on one-forms by (F*w)_j = w_i F^i_j.
TensorField endo_transpose(const TensorField& f);
// (w o F)_j = w_i F^i_j
TensorField oneform_compose(const TensorField& w, const TensorField& f);
// result_ij = G_kl F^k_i F^l_j
TensorField metric_pullback(const TensorField& g, const TensorField& f);
// G(X, .)_j = X^i G_ij
TensorField bilinear_contract_first(const TensorField& g, const TensorField& x);

/// Rank of the evaluated component matrix, maximized over the points. A lower
/// bound on the generic rank.
std::size_t rank_at(const TensorField& f, std::span<const Point> points);

/// Leading principal minors of a bilinear form at a point, in order.
std::vector<Rational> leading_minors(const TensorField& g, const Point& p);

std::vector<Rational> evaluate(const TensorField& t, const Point& p);

/// Exact rank of a rational matrix by Gaussian elimination.
std::size_t rational_rank(std::vector<Rational> m, std::size_t rows, std::size_t cols);
Rational rational_determinant(std::vector<Rational> m, std::size_t n);

/// Deterministic pseudo-random rational points for witness search.
class PointSampler {
 public:
  explicit PointSampler(std::uint64_t seed) : rng_(seed) {}
  Point next(const Chart& chart);

 private:
  std::mt19937_64 rng_;
};

struct Witness {
  std::optional<Point> point;  // empty: nonzero symbolically, no sample hit
  std::size_t component = 0;
  Rational value;
};

inline constexpr std::size_t kWitnessSampleCap = 256;

/// For a nonzero field, a point where some component evaluates nonzero.
std::optional<Witness> find_witness(const TensorField& residual, std::uint64_t seed,
                                    std::size_t cap = kWitnessSampleCap);

}  // namespace tanlift::tensor
