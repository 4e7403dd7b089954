#include "tensor/tensor_field.hpp"

#include <algorithm>
#include <set>

#include "common/error.hpp"

namespace tanlift::tensor {

namespace {

std::size_t component_count(Valence v, std::size_t dim) {
  switch (v) {
    case Valence::Scalar: return 1;
    case Valence::Vector:
    case Valence::OneForm: return dim;
    case Valence::Endo:
    case Valence::Bilinear: return dim * dim;
  }
  return 0;
}

void require_chart(const TensorField& a, const TensorField& b) {
  if (!(a.chart() == b.chart())) {
    throw Error(ErrorCode::ChartMismatch,
                "fields live on charts '" + a.chart().name() + "' and '" + b.chart().name() + "'");
  }
}

void require_valence(const TensorField& t, Valence v) {
  if (t.valence() != v) {
    throw Error(ErrorCode::ValenceMismatch, std::string("expected a ") + to_string(v) +
                                                " field, got a " + to_string(t.valence()));
  }
}

}  // namespace

Chart::Chart(std::string name, std::vector<std::string> coords) : name_(std::move(name)) {
  std::set<std::string> seen;
  for (const std::string& c : coords) {
    if (c.empty()) throw Error(ErrorCode::InvalidArgument, "empty coordinate name");
    if (!seen.insert(c).second) {
      throw Error(ErrorCode::InvalidArgument, "duplicate coordinate '" + c + "'");
    }
  }
  coords_ = algebra::make_vars(std::move(coords));
}

std::optional<std::size_t> Chart::index_of(std::string_view coord) const {
  if (!coords_) return std::nullopt;
  auto it = std::find(coords_->begin(), coords_->end(), coord);
  if (it == coords_->end()) return std::nullopt;
  return static_cast<std::size_t>(it - coords_->begin());
}

bool operator==(const Chart& a, const Chart& b) {
  return a.name_ == b.name_ && algebra::same_vars(a.coords_, b.coords_);
}

const char* to_string(Valence v) {
  switch (v) {
    case Valence::Scalar: return "(0,0)";
    case Valence::Vector: return "(1,0)";
    case Valence::OneForm: return "(0,1)";
    case Valence::Endo: return "(1,1)";
    case Valence::Bilinear: return "(0,2)";
  }
  return "?";
}

TensorField::TensorField(Chart chart, Valence valence, std::vector<Poly> components)
    : chart_(std::move(chart)), valence_(valence), components_(std::move(components)) {
  if (components_.size() != component_count(valence_, chart_.dim())) {
    throw Error(ErrorCode::InvalidArgument,
                std::string("a ") + to_string(valence_) + " field on a " +
                    std::to_string(chart_.dim()) + "-dimensional chart needs " +
                    std::to_string(component_count(valence_, chart_.dim())) + " components, got " +
                    std::to_string(components_.size()));
  }
  for (Poly& p : components_) {
    if (p.vars() != chart_.coords()) p = p.embed(chart_.coords());
  }
}

TensorField TensorField::zero(const Chart& chart, Valence valence) {
  return TensorField(chart, valence,
                     std::vector<Poly>(component_count(valence, chart.dim()), Poly(chart.coords())));
}

TensorField TensorField::scalar(const Chart& chart, Poly value) {
  return TensorField(chart, Valence::Scalar, {std::move(value)});
}

TensorField TensorField::vector(const Chart& chart, std::vector<Poly> components) {
  return TensorField(chart, Valence::Vector, std::move(components));
}

TensorField TensorField::one_form(const Chart& chart, std::vector<Poly> components) {
  return TensorField(chart, Valence::OneForm, std::move(components));
}

TensorField TensorField::endo(const Chart& chart, std::vector<Poly> row_major) {
  return TensorField(chart, Valence::Endo, std::move(row_major));
}

TensorField TensorField::endo(const Chart& chart, const PolyMatrix& m) {
  if (m.rows() != chart.dim() || m.cols() != chart.dim()) {
    throw Error(ErrorCode::InvalidArgument, "matrix shape does not match chart dimension");
  }
  return TensorField(chart, Valence::Endo, m.entries());
}

TensorField TensorField::bilinear(const Chart& chart, std::vector<Poly> row_major) {
  return TensorField(chart, Valence::Bilinear, std::move(row_major));
}

TensorField TensorField::identity(const Chart& chart) {
  return endo(chart, PolyMatrix::identity(chart.dim(), chart.coords()));
}

TensorField TensorField::coordinate_vector(const Chart& chart, std::size_t i) {
  TensorField t = zero(chart, Valence::Vector);
  t.components_.at(i) = Poly(Rational(1), chart.coords());
  return t;
}

TensorField TensorField::coordinate_form(const Chart& chart, std::size_t i) {
  TensorField t = zero(chart, Valence::OneForm);
  t.components_.at(i) = Poly(Rational(1), chart.coords());
  return t;
}

PolyMatrix TensorField::matrix() const {
  if (valence_ != Valence::Endo && valence_ != Valence::Bilinear) {
    throw Error(ErrorCode::ValenceMismatch, "only (1,1) and (0,2) fields have a component matrix");
  }
  return PolyMatrix(chart_.dim(), chart_.dim(), components_);
}

bool TensorField::is_zero() const {
  return std::all_of(components_.begin(), components_.end(),
                     [](const Poly& p) { return p.is_zero(); });
}

std::string TensorField::str() const {
  const std::size_t n = chart_.dim();
  auto list = [&](std::size_t from, std::size_t count) {
    std::string out = "[";
    for (std::size_t i = 0; i < count; ++i) {
      if (i) out += ", ";
      out += components_[from + i].str();
    }
    return out + "]";
  };
  switch (valence_) {
    case Valence::Scalar: return components_.front().str();
    case Valence::Vector:
    case Valence::OneForm: return list(0, n);
    case Valence::Endo:
    case Valence::Bilinear: {
      std::string out = "[";
      for (std::size_t i = 0; i < n; ++i) {
        if (i) out += ", ";
        out += list(i * n, n);
      }
      return out + "]";
    }
  }
  return {};
}

TensorField TensorField::scaled(const Rational& s) const {
  TensorField t = *this;
  for (Poly& p : t.components_) p = p.scaled(s);
  return t;
}

TensorField TensorField::scaled(const Poly& f) const {
  TensorField t = *this;
  const Poly g = f.embed(chart_.coords());
  for (Poly& p : t.components_) {
    if (!p.is_zero()) p = g * p;
  }
  return t;
}

TensorField operator+(const TensorField& a, const TensorField& b) {
  require_chart(a, b);
  require_valence(b, a.valence());
  TensorField out = a;
  for (std::size_t i = 0; i < out.components_.size(); ++i) out.components_[i] += b.components_[i];
  return out;
}

TensorField operator-(const TensorField& a, const TensorField& b) {
  require_chart(a, b);
  require_valence(b, a.valence());
  TensorField out = a;
  for (std::size_t i = 0; i < out.components_.size(); ++i) out.components_[i] -= b.components_[i];
  return out;
}

TensorField operator-(const TensorField& a) {
  TensorField out = a;
  for (Poly& p : out.components_) p = -p;
  return out;
}

bool operator==(const TensorField& a, const TensorField& b) {
  return a.valence_ == b.valence_ && a.chart_ == b.chart_ && a.components_ == b.components_;
}

std::string Point::str() const {
  std::string out = "{";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ", ";
    out += chart.coord(i) + "=" + values[i].get_str();
  }
  return out + "}";
}

Point make_point(const Chart& chart, std::vector<Rational> values) {
  if (values.size() != chart.dim()) {
    throw Error(ErrorCode::MissingAssignment, "point does not assign every coordinate of chart '" +
                                                  chart.name() + "'");
  }
  return Point{chart, std::move(values)};
}

TensorField endo_apply(const TensorField& f, const TensorField& x) {
  require_chart(f, x);
  require_valence(f, Valence::Endo);
  require_valence(x, Valence::Vector);
  const std::size_t n = f.chart().dim();
  std::vector<Poly> out(n, Poly(f.chart().coords()));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (f(i, j).is_zero() || x[j].is_zero()) continue;
      out[i] += f(i, j) * x[j];
    }
  }
  return TensorField::vector(f.chart(), std::move(out));
}

TensorField oneform_apply(const TensorField& w, const TensorField& x) {
  require_chart(w, x);
  require_valence(w, Valence::OneForm);
  require_valence(x, Valence::Vector);
  Poly sum(w.chart().coords());
  for (std::size_t i = 0; i < w.chart().dim(); ++i) {
    if (w[i].is_zero() || x[i].is_zero()) continue;
    sum += w[i] * x[i];
  }
  return TensorField::scalar(w.chart(), std::move(sum));
}

TensorField endo_compose(const TensorField& f, const TensorField& h) {
  require_chart(f, h);
  require_valence(f, Valence::Endo);
  require_valence(h, Valence::Endo);
  return TensorField::endo(f.chart(), f.matrix() * h.matrix());
}

TensorField outer(const TensorField& x, const TensorField& w) {
  require_chart(x, w);
  require_valence(x, Valence::Vector);
  require_valence(w, Valence::OneForm);
  const std::size_t n = x.chart().dim();
  std::vector<Poly> out(n * n, Poly(x.chart().coords()));
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (!w[j].is_zero()) out[i * n + j] = x[i] * w[j];
    }
  }
  return TensorField::endo(x.chart(), std::move(out));
}

TensorField form_outer(const TensorField& w, const TensorField& v) {
  require_chart(w, v);
  require_valence(w, Valence::OneForm);
  require_valence(v, Valence::OneForm);
  const std::size_t n = w.chart().dim();
  std::vector<Poly> out(n * n, Poly(w.chart().coords()));
  for (std::size_t i = 0; i < n; ++i) {
    if (w[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (!v[j].is_zero()) out[i * n + j] = w[i] * v[j];
    }
  }
  return TensorField::bilinear(w.chart(), std::move(out));
}

TensorField endo_transpose(const TensorField& f) {
  require_valence(f, Valence::Endo);
  return TensorField::endo(f.chart(), f.matrix().transpose());
}

TensorField oneform_compose(const TensorField& w, const TensorField& f) {
  require_chart(w, f);
  require_valence(w, Valence::OneForm);
  require_valence(f, Valence::Endo);
  const std::size_t n = f.chart().dim();
  std::vector<Poly> out(n, Poly(f.chart().coords()));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      if (w[i].is_zero() || f(i, j).is_zero()) continue;
      out[j] += w[i] * f(i, j);
    }
  }
  return TensorField::one_form(f.chart(), std::move(out));
}

TensorField metric_pullback(const TensorField& g, const TensorField& f) {
  require_chart(g, f);
  require_valence(g, Valence::Bilinear);
  require_valence(f, Valence::Endo);
  const PolyMatrix fm = f.matrix();
  return TensorField::bilinear(g.chart(), (fm.transpose() * g.matrix() * fm).entries());
}

TensorField bilinear_contract_first(const TensorField& g, const TensorField& x) {
  require_chart(g, x);
  require_valence(g, Valence::Bilinear);
  require_valence(x, Valence::Vector);
  const std::size_t n = g.chart().dim();
  std::vector<Poly> out(n, Poly(g.chart().coords()));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      if (x[i].is_zero() || g(i, j).is_zero()) continue;
      out[j] += x[i] * g(i, j);
    }
  }
  return TensorField::one_form(g.chart(), std::move(out));
}

std::vector<Rational> evaluate(const TensorField& t, const Point& p) {
  if (!(t.chart() == p.chart)) {
    throw Error(ErrorCode::ChartMismatch, "point is not on chart '" + t.chart().name() + "'");
  }
  std::vector<Rational> out;
  out.reserve(t.components().size());
  for (const Poly& c : t.components()) out.push_back(c.eval(p.values));
  return out;
}

std::size_t rational_rank(std::vector<Rational> m, std::size_t rows, std::size_t cols) {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && sgn(m[pivot * cols + col]) == 0) ++pivot;
    if (pivot == rows) continue;
    for (std::size_t j = 0; j < cols; ++j) std::swap(m[pivot * cols + j], m[rank * cols + j]);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      if (sgn(m[i * cols + col]) == 0) continue;
      const Rational factor = m[i * cols + col] / m[rank * cols + col];
      for (std::size_t j = col; j < cols; ++j) m[i * cols + j] -= factor * m[rank * cols + j];
    }
    ++rank;
  }
  return rank;
}

Rational rational_determinant(std::vector<Rational> m, std::size_t n) {
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && sgn(m[pivot * n + col]) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m[pivot * n + j], m[col * n + j]);
      det = -det;
    }
    det *= m[col * n + col];
    for (std::size_t i = col + 1; i < n; ++i) {
      if (sgn(m[i * n + col]) == 0) continue;
      const Rational factor = m[i * n + col] / m[col * n + col];
      for (std::size_t j = col; j < n; ++j) m[i * n + j] -= factor * m[col * n + j];
    }
  }
  return det;
}

std::size_t rank_at(const TensorField& f, std::span<const Point> points) {
  require_valence(f, Valence::Endo);
  if (points.empty()) throw Error(ErrorCode::InvalidArgument, "rank needs at least one point");
  const std::size_t n = f.chart().dim();
  std::size_t best = 0;
  for (const Point& p : points) best = std::max(best, rational_rank(evaluate(f, p), n, n));
  return best;
}

std::vector<Rational> leading_minors(const TensorField& g, const Point& p) {
  require_valence(g, Valence::Bilinear);
  const std::size_t n = g.chart().dim();
  const std::vector<Rational> values = evaluate(g, p);
  std::vector<Rational> minors;
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<Rational> block(k * k);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) block[i * k + j] = values[i * n + j];
    }
    minors.push_back(rational_determinant(std::move(block), k));
  }
  return minors;
}

Point PointSampler::next(const Chart& chart) {
  std::vector<Rational> values;
  values.reserve(chart.dim());
  for (std::size_t i = 0; i < chart.dim(); ++i) {
    const long num = static_cast<long>(rng_() % 19) - 9;
    const long den = static_cast<long>(rng_() % 4) + 1;
    values.push_back(algebra::make_rational(num, den));
  }
  return Point{chart, std::move(values)};
}

std::optional<Witness> find_witness(const TensorField& residual, std::uint64_t seed,
                                    std::size_t cap) {
  const auto& comps = residual.components();
  auto nonzero = std::find_if(comps.begin(), comps.end(), [](const Poly& p) { return !p.is_zero(); });
  if (nonzero == comps.end()) return std::nullopt;
  PointSampler sampler(seed);
  for (std::size_t k = 0; k < cap; ++k) {
    Point p = sampler.next(residual.chart());
    for (std::size_t c = 0; c < comps.size(); ++c) {
      if (comps[c].is_zero()) continue;
      Rational v = comps[c].eval(p.values);
      if (sgn(v) != 0) return Witness{std::move(p), c, std::move(v)};
    }
  }
  return Witness{std::nullopt, static_cast<std::size_t>(nonzero - comps.begin()), Rational(0)};
}

}  // namespace tanlift::tensor
