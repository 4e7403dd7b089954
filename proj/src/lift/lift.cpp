#include "lift/lift.hpp"

#include <algorithm>

#include "common/error.hpp"

namespace tanlift::lift {

namespace {

void require_base(const TangentChart& tc, const TensorField& t) {
  if (!(t.chart() == tc.base())) {
    throw Error(ErrorCode::ChartMismatch, "field on chart '" + t.chart().name() +
                                              "' is not on base chart '" + tc.base().name() + "'");
  }
}

void require_valence(const TensorField& t, Valence v) {
  if (t.valence() != v) {
    throw Error(ErrorCode::ValenceMismatch, std::string("expected a ") + tensor::to_string(v) +
                                                " field, got " + tensor::to_string(t.valence()));
  }
}

const Connection& require_connection(const TangentChart& tc, const Connection* conn) {
  if (conn == nullptr) {
    throw Error(ErrorCode::MissingConnection, "horizontal lift needs an affine connection");
  }
  if (!(conn->chart() == tc.base())) {
    throw Error(ErrorCode::ChartMismatch, "connection is not on the base chart");
  }
  return *conn;
}

// N^i_j = y^k Gamma^i_{kj}, on the total chart.
std::vector<Poly> contracted_connection(const TangentChart& tc, const Connection& conn) {
  const std::size_t m = tc.base_dim();
  std::vector<Poly> n(m * m, Poly(tc.total().coords()));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t k = 0; k < m; ++k) {
        const Poly& g = conn(i, k, j);
        if (g.is_zero()) continue;
        n[i * m + j] += tc.fiber(k) * tc.to_total(g);
      }
    }
  }
  return n;
}

}  // namespace

const char* to_string(LiftKind k) {
  switch (k) {
    case LiftKind::Vertical: return "vertical";
    case LiftKind::Complete: return "complete";
    case LiftKind::Horizontal: return "horizontal";
  }
  return "?";
}

const char* superscript(LiftKind k) {
  switch (k) {
    case LiftKind::Vertical: return "v";
    case LiftKind::Complete: return "c";
    case LiftKind::Horizontal: return "h";
  }
  return "?";
}

TangentChart::TangentChart(const Chart& base, std::string suffix)
    : base_(base), suffix_(std::move(suffix)) {
  if (suffix_.empty()) throw Error(ErrorCode::InvalidArgument, "fiber suffix must be non-empty");
  std::vector<std::string> coords(base.coords()->begin(), base.coords()->end());
  for (std::size_t i = 0; i < base.dim(); ++i) {
    std::string fiber = base.coord(i) + suffix_;
    if (std::find(coords.begin(), coords.end(), fiber) != coords.end()) {
      throw Error(ErrorCode::InvalidArgument,
                  "fiber coordinate '" + fiber + "' collides with an existing coordinate");
    }
    coords.push_back(std::move(fiber));
  }
  total_ = Chart("T" + base.name(), std::move(coords));
  for (std::size_t i = 0; i < base.dim(); ++i) {
    fibers_.push_back(Poly::variable(total_.coords(), base.dim() + i));
  }
}

Poly TangentChart::to_total(const Poly& p) const { return p.embed(total_.coords()); }

Poly TangentChart::fiber_derivative(const Poly& p) const {
  Poly out(total_.coords());
  for (std::size_t k = 0; k < base_dim(); ++k) {
    Poly d = p.diff(base_.coord(k));
    if (d.is_zero()) continue;
    out += fibers_[k] * to_total(d);
  }
  return out;
}

Connection::Connection(Chart chart, bool symmetric)
    : chart_(std::move(chart)), symmetric_(symmetric) {
  const std::size_t m = chart_.dim();
  gamma_.assign(m * m * m, Poly(chart_.coords()));
}

void Connection::set(std::size_t i, std::size_t j, std::size_t k, const Poly& value) {
  const std::size_t m = dim();
  if (i >= m || j >= m || k >= m) throw Error(ErrorCode::InvalidArgument, "connection index out of range");
  const Poly v = value.embed(chart_.coords());
  gamma_[(i * m + j) * m + k] = v;
  if (symmetric_) gamma_[(i * m + k) * m + j] = v;
}

bool Connection::is_flat() const {
  return std::all_of(gamma_.begin(), gamma_.end(), [](const Poly& p) { return p.is_zero(); });
}

bool operator==(const Connection& a, const Connection& b) {
  return a.chart_ == b.chart_ && a.symmetric_ == b.symmetric_ && a.gamma_ == b.gamma_;
}

TensorField lift_function(const TangentChart& tc, const TensorField& f, LiftKind kind) {
  require_base(tc, f);
  require_valence(f, Valence::Scalar);
  switch (kind) {
    case LiftKind::Vertical: return TensorField::scalar(tc.total(), tc.to_total(f.value()));
    case LiftKind::Complete: return TensorField::scalar(tc.total(), tc.fiber_derivative(f.value()));
    case LiftKind::Horizontal: break;
  }
  throw Error(ErrorCode::Unsupported, "horizontal lifts of functions are not provided");
}

TensorField lift_vector(const TangentChart& tc, const TensorField& x, LiftKind kind,
                        const Connection* conn) {
  require_base(tc, x);
  require_valence(x, Valence::Vector);
  const std::size_t m = tc.base_dim();
  std::vector<Poly> out(2 * m, Poly(tc.total().coords()));
  switch (kind) {
    case LiftKind::Vertical:
      for (std::size_t i = 0; i < m; ++i) out[m + i] = tc.to_total(x[i]);
      break;
    case LiftKind::Complete:
      for (std::size_t i = 0; i < m; ++i) {
        out[i] = tc.to_total(x[i]);
        out[m + i] = tc.fiber_derivative(x[i]);
      }
      break;
    case LiftKind::Horizontal: {
      const std::vector<Poly> n = contracted_connection(tc, require_connection(tc, conn));
      for (std::size_t i = 0; i < m; ++i) {
        out[i] = tc.to_total(x[i]);
        for (std::size_t j = 0; j < m; ++j) {
          if (n[i * m + j].is_zero() || x[j].is_zero()) continue;
          out[m + i] -= n[i * m + j] * tc.to_total(x[j]);
        }
      }
      break;
    }
  }
  return TensorField::vector(tc.total(), std::move(out));
}

TensorField lift_oneform(const TangentChart& tc, const TensorField& w, LiftKind kind,
                         const Connection* conn) {
  require_base(tc, w);
  require_valence(w, Valence::OneForm);
  const std::size_t m = tc.base_dim();
  std::vector<Poly> out(2 * m, Poly(tc.total().coords()));
  switch (kind) {
    case LiftKind::Vertical:
      for (std::size_t i = 0; i < m; ++i) out[i] = tc.to_total(w[i]);
      break;
    case LiftKind::Complete:
      for (std::size_t i = 0; i < m; ++i) {
        out[i] = tc.fiber_derivative(w[i]);
        out[m + i] = tc.to_total(w[i]);
      }
      break;
    case LiftKind::Horizontal: {
      const std::vector<Poly> n = contracted_connection(tc, require_connection(tc, conn));
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t s = 0; s < m; ++s) {
          if (n[s * m + i].is_zero() || w[s].is_zero()) continue;
          out[i] += n[s * m + i] * tc.to_total(w[s]);
        }
        out[m + i] = tc.to_total(w[i]);
      }
      break;
    }
  }
  return TensorField::one_form(tc.total(), std::move(out));
}

TensorField lift_endo(const TangentChart& tc, const TensorField& f, LiftKind kind,
                      const Connection* conn) {
  require_base(tc, f);
  require_valence(f, Valence::Endo);
  const std::size_t m = tc.base_dim();
  const std::size_t dim = 2 * m;
  std::vector<Poly> out(dim * dim, Poly(tc.total().coords()));
  auto at = [&](std::size_t i, std::size_t j) -> Poly& { return out[i * dim + j]; };
  std::vector<Poly> lifted(m * m);
  for (std::size_t i = 0; i < m * m; ++i) lifted[i] = tc.to_total(f.components()[i]);

  switch (kind) {
    case LiftKind::Vertical:
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) at(m + i, j) = lifted[i * m + j];
      }
      break;
    case LiftKind::Complete:
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
          at(i, j) = lifted[i * m + j];
          at(m + i, m + j) = lifted[i * m + j];
          at(m + i, j) = tc.fiber_derivative(f(i, j));
        }
      }
      break;
    case LiftKind::Horizontal: {
      const std::vector<Poly> n = contracted_connection(tc, require_connection(tc, conn));
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
          at(i, j) = lifted[i * m + j];
          at(m + i, m + j) = lifted[i * m + j];
          // B = F N - N F
          Poly b(tc.total().coords());
          for (std::size_t s = 0; s < m; ++s) {
            if (!lifted[i * m + s].is_zero() && !n[s * m + j].is_zero()) {
              b += lifted[i * m + s] * n[s * m + j];
            }
            if (!n[i * m + s].is_zero() && !lifted[s * m + j].is_zero()) {
              b -= n[i * m + s] * lifted[s * m + j];
            }
          }
          at(m + i, j) = std::move(b);
        }
      }
      break;
    }
  }
  return TensorField::endo(tc.total(), std::move(out));
}

TensorField lift(const TangentChart& tc, const TensorField& t, LiftKind kind, const Connection* conn) {
  switch (t.valence()) {
    case Valence::Scalar: return lift_function(tc, t, kind);
    case Valence::Vector: return lift_vector(tc, t, kind, conn);
    case Valence::OneForm: return lift_oneform(tc, t, kind, conn);
    case Valence::Endo: return lift_endo(tc, t, kind, conn);
    case Valence::Bilinear: break;
  }
  throw Error(ErrorCode::Unsupported, "lifts of (0,2) fields are not provided");
}

}  // namespace tanlift::lift
