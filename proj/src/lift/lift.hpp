#pragma once

#include <string>
#include <vector>

#include "tensor/tensor_field.hpp"

namespace tanlift::lift {

using tensor::Chart;
using tensor::Poly;
using tensor::TensorField;
using tensor::Valence;

enum class LiftKind { Vertical, Complete, Horizontal };

const char* to_string(LiftKind k);
/// One-letter superscript used in identity names: v, c or h.
const char* superscript(LiftKind k);

inline constexpr const char* kDefaultFiberSuffix = "dot";

/// Induced chart (x^i, y^i) on the tangent bundle of a base chart. Fiber
/// coordinate names are the base names with a fixed suffix appended.
class TangentChart {
 public:
  explicit TangentChart(const Chart& base, std::string suffix = kDefaultFiberSuffix);

  const Chart& base() const { return base_; }
  const Chart& total() const { return total_; }
  const std::string& suffix() const { return suffix_; }
  std::size_t base_dim() const { return base_.dim(); }

  /// A base-chart polynomial re-read on the total chart (constant in fibers).
  Poly to_total(const Poly& p) const;
  /// The fiber coordinate y^i as a polynomial on the total chart.
  const Poly& fiber(std::size_t i) const { return fibers_[i]; }
  /// y^k d_k p for a base polynomial p, on the total chart.
  Poly fiber_derivative(const Poly& p) const;

 private:
  Chart base_;
  Chart total_;
  std::string suffix_;
  std::vector<Poly> fibers_;
};

/// Affine connection coefficients Gamma^i_{jk}; i is the upper index.
class Connection {
 public:
  explicit Connection(Chart chart, bool symmetric = true);

  static Connection flat(const Chart& chart) { return Connection(chart); }

  const Chart& chart() const { return chart_; }
  bool symmetric() const { return symmetric_; }
  const Poly& operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return gamma_[(i * dim() + j) * dim() + k];
  }
  /// Sets Gamma^i_{jk}; a symmetric connection also sets Gamma^i_{kj}.
  void set(std::size_t i, std::size_t j, std::size_t k, const Poly& value);
  bool is_flat() const;
  std::size_t dim() const { return chart_.dim(); }

  friend bool operator==(const Connection& a, const Connection& b);

 private:
  Chart chart_;
  bool symmetric_;
  std::vector<Poly> gamma_;
};

TensorField lift_function(const TangentChart& tc, const TensorField& f, LiftKind kind);
TensorField lift_vector(const TangentChart& tc, const TensorField& x, LiftKind kind,
                        const Connection* conn = nullptr);
TensorField lift_oneform(const TangentChart& tc, const TensorField& w, LiftKind kind,
                         const Connection* conn = nullptr);
TensorField lift_endo(const TangentChart& tc, const TensorField& f, LiftKind kind,
                      const Connection* conn = nullptr);

/// Dispatches on the field's valence; (0,2) fields are not liftable.
TensorField lift(const TangentChart& tc, const TensorField& t, LiftKind kind,
                 const Connection* conn = nullptr);

}  // namespace tanlift::lift
