#include "structure/structure.hpp"

#include "common/error.hpp"

namespace tanlift::structure {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::InvalidArgument, what);
}

}  // namespace

const char* to_string(Signature s) {
  return s == Signature::Riemannian ? "riemannian" : "lorentzian";
}

const char* to_string(AxiomMode m) {
  return m == AxiomMode::PaperLiteral ? "paper-literal" : "consistent";
}

const char* to_string(AxiomSystem s) { return s == AxiomSystem::RContact ? "r-contact" : "contact"; }

void RContactStructure::validate() const {
  require(epsilon == -1 || epsilon == 1, "epsilon must be -1 or +1");
  require(n >= 0 && r >= 0, "n and r must be non-negative");
  require(chart.dim() == static_cast<std::size_t>(2 * n + r),
          "chart dimension " + std::to_string(chart.dim()) + " is not 2n + r = " +
              std::to_string(2 * n + r));
  require(F.valence() == tensor::Valence::Endo && F.chart() == chart, "F must be a (1,1) field on the chart");
  require(xi.size() == static_cast<std::size_t>(r), "expected " + std::to_string(r) + " xi fields");
  require(eta.size() == static_cast<std::size_t>(r), "expected " + std::to_string(r) + " eta fields");
  for (const TensorField& x : xi) {
    require(x.valence() == tensor::Valence::Vector && x.chart() == chart, "xi must be vector fields on the chart");
  }
  for (const TensorField& e : eta) {
    require(e.valence() == tensor::Valence::OneForm && e.chart() == chart, "eta must be one-forms on the chart");
  }
  if (metric) {
    require(metric->valence() == tensor::Valence::Bilinear && metric->chart() == chart,
            "metric must be a (0,2) field on the chart");
  }
}

TensorField RContactStructure::xi_eta_sum() const {
  TensorField sum = TensorField::zero(chart, tensor::Valence::Endo);
  for (std::size_t a = 0; a < xi.size(); ++a) sum = sum + tensor::outer(xi[a], eta[a]);
  return sum;
}

}  // namespace tanlift::structure
