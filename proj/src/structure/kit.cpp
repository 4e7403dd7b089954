#include "structure/kit.hpp"

#include <algorithm>

#include "common/error.hpp"

namespace tanlift::structure {

using algebra::EpsComplex;
using algebra::Poly;
using algebra::PolyMatrix;
using algebra::Rational;
using tensor::Valence;

namespace {

constexpr std::size_t kRankSamples = 3;
constexpr std::size_t kDefinitenessSamples = 4;

std::string idx(std::size_t a) { return std::to_string(a + 1); }

std::vector<std::string> block_names(const std::string& stem, int count) {
  if (count == 1) return {stem};
  std::vector<std::string> out;
  for (int i = 1; i <= count; ++i) out.push_back(stem + std::to_string(i));
  return out;
}

std::vector<tensor::Point> sample_points(const Chart& chart, std::uint64_t seed, std::size_t count) {
  tensor::PointSampler sampler(seed);
  std::vector<tensor::Point> pts;
  for (std::size_t i = 0; i < count; ++i) pts.push_back(sampler.next(chart));
  return pts;
}

Poly random_poly(const Chart& chart, std::mt19937_64& rng, int max_degree) {
  const std::size_t terms = 1 + rng() % 2;
  Poly p(chart.coords());
  for (std::size_t t = 0; t < terms; ++t) {
    static constexpr int kCoefs[] = {-2, -1, 1, 2};
    Poly term(Rational(kCoefs[rng() % 4]), chart.coords());
    const int degree = static_cast<int>(rng() % (max_degree + 1));
    for (int d = 0; d < degree; ++d) {
      term *= Poly::variable(chart.coords(), static_cast<std::size_t>(rng() % chart.dim()));
    }
    p += term;
  }
  if (p.is_zero()) p = Poly(Rational(1), chart.coords());
  return p;
}

}  // namespace

SquareRule square_rule(AxiomSystem system, AxiomMode mode, int epsilon, Signature signature) {
  const bool riemannian = signature == Signature::Riemannian;
  if (mode == AxiomMode::Consistent) {
    const int sum = riemannian ? -epsilon : epsilon;
    return {epsilon, sum,
            riemannian ? "eps*(I - sum_a xi_a (x) eta^a)" : "eps*(I + sum_a xi_a (x) eta^a)",
            "consistent"};
  }
  if (system == AxiomSystem::RContact) {
    return riemannian ? SquareRule{epsilon, 1, "eps*I + sum_a xi_a (x) eta^a", "(1.9)"}
                      : SquareRule{epsilon, -1, "eps*I - sum_a xi_a (x) eta^a", "(1.13)"};
  }
  return riemannian ? SquareRule{epsilon, -1, "eps*I - xi (x) eta", "(1.6)"}
                    : SquareRule{epsilon, 1, "eps*I + xi (x) eta", "(1.10)"};
}

CheckReport check_axioms(const RContactStructure& s, AxiomMode mode, AxiomSystem system,
                         std::uint64_t seed) {
  s.validate();
  if (system == AxiomSystem::Contact && s.r != 1) {
    throw Error(ErrorCode::InvalidArgument, "the contact axiom system needs r = 1");
  }
  const bool riemannian = s.signature == Signature::Riemannian;
  const int kappa = pairing_sign(s.signature);
  const SquareRule rule = square_rule(system, mode, s.epsilon, s.signature);
  std::string pair_tag;
  std::string action_tag;
  if (system == AxiomSystem::RContact) {
    pair_tag = action_tag = riemannian ? "(1.9)" : "(1.13)";
  } else {
    pair_tag = riemannian ? "(1.6)" : "(1.10)";
    action_tag = riemannian ? "(1.7)" : "(1.11)";
  }

  CheckReport report;
  report.seed = seed;
  for (std::size_t a = 0; a < s.eta.size(); ++a) {
    for (std::size_t b = 0; b < s.xi.size(); ++b) {
      TensorField expected = TensorField::scalar(s.chart, Poly(a == b ? kappa : 0, s.chart.coords()));
      report.add("eta^" + idx(a) + "(xi_" + idx(b) + ") - kappa*delta", pair_tag,
                 tensor::oneform_apply(s.eta[a], s.xi[b]) - expected);
    }
  }
  for (std::size_t a = 0; a < s.xi.size(); ++a) {
    report.add("F(xi_" + idx(a) + ")", action_tag, tensor::endo_apply(s.F, s.xi[a]));
  }
  for (std::size_t a = 0; a < s.eta.size(); ++a) {
    report.add("eta^" + idx(a) + " o F", action_tag, tensor::oneform_compose(s.eta[a], s.F));
  }
  const TensorField rhs = TensorField::identity(s.chart).scaled(rule.identity_coef) +
                          s.xi_eta_sum().scaled(rule.sum_coef);
  report.add("F^2 - (" + rule.text + ")", rule.tag, tensor::endo_compose(s.F, s.F) - rhs);

  const auto pts = sample_points(s.chart, seed, kRankSamples);
  const std::size_t rank = tensor::rank_at(s.F, pts);
  report.notes.push_back("generic rank(F) >= " + std::to_string(rank) + " from " +
                         std::to_string(pts.size()) + " sampled points; dim - r = " +
                         std::to_string(s.chart.dim() - s.xi.size()));

  const LintResult lint = consistency_lint(system, mode, s.epsilon, s.signature);
  report.notes.insert(report.notes.end(), lint.notes.begin(), lint.notes.end());
  return report;
}

CheckReport check_metric(const RContactStructure& s, std::uint64_t seed) {
  s.validate();
  if (!s.metric) throw Error(ErrorCode::MissingMetric, "structure has no metric");
  const TensorField& g = *s.metric;
  const bool riemannian = s.signature == Signature::Riemannian;

  TensorField eta_eta = TensorField::zero(s.chart, Valence::Bilinear);
  for (const TensorField& e : s.eta) eta_eta = eta_eta + tensor::form_outer(e, e);

  CheckReport report;
  report.seed = seed;
  const TensorField pulled = tensor::metric_pullback(g, s.F);
  if (riemannian) {
    report.add("G(FX,FY) - G(X,Y) + sum_a eta^a(X) eta^a(Y)", "(1.8)", pulled - g + eta_eta);
    for (std::size_t a = 0; a < s.xi.size(); ++a) {
      report.add("eta^" + idx(a) + " - G(xi_" + idx(a) + ", .)", "(1.8)",
                 s.eta[a] - tensor::bilinear_contract_first(g, s.xi[a]));
    }
    bool definite = true;
    for (const tensor::Point& p : sample_points(s.chart, seed, kDefinitenessSamples)) {
      const auto minors = tensor::leading_minors(g, p);
      if (std::any_of(minors.begin(), minors.end(), [](const Rational& m) { return sgn(m) <= 0; })) {
        report.notes.push_back("G is not positive definite at " + p.str());
        definite = false;
        break;
      }
    }
    if (definite) {
      report.notes.push_back("G positive definite at " + std::to_string(kDefinitenessSamples) +
                             " sampled points (leading principal minors)");
    }
  } else {
    report.add("G(FX,FY) - G(X,Y) - sum_a eta^a(X) eta^a(Y)", "(1.12)", pulled - g - eta_eta);
  }
  return report;
}

RContactStructure canonical_structure(int n, int r, int epsilon, Signature signature) {
  if (n < 0 || r < 0) throw Error(ErrorCode::InvalidArgument, "n and r must be non-negative");
  if (epsilon != -1 && epsilon != 1) throw Error(ErrorCode::InvalidArgument, "epsilon must be -1 or +1");
  std::vector<std::string> coords;
  for (auto block : {block_names("a", n), block_names("b", n), block_names("c", r)}) {
    coords.insert(coords.end(), block.begin(), block.end());
  }
  RContactStructure s;
  s.chart = Chart("M", std::move(coords));
  s.n = n;
  s.r = r;
  s.epsilon = epsilon;
  s.signature = signature;
  const std::size_t dim = s.chart.dim();
  const auto un = static_cast<std::size_t>(n);
  PolyMatrix f(dim, dim, s.chart.coords());
  PolyMatrix g = PolyMatrix::identity(dim, s.chart.coords());
  for (std::size_t i = 0; i < un; ++i) {
    f(un + i, i) = Poly(Rational(1), s.chart.coords());
    f(i, un + i) = Poly(Rational(epsilon), s.chart.coords());
  }
  const int sign = pairing_sign(signature);
  for (std::size_t a = 0; a < static_cast<std::size_t>(r); ++a) {
    const std::size_t c = 2 * un + a;
    s.xi.push_back(TensorField::coordinate_vector(s.chart, c));
    s.eta.push_back(TensorField::coordinate_form(s.chart, c).scaled(sign));
    g(c, c) = Poly(Rational(sign), s.chart.coords());
  }
  s.F = TensorField::endo(s.chart, f);
  s.metric = TensorField::bilinear(s.chart, g.entries());
  return s;
}

RContactStructure conjugate_structure(const RContactStructure& s, const PolyMatrix& u) {
  s.validate();
  const std::size_t dim = s.chart.dim();
  if (u.rows() != dim || u.cols() != dim) {
    throw Error(ErrorCode::NotUnimodular, "conjugating matrix does not match the chart dimension");
  }
  const PolyMatrix inv = algebra::unimodular_inverse(u);
  RContactStructure out = s;
  out.F = TensorField::endo(s.chart, u * s.F.matrix() * inv);
  for (std::size_t a = 0; a < s.xi.size(); ++a) {
    PolyMatrix col(dim, 1, s.xi[a].components());
    out.xi[a] = TensorField::vector(s.chart, (u * col).entries());
    PolyMatrix row(1, dim, s.eta[a].components());
    out.eta[a] = TensorField::one_form(s.chart, (row * inv).entries());
  }
  if (s.metric) {
    out.metric = TensorField::bilinear(s.chart, (inv.transpose() * s.metric->matrix() * inv).entries());
  }
  return out;
}

PolyMatrix random_unimodular(const Chart& chart, std::mt19937_64& rng, int max_shears, int max_degree) {
  const std::size_t dim = chart.dim();
  PolyMatrix u = PolyMatrix::identity(dim, chart.coords());
  if (dim < 2 || max_shears < 1) return u;
  const int count = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_shears));
  for (int k = 0; k < count; ++k) {
    const std::size_t row = rng() % dim;
    std::size_t col = rng() % (dim - 1);
    if (col >= row) ++col;
    u = u * algebra::shear(dim, row, col, random_poly(chart, rng, max_degree), chart.coords());
  }
  return u;
}

LintResult consistency_lint(AxiomSystem system, AxiomMode mode, int epsilon, Signature signature) {
  LintResult out;
  out.system = system;
  out.mode = mode;
  out.signature = signature;
  out.epsilon = epsilon;
  const algebra::VarsPtr symbol = algebra::make_vars({"eps"});
  const Poly eps = Poly::variable(symbol, 0);
  const int kappa = pairing_sign(signature);
  const bool riemannian = signature == Signature::Riemannian;

  Poly sigma(symbol);
  if (mode == AxiomMode::Consistent) {
    sigma = riemannian ? -eps : eps;
  } else {
    // Sign fixed by the system: see square_rule.
    sigma = Poly(Rational(square_rule(system, mode, epsilon, signature).sum_coef), symbol);
  }
  out.obstruction = eps + sigma.scaled(kappa);
  out.satisfiable_for_all = out.obstruction.is_zero();
  if (!out.satisfiable_for_all && out.obstruction.total_degree() == 1) {
    const Rational slope = out.obstruction.diff(std::size_t{0}).constant_value();
    const Rational offset = out.obstruction.eval(std::vector<Rational>{Rational(0)});
    const Rational root = -offset / slope;
    if (root == 1 || root == -1) out.forced_epsilon = static_cast<int>(root.get_num().get_si());
  }
  out.consistent = sgn(out.obstruction.eval(std::vector<Rational>{Rational(epsilon)})) == 0;

  const SquareRule rule = square_rule(system, mode, epsilon, signature);
  const std::string where = std::string(to_string(mode)) + " " + to_string(system) + " " +
                            to_string(signature) + " axioms " + rule.tag;
  out.notes.push_back("lint: applying F^2 = " + rule.text + " to xi_b with F(xi_b) = 0 gives (" +
                      out.obstruction.str() + ") xi_b = 0");
  if (out.satisfiable_for_all) {
    out.notes.push_back("lint: " + where + " are satisfiable for eps = -1 and eps = +1");
  } else if (out.forced_epsilon) {
    out.notes.push_back("lint: " + where + " force eps = " + std::to_string(*out.forced_epsilon));
  } else {
    out.notes.push_back("lint: " + where + " are unsatisfiable for every eps");
  }
  if (!out.consistent) {
    out.notes.push_back(std::string("lint: inconsistent at eps = ") + std::to_string(epsilon) +
                        "; the consistent rewrite F^2 = " +
                        square_rule(system, AxiomMode::Consistent, epsilon, signature).text +
                        " holds for both eps");
  }
  return out;
}

bool ComplexStructureReport::passed() const {
  return square_residual.is_zero() && dual_square_residual.is_zero() &&
         std::all_of(eigen.begin(), eigen.end(), [](const EigenCheck& e) { return e.holds; });
}

ComplexStructureReport canonical_complex(int n, int epsilon) {
  std::vector<std::string> coords = block_names("x", n);
  std::vector<std::string> ys = block_names("y", n);
  coords.insert(coords.end(), ys.begin(), ys.end());
  return canonical_complex(Chart("C", std::move(coords)), epsilon);
}

ComplexStructureReport canonical_complex(const Chart& chart, int epsilon) {
  if (chart.dim() % 2 != 0) {
    throw Error(ErrorCode::OddDimension, "chart '" + chart.name() + "' has odd dimension " +
                                             std::to_string(chart.dim()));
  }
  if (epsilon != -1 && epsilon != 1) throw Error(ErrorCode::InvalidArgument, "epsilon must be -1 or +1");
  const std::size_t n = chart.dim() / 2;
  const std::size_t dim = chart.dim();
  PolyMatrix j(dim, dim, chart.coords());
  for (std::size_t i = 0; i < n; ++i) {
    j(n + i, i) = Poly(Rational(1), chart.coords());
    j(i, n + i) = Poly(Rational(epsilon), chart.coords());
  }
  ComplexStructureReport out;
  out.J = TensorField::endo(chart, j);
  const TensorField eps_id = TensorField::identity(chart).scaled(epsilon);
  out.square_residual = tensor::endo_compose(out.J, out.J) - eps_id;
  const TensorField dual = tensor::endo_transpose(out.J);
  out.dual_square_residual = tensor::endo_compose(dual, dual) - eps_id;

  // Components are constant; any point will do.
  const tensor::Point origin = tensor::make_point(chart, std::vector<Rational>(dim, Rational(0)));
  const std::vector<Rational> jv = tensor::evaluate(out.J, origin);
  const EpsComplex zero(0, 0, epsilon);
  const EpsComplex i_unit = EpsComplex::unit(epsilon);
  for (std::size_t k = 0; k < n; ++k) {
    for (int sign : {-1, 1}) {
      // 1/2 (d/dx^k + sign*i d/dy^k), expected eigenvalue sign*i*eps.
      std::vector<EpsComplex> v(dim, zero);
      v[k] = EpsComplex(Rational(1, 2), 0, epsilon);
      v[n + k] = EpsComplex(0, Rational(sign, 2), epsilon);
      std::vector<EpsComplex> image(dim, zero);
      for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < dim; ++c) image[r] = image[r] + jv[r * dim + c] * v[c];
      }
      const EpsComplex lambda = EpsComplex(0, sign * epsilon, epsilon);
      bool holds = true;
      for (std::size_t r = 0; r < dim; ++r) holds = holds && image[r] == lambda * v[r];
      const std::string sep = sign < 0 ? " - " : " + ";
      out.eigen.push_back(EigenCheck{"1/2(d/d" + chart.coord(k) + sep + "i d/d" + chart.coord(n + k) + ")",
                                     k, lambda, holds, lambda * lambda});
    }
  }
  return out;
}

}  // namespace tanlift::structure
