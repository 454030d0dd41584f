#include "sharp/quad_exp.hpp"

#include <climits>
#include <map>

namespace sharp {

SymMatrix::SymMatrix(GMatrix m) : m_(std::move(m)) {
  if (!is_symmetric(m_)) throw PreconditionError("matrix must be square and symmetric");
}

HomPoly quad_form(const GMatrix& a) {
  if (a.rows() != a.cols()) throw DimensionError("quadratic form needs a square matrix");
  const auto n = static_cast<std::size_t>(a.rows());
  HomPoly p(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (a(i, j).is_zero()) continue;
      Monomial m(n);
      ++m[i];
      ++m[j];
      p.add_term(m, MuScalar(a(i, j)));
    }
  return p;
}

HomPoly quad_form(const SymMatrix& a) { return quad_form(a.matrix()); }

PolySeries star_exp_series(const StarContext& ctx, const HomPoly& exponent, int order) {
  if (order < 0) throw PreconditionError("series order must be non-negative");
  PolySeries out;
  out.push_back(HomPoly::constant(ctx.nvars(), MuScalar(1)));
  for (int k = 1; k <= order; ++k)
    out.push_back(star(ctx, exponent, out.back()).scaled(GaussRational(ratio(1, k))));
  return out;
}

PolySeries star_exp_series(const StarContext& ctx, const SymMatrix& a, int order) {
  if (static_cast<std::size_t>(a.size()) != ctx.nvars()) throw DimensionError("A does not match the ambient space");
  return star_exp_series(ctx, quad_form(a).scaled(MuScalar::mu(-1)), order);
}

GMatrix cayley(const GMatrix& x) {
  const GMatrix one = GMatrix::Identity(x.rows(), x.cols());
  const GMatrix plus = one + x;
  if (!is_invertible(plus)) throw PreconditionError("Cayley transform: 1 + X is singular");
  return (one - x) * exact_inverse(plus);
}

MatrixSeries cayley(const MatrixSeries& x) {
  const auto one = MatrixSeries::constant(x.one_coeff(), x.order());
  if (!is_invertible(GMatrix(one[0] + x[0]))) throw PreconditionError("Cayley transform: 1 + X(0) is singular");
  return (one - x) * inverse(one + x);
}

namespace {

void require_square_pair(const GMatrix& a, const GMatrix& b) {
  if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows())
    throw DimensionError("a and b must be square of equal size");
}

}  // namespace

MatrixSeries riccati_solve(const GMatrix& a, const GMatrix& b, int order) {
  require_square_pair(a, b);
  const GMatrix cb = cayley(b);
  const MatrixSeries flow = exp(MatrixSeries::linear(GMatrix(a * GaussRational(-2)), order));
  return cayley(flow * cb);
}

ScalarSeries amplitude_solve(const GMatrix& a, const GMatrix& b, int order) {
  require_square_pair(a, b);
  const GMatrix one = GMatrix::Identity(a.rows(), a.cols());
  if (!is_invertible(GMatrix(one + b))) throw PreconditionError("1 + b is singular");
  const MatrixSeries at = MatrixSeries::linear(a, order);
  const MatrixSeries m =
      (exp(at) * GMatrix(one + b) + exp(-at) * GMatrix(one - b)).scaled(GaussRational(ratio(1, 2)));
  return pow(determinant(m), ratio(-1, 2));
}

MatrixSeries riccati_residual(const GMatrix& a, const MatrixSeries& q) {
  const auto one = MatrixSeries::constant(q.one_coeff(), q.order());
  const MatrixSeries rhs = (one + q) * a * (one - q);
  return q.derivative() - rhs.truncated(q.order() - 1);
}

ScalarSeries amplitude_residual(const GMatrix& a, const MatrixSeries& q, const ScalarSeries& g) {
  const ScalarSeries tr = trace(a * q).scaled(GaussRational(ratio(1, 2)));
  return g.derivative() + (tr * g).truncated(g.order() - 1);
}

MatrixSeries cayley_flow_residual(const GMatrix& a, const MatrixSeries& q) {
  const MatrixSeries c = cayley(q);
  return c.derivative() + (a * c).scaled(GaussRational(2)).truncated(q.order() - 1);
}

GMatrix phase_rhs(const PoissonMatrix& lambda, const GMatrix& a, const GMatrix& q) {
  const GMatrix& l = lambda.matrix();
  return a + a * l * q - q * l * a - q * l * a * l * q;
}

MatrixSeries phase_residual(const PoissonMatrix& lambda, const SymMatrix& a, const MatrixSeries& q) {
  const GMatrix& l = lambda.matrix();
  const GMatrix& am = a.matrix();
  const auto a_const = MatrixSeries::constant(am, q.order());
  const MatrixSeries rhs = a_const + am * l * q - q * GMatrix(l * am) - q * GMatrix(l * am * l) * q;
  return q.derivative() - rhs.truncated(q.order() - 1);
}

ScalarSeries ansatz_amplitude_residual(const PoissonMatrix& lambda, const SymMatrix& a, const ExpAnsatz& f) {
  const GMatrix la = lambda.matrix() * a.matrix();
  return amplitude_residual(la, lambda.matrix() * f.phase, f.amplitude);
}

ExpAnsatz star_exp_closed_form(const StarContext& ctx, const SymMatrix& a, const SymMatrix& b, int order) {
  const auto n = static_cast<Eigen::Index>(ctx.nvars());
  if (a.size() != n || b.size() != n) throw DimensionError("A, B do not match the ambient space");
  if (!ctx.lambda().is_invertible()) throw PreconditionError("closed form needs an invertible Lambda");
  const GMatrix& l = ctx.lambda().matrix();
  const GMatrix la = l * a.matrix();
  const GMatrix lb = l * b.matrix();
  if (!is_invertible(GMatrix(GMatrix::Identity(n, n) - lb)))
    throw PreconditionError("closed form needs det(1 - Lambda B) != 0");

  // With the product oriented as f # g = f g + (mu/2) Lambda^{ab} d_a f d_b g + ...,
  // Lambda Q obeys (Lambda Q)' = (1 - Lambda Q) a (1 + Lambda Q); -Lambda Q solves the
  // Cayley-linearised flow with (a, b) -> (-a, -b).
  const MatrixSeries flipped = riccati_solve(-la, -lb, order);
  const MatrixSeries phase = GMatrix(-exact_inverse(l)) * flipped;
  for (const auto& c : phase.coefficients())
    if (!is_symmetric(c)) throw PreconditionError("closed-form phase lost symmetry");
  return {amplitude_solve(-la, -lb, order), phase};
}

PolySeries expand_ansatz(const ExpAnsatz& f, std::size_t nvars) {
  const int order = std::min(f.amplitude.order(), f.phase.order());
  if (!is_zero_matrix(f.phase[0]))
    throw PreconditionError("ansatz with Q(0) != 0 is not polynomial in Z order by order");
  const MuScalar inv_mu = MuScalar::mu(-1);
  std::vector<HomPoly> p;  // p[j] = Q_j[Z] / mu
  for (int j = 0; j <= order; ++j) p.push_back(quad_form(f.phase[j]).scaled(inv_mu));

  // E = exp(P): E_0 = 1, k E_k = sum_j j P_j E_{k-j}
  PolySeries e{HomPoly::constant(nvars, MuScalar(1))};
  for (int k = 1; k <= order; ++k) {
    HomPoly acc(nvars);
    for (int j = 1; j <= k; ++j)
      if (!p[j].is_zero()) acc += (p[j] * e[k - j]).scaled(GaussRational(j));
    e.push_back(acc.scaled(GaussRational(ratio(1, k))));
  }

  PolySeries out;
  for (int k = 0; k <= order; ++k) {
    HomPoly acc(nvars);
    for (int i = 0; i <= k; ++i)
      if (!f.amplitude[i].is_zero()) acc += e[k - i].scaled(f.amplitude[i]);
    out.push_back(std::move(acc));
  }
  return out;
}

HomPoly star_with_gaussian(const StarContext& ctx, const HomPoly& f, const HomPoly& prefactor, const GMatrix& q) {
  const std::size_t n = ctx.nvars();
  if (f.nvars() != n || prefactor.nvars() != n || static_cast<std::size_t>(q.rows()) != n)
    throw DimensionError("operands do not match the ambient space");
  const HomPoly phi = quad_form(q).scaled(MuScalar::mu(-1));
  std::vector<HomPoly> grad_phi;
  for (std::size_t j = 0; j < n; ++j) grad_phi.push_back(partial(phi, j));

  // d^gamma (P e^phi) = P_gamma e^phi with P_{gamma + e_j} = d_j P_gamma + P_gamma d_j phi.
  std::map<std::vector<int>, HomPoly> cache;
  cache.emplace(std::vector<int>(n, 0), prefactor);
  std::function<const HomPoly&(const std::vector<int>&)> right = [&](const std::vector<int>& gamma) -> const HomPoly& {
    auto it = cache.find(gamma);
    if (it != cache.end()) return it->second;
    std::size_t j = 0;
    while (gamma[j] == 0) ++j;
    std::vector<int> lower = gamma;
    --lower[j];
    const HomPoly& base = right(lower);
    HomPoly next = partial(base, j) + base * grad_phi[j];
    return cache.emplace(gamma, std::move(next)).first->second;
  };

  HomPoly result(n);
  const std::vector<int> unbounded(n, INT_MAX);
  for (int k = 0; k <= f.degree(); ++k) {
    HomPoly sum(n);
    for_each_contraction(ctx.lambda(), k, f.max_exponents(), unbounded, [&](const Contraction& c) {
      const HomPoly left = derivative(f, c.left);
      if (left.is_zero()) return;
      sum += (left * right(c.right)).scaled(c.weight);
    });
    mpz_class two_k = 1;
    two_k <<= k;
    result += sum.scaled(MuScalar::term(GaussRational(Rational(1) / Rational(two_k)), k));
  }
  return result;
}

PolySeries evolution_residual(const StarContext& ctx, const PolySeries& f, const SymMatrix& a) {
  const HomPoly generator = quad_form(a).scaled(MuScalar::mu(-1));
  PolySeries out;
  for (std::size_t k = 0; k + 1 < f.size(); ++k)
    out.push_back(f[k + 1].scaled(GaussRational(long(k + 1))) - star(ctx, generator, f[k]));
  return out;
}

bool is_symplectic(const GMatrix& g, const PoissonMatrix& lambda) {
  return GMatrix(g.transpose() * lambda.matrix() * g) == lambda.matrix();
}

bool cayley_exp_tan_identity(const GMatrix& a, int order) {
  const GaussRational i = GaussRational::i();
  const MatrixSeries x = MatrixSeries::linear(a, order);
  const bool circular = exp(x.scaled(GaussRational(2) * i)) == cayley(tan(x).scaled(-i));
  const bool hyperbolic = exp(x.scaled(GaussRational(-2))) == cayley(tan(x.scaled(i)).scaled(-i));
  return circular && hyperbolic;
}

bool cayley_log_arctan_identity(const GMatrix& a, int order) {
  const GaussRational i = GaussRational::i();
  const GaussRational two_i = GaussRational(2) * i;
  const MatrixSeries x = MatrixSeries::linear(a, order);
  const MatrixSeries g = exp(x.scaled(two_i));
  const MatrixSeries via_arctan = atan(cayley(g).scaled(i)).scaled(two_i);
  return log(g) == via_arctan && via_arctan == x.scaled(two_i);
}

bool cayley_identity_checks(const GMatrix& a, int order) {
  return cayley_exp_tan_identity(a, order) && cayley_log_arctan_identity(a, order);
}

bool cayley_flow_equivalence(const GMatrix& a, const GMatrix& b, int order) {
  const MatrixSeries q = riccati_solve(a, b, order);
  return q[0] == b && riccati_residual(a, q).is_zero() && cayley_flow_residual(a, q).is_zero();
}

}  // namespace sharp
