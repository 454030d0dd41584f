#pragma once

#include <vector>

#include "sharp/dense.hpp"
#include "sharp/polynomial.hpp"
#include "sharp/series.hpp"
#include "sharp/star_product.hpp"

namespace sharp {

/// Exact symmetric matrix; the coefficient matrix of a quadratic form.
class SymMatrix {
 public:
  /// Throws PreconditionError unless `m` is square and symmetric.
  explicit SymMatrix(GMatrix m);
  static SymMatrix zero(Eigen::Index size) { return SymMatrix(GMatrix::Zero(size, size)); }

  const GMatrix& matrix() const { return m_; }
  Eigen::Index size() const { return m_.rows(); }

 private:
  GMatrix m_;
};

/// Coefficients of a power series in t whose coefficients are polynomials;
/// entry k multiplies t^k.
using PolySeries = std::vector<HomPoly>;

/// F(t) = g(t) exp((1/mu) Q(t)[Z]).
struct ExpAnsatz {
  ScalarSeries amplitude;
  MatrixSeries phase;
};

/// Z A Z^T as a homogeneous quadratic.
HomPoly quad_form(const GMatrix& a);
HomPoly quad_form(const SymMatrix& a);

/// sum_{k<=order} t^k/k! exponent^{#k}.
PolySeries star_exp_series(const StarContext& ctx, const HomPoly& exponent, int order);

/// Brute-force star exponential of (1/mu) A[Z].
PolySeries star_exp_series(const StarContext& ctx, const SymMatrix& a, int order);

/// (1 - X)(1 + X)^{-1}. Throws PreconditionError when 1 + X is singular.
GMatrix cayley(const GMatrix& x);
MatrixSeries cayley(const MatrixSeries& x);

/// Solves dq/dt = (1 + q) a (1 - q), q(0) = b, through C(q) = exp(-2at) C(b).
MatrixSeries riccati_solve(const GMatrix& a, const GMatrix& b, int order);

/// det^{-1/2}((exp(at)(1 + b) + exp(-at)(1 - b)) / 2) on the binomial branch.
ScalarSeries amplitude_solve(const GMatrix& a, const GMatrix& b, int order);

/// dq/dt - (1 + q) a (1 - q), through order(q) - 1.
MatrixSeries riccati_residual(const GMatrix& a, const MatrixSeries& q);

/// dg/dt + (1/2) tr(a q) g.
ScalarSeries amplitude_residual(const GMatrix& a, const MatrixSeries& q, const ScalarSeries& g);

/// d/dt C(q) + 2 a C(q): vanishes exactly when q solves the Riccati flow.
MatrixSeries cayley_flow_residual(const GMatrix& a, const MatrixSeries& q);

/// Right-hand side of the phase equation read off from the mu^{-1} part of
/// (1/mu) A[Z] # exp((1/mu) Q[Z]):  A + A Lambda Q - Q Lambda A - Q Lambda A Lambda Q.
GMatrix phase_rhs(const PoissonMatrix& lambda, const GMatrix& a, const GMatrix& q);

MatrixSeries phase_residual(const PoissonMatrix& lambda, const SymMatrix& a, const MatrixSeries& q);

/// Amplitude equation on the ansatz: g' + (1/2) tr(Lambda A Lambda Q) g.
ScalarSeries ansatz_amplitude_residual(const PoissonMatrix& lambda, const SymMatrix& a, const ExpAnsatz& f);

/// Closed form of exp_#(t (1/mu) A[Z]) # exp((1/mu) B[Z]) as an ansatz.
/// Requires an invertible Lambda and det(1 - Lambda B) != 0.
ExpAnsatz star_exp_closed_form(const StarContext& ctx, const SymMatrix& a, const SymMatrix& b, int order);

/// Expands g(t) exp((1/mu) Q(t)[Z]) in t. Requires Q(0) = 0.
PolySeries expand_ansatz(const ExpAnsatz& f, std::size_t nvars);

/// R with f # (P exp((1/mu) Q[Z])) = R exp((1/mu) Q[Z]).
HomPoly star_with_gaussian(const StarContext& ctx, const HomPoly& f, const HomPoly& prefactor, const GMatrix& q);

/// dF/dt - (1/mu) A[Z] # F, order by order; entry k is the t^k residual,
/// k = 0 .. F.size() - 2.
PolySeries evolution_residual(const StarContext& ctx, const PolySeries& f, const SymMatrix& a);

bool is_symplectic(const GMatrix& g, const PoissonMatrix& lambda);

/// exp(2i a t) = C(-i tan(a t)) and exp(-2 a t) = C(-i tan(i a t)) through order.
bool cayley_exp_tan_identity(const GMatrix& a, int order);

/// For g = exp(2i a t): log g = 2i arctan(i C(g)) = 2i a t through order.
bool cayley_log_arctan_identity(const GMatrix& a, int order);

bool cayley_identity_checks(const GMatrix& a, int order);

/// q = riccati_solve(a, b) has zero Riccati residual and zero Cayley-flow residual.
bool cayley_flow_equivalence(const GMatrix& a, const GMatrix& b, int order);

}  // namespace sharp
