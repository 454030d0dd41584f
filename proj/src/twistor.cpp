#include "sharp/twistor.hpp"

namespace sharp {

std::vector<std::string> correspondence_var_names() { return {"x11", "x12", "x21", "x22", "pi1", "pi2"}; }

std::vector<std::string> twistor_var_names() { return {"z1", "z2", "z3", "z4"}; }

std::size_t x_slot(int alpha, int alpha_dot) {
  if (alpha < 1 || alpha > 2 || alpha_dot < 1 || alpha_dot > 2) throw DimensionError("spinor index must be 1 or 2");
  return static_cast<std::size_t>(2 * (alpha - 1) + (alpha_dot - 1));
}

std::size_t pi_slot(int alpha) {
  if (alpha < 1 || alpha > 2) throw DimensionError("spinor index must be 1 or 2");
  return static_cast<std::size_t>(3 + alpha);
}

IncidenceContext::IncidenceContext(GMatrix d) : d_(std::move(d)) {
  if (d_.rows() != 4 || !is_skew_symmetric(d_)) throw PreconditionError("D must be a 4x4 skew-symmetric matrix");
}

PoissonMatrix IncidenceContext::induced_poisson() const {
  GMatrix l = GMatrix::Zero(kTwistorSpaceVars, kTwistorSpaceVars);
  l.topLeftCorner(4, 4) = d_;
  return PoissonMatrix(std::move(l));
}

HomPoly dotted_coordinate(int alpha_dot) {
  HomPoly z(kTwistorSpaceVars);
  for (int alpha = 1; alpha <= 2; ++alpha) {
    Monomial m(kTwistorSpaceVars);
    m[x_slot(alpha, alpha_dot)] = 1;
    m[pi_slot(alpha)] = 1;
    z.add_term(m, MuScalar(1));
  }
  return z;
}

HomPoly incidence_pullback(const HomPoly& p) {
  if (p.nvars() != kTwistorVars) throw DimensionError("incidence pullback expects a polynomial in z1..z4");
  const std::vector<HomPoly> images = {dotted_coordinate(1), dotted_coordinate(2),
                                       HomPoly::variable(kTwistorSpaceVars, pi_slot(1)),
                                       HomPoly::variable(kTwistorSpaceVars, pi_slot(2))};
  HomPoly out(kTwistorSpaceVars);
  for (const auto& [m, c] : p.terms()) {
    HomPoly term = HomPoly::constant(kTwistorSpaceVars, c);
    for (std::size_t v = 0; v < kTwistorVars; ++v)
      for (int e = 0; e < m[v]; ++e) term *= images[v];
    out += term;
  }
  return out;
}

HomPoly twistor_commutator(const IncidenceContext& ctx, int alpha_dot, int beta_dot) {
  return commutator(ctx.star_context(), dotted_coordinate(alpha_dot), dotted_coordinate(beta_dot));
}

HomPoly expected_twistor_commutator(const IncidenceContext& ctx, int alpha_dot, int beta_dot) {
  HomPoly out(kTwistorSpaceVars);
  for (int alpha = 1; alpha <= 2; ++alpha)
    for (int beta = 1; beta <= 2; ++beta) {
      const GaussRational& d = ctx.d_matrix()(x_slot(alpha, alpha_dot), x_slot(beta, beta_dot));
      Monomial m(kTwistorSpaceVars);
      ++m[pi_slot(alpha)];
      ++m[pi_slot(beta)];
      out.add_term(m, MuScalar::term(d, 1));
    }
  return out;
}

bool twistor_commutator_check(const IncidenceContext& ctx) {
  for (int a = 1; a <= 2; ++a)
    for (int b = 1; b <= 2; ++b)
      if (twistor_commutator(ctx, a, b) != expected_twistor_commutator(ctx, a, b)) return false;
  return true;
}

PolySeries twistor_star_exp(const IncidenceContext& ctx, const SymMatrix& a, int order) {
  if (a.size() != 2) throw DimensionError("twistor quadratic must be 2x2 in z^{1'}, z^{2'}");
  GMatrix embedded = GMatrix::Zero(kTwistorVars, kTwistorVars);
  embedded.topLeftCorner(2, 2) = a.matrix();
  return twistor_star_exp(ctx, quad_form(embedded), order);
}

PolySeries twistor_star_exp(const IncidenceContext& ctx, const HomPoly& a, int order) {
  if (a.nvars() != kTwistorVars) throw DimensionError("twistor quadratic must live in z1..z4");
  if (!a.is_zero() && (!a.is_homogeneous() || a.degree() != 2))
    throw PreconditionError("twistor exponent must be homogeneous of degree 2");
  for (const auto& [m, c] : a.terms())
    if (m[2] != 0 || m[3] != 0) throw PreconditionError("twistor exponent may only involve z1, z2");
  const HomPoly exponent = incidence_pullback(a).scaled(MuScalar::mu(-1));
  return star_exp_series(ctx.star_context(), exponent, order);
}

}  // namespace sharp
