#pragma once

#include <string>
#include <vector>

#include "sharp/quad_exp.hpp"
#include "sharp/star_product.hpp"

namespace sharp {

/// Slots of the correspondence space C^4 x CP^1 in the order
/// x^{1,1'}, x^{1,2'}, x^{2,1'}, x^{2,2'}, pi_1, pi_2.
inline constexpr std::size_t kTwistorSpaceVars = 6;
/// Homogeneous coordinates z_1..z_4 of CP^3 (indices 0..3).
inline constexpr std::size_t kTwistorVars = 4;

std::vector<std::string> correspondence_var_names();
std::vector<std::string> twistor_var_names();

/// Index of x^{alpha, alpha_dot} (alpha, alpha_dot in {1, 2}).
std::size_t x_slot(int alpha, int alpha_dot);
/// Index of pi_alpha (alpha in {1, 2}).
std::size_t pi_slot(int alpha);

/// Skew matrix D^{(alpha alpha_dot),(beta beta_dot)} on the four x slots;
/// hbar is identified with mu.
class IncidenceContext {
 public:
  /// Throws PreconditionError unless d is 4x4 skew-symmetric.
  explicit IncidenceContext(GMatrix d);

  const GMatrix& d_matrix() const { return d_; }

  /// D on the x-block, zero rows and columns for pi_1, pi_2.
  PoissonMatrix induced_poisson() const;
  StarContext star_context() const { return StarContext(induced_poisson()); }

 private:
  GMatrix d_;
};

/// z_1 -> x^{a,1'} pi_a, z_2 -> x^{a,2'} pi_a, z_3 -> pi_1, z_4 -> pi_2.
HomPoly incidence_pullback(const HomPoly& p);

/// Pullback of z^{alpha_dot} (alpha_dot in {1, 2}).
HomPoly dotted_coordinate(int alpha_dot);

/// [z^{a'}, z^{b'}]_# computed with the star product on the correspondence space.
HomPoly twistor_commutator(const IncidenceContext& ctx, int alpha_dot, int beta_dot);

/// hbar sum_{alpha, beta} D^{alpha alpha_dot, beta beta_dot} pi_alpha pi_beta by direct contraction.
HomPoly expected_twistor_commutator(const IncidenceContext& ctx, int alpha_dot, int beta_dot);

bool twistor_commutator_check(const IncidenceContext& ctx);

/// Star exponential of (1/mu) A[z^{1'}, z^{2'}] for a 2x2 symmetric A, pulled back.
PolySeries twistor_star_exp(const IncidenceContext& ctx, const SymMatrix& a, int order);

/// Same for a degree-2 polynomial in z_1, z_2 (4-variable ring, z_3, z_4 absent).
PolySeries twistor_star_exp(const IncidenceContext& ctx, const HomPoly& a, int order);

}  // namespace sharp
