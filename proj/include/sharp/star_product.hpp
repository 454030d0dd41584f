#pragma once

#include <functional>
#include <vector>

#include "sharp/dense.hpp"
#include "sharp/polynomial.hpp"

namespace sharp {

/// Constant skew-symmetric matrix Lambda^{ab} driving the star product.
class PoissonMatrix {
 public:
  /// Throws PreconditionError unless `m` is square and skew-symmetric.
  explicit PoissonMatrix(GMatrix m);

  static PoissonMatrix zero(Eigen::Index size) { return PoissonMatrix(GMatrix::Zero(size, size)); }

  const GMatrix& matrix() const { return m_; }
  Eigen::Index size() const { return m_.rows(); }
  const GaussRational& operator()(Eigen::Index a, Eigen::Index b) const { return m_(a, b); }
  bool is_invertible() const;

 private:
  GMatrix m_;
};

/// Polynomial entries over Q(i); a constant PoissonMatrix embeds as degree 0.
class PolyPoissonMatrix {
 public:
  using Entry = Polynomial<GaussRational>;

  explicit PolyPoissonMatrix(std::vector<std::vector<Entry>> entries);
  explicit PolyPoissonMatrix(const PoissonMatrix& constant);

  std::size_t size() const { return entries_.size(); }
  const Entry& operator()(std::size_t a, std::size_t b) const { return entries_[a][b]; }
  bool is_constant() const;
  bool is_skew_symmetric() const;
  /// Throws PreconditionError if some entry is non-constant.
  PoissonMatrix to_constant() const;

 private:
  std::vector<std::vector<Entry>> entries_;
};

/// Ambient data every star-product call needs.
class StarContext {
 public:
  explicit StarContext(PoissonMatrix lambda)
      : nvars_(static_cast<std::size_t>(lambda.size())), lambda_(std::move(lambda)) {}

  /// Non-constant Poisson tensors are rejected here.
  static StarContext from_poly(const PolyPoissonMatrix& lambda) { return StarContext(lambda.to_constant()); }

  std::size_t nvars() const { return nvars_; }
  const PoissonMatrix& lambda() const { return lambda_; }

 private:
  std::size_t nvars_;
  PoissonMatrix lambda_;
};

/// One multiset of Lambda-pairs: left/right derivative orders and the weight
/// prod_p Lambda_p^{m_p} / m_p!.
struct Contraction {
  std::vector<int> left;
  std::vector<int> right;
  GaussRational weight;
};

/// Visits every multiset of k nonzero Lambda entries whose derivative orders
/// stay within the caps (larger orders annihilate the operand).
void for_each_contraction(const PoissonMatrix& lambda, int k, const std::vector<int>& left_cap,
                          const std::vector<int>& right_cap, const std::function<void(const Contraction&)>& visit);

/// k-th summand (1/k!)(mu/2)^k Lambda...Lambda d^k f d^k g.
HomPoly star_term(const StarContext& ctx, const HomPoly& f, const HomPoly& g, int k);

/// Full f # g. Terminates at k = min(deg f, deg g).
HomPoly star(const StarContext& ctx, const HomPoly& f, const HomPoly& g);

/// f # g - g # f
HomPoly commutator(const StarContext& ctx, const HomPoly& f, const HomPoly& g);

/// sum Lambda^{ab} d_a f d_b g, no mu factor.
HomPoly poisson_bracket(const StarContext& ctx, const HomPoly& f, const HomPoly& g);

/// f^{# power}, with f^{#0} = 1.
HomPoly star_power(const StarContext& ctx, const HomPoly& f, int power);

bool check_jacobi(const PoissonMatrix& lambda);
bool check_jacobi(const PolyPoissonMatrix& lambda);

/// Compares the composed order-k bidifferential operator with the
/// constants-in-front form on all monomial pairs of degree <= test_degree.
bool check_lambda_relation(const StarContext& ctx, int k, int test_degree);

/// The z-degree target_degree piece of f # g for homogeneous f, g.
HomPoly graded_star_component(const StarContext& ctx, const HomPoly& f, const HomPoly& g, int target_degree);

/// Substitutes mu = value and collects in z.
HomPoly specialize_mu(const HomPoly& p, const GaussRational& value);

}  // namespace sharp
