#include "sharp/star_product.hpp"

#include <algorithm>
#include <map>

namespace sharp {

PoissonMatrix::PoissonMatrix(GMatrix m) : m_(std::move(m)) {
  if (!is_skew_symmetric(m_)) throw PreconditionError("Poisson matrix must be square and skew-symmetric");
}

bool PoissonMatrix::is_invertible() const { return sharp::is_invertible(m_); }

PolyPoissonMatrix::PolyPoissonMatrix(std::vector<std::vector<Entry>> entries) : entries_(std::move(entries)) {
  for (const auto& row : entries_) {
    if (row.size() != entries_.size()) throw DimensionError("Poisson tensor must be square");
    for (const auto& e : row)
      if (e.nvars() != entries_.size()) throw DimensionError("Poisson tensor entries must live in the ambient ring");
  }
}

PolyPoissonMatrix::PolyPoissonMatrix(const PoissonMatrix& constant) {
  const auto n = static_cast<std::size_t>(constant.size());
  entries_.assign(n, std::vector<Entry>(n, Entry(n)));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) entries_[a][b] = Entry::constant(n, constant(a, b));
}

bool PolyPoissonMatrix::is_constant() const {
  for (const auto& row : entries_)
    for (const auto& e : row)
      if (e.degree() > 0) return false;
  return true;
}

bool PolyPoissonMatrix::is_skew_symmetric() const {
  for (std::size_t a = 0; a < size(); ++a)
    for (std::size_t b = 0; b < size(); ++b)
      if (entries_[a][b] != -entries_[b][a]) return false;
  return true;
}

PoissonMatrix PolyPoissonMatrix::to_constant() const {
  if (!is_constant()) throw PreconditionError("star product requires a constant Poisson matrix");
  const auto n = static_cast<Eigen::Index>(size());
  GMatrix m(n, n);
  for (Eigen::Index a = 0; a < n; ++a)
    for (Eigen::Index b = 0; b < n; ++b) m(a, b) = entries_[a][b].coefficient(Monomial(size()));
  return PoissonMatrix(std::move(m));
}

void for_each_contraction(const PoissonMatrix& lambda, int k, const std::vector<int>& left_cap,
                          const std::vector<int>& right_cap, const std::function<void(const Contraction&)>& visit) {
  struct Pair {
    std::size_t a, b;
    GaussRational value;
  };
  std::vector<Pair> pairs;
  for (Eigen::Index a = 0; a < lambda.size(); ++a)
    for (Eigen::Index b = 0; b < lambda.size(); ++b)
      if (!lambda(a, b).is_zero()) pairs.push_back({std::size_t(a), std::size_t(b), lambda(a, b)});

  const auto n = static_cast<std::size_t>(lambda.size());
  Contraction current{std::vector<int>(n, 0), std::vector<int>(n, 0), GaussRational(1)};

  std::function<void(std::size_t, int)> recurse = [&](std::size_t p, int remaining) {
    if (remaining == 0) {
      visit(current);
      return;
    }
    if (p == pairs.size()) return;
    recurse(p + 1, remaining);
    const Pair& pair = pairs[p];
    const GaussRational saved = current.weight;
    int taken = 0;
    while (taken < remaining && current.left[pair.a] < left_cap[pair.a] && current.right[pair.b] < right_cap[pair.b]) {
      ++taken;
      ++current.left[pair.a];
      ++current.right[pair.b];
      current.weight *= pair.value / GaussRational(taken);
      recurse(p + 1, remaining - taken);
    }
    current.left[pair.a] -= taken;
    current.right[pair.b] -= taken;
    current.weight = saved;
  };
  recurse(0, k);
}

namespace {

void check_operands(const StarContext& ctx, const HomPoly& f, const HomPoly& g) {
  if (f.nvars() != ctx.nvars() || g.nvars() != ctx.nvars())
    throw DimensionError("star product operands must have " + std::to_string(ctx.nvars()) + " variables");
}

class DerivativeCache {
 public:
  explicit DerivativeCache(const HomPoly& p) : p_(p) {}
  const HomPoly& operator()(const std::vector<int>& orders) {
    auto it = cache_.find(orders);
    if (it == cache_.end()) it = cache_.emplace(orders, derivative(p_, orders)).first;
    return it->second;
  }

 private:
  const HomPoly& p_;
  std::map<std::vector<int>, HomPoly> cache_;
};

MuScalar half_mu_power(int k) {
  mpz_class two_k = 1;
  two_k <<= k;
  return MuScalar::term(GaussRational(Rational(1) / Rational(two_k)), k);
}

HomPoly star_term_cached(const StarContext& ctx, DerivativeCache& df, DerivativeCache& dg, const HomPoly& f,
                         const HomPoly& g, int k) {
  HomPoly sum(ctx.nvars());
  for_each_contraction(ctx.lambda(), k, f.max_exponents(), g.max_exponents(), [&](const Contraction& c) {
    const HomPoly& left = df(c.left);
    if (left.is_zero()) return;
    const HomPoly& right = dg(c.right);
    if (right.is_zero()) return;
    sum += (left * right).scaled(c.weight);
  });
  return sum.scaled(half_mu_power(k));
}

}  // namespace

HomPoly star_term(const StarContext& ctx, const HomPoly& f, const HomPoly& g, int k) {
  check_operands(ctx, f, g);
  if (k < 0 || k > std::min(f.degree(), g.degree())) return HomPoly(ctx.nvars());
  DerivativeCache df(f), dg(g);
  return star_term_cached(ctx, df, dg, f, g, k);
}

HomPoly star(const StarContext& ctx, const HomPoly& f, const HomPoly& g) {
  check_operands(ctx, f, g);
  HomPoly result(ctx.nvars());
  DerivativeCache df(f), dg(g);
  const int kmax = std::min(f.degree(), g.degree());
  for (int k = 0; k <= kmax; ++k) result += star_term_cached(ctx, df, dg, f, g, k);
  return result;
}

HomPoly commutator(const StarContext& ctx, const HomPoly& f, const HomPoly& g) {
  return star(ctx, f, g) - star(ctx, g, f);
}

HomPoly poisson_bracket(const StarContext& ctx, const HomPoly& f, const HomPoly& g) {
  check_operands(ctx, f, g);
  HomPoly sum(ctx.nvars());
  const auto n = static_cast<Eigen::Index>(ctx.nvars());
  for (Eigen::Index a = 0; a < n; ++a) {
    const HomPoly da = partial(f, a);
    if (da.is_zero()) continue;
    for (Eigen::Index b = 0; b < n; ++b) {
      if (ctx.lambda()(a, b).is_zero()) continue;
      sum += (da * partial(g, b)).scaled(ctx.lambda()(a, b));
    }
  }
  return sum;
}

HomPoly star_power(const StarContext& ctx, const HomPoly& f, int power) {
  HomPoly result = HomPoly::constant(ctx.nvars(), MuScalar(1));
  for (int k = 0; k < power; ++k) result = star(ctx, f, result);
  return result;
}

bool check_jacobi(const PoissonMatrix& lambda) { return check_jacobi(PolyPoissonMatrix(lambda)); }

bool check_jacobi(const PolyPoissonMatrix& lambda) {
  const std::size_t n = lambda.size();
  using Entry = PolyPoissonMatrix::Entry;
  // d_m Lambda^{bc}, indexed [m][b][c]
  std::vector<std::vector<std::vector<Entry>>> grad(n, std::vector<std::vector<Entry>>(n));
  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) grad[m][b].push_back(partial(lambda(b, c), m));

  auto cyclic_term = [&](std::size_t a, std::size_t b, std::size_t c) {
    Entry s(n);
    for (std::size_t m = 0; m < n; ++m) s += lambda(a, m) * grad[m][b][c];
    return s;
  };
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        const Entry j = cyclic_term(a, b, c) + cyclic_term(b, c, a) + cyclic_term(c, a, b);
        if (!j.is_zero()) return false;
      }
  return true;
}

bool check_lambda_relation(const StarContext& ctx, int k, int test_degree) {
  if (k < 1) throw PreconditionError("lambda relation order must be >= 1");
  using FieldPoly = Polynomial<GaussRational>;
  const std::size_t n = ctx.nvars();
  const auto& lambda = ctx.lambda();

  std::vector<Monomial> basis;
  for (int d = 0; d <= test_degree; ++d) {
    auto m = monomials_of_degree(n, d);
    basis.insert(basis.end(), m.begin(), m.end());
  }

  // Index tuples (a_1..a_k) for the constants-in-front side.
  std::vector<std::vector<std::size_t>> tuples{{}};
  for (int step = 0; step < k; ++step) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& t : tuples)
      for (std::size_t a = 0; a < n; ++a) {
        next.push_back(t);
        next.back().push_back(a);
      }
    tuples = std::move(next);
  }

  auto multi_index = [&](const std::vector<std::size_t>& t) {
    std::vector<int> orders(n, 0);
    for (std::size_t a : t) ++orders[a];
    return orders;
  };

  for (const Monomial& fm : basis) {
    for (const Monomial& gm : basis) {
      // Composition of k bidifferential operators on f(X) g(Y), then X = Y = Z.
      std::vector<int> doubled(fm.exponents());
      doubled.insert(doubled.end(), gm.exponents().begin(), gm.exponents().end());
      FieldPoly tensor = FieldPoly::monomial(Monomial(doubled), GaussRational(1));
      for (int step = 0; step < k; ++step) {
        FieldPoly next(2 * n);
        for (std::size_t a = 0; a < n; ++a) {
          const FieldPoly da = partial(tensor, a);
          if (da.is_zero()) continue;
          for (std::size_t b = 0; b < n; ++b)
            if (!lambda(a, b).is_zero()) next += partial(da, n + b).scaled(lambda(a, b));
        }
        tensor = std::move(next);
      }
      FieldPoly lhs(n);
      for (const auto& [m, c] : tensor.terms()) {
        Monomial diag(n);
        for (std::size_t v = 0; v < n; ++v) diag[v] = m[v] + m[n + v];
        lhs.add_term(diag, c);
      }

      const FieldPoly f = FieldPoly::monomial(fm, GaussRational(1));
      const FieldPoly g = FieldPoly::monomial(gm, GaussRational(1));
      FieldPoly rhs(n);
      for (const auto& alphas : tuples) {
        const FieldPoly df = derivative(f, multi_index(alphas));
        if (df.is_zero()) continue;
        for (const auto& betas : tuples) {
          GaussRational w(1);
          for (int i = 0; i < k && !w.is_zero(); ++i) w *= lambda(alphas[i], betas[i]);
          if (w.is_zero()) continue;
          rhs += (df * derivative(g, multi_index(betas))).scaled(w);
        }
      }
      if (lhs != rhs) return false;
    }
  }
  return true;
}

HomPoly graded_star_component(const StarContext& ctx, const HomPoly& f, const HomPoly& g, int target_degree) {
  check_operands(ctx, f, g);
  if (!f.is_homogeneous() || !g.is_homogeneous())
    throw PreconditionError("graded component needs homogeneous operands");
  if (f.is_zero() || g.is_zero()) return HomPoly(ctx.nvars());
  const int gap = f.degree() + g.degree() - target_degree;
  if (gap < 0 || gap % 2 != 0 || gap / 2 > std::min(f.degree(), g.degree()))
    throw PreconditionError("degree " + std::to_string(target_degree) + " is not of the form deg f + deg g - 2k");
  return star_term(ctx, f, g, gap / 2);
}

HomPoly specialize_mu(const HomPoly& p, const GaussRational& value) {
  HomPoly r(p.nvars());
  for (const auto& [m, c] : p.terms()) r.add_term(m, MuScalar(c.evaluate(value)));
  return r;
}

}  // namespace sharp
