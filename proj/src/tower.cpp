#include "gysincalc/pushforward.hpp"

namespace gysincalc::gysin {

namespace {

// Chern coefficient lists c_0..c_{rho_k} for the rank-(r-k+1) bundle seen at
// tower level k.  Level 1 is the full bundle; each later level divides out
// the previous level's line class and truncates at the new rank.
std::vector<std::vector<MultiPoly>> level_chern_lists(const RootContext& ctx) {
  int r = ctx.rank();
  std::size_t n = ctx.tower_vars();
  std::vector<std::vector<MultiPoly>> levels;
  levels.reserve(static_cast<std::size_t>(r) - 1);

  std::vector<MultiPoly> first;
  first.push_back(MultiPoly::constant(n, 1));
  for (int i = 1; i <= r; ++i)
    first.push_back(MultiPoly::variable(n, ctx.tower_e(i)));
  levels.push_back(std::move(first));

  for (int k = 2; k <= r - 1; ++k) {
    std::size_t rho = static_cast<std::size_t>(r - k + 1);
    MultiPoly h = MultiPoly::variable(n, ctx.tower_h(k - 1));
    std::vector<MultiPoly> next;
    next.push_back(MultiPoly::constant(n, 1));
    for (std::size_t i = 1; i <= rho; ++i)
      next.push_back(levels.back()[i] - h * next[i - 1]);
    levels.push_back(std::move(next));
  }
  return levels;
}

}  // namespace

SymmetricClass tower_pushforward(const MultiPoly& f, const RootContext& ctx) {
  if (f.num_vars() != ctx.tower_vars())
    throw dimension_error("input is not in the tower basis");
  if (f.degree_in(ctx.tower_a()) > 1)
    throw dimension_error("auxiliary class a is square-zero; a-degree above 1");
  Homogeneity h = ctx.tower_fiber_degree(f);
  if (h.kind == Homogeneity::Kind::inhomogeneous)
    throw dimension_error("push-forward input must be fiber-homogeneous");
  if (h.is_zero()) return SymmetricClass{MultiPoly(ctx.class_vars()), 0};

  int r = ctx.rank();
  int codrop = static_cast<int>(h.degree) - ctx.fiber_dimension();

  // Eliminate the top level first: integrate out h_{r-1}, then h_{r-2},
  // down to h_1.  At level k the hyperplane power m maps to the Segre
  // class s_{m-(rho-1)} of the level bundle, and to 0 below the fiber
  // dimension rho-1.
  std::vector<std::vector<MultiPoly>> levels = level_chern_lists(ctx);
  MultiPoly work = f;
  for (int k = r - 1; k >= 1; --k) {
    std::size_t rho = static_cast<std::size_t>(r - k + 1);
    std::size_t fdim = rho - 1;
    auto parts = work.collect(ctx.tower_h(k));
    std::size_t top = parts.empty() ? 0 : parts.rbegin()->first;

    std::vector<MultiPoly> segre;
    segre.push_back(MultiPoly::constant(ctx.tower_vars(), 1));
    if (top >= fdim) {
      const std::vector<MultiPoly>& chern = levels[static_cast<std::size_t>(k) - 1];
      for (std::size_t j = 1; j <= top - fdim; ++j) {
        MultiPoly s(ctx.tower_vars());
        for (std::size_t i = 1; i <= std::min(j, rho); ++i) {
          MultiPoly term = chern[i] * segre[j - i];
          if (i % 2 == 1)
            s += term;
          else
            s -= term;
        }
        segre.push_back(std::move(s));
      }
    }

    MultiPoly reduced(ctx.tower_vars());
    for (const auto& [power, part] : parts) {
      if (power < fdim) continue;
      reduced += part * segre[power - fdim];
    }
    work = std::move(reduced);
  }

  for (int k = 1; k <= r - 1; ++k)
    if (work.degree_in(ctx.tower_h(k)) != 0)
      throw consistency_error("tower elimination left a fiber variable behind");

  MultiPoly value(ctx.class_vars());
  for (const auto& [exps, c] : work) {
    Exponents packed(ctx.class_vars(), 0);
    for (int i = 1; i <= r; ++i) packed[ctx.class_e(i)] = exps[ctx.tower_e(i)];
    packed[ctx.class_a()] = exps[ctx.tower_a()];
    value += MultiPoly::monomial(ctx.class_vars(), packed, c);
  }
  if (codrop < 0 && !value.is_zero())
    throw consistency_error("negative-codrop push-forward did not vanish");
  return SymmetricClass{std::move(value), codrop};
}

}  // namespace gysincalc::gysin
