#include "gysincalc/pushforward.hpp"

namespace gysincalc::gysin {

MultiPoly divided_difference(const MultiPoly& f, const RootContext& ctx, int i) {
  if (i < 1 || i > ctx.rank() - 1)
    throw dimension_error("divided-difference index out of range");
  if (f.num_vars() != ctx.root_vars())
    throw dimension_error("input is not in the root basis");

  std::size_t p = ctx.root_y(i);
  std::size_t q = ctx.root_y(i + 1);
  MultiPoly diff = f - f.apply_transposition(p, q);
  MultiPoly quotient(ctx.root_vars());
  if (diff.is_zero()) return quotient;

  // Synthetic division by y_i - y_{i+1}: each power y_i^t splits as
  // (y_i - y_{i+1}) * sum_{u+v=t-1} y_i^u y_{i+1}^v plus y_{i+1}^t, so the
  // remainder is the numerator with y_i replaced by y_{i+1}.  It must cancel
  // identically because the numerator is antisymmetric in the pair.
  MultiPoly remainder(ctx.root_vars());
  for (const auto& [power, part] : diff.collect(p)) {
    if (power == 0) {
      remainder += part;
      continue;
    }
    MultiPoly geometric(ctx.root_vars());
    for (std::uint32_t u = 0; u < power; ++u) {
      Exponents e(ctx.root_vars(), 0);
      e[p] = u;
      e[q] = power - 1 - u;
      geometric += MultiPoly::monomial(ctx.root_vars(), e, 1);
    }
    quotient += part * geometric;
    Exponents shifted(ctx.root_vars(), 0);
    shifted[q] = power;
    remainder += part * MultiPoly::monomial(ctx.root_vars(), shifted, 1);
  }
  if (!remainder.is_zero())
    throw consistency_error("divided-difference division left a remainder");
  return quotient;
}

MultiPoly divided_difference_word(const MultiPoly& f, const RootContext& ctx,
                                  const Word& word) {
  MultiPoly g = f;
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    g = divided_difference(g, ctx, *it);
  return g;
}

}  // namespace gysincalc::gysin
