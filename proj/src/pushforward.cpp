#include <algorithm>
#include <map>
#include <numeric>

#include "gysincalc/pushforward.hpp"

namespace gysincalc::gysin {

MultiPoly elementary_symmetric(std::size_t n, std::size_t k) {
  if (k == 0) return MultiPoly::constant(n, 1);
  MultiPoly out(n);
  if (k > n) return out;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  while (true) {
    Exponents e(n, 0);
    for (std::size_t i : idx) e[i] = 1;
    out += MultiPoly::monomial(n, e, 1);
    std::size_t j = k;
    while (j > 0 && idx[j - 1] == n - k + (j - 1)) --j;
    if (j == 0) break;
    ++idx[j - 1];
    for (std::size_t t = j; t < k; ++t) idx[t] = idx[t - 1] + 1;
  }
  return out;
}

MultiPoly symmetric_reduce(const MultiPoly& p) {
  std::size_t n = p.num_vars();
  if (n == 0) return p;
  for (std::size_t i = 0; i + 1 < n; ++i)
    if (p.apply_transposition(i, i + 1) != p)
      throw consistency_error("polynomial is not symmetric under swapping variables " +
                              std::to_string(i + 1) + " and " + std::to_string(i + 2));

  std::vector<MultiPoly> elem;
  elem.reserve(n);
  for (std::size_t k = 1; k <= n; ++k) elem.push_back(elementary_symmetric(n, k));

  // Leading-term reduction: the top graded-lex exponent of a symmetric
  // polynomial is weakly decreasing, and the product of elementary
  // symmetric functions with the matching difference pattern reproduces it
  // with coefficient 1.
  MultiPoly rest = p;
  MultiPoly out(n);
  while (!rest.is_zero()) {
    Exponents lambda = rest.leading()->first;
    Rational c = rest.leading()->second;
    Exponents epow(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      std::uint32_t next = (i + 1 < n) ? lambda[i + 1] : 0;
      if (lambda[i] < next)
        throw consistency_error("leading exponent of a symmetric polynomial is not weakly decreasing");
      epow[i] = lambda[i] - next;
    }
    MultiPoly prod = MultiPoly::constant(n, 1);
    for (std::size_t i = 0; i < n; ++i)
      if (epow[i] > 0) prod = prod * elem[i].pow(epow[i]);
    rest -= c * prod;
    out += MultiPoly::monomial(n, epow, c);
  }
  return out;
}

namespace {

// Rewrites a fully symmetric root-basis polynomial in the class basis:
// terms are bucketed by their (e, a) part and each pure-y factor is reduced
// to elementary symmetric functions, which are the e variables themselves.
MultiPoly reduce_to_class_basis(const MultiPoly& g, const RootContext& ctx) {
  int r = ctx.rank();
  std::size_t yn = static_cast<std::size_t>(r);
  std::map<Exponents, MultiPoly> buckets;
  for (const auto& [exps, c] : g) {
    Exponents key(ctx.class_vars(), 0);
    for (int i = 1; i <= r; ++i) key[ctx.class_e(i)] = exps[ctx.root_e(i)];
    key[ctx.class_a()] = exps[ctx.root_a()];
    Exponents ypart(yn, 0);
    for (int j = 1; j <= r; ++j) ypart[static_cast<std::size_t>(j) - 1] = exps[ctx.root_y(j)];
    auto [it, unused] = buckets.try_emplace(key, MultiPoly(yn));
    it->second += MultiPoly::monomial(yn, ypart, c);
  }

  MultiPoly value(ctx.class_vars());
  for (const auto& [key, ypoly] : buckets) {
    MultiPoly reduced = symmetric_reduce(ypoly);
    for (const auto& [eexp, c] : reduced) {
      Exponents packed = key;
      for (int i = 1; i <= r; ++i)
        packed[ctx.class_e(i)] += eexp[static_cast<std::size_t>(i) - 1];
      value += MultiPoly::monomial(ctx.class_vars(), packed, c);
    }
  }
  return value;
}

}  // namespace

SymmetricClass dd_pushforward_root_with_word(const MultiPoly& f,
                                             const RootContext& ctx,
                                             const Word& word) {
  if (f.num_vars() != ctx.root_vars())
    throw dimension_error("input is not in the root basis");
  if (f.degree_in(ctx.root_a()) > 1)
    throw dimension_error("auxiliary class a is square-zero; a-degree above 1");
  int r = ctx.rank();
  if (static_cast<int>(word.size()) != ctx.fiber_dimension() ||
      !(word_to_permutation(r, word) == Permutation::longest(r)))
    throw dimension_error("word is not a reduced word for the longest element");
  Homogeneity h = ctx.root_fiber_degree(f);
  if (h.kind == Homogeneity::Kind::inhomogeneous)
    throw dimension_error("push-forward input must be fiber-homogeneous");
  if (h.is_zero()) return SymmetricClass{MultiPoly(ctx.class_vars()), 0};
  int codrop = static_cast<int>(h.degree) - ctx.fiber_dimension();

  MultiPoly g = divided_difference_word(f, ctx, word);
  if (ctx.dd_sign() < 0) g = -g;
  MultiPoly value = reduce_to_class_basis(g, ctx);
  if (codrop < 0 && !value.is_zero())
    throw consistency_error("negative-codrop push-forward did not vanish");
  return SymmetricClass{std::move(value), codrop};
}

SymmetricClass dd_pushforward_root(const MultiPoly& f, const RootContext& ctx) {
  return dd_pushforward_root_with_word(f, ctx, ctx.w0_word());
}

SymmetricClass dd_pushforward(const MultiPoly& f, const RootContext& ctx) {
  if (f.num_vars() != ctx.tower_vars())
    throw dimension_error("input is not in the tower basis");
  return dd_pushforward_root(ctx.tower_to_root(f), ctx);
}

SymmetricClass gr_pushforward(const MultiPoly& f, const RootContext& ctx, int s) {
  int r = ctx.rank();
  if (s < 1 || s > r - 1) throw dimension_error("subbundle rank out of range");
  if (f.num_vars() != ctx.root_vars())
    throw dimension_error("input is not in the root basis");
  if (f.degree_in(ctx.root_a()) > 1)
    throw dimension_error("auxiliary class a is square-zero; a-degree above 1");
  for (int i = 1; i <= r - 1; ++i) {
    if (i == s) continue;
    if (f.apply_transposition(ctx.root_y(i), ctx.root_y(i + 1)) != f)
      throw dimension_error("input is not symmetric within the sub- and quotient-block roots");
  }
  Homogeneity h = ctx.root_fiber_degree(f);
  if (h.kind == Homogeneity::Kind::inhomogeneous)
    throw dimension_error("push-forward input must be fiber-homogeneous");
  int relative = s * (r - s);
  if (h.is_zero()) return SymmetricClass{MultiPoly(ctx.class_vars()), 0};
  int codrop = static_cast<int>(h.degree) - relative;

  std::vector<int> blocks = {s, r - s};
  Permutation u = Permutation::longest(r) * Permutation::longest_in_blocks(r, blocks);
  MultiPoly g = divided_difference_word(f, ctx, reduced_word(u));
  if (ctx.gr_sign(s) < 0) g = -g;
  MultiPoly value = reduce_to_class_basis(g, ctx);
  if (codrop < 0 && !value.is_zero())
    throw consistency_error("negative-codrop push-forward did not vanish");
  return SymmetricClass{std::move(value), codrop};
}

const char* variant_name(FormulaVariant v) {
  switch (v) {
    case FormulaVariant::printed_minus:
      return "printed-minus";
    case FormulaVariant::plus:
      return "plus";
    case FormulaVariant::staircase_monomial:
      return "staircase-monomial";
  }
  return "unknown";
}

FormulaResult paper_coefficient_formula(const MultiPoly& f, int r,
                                        FormulaVariant variant) {
  if (r < 2) throw dimension_error("rank must be at least 2");
  std::size_t n = static_cast<std::size_t>(r) - 1;
  if (f.num_vars() != n)
    throw dimension_error("input must use the t basis with r-1 variables");
  unsigned top = static_cast<unsigned>(r * (r - 1) / 2);
  Homogeneity h = f.homogeneous_degree();
  if (h.kind == Homogeneity::Kind::inhomogeneous)
    throw dimension_error("formula input must be homogeneous");
  if (h.is_zero()) return FormulaResult{Rational(0), top, true};
  if (h.degree != top && h.degree != top + 1)
    throw dimension_error("formula input has degree " + std::to_string(h.degree) +
                          "; expected " + std::to_string(top) + " or " +
                          std::to_string(top + 1));

  FormulaResult out;
  out.degree = h.degree;
  out.top_degree = (h.degree == top);

  if (variant == FormulaVariant::staircase_monomial) {
    Exponents e(n, 0);
    for (std::size_t i = 0; i < n; ++i)
      e[i] = static_cast<std::uint32_t>(n - i);
    out.value = f.coefficient_of(e);
    return out;
  }

  MultiPoly extract = f;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      MultiPoly factor = MultiPoly::variable(n, i);
      if (variant == FormulaVariant::plus)
        factor += MultiPoly::variable(n, j);
      else
        factor -= MultiPoly::variable(n, j);
      extract = extract * factor;
    }
  Exponents e(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    e[i] = static_cast<std::uint32_t>(r - 1);
  out.value = extract.coefficient_of(e);
  return out;
}

}  // namespace gysincalc::gysin
