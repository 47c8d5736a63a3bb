#pragma once

#include <string>

#include "gysincalc/root_context.hpp"

namespace gysincalc::gysin {

/// Push-forward along the full flag bundle computed through the tower of
/// projective bundles.  Input is a fiber-homogeneous polynomial in the tower
/// basis with a-degree at most 1; the result has
/// fiber_codrop = deg(f) - r(r-1)/2.
SymmetricClass tower_pushforward(const MultiPoly& f, const RootContext& ctx);

/// Divided difference along y_i, y_{i+1} (1 <= i <= r-1) in the root basis:
/// (f - f with y_i, y_{i+1} swapped) / (y_i - y_{i+1}).  The division is
/// synthetic and must be exact; a nonzero remainder aborts.
MultiPoly divided_difference(const MultiPoly& f, const RootContext& ctx, int i);

/// Composite of divided differences along a word, rightmost letter first.
MultiPoly divided_difference_word(const MultiPoly& f, const RootContext& ctx,
                                  const Word& word);

/// Push-forward via the divided-difference composite for the longest
/// element, with the context's calibration sign applied and the symmetric
/// result rewritten in the class basis.  Input in the tower basis.
SymmetricClass dd_pushforward(const MultiPoly& f, const RootContext& ctx);

/// Same, for input already written in the root basis.
SymmetricClass dd_pushforward_root(const MultiPoly& f, const RootContext& ctx);

/// Same as dd_pushforward_root but along a caller-chosen reduced word for
/// the longest element (rejected unless it is one).
SymmetricClass dd_pushforward_root_with_word(const MultiPoly& f,
                                             const RootContext& ctx,
                                             const Word& word);

/// Push-forward along the Grassmann bundle of rank-s subbundles.  Input in
/// the root basis, symmetric separately in y_1..y_s and y_{s+1}..y_r;
/// fiber_codrop is relative to s(r-s).
SymmetricClass gr_pushforward(const MultiPoly& f, const RootContext& ctx, int s);

/// Rewrites a symmetric polynomial in y_1..y_r (num_vars == r) as a
/// polynomial in the elementary symmetric functions e_1..e_r (same variable
/// count, slot i-1 holding e_i).  Non-symmetric input is rejected with the
/// violating transposition named.
MultiPoly symmetric_reduce(const MultiPoly& p);

/// Elementary symmetric polynomial e_k of n variables.
MultiPoly elementary_symmetric(std::size_t n, std::size_t k);

/// Conventions for the coefficient-extraction formula in the t variables.
/// printed_minus extracts the coefficient of (t_1...t_{r-1})^{r-1} from
/// f * prod_{i<j}(t_i - t_j); plus flips the sign inside that product;
/// staircase_monomial reads the coefficient of t_1^{r-1} t_2^{r-2} ... t_{r-1}
/// off f itself, with no product factor.
enum class FormulaVariant { printed_minus, plus, staircase_monomial };

const char* variant_name(FormulaVariant v);

struct FormulaResult {
  Rational value;
  unsigned degree = 0;
  /// True when the input degree is exactly r(r-1)/2 (the only degree at
  /// which the extraction can be nonzero); at degree r(r-1)/2 + 1 the
  /// extracted coefficient is structurally 0 and recorded for the audit.
  bool top_degree = true;
};

/// Evaluates one formula variant on a homogeneous polynomial in the t basis
/// of degree r(r-1)/2 or r(r-1)/2 + 1; other degrees are rejected with the
/// offending degree reported.
FormulaResult paper_coefficient_formula(const MultiPoly& f, int r,
                                        FormulaVariant variant);

}  // namespace gysincalc::gysin
