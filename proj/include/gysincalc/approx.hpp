#pragma once

#include <string>
#include <vector>

#include "gysincalc/pushforward.hpp"

namespace gysincalc::approx {

using gysin::FormulaVariant;
using gysin::RootContext;
using polyring::MultiPoly;

/// One cell of the approximation grid: the weight shape m_1..m_{r-1}, the
/// very-ampleness multiple n, and the sequence index m_scale.  Quantities
/// that scale polynomially in m_scale are computed from the shape and scaled
/// exactly.
struct WeightVector {
  int r = 2;
  std::vector<long> m_weights;
  long n = 1;
  long m_scale = 1;

  /// Throws dimension_error unless r >= 2, the shape has r-1 nonnegative
  /// entries with at least one positive, and n, m_scale are positive.
  void validate() const;
};

/// All-ones shape (1,...,1) and the one-hot shape (1,0,...,0).
WeightVector ones_weights(int r);
WeightVector literal_weights(int r);

/// The coefficient-extraction constants, by formula variant and by oracle.
/// Oracle values are computed along both independent push-forward routes,
/// which must agree exactly; only the agreed value is stored.
struct ConstantsRecord {
  int r = 2;
  std::vector<Rational> alpha_by_variant;               // index: FormulaVariant
  std::vector<std::vector<Rational>> beta_by_variant;   // [variant][s-1]
  Rational alpha_oracle;
  std::vector<Rational> beta_oracle;                    // s = 1..r-1
};

/// All three formula variants, in serialization order.
const std::vector<FormulaVariant>& all_variants();

ConstantsRecord compute_constants(int r, const RootContext& ctx);

/// Push-forward of (sum_s m_s tau_s)^{C(r,2)} with e_1 = 0, using the raw
/// shape weights.  The degree of the composite map is this value times
/// (n * m_scale)^{C(r,2)}.
Rational weighted_degree(const WeightVector& w, const RootContext& ctx);

/// kappa_i = (r-1) * C(r,2) * push of (sum_s m_s tau_s)^{C(r,2)-1} * y_i at
/// e_1 = 0, for i = 1..r; raw shape weights.  These are the per-quotient
/// line-bundle coefficients, and they sum to zero.
std::vector<Rational> quotient_coefficients(const WeightVector& w,
                                            const RootContext& ctx);

/// (r-1) * C(r,2) * beta / (m_scale * alpha); rejects alpha = 0 as a
/// degenerate configuration.
Rational am_value(int r, const Rational& alpha, const Rational& beta,
                  long m_scale);

/// (n * m_scale)^{C(r,2)} * alpha.
Rational deg_fm_value(int r, const Rational& alpha, long m_scale, long n);

/// Pushed first Chern class of the universal quotient over the composite
/// degree, on the Grassmann bundle of rank-s subbundles: the a-coefficient
/// of the ratio.  Simplifies to s(r-s)/m_scale; n cancels.
Rational grassmann_ratio(int r, int s, long m_scale, long n,
                         const RootContext& ctx);

/// One table row: shape-level degree coefficient, effective per-quotient
/// coefficients (m_scale powers applied), and their ratios against the
/// effective degree.  A zero degree marks the row degenerate and leaves the
/// ratio list empty.
struct ApproxRow {
  WeightVector weights;
  Rational degree_coefficient;
  std::vector<Rational> kappa;
  std::vector<Rational> ratio;
  bool degenerate = false;
};

ApproxRow make_row(const WeightVector& w, const RootContext& ctx);

/// Rows for every (m, n) pair, ordered by m then n.
std::vector<ApproxRow> make_table(const WeightVector& shape,
                                  const std::vector<long>& m_values,
                                  const std::vector<long>& n_values,
                                  const RootContext& ctx);

/// CSV with header r,weights,m,n,degree_coefficient,kappa_1..kappa_r,
/// ratio_1..ratio_r,degenerate.  Ratio cells are empty on degenerate rows.
std::string table_to_csv(const std::vector<ApproxRow>& rows);

}  // namespace gysincalc::approx
