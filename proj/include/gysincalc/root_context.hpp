#pragma once

#include <string>
#include <vector>

#include "gysincalc/multipoly.hpp"
#include "gysincalc/permutation.hpp"

namespace gysincalc::gysin {

using polyring::Exponents;
using polyring::Homogeneity;
using polyring::MultiPoly;

/// Variable dictionaries and sign calibration for the full flag bundle of a
/// rank-r bundle E over a base carrying one auxiliary divisor class `a`
/// (square-zero: only its linear part is ever tracked).
///
/// Four variable layouts are in play:
///   tower basis  h_1..h_{r-1}, e_1..e_r, a   - projective-bundle tower route
///   root basis   y_1..y_r,     e_1..e_r, a   - Chern roots; divided differences
///   class basis  e_1..e_r, a                 - push-forward values
///   t basis      t_1..t_{r-1}                - coefficient-formula inputs
///
/// The dictionaries tie them together:
///   h_k = y_{r-k+1};   y_1 = e_1 - (h_1 + ... + h_{r-1})
///   xi_i = -y_{r-i}, so xi_i = -h_{i+1} for i <= r-2 and
///   xi_{r-1} = h_1 + ... + h_{r-1} - e_1
///   tau_s = y_{r-s+1} + ... + y_r = h_1 + ... + h_s, with tau_r defined as 0.
///
/// Fiber degrees weight e_i with i and every other variable with 1.
class RootContext {
 public:
  explicit RootContext(int r);

  int rank() const { return r_; }
  /// Relative dimension of the full flag bundle: r(r-1)/2.
  int fiber_dimension() const { return r_ * (r_ - 1) / 2; }

  // Variable counts per basis.
  std::size_t tower_vars() const { return 2 * static_cast<std::size_t>(r_); }
  std::size_t root_vars() const { return 2 * static_cast<std::size_t>(r_) + 1; }
  std::size_t class_vars() const { return static_cast<std::size_t>(r_) + 1; }
  std::size_t t_vars() const { return static_cast<std::size_t>(r_) - 1; }

  // Slot assignments (1-based mathematical indices in, 0-based slots out).
  std::size_t tower_h(int k) const;
  std::size_t tower_e(int i) const;
  std::size_t tower_a() const { return 2 * static_cast<std::size_t>(r_) - 1; }
  std::size_t root_y(int j) const;
  std::size_t root_e(int i) const;
  std::size_t root_a() const { return 2 * static_cast<std::size_t>(r_); }
  std::size_t class_e(int i) const;
  std::size_t class_a() const { return static_cast<std::size_t>(r_); }

  const std::vector<std::string>& tower_names() const { return tower_names_; }
  const std::vector<std::string>& root_names() const { return root_names_; }
  const std::vector<std::string>& class_names() const { return class_names_; }
  const std::vector<std::string>& t_names() const { return t_names_; }

  const std::vector<unsigned>& tower_weights() const { return tower_weights_; }
  const std::vector<unsigned>& root_weights() const { return root_weights_; }
  const std::vector<unsigned>& class_weights() const { return class_weights_; }

  // Dictionary polynomials.
  MultiPoly y_tower(int j) const;    // y_j written in the tower basis
  MultiPoly xi_tower(int i) const;   // xi_i in the tower basis
  MultiPoly tau_tower(int s) const;  // tau_s in the tower basis (tau_r = 0)
  MultiPoly xi_root(int i) const;
  MultiPoly tau_root(int s) const;
  /// c_1 of the rank-(r-s) universal quotient on the Grassmann bundle of
  /// rank-s subbundles: y_{s+1} + ... + y_r in the root basis.
  MultiPoly gr_xi_root(int s) const;
  /// Product of the two relative-flag staircases for the sub/quotient blocks
  /// cut out by s; pushing F * this down the full flag tower computes the
  /// Grassmann-bundle push-forward of a block-symmetric F.
  MultiPoly gr_fiber_staircase_root(int s) const;
  /// The full-flag staircase h_1^{r-1} h_2^{r-2} ... h_{r-1}, whose tower
  /// push-forward is exactly 1; used for sign calibration.
  MultiPoly staircase_tower() const;

  // Basis conversions (all exact substitutions).
  MultiPoly tower_to_root(const MultiPoly& f) const;
  MultiPoly root_to_tower(const MultiPoly& f) const;
  MultiPoly t_to_tower(const MultiPoly& f) const;
  MultiPoly t_to_root(const MultiPoly& f) const;

  /// Fiber-degree report for a polynomial in the given basis.
  Homogeneity tower_fiber_degree(const MultiPoly& f) const;
  Homogeneity root_fiber_degree(const MultiPoly& f) const;

  /// Sign relating the raw divided-difference composite for the longest
  /// element to the tower push-forward; fixed once at construction by
  /// requiring both routes to send the staircase monomial to 1.
  int dd_sign() const { return dd_sign_; }

  /// Per-s sign for the Grassmann-bundle divided-difference route,
  /// calibrated against the tower through the staircase factorisation.
  int gr_sign(int s) const;

  /// The default reduced word for the longest element used by the
  /// divided-difference push-forward.
  const Word& w0_word() const { return w0_word_; }

 private:
  int r_;
  int dd_sign_ = 1;
  std::vector<int> gr_signs_;  // index s-1
  Word w0_word_;
  std::vector<std::string> tower_names_, root_names_, class_names_, t_names_;
  std::vector<unsigned> tower_weights_, root_weights_, class_weights_;
};

/// Result of a push-forward: a polynomial in the class basis (e_1..e_r, a)
/// together with degree bookkeeping.  fiber_codrop is the input's fiber
/// degree minus the relative dimension of the bundle pushed along; when it
/// is negative the value is the zero class.
struct SymmetricClass {
  MultiPoly value;
  int fiber_codrop = 0;

  bool is_zero() const { return value.is_zero(); }
  /// True when the value is a degree-0 class (a bare rational).
  bool is_constant() const;
  /// The rational value of a degree-0 class; throws otherwise.
  Rational constant_value() const;
  /// The value with e_1 set to 0.
  MultiPoly value_at_zero_c1(const RootContext& ctx) const;
  /// Coefficient of the bare monomial e_1 in the value.
  Rational e1_coefficient(const RootContext& ctx) const;
  /// Coefficient of the bare monomial a in the value.
  Rational a_coefficient(const RootContext& ctx) const;
};

}  // namespace gysincalc::gysin
