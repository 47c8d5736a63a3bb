#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "gysincalc/errors.hpp"
#include "gysincalc/rational.hpp"

namespace gysincalc::polyring {

/// Exponent vector of a monomial; entry i is the power of variable i.
using Exponents = std::vector<std::uint32_t>;

/// Canonical term order: graded lexicographic, largest term first.
/// Terms of higher total degree come first; ties break lexicographically
/// with earlier variables weighing more.
struct GradedLexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Three-state degree report.  The zero polynomial gets its own marker so
/// that "homogeneous of degree d" is never claimed for it.
struct Homogeneity {
  enum class Kind { zero, homogeneous, inhomogeneous };
  Kind kind = Kind::zero;
  unsigned degree = 0;  // meaningful only when kind == homogeneous

  bool is_homogeneous() const { return kind == Kind::homogeneous; }
  bool is_zero() const { return kind == Kind::zero; }
};

/// Sparse multivariate polynomial over Rational with a fixed number of
/// variables.  The zero polynomial is the empty term set.  Terms are held in
/// canonical (graded-lex descending) order, so equality and text rendering
/// are independent of how a value was built up.
class MultiPoly {
 public:
  using TermMap = std::map<Exponents, Rational, GradedLexGreater>;
  using const_iterator = TermMap::const_iterator;

  explicit MultiPoly(std::size_t num_vars) : num_vars_(num_vars) {}

  static MultiPoly constant(std::size_t num_vars, const Rational& c);
  static MultiPoly variable(std::size_t num_vars, std::size_t index);
  static MultiPoly monomial(std::size_t num_vars, const Exponents& exps,
                            const Rational& c);

  std::size_t num_vars() const { return num_vars_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  const_iterator begin() const { return terms_.begin(); }
  const_iterator end() const { return terms_.end(); }

  /// Leading term in the canonical order.  Requires a nonzero polynomial.
  const_iterator leading() const;

  bool operator==(const MultiPoly& other) const;
  bool operator!=(const MultiPoly& other) const { return !(*this == other); }

  MultiPoly& operator+=(const MultiPoly& other);
  MultiPoly& operator-=(const MultiPoly& other);
  MultiPoly operator+(const MultiPoly& other) const;
  MultiPoly operator-(const MultiPoly& other) const;
  MultiPoly operator-() const;
  MultiPoly operator*(const MultiPoly& other) const;
  MultiPoly operator*(const Rational& scalar) const;

  /// k-th power by iterated multiplication; pow(p, 0) == 1.
  MultiPoly pow(unsigned k) const;

  /// Exact coefficient of the given monomial (0 when absent).
  const Rational& coefficient_of(const Exponents& exps) const;

  /// Simultaneous substitution: variable i becomes images[i].  All images
  /// must share one target variable count, and one image is required per
  /// source variable.
  MultiPoly substitute(std::span<const MultiPoly> images) const;

  /// Degree report with unit weights.
  Homogeneity homogeneous_degree() const;

  /// Degree report where variable i contributes weights[i] per power.
  Homogeneity homogeneous_degree(std::span<const unsigned> weights) const;

  unsigned total_degree() const;
  unsigned degree_in(std::size_t var) const;

  /// Swaps variables i and j in every term.  An involution and a ring
  /// homomorphism; i == j or out-of-range indices are rejected.
  MultiPoly apply_transposition(std::size_t i, std::size_t j) const;

  /// The image under variable `var` -> 0, i.e. terms with a positive power
  /// of `var` dropped.
  MultiPoly set_zero(std::size_t var) const;

  /// Coefficients of this polynomial viewed as univariate in `var`:
  /// result[k] is the coefficient of var^k (with var's slot zeroed out).
  std::map<std::uint32_t, MultiPoly> collect(std::size_t var) const;

 private:
  void add_term(const Exponents& exps, const Rational& c);
  void check_same_shape(const MultiPoly& other) const;

  std::size_t num_vars_;
  TermMap terms_;

  friend MultiPoly operator*(const Rational& scalar, const MultiPoly& p);
};

inline MultiPoly operator*(const Rational& scalar, const MultiPoly& p) {
  return p * scalar;
}

}  // namespace gysincalc::polyring
