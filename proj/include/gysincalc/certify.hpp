#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "gysincalc/approx.hpp"
#include "gysincalc/errors.hpp"
#include "gysincalc/rational.hpp"

namespace gysincalc::certify {

/// One filtration step: the degree of the composite map at this step and the
/// per-quotient degrees of the r graded pieces.
struct CertificateEntry {
  Rational deg_f;
  std::vector<Rational> qdeg;
};

/// A claimed approximating filtration over a base of dimension d.  Entry
/// positions are 1-based: entries[k] describes step m = k + 1.  Every entry
/// must satisfy sum_i qdeg_i = deg_f * r * mu; that is the degree of the
/// pulled-back bundle distributing over its graded pieces.
struct FiltrationCertificate {
  int r = 2;
  int d = 1;
  Rational mu = 0;
  std::vector<CertificateEntry> entries;
};

/// Rejects certificates that are structurally unusable: r < 2, d < 1, no
/// entries, an entry with deg_f <= 0 or a qdeg list whose length is not r,
/// or an entry violating the degree-sum identity.
void validate_certificate(const FiltrationCertificate& cert);

/// Reads a certificate from JSON text.  Malformed JSON or a missing or
/// ill-typed field raises parse_error; a well-formed certificate that fails
/// validate_certificate raises dimension_error.  Rationals are strings
/// ("3", "-5/7").
FiltrationCertificate parse_certificate(const std::string& text);

/// Inverse of parse_certificate; rationals serialize as strings.
nlohmann::json certificate_to_json(const FiltrationCertificate& cert);
std::string certificate_to_string(const FiltrationCertificate& cert);

/// Outcome of the limiting-slope test.  gaps[k] is
/// g_m = max_i(qdeg_i) / deg_f - mu at step m = k + 1.  The hypothesis holds
/// when every gap is nonnegative and m * g_m is non-increasing in m, i.e.
/// the gaps decay at least as fast as C / m with C = g_1.
struct LimitReport {
  std::vector<Rational> gaps;
  bool holds = false;
  Rational bound_constant = 0;
  int violating_index = 0;
};

/// Evaluates the decay test on a validated certificate.  violating_index is
/// the 1-based step where the test first fails, 0 when it holds.
LimitReport check_limit_hypothesis(const FiltrationCertificate& cert);

/// Strictness margin test: epsilon is accepted when 0 < epsilon < 1/(r(r-1)).
struct GapVerdict {
  Rational epsilon;
  Rational threshold;
  bool accepted = false;
};

GapVerdict gap_check(const Rational& epsilon, int r);

/// First Chern data of a twisted pullback, kept as formal rational
/// multiples: c1A counts the auxiliary divisor, c1E the s/r-th part of the
/// bundle's determinant.  Addition composes two twists.
struct FormalClass {
  Rational c1A = 0;
  Rational c1E = 0;

  FormalClass operator+(const FormalClass& o) const {
    return FormalClass{c1A + o.c1A, c1E + o.c1E};
  }
  bool operator==(const FormalClass& o) const = default;
};

/// The class a * A + (s/r) * det E attached to a rank-s subsheaf step;
/// requires 1 <= s <= r.
FormalClass compose_cover(const Rational& a, int s, int r);

/// Pullback along the n-th Frobenius power in characteristic p: slopes and
/// per-quotient degrees scale by p^n, the map degree does not.  The result
/// is validated before returning.
FiltrationCertificate frobenius_scale(const FiltrationCertificate& cert,
                                      long p, int n);

/// Chern invariants of the rank-2 sum L + L^{-1} on a surface: c1 = 0,
/// c2 = -L^2, discriminant Delta = 4 c2.  The bundle is numerically flat
/// exactly when L^2 = 0 and L.H = 0; l_square_nonzero flags whether the
/// L^2 != 0 hypothesis is met, l_dot_h_zero whether L.H = 0 is.
struct SurfaceInvariants {
  Rational c1 = 0;
  Rational c2 = 0;
  Rational Delta = 0;
  bool numerically_flat = false;
  bool l_square_nonzero = false;
  bool l_dot_h_zero = false;
};

SurfaceInvariants example_surface_invariants(const Rational& L_square,
                                             const Rational& L_dot_H);

/// Builds a certificate from computed table rows (slope mu = 0): step m gets
/// deg_f = degree_coefficient * (n m)^{C(r,2)} and qdeg_i = kappa_i * n^{C(r,2)}.
/// All rows must share one rank and be nondegenerate.  The resulting
/// certificate passes check_limit_hypothesis with an exact C / m law.
FiltrationCertificate certificate_from_rows(
    const std::vector<approx::ApproxRow>& rows, int d);

}  // namespace gysincalc::certify
