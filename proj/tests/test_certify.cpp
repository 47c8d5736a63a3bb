#include <vector>

#include "doctest.h"

#include "gysincalc/approx.hpp"
#include "gysincalc/certify.hpp"
#include "gysincalc/root_context.hpp"

using gysincalc::Rational;
using gysincalc::dimension_error;
using gysincalc::make_rational;
using gysincalc::parse_error;
using namespace gysincalc::certify;

namespace {

// mu = 0 certificate whose step-m gap is exactly top/m: qdeg (top/m, -top/m, 0...).
FiltrationCertificate inverse_law_certificate(int r, int steps, long top) {
  FiltrationCertificate cert;
  cert.r = r;
  cert.d = 2;
  cert.mu = 0;
  for (int m = 1; m <= steps; ++m) {
    CertificateEntry entry;
    entry.deg_f = 1;
    entry.qdeg.assign(static_cast<std::size_t>(r), 0);
    entry.qdeg[0] = make_rational(top, m);
    entry.qdeg[1] = -make_rational(top, m);
    cert.entries.push_back(entry);
  }
  return cert;
}

}  // namespace

TEST_CASE("limit hypothesis holds on an exact 1/m law") {
  auto cert = inverse_law_certificate(3, 6, 1);
  auto report = check_limit_hypothesis(cert);
  CHECK(report.holds);
  CHECK(report.violating_index == 0);
  CHECK(report.bound_constant == 1);
  for (std::size_t k = 0; k < report.gaps.size(); ++k)
    CHECK(report.gaps[k] == make_rational(1, static_cast<long>(k) + 1));
}

TEST_CASE("limit hypothesis fails without decay") {
  FiltrationCertificate cert;
  cert.r = 2;
  cert.d = 1;
  cert.mu = 0;
  for (int m = 1; m <= 4; ++m) {
    CertificateEntry entry;
    entry.deg_f = 2;
    entry.qdeg = {1, -1};
    cert.entries.push_back(entry);
  }
  auto report = check_limit_hypothesis(cert);
  CHECK_FALSE(report.holds);
  CHECK(report.violating_index == 2);
  for (const Rational& g : report.gaps) CHECK(g == Rational(1, 2));
}

TEST_CASE("limit hypothesis flags a mid-sequence decay violation") {
  FiltrationCertificate cert;
  cert.r = 2;
  cert.d = 1;
  cert.mu = 1;
  CertificateEntry first;
  first.deg_f = 1;
  first.qdeg = {1, 1};  // gap 0
  cert.entries.push_back(first);
  CertificateEntry bump;
  bump.deg_f = 2;
  bump.qdeg = {1, 3};  // sum 4 = 2*2*1, gap 3/2 - 1 = 1/2
  cert.entries.push_back(bump);
  CertificateEntry tail;
  tail.deg_f = 4;
  tail.qdeg = {4, 4};  // gap 0 again
  cert.entries.push_back(tail);
  auto report = check_limit_hypothesis(cert);
  // 2 * (1/2) = 1 exceeds 1 * 0 from the first entry.
  CHECK_FALSE(report.holds);
  CHECK(report.violating_index == 2);
}

TEST_CASE("certificate validation rejects malformed data") {
  FiltrationCertificate cert;
  cert.r = 2;
  cert.d = 1;
  cert.mu = 0;
  CHECK_THROWS_AS(validate_certificate(cert), dimension_error);

  CertificateEntry entry;
  entry.deg_f = 1;
  entry.qdeg = {1, -1};
  cert.entries.push_back(entry);
  CHECK_NOTHROW(validate_certificate(cert));

  cert.entries[0].deg_f = 0;
  CHECK_THROWS_AS(validate_certificate(cert), dimension_error);
  cert.entries[0].deg_f = 1;
  cert.entries[0].qdeg = {1};
  CHECK_THROWS_AS(validate_certificate(cert), dimension_error);
  cert.entries[0].qdeg = {1, 1};
  CHECK_THROWS_AS(validate_certificate(cert), dimension_error);
  cert.entries[0].qdeg = {1, -1};
  cert.r = 1;
  CHECK_THROWS_AS(validate_certificate(cert), dimension_error);
}

TEST_CASE("certificate JSON round trip and parse errors") {
  auto cert = inverse_law_certificate(2, 3, 2);
  auto parsed = parse_certificate(certificate_to_string(cert));
  CHECK(parsed.r == cert.r);
  CHECK(parsed.d == cert.d);
  CHECK(parsed.mu == cert.mu);
  REQUIRE(parsed.entries.size() == cert.entries.size());
  for (std::size_t i = 0; i < parsed.entries.size(); ++i) {
    CHECK(parsed.entries[i].deg_f == cert.entries[i].deg_f);
    CHECK(parsed.entries[i].qdeg == cert.entries[i].qdeg);
  }

  CHECK_THROWS_AS((void)parse_certificate("{not json"), parse_error);
  CHECK_THROWS_AS((void)parse_certificate(R"({"r": 2, "d": 1})"), parse_error);
  CHECK_THROWS_AS((void)parse_certificate(
                      R"({"r": 2, "d": 1, "mu": "0", "entries": "x"})"),
                  parse_error);
  CHECK_THROWS_AS((void)parse_certificate(
                      R"({"r": "2", "d": 1, "mu": "0", "entries": []})"),
                  parse_error);
  // Structurally valid JSON violating the sum invariant.
  CHECK_THROWS_AS(
      (void)parse_certificate(
          R"({"r": 2, "d": 1, "mu": "0",
              "entries": [{"deg_f": "1", "qdeg": ["1", "1"]}]})"),
      dimension_error);
}

TEST_CASE("gap check thresholds") {
  auto v = gap_check(make_rational(1, 1000), 2);
  CHECK(v.threshold == Rational(1, 2));
  CHECK(v.accepted);
  CHECK_FALSE(gap_check(make_rational(6, 10), 2).accepted);
  CHECK(gap_check(make_rational(1, 7), 3).threshold == Rational(1, 6));
  for (int r = 2; r <= 5; ++r)
    CHECK(gap_check(Rational(1, 100), r).threshold >
          gap_check(Rational(1, 100), r + 1).threshold);
  CHECK_THROWS_AS((void)gap_check(0, 2), dimension_error);
  CHECK_THROWS_AS((void)gap_check(Rational(-1, 2), 2), dimension_error);
}

TEST_CASE("cover composition classes") {
  FormalClass c = compose_cover(make_rational(1, 10), 1, 2);
  CHECK(c.c1A == Rational(1, 10));
  CHECK(c.c1E == Rational(1, 2));
  CHECK(compose_cover(0, 2, 3).c1E == Rational(2, 3));
  CHECK(compose_cover(5, 4, 4).c1E == 1);
  CHECK_THROWS_AS((void)compose_cover(1, 0, 3), dimension_error);
  CHECK_THROWS_AS((void)compose_cover(1, 4, 3), dimension_error);

  // Composition adds the twist coefficients and the determinant fractions.
  for (long a = -3; a <= 3; ++a)
    for (long b = -3; b <= 3; ++b)
      CHECK(compose_cover(a, 1, 3) + compose_cover(b, 1, 3) ==
            compose_cover(a + b, 2, 3));
}

TEST_CASE("Frobenius rescaling") {
  auto cert = inverse_law_certificate(2, 4, 3);
  cert.mu = 0;

  auto doubled = frobenius_scale(cert, 2, 1);
  CHECK(doubled.entries[0].qdeg[0] == 2 * cert.entries[0].qdeg[0]);
  CHECK(doubled.entries[0].deg_f == cert.entries[0].deg_f);

  auto identity = frobenius_scale(cert, 5, 0);
  CHECK(identity.entries[2].qdeg == cert.entries[2].qdeg);
  CHECK(identity.mu == cert.mu);

  // Composition: scaling by p^a then p^b equals scaling by p^(a+b).
  auto twice = frobenius_scale(frobenius_scale(cert, 3, 1), 3, 2);
  auto direct = frobenius_scale(cert, 3, 3);
  CHECK(twice.mu == direct.mu);
  for (std::size_t i = 0; i < cert.entries.size(); ++i)
    CHECK(twice.entries[i].qdeg == direct.entries[i].qdeg);

  // The verdict survives scaling.
  CHECK(check_limit_hypothesis(cert).holds ==
        check_limit_hypothesis(doubled).holds);
  CHECK_THROWS_AS((void)frobenius_scale(cert, 1, 1), dimension_error);
  CHECK_THROWS_AS((void)frobenius_scale(cert, 2, -1), dimension_error);
}

TEST_CASE("uniform rescaling of degrees changes no verdict") {
  auto cert = inverse_law_certificate(3, 5, 2);
  auto scaled = cert;
  Rational factor(7, 3);
  for (auto& entry : scaled.entries) {
    entry.deg_f *= factor;
    for (Rational& q : entry.qdeg) q *= factor;
  }
  auto before = check_limit_hypothesis(cert);
  auto after = check_limit_hypothesis(scaled);
  CHECK(before.holds == after.holds);
  CHECK(before.gaps == after.gaps);

  auto failing = cert;
  failing.entries[3].qdeg[0] = 0;
  failing.entries[3].qdeg[1] = 0;
  auto failing_scaled = failing;
  for (auto& entry : failing_scaled.entries) {
    entry.deg_f *= factor;
    for (Rational& q : entry.qdeg) q *= factor;
  }
  CHECK(check_limit_hypothesis(failing).holds ==
        check_limit_hypothesis(failing_scaled).holds);
}

TEST_CASE("surface invariants of the split rank-2 example") {
  auto inv = example_surface_invariants(1, 0);
  CHECK(inv.c1 == 0);
  CHECK(inv.c2 == -1);
  CHECK(inv.Delta == -4);
  CHECK_FALSE(inv.numerically_flat);
  CHECK(inv.l_square_nonzero);
  CHECK(inv.l_dot_h_zero);

  auto degenerate = example_surface_invariants(0, 0);
  CHECK_FALSE(degenerate.l_square_nonzero);
  CHECK(degenerate.numerically_flat);

  auto negative = example_surface_invariants(-2, 0);
  CHECK(negative.c2 == 2);
  CHECK(negative.Delta == 8);

  auto off_hypothesis = example_surface_invariants(1, 3);
  CHECK_FALSE(off_hypothesis.l_dot_h_zero);
  CHECK_FALSE(off_hypothesis.numerically_flat);
}

TEST_CASE("certificates built from table rows close the loop") {
  gysincalc::gysin::RootContext ctx(3);
  auto rows = gysincalc::approx::make_table(gysincalc::approx::ones_weights(3),
                                            {1, 2, 3, 4, 5, 6}, {2}, ctx);
  auto cert = certificate_from_rows(rows, 2);
  CHECK(cert.r == 3);
  CHECK(cert.mu == 0);
  CHECK(cert.entries.size() == 6);
  auto report = check_limit_hypothesis(cert);
  CHECK(report.holds);
  // The decay is an exact inverse law: m * g_m equals the bound constant.
  for (std::size_t k = 0; k < report.gaps.size(); ++k)
    CHECK(Rational(static_cast<long>(k) + 1) * report.gaps[k] ==
          report.bound_constant);

  auto degenerate_rows = gysincalc::approx::make_table(
      gysincalc::approx::literal_weights(3), {1, 2}, {1}, ctx);
  CHECK_THROWS_AS((void)certificate_from_rows(degenerate_rows, 2),
                  dimension_error);
  CHECK_THROWS_AS((void)certificate_from_rows({}, 2), dimension_error);
}
