#include <algorithm>
#include <utility>

#include "gysincalc/certify.hpp"

namespace gysincalc::certify {

namespace {

using nlohmann::json;

Rational rational_power(const Rational& base, unsigned k) {
  Rational out = 1;
  for (unsigned i = 0; i < k; ++i) out *= base;
  return out;
}

const json& require_field(const json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key))
    throw parse_error(std::string("certificate field '") + key + "' is missing", 0);
  return obj.at(key);
}

int require_int(const json& obj, const char* key) {
  const json& v = require_field(obj, key);
  if (!v.is_number_integer())
    throw parse_error(std::string("certificate field '") + key +
                          "' must be an integer",
                      0);
  return v.get<int>();
}

Rational require_rational(const json& obj, const char* key) {
  const json& v = require_field(obj, key);
  if (!v.is_string())
    throw parse_error(std::string("certificate field '") + key +
                          "' must be a rational string",
                      0);
  return parse_rational(v.get<std::string>());
}

}  // namespace

void validate_certificate(const FiltrationCertificate& cert) {
  if (cert.r < 2) throw dimension_error("certificate rank must be at least 2");
  if (cert.d < 1)
    throw dimension_error("certificate base dimension must be at least 1");
  if (cert.entries.empty())
    throw dimension_error("certificate must contain at least one entry");
  for (std::size_t k = 0; k < cert.entries.size(); ++k) {
    const CertificateEntry& entry = cert.entries[k];
    std::string at = " in entry " + std::to_string(k + 1);
    if (entry.deg_f <= 0)
      throw dimension_error("map degree must be positive" + at);
    if (entry.qdeg.size() != static_cast<std::size_t>(cert.r))
      throw dimension_error("quotient degree list must have length r" + at);
    Rational sum = 0;
    for (const Rational& q : entry.qdeg) sum += q;
    if (sum != entry.deg_f * Rational(cert.r) * cert.mu)
      throw dimension_error(
          "quotient degrees must sum to deg_f * r * mu" + at);
  }
}

FiltrationCertificate parse_certificate(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw gysincalc::parse_error(
        std::string("certificate is not valid JSON: ") + e.what(), e.byte);
  }
  FiltrationCertificate cert;
  cert.r = require_int(j, "r");
  cert.d = require_int(j, "d");
  cert.mu = require_rational(j, "mu");
  const json& entries = require_field(j, "entries");
  if (!entries.is_array())
    throw parse_error("certificate field 'entries' must be an array", 0);
  for (const json& e : entries) {
    CertificateEntry entry;
    entry.deg_f = require_rational(e, "deg_f");
    const json& qdeg = require_field(e, "qdeg");
    if (!qdeg.is_array())
      throw parse_error("certificate field 'qdeg' must be an array", 0);
    for (const json& q : qdeg) {
      if (!q.is_string())
        throw parse_error("quotient degrees must be rational strings", 0);
      entry.qdeg.push_back(parse_rational(q.get<std::string>()));
    }
    cert.entries.push_back(std::move(entry));
  }
  validate_certificate(cert);
  return cert;
}

nlohmann::json certificate_to_json(const FiltrationCertificate& cert) {
  json entries = json::array();
  for (const CertificateEntry& entry : cert.entries) {
    json qdeg = json::array();
    for (const Rational& q : entry.qdeg) qdeg.push_back(to_string(q));
    entries.push_back(json{{"deg_f", to_string(entry.deg_f)}, {"qdeg", qdeg}});
  }
  return json{{"r", cert.r},
              {"d", cert.d},
              {"mu", to_string(cert.mu)},
              {"entries", entries}};
}

std::string certificate_to_string(const FiltrationCertificate& cert) {
  return certificate_to_json(cert).dump(2) + "\n";
}

LimitReport check_limit_hypothesis(const FiltrationCertificate& cert) {
  validate_certificate(cert);
  LimitReport report;
  for (const CertificateEntry& entry : cert.entries) {
    Rational maxq = entry.qdeg.front();
    for (const Rational& q : entry.qdeg) maxq = std::max(maxq, q);
    report.gaps.push_back(maxq / entry.deg_f - cert.mu);
  }
  report.bound_constant = report.gaps.front();
  report.holds = true;
  report.violating_index = 0;
  for (std::size_t k = 0; k < report.gaps.size(); ++k) {
    Rational m(static_cast<long>(k + 1));
    bool bad = report.gaps[k] < 0;
    if (!bad && k > 0)
      bad = m * report.gaps[k] > (m - 1) * report.gaps[k - 1];
    if (bad) {
      report.holds = false;
      report.violating_index = static_cast<int>(k + 1);
      break;
    }
  }
  return report;
}

GapVerdict gap_check(const Rational& epsilon, int r) {
  if (r < 2) throw dimension_error("rank must be at least 2");
  if (epsilon <= 0) throw dimension_error("epsilon must be positive");
  GapVerdict verdict;
  verdict.epsilon = epsilon;
  verdict.threshold = make_rational(1, static_cast<long>(r) * (r - 1));
  verdict.accepted = epsilon < verdict.threshold;
  return verdict;
}

FormalClass compose_cover(const Rational& a, int s, int r) {
  if (r < 1 || s < 1 || s > r)
    throw dimension_error("subsheaf rank must satisfy 1 <= s <= r");
  return FormalClass{a, make_rational(s, r)};
}

FiltrationCertificate frobenius_scale(const FiltrationCertificate& cert,
                                      long p, int n) {
  if (p < 2) throw dimension_error("characteristic must be at least 2");
  if (n < 0) throw dimension_error("Frobenius power must be nonnegative");
  Rational factor = rational_power(Rational(p), static_cast<unsigned>(n));
  FiltrationCertificate out = cert;
  out.mu *= factor;
  for (CertificateEntry& entry : out.entries)
    for (Rational& q : entry.qdeg) q *= factor;
  validate_certificate(out);
  return out;
}

SurfaceInvariants example_surface_invariants(const Rational& L_square,
                                             const Rational& L_dot_H) {
  SurfaceInvariants inv;
  inv.c1 = 0;
  inv.c2 = -L_square;
  inv.Delta = Rational(4) * inv.c2;
  inv.numerically_flat = (L_square == 0 && L_dot_H == 0);
  inv.l_square_nonzero = (L_square != 0);
  inv.l_dot_h_zero = (L_dot_H == 0);
  return inv;
}

FiltrationCertificate certificate_from_rows(
    const std::vector<approx::ApproxRow>& rows, int d) {
  if (rows.empty())
    throw dimension_error("certificate construction needs at least one row");
  int r = rows.front().weights.r;
  FiltrationCertificate cert;
  cert.r = r;
  cert.d = d;
  cert.mu = 0;
  unsigned top = static_cast<unsigned>(r) * (r - 1) / 2;
  for (const approx::ApproxRow& row : rows) {
    if (row.weights.r != r)
      throw dimension_error("all rows must share one rank");
    if (row.degenerate)
      throw dimension_error(
          "degenerate rows cannot back a certificate: the degree is zero");
    Rational nm(row.weights.n * row.weights.m_scale);
    Rational n_pow = rational_power(Rational(row.weights.n), top);
    CertificateEntry entry;
    entry.deg_f = row.degree_coefficient * rational_power(nm, top);
    for (const Rational& k : row.kappa) entry.qdeg.push_back(k * n_pow);
    cert.entries.push_back(std::move(entry));
  }
  validate_certificate(cert);
  return cert;
}

}  // namespace gysincalc::certify
