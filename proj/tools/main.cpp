#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gysincalc/approx.hpp"
#include "gysincalc/audit.hpp"
#include "gysincalc/certify.hpp"
#include "gysincalc/errors.hpp"
#include "gysincalc/poly_text.hpp"
#include "gysincalc/pushforward.hpp"
#include "gysincalc/root_context.hpp"

namespace {

using gysincalc::Rational;
using gysincalc::approx::WeightVector;
using gysincalc::gysin::RootContext;
using gysincalc::polyring::MultiPoly;
using nlohmann::json;

struct usage_error {
  std::string message;
};

// "2..5" or "3" or "1,2,5,10"; ranges and singles may be mixed.
std::vector<long> parse_int_list(const std::string& text, const char* flag) {
  std::vector<long> out;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) {
    try {
      std::size_t dots = token.find("..");
      if (dots != std::string::npos) {
        long lo = std::stol(token.substr(0, dots));
        long hi = std::stol(token.substr(dots + 2));
        if (hi < lo) throw usage_error{std::string(flag) + ": empty range '" + token + "'"};
        for (long v = lo; v <= hi; ++v) out.push_back(v);
      } else {
        out.push_back(std::stol(token));
      }
    } catch (const std::invalid_argument&) {
      throw usage_error{std::string(flag) + ": cannot parse '" + token + "'"};
    } catch (const std::out_of_range&) {
      throw usage_error{std::string(flag) + ": value out of range in '" + token + "'"};
    }
  }
  if (out.empty()) throw usage_error{std::string(flag) + ": empty list"};
  return out;
}

void write_report(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw gysincalc::parse_error("cannot open output path '" + out_path + "'", 0);
  f << text;
  f.flush();
  if (!f.good())
    throw gysincalc::parse_error("failed writing output path '" + out_path + "'", 0);
}

std::string render_class(const gysincalc::gysin::SymmetricClass& cls,
                         const RootContext& ctx, bool zero_c1) {
  MultiPoly v = zero_c1 ? cls.value_at_zero_c1(ctx) : cls.value;
  return gysincalc::polyring::to_canonical_string(v, ctx.class_names());
}

int run_pushforward(int r, const std::string& poly_text, bool zero_c1,
                    const std::string& format, const std::string& out_path,
                    std::uint64_t seed) {
  RootContext ctx(r);
  std::size_t tn = ctx.t_vars();
  std::map<std::string, std::size_t> vars;
  for (std::size_t i = 0; i < tn; ++i) {
    vars["t" + std::to_string(i + 1)] = i;
    vars["xi" + std::to_string(i + 1)] = i;
  }
  MultiPoly f = gysincalc::polyring::parse_polynomial(poly_text, vars, tn);
  MultiPoly f_tower = ctx.t_to_tower(f);

  auto tower = gysincalc::gysin::tower_pushforward(f_tower, ctx);
  auto dd = gysincalc::gysin::dd_pushforward(f_tower, ctx);
  if (!(tower.value == dd.value) || tower.fiber_codrop != dd.fiber_codrop)
    throw gysincalc::consistency_error(
        "tower and divided-difference push-forwards disagree on this input");

  unsigned top = static_cast<unsigned>(ctx.fiber_dimension());
  auto hom = f.homogeneous_degree();
  bool formula_applies =
      hom.is_zero() ||
      (hom.is_homogeneous() && (hom.degree == top || hom.degree == top + 1));
  std::string formula_note;
  if (!formula_applies)
    formula_note = hom.is_homogeneous()
                       ? "not evaluated: degree " + std::to_string(hom.degree) +
                             " is neither " + std::to_string(top) + " nor " +
                             std::to_string(top + 1)
                       : "not evaluated: the input is not homogeneous";

  std::string degree_text = hom.is_zero() ? "0 (zero polynomial)"
                            : hom.is_homogeneous()
                                ? std::to_string(hom.degree)
                                : "inhomogeneous";

  if (format == "json") {
    json report = {{"seed", seed},
                   {"r", r},
                   {"input", gysincalc::polyring::to_canonical_string(f, ctx.t_names())},
                   {"degree", degree_text},
                   {"fiber_dimension", top},
                   {"zero_c1", zero_c1},
                   {"tower", render_class(tower, ctx, zero_c1)},
                   {"divided_difference", render_class(dd, ctx, zero_c1)},
                   {"oracle_agreement", true}};
    if (formula_applies) {
      json by_variant = json::object();
      for (auto v : gysincalc::approx::all_variants())
        by_variant[gysincalc::gysin::variant_name(v)] = gysincalc::to_string(
            gysincalc::gysin::paper_coefficient_formula(f, r, v).value);
      report["formula"] = by_variant;
    } else {
      report["formula"] = formula_note;
    }
    write_report(report.dump(2) + "\n", out_path);
    return 0;
  }

  std::ostringstream os;
  os << "seed: " << seed << "\n";
  os << "rank: " << r << " (fiber dimension " << top << ")\n";
  os << "input: " << gysincalc::polyring::to_canonical_string(f, ctx.t_names())
     << "\n";
  os << "degree: " << degree_text << "\n";
  if (zero_c1) os << "evaluated at e1 = 0\n";
  os << "tower push-forward:              " << render_class(tower, ctx, zero_c1)
     << "\n";
  os << "divided-difference push-forward: " << render_class(dd, ctx, zero_c1)
     << "\n";
  os << "oracle agreement: yes\n";
  if (formula_applies) {
    for (auto v : gysincalc::approx::all_variants()) {
      auto res = gysincalc::gysin::paper_coefficient_formula(f, r, v);
      os << "formula[" << gysincalc::gysin::variant_name(v)
         << "]: " << gysincalc::to_string(res.value);
      if (!res.top_degree) os << "  (one above the top degree: structurally 0)";
      os << "\n";
    }
  } else {
    os << "formula: " << formula_note << "\n";
  }
  write_report(os.str(), out_path);
  return 0;
}

int run_audit(const std::string& r_text, std::uint64_t seed, int samples,
              const std::string& out_path) {
  gysincalc::approx::AuditConfig config;
  config.r_values.clear();
  for (long r : parse_int_list(r_text, "--r")) {
    if (r < 2) throw usage_error{"--r: rank must be at least 2"};
    config.r_values.push_back(static_cast<int>(r));
  }
  if (samples < 1) throw usage_error{"--samples: must be positive"};
  config.seed = seed;
  config.samples = samples;
  json report = gysincalc::approx::run_audit(config);
  write_report(gysincalc::approx::audit_to_string(report), out_path);
  return 0;
}

int run_table(int r, const std::string& weights_text, const std::string& m_text,
              const std::string& n_text, const std::string& emit_certificate,
              int dim, const std::string& out_path, std::uint64_t seed) {
  RootContext ctx(r);
  WeightVector shape;
  if (weights_text == "ones") {
    shape = gysincalc::approx::ones_weights(r);
  } else if (weights_text == "literal") {
    shape = gysincalc::approx::literal_weights(r);
  } else {
    shape.r = r;
    shape.m_weights = parse_int_list(weights_text, "--weights");
    if (shape.m_weights.size() != static_cast<std::size_t>(r - 1))
      throw usage_error{"--weights: expected " + std::to_string(r - 1) +
                        " comma-separated entries"};
  }
  std::vector<long> m_values = parse_int_list(m_text, "--m");
  std::vector<long> n_values = parse_int_list(n_text, "--n");
  auto rows = gysincalc::approx::make_table(shape, m_values, n_values, ctx);
  std::string csv = "# seed " + std::to_string(seed) + "\n" +
                    gysincalc::approx::table_to_csv(rows);
  write_report(csv, out_path);
  if (!emit_certificate.empty()) {
    auto cert = gysincalc::certify::certificate_from_rows(rows, dim);
    write_report(gysincalc::certify::certificate_to_string(cert),
                 emit_certificate);
  }
  return 0;
}

int run_certify(const std::string& cert_path, const std::string& epsilon_text,
                int r_flag, const std::vector<long>& frobenius,
                const std::string& format, const std::string& out_path,
                std::uint64_t seed) {
  std::ifstream in(cert_path, std::ios::binary);
  if (!in)
    throw gysincalc::parse_error("cannot read certificate '" + cert_path + "'", 0);
  std::stringstream buffer;
  buffer << in.rdbuf();
  auto cert = gysincalc::certify::parse_certificate(buffer.str());
  bool scaled = false;
  if (!frobenius.empty()) {
    cert = gysincalc::certify::frobenius_scale(
        cert, frobenius[0], static_cast<int>(frobenius[1]));
    scaled = true;
  }
  auto limit = gysincalc::certify::check_limit_hypothesis(cert);
  bool have_gap = !epsilon_text.empty();
  gysincalc::certify::GapVerdict gap;
  if (have_gap) {
    Rational eps = gysincalc::parse_rational(epsilon_text);
    gap = gysincalc::certify::gap_check(eps, r_flag > 0 ? r_flag : cert.r);
  }

  if (format == "json") {
    json gaps = json::array();
    for (const Rational& g : limit.gaps) gaps.push_back(gysincalc::to_string(g));
    json report = {{"seed", seed},
                   {"r", cert.r},
                   {"d", cert.d},
                   {"mu", gysincalc::to_string(cert.mu)},
                   {"entries", cert.entries.size()},
                   {"ingestion", "OK"},
                   {"limit",
                    {{"holds", limit.holds},
                     {"gaps", gaps},
                     {"bound_constant", gysincalc::to_string(limit.bound_constant)},
                     {"violating_index", limit.violating_index}}}};
    if (scaled) report["frobenius"] = {{"p", frobenius[0]}, {"n", frobenius[1]}};
    if (have_gap)
      report["gap"] = {{"epsilon", gysincalc::to_string(gap.epsilon)},
                       {"threshold", gysincalc::to_string(gap.threshold)},
                       {"accepted", gap.accepted}};
    write_report(report.dump(2) + "\n", out_path);
    return 0;
  }

  std::ostringstream os;
  os << "seed: " << seed << "\n";
  os << "certificate: r=" << cert.r << " d=" << cert.d
     << " mu=" << gysincalc::to_string(cert.mu) << " entries=" << cert.entries.size()
     << "\n";
  if (scaled)
    os << "frobenius scaling applied: p=" << frobenius[0] << " n=" << frobenius[1]
       << "\n";
  os << "ingestion: OK\n";
  if (limit.holds) {
    os << "limit hypothesis: HOLDS (bound constant "
       << gysincalc::to_string(limit.bound_constant) << ")\n";
  } else {
    os << "limit hypothesis: FAILS (first violation at entry "
       << limit.violating_index << ")\n";
  }
  os << "gaps:";
  for (const Rational& g : limit.gaps) os << " " << gysincalc::to_string(g);
  os << "\n";
  if (have_gap) {
    os << "gap check: epsilon " << gysincalc::to_string(gap.epsilon)
       << (gap.accepted ? " < " : " >= ") << "threshold "
       << gysincalc::to_string(gap.threshold) << ": "
       << (gap.accepted ? "accepted" : "rejected") << "\n";
  }
  write_report(os.str(), out_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Gysin push-forward calculator for flag and Grassmann bundles"};
  app.require_subcommand(1);

  int push_r = 2;
  std::string push_poly, push_format = "text", push_out;
  bool push_zero_c1 = false;
  std::uint64_t push_seed = 42;
  auto* push = app.add_subcommand(
      "pushforward", "Push a polynomial in t1..t{r-1} down the flag tower");
  push->add_option("--r", push_r, "bundle rank")->required()->check(CLI::Range(2, 16));
  push->add_option("--poly", push_poly,
                   "polynomial in t1..t{r-1}; xi1..xi{r-1} are synonyms")
      ->required();
  push->add_flag("--zero-c1", push_zero_c1, "evaluate results at e1 = 0");
  push->add_option("--format", push_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  push->add_option("--out", push_out, "write the report to this path");
  push->add_option("--seed", push_seed, "seed recorded in the report");

  std::string audit_r = "2..5", audit_out;
  std::uint64_t audit_seed = 42;
  int audit_samples = 50;
  auto* audit = app.add_subcommand(
      "audit", "Cross-check printed formulas and dictionaries against the oracles");
  audit->add_option("--r", audit_r, "rank or range, e.g. 3 or 2..5");
  audit->add_option("--seed", audit_seed, "RNG seed for sampled inputs");
  audit->add_option("--samples", audit_samples, "sample count per claim");
  audit->add_option("--out", audit_out, "write the JSON report to this path");

  int table_r = 2, table_dim = 2;
  std::string table_weights = "ones", table_m = "1..5", table_n = "1";
  std::string table_cert, table_out;
  std::uint64_t table_seed = 42;
  auto* table = app.add_subcommand(
      "table", "Emit the per-quotient coefficient and decay table as CSV");
  table->add_option("--r", table_r, "bundle rank")->required()->check(CLI::Range(2, 16));
  table->add_option("--weights", table_weights,
                    "ones, literal, or r-1 comma-separated integers");
  table->add_option("--m", table_m, "multiplier range, e.g. 1..20");
  table->add_option("--n", table_n, "twist list, e.g. 1,2");
  table->add_option("--emit-certificate", table_cert,
                    "also write a filtration certificate built from the rows");
  table->add_option("--dim", table_dim, "base dimension recorded in the certificate")
      ->check(CLI::PositiveNumber);
  table->add_option("--out", table_out, "write the CSV to this path");
  table->add_option("--seed", table_seed, "seed recorded in the report");

  std::string certify_cert, certify_epsilon, certify_format = "text", certify_out;
  int certify_r = 0;
  std::vector<long> certify_frobenius;
  std::uint64_t certify_seed = 42;
  auto* certify = app.add_subcommand(
      "certify", "Validate a filtration certificate and test the decay hypothesis");
  certify->add_option("--cert", certify_cert, "certificate JSON path")->required();
  certify->add_option("--epsilon", certify_epsilon,
                      "strictness margin to test, e.g. 1/1000");
  certify->add_option("--r", certify_r,
                      "rank for the margin threshold (default: certificate rank)");
  certify->add_option("--frobenius", certify_frobenius,
                      "characteristic p and power n: scale degrees by p^n first")
      ->expected(2);
  certify->add_option("--format", certify_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  certify->add_option("--out", certify_out, "write the report to this path");
  certify->add_option("--seed", certify_seed, "seed recorded in the report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*push)
      return run_pushforward(push_r, push_poly, push_zero_c1, push_format,
                             push_out, push_seed);
    if (*audit) return run_audit(audit_r, audit_seed, audit_samples, audit_out);
    if (*table)
      return run_table(table_r, table_weights, table_m, table_n, table_cert,
                       table_dim, table_out, table_seed);
    if (*certify)
      return run_certify(certify_cert, certify_epsilon, certify_r,
                         certify_frobenius, certify_format, certify_out,
                         certify_seed);
  } catch (const usage_error& e) {
    std::cerr << "usage error: " << e.message << "\n";
    return 1;
  } catch (const gysincalc::parse_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const gysincalc::dimension_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const gysincalc::consistency_error& e) {
    std::cerr << "internal consistency failure: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 1;
}
