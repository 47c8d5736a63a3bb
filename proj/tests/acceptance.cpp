#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "doctest.h"
#include "json.hpp"

#include "gysincalc/approx.hpp"
#include "gysincalc/audit.hpp"
#include "gysincalc/certify.hpp"
#include "gysincalc/permutation.hpp"
#include "gysincalc/pushforward.hpp"
#include "gysincalc/rng.hpp"
#include "gysincalc/root_context.hpp"
#include "sampling.hpp"

namespace {

using gysincalc::Rational;
using gysincalc::SplitMix64;
using gysincalc::make_rational;
using gysincalc::gysin::RootContext;
using gysincalc::polyring::MultiPoly;
using nlohmann::json;

// Each criterion prints exactly one verdict line when its scope closes.
struct Criterion {
  int number;
  const char* description;
  bool ok = true;

  ~Criterion() {
    std::printf("%s criterion %d: %s\n", ok ? "PASS" : "FAIL", number,
                description);
    std::fflush(stdout);
  }
};

struct CliResult {
  int exit_code = -1;
  std::string output;
};

CliResult run_cli(const std::string& args) {
  std::string cmd = std::string(GYSINCALC_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return {};
  CliResult result;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) result.output.append(buf, n);
  int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

}  // namespace

#define ACC(cond)                             \
  do {                                        \
    bool acc_ok_ = static_cast<bool>(cond);   \
    if (!acc_ok_) crit.ok = false;            \
    CHECK(acc_ok_);                           \
  } while (0)

#define ACC_BODY_END                          \
  }                                           \
  catch (const std::exception& e) {           \
    crit.ok = false;                          \
    CHECK_MESSAGE(false, e.what());           \
  }

TEST_CASE("acceptance: oracle equivalence") {
  Criterion crit{
      1, "tower and divided-difference push-forwards agree on 500 sampled "
         "inputs per rank 2..5"};
  try {
    auto start = std::chrono::steady_clock::now();
    for (int r = 2; r <= 5; ++r) {
      RootContext ctx(r);
      SplitMix64 rng(1000 + static_cast<std::uint64_t>(r));
      unsigned top = static_cast<unsigned>(ctx.fiber_dimension());
      for (int i = 0; i < 500; ++i) {
        unsigned degree = top - 1 + static_cast<unsigned>(i % 4);
        MultiPoly f = sampling::random_tower_poly(rng, ctx, degree, true);
        auto tower = gysincalc::gysin::tower_pushforward(f, ctx);
        auto dd = gysincalc::gysin::dd_pushforward(f, ctx);
        ACC(tower.value == dd.value);
        ACC(tower.fiber_codrop == dd.fiber_codrop);
      }
    }
    auto elapsed = std::chrono::duration_cast<std::chrono::seconds>(
        std::chrono::steady_clock::now() - start);
    ACC(elapsed.count() < 120);
  ACC_BODY_END
}

TEST_CASE("acceptance: word independence") {
  Criterion crit{
      2, "divided-difference push-forward is identical across distinct "
         "reduced words"};
  try {
    for (int r = 2; r <= 5; ++r) {
      RootContext ctx(r);
      auto words = gysincalc::gysin::longest_element_words(
          r, 3, 900 + static_cast<std::uint64_t>(r));
      ACC(words.size() == (r >= 4 ? 3u : (r == 3 ? 2u : 1u)));
      SplitMix64 rng(910 + static_cast<std::uint64_t>(r));
      unsigned top = static_cast<unsigned>(ctx.fiber_dimension());
      for (int i = 0; i < 5; ++i) {
        MultiPoly f =
            ctx.tower_to_root(sampling::random_tower_poly(rng, ctx, top, true));
        auto reference = gysincalc::gysin::dd_pushforward_root(f, ctx);
        for (const auto& word : words) {
          auto sample =
              gysincalc::gysin::dd_pushforward_root_with_word(f, ctx, word);
          ACC(sample.value == reference.value);
          ACC(sample.fiber_codrop == reference.fiber_codrop);
        }
      }
    }
  ACC_BODY_END
}

TEST_CASE("acceptance: vanishing below the fiber dimension") {
  Criterion crit{
      3, "push-forwards vanish below the fiber dimension on every route"};
  try {
    for (int r = 2; r <= 5; ++r) {
      RootContext ctx(r);
      unsigned top = static_cast<unsigned>(ctx.fiber_dimension());
      SplitMix64 rng(920 + static_cast<std::uint64_t>(r));
      for (int i = 0; i < 100; ++i) {
        unsigned degree = static_cast<unsigned>(rng.below(top));
        MultiPoly f = sampling::random_tower_poly(rng, ctx, degree, true);
        ACC(gysincalc::gysin::tower_pushforward(f, ctx).is_zero());
        ACC(gysincalc::gysin::dd_pushforward(f, ctx).is_zero());
      }
      for (int s = 1; s <= r - 1; ++s) {
        int rel = s * (r - s);
        MultiPoly xi = ctx.gr_xi_root(s);
        MultiPoly power = MultiPoly::constant(ctx.root_vars(), 1);
        for (int k = 0; k < rel; ++k) {
          ACC(gysincalc::gysin::gr_pushforward(power, ctx, s).is_zero());
          power = power * xi;
        }
      }
    }
  ACC_BODY_END
}

TEST_CASE("acceptance: one above the fiber dimension") {
  Criterion crit{
      4, "push-forwards one above the fiber dimension are multiples of e1"};
  try {
    for (int r = 2; r <= 5; ++r) {
      RootContext ctx(r);
      unsigned top = static_cast<unsigned>(ctx.fiber_dimension());
      SplitMix64 rng(930 + static_cast<std::uint64_t>(r));
      MultiPoly e1 = MultiPoly::variable(ctx.class_vars(), ctx.class_e(1));
      for (int i = 0; i < 100; ++i) {
        MultiPoly f = sampling::random_tower_poly(rng, ctx, top + 1, false);
        auto cls = gysincalc::gysin::tower_pushforward(f, ctx);
        ACC(cls.value_at_zero_c1(ctx).is_zero());
        ACC(cls.value == e1 * cls.e1_coefficient(ctx));
      }
    }
  ACC_BODY_END
}

TEST_CASE("acceptance: projective quotient anchors") {
  Criterion crit{
      5, "for s = r-1 the quotient class xi satisfies xi^(r-1) -> 1 and "
         "xi^r -> e1 up to rank 6"};
  try {
    for (int r = 2; r <= 6; ++r) {
      RootContext ctx(r);
      int s = r - 1;
      MultiPoly xi = ctx.gr_xi_root(s);
      MultiPoly power = xi.pow(static_cast<unsigned>(r - 1));
      auto unit = gysincalc::gysin::gr_pushforward(power, ctx, s);
      ACC(unit.is_constant());
      ACC(unit.constant_value() == 1);
      auto next = gysincalc::gysin::gr_pushforward(power * xi, ctx, s);
      MultiPoly e1 = MultiPoly::variable(ctx.class_vars(), ctx.class_e(1));
      ACC(next.value == e1);
    }
  ACC_BODY_END
}

TEST_CASE("acceptance: weighted degree constants") {
  Criterion crit{6, "weighted degree constants match the expected values"};
  try {
    for (int r = 2; r <= 6; ++r) {
      RootContext ctx(r);
      Rational ones = gysincalc::approx::weighted_degree(
          gysincalc::approx::ones_weights(r), ctx);
      ACC(ones > 0);
      if (r == 2) ACC(ones == 1);
      if (r == 3) ACC(ones == 6);
      Rational literal = gysincalc::approx::weighted_degree(
          gysincalc::approx::literal_weights(r), ctx);
      if (r == 2) ACC(literal == 1);
      if (r == 3 || r == 4) ACC(literal == 0);
    }
  ACC_BODY_END
}

TEST_CASE("acceptance: decay table") {
  Criterion crit{
      7, "ratio times m is constant over m = 1..20 and n = 1..3, and the "
         "per-quotient coefficients of every row sum to zero"};
  try {
    for (int r = 2; r <= 4; ++r) {
      RootContext ctx(r);
      std::vector<long> m_values;
      for (long m = 1; m <= 20; ++m) m_values.push_back(m);
      auto rows = gysincalc::approx::make_table(
          gysincalc::approx::ones_weights(r), m_values, {1, 2, 3}, ctx);
      ACC(rows.size() == 60);
      std::vector<Rational> reference;
      for (std::size_t i = 0; i < rows.front().ratio.size(); ++i)
        reference.push_back(rows.front().ratio[i]);
      for (const auto& row : rows) {
        ACC(!row.degenerate);
        Rational ksum = 0;
        for (const Rational& k : row.kappa) ksum += k;
        ACC(ksum == 0);
        ACC(row.ratio.size() == reference.size());
        for (std::size_t i = 0; i < row.ratio.size(); ++i)
          ACC(row.ratio[i] * row.weights.m_scale == reference[i]);
      }
    }
  ACC_BODY_END
}

TEST_CASE("acceptance: Grassmann ratio") {
  Criterion crit{8, "the pushed quotient class over the degree is s(r-s)/m"};
  try {
    for (int r = 2; r <= 5; ++r) {
      RootContext ctx(r);
      for (int s = 1; s <= r - 1; ++s)
        for (long m : {1L, 2L, 5L, 10L})
          for (long n : {1L, 2L})
            ACC(gysincalc::approx::grassmann_ratio(r, s, m, n, ctx) ==
                make_rational(static_cast<long>(s) * (r - s), m));
    }
  ACC_BODY_END
}

TEST_CASE("acceptance: audit verdicts") {
  Criterion crit{
      9, "the audit confirms the rank-2 extraction and flags the rank-3 "
         "constants exactly"};
  try {
    gysincalc::approx::AuditConfig config;
    json report = gysincalc::approx::run_audit(config);
    auto find = [&](int r, const std::string& claim,
                    const std::string& variant) -> json {
      for (const auto& rec : report["records"])
        if (rec["r"] == r && rec["claim_id"] == claim &&
            rec["variant"] == variant)
          return rec;
      return json();
    };

    ACC(find(2, "formula-vs-oracle", "printed-minus")["verdict"] == "MATCH");
    bool saw_rank2_alpha = false;
    for (const auto& rec : report["records"])
      if (rec["r"] == 2 && rec["claim_id"] == "alpha-positive") {
        saw_rank2_alpha = true;
        ACC(rec["verdict"] == "MATCH");
        ACC(rec["computed"]["alpha_oracle"] == "1");
      }
    ACC(saw_rank2_alpha);

    bool saw_rank3_alpha = false;
    for (const auto& rec : report["records"])
      if (rec["r"] == 3 && rec["claim_id"] == "alpha-positive" &&
          rec["computed"]["weights"] == "literal") {
        saw_rank3_alpha = true;
        ACC(rec["verdict"] == "MISMATCH");
        ACC(rec["computed"]["alpha_oracle"] == "0");
      }
    ACC(saw_rank3_alpha);

    auto beta = find(3, "beta-independent", "printed-minus");
    ACC(beta["verdict"] == "MISMATCH");
    ACC(beta["computed"]["values"] == json::array({"-1", "1"}));
    ACC(find(3, "beta-independent", "oracle")["computed"]["values"] ==
        json::array({"-1", "1"}));
  ACC_BODY_END
}

TEST_CASE("acceptance: certificate loop") {
  Criterion crit{
      10, "generated tables close the certificate loop and the margin, "
          "Frobenius, and surface checks hold"};
  try {
    RootContext ctx(3);
    auto rows = gysincalc::approx::make_table(
        gysincalc::approx::ones_weights(3), {1, 2, 3, 4, 5, 6}, {2}, ctx);
    auto cert = gysincalc::certify::certificate_from_rows(rows, 2);
    ACC(cert.r == 3);
    ACC(cert.entries.size() == 6);
    auto limit = gysincalc::certify::check_limit_hypothesis(cert);
    ACC(limit.holds);
    ACC(limit.violating_index == 0);
    for (std::size_t k = 0; k < limit.gaps.size(); ++k)
      ACC(limit.gaps[k] * make_rational(static_cast<long>(k) + 1) ==
          limit.bound_constant);

    for (int r = 2; r <= 6; ++r) {
      auto verdict = gysincalc::certify::gap_check(make_rational(1, 1000), r);
      ACC(verdict.threshold ==
          make_rational(1, static_cast<long>(r) * (r - 1)));
      ACC(verdict.accepted);
    }

    auto once = gysincalc::certify::frobenius_scale(cert, 2, 1);
    auto thrice = gysincalc::certify::frobenius_scale(once, 2, 2);
    ACC(gysincalc::certify::certificate_to_string(thrice) ==
        gysincalc::certify::certificate_to_string(
            gysincalc::certify::frobenius_scale(cert, 2, 3)));

    auto inv = gysincalc::certify::example_surface_invariants(
        make_rational(1), make_rational(1));
    ACC(inv.c1 == 0);
    ACC(inv.c2 == -1);
    ACC(inv.Delta == -4);
    ACC(!inv.numerically_flat);
    ACC(inv.l_square_nonzero);
    ACC(!inv.l_dot_h_zero);
  ACC_BODY_END
}

TEST_CASE("acceptance: deterministic audit CLI") {
  Criterion crit{11, "audit CLI output is byte identical across repeated runs"};
  try {
    auto first = run_cli("audit --r 2..5 --seed 42");
    ACC(first.exit_code == 0);
    ACC(!first.output.empty());
    auto second = run_cli("audit --r 2..5 --seed 42");
    ACC(second.exit_code == 0);
    ACC(first.output == second.output);
    auto parsed = json::parse(first.output);
    ACC(parsed["records"].is_array());
  ACC_BODY_END
}
