#include <sstream>

#include "gysincalc/approx.hpp"

namespace gysincalc::approx {

namespace {

Rational rational_power(const Rational& base, unsigned exp) {
  Rational out = 1;
  for (unsigned i = 0; i < exp; ++i) out *= base;
  return out;
}

Rational constant_at_zero_c1(const gysin::SymmetricClass& cls,
                             const RootContext& ctx) {
  MultiPoly z = cls.value_at_zero_c1(ctx);
  if (z.is_zero()) return 0;
  polyring::Homogeneity h = z.homogeneous_degree();
  if (!(h.is_homogeneous() && h.degree == 0))
    throw consistency_error("push-forward expected to be constant is not");
  return z.coefficient_of(polyring::Exponents(ctx.class_vars(), 0));
}

MultiPoly weighted_tau_sum(const WeightVector& w, const RootContext& ctx) {
  MultiPoly out(ctx.tower_vars());
  for (int s = 1; s <= w.r - 1; ++s) {
    long ms = w.m_weights[static_cast<std::size_t>(s) - 1];
    if (ms != 0) out += ctx.tau_tower(s) * Rational(ms);
  }
  return out;
}

}  // namespace

void WeightVector::validate() const {
  if (r < 2) throw dimension_error("rank must be at least 2");
  if (m_weights.size() != static_cast<std::size_t>(r) - 1)
    throw dimension_error("weight shape must have r-1 entries");
  bool positive = false;
  for (long m : m_weights) {
    if (m < 0) throw dimension_error("weights must be nonnegative");
    if (m > 0) positive = true;
  }
  if (!positive) throw dimension_error("at least one weight must be positive");
  if (n < 1) throw dimension_error("n must be positive");
  if (m_scale < 1) throw dimension_error("m_scale must be positive");
}

WeightVector ones_weights(int r) {
  WeightVector w;
  w.r = r;
  w.m_weights.assign(static_cast<std::size_t>(r) - 1, 1);
  return w;
}

WeightVector literal_weights(int r) {
  WeightVector w;
  w.r = r;
  w.m_weights.assign(static_cast<std::size_t>(r) - 1, 0);
  w.m_weights[0] = 1;
  return w;
}

const std::vector<FormulaVariant>& all_variants() {
  static const std::vector<FormulaVariant> variants = {
      FormulaVariant::printed_minus, FormulaVariant::plus,
      FormulaVariant::staircase_monomial};
  return variants;
}

ConstantsRecord compute_constants(int r, const RootContext& ctx) {
  if (r != ctx.rank()) throw dimension_error("context rank mismatch");
  ConstantsRecord rec;
  rec.r = r;
  std::size_t tn = ctx.t_vars();
  unsigned top = static_cast<unsigned>(ctx.fiber_dimension());

  MultiPoly tsum(tn);
  for (std::size_t i = 0; i < tn; ++i) tsum += MultiPoly::variable(tn, i);
  MultiPoly alpha_input = tsum.pow(top);

  for (FormulaVariant v : all_variants())
    rec.alpha_by_variant.push_back(
        gysin::paper_coefficient_formula(alpha_input, r, v).value);

  MultiPoly tsum_low = tsum.pow(top - 1);
  for (FormulaVariant v : all_variants()) {
    std::vector<Rational> betas;
    for (std::size_t s = 0; s < tn; ++s) {
      MultiPoly input = tsum_low * MultiPoly::variable(tn, s);
      betas.push_back(gysin::paper_coefficient_formula(input, r, v).value);
    }
    rec.beta_by_variant.push_back(std::move(betas));
  }

  auto oracle_pair = [&](const MultiPoly& t_poly) {
    Rational via_tower =
        constant_at_zero_c1(gysin::tower_pushforward(ctx.t_to_tower(t_poly), ctx), ctx);
    Rational via_dd =
        constant_at_zero_c1(gysin::dd_pushforward_root(ctx.t_to_root(t_poly), ctx), ctx);
    if (via_tower != via_dd)
      throw consistency_error("push-forward oracles disagree on a constants input");
    return via_tower;
  };

  rec.alpha_oracle = oracle_pair(alpha_input);
  for (std::size_t s = 0; s < tn; ++s)
    rec.beta_oracle.push_back(oracle_pair(tsum_low * MultiPoly::variable(tn, s)));
  return rec;
}

Rational weighted_degree(const WeightVector& w, const RootContext& ctx) {
  w.validate();
  if (w.r != ctx.rank()) throw dimension_error("context rank mismatch");
  unsigned top = static_cast<unsigned>(ctx.fiber_dimension());
  MultiPoly total = weighted_tau_sum(w, ctx).pow(top);
  return constant_at_zero_c1(gysin::tower_pushforward(total, ctx), ctx);
}

std::vector<Rational> quotient_coefficients(const WeightVector& w,
                                            const RootContext& ctx) {
  w.validate();
  if (w.r != ctx.rank()) throw dimension_error("context rank mismatch");
  int r = w.r;
  unsigned top = static_cast<unsigned>(ctx.fiber_dimension());
  Rational factor = Rational(r - 1) * Rational(static_cast<long>(top));
  MultiPoly base = weighted_tau_sum(w, ctx).pow(top - 1);
  std::vector<Rational> kappa;
  for (int i = 1; i <= r; ++i) {
    MultiPoly input = base * ctx.y_tower(i);
    kappa.push_back(factor *
                    constant_at_zero_c1(gysin::tower_pushforward(input, ctx), ctx));
  }
  return kappa;
}

Rational am_value(int r, const Rational& alpha, const Rational& beta,
                  long m_scale) {
  if (r < 2) throw dimension_error("rank must be at least 2");
  if (m_scale < 1) throw dimension_error("m_scale must be positive");
  if (alpha == 0)
    throw dimension_error("degenerate configuration: alpha is zero");
  Rational top(r * (r - 1) / 2);
  return Rational(r - 1) * top * beta / (Rational(m_scale) * alpha);
}

Rational deg_fm_value(int r, const Rational& alpha, long m_scale, long n) {
  if (r < 2) throw dimension_error("rank must be at least 2");
  if (m_scale < 1 || n < 1)
    throw dimension_error("m_scale and n must be positive");
  unsigned top = static_cast<unsigned>(r * (r - 1) / 2);
  return rational_power(Rational(n) * Rational(m_scale), top) * alpha;
}

Rational grassmann_ratio(int r, int s, long m_scale, long n,
                         const RootContext& ctx) {
  if (r != ctx.rank()) throw dimension_error("context rank mismatch");
  if (s < 1 || s > r - 1) throw dimension_error("subbundle rank out of range");
  if (m_scale < 1 || n < 1)
    throw dimension_error("m_scale and n must be positive");
  unsigned rel = static_cast<unsigned>(s * (r - s));
  MultiPoly xi = ctx.gr_xi_root(s);
  MultiPoly a = MultiPoly::variable(ctx.root_vars(), ctx.root_a());

  // (m xi + a)^rel truncated at a-degree 1, times n^rel.
  Rational npow = rational_power(Rational(n), rel);
  Rational mpow = rational_power(Rational(m_scale), rel);
  Rational mpow_low = rational_power(Rational(m_scale), rel - 1);
  MultiPoly hyper = xi.pow(rel) * (mpow * npow) +
                    xi.pow(rel - 1) * a * (Rational(static_cast<long>(rel)) * mpow_low * npow);

  gysin::SymmetricClass denom = gysin::gr_pushforward(hyper, ctx, s);
  gysin::SymmetricClass numer = gysin::gr_pushforward(xi * hyper, ctx, s);

  MultiPoly denom_value = denom.value_at_zero_c1(ctx);
  polyring::Homogeneity dh = denom_value.homogeneous_degree();
  if (!(dh.is_homogeneous() && dh.degree == 0))
    throw consistency_error("composite degree is not a constant");
  Rational degree = denom_value.coefficient_of(polyring::Exponents(ctx.class_vars(), 0));
  if (degree == 0) throw consistency_error("composite degree vanished");

  MultiPoly numer_value = numer.value_at_zero_c1(ctx);
  polyring::Exponents a_slot(ctx.class_vars(), 0);
  a_slot[ctx.class_a()] = 1;
  Rational pushed = numer_value.coefficient_of(a_slot);
  MultiPoly residual = numer_value.set_zero(ctx.class_a());
  if (!residual.is_zero())
    throw consistency_error("pushed quotient class has terms outside the a-line");
  return pushed / degree;
}

ApproxRow make_row(const WeightVector& w, const RootContext& ctx) {
  w.validate();
  ApproxRow row;
  row.weights = w;
  unsigned top = static_cast<unsigned>(ctx.fiber_dimension());
  row.degree_coefficient = weighted_degree(w, ctx);
  std::vector<Rational> shape_kappa = quotient_coefficients(w, ctx);
  Rational m(w.m_scale);
  Rational m_low = rational_power(m, top - 1);
  for (const Rational& k : shape_kappa) row.kappa.push_back(k * m_low);
  Rational degree_eff = row.degree_coefficient * rational_power(m, top);
  row.degenerate = (degree_eff == 0);
  if (!row.degenerate)
    for (const Rational& k : row.kappa) row.ratio.push_back(k / degree_eff);
  return row;
}

std::vector<ApproxRow> make_table(const WeightVector& shape,
                                  const std::vector<long>& m_values,
                                  const std::vector<long>& n_values,
                                  const RootContext& ctx) {
  if (m_values.empty() || n_values.empty())
    throw dimension_error("m and n grids must be nonempty");
  std::vector<ApproxRow> rows;
  for (long m : m_values)
    for (long n : n_values) {
      WeightVector w = shape;
      w.m_scale = m;
      w.n = n;
      rows.push_back(make_row(w, ctx));
    }
  return rows;
}

std::string table_to_csv(const std::vector<ApproxRow>& rows) {
  if (rows.empty()) throw dimension_error("cannot render an empty table");
  int r = rows.front().weights.r;
  std::ostringstream out;
  out << "r,weights,m,n,degree_coefficient";
  for (int i = 1; i <= r; ++i) out << ",kappa_" << i;
  for (int i = 1; i <= r; ++i) out << ",ratio_" << i;
  out << ",degenerate\n";
  for (const ApproxRow& row : rows) {
    if (row.weights.r != r)
      throw dimension_error("table rows mix different ranks");
    out << r << ",";
    for (std::size_t s = 0; s < row.weights.m_weights.size(); ++s) {
      if (s > 0) out << ";";
      out << row.weights.m_weights[s];
    }
    out << "," << row.weights.m_scale << "," << row.weights.n << ","
        << to_string(row.degree_coefficient);
    for (const Rational& k : row.kappa) out << "," << to_string(k);
    if (row.degenerate)
      for (int i = 0; i < r; ++i) out << ",";
    else
      for (const Rational& q : row.ratio) out << "," << to_string(q);
    out << "," << (row.degenerate ? "yes" : "no") << "\n";
  }
  return out.str();
}

}  // namespace gysincalc::approx
