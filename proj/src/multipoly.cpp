#include "gysincalc/multipoly.hpp"

#include <algorithm>
#include <numeric>

namespace gysincalc::polyring {

namespace {

unsigned exp_sum(const Exponents& e) {
  unsigned total = 0;
  for (auto x : e) total += x;
  return total;
}

const Rational kZero = 0;

}  // namespace

bool GradedLexGreater::operator()(const Exponents& a, const Exponents& b) const {
  unsigned da = exp_sum(a), db = exp_sum(b);
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

MultiPoly MultiPoly::constant(std::size_t num_vars, const Rational& c) {
  MultiPoly p(num_vars);
  p.add_term(Exponents(num_vars, 0), c);
  return p;
}

MultiPoly MultiPoly::variable(std::size_t num_vars, std::size_t index) {
  if (index >= num_vars)
    throw dimension_error("variable index out of range");
  Exponents e(num_vars, 0);
  e[index] = 1;
  return monomial(num_vars, e, 1);
}

MultiPoly MultiPoly::monomial(std::size_t num_vars, const Exponents& exps,
                              const Rational& c) {
  if (exps.size() != num_vars)
    throw dimension_error("monomial exponent vector has wrong length");
  MultiPoly p(num_vars);
  p.add_term(exps, c);
  return p;
}

MultiPoly::const_iterator MultiPoly::leading() const {
  if (terms_.empty())
    throw dimension_error("leading term of the zero polynomial");
  return terms_.begin();
}

bool MultiPoly::operator==(const MultiPoly& other) const {
  return num_vars_ == other.num_vars_ && terms_ == other.terms_;
}

void MultiPoly::add_term(const Exponents& exps, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exps, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void MultiPoly::check_same_shape(const MultiPoly& other) const {
  if (num_vars_ != other.num_vars_)
    throw dimension_error("polynomials have different variable counts");
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
  check_same_shape(other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
  check_same_shape(other);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

MultiPoly MultiPoly::operator+(const MultiPoly& other) const {
  MultiPoly out = *this;
  out += other;
  return out;
}

MultiPoly MultiPoly::operator-(const MultiPoly& other) const {
  MultiPoly out = *this;
  out -= other;
  return out;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out(num_vars_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

MultiPoly MultiPoly::operator*(const MultiPoly& other) const {
  check_same_shape(other);
  MultiPoly out(num_vars_);
  Exponents key(num_vars_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : other.terms_) {
      for (std::size_t i = 0; i < num_vars_; ++i) key[i] = ea[i] + eb[i];
      out.add_term(key, ca * cb);
    }
  }
  return out;
}

MultiPoly MultiPoly::operator*(const Rational& scalar) const {
  if (scalar == 0) return MultiPoly(num_vars_);
  MultiPoly out(num_vars_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, c * scalar);
  return out;
}

MultiPoly MultiPoly::pow(unsigned k) const {
  MultiPoly out = constant(num_vars_, 1);
  for (unsigned i = 0; i < k; ++i) out = out * *this;
  return out;
}

const Rational& MultiPoly::coefficient_of(const Exponents& exps) const {
  if (exps.size() != num_vars_)
    throw dimension_error("coefficient query has wrong exponent length");
  auto it = terms_.find(exps);
  return it == terms_.end() ? kZero : it->second;
}

MultiPoly MultiPoly::substitute(std::span<const MultiPoly> images) const {
  if (images.size() != num_vars_)
    throw dimension_error("substitution needs one image per variable");
  std::size_t target = num_vars_;
  if (!images.empty()) target = images[0].num_vars();
  for (const auto& im : images)
    if (im.num_vars() != target)
      throw dimension_error("substitution images disagree on variable count");

  // Power cache: powers[i][k] = images[i]^k, filled on demand.
  std::vector<std::vector<MultiPoly>> powers(num_vars_);
  auto power_of = [&](std::size_t i, std::uint32_t k) -> const MultiPoly& {
    auto& row = powers[i];
    if (row.empty()) row.push_back(MultiPoly::constant(target, 1));
    while (row.size() <= k) row.push_back(row.back() * images[i]);
    return row[k];
  };

  MultiPoly out(target);
  for (const auto& [e, c] : terms_) {
    MultiPoly term = MultiPoly::constant(target, c);
    for (std::size_t i = 0; i < num_vars_; ++i)
      if (e[i] > 0) term = term * power_of(i, e[i]);
    out += term;
  }
  return out;
}

Homogeneity MultiPoly::homogeneous_degree() const {
  std::vector<unsigned> unit(num_vars_, 1);
  return homogeneous_degree(unit);
}

Homogeneity MultiPoly::homogeneous_degree(std::span<const unsigned> weights) const {
  if (weights.size() != num_vars_)
    throw dimension_error("weight vector has wrong length");
  Homogeneity report;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    unsigned d = 0;
    for (std::size_t i = 0; i < num_vars_; ++i) d += e[i] * weights[i];
    if (first) {
      report.kind = Homogeneity::Kind::homogeneous;
      report.degree = d;
      first = false;
    } else if (d != report.degree) {
      return {Homogeneity::Kind::inhomogeneous, 0};
    }
  }
  return report;
}

unsigned MultiPoly::total_degree() const {
  unsigned best = 0;
  for (const auto& [e, c] : terms_) best = std::max(best, exp_sum(e));
  return best;
}

unsigned MultiPoly::degree_in(std::size_t var) const {
  if (var >= num_vars_) throw dimension_error("variable index out of range");
  unsigned best = 0;
  for (const auto& [e, c] : terms_) best = std::max(best, e[var]);
  return best;
}

MultiPoly MultiPoly::apply_transposition(std::size_t i, std::size_t j) const {
  if (i >= num_vars_ || j >= num_vars_)
    throw dimension_error("transposition index out of range");
  if (i == j) throw dimension_error("transposition needs two distinct variables");
  MultiPoly out(num_vars_);
  Exponents key(num_vars_);
  for (const auto& [e, c] : terms_) {
    key = e;
    std::swap(key[i], key[j]);
    out.terms_.emplace(key, c);
  }
  return out;
}

MultiPoly MultiPoly::set_zero(std::size_t var) const {
  if (var >= num_vars_) throw dimension_error("variable index out of range");
  MultiPoly out(num_vars_);
  for (const auto& [e, c] : terms_)
    if (e[var] == 0) out.terms_.emplace(e, c);
  return out;
}

std::map<std::uint32_t, MultiPoly> MultiPoly::collect(std::size_t var) const {
  if (var >= num_vars_) throw dimension_error("variable index out of range");
  std::map<std::uint32_t, MultiPoly> out;
  for (const auto& [e, c] : terms_) {
    auto [it, ignored] = out.try_emplace(e[var], MultiPoly(num_vars_));
    Exponents stripped = e;
    stripped[var] = 0;
    it->second.add_term(stripped, c);
  }
  return out;
}

}  // namespace gysincalc::polyring
