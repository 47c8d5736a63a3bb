#include "gysincalc/root_context.hpp"

#include "gysincalc/pushforward.hpp"

namespace gysincalc::gysin {

RootContext::RootContext(int r) : r_(r) {
  if (r < 2) throw dimension_error("rank must be at least 2");

  for (int k = 1; k <= r - 1; ++k) tower_names_.push_back("h" + std::to_string(k));
  for (int i = 1; i <= r; ++i) tower_names_.push_back("e" + std::to_string(i));
  tower_names_.push_back("a");
  for (int j = 1; j <= r; ++j) root_names_.push_back("y" + std::to_string(j));
  for (int i = 1; i <= r; ++i) root_names_.push_back("e" + std::to_string(i));
  root_names_.push_back("a");
  for (int i = 1; i <= r; ++i) class_names_.push_back("e" + std::to_string(i));
  class_names_.push_back("a");
  for (int i = 1; i <= r - 1; ++i) t_names_.push_back("t" + std::to_string(i));

  tower_weights_.assign(tower_vars(), 1);
  for (int i = 1; i <= r; ++i) tower_weights_[tower_e(i)] = i;
  root_weights_.assign(root_vars(), 1);
  for (int i = 1; i <= r; ++i) root_weights_[root_e(i)] = i;
  class_weights_.assign(class_vars(), 1);
  for (int i = 1; i <= r; ++i) class_weights_[class_e(i)] = i;

  w0_word_ = reduced_word(Permutation::longest(r));

  // Pin the divided-difference sign: both routes must send the staircase
  // monomial to 1.
  MultiPoly stair = staircase_tower();
  SymmetricClass via_tower = tower_pushforward(stair, *this);
  if (!via_tower.is_constant() || via_tower.constant_value() != 1)
    throw consistency_error("tower push-forward of the staircase is not 1");
  MultiPoly raw = divided_difference_word(tower_to_root(stair), *this, w0_word_);
  Homogeneity h = raw.homogeneous_degree();
  if (!(h.is_homogeneous() && h.degree == 0))
    throw consistency_error("divided-difference staircase value is not constant");
  Rational raw_value = raw.coefficient_of(Exponents(root_vars(), 0));
  if (raw_value == 1)
    dd_sign_ = 1;
  else if (raw_value == -1)
    dd_sign_ = -1;
  else
    throw consistency_error("divided-difference staircase value is not a sign");

  // Per-s Grassmann signs, calibrated against the tower through the
  // staircase factorisation of the full flag over the Grassmann bundle.
  gr_signs_.assign(r - 1, 1);
  for (int s = 1; s <= r - 1; ++s) {
    int relative = s * (r - s);
    MultiPoly xi_power = gr_xi_root(s).pow(relative);
    MultiPoly augmented = xi_power * gr_fiber_staircase_root(s);
    SymmetricClass reference = tower_pushforward(root_to_tower(augmented), *this);
    if (!reference.is_constant())
      throw consistency_error("Grassmann calibration reference is not constant");
    Rational want = reference.constant_value();

    std::vector<int> blocks = {s, r - s};
    Permutation u = Permutation::longest(r) * Permutation::longest_in_blocks(r, blocks);
    if (u.inversions() != relative)
      throw consistency_error("coset representative has wrong length");
    MultiPoly got = divided_difference_word(xi_power, *this, reduced_word(u));
    Homogeneity hg = got.homogeneous_degree();
    if (!(hg.is_homogeneous() && hg.degree == 0))
      throw consistency_error("Grassmann calibration value is not constant");
    Rational got_value = got.coefficient_of(Exponents(root_vars(), 0));
    if (got_value == want)
      gr_signs_[s - 1] = 1;
    else if (got_value == -want)
      gr_signs_[s - 1] = -1;
    else
      throw consistency_error("Grassmann routes differ by more than a sign");
  }
}

std::size_t RootContext::tower_h(int k) const {
  if (k < 1 || k > r_ - 1) throw dimension_error("tower level out of range");
  return static_cast<std::size_t>(k) - 1;
}

std::size_t RootContext::tower_e(int i) const {
  if (i < 1 || i > r_) throw dimension_error("Chern index out of range");
  return static_cast<std::size_t>(r_) - 1 + static_cast<std::size_t>(i) - 1;
}

std::size_t RootContext::root_y(int j) const {
  if (j < 1 || j > r_) throw dimension_error("root index out of range");
  return static_cast<std::size_t>(j) - 1;
}

std::size_t RootContext::root_e(int i) const {
  if (i < 1 || i > r_) throw dimension_error("Chern index out of range");
  return static_cast<std::size_t>(r_) + static_cast<std::size_t>(i) - 1;
}

std::size_t RootContext::class_e(int i) const {
  if (i < 1 || i > r_) throw dimension_error("Chern index out of range");
  return static_cast<std::size_t>(i) - 1;
}

MultiPoly RootContext::y_tower(int j) const {
  if (j < 1 || j > r_) throw dimension_error("root index out of range");
  if (j >= 2) return MultiPoly::variable(tower_vars(), tower_h(r_ - j + 1));
  MultiPoly out = MultiPoly::variable(tower_vars(), tower_e(1));
  for (int k = 1; k <= r_ - 1; ++k)
    out -= MultiPoly::variable(tower_vars(), tower_h(k));
  return out;
}

MultiPoly RootContext::xi_tower(int i) const {
  if (i < 1 || i > r_ - 1) throw dimension_error("xi index out of range");
  if (i <= r_ - 2) return -MultiPoly::variable(tower_vars(), tower_h(i + 1));
  MultiPoly out(tower_vars());
  for (int k = 1; k <= r_ - 1; ++k)
    out += MultiPoly::variable(tower_vars(), tower_h(k));
  out -= MultiPoly::variable(tower_vars(), tower_e(1));
  return out;
}

MultiPoly RootContext::tau_tower(int s) const {
  if (s < 1 || s > r_) throw dimension_error("tau index out of range");
  MultiPoly out(tower_vars());
  if (s == r_) return out;  // tau_r = 0 by convention
  for (int k = 1; k <= s; ++k)
    out += MultiPoly::variable(tower_vars(), tower_h(k));
  return out;
}

MultiPoly RootContext::xi_root(int i) const {
  if (i < 1 || i > r_ - 1) throw dimension_error("xi index out of range");
  return -MultiPoly::variable(root_vars(), root_y(r_ - i));
}

MultiPoly RootContext::tau_root(int s) const {
  if (s < 1 || s > r_) throw dimension_error("tau index out of range");
  MultiPoly out(root_vars());
  if (s == r_) return out;
  for (int j = r_ - s + 1; j <= r_; ++j)
    out += MultiPoly::variable(root_vars(), root_y(j));
  return out;
}

MultiPoly RootContext::gr_xi_root(int s) const {
  if (s < 1 || s > r_ - 1) throw dimension_error("subbundle rank out of range");
  MultiPoly out(root_vars());
  for (int j = s + 1; j <= r_; ++j)
    out += MultiPoly::variable(root_vars(), root_y(j));
  return out;
}

MultiPoly RootContext::gr_fiber_staircase_root(int s) const {
  if (s < 1 || s > r_ - 1) throw dimension_error("subbundle rank out of range");
  Exponents e(root_vars(), 0);
  for (int j = 2; j <= s; ++j) e[root_y(j)] = j - 1;
  for (int j = s + 2; j <= r_; ++j) e[root_y(j)] = j - s - 1;
  return MultiPoly::monomial(root_vars(), e, 1);
}

MultiPoly RootContext::staircase_tower() const {
  Exponents e(tower_vars(), 0);
  for (int k = 1; k <= r_ - 1; ++k) e[tower_h(k)] = r_ - k;
  return MultiPoly::monomial(tower_vars(), e, 1);
}

MultiPoly RootContext::tower_to_root(const MultiPoly& f) const {
  std::vector<MultiPoly> images;
  images.reserve(tower_vars());
  for (int k = 1; k <= r_ - 1; ++k)
    images.push_back(MultiPoly::variable(root_vars(), root_y(r_ - k + 1)));
  for (int i = 1; i <= r_; ++i)
    images.push_back(MultiPoly::variable(root_vars(), root_e(i)));
  images.push_back(MultiPoly::variable(root_vars(), root_a()));
  return f.substitute(images);
}

MultiPoly RootContext::root_to_tower(const MultiPoly& f) const {
  std::vector<MultiPoly> images;
  images.reserve(root_vars());
  for (int j = 1; j <= r_; ++j) images.push_back(y_tower(j));
  for (int i = 1; i <= r_; ++i)
    images.push_back(MultiPoly::variable(tower_vars(), tower_e(i)));
  images.push_back(MultiPoly::variable(tower_vars(), tower_a()));
  return f.substitute(images);
}

MultiPoly RootContext::t_to_tower(const MultiPoly& f) const {
  std::vector<MultiPoly> images;
  images.reserve(t_vars());
  for (int i = 1; i <= r_ - 1; ++i) images.push_back(xi_tower(i));
  return f.substitute(images);
}

MultiPoly RootContext::t_to_root(const MultiPoly& f) const {
  std::vector<MultiPoly> images;
  images.reserve(t_vars());
  for (int i = 1; i <= r_ - 1; ++i) images.push_back(xi_root(i));
  return f.substitute(images);
}

Homogeneity RootContext::tower_fiber_degree(const MultiPoly& f) const {
  return f.homogeneous_degree(tower_weights_);
}

Homogeneity RootContext::root_fiber_degree(const MultiPoly& f) const {
  return f.homogeneous_degree(root_weights_);
}

int RootContext::gr_sign(int s) const {
  if (s < 1 || s > r_ - 1) throw dimension_error("subbundle rank out of range");
  return gr_signs_[s - 1];
}

bool SymmetricClass::is_constant() const {
  Homogeneity h = value.homogeneous_degree();
  return h.is_zero() || (h.is_homogeneous() && h.degree == 0);
}

Rational SymmetricClass::constant_value() const {
  if (!is_constant())
    throw dimension_error("class value is not a degree-0 constant");
  if (value.is_zero()) return 0;
  return value.coefficient_of(Exponents(value.num_vars(), 0));
}

MultiPoly SymmetricClass::value_at_zero_c1(const RootContext& ctx) const {
  return value.set_zero(ctx.class_e(1));
}

Rational SymmetricClass::e1_coefficient(const RootContext& ctx) const {
  Exponents e(ctx.class_vars(), 0);
  e[ctx.class_e(1)] = 1;
  return value.coefficient_of(e);
}

Rational SymmetricClass::a_coefficient(const RootContext& ctx) const {
  Exponents e(ctx.class_vars(), 0);
  e[ctx.class_a()] = 1;
  return value.coefficient_of(e);
}

}  // namespace gysincalc::gysin
