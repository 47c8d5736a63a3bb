#include "gysincalc/poly_text.hpp"

#include <cctype>
#include <sstream>

namespace gysincalc {

Rational parse_rational(const std::string& text) {
  std::size_t pos = 0;
  auto fail = [&](const std::string& msg) -> Rational {
    throw parse_error(msg, pos);
  };
  if (text.empty()) return fail("empty rational");
  std::size_t i = 0;
  if (text[i] == '+' || text[i] == '-') ++i;
  std::size_t digits_start = i;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
  if (i == digits_start) {
    pos = i;
    return fail("expected digits");
  }
  std::string num = text.substr(0, i);
  std::string den = "1";
  if (i < text.size()) {
    if (text[i] != '/') {
      pos = i;
      return fail("unexpected character in rational");
    }
    ++i;
    std::size_t den_start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == den_start || i != text.size()) {
      pos = i;
      return fail("malformed denominator");
    }
    den = text.substr(den_start);
  }
  Rational q;
  if (mpq_set_str(q.get_mpq_t(), (num + "/" + den).c_str(), 10) != 0) {
    pos = 0;
    return fail("malformed rational");
  }
  if (mpz_sgn(mpq_denref(q.get_mpq_t())) == 0) {
    pos = 0;
    return fail("zero denominator");
  }
  q.canonicalize();
  return q;
}

}  // namespace gysincalc

namespace gysincalc::polyring {

std::string to_canonical_string(const MultiPoly& p,
                                std::span<const std::string> names) {
  if (names.size() != p.num_vars())
    throw dimension_error("name list has wrong length");
  if (p.is_zero()) return "0";

  std::ostringstream out;
  bool first = true;
  for (const auto& [exps, coeff] : p) {
    Rational magnitude = abs(coeff);
    if (first) {
      if (coeff < 0) out << "-";
      first = false;
    } else {
      out << (coeff < 0 ? " - " : " + ");
    }
    out << magnitude.get_str();
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] == 0) continue;
      // The coefficient is always printed, so every variable factor is
      // preceded by either " * " (first factor) or "*".
      bool first_factor = true;
      for (std::size_t j = 0; j < i; ++j) first_factor &= (exps[j] == 0);
      out << (first_factor ? " * " : "*") << names[i];
      if (exps[i] > 1) out << "^" << exps[i];
    }
  }
  return out.str();
}

namespace {

constexpr unsigned kMaxExponent = 1024;

class Parser {
 public:
  Parser(const std::string& text,
         const std::map<std::string, std::size_t>& vars, std::size_t num_vars)
      : text_(text), vars_(vars), num_vars_(num_vars) {}

  MultiPoly run() {
    MultiPoly result = parse_expr();
    skip_space();
    if (pos_ != text_.size())
      throw parse_error("unexpected trailing input", pos_);
    return result;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  MultiPoly parse_expr() {
    MultiPoly sum(num_vars_);
    bool negate = false;
    char c = peek();
    if (c == '+' || c == '-') {
      negate = (c == '-');
      ++pos_;
    }
    sum += negate ? -parse_term() : parse_term();
    while (true) {
      c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      sum += (c == '-') ? -parse_term() : parse_term();
    }
    return sum;
  }

  MultiPoly parse_term() {
    MultiPoly prod = parse_factor();
    while (peek() == '*') {
      ++pos_;
      prod = prod * parse_factor();
    }
    return prod;
  }

  MultiPoly parse_factor() {
    MultiPoly base = parse_atom();
    if (peek() == '^') {
      ++pos_;
      unsigned k = parse_uint("exponent");
      if (k > kMaxExponent)
        throw parse_error("exponent too large", pos_);
      base = base.pow(k);
    }
    return base;
  }

  MultiPoly parse_atom() {
    char c = peek();
    if (c == '-' || c == '+') {
      ++pos_;
      MultiPoly inner = parse_atom();
      return c == '-' ? -inner : inner;
    }
    if (c == '(') {
      ++pos_;
      MultiPoly inner = parse_expr();
      if (peek() != ')')
        throw parse_error("expected ')'", pos_);
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return parse_number();
    if (std::isalpha(static_cast<unsigned char>(c))) return parse_variable();
    throw parse_error("expected a number, variable, or '('", pos_);
  }

  MultiPoly parse_number() {
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    std::string num = text_.substr(start, pos_ - start);
    // A '/' directly followed by digits makes a rational literal.
    if (pos_ < text_.size() && text_[pos_] == '/' &&
        pos_ + 1 < text_.size() &&
        std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
      ++pos_;
      std::size_t den_start = pos_;
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_])))
        ++pos_;
      std::string den = text_.substr(den_start, pos_ - den_start);
      Rational q(num + "/" + den);
      if (q.get_den() == 0) throw parse_error("zero denominator", den_start);
      q.canonicalize();
      return MultiPoly::constant(num_vars_, q);
    }
    return MultiPoly::constant(num_vars_, Rational(num));
  }

  MultiPoly parse_variable() {
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
            text_[pos_] == '_'))
      ++pos_;
    std::string name = text_.substr(start, pos_ - start);
    auto it = vars_.find(name);
    if (it == vars_.end())
      throw parse_error("unknown variable '" + name + "'", start);
    return MultiPoly::variable(num_vars_, it->second);
  }

  unsigned parse_uint(const char* what) {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (pos_ == start)
      throw parse_error(std::string("expected ") + what, start);
    return static_cast<unsigned>(std::stoul(text_.substr(start, pos_ - start)));
  }

  const std::string& text_;
  const std::map<std::string, std::size_t>& vars_;
  std::size_t num_vars_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiPoly parse_polynomial(const std::string& text,
                           const std::map<std::string, std::size_t>& vars,
                           std::size_t num_vars) {
  for (const auto& [name, slot] : vars)
    if (slot >= num_vars)
      throw dimension_error("variable map points past the last slot");
  return Parser(text, vars, num_vars).run();
}

}  // namespace gysincalc::polyring
