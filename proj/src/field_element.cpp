#include "ultrawave/field_element.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace ultrawave {

FieldElement FieldElement::one(const FieldParams& fp) {
  return monomial(fp, gf_from_index(fp, 1), 0);
}

FieldElement FieldElement::prime_pow(const FieldParams& fp, int k) {
  return monomial(fp, gf_from_index(fp, 1), k);
}

FieldElement FieldElement::monomial(const FieldParams& fp, const GFqElem& a, int k) {
  FieldElement x(fp);
  x.set_coeff(k, a);
  return x;
}

std::optional<int> FieldElement::valuation() const {
  if (coef_.empty()) return std::nullopt;
  return coef_.begin()->first;
}

int FieldElement::norm_exponent() const {
  auto v = valuation();
  if (!v) throw DomainError("norm_exponent of zero");
  return -*v;
}

Rat FieldElement::norm() const {
  if (is_zero()) return Rat(0);
  return rat_pow(fp_.q, norm_exponent());
}

GFqElem FieldElement::coeff_at(int e) const {
  auto it = coef_.find(e);
  if (it == coef_.end()) return GFqElem{};
  return it->second;
}

void FieldElement::set_coeff(int e, const GFqElem& a) {
  check_window(e);
  if (a.is_zero())
    coef_.erase(e);
  else
    coef_[e] = a;
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  check(o);
  FieldElement r(*this);
  for (const auto& [e, a] : o.coef_) r.set_coeff(e, gf_add(fp_, r.coeff_at(e), a));
  return r;
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  check(o);
  FieldElement r(*this);
  for (const auto& [e, a] : o.coef_) r.set_coeff(e, gf_sub(fp_, r.coeff_at(e), a));
  return r;
}

FieldElement FieldElement::operator-() const {
  FieldElement r(fp_);
  for (const auto& [e, a] : coef_) r.coef_[e] = gf_neg(fp_, a);
  return r;
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  check(o);
  FieldElement r(fp_);
  for (const auto& [e1, a1] : coef_) {
    for (const auto& [e2, a2] : o.coef_) {
      int e = e1 + e2;
      r.set_coeff(e, gf_add(fp_, r.coeff_at(e), gf_mul(fp_, a1, a2)));
    }
  }
  return r;
}

FieldElement FieldElement::scaled(const GFqElem& a) const {
  FieldElement r(fp_);
  for (const auto& [e, b] : coef_) r.set_coeff(e, gf_mul(fp_, a, b));
  return r;
}

FieldElement FieldElement::reduced_mod_level(int k) const {
  FieldElement r(fp_);
  for (const auto& [e, a] : coef_) {
    if (e < k) r.coef_[e] = a;
  }
  return r;
}

std::string FieldElement::key() const {
  std::string s;
  s.reserve(coef_.size() * 3);
  for (const auto& [e, a] : coef_) {
    s.push_back(static_cast<char>(e + 100));
    s.push_back(static_cast<char>(a.u[0]));
    s.push_back(static_cast<char>(a.u[1]));
  }
  return s;
}

std::string FieldElement::str() const {
  if (coef_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, a] : coef_) {
    if (!first) os << " + ";
    first = false;
    os << gf_to_string(fp_, a) << "*t^" << e;
  }
  return os.str();
}

namespace {

void skip_ws(const std::string& s, size_t& i) {
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}

int parse_int(const std::string& s, size_t& i) {
  skip_ws(s, i);
  size_t start = i;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
  if (i == start) throw DomainError("element syntax: expected integer at '" + s.substr(start) + "'");
  return std::stoi(s.substr(start, i - start));
}

}  // namespace

FieldElement FieldElement::parse(const FieldParams& fp, const std::string& text) {
  FieldElement x(fp);
  size_t i = 0;
  skip_ws(text, i);
  if (i < text.size() && text[i] == '0') {
    size_t j = i + 1;
    skip_ws(text, j);
    if (j >= text.size()) return x;
  }
  while (i < text.size()) {
    skip_ws(text, i);
    GFqElem a;
    if (text[i] == '(') {
      ++i;
      int u0 = parse_int(text, i);
      skip_ws(text, i);
      if (i >= text.size() || text[i] != ',') throw DomainError("element syntax: expected ','");
      ++i;
      int u1 = parse_int(text, i);
      skip_ws(text, i);
      if (i >= text.size() || text[i] != ')') throw DomainError("element syntax: expected ')'");
      ++i;
      if (u0 < 0 || u0 >= fp.p || u1 < 0 || u1 >= fp.p)
        throw DomainError("element syntax: coordinate out of range");
      a.u[0] = static_cast<uint8_t>(u0);
      a.u[1] = static_cast<uint8_t>(u1);
    } else {
      int u0 = parse_int(text, i);
      if (u0 < 0 || u0 >= fp.p) throw DomainError("element syntax: coefficient out of range");
      a.u[0] = static_cast<uint8_t>(u0);
    }
    skip_ws(text, i);
    if (i >= text.size() || text[i] != '*') throw DomainError("element syntax: expected '*'");
    ++i;
    skip_ws(text, i);
    if (i + 1 >= text.size() || text[i] != 't' || text[i + 1] != '^')
      throw DomainError("element syntax: expected 't^'");
    i += 2;
    int e = parse_int(text, i);
    x.set_coeff(e, gf_add(fp, x.coeff_at(e), a));
    skip_ws(text, i);
    if (i < text.size()) {
      if (text[i] != '+') throw DomainError("element syntax: expected '+'");
      ++i;
    }
  }
  return x;
}

Rat Ball::measure() const { return rat_pow(center.params().q, -level); }

bool Ball::contains(const FieldElement& x) const {
  return x.reduced_mod_level(level) == center;
}

bool Ball::contains_ball(const Ball& b) const {
  if (b.level < level) return false;
  return b.center.reduced_mod_level(level) == center;
}

std::vector<Ball> Ball::children() const {
  const FieldParams& fp = center.params();
  std::vector<Ball> out;
  out.reserve(static_cast<size_t>(fp.q));
  for (long i = 0; i < fp.q; ++i) {
    FieldElement c = center + FieldElement::monomial(fp, gf_from_index(fp, i), level);
    out.emplace_back(c, level + 1);
  }
  return out;
}

std::string Ball::key() const {
  std::string s;
  s.push_back(static_cast<char>(level + 100));
  s += center.key();
  return s;
}

std::vector<FieldElement> enumerate_subball_centers(const Ball& b, int sub_level) {
  const FieldParams& fp = b.center.params();
  if (sub_level < b.level) throw DomainError("enumerate_subball_centers: coarser than ball");
  int d = sub_level - b.level;
  long count = 1;
  for (int i = 0; i < d; ++i) {
    count *= fp.q;
    if (count > 16'000'000L) throw SizeError("enumerate_subball_centers: too many subballs");
  }
  std::vector<FieldElement> out;
  out.reserve(static_cast<size_t>(count));
  for (long n = 0; n < count; ++n) {
    FieldElement c = b.center;
    long m = n;
    for (int i = 0; i < d; ++i) {
      long digit = m % fp.q;
      m /= fp.q;
      if (digit != 0)
        c = c + FieldElement::monomial(fp, gf_from_index(fp, digit), b.level + i);
    }
    out.push_back(std::move(c));
  }
  return out;
}

FieldElement lambda(const FieldParams& fp, unsigned long n) {
  FieldElement x(fp);
  int i = 0;
  while (n > 0) {
    long digit = static_cast<long>(n % static_cast<unsigned long>(fp.q));
    n /= static_cast<unsigned long>(fp.q);
    if (digit != 0) x.set_coeff(-(i + 1), gf_from_index(fp, digit));
    ++i;
  }
  return x;
}

int qadic_digit_count(const FieldParams& fp, unsigned long n) {
  int d = 0;
  while (n > 0) {
    ++d;
    n /= static_cast<unsigned long>(fp.q);
  }
  return d;
}

Cyclo character(const FieldElement& x) {
  int a = gf_e0_component(x.coeff_at(-1));
  return Cyclo::zeta_pow(x.params().p, a);
}

Cyclo chi_n(const FieldParams& fp, unsigned long n, const FieldElement& x) {
  return character(lambda(fp, n) * x);
}

}  // namespace ultrawave
