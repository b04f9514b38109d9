#include "rational.hpp"

#include "errors.hpp"

#include <cctype>

namespace qfiber {

namespace mp = boost::multiprecision;

Rational::Rational(Int n, Int d) : num_(std::move(n)), den_(std::move(d)) { reduce(); }

void Rational::reduce() {
  if (den_ == 0) throw SemanticError("rational with zero denominator");
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  Int g = mp::gcd(num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rational Rational::operator-() const {
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

Rational operator+(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) throw SemanticError("division by zero");
  return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

Int Rational::ceil_value() const {
  Int q = num_ / den_;  // truncates toward zero
  if (num_ > 0 && q * den_ != num_) ++q;
  return q;
}

Rational Rational::parse(std::string_view text) {
  std::size_t b = 0, e = text.size();
  while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
  std::string_view s = text.substr(b, e - b);
  if (s.empty()) throw ParseError("empty rational literal", b);

  std::size_t i = 0;
  bool negative = false;
  if (s[i] == '-') {
    negative = true;
    ++i;
  }
  std::size_t num_begin = i;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
  if (i == num_begin) throw ParseError("expected digits in rational literal", b + i);
  Int num(std::string(s.substr(num_begin, i - num_begin)));
  Int den = 1;
  if (i < s.size() && s[i] == '/') {
    ++i;
    std::size_t den_begin = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == den_begin) throw ParseError("expected digits after '/' in rational literal", b + i);
    den = Int(std::string(s.substr(den_begin, i - den_begin)));
    if (den == 0) throw ParseError("zero denominator in rational literal", b + den_begin);
  }
  if (i != s.size())
    throw ParseError(std::string("unexpected character '") + s[i] + "' in rational literal",
                     b + i);
  if (negative) num = -num;
  return Rational(std::move(num), std::move(den));
}

std::string Rational::str() const {
  std::string out = num_.str();
  if (den_ != 1) {
    out += '/';
    out += den_.str();
  }
  return out;
}

}  // namespace qfiber
