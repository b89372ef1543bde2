#include "exact_jordan/Scalar.hpp"

#include <cctype>
#include <ostream>

namespace ej {

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  return *this *= inv(o);
}

GaussianRational inv(const GaussianRational& a) {
  if (a.isZero()) throw DivisionByZero();
  Rational n = a.norm();
  return {Rational(a.real() / n), Rational(-a.imag() / n)};
}

std::optional<Rational> sqrtExact(const Rational& a) {
  if (sgn(a) < 0) return std::nullopt;
  const Integer& num = a.get_num();
  const Integer& den = a.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return std::nullopt;
  Integer rn = sqrt(num);
  Integer rd = sqrt(den);
  Rational r(rn, rd);
  r.canonicalize();
  return r;
}

std::optional<GaussianRational> sqrtExact(const GaussianRational& a) {
  const Rational& x = a.real();
  const Rational& y = a.imag();
  if (sgn(y) == 0) {
    if (sgn(x) >= 0) {
      auto r = sqrtExact(x);
      if (!r) return std::nullopt;
      return GaussianRational(*r);
    }
    auto r = sqrtExact(Rational(-x));
    if (!r) return std::nullopt;
    return GaussianRational(Rational(0), *r);
  }
  auto modulus = sqrtExact(a.norm());
  if (!modulus) return std::nullopt;
  auto u = sqrtExact(Rational((x + *modulus) / 2));
  auto v = sqrtExact(Rational((*modulus - x) / 2));
  if (!u || !v) return std::nullopt;
  return GaussianRational(*u, sgn(y) < 0 ? Rational(-*v) : *v);
}

namespace {

std::string rationalText(const Rational& q) { return q.get_str(); }

class ScalarParser {
 public:
  explicit ScalarParser(std::string_view text) : text_(text) {}

  GaussianRational run() {
    if (text_.empty()) fail("empty scalar");
    Rational first = rational();
    if (atEnd()) return GaussianRational(first);
    if (peek() == 'i') {
      ++pos_;
      expectEnd();
      return GaussianRational(Rational(0), first);
    }
    if (peek() != '+' && peek() != '-') fail("expected sign or 'i'");
    bool negate = peek() == '-';
    ++pos_;
    Rational second = rational();
    if (atEnd() || peek() != 'i') fail("expected 'i'");
    ++pos_;
    expectEnd();
    if (negate) second = -second;
    return GaussianRational(first, second);
  }

 private:
  bool atEnd() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void expectEnd() const {
    if (!atEnd()) fail("unexpected trailing character");
  }

  Integer digits() {
    std::size_t start = pos_;
    while (!atEnd() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (pos_ == start) fail("expected digit");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  Rational rational() {
    bool negative = false;
    if (!atEnd() && peek() == '-') {
      negative = true;
      ++pos_;
    }
    Integer num = digits();
    Integer den = 1;
    if (!atEnd() && peek() == '/') {
      ++pos_;
      std::size_t denPos = pos_;
      den = digits();
      if (den == 0) throw ParseError("zero denominator", denPos);
    }
    if (negative) num = -num;
    Rational q(num, den);
    q.canonicalize();
    return q;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

GaussianRational GaussianRational::parse(std::string_view text) { return ScalarParser(text).run(); }

std::string GaussianRational::toString() const {
  if (sgn(im_) == 0) return rationalText(re_);
  if (sgn(re_) == 0) return rationalText(im_) + "i";
  std::string out = rationalText(re_);
  if (sgn(im_) > 0) out += '+';
  out += rationalText(im_);
  out += 'i';
  return out;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& a) { return os << a.toString(); }

}  // namespace ej
