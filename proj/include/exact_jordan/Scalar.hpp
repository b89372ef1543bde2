#pragma once

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include <Eigen/Core>

namespace ej {

/// Arbitrary precision rational. GMP keeps mpq values reduced with a
/// positive denominator once canonicalized; every constructor path below
/// canonicalizes.
using Rational = mpq_class;
using Integer = mpz_class;

class DivisionByZero : public std::domain_error {
 public:
  DivisionByZero() : std::domain_error("division by zero") {}
};

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// An element re + im*i of the Gaussian rationals Q(i).
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(int value) : re_(value) {}
  GaussianRational(long value) : re_(value) {}
  GaussianRational(Rational re) : re_(std::move(re)) { re_.canonicalize(); }
  GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  const Rational& real() const { return re_; }
  const Rational& imag() const { return im_; }

  bool isZero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool isReal() const { return sgn(im_) == 0; }

  GaussianRational conj() const { return {re_, -im_}; }
  /// re^2 + im^2
  Rational norm() const { return re_ * re_ + im_ * im_; }

  GaussianRational operator-() const { return {-re_, -im_}; }

  GaussianRational& operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  /// Lexicographic order on (re, im). Not a field order; used only to make
  /// eigenvalue ordering deterministic.
  friend std::strong_ordering operator<=>(const GaussianRational& a, const GaussianRational& b) {
    if (int c = cmp(a.re_, b.re_); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    int c = cmp(a.im_, b.im_);
    if (c == 0) return std::strong_ordering::equal;
    return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }

  /// Scalar text form: `5`, `-3/7`, `1/2+1/3i`, `-1i`.
  std::string toString() const;
  static GaussianRational parse(std::string_view text);

 private:
  Rational re_;
  Rational im_;
};

GaussianRational inv(const GaussianRational& a);

inline bool isZero(const GaussianRational& a) { return a.isZero(); }

/// Exact square root inside Q(i), if one exists. Of the two roots, returns
/// the one with positive real part (or positive imaginary part when the real
/// part vanishes).
std::optional<GaussianRational> sqrtExact(const GaussianRational& a);

/// Exact square root of a nonnegative rational, if it is a rational square.
std::optional<Rational> sqrtExact(const Rational& a);

std::ostream& operator<<(std::ostream& os, const GaussianRational& a);

}  // namespace ej

namespace Eigen {

template <>
struct NumTraits<ej::GaussianRational> : GenericNumTraits<ej::GaussianRational> {
  using Real = ej::GaussianRational;
  using NonInteger = ej::GaussianRational;
  using Literal = ej::GaussianRational;
  using Nested = ej::GaussianRational;

  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 16,
    MulCost = 32
  };

  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  static inline int max_digits10() { return 0; }
};

}  // namespace Eigen
