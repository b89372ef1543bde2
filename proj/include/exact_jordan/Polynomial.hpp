#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "exact_jordan/Linalg.hpp"
#include "exact_jordan/Scalar.hpp"

namespace ej {

/// Univariate polynomial over Q(i), coefficients in ascending degree. The
/// leading stored coefficient is never zero; the zero polynomial has none.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<GaussianRational> ascending);
  Polynomial(std::initializer_list<GaussianRational> ascending)
      : Polynomial(std::vector<GaussianRational>(ascending)) {}

  /// x - root
  static Polynomial linear(const GaussianRational& root);

  bool isZero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<GaussianRational>& coefficients() const { return coeffs_; }
  GaussianRational coefficient(int power) const;
  const GaussianRational& leading() const { return coeffs_.back(); }

  GaussianRational operator()(const GaussianRational& x) const;
  /// Horner evaluation with a square matrix argument.
  ExactMatrix operator()(const ExactMatrix& a) const;

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Synthetic division by (x - root); returns quotient and remainder.
  std::pair<Polynomial, GaussianRational> divideLinear(const GaussianRational& root) const;

  Polynomial monic() const;

  /// Human-readable form such as `x^3 + 2x - 5`.
  std::string toString() const;

 private:
  void trim();
  std::vector<GaussianRational> coeffs_;
};

/// Characteristic polynomial det(xI - a), monic of degree n, by the
/// Faddeev-LeVerrier recurrence.
Polynomial charPoly(const ExactMatrix& a);

/// Monic polynomial whose companion matrix has it as characteristic
/// polynomial: ones on the subdiagonal, negated coefficients in the last column.
ExactMatrix companionMatrix(const Polynomial& monic);

}  // namespace ej
