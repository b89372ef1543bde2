#include "exact_jordan/Polynomial.hpp"

#include <stdexcept>

namespace ej {

Polynomial::Polynomial(std::vector<GaussianRational> ascending) : coeffs_(std::move(ascending)) { trim(); }

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().isZero()) coeffs_.pop_back();
}

Polynomial Polynomial::linear(const GaussianRational& root) { return Polynomial({-root, GaussianRational(1)}); }

GaussianRational Polynomial::coefficient(int power) const {
  if (power < 0 || power > degree()) return GaussianRational();
  return coeffs_[static_cast<std::size_t>(power)];
}

GaussianRational Polynomial::operator()(const GaussianRational& x) const {
  GaussianRational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

ExactMatrix Polynomial::operator()(const ExactMatrix& a) const {
  if (a.rows() != a.cols()) throw DimensionMismatch("polynomial of a non-square matrix");
  const Index n = a.rows();
  ExactMatrix acc = ExactMatrix::Zero(n, n);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * a;
    for (Index k = 0; k < n; ++k) acc(k, k) += *it;
  }
  return acc;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.isZero() || b.isZero()) return {};
  std::vector<GaussianRational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Polynomial(std::move(out));
}

std::pair<Polynomial, GaussianRational> Polynomial::divideLinear(const GaussianRational& root) const {
  if (coeffs_.empty()) return {Polynomial(), GaussianRational()};
  std::vector<GaussianRational> quotient(coeffs_.size() - 1);
  GaussianRational carry;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    carry = carry * root + coeffs_[k];
    if (k > 0) quotient[k - 1] = carry;
  }
  return {Polynomial(std::move(quotient)), carry};
}

Polynomial Polynomial::monic() const {
  if (isZero()) return {};
  const GaussianRational scale = inv(leading());
  std::vector<GaussianRational> out = coeffs_;
  for (auto& c : out) c *= scale;
  return Polynomial(std::move(out));
}

std::string Polynomial::toString() const {
  if (isZero()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const GaussianRational& c = coeffs_[static_cast<std::size_t>(k)];
    if (c.isZero()) continue;
    std::string monomial = k == 0 ? "" : (k == 1 ? "x" : "x^" + std::to_string(k));
    std::string term;
    bool negative = false;
    if (c.isReal()) {
      negative = sgn(c.real()) < 0;
      Rational magnitude = abs(c.real());
      if (magnitude != 1 || k == 0) term = magnitude.get_str();
    } else {
      term = "(" + c.toString() + ")";
    }
    term += monomial;
    if (out.empty()) {
      out = negative ? "-" + term : term;
    } else {
      out += negative ? " - " : " + ";
      out += term;
    }
  }
  return out;
}

Polynomial charPoly(const ExactMatrix& a) {
  if (a.rows() != a.cols()) throw DimensionMismatch("characteristic polynomial of a non-square matrix");
  const Index n = a.rows();
  std::vector<GaussianRational> c(static_cast<std::size_t>(n) + 1);
  c[static_cast<std::size_t>(n)] = 1;
  ExactMatrix m = ExactMatrix::Zero(n, n);
  for (Index k = 1; k <= n; ++k) {
    ExactMatrix next = a * m;
    for (Index d = 0; d < n; ++d) next(d, d) += c[static_cast<std::size_t>(n - k + 1)];
    m = std::move(next);
    ExactMatrix am = a * m;
    GaussianRational trace;
    for (Index d = 0; d < n; ++d) trace += am(d, d);
    c[static_cast<std::size_t>(n - k)] = -trace / GaussianRational(static_cast<long>(k));
  }
  return Polynomial(std::move(c));
}

ExactMatrix companionMatrix(const Polynomial& monic) {
  if (monic.isZero() || monic.leading() != GaussianRational(1)) throw std::invalid_argument("companion matrix needs a monic polynomial");
  const Index n = monic.degree();
  ExactMatrix out = ExactMatrix::Zero(n, n);
  for (Index k = 1; k < n; ++k) out(k, k - 1) = 1;
  for (Index k = 0; k < n; ++k) out(k, n - 1) = -monic.coefficient(static_cast<int>(k));
  return out;
}

}  // namespace ej
