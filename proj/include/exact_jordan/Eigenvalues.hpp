#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "exact_jordan/Linalg.hpp"
#include "exact_jordan/Polynomial.hpp"

namespace ej {

/// The characteristic polynomial has a factor with no roots in Q(i), so the
/// eigenvalues cannot be found without help.
class RequiresEigenvalueHint : public std::runtime_error {
 public:
  explicit RequiresEigenvalueHint(Polynomial unfactored)
      : std::runtime_error("eigenvalues outside Q(i) or not found; unfactored polynomial: " + unfactored.toString()),
        unfactored_(std::move(unfactored)) {}
  const Polynomial& unfactored() const { return unfactored_; }

 private:
  Polynomial unfactored_;
};

class InvalidHint : public std::invalid_argument {
 public:
  explicit InvalidHint(const GaussianRational& hint)
      : std::invalid_argument("hint " + hint.toString() + " is not an eigenvalue"), hint_(hint) {}
  const GaussianRational& hint() const { return hint_; }

 private:
  GaussianRational hint_;
};

struct Eigenvalue {
  GaussianRational value;
  Index algebraicMultiplicity = 0;
  friend bool operator==(const Eigenvalue&, const Eigenvalue&) = default;
};

struct EigenvalueReport {
  /// Sorted ascending by (re, im).
  std::vector<Eigenvalue> eigenvalues;
  bool complete = false;
  /// The factor of the characteristic polynomial left after removing every
  /// root found; degree 0 when complete.
  Polynomial unfactored;
};

/// All roots of p lying in Q(i), with multiplicities, plus what could not be
/// factored. Rational roots come from the rational root theorem, a remaining
/// quadratic is solved by the quadratic formula, and anything else is
/// searched with the Gaussian-integer analogue of the rational root theorem.
EigenvalueReport gaussianRationalRoots(const Polynomial& p);

/// True iff rank(a - lambda I) < n.
bool verifyEigenvalue(const ExactMatrix& a, const GaussianRational& lambda);

/// n - dim (a - lambda)^k X at stabilization.
Index generalizedEigenspaceDim(const ExactMatrix& a, const GaussianRational& lambda);

/// Eigenvalues of a, possibly incomplete. Hints, when given, are verified
/// and their multiplicities read off the range filtration; the built-in
/// search then runs on whatever the hints leave unfactored.
EigenvalueReport searchEigenvalues(const ExactMatrix& a, const std::vector<GaussianRational>& hints = {});

/// As searchEigenvalues, but throws RequiresEigenvalueHint unless complete.
EigenvalueReport findEigenvalues(const ExactMatrix& a, const std::vector<GaussianRational>& hints = {});

}  // namespace ej
