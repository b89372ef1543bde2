#pragma once

// Shared test helpers: seeded random values and small matrix builders.

#include <cstdint>
#include <initializer_list>
#include <random>
#include <string>
#include <vector>

#include "exact_jordan/Jordan.hpp"
#include "exact_jordan/Linalg.hpp"
#include "exact_jordan/Scalar.hpp"

namespace ej::test {

inline GaussianRational q(const char* text) { return GaussianRational::parse(text); }

inline ExactMatrix mat(std::initializer_list<std::initializer_list<const char*>> rows) {
  const Index r = static_cast<Index>(rows.size());
  const Index c = r == 0 ? 0 : static_cast<Index>(rows.begin()->size());
  ExactMatrix m(r, c);
  Index i = 0;
  for (const auto& row : rows) {
    Index j = 0;
    for (const char* entry : row) m(i, j++) = GaussianRational::parse(entry);
    ++i;
  }
  return m;
}

inline ExactVector vec(std::initializer_list<const char*> entries) {
  ExactVector v(static_cast<Index>(entries.size()));
  Index i = 0;
  for (const char* e : entries) v(i++) = GaussianRational::parse(e);
  return v;
}

inline ExactVector unit(Index n, Index k) {
  ExactVector v = ExactVector::Zero(n);
  v(k) = 1;
  return v;
}

inline ExactMatrix diag(std::initializer_list<const char*> entries) {
  const Index n = static_cast<Index>(entries.size());
  ExactMatrix m = ExactMatrix::Zero(n, n);
  Index k = 0;
  for (const char* e : entries) {
    m(k, k) = GaussianRational::parse(e);
    ++k;
  }
  return m;
}

/// Single Jordan block of size n.
inline ExactMatrix jordanBlock(const GaussianRational& lambda, Index n) {
  return jordanMatrix({{lambda, {n}}});
}

class Random {
 public:
  explicit Random(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return lo + static_cast<long>(rng_() % static_cast<std::uint64_t>(hi - lo + 1)); }

  Rational rational(long range = 20, long maxDen = 9) {
    Rational r(integer(-range, range), integer(1, maxDen));
    r.canonicalize();
    return r;
  }

  GaussianRational scalar(bool complex = true) {
    if (!complex || integer(0, 2) == 0) return GaussianRational(rational());
    return GaussianRational(rational(), rational());
  }

  ExactMatrix integerMatrix(Index rows, Index cols, long lo, long hi) {
    ExactMatrix m(rows, cols);
    for (Index i = 0; i < rows; ++i)
      for (Index j = 0; j < cols; ++j) m(i, j) = GaussianRational(integer(lo, hi));
    return m;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace ej::test
