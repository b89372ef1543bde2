#include "exact_jordan/Eigenvalues.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace ej {

namespace {

// Trial division bound used when factoring coefficients for root candidates.
constexpr unsigned long kTrialDivisionLimit = 1'000'000;

struct GaussInt {
  Integer re;
  Integer im;

  Integer norm() const { return re * re + im * im; }
  bool isZero() const { return re == 0 && im == 0; }

  friend GaussInt operator*(const GaussInt& a, const GaussInt& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GaussInt operator-(const GaussInt& a, const GaussInt& b) { return {a.re - b.re, a.im - b.im}; }
};

Integer roundedDivide(const Integer& num, const Integer& den) {
  // floor((2 num + den) / (2 den)) for den > 0
  Integer twice = 2 * num + den;
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), twice.get_mpz_t(), Integer(2 * den).get_mpz_t());
  return out;
}

// a = q b + r with N(r) < N(b).
GaussInt remainder(const GaussInt& a, const GaussInt& b) {
  const Integer n = b.norm();
  const GaussInt numerator = a * GaussInt{b.re, -b.im};
  GaussInt q{roundedDivide(numerator.re, n), roundedDivide(numerator.im, n)};
  return a - q * b;
}

GaussInt gcd(GaussInt a, GaussInt b) {
  while (!b.isZero()) {
    GaussInt r = remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

std::optional<GaussInt> exactQuotient(const GaussInt& a, const GaussInt& b) {
  const Integer n = b.norm();
  const GaussInt numerator = a * GaussInt{b.re, -b.im};
  if (!mpz_divisible_p(numerator.re.get_mpz_t(), n.get_mpz_t()) || !mpz_divisible_p(numerator.im.get_mpz_t(), n.get_mpz_t()))
    return std::nullopt;
  return GaussInt{numerator.re / n, numerator.im / n};
}

using Factorization = std::vector<std::pair<Integer, unsigned>>;

/// Prime factorization of n > 0, or nullopt if a cofactor beyond the trial
/// division bound is composite.
std::optional<Factorization> factorInteger(Integer n) {
  Factorization out;
  auto strip = [&](const Integer& d) {
    unsigned e = 0;
    while (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) {
      n /= d;
      ++e;
    }
    if (e > 0) out.emplace_back(d, e);
  };
  strip(Integer(2));
  for (unsigned long d = 3; d <= kTrialDivisionLimit; d += 2) {
    if (Integer(d) * d > n) break;
    strip(Integer(d));
  }
  if (n > 1) {
    const Integer limit = Integer(kTrialDivisionLimit) * kTrialDivisionLimit;
    if (n > limit && mpz_probab_prime_p(n.get_mpz_t(), 30) == 0) return std::nullopt;
    out.emplace_back(n, 1);
  }
  return out;
}

std::vector<Integer> positiveDivisors(const Factorization& f) {
  std::vector<Integer> out{1};
  for (const auto& [p, e] : f) {
    const std::size_t existing = out.size();
    Integer power = 1;
    for (unsigned k = 1; k <= e; ++k) {
      power *= p;
      for (std::size_t j = 0; j < existing; ++j) out.push_back(out[j] * power);
    }
  }
  return out;
}

/// A Gaussian prime above the rational prime p = 1 (mod 4).
GaussInt gaussianPrimeAbove(const Integer& p) {
  // t^2 = -1 (mod p) from any quadratic non-residue c: t = c^((p-1)/4).
  const Integer exponent = (p - 1) / 4;
  for (Integer c = 2;; ++c) {
    if (mpz_legendre(c.get_mpz_t(), p.get_mpz_t()) != -1) continue;
    Integer t;
    mpz_powm(t.get_mpz_t(), c.get_mpz_t(), exponent.get_mpz_t(), p.get_mpz_t());
    return gcd(GaussInt{p, 0}, GaussInt{t, 1});
  }
}

/// Divisors of g in Z[i], one representative per associate class.
std::optional<std::vector<GaussInt>> gaussianDivisors(const GaussInt& g) {
  auto normFactors = factorInteger(g.norm());
  if (!normFactors) return std::nullopt;

  std::vector<GaussInt> primes;
  for (const auto& [p, e] : *normFactors) {
    if (p == 2) {
      primes.push_back({1, 1});
    } else if (mpz_fdiv_ui(p.get_mpz_t(), 4) == 3) {
      primes.push_back({p, 0});
    } else {
      GaussInt pi = gaussianPrimeAbove(p);
      primes.push_back(pi);
      primes.push_back({pi.re, -pi.im});
    }
  }

  std::vector<GaussInt> out{{1, 0}};
  GaussInt rest = g;
  for (const auto& pi : primes) {
    unsigned e = 0;
    while (auto q = exactQuotient(rest, pi)) {
      rest = *q;
      ++e;
    }
    const std::size_t existing = out.size();
    GaussInt power{1, 0};
    for (unsigned k = 1; k <= e; ++k) {
      power = power * pi;
      for (std::size_t j = 0; j < existing; ++j) out.push_back(out[j] * power);
    }
  }
  return out;
}

Integer lcmOfDenominators(const Polynomial& p) {
  Integer l = 1;
  for (const auto& c : p.coefficients()) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.real().get_den_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.imag().get_den_mpz_t());
  }
  return l;
}

GaussInt clearedCoefficient(const GaussianRational& c, const Integer& scale) {
  Rational re = c.real() * scale;
  Rational im = c.imag() * scale;
  return {re.get_num(), im.get_num()};
}

Rational height(const GaussianRational& z) {
  auto h = [](const Rational& q) { return std::max<Integer>(abs(q.get_num()), q.get_den()); };
  return Rational(std::max(h(z.real()), h(z.imag())));
}

void sortByHeight(std::vector<GaussianRational>& candidates) {
  std::sort(candidates.begin(), candidates.end(), [](const GaussianRational& a, const GaussianRational& b) {
    const Rational ha = height(a);
    const Rational hb = height(b);
    if (ha != hb) return ha < hb;
    return a < b;
  });
}

class RootExtractor {
 public:
  explicit RootExtractor(Polynomial p) : rest_(std::move(p)) {}

  void stripZeroRoots() {
    while (rest_.degree() > 0 && rest_.coefficient(0).isZero()) deflate(GaussianRational());
  }

  void tryCandidates(const std::vector<GaussianRational>& candidates) {
    for (const auto& c : candidates) {
      if (rest_.degree() <= 0) return;
      while (rest_.degree() > 0 && rest_(c).isZero()) deflate(c);
    }
  }

  // Rational root theorem on the primitive integer polynomial.
  void rationalStage() {
    if (rest_.degree() <= 0) return;
    for (const auto& c : rest_.coefficients())
      if (!c.isReal()) return;
    const Integer scale = lcmOfDenominators(rest_);
    const Integer constant = abs(clearedCoefficient(rest_.coefficient(0), scale).re);
    const Integer lead = abs(clearedCoefficient(rest_.leading(), scale).re);
    auto fc = factorInteger(constant);
    auto fl = factorInteger(lead);
    if (!fc || !fl) return;
    std::set<GaussianRational> unique;
    for (const auto& num : positiveDivisors(*fc))
      for (const auto& den : positiveDivisors(*fl)) {
        unique.insert(GaussianRational(Rational(num, den)));
        unique.insert(GaussianRational(Rational(-num, den)));
      }
    std::vector<GaussianRational> candidates(unique.begin(), unique.end());
    sortByHeight(candidates);
    tryCandidates(candidates);
  }

  void quadraticStage() {
    if (rest_.degree() != 2) return;
    const GaussianRational& a = rest_.coefficient(2);
    const GaussianRational b = rest_.coefficient(1);
    const GaussianRational c = rest_.coefficient(0);
    const GaussianRational disc = b * b - GaussianRational(4) * a * c;
    auto s = sqrtExact(disc);
    if (!s) return;
    const GaussianRational twoA = GaussianRational(2) * a;
    const GaussianRational r1 = (-b - *s) / twoA;
    const GaussianRational r2 = (-b + *s) / twoA;
    deflate(r1);
    deflate(r2);
  }

  // Rational root theorem over the Gaussian integers, which form a UFD.
  void gaussianStage() {
    if (rest_.degree() <= 0) return;
    const Integer scale = lcmOfDenominators(rest_);
    const GaussInt constant = clearedCoefficient(rest_.coefficient(0), scale);
    const GaussInt lead = clearedCoefficient(rest_.leading(), scale);
    auto dc = gaussianDivisors(constant);
    auto dl = gaussianDivisors(lead);
    if (!dc || !dl) return;
    const GaussInt units[] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    std::set<GaussianRational> unique;
    for (const auto& num : *dc)
      for (const auto& den : *dl)
        for (const auto& u : units) {
          GaussInt n = num * u;
          unique.insert(GaussianRational(Rational(n.re), Rational(n.im)) /
                        GaussianRational(Rational(den.re), Rational(den.im)));
        }
    std::vector<GaussianRational> candidates(unique.begin(), unique.end());
    sortByHeight(candidates);
    tryCandidates(candidates);
  }

  EigenvalueReport report() const {
    EigenvalueReport out;
    for (const auto& [value, m] : found_) out.eigenvalues.push_back({value, m});
    out.complete = rest_.degree() <= 0;
    out.unfactored = rest_.isZero() ? rest_ : rest_.monic();
    return out;
  }

 private:
  void deflate(const GaussianRational& root) {
    auto [quotient, remainder] = rest_.divideLinear(root);
    if (!remainder.isZero()) throw std::logic_error("deflation by a non-root");
    rest_ = std::move(quotient);
    ++found_[root];
  }

  Polynomial rest_;
  std::map<GaussianRational, Index> found_;
};

}  // namespace

EigenvalueReport gaussianRationalRoots(const Polynomial& p) {
  if (p.isZero()) throw std::invalid_argument("the zero polynomial has every number as a root");
  RootExtractor extractor(p);
  extractor.stripZeroRoots();
  extractor.rationalStage();
  extractor.quadraticStage();
  extractor.gaussianStage();
  extractor.quadraticStage();
  return extractor.report();
}

bool verifyEigenvalue(const ExactMatrix& a, const GaussianRational& lambda) {
  if (a.rows() != a.cols()) throw DimensionMismatch("eigenvalue of a non-square matrix");
  return rank(shifted(a, lambda)) < a.rows();
}

Index generalizedEigenspaceDim(const ExactMatrix& a, const GaussianRational& lambda) {
  const ExactMatrix shift = shifted(a, lambda);
  ExactMatrix range = ExactMatrix::Identity(a.rows(), a.cols());
  Index previous = a.rows();
  for (;;) {
    range = imageBasis(shift * range).basis();
    if (range.cols() == previous) return a.rows() - previous;
    previous = range.cols();
  }
}

EigenvalueReport searchEigenvalues(const ExactMatrix& a, const std::vector<GaussianRational>& hints) {
  if (a.rows() != a.cols()) throw DimensionMismatch("eigenvalues of a non-square matrix");
  Polynomial rest = charPoly(a);
  std::map<GaussianRational, Index> known;
  for (const auto& hint : hints) {
    if (known.contains(hint)) continue;
    if (!verifyEigenvalue(a, hint)) throw InvalidHint(hint);
    const Index m = generalizedEigenspaceDim(a, hint);
    for (Index k = 0; k < m; ++k) {
      auto [quotient, remainder] = rest.divideLinear(hint);
      if (!remainder.isZero()) throw std::logic_error("filtration multiplicity disagrees with the characteristic polynomial");
      rest = std::move(quotient);
    }
    known[hint] = m;
  }

  EigenvalueReport found = gaussianRationalRoots(rest);
  for (const auto& e : found.eigenvalues) known[e.value] += e.algebraicMultiplicity;

  EigenvalueReport out;
  Index total = 0;
  for (const auto& [value, m] : known) {
    out.eigenvalues.push_back({value, m});
    total += m;
  }
  out.complete = total == a.rows();
  out.unfactored = found.unfactored;
  return out;
}

EigenvalueReport findEigenvalues(const ExactMatrix& a, const std::vector<GaussianRational>& hints) {
  EigenvalueReport report = searchEigenvalues(a, hints);
  if (!report.complete) throw RequiresEigenvalueHint(report.unfactored);
  return report;
}

}  // namespace ej
