#pragma once

#include <optional>
#include <vector>

#include "exact_jordan/Jordan.hpp"

namespace ej {

struct FingerprintEntry {
  GaussianRational lambda;
  /// d_1, ..., d_a with d_k = dim (A - lambda)^k X, cut before the first repeat.
  std::vector<Index> ranks;
  friend bool operator==(const FingerprintEntry&, const FingerprintEntry&) = default;
};

/// Rank sequences of every eigenvalue. Two operators on the same space are
/// similar exactly when their fingerprints agree.
struct SimilarityFingerprint {
  Index ambientDim = 0;
  std::vector<FingerprintEntry> entries;  // eigenvalues ascending by (re, im)
  friend bool operator==(const SimilarityFingerprint&, const SimilarityFingerprint&) = default;
};

/// Computed from ranks of powers of A - lambda, independently of the chain
/// construction.
SimilarityFingerprint fingerprint(const ExactMatrix& a, const std::vector<GaussianRational>& hints = {});

bool isSimilar(const ExactMatrix& a, const ExactMatrix& b, const std::vector<GaussianRational>& hints = {});

/// Invertible S with B S = S A, or nullopt when the matrices are not similar.
std::optional<ExactMatrix> similarityTransform(const ExactMatrix& a, const ExactMatrix& b,
                                               const std::vector<GaussianRational>& hints = {});

BlockStructure structureFromFingerprint(const SimilarityFingerprint& f);

/// Checks that prod (A - lambda)^{m_lambda} and charPoly(A)(A) both vanish.
bool cayleyHamiltonCheck(const ExactMatrix& a, const std::vector<GaussianRational>& hints = {});

}  // namespace ej
