#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "exact_jordan/Eigenvalues.hpp"
#include "exact_jordan/Linalg.hpp"
#include "exact_jordan/Polynomial.hpp"

namespace ej {

class NotAnEigenvalue : public std::invalid_argument {
 public:
  explicit NotAnEigenvalue(const GaussianRational& lambda)
      : std::invalid_argument(lambda.toString() + " is not an eigenvalue") {}
};

class NoPreimage : public std::logic_error {
 public:
  NoPreimage() : std::logic_error("chain head has no preimage under the shifted power") {}
};

/// Raised when one of the construction's internal identities fails. Any of
/// these indicates a bug, never bad input.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// R_0 ⊇ R_1 ⊇ ... ⊇ R_a with R_k = (A - lambda)^k X.
struct RangeFiltration {
  GaussianRational lambda;
  std::vector<ExactSubspace> spaces;  // R_0 .. R_a
  std::vector<Index> dims;            // r_0 .. r_a
  /// r_{a+1}, computed to certify that the chain has stopped.
  Index certifiedNextDim = 0;

  Index stabilizationIndex() const { return static_cast<Index>(spaces.size()) - 1; }
  Index ambientDim() const { return dims.front(); }
  const ExactSubspace& stableRange() const { return spaces.back(); }
};

/// n_k = dim of the kernel of (A - lambda) restricted to R_k, for k < a.
struct KernelProfile {
  GaussianRational lambda;
  std::vector<Index> n;

  /// n_k, with n_k = 0 for k >= a.
  Index at(Index k) const { return k < static_cast<Index>(n.size()) ? n[static_cast<std::size_t>(k)] : 0; }
};

/// x^0, ..., x^k with (A - lambda) x^0 = 0 and (A - lambda) x^j = x^{j-1}.
struct JordanChain {
  GaussianRational lambda;
  std::vector<ExactVector> vectors;

  Index length() const { return static_cast<Index>(vectors.size()); }
};

/// Chain heads x^0 found at one level k of the nested kernel bases; each
/// starts a chain of length k + 1.
struct KernelLevel {
  Index level = 0;
  std::vector<ExactVector> heads;
};

struct BlockStructureEntry {
  GaussianRational lambda;
  std::vector<Index> sizes;  // descending
  friend bool operator==(const BlockStructureEntry&, const BlockStructureEntry&) = default;
};

/// Eigenvalue -> descending block sizes, eigenvalues ascending by (re, im).
using BlockStructure = std::vector<BlockStructureEntry>;

/// Everything computed while removing one eigenvalue.
struct PeelRecord {
  RangeFiltration filtration;
  KernelProfile profile;
  Index chainVectorCount = 0;
};

struct PeelResult {
  std::vector<JordanChain> chains;
  ExactSubspace restSpace;
  ExactMatrix restOperator;
  PeelRecord record;
};

struct Decomposition {
  ExactMatrix P;
  ExactMatrix J;
  std::vector<JordanChain> chains;
  BlockStructure structure;
  /// One record per eigenvalue, in peel order (which is the canonical order).
  std::vector<PeelRecord> peels;
};

RangeFiltration rangeFiltration(const ExactMatrix& a, const GaussianRational& lambda);

KernelProfile kernelProfile(const RangeFiltration& f);

/// Chain heads level by level, from k = a-1 down to 0, such that the heads
/// at levels >= k form a basis of N_k.
std::vector<KernelLevel> nestedKernelBases(const ExactMatrix& a, const RangeFiltration& f);

JordanChain liftChain(const ExactMatrix& a, const GaussianRational& lambda, const ExactVector& head, Index level);

/// sum (k+1)(n_k - n_{k+1}); throws InvariantViolation unless it equals
/// dim X - dim R_a and sum n_k.
Index countingCheck(const RangeFiltration& f, const KernelProfile& profile);

PeelResult peelEigenvalue(const ExactMatrix& a, const GaussianRational& lambda);

Decomposition jordanDecompose(const ExactMatrix& a, const std::vector<GaussianRational>& hints = {});

/// Block-diagonal Jordan matrix for the given structure.
ExactMatrix jordanMatrix(const BlockStructure& structure);

/// prod (x - lambda)^{a_lambda}.
Polynomial minimalPolynomial(const Decomposition& d);
Polynomial minimalPolynomial(const ExactMatrix& a, const std::vector<GaussianRational>& hints = {});

/// Checks the chain identity for every vector of the chain.
bool satisfiesChainProperty(const ExactMatrix& a, const JordanChain& chain);

}  // namespace ej
