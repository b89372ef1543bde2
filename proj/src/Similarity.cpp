#include "exact_jordan/Similarity.hpp"

#include <algorithm>

namespace ej {

SimilarityFingerprint fingerprint(const ExactMatrix& a, const std::vector<GaussianRational>& hints) {
  if (a.rows() != a.cols()) throw DimensionMismatch("fingerprint of a non-square matrix");
  SimilarityFingerprint f{a.rows(), {}};
  if (a.rows() == 0) return f;
  for (const Eigenvalue& e : findEigenvalues(a, hints).eigenvalues) {
    const ExactMatrix shift = shifted(a, e.value);
    FingerprintEntry entry{e.value, {}};
    ExactMatrix power = shift;
    Index previous = a.rows();
    for (;;) {
      const Index r = rank(power);
      if (r == previous) break;
      entry.ranks.push_back(r);
      previous = r;
      power = power * shift;
    }
    f.entries.push_back(std::move(entry));
  }
  return f;
}

bool isSimilar(const ExactMatrix& a, const ExactMatrix& b, const std::vector<GaussianRational>& hints) {
  if (a.rows() != a.cols() || b.rows() != b.cols()) throw DimensionMismatch("similarity of non-square matrices");
  if (a.rows() != b.rows()) return false;
  for (const auto& hint : hints) {
    const bool forA = verifyEigenvalue(a, hint);
    const bool forB = verifyEigenvalue(b, hint);
    if (!forA && !forB) throw InvalidHint(hint);
    if (forA != forB) return false;
  }
  return fingerprint(a, hints) == fingerprint(b, hints);
}

std::optional<ExactMatrix> similarityTransform(const ExactMatrix& a, const ExactMatrix& b,
                                               const std::vector<GaussianRational>& hints) {
  if (!isSimilar(a, b, hints)) return std::nullopt;
  const Decomposition da = jordanDecompose(a, hints);
  const Decomposition db = jordanDecompose(b, hints);
  if (da.J != db.J) throw InvariantViolation("similar matrices produced different canonical forms");
  ExactMatrix s = db.P * invert(da.P);
  if (ExactMatrix(b * s) != ExactMatrix(s * a)) throw InvariantViolation("similarity transform fails B S = S A");
  return s;
}

BlockStructure structureFromFingerprint(const SimilarityFingerprint& f) {
  BlockStructure out;
  for (const FingerprintEntry& entry : f.entries) {
    // d_0 = dim X, then the recorded ranks; d_{a+1} = d_a.
    std::vector<Index> d{f.ambientDim};
    d.insert(d.end(), entry.ranks.begin(), entry.ranks.end());
    const Index a = static_cast<Index>(entry.ranks.size());
    auto kernelDim = [&](Index k) -> Index {
      if (k >= a) return 0;
      return d[static_cast<std::size_t>(k)] - d[static_cast<std::size_t>(k + 1)];
    };
    BlockStructureEntry blocks{entry.lambda, {}};
    for (Index size = a; size >= 1; --size) {
      const Index count = kernelDim(size - 1) - kernelDim(size);
      blocks.sizes.insert(blocks.sizes.end(), static_cast<std::size_t>(count), size);
    }
    out.push_back(std::move(blocks));
  }
  return out;
}

bool cayleyHamiltonCheck(const ExactMatrix& a, const std::vector<GaussianRational>& hints) {
  const Decomposition d = jordanDecompose(a, hints);
  const Index n = a.rows();
  ExactMatrix product = ExactMatrix::Identity(n, n);
  for (const PeelRecord& peel : d.peels)
    product = product * matrixPower(shifted(a, peel.filtration.lambda), static_cast<unsigned>(peel.chainVectorCount));
  if (!allZero(product)) return false;
  return allZero(charPoly(a)(a));
}

}  // namespace ej
