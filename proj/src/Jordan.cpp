#include "exact_jordan/Jordan.hpp"

#include <string>

namespace ej {

namespace {

ExactMatrix columnsOf(const std::vector<ExactVector>& vectors, Index rows) {
  ExactMatrix out(rows, static_cast<Index>(vectors.size()));
  for (std::size_t k = 0; k < vectors.size(); ++k) out.col(static_cast<Index>(k)) = vectors[k];
  return out;
}

void require(bool condition, const std::string& what) {
  if (!condition) throw InvariantViolation(what);
}

}  // namespace

RangeFiltration rangeFiltration(const ExactMatrix& a, const GaussianRational& lambda) {
  if (a.rows() != a.cols()) throw DimensionMismatch("range filtration of a non-square matrix");
  const ExactMatrix shift = shifted(a, lambda);
  RangeFiltration f{lambda, {ExactSubspace::full(a.rows())}, {a.rows()}, 0};
  for (;;) {
    ExactSubspace next = imageBasis(shift * f.spaces.back().basis());
    if (next.dim() == f.dims.back()) {
      f.certifiedNextDim = next.dim();
      break;
    }
    f.dims.push_back(next.dim());
    f.spaces.push_back(std::move(next));
  }
  if (f.spaces.size() == 1) throw NotAnEigenvalue(lambda);
  return f;
}

KernelProfile kernelProfile(const RangeFiltration& f) {
  KernelProfile profile{f.lambda, {}};
  for (Index k = 0; k < f.stabilizationIndex(); ++k)
    profile.n.push_back(f.dims[static_cast<std::size_t>(k)] - f.dims[static_cast<std::size_t>(k + 1)]);
  for (Index k = 0; k + 1 < static_cast<Index>(profile.n.size()); ++k)
    require(profile.at(k) >= profile.at(k + 1), "kernel dimensions must not increase");
  return profile;
}

std::vector<KernelLevel> nestedKernelBases(const ExactMatrix& a, const RangeFiltration& f) {
  const ExactMatrix shift = shifted(a, f.lambda);
  const Index n = a.rows();
  std::vector<KernelLevel> levels;
  std::vector<ExactVector> collected;
  for (Index k = f.stabilizationIndex() - 1; k >= 0; --k) {
    const ExactMatrix& rangeBasis = f.spaces[static_cast<std::size_t>(k)].basis();
    // N_k: vectors of R_k killed by A - lambda, in ambient coordinates.
    const ExactSubspace coords = kernelBasis(shift * rangeBasis);
    const ExactSubspace kernel(rangeBasis * coords.basis());
    require(kernel.dim() == f.dims[static_cast<std::size_t>(k)] - f.dims[static_cast<std::size_t>(k + 1)],
            "dim N_k must equal r_k - r_{k+1}");

    KernelLevel level{k, extendBasis(ExactSubspace(columnsOf(collected, n)), kernel)};
    collected.insert(collected.end(), level.heads.begin(), level.heads.end());
    levels.push_back(std::move(level));
  }
  return levels;
}

JordanChain liftChain(const ExactMatrix& a, const GaussianRational& lambda, const ExactVector& head, Index level) {
  const ExactMatrix shift = shifted(a, lambda);
  if (!allZero(shift * head)) throw std::invalid_argument("chain head is not an eigenvector");
  JordanChain chain{lambda, std::vector<ExactVector>(static_cast<std::size_t>(level) + 1)};
  chain.vectors[0] = head;
  if (level == 0) return chain;

  auto top = solveParticular(matrixPower(shift, static_cast<unsigned>(level)), head);
  if (!top) throw NoPreimage();
  chain.vectors[static_cast<std::size_t>(level)] = std::move(*top);
  for (Index j = level - 1; j >= 1; --j)
    chain.vectors[static_cast<std::size_t>(j)] = shift * chain.vectors[static_cast<std::size_t>(j + 1)];
  require(shift * chain.vectors[1] == head, "lifted chain does not return to its head");
  return chain;
}

Index countingCheck(const RangeFiltration& f, const KernelProfile& profile) {
  const Index a = f.stabilizationIndex();
  Index weighted = 0;
  Index plain = 0;
  for (Index k = 0; k < a; ++k) {
    require(profile.at(k) == f.dims[static_cast<std::size_t>(k)] - f.dims[static_cast<std::size_t>(k + 1)],
            "n_k must equal r_k - r_{k+1}");
    weighted += (k + 1) * (profile.at(k) - profile.at(k + 1));
    plain += profile.at(k);
  }
  const Index expected = f.dims.front() - f.dims.back();
  require(weighted == plain && plain == expected, "chain vector count must equal dim X - dim R_a");
  return weighted;
}

PeelResult peelEigenvalue(const ExactMatrix& a, const GaussianRational& lambda) {
  RangeFiltration f = rangeFiltration(a, lambda);
  require(f.certifiedNextDim == f.dims.back(), "range filtration did not stabilize");
  for (std::size_t k = 0; k + 1 < f.dims.size(); ++k) require(f.dims[k] > f.dims[k + 1], "range filtration must shrink strictly before a");

  KernelProfile profile = kernelProfile(f);
  const Index total = countingCheck(f, profile);

  std::vector<JordanChain> chains;
  std::vector<ExactVector> allVectors;
  for (const KernelLevel& level : nestedKernelBases(a, f)) {
    require(static_cast<Index>(level.heads.size()) == profile.at(level.level) - profile.at(level.level + 1),
            "level must add n_k - n_{k+1} chain heads");
    for (const ExactVector& head : level.heads) {
      JordanChain chain = liftChain(a, lambda, head, level.level);
      allVectors.insert(allVectors.end(), chain.vectors.begin(), chain.vectors.end());
      chains.push_back(std::move(chain));
    }
  }
  require(static_cast<Index>(allVectors.size()) == total, "chains must contain dim X - dim R_a vectors");

  const ExactSubspace& stable = f.stableRange();
  ExactMatrix joined(a.rows(), stable.dim() + total);
  joined << stable.basis(), columnsOf(allVectors, a.rows());
  require(rank(joined) == a.rows(), "chain vectors and R_a must together span X independently");

  ExactSubspace rest = canonicalBasis(stable);
  ExactMatrix restOperator = restrictOperator(a, rest);
  require(rank(shifted(restOperator, lambda)) == rest.dim(), "A - lambda must be invertible on R_a");

  PeelRecord record{std::move(f), std::move(profile), total};
  return PeelResult{std::move(chains), std::move(rest), std::move(restOperator), std::move(record)};
}

ExactMatrix jordanMatrix(const BlockStructure& structure) {
  Index n = 0;
  for (const auto& entry : structure)
    for (Index s : entry.sizes) n += s;
  ExactMatrix j = ExactMatrix::Zero(n, n);
  Index offset = 0;
  for (const auto& entry : structure) {
    for (Index s : entry.sizes) {
      for (Index k = 0; k < s; ++k) {
        j(offset + k, offset + k) = entry.lambda;
        if (k + 1 < s) j(offset + k, offset + k + 1) = 1;
      }
      offset += s;
    }
  }
  return j;
}

Decomposition jordanDecompose(const ExactMatrix& a, const std::vector<GaussianRational>& hints) {
  if (a.rows() != a.cols()) throw DimensionMismatch("Jordan decomposition of a non-square matrix");
  const Index n = a.rows();
  Decomposition d;
  if (n == 0) {
    d.P = ExactMatrix(0, 0);
    d.J = ExactMatrix(0, 0);
    return d;
  }

  const EigenvalueReport report = findEigenvalues(a, hints);

  // Current operator, and the map from its coordinates to ambient ones.
  ExactMatrix op = a;
  ExactMatrix toAmbient = ExactMatrix::Identity(n, n);
  for (const Eigenvalue& e : report.eigenvalues) {
    PeelResult peel = peelEigenvalue(op, e.value);
    require(peel.record.chainVectorCount == e.algebraicMultiplicity,
            "root multiplicity of " + e.value.toString() + " disagrees with dim X - dim R_a");

    BlockStructureEntry entry{e.value, {}};
    for (JordanChain& chain : peel.chains) {
      for (ExactVector& v : chain.vectors) v = toAmbient * v;
      entry.sizes.push_back(chain.length());
      d.chains.push_back(std::move(chain));
    }
    d.structure.push_back(std::move(entry));
    d.peels.push_back(std::move(peel.record));

    toAmbient = toAmbient * peel.restSpace.basis();
    op = std::move(peel.restOperator);
  }
  require(op.rows() == 0, "eigenvalues did not exhaust the space");

  d.P = ExactMatrix(n, n);
  Index col = 0;
  for (const JordanChain& chain : d.chains)
    for (const ExactVector& v : chain.vectors) d.P.col(col++) = v;
  d.J = jordanMatrix(d.structure);

  require(rank(d.P) == n, "P must be invertible");
  require(ExactMatrix(a * d.P) == ExactMatrix(d.P * d.J), "A P must equal P J");
  return d;
}

Polynomial minimalPolynomial(const Decomposition& d) {
  Polynomial out({GaussianRational(1)});
  for (const PeelRecord& peel : d.peels)
    for (Index k = 0; k < peel.filtration.stabilizationIndex(); ++k) out = out * Polynomial::linear(peel.filtration.lambda);
  return out;
}

Polynomial minimalPolynomial(const ExactMatrix& a, const std::vector<GaussianRational>& hints) {
  return minimalPolynomial(jordanDecompose(a, hints));
}

bool satisfiesChainProperty(const ExactMatrix& a, const JordanChain& chain) {
  if (chain.vectors.empty()) return false;
  const ExactMatrix shift = shifted(a, chain.lambda);
  for (std::size_t j = 0; j < chain.vectors.size(); ++j) {
    const ExactVector& v = chain.vectors[j];
    if (v.rows() != a.rows() || allZero(v)) return false;
    ExactVector image = shift * v;
    if (j == 0 ? !allZero(image) : image != chain.vectors[j - 1]) return false;
  }
  return true;
}

}  // namespace ej
