#include "exact_jordan/Generator.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <stdexcept>

namespace ej {

BlockStructure canonicalStructure(BlockStructure structure) {
  std::sort(structure.begin(), structure.end(),
            [](const BlockStructureEntry& x, const BlockStructureEntry& y) { return x.lambda < y.lambda; });
  for (std::size_t k = 0; k < structure.size(); ++k) {
    auto& entry = structure[k];
    if (k > 0 && structure[k - 1].lambda == entry.lambda) throw std::invalid_argument("eigenvalue " + entry.lambda.toString() + " listed twice");
    if (entry.sizes.empty()) throw std::invalid_argument("eigenvalue " + entry.lambda.toString() + " has no blocks");
    for (Index s : entry.sizes)
      if (s <= 0) throw std::invalid_argument("block sizes must be positive");
    std::sort(entry.sizes.begin(), entry.sizes.end(), std::greater<>());
  }
  return structure;
}

std::pair<ExactMatrix, ExactMatrix> randomUnimodular(Index n, std::uint64_t seed) {
  // mt19937_64's output sequence is fixed by the standard; the distributions
  // are not, so indices are drawn with plain modular reduction.
  std::mt19937_64 rng(seed);
  auto draw = [&](std::uint64_t bound) { return static_cast<Index>(rng() % bound); };

  ExactMatrix s = ExactMatrix::Identity(n, n);
  ExactMatrix sInv = ExactMatrix::Identity(n, n);
  if (n < 2) return {s, sInv};
  const Index operations = 2 * n;
  for (Index k = 0; k < operations; ++k) {
    const Index target = draw(static_cast<std::uint64_t>(n));
    Index source = draw(static_cast<std::uint64_t>(n - 1));
    if (source >= target) ++source;
    Index c = draw(6) - 3;
    if (c >= 0) ++c;
    const GaussianRational factor(static_cast<long>(c));
    // S <- E S with E = I + c e_target e_source^T, and S^-1 <- S^-1 E^-1.
    s.row(target) += factor * s.row(source);
    sInv.col(source) -= factor * sInv.col(target);
  }
  return {s, sInv};
}

ExactMatrix generateWithStructure(const BlockStructure& structure, std::uint64_t seed) {
  const ExactMatrix j = jordanMatrix(canonicalStructure(structure));
  auto [s, sInv] = randomUnimodular(j.rows(), seed);
  return s * j * sInv;
}

}  // namespace ej
