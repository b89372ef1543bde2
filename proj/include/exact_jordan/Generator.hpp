#pragma once

#include <cstdint>

#include "exact_jordan/Jordan.hpp"

namespace ej {

/// Sorts eigenvalues ascending and block sizes descending. Throws
/// std::invalid_argument on non-positive sizes or repeated eigenvalues.
BlockStructure canonicalStructure(BlockStructure structure);

/// Unimodular integer matrix built as a seeded product of elementary row
/// operations row_i += c * row_j with c in {-3..3} \ {0}. Returns the matrix
/// and its exact inverse.
std::pair<ExactMatrix, ExactMatrix> randomUnimodular(Index n, std::uint64_t seed);

/// S J S^-1 for the canonical Jordan matrix J of structure and a seeded
/// unimodular S. Deterministic in (structure, seed).
ExactMatrix generateWithStructure(const BlockStructure& structure, std::uint64_t seed);

}  // namespace ej
