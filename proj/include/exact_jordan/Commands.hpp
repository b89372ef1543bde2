#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "exact_jordan/Jordan.hpp"
#include "exact_jordan/Similarity.hpp"

/// Document formats and command implementations behind the command-line
/// tool. Commands return their exit code and output instead of touching the
/// process, so they can be driven in-process.
namespace ej::cli {

using Json = nlohmann::ordered_json;

enum ExitCode : int {
  kOk = 0,
  kNegative = 1,
  kParseError = 2,
  kHintRequired = 3,
  kBadHint = 4,
};

/// Malformed input document, structure spec, or hint list.
class DocumentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct MatrixDocument {
  ExactMatrix matrix;
  std::vector<GaussianRational> hints;
};

struct DecompositionDocument {
  BlockStructure structure;
  ExactMatrix J;
  ExactMatrix P;
  std::vector<JordanChain> chains;
  bool verified = false;
};

MatrixDocument parseMatrixDocument(const Json& doc);
Json toJson(const MatrixDocument& doc);

DecompositionDocument parseDecompositionDocument(const Json& doc);
Json toJson(const Decomposition& d);
Json toJson(const SimilarityFingerprint& f);

/// `{"2": [2, 1], "3": [1]}`: eigenvalue strings to block sizes.
BlockStructure parseStructureSpec(std::string_view text);
/// Comma-separated scalars: `1,-1i,1/2`.
std::vector<GaussianRational> parseHintList(std::string_view text);

Json parseJsonText(std::string_view text);

/// Empty when the decomposition checks out, otherwise the first failing
/// identity.
std::string findVerificationFailure(const ExactMatrix& a, const DecompositionDocument& d);

struct CommandResult {
  int exitCode = kOk;
  std::string out;
  std::string err;
};

CommandResult decompose(std::string_view matrixText, const std::vector<GaussianRational>& hints = {});
CommandResult similar(std::string_view matrixA, std::string_view matrixB, const std::vector<GaussianRational>& hints = {});
CommandResult fingerprint(std::string_view matrixText, const std::vector<GaussianRational>& hints = {});
CommandResult generate(std::string_view structureSpec, std::uint64_t seed);
CommandResult verify(std::string_view matrixText, std::string_view decompositionText);

}  // namespace ej::cli
