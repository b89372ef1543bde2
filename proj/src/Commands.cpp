#include "exact_jordan/Commands.hpp"

#include <functional>

#include "exact_jordan/Generator.hpp"

namespace ej::cli {

namespace {

GaussianRational parseScalar(const Json& value, const std::string& where) {
  if (!value.is_string()) throw DocumentError(where + ": expected a scalar string");
  try {
    return GaussianRational::parse(value.get<std::string>());
  } catch (const ParseError& e) {
    throw DocumentError(where + ": " + e.what());
  }
}

const Json& field(const Json& doc, const char* name) {
  if (!doc.is_object() || !doc.contains(name)) throw DocumentError(std::string("missing field '") + name + "'");
  return doc.at(name);
}

Index parseCount(const Json& value, const std::string& where) {
  if (!value.is_number_integer() || value.get<long long>() < 0) throw DocumentError(where + ": expected a nonnegative integer");
  return static_cast<Index>(value.get<long long>());
}

ExactMatrix parseGrid(const Json& grid, Index n, const std::string& where) {
  if (!grid.is_array() || static_cast<Index>(grid.size()) != n) throw DocumentError(where + ": expected " + std::to_string(n) + " rows");
  ExactMatrix m(n, n);
  for (Index i = 0; i < n; ++i) {
    const Json& row = grid[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Index>(row.size()) != n)
      throw DocumentError(where + ": row " + std::to_string(i) + " must have " + std::to_string(n) + " entries");
    for (Index j = 0; j < n; ++j)
      m(i, j) = parseScalar(row[static_cast<std::size_t>(j)], where + "[" + std::to_string(i) + "][" + std::to_string(j) + "]");
  }
  return m;
}

/// Square grid whose size is taken from the row count.
ExactMatrix parseSquareGrid(const Json& grid, const std::string& where) {
  if (!grid.is_array()) throw DocumentError(where + ": expected an array of rows");
  return parseGrid(grid, static_cast<Index>(grid.size()), where);
}

Json gridJson(const ExactMatrix& m) {
  Json rows = Json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j).toString());
    rows.push_back(std::move(row));
  }
  return rows;
}

Json vectorJson(const ExactVector& v) {
  Json out = Json::array();
  for (Index i = 0; i < v.rows(); ++i) out.push_back(v(i).toString());
  return out;
}

std::vector<GaussianRational> parseHints(const Json& doc) {
  std::vector<GaussianRational> hints;
  if (!doc.contains("eigenvalue_hints")) return hints;
  const Json& list = doc.at("eigenvalue_hints");
  if (!list.is_array()) throw DocumentError("eigenvalue_hints: expected an array");
  for (std::size_t k = 0; k < list.size(); ++k) hints.push_back(parseScalar(list[k], "eigenvalue_hints[" + std::to_string(k) + "]"));
  return hints;
}

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

/// Runs body and maps the library's error types onto the exit-code contract.
CommandResult guarded(const std::function<CommandResult()>& body) {
  try {
    return body();
  } catch (const DocumentError& e) {
    return {kParseError, "", std::string("parse error: ") + e.what() + "\n"};
  } catch (const RequiresEigenvalueHint& e) {
    return {kHintRequired, "", std::string(e.what()) + "\n"};
  } catch (const InvalidHint& e) {
    return {kBadHint, "", std::string(e.what()) + "\n"};
  }
}

std::vector<GaussianRational> concat(std::vector<GaussianRational> a, const std::vector<GaussianRational>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

std::vector<GaussianRational> validFor(const ExactMatrix& a, const std::vector<GaussianRational>& hints) {
  std::vector<GaussianRational> out;
  for (const auto& h : hints)
    if (verifyEigenvalue(a, h)) out.push_back(h);
  return out;
}

}  // namespace

Json parseJsonText(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw DocumentError(e.what());
  }
}

MatrixDocument parseMatrixDocument(const Json& doc) {
  if (!doc.is_object()) throw DocumentError("matrix document must be an object");
  const Index n = parseCount(field(doc, "n"), "n");
  return {parseGrid(field(doc, "entries"), n, "entries"), parseHints(doc)};
}

Json toJson(const MatrixDocument& doc) {
  Json out;
  out["n"] = doc.matrix.rows();
  out["entries"] = gridJson(doc.matrix);
  if (!doc.hints.empty()) {
    Json hints = Json::array();
    for (const auto& h : doc.hints) hints.push_back(h.toString());
    out["eigenvalue_hints"] = std::move(hints);
  }
  return out;
}

Json toJson(const Decomposition& d) {
  Json out;
  Json structure = Json::object();
  for (const auto& entry : d.structure) structure[entry.lambda.toString()] = entry.sizes;
  out["structure"] = std::move(structure);
  out["J"] = gridJson(d.J);
  out["P"] = gridJson(d.P);
  Json chains = Json::array();
  for (const auto& chain : d.chains) {
    Json vectors = Json::array();
    for (const auto& v : chain.vectors) vectors.push_back(vectorJson(v));
    chains.push_back(Json{{"lambda", chain.lambda.toString()}, {"vectors", std::move(vectors)}});
  }
  out["chains"] = std::move(chains);
  // Decompositions only exist once A P = P J has been checked exactly.
  out["verified"] = true;
  return out;
}

Json toJson(const SimilarityFingerprint& f) {
  Json out;
  out["n"] = f.ambientDim;
  Json entries = Json::object();
  for (const auto& e : f.entries) entries[e.lambda.toString()] = e.ranks;
  out["fingerprint"] = std::move(entries);
  return out;
}

DecompositionDocument parseDecompositionDocument(const Json& doc) {
  if (!doc.is_object()) throw DocumentError("decomposition document must be an object");
  DecompositionDocument out;

  const Json& structure = field(doc, "structure");
  if (!structure.is_object()) throw DocumentError("structure: expected an object");
  for (const auto& [key, sizes] : structure.items()) {
    BlockStructureEntry entry{parseScalar(Json(key), "structure key"), {}};
    if (!sizes.is_array()) throw DocumentError("structure[" + key + "]: expected an array");
    for (const auto& s : sizes) entry.sizes.push_back(parseCount(s, "structure[" + key + "]"));
    out.structure.push_back(std::move(entry));
  }

  out.J = parseSquareGrid(field(doc, "J"), "J");
  out.P = parseSquareGrid(field(doc, "P"), "P");

  const Json& chains = field(doc, "chains");
  if (!chains.is_array()) throw DocumentError("chains: expected an array");
  for (std::size_t c = 0; c < chains.size(); ++c) {
    const std::string where = "chains[" + std::to_string(c) + "]";
    JordanChain chain{parseScalar(field(chains[c], "lambda"), where + ".lambda"), {}};
    const Json& vectors = field(chains[c], "vectors");
    if (!vectors.is_array()) throw DocumentError(where + ".vectors: expected an array");
    for (std::size_t k = 0; k < vectors.size(); ++k) {
      const Json& v = vectors[k];
      if (!v.is_array()) throw DocumentError(where + ".vectors[" + std::to_string(k) + "]: expected an array");
      ExactVector x(static_cast<Index>(v.size()));
      for (std::size_t i = 0; i < v.size(); ++i)
        x(static_cast<Index>(i)) = parseScalar(v[i], where + ".vectors[" + std::to_string(k) + "][" + std::to_string(i) + "]");
      chain.vectors.push_back(std::move(x));
    }
    out.chains.push_back(std::move(chain));
  }

  const Json& verified = field(doc, "verified");
  if (!verified.is_boolean()) throw DocumentError("verified: expected a boolean");
  out.verified = verified.get<bool>();
  return out;
}

std::string findVerificationFailure(const ExactMatrix& a, const DecompositionDocument& d) {
  const Index n = a.rows();
  if (d.P.rows() != n || d.J.rows() != n) return "P and J must be " + std::to_string(n) + "x" + std::to_string(n);
  if (!d.verified) return "document is not marked verified";
  if (ExactMatrix(a * d.P) != ExactMatrix(d.P * d.J)) return "A P != P J";
  if (rank(d.P) != n) return "P is singular";

  Index column = 0;
  for (std::size_t c = 0; c < d.chains.size(); ++c) {
    const JordanChain& chain = d.chains[c];
    const std::string name = "chain " + std::to_string(c) + " (lambda " + chain.lambda.toString() + ")";
    if (chain.vectors.empty()) return name + " is empty";
    const ExactMatrix shift = shifted(a, chain.lambda);
    for (std::size_t j = 0; j < chain.vectors.size(); ++j) {
      const ExactVector& v = chain.vectors[j];
      if (v.rows() != n) return name + ": vector " + std::to_string(j) + " has wrong length";
      if (allZero(v)) return name + ": vector " + std::to_string(j) + " is zero";
      const ExactVector image = shift * v;
      if (j == 0 && !allZero(image)) return name + ": (A - lambda) x^0 != 0";
      if (j > 0 && image != chain.vectors[j - 1])
        return name + ": (A - lambda) x^" + std::to_string(j) + " != x^" + std::to_string(j - 1);
      if (column >= n || ExactVector(d.P.col(column)) != v) return name + ": vector " + std::to_string(j) + " is not column " + std::to_string(column) + " of P";
      ++column;
    }
  }
  if (column != n) return "chains supply " + std::to_string(column) + " columns, P has " + std::to_string(n);

  BlockStructure fromChains;
  for (const JordanChain& chain : d.chains) {
    if (fromChains.empty() || fromChains.back().lambda != chain.lambda) fromChains.push_back({chain.lambda, {}});
    fromChains.back().sizes.push_back(chain.length());
  }
  if (jordanMatrix(fromChains) != d.J) return "J does not match the chains";
  if (fromChains != d.structure) return "structure does not match the chains";
  return "";
}

BlockStructure parseStructureSpec(std::string_view text) {
  const Json doc = parseJsonText(text);
  if (!doc.is_object() || doc.empty()) throw DocumentError("structure spec must be a nonempty object");
  BlockStructure out;
  for (const auto& [key, sizes] : doc.items()) {
    BlockStructureEntry entry{parseScalar(Json(key), "structure spec key"), {}};
    if (!sizes.is_array() || sizes.empty()) throw DocumentError("structure spec[" + key + "]: expected a nonempty array");
    for (const auto& s : sizes) {
      if (!s.is_number_integer() || s.get<long long>() <= 0) throw DocumentError("structure spec[" + key + "]: block sizes must be positive integers");
      entry.sizes.push_back(static_cast<Index>(s.get<long long>()));
    }
    out.push_back(std::move(entry));
  }
  try {
    return canonicalStructure(std::move(out));
  } catch (const std::invalid_argument& e) {
    throw DocumentError(e.what());
  }
}

std::vector<GaussianRational> parseHintList(std::string_view text) {
  std::vector<GaussianRational> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = text.find(',', start);
    const std::string_view token = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    try {
      out.push_back(GaussianRational::parse(token));
    } catch (const ParseError& e) {
      throw DocumentError("hint '" + std::string(token) + "': " + e.what());
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

CommandResult decompose(std::string_view matrixText, const std::vector<GaussianRational>& hints) {
  return guarded([&] {
    const MatrixDocument doc = parseMatrixDocument(parseJsonText(matrixText));
    const Decomposition d = jordanDecompose(doc.matrix, concat(doc.hints, hints));
    return CommandResult{kOk, dump(toJson(d)), ""};
  });
}

CommandResult similar(std::string_view matrixA, std::string_view matrixB, const std::vector<GaussianRational>& hints) {
  return guarded([&] {
    const MatrixDocument a = parseMatrixDocument(parseJsonText(matrixA));
    const MatrixDocument b = parseMatrixDocument(parseJsonText(matrixB));
    const auto allHints = concat(concat(a.hints, b.hints), hints);

    Json out;
    const bool same = isSimilar(a.matrix, b.matrix, allHints);
    out["similar"] = same;
    out["fingerprints"] = Json{{"a", toJson(fingerprint(a.matrix, validFor(a.matrix, allHints)))},
                               {"b", toJson(fingerprint(b.matrix, validFor(b.matrix, allHints)))}};
    if (same) out["transform"] = gridJson(*similarityTransform(a.matrix, b.matrix, allHints));
    return CommandResult{same ? kOk : kNegative, dump(out), ""};
  });
}

CommandResult fingerprint(std::string_view matrixText, const std::vector<GaussianRational>& hints) {
  return guarded([&] {
    const MatrixDocument doc = parseMatrixDocument(parseJsonText(matrixText));
    return CommandResult{kOk, dump(toJson(ej::fingerprint(doc.matrix, concat(doc.hints, hints)))), ""};
  });
}

CommandResult generate(std::string_view structureSpec, std::uint64_t seed) {
  return guarded([&] {
    const BlockStructure s = parseStructureSpec(structureSpec);
    return CommandResult{kOk, dump(toJson(MatrixDocument{generateWithStructure(s, seed), {}})), ""};
  });
}

CommandResult verify(std::string_view matrixText, std::string_view decompositionText) {
  return guarded([&] {
    const MatrixDocument a = parseMatrixDocument(parseJsonText(matrixText));
    const DecompositionDocument d = parseDecompositionDocument(parseJsonText(decompositionText));
    const std::string failure = findVerificationFailure(a.matrix, d);
    if (failure.empty()) return CommandResult{kOk, dump(Json{{"verified", true}}), ""};
    return CommandResult{kNegative, dump(Json{{"verified", false}, {"failure", failure}}), "verification failed: " + failure + "\n"};
  });
}

}  // namespace ej::cli
