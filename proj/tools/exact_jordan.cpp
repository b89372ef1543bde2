// Command-line front end: exact Jordan decomposition, similarity testing and
// test-matrix generation over the Gaussian rationals.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "exact_jordan/Commands.hpp"

namespace {

std::optional<std::string> readText(const std::string& path) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

int emit(const ej::cli::CommandResult& r) {
  std::cout << r.out;
  std::cerr << r.err;
  return r.exitCode;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Jordan canonical form over Q(i)"};
  app.require_subcommand(1);

  std::string hintText;
  std::string fileA;
  std::string fileB;

  auto* decompose = app.add_subcommand("decompose", "Jordan form J and transform P with A P = P J");
  decompose->add_option("file", fileA, "matrix document (- for stdin)")->required();
  decompose->add_option("--hints", hintText, "comma-separated eigenvalue hints");

  auto* similar = app.add_subcommand("similar", "decide similarity; exit 0 similar, 1 not similar");
  similar->add_option("fileA", fileA, "first matrix document")->required();
  similar->add_option("fileB", fileB, "second matrix document")->required();
  similar->add_option("--hints", hintText, "comma-separated eigenvalue hints");

  auto* fingerprint = app.add_subcommand("fingerprint", "rank sequences of (A - lambda)^k per eigenvalue");
  fingerprint->add_option("file", fileA, "matrix document (- for stdin)")->required();
  fingerprint->add_option("--hints", hintText, "comma-separated eigenvalue hints");

  std::string spec;
  std::uint64_t seed = 0;
  auto* generate = app.add_subcommand("generate", "random matrix with a prescribed Jordan structure");
  generate->add_option("--spec", spec, R"(structure, e.g. {"2":[2,1],"3":[1]})")->required();
  generate->add_option("--seed", seed, "generator seed")->required();

  auto* verify = app.add_subcommand("verify", "re-check a decomposition; exit 0 valid, 1 invalid");
  verify->add_option("matrix", fileA, "matrix document")->required();
  verify->add_option("decomposition", fileB, "decomposition document")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : ej::cli::kParseError;
  }

  auto load = [](const std::string& path) {
    auto text = readText(path);
    if (!text) std::cerr << "cannot read " << path << "\n";
    return text;
  };

  std::vector<ej::GaussianRational> hints;
  try {
    hints = ej::cli::parseHintList(hintText);
  } catch (const ej::cli::DocumentError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return ej::cli::kParseError;
  }

  if (*generate) return emit(ej::cli::generate(spec, seed));

  auto a = load(fileA);
  if (!a) return ej::cli::kParseError;
  if (*decompose) return emit(ej::cli::decompose(*a, hints));
  if (*fingerprint) return emit(ej::cli::fingerprint(*a, hints));

  auto b = load(fileB);
  if (!b) return ej::cli::kParseError;
  if (*similar) return emit(ej::cli::similar(*a, *b, hints));
  return emit(ej::cli::verify(*a, *b));
}
