#include "doctest.h"
#include "oracles.hpp"
#include "support.hpp"

#include "exact_jordan/Generator.hpp"
#include "exact_jordan/Jordan.hpp"

using namespace ej;
using namespace ej::test;

namespace {

std::vector<GaussianRational> eigenvaluesOf(const BlockStructure& s) {
  std::vector<GaussianRational> out;
  for (const auto& e : s) out.push_back(e.lambda);
  return out;
}

}  // namespace

TEST_CASE("range filtration") {
  SUBCASE("1x1") {
    const auto f = rangeFiltration(mat({{"2"}}), q("2"));
    CHECK(f.dims == std::vector<Index>{1, 0});
    CHECK(f.stabilizationIndex() == 1);
  }
  SUBCASE("nilpotent block of size 3") {
    const auto f = rangeFiltration(jordanBlock(0, 3), q("0"));
    CHECK(f.dims == std::vector<Index>{3, 2, 1, 0});
    CHECK(f.stabilizationIndex() == 3);
    CHECK(f.certifiedNextDim == 0);
  }
  SUBCASE("diag(2,3) at 2") {
    const auto f = rangeFiltration(diag({"2", "3"}), q("2"));
    CHECK(f.dims == std::vector<Index>{2, 1});
    CHECK(f.stabilizationIndex() == 1);
    CHECK(ExactVector(f.stableRange().basis().col(0)) == unit(2, 1));
    CHECK(f.certifiedNextDim == 1);
  }
  SUBCASE("not an eigenvalue") { CHECK_THROWS_AS(rangeFiltration(diag({"2", "3"}), q("4")), NotAnEigenvalue); }
}

TEST_CASE("kernel profile") {
  CHECK(kernelProfile(rangeFiltration(jordanBlock(0, 3), 0)).n == std::vector<Index>{1, 1, 1});
  CHECK(kernelProfile(rangeFiltration(diag({"2", "3"}), 2)).n == std::vector<Index>{1});
  // diag(J_2(0), 0, 5): r = [4, 2, 1] with a = 2.
  const auto a = jordanMatrix({{0, {2, 1}}, {5, {1}}});
  const auto f = rangeFiltration(a, 0);
  CHECK(f.dims == std::vector<Index>{4, 2, 1});
  CHECK(kernelProfile(f).n == std::vector<Index>{2, 1});
}

TEST_CASE("nested kernel bases") {
  SUBCASE("single nilpotent block") {
    const auto a = jordanBlock(0, 3);
    const auto levels = nestedKernelBases(a, rangeFiltration(a, 0));
    REQUIRE(levels.size() == 3);
    CHECK(levels[0].level == 2);
    REQUIRE(levels[0].heads.size() == 1);
    CHECK(levels[0].heads[0] == unit(3, 0));
    CHECK(levels[1].heads.empty());
    CHECK(levels[2].heads.empty());
  }
  SUBCASE("zero matrix") {
    const ExactMatrix a = ExactMatrix::Zero(2, 2);
    const auto levels = nestedKernelBases(a, rangeFiltration(a, 0));
    REQUIRE(levels.size() == 1);
    CHECK(levels[0].level == 0);
    REQUIRE(levels[0].heads.size() == 2);
    CHECK(levels[0].heads[0] == unit(2, 0));
    CHECK(levels[0].heads[1] == unit(2, 1));
  }
  SUBCASE("scalar matrix") {
    const auto a = diag({"2", "2"});
    const auto levels = nestedKernelBases(a, rangeFiltration(a, 2));
    REQUIRE(levels.size() == 1);
    CHECK(levels[0].heads.size() == 2);
  }
}

TEST_CASE("lift chain") {
  const auto nil = mat({{"0", "1"}, {"0", "0"}});
  const auto c = liftChain(nil, 0, unit(2, 0), 1);
  REQUIRE(c.length() == 2);
  CHECK(c.vectors[0] == unit(2, 0));
  CHECK(c.vectors[1] == unit(2, 1));

  const auto a = diag({"2", "3"});
  const auto single = liftChain(a, 3, unit(2, 1), 0);
  CHECK(single.length() == 1);
  CHECK(single.vectors[0] == unit(2, 1));

  const auto block = jordanBlock(5, 3);
  const auto three = liftChain(block, 5, unit(3, 0), 2);
  REQUIRE(three.length() == 3);
  CHECK(three.vectors[1] == unit(3, 1));
  CHECK(three.vectors[2] == unit(3, 2));
  CHECK(satisfiesChainProperty(block, three));

  // e1 + e2 is an eigenvector of diag(1,1,2) but not in the range of (A-1)^1.
  CHECK_THROWS_AS(liftChain(diag({"1", "1", "2"}), 1, vec({"1", "1", "0"}), 1), NoPreimage);
  CHECK_THROWS_AS(liftChain(nil, 0, unit(2, 1), 1), std::invalid_argument);
}

TEST_CASE("counting check") {
  const auto nil = jordanBlock(0, 3);
  const auto f1 = rangeFiltration(nil, 0);
  CHECK(countingCheck(f1, kernelProfile(f1)) == 3);

  const auto a = jordanMatrix({{0, {2, 1}}, {5, {1}}});
  const auto f2 = rangeFiltration(a, 0);
  CHECK(countingCheck(f2, kernelProfile(f2)) == 3);

  const auto f3 = rangeFiltration(diag({"2", "3"}), 2);
  CHECK(countingCheck(f3, kernelProfile(f3)) == 1);

  KernelProfile wrong = kernelProfile(f2);
  wrong.n[1] = 2;
  CHECK_THROWS_AS(countingCheck(f2, wrong), InvariantViolation);
}

TEST_CASE("peel eigenvalue") {
  SUBCASE("diag(2,3) at 2") {
    const auto p = peelEigenvalue(diag({"2", "3"}), 2);
    REQUIRE(p.chains.size() == 1);
    CHECK(p.chains[0].vectors == std::vector<ExactVector>{unit(2, 0)});
    CHECK(p.restSpace.dim() == 1);
    CHECK(ExactVector(p.restSpace.basis().col(0)) == unit(2, 1));
    CHECK(p.restOperator == mat({{"3"}}));
  }
  SUBCASE("single 2-block") {
    const auto p = peelEigenvalue(jordanBlock(7, 2), 7);
    REQUIRE(p.chains.size() == 1);
    CHECK(p.chains[0].length() == 2);
    CHECK(p.restSpace.dim() == 0);
  }
  SUBCASE("zero 3x3") {
    const auto p = peelEigenvalue(ExactMatrix::Zero(3, 3), 0);
    CHECK(p.chains.size() == 3);
    for (const auto& c : p.chains) CHECK(c.length() == 1);
    CHECK(p.restSpace.dim() == 0);
  }
}

TEST_CASE("jordan decompose") {
  SUBCASE("diagonal reorders eigenvalues") {
    const auto d = jordanDecompose(diag({"3", "1", "2"}));
    CHECK(d.J == diag({"1", "2", "3"}));
    CHECK(d.structure == BlockStructure{{1, {1}}, {2, {1}}, {3, {1}}});
    CHECK(ExactMatrix(diag({"3", "1", "2"}) * d.P) == ExactMatrix(d.P * d.J));
  }
  SUBCASE("already canonical") {
    const auto a = mat({{"5", "1"}, {"0", "5"}});
    const auto d = jordanDecompose(a);
    CHECK(d.J == a);
    CHECK(d.P == ExactMatrix::Identity(2, 2));
  }
  SUBCASE("generated input") {
    const BlockStructure s{{2, {2, 1}}, {3, {1}}};
    const auto a = generateWithStructure(s, 42);
    // Frozen from the rank-difference oracle for this seed.
    REQUIRE(oracle::structure(a, {2, 3}) == s);
    CHECK(jordanDecompose(a).structure == s);
  }
  SUBCASE("empty matrix") {
    const auto d = jordanDecompose(ExactMatrix(0, 0));
    CHECK(d.P.size() == 0);
    CHECK(d.chains.empty());
    CHECK(d.structure.empty());
  }
  SUBCASE("complex eigenvalues") {
    const auto a = mat({{"0", "-1"}, {"1", "0"}});
    const auto d = jordanDecompose(a);
    CHECK(d.J == diag({"-1i", "1i"}));
  }
  SUBCASE("hint required") {
    const auto c = mat({{"0", "0", "2"}, {"1", "0", "0"}, {"0", "1", "0"}});
    CHECK_THROWS_AS(jordanDecompose(c), RequiresEigenvalueHint);
  }
}

TEST_CASE("canonical Jordan matrices are fixed points") {
  const std::vector<BlockStructure> cases = {
      {{0, {3, 1}}},
      {{2, {2}}, {3, {2, 1}}},
      {{q("-1i"), {1}}, {q("1/2"), {2, 2}}, {q("1i"), {3}}},
      {{-1, {1, 1, 1}}, {4, {4}}},
  };
  for (const auto& s : cases) {
    const auto j = jordanMatrix(canonicalStructure(s));
    const auto d = jordanDecompose(j);
    CHECK(d.J == j);
    CHECK(d.P == ExactMatrix::Identity(j.rows(), j.cols()));
  }
}

TEST_CASE("minimal polynomial") {
  CHECK(minimalPolynomial(diag({"2", "2"})) == Polynomial({-2, 1}));
  CHECK(minimalPolynomial(jordanBlock(2, 2)) == Polynomial({4, -4, 1}));
  CHECK(minimalPolynomial(jordanMatrix({{0, {2}}, {3, {1}}})) == Polynomial({0, 0, -3, 1}));
}

TEST_CASE("decomposition invariants on generated matrices") {
  Random rnd(2024);
  const std::vector<GaussianRational> pool = {0, 1, -2, q("1/2"), q("1i"), q("-1i"), q("1+1i")};
  for (int trial = 0; trial < 60; ++trial) {
    BlockStructure s;
    const Index distinct = rnd.integer(1, 3);
    std::vector<GaussianRational> chosen;
    while (static_cast<Index>(chosen.size()) < distinct) {
      const auto& v = pool[static_cast<std::size_t>(rnd.integer(0, static_cast<long>(pool.size()) - 1))];
      if (std::find(chosen.begin(), chosen.end(), v) == chosen.end()) chosen.push_back(v);
    }
    for (const auto& v : chosen) {
      BlockStructureEntry e{v, {}};
      const Index blocks = rnd.integer(1, 2);
      for (Index b = 0; b < blocks; ++b) e.sizes.push_back(rnd.integer(1, 3));
      s.push_back(e);
    }
    s = canonicalStructure(s);
    const auto a = generateWithStructure(s, static_cast<std::uint64_t>(trial));
    CAPTURE(trial);

    const auto d = jordanDecompose(a);
    CHECK(d.structure == s);
    CHECK(oracle::structure(a, eigenvaluesOf(s)) == s);
    CHECK(ExactMatrix(a * d.P) == ExactMatrix(d.P * d.J));
    CHECK(rank(d.P) == a.rows());
    for (const auto& c : d.chains) CHECK(satisfiesChainProperty(a, c));

    // Block-count formula: blocks of size >= k+1 number n_k.
    for (std::size_t e = 0; e < d.peels.size(); ++e) {
      const auto& profile = d.peels[e].profile;
      for (Index k = 0; k < static_cast<Index>(profile.n.size()); ++k) {
        const auto& sizes = d.structure[e].sizes;
        CHECK(std::count_if(sizes.begin(), sizes.end(), [&](Index sz) { return sz >= k + 1; }) == profile.at(k));
      }
    }

    // Conjugation invariance.
    auto [t, tInv] = randomUnimodular(a.rows(), static_cast<std::uint64_t>(trial) + 1000);
    CHECK(jordanDecompose(ExactMatrix(t * a * tInv)).structure == s);

    const Polynomial minimal = minimalPolynomial(d);
    CHECK(allZero(minimal(a)));
  }
}

TEST_CASE("trivial intersection of R_a with the generalized eigenspace") {
  const auto a = generateWithStructure({{1, {2, 1}}, {q("-1i"), {2}}}, 9);
  const auto f = rangeFiltration(a, 1);
  const auto p = peelEigenvalue(a, 1);
  ExactMatrix joined(a.rows(), f.stableRange().dim() + 3);
  Index col = 0;
  for (Index k = 0; k < f.stableRange().dim(); ++k) joined.col(col++) = f.stableRange().basis().col(k);
  for (const auto& c : p.chains)
    for (const auto& v : c.vectors) joined.col(col++) = v;
  CHECK(rank(joined) == a.rows());
}

TEST_CASE("small integer matrices match the rank oracle") {
  auto check = [](const ExactMatrix& a) {
    const auto report = searchEigenvalues(a);
    if (!report.complete) return false;
    std::vector<GaussianRational> values;
    for (const auto& e : report.eigenvalues) values.push_back(e.value);
    const auto d = jordanDecompose(a);
    CHECK(d.structure == oracle::structure(a, values));
    CHECK(ExactMatrix(a * d.P) == ExactMatrix(d.P * d.J));
    CHECK(rank(d.P) == a.rows());
    return true;
  };

  // Every matrix of size 1 and 2 with entries in -2..2.
  int tested = 0;
  for (int code = 0; code < 5 + 625; ++code) {
    const Index n = code < 5 ? 1 : 2;
    int rest = code < 5 ? code : code - 5;
    ExactMatrix a(n, n);
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j) {
        a(i, j) = GaussianRational(rest % 5 - 2);
        rest /= 5;
      }
    CAPTURE(code);
    tested += check(a);
  }
  CHECK(tested > 300);

  Random rnd(77);
  for (int trial = 0; trial < 1500; ++trial) check(rnd.integerMatrix(3, 3, -2, 2));
}
