#include <filesystem>
#include <fstream>

#include "asf/almost_symmetric.hpp"
#include "asf/errors.hpp"
#include "asf/fillings.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace asf;
using oracle::poly;

namespace {

AlmostSymFunction schurTail(int k, std::initializer_list<std::tuple<Composition, Partition, int>> terms) {
  AlmostSymFunction f(k, TailBasis::Schur);
  for (const auto& [h, t, c] : terms) f.add(h, t, Rational(c));
  return f;
}

SigmaPair pair(const char* text) { return SigmaPair::parse(text); }

}  // namespace

TEST_CASE("expansion container") {
  AlmostSymFunction f(1, TailBasis::Monomial);
  f.add(Composition{2, 0}, Partition{1}, Rational(3));
  f.add(Composition{2}, Partition{1}, Rational(-3));
  CHECK(f.isZero());
  CHECK_THROWS_AS(f.add(Composition{1, 1}, Partition{}, Rational(1)), DomainError);
  f.add(Composition{1}, Partition{2}, Rational(1));
  CHECK(f.homogeneousDegree() == 3);
  f.add(Composition{}, Partition{}, Rational(1));
  CHECK(f.homogeneousDegree() == -2);
  CHECK(AlmostSymFunction(0, TailBasis::Monomial).homogeneousDegree() == -1);
}

TEST_CASE("finite polynomials") {
  const RatPoly p = poly({{{2, 1, 0, 0}, 1}, {{2, 0, 1, 0}, 1}, {{2, 0, 0, 1}, 1}});
  const auto f = fromFinitePolynomial(p, 4, 1);
  CHECK(f.terms().size() == 1);
  CHECK(f.coefficient(Composition{2}, Partition{1}) == 1);
  CHECK(toFinitePolynomial(f, 4) == p);
  const auto s = fromFinitePolynomial(oracle::schur({2, 1}, 4), 4, 0);
  CHECK(toSchurBasis(s) == schurTail(0, {{Composition{}, Partition{2, 1}, 1}}));
  CHECK(toMonomialBasis(toSchurBasis(s)) == s);
  CHECK_THROWS_AS(fromFinitePolynomial(poly({{{1, 2}, 1}}), 3, 0), NotSymmetricError);
  CHECK_THROWS_AS(fromFinitePolynomial(p, 3, 1), DomainError);
  CHECK_THROWS_AS(fromFinitePolynomial(oracle::schur({2, 1}, 2), 2, 0), InsufficientVariablesError);
}

TEST_CASE("schur tail substitution") {
  const auto f = schurTail(1, {{Composition{2}, Partition{3, 1}, 1}, {Composition{3}, Partition{2, 1}, 1}});
  for (int n = 2; n <= 6; ++n) {
    RatPoly expected;
    const auto shift = [](const RatPoly& p) {
      std::vector<int> w{0};
      for (int i = 1; i <= 8; ++i) w.push_back(i + 1);
      return p.permuteVariables(w);
    };
    expected += poly({{{2}, 1}}) * shift(oracle::schur({3, 1}, n - 1));
    expected += poly({{{3}, 1}}) * shift(oracle::schur({2, 1}, n - 1));
    CHECK(toFinitePolynomial(f, n) == expected);
  }
}

TEST_CASE("key polynomials") {
  CHECK(keyPolynomial(Weight{3, 2, 1}) == poly({{{3, 2, 1}, 1}}));
  CHECK(keyPolynomial(Weight{0, 1, 2}) == oracle::schur({2, 1}, 3));
  CHECK(keyPolynomial(Weight{0, 0, 2, 0}) == oracle::schur({2}, 3));
  CHECK(keyPolynomial(Weight{}) == RatPoly::one());
  for (int len = 1; len <= 3; ++len)
    for (int s = 0; s <= 4; ++s)
      for (const auto& w : oracle::weights(len, s)) {
        RatPoly sum;
        for (const auto& f : enumerateKeyFillings(Weight(w))) sum += RatPoly::monomial(f.monomial(), Rational(1));
        CHECK(keyPolynomial(Weight(w)) == sum);
      }
}

TEST_CASE("key cache persists to disk") {
  const auto dir = std::filesystem::temp_directory_path() / "asf-key-cache-test";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  const std::string previous = keyCacheDirectory();
  setKeyCacheDirectory(dir.string());
  clearKeyCache();
  const RatPoly k = keyPolynomial(Weight{1, 0, 2});
  const auto file = dir / "key_1-0-2.txt";
  REQUIRE(std::filesystem::exists(file));
  clearKeyCache();
  CHECK(keyPolynomial(Weight{1, 0, 2}) == k);
  // A cached file is read back rather than recomputed.
  {
    std::ofstream out(file);
    out << "asf-key 1\n7 1:1\n";
  }
  clearKeyCache();
  CHECK(keyPolynomial(Weight{1, 0, 2}) == poly({{{1}, 7}}));
  // A corrupt file is ignored.
  {
    std::ofstream out(file);
    out << "garbage\n";
  }
  clearKeyCache();
  CHECK(keyPolynomial(Weight{1, 0, 2}) == k);
  setKeyCacheDirectory(previous);
  clearKeyCache();
  std::filesystem::remove_all(dir);
}

TEST_CASE("almost symmetric Schur functions: reference examples") {
  CHECK(monomialSchurCoefficients(pair("mu=2;lambda=3,1")) ==
        schurTail(1, {{Composition{3}, Partition{2, 1}, 1}, {Composition{2}, Partition{3, 1}, 1}}));
  CHECK(monomialSchurCoefficients(pair("mu=0,1;lambda=2")) ==
        schurTail(2, {{Composition{2, 1}, Partition{}, 1},
                      {Composition{2}, Partition{1}, 1},
                      {Composition{1, 2}, Partition{}, 1},
                      {Composition{0, 2}, Partition{1}, 1},
                      {Composition{1}, Partition{2}, 1},
                      {Composition{0, 1}, Partition{2}, 1},
                      {Composition{1, 1}, Partition{1}, 2}}));
  CHECK(monomialSchurCoefficients(pair("mu=2,1;lambda=1")) == schurTail(2, {{Composition{2, 1}, Partition{1}, 1}}));
  CHECK(monomialSchurCoefficients(pair("mu=1,2;lambda=1")) ==
        schurTail(2, {{Composition{2, 1}, Partition{1}, 1}, {Composition{1, 2}, Partition{1}, 1}}));
  CHECK(monomialSchurCoefficients(pair("mu=1;lambda=2,1")) ==
        schurTail(1, {{Composition{2}, Partition{1, 1}, 1}, {Composition{1}, Partition{2, 1}, 1}}));
}

TEST_CASE("monomial expansion of s_(2|3,1)") {
  const auto f = almostSchurByCombinatorics(pair("mu=2;lambda=3,1"));
  CHECK(f.basis() == TailBasis::Monomial);
  CHECK(f.terms().size() == 6);
  CHECK(f.coefficient(Composition{3}, Partition{2, 1}) == 1);
  CHECK(f.coefficient(Composition{3}, Partition{1, 1, 1}) == 2);
  CHECK(f.coefficient(Composition{2}, Partition{3, 1}) == 1);
  CHECK(f.coefficient(Composition{2}, Partition{2, 2}) == 1);
  CHECK(f.coefficient(Composition{2}, Partition{2, 1, 1}) == 2);
  CHECK(f.coefficient(Composition{2}, Partition{1, 1, 1, 1}) == 3);
  StabilizationCertificate cert;
  CHECK(almostSchurByRecursion(pair("mu=2;lambda=3,1"), &cert) == f);
  CHECK(cert.n == 1 + 2 + 2 + 4);
  CHECK(cert.witnessN == cert.n + 1);
}

TEST_CASE("boundary cases") {
  for (const auto& lambda : {Partition{}, Partition{1}, Partition{2, 1}, Partition{2, 2}, Partition{3, 1, 1}}) {
    const SigmaPair p(Composition{}, lambda);
    CHECK(monomialSchurCoefficients(p) == schurTail(0, {{Composition{}, lambda, 1}}));
    for (const auto& nu : partitionsOf(lambda.size())) {
      CHECK(kostkaAlmost(p, Composition{}, nu) == oracle::kostka(lambda.parts(), nu.parts()));
      CHECK(kostkaAlmost(p, Composition{1}, nu) == 0);
    }
  }
  for (const auto& mu : {Composition{1}, Composition{0, 2}, Composition{2, 0, 1}, Composition{1, 1, 1}}) {
    const SigmaPair p(mu, Partition{});
    const auto f = almostSchurByRecursion(p);
    CHECK(toFinitePolynomial(f, mu.length()) == keyPolynomial(Weight(mu)));
    CHECK(almostSchurByCombinatorics(p) == f);
  }
}

TEST_CASE("Kostka lookups") {
  const auto p = pair("mu=2;lambda=3,1");
  CHECK(kostkaAlmost(p, Composition{2}, Partition{1, 1, 1, 1}) == 3);
  CHECK(kostkaAlmost(p, Composition{3}, Partition{1, 1, 1}) == 2);
  CHECK(kostkaAlmost(p, Composition{2, 0}, Partition{1, 1, 1, 1}) == 3);
  CHECK(kostkaAlmost(p, Composition{2, 1}, Partition{1, 1, 1}) == 0);
  CHECK(kostkaAlmost(p, Composition{1}, Partition{1, 1, 1}) == 0);
}

TEST_CASE("stable truncation") {
  const SigmaPair p(Composition{0, 1}, Partition{});
  CHECK(stableMacdonaldTruncation(p, 2) == computeE(Composition{0, 1}));
  CHECK_THROWS_AS(stableMacdonaldTruncation(SigmaPair(Composition{1}, Partition{1}), 1), DomainError);
  CHECK_THROWS_AS(stableMacdonaldTruncation(SigmaPair(Composition{}, Partition{1}), 4, 2), ResourceGuardError);
  const SigmaPair q(Composition{1}, Partition{1});
  for (int n = 2; n <= 4; ++n) {
    const RatPoly u = upsilonPolynomial(stableMacdonaldTruncation(q, n));
    const RatPoly w = applyWkn(1, n, keyPolynomial(Weight(Composition{1, 1}.paddedTo(n))), WMethod::XiTower);
    CHECK(u == w);
    if (n >= 1 + 2) CHECK(fromFinitePolynomial(u, n, 1) == almostSchurByRecursion(q));
  }
}
