#include "asf/errors.hpp"
#include "asf/render.hpp"
#include "asf/verify.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace asf;
using oracle::poly;

TEST_CASE("text rendering") {
  CHECK(renderText(RatPoly()) == "0");
  CHECK(renderText(poly({{{3, 2, 1}, 1}})) == "x1^3*x2^2*x3");
  CHECK(renderText(poly({{{0, 0, 1}, -1}, {{2, 1}, 3}, {{}, 1}}) + RatPoly::constant(Rational(-1, 2))) ==
        "3*x1^2*x2 - x3 + 1/2");
  CHECK(renderText(computeE(Composition{0, 1})) == "x2 + ((1 - t)/(1 - q*t))*x1");
  AlmostSymFunction f(1, TailBasis::Schur);
  f.add(Composition{3}, Partition{2, 1}, Rational(1));
  f.add(Composition{2}, Partition{3, 1}, Rational(1));
  CHECK(renderText(f) == "x1^3*s[2,1](X1) + x1^2*s[3,1](X1)");
  AlmostSymFunction g(0, TailBasis::Monomial);
  CHECK(renderText(g) == "0");
  g.add(Composition{}, Partition{2}, Rational(-2));
  CHECK(renderText(g) == "-2*m[2](X0)");
  CHECK(renderText(Filling::standard(Composition{2, 0, 1}, {{1, 1}, {}, {3}})) == "1 . .\n1 . 3\n1 2 3\n");
}

TEST_CASE("json round trip") {
  const SigmaPair p = SigmaPair::parse("mu=2;lambda=3,1");
  for (const auto& f : {almostSchurByCombinatorics(p), monomialSchurCoefficients(p)}) {
    const auto j = toJson(f, &p);
    CHECK(j["pair"] == "mu=2;lambda=3,1");
    CHECK(expansionFromJson(nlohmann::json::parse(j.dump())) == f);
  }
  CHECK_THROWS_AS(expansionFromJson(nlohmann::json::parse(R"({"basis":"x","threshold":0,"terms":[]})")), ParseError);
  CHECK_THROWS_AS(expansionFromJson(nlohmann::json::parse(R"({"basis":"schur","terms":[]})")), ParseError);
  const auto j = toJson(poly({{{1, 1, 1}, 2}}));
  CHECK(j.dump() == R"([{"coeff":"2","exponents":{"1":1,"2":1,"3":1}}])");
  const auto fj = toJson(Filling::standard(Composition{1}, {{1}}));
  CHECK(fj["shape"] == nlohmann::json::array({1}));
  CHECK(fj["labels"].size() == 2);
}

TEST_CASE("suites") {
  CHECK(suiteNames().size() == 5);
  CHECK_THROWS_AS(runSuite("nope", {}), DomainError);
  VerifyOptions o;
  o.degree = 3;
  o.samples = 10;
  for (const auto& name : suiteNames()) {
    const auto results = runSuite(name, o);
    CHECK_FALSE(results.empty());
    for (const auto& r : results) {
      INFO(name << "/" << r.name << ": " << r.firstFailure);
      CHECK(r.passed());
      CHECK(r.checked > 0);
    }
  }
}

TEST_CASE("suites are deterministic and thread-count independent") {
  VerifyOptions a;
  a.degree = 3;
  a.samples = 15;
  a.seed = 99;
  VerifyOptions b = a;
  b.jobs = 3;
  const auto x = runSuite("relations", a);
  const auto y = runSuite("relations", b);
  REQUIRE(x.size() == y.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    CHECK(x[i].name == y[i].name);
    CHECK(x[i].checked == y[i].checked);
  }
}

TEST_CASE("parallelFor") {
  std::vector<int> hits(100, 0);
  parallelFor(hits.size(), 4, [&](std::size_t i) { hits[i] += 1; });
  for (int h : hits) CHECK(h == 1);
  CHECK_THROWS_AS(parallelFor(10, 2, [](std::size_t i) {
                    if (i == 7) throw DomainError("boom");
                  }),
                  DomainError);
}

TEST_CASE("rank and schur helpers") {
  CHECK(rationalRank({{1, 2}, {2, 4}}) == 1);
  CHECK(rationalRank({{1, 0}, {0, 1}, {1, 1}}) == 2);
  for (int n = 1; n <= 4; ++n)
    for (const auto& l : partitionsOf(4, n)) CHECK(schurPolynomial(l, n) == oracle::schur(l.parts(), n));
}
