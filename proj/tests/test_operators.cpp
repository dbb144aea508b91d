#include <random>

#include "asf/almost_symmetric.hpp"
#include "asf/errors.hpp"
#include "asf/fillings.hpp"
#include "asf/operators.hpp"
#include "asf/verify.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace asf;
using oracle::poly;

namespace {

QtPoly lift(const RatPoly& p) {
  return p.mapCoefficients<QtRational>([](const Rational& c) { return QtRational(c); });
}

QtPoly x(int i) { return QtPoly::variable(i); }

}  // namespace

TEST_CASE("Hecke operators") {
  CHECK(applyTi(1, QtPoly::one()) == QtPoly::one());
  // T_1 x_1 = x_2 + (1-t) x_1 and T_1 x_2 = t x_1.
  const QtRational t = QtRational::t(), one(1);
  CHECK(applyTi(1, x(1)) == x(2) + x(1).scaled(one - t));
  CHECK(applyTi(1, x(2)) == x(1).scaled(t));
  std::mt19937_64 rng(29);
  for (int i = 0; i < 30; ++i) {
    const QtPoly p = randomQtPoly(rng, 3, 3, 4);
    for (int k = 1; k <= 2; ++k) {
      const QtPoly tp = applyTi(k, p);
      CHECK(applyTi(k, tp) - tp.scaled(one - t) - p.scaled(t) == QtPoly());
    }
    CHECK(applyTi(1, applyTi(2, applyTi(1, p))) == applyTi(2, applyTi(1, applyTi(2, p))));
  }
}

TEST_CASE("Hecke symmetrizer") {
  std::mt19937_64 rng(31);
  const QtPoly p = randomQtPoly(rng, 3, 2, 3);
  CHECK(applyEpsilonKn(3, 3, p) == p);
  // n = 2 by hand: (t + T_1)/(1 + t) applied to x_1.
  const QtRational t = QtRational::t(), one(1);
  const QtPoly byHand = (x(1).scaled(t) + applyTi(1, x(1))).scaled(one / (one + t));
  CHECK(applyEpsilonKn(0, 2, x(1)) == byHand);
  CHECK(byHand == (x(1) + x(2)).scaled(one / (one + t)));
  const QtPoly e = applyEpsilonKn(1, 3, p);
  CHECK(applyEpsilonKn(1, 3, e) == e);
  CHECK(e.isSymmetricInRange(2, 3));
  CHECK_THROWS_AS(applyEpsilonKn(2, 1, p), DomainError);
  CHECK_THROWS_AS(applyEpsilonKn(0, 5, p, 3), ResourceGuardError);
}

TEST_CASE("isobaric divided differences") {
  CHECK(applyXi(1, poly({{{3, 2, 1}, 1}})) == poly({{{3, 2, 1}, 1}, {{2, 3, 1}, 1}}));
  std::mt19937_64 rng(37);
  for (int i = 0; i < 40; ++i) {
    const RatPoly p = randomRatPoly(rng, 4, 4, 5);
    for (int k = 1; k <= 3; ++k) {
      const RatPoly xp = applyXi(k, p);
      CHECK(applyXi(k, xp) == xp);
      CHECK(xp == applyXiByDivision(k, p));
      CHECK(xp.isSymmetricInRange(k, k + 1));
    }
    CHECK(applyXi(1, applyXi(2, applyXi(1, p))) == applyXi(2, applyXi(1, applyXi(2, p))));
    CHECK(applyXi(1, applyXi(3, p)) == applyXi(3, applyXi(1, p)));
    CHECK(applyXiChain(1, 3, p) == applyXi(3, applyXi(2, applyXi(1, p))));
  }
  CHECK(applyXiChain(3, 2, poly({{{1}, 1}})) == poly({{{1}, 1}}));
}

TEST_CASE("Weyl symmetrizer") {
  CHECK(applyWkn(0, 3, poly({{{2, 1, 0}, 1}}), WMethod::SumFormula) == oracle::schur({2, 1}, 3));
  CHECK(applyWkn(0, 3, poly({{{2, 1, 0}, 1}}), WMethod::XiTower) == oracle::schur({2, 1}, 3));
  for (int n = 1; n <= 4; ++n)
    for (int d = 0; d <= 4; ++d)
      for (const auto& lambda : partitionsOf(d, n)) {
        const RatPoly mono = RatPoly::monomial(ExponentVector::fromDense(lambda.parts()), Rational(1));
        CHECK(applyWkn(0, n, mono, WMethod::SumFormula) == oracle::schur(lambda.parts(), n));
      }
  // x1^3 x2^2 s1[x3] + x1^2 x2^3 s1[x3] under W_1 in three variables.
  const RatPoly in = poly({{{3, 2, 1}, 1}, {{2, 3, 1}, 1}});
  const RatPoly out = applyWkn(1, 3, in, WMethod::SumFormula);
  CHECK(out == applyWkn(1, 3, in, WMethod::XiTower));
  CHECK(out.isSymmetricInRange(2, 3));
  AlmostSymFunction chain(1, TailBasis::Schur);
  chain.add(Composition{3}, Partition{2, 1}, Rational(1));
  chain.add(Composition{2}, Partition{3, 1}, Rational(1));
  CHECK(out == toFinitePolynomial(chain, 3));
  std::mt19937_64 rng(41);
  for (int i = 0; i < 20; ++i) {
    const RatPoly p = randomRatPoly(rng, 4, 3, 4);
    for (int k = 0; k <= 3; ++k) {
      const RatPoly w = applyWkn(k, 4, p, WMethod::SumFormula);
      CHECK(w == applyWkn(k, 4, p, WMethod::XiTower));
      CHECK(applyWkn(k, 4, w, WMethod::SumFormula) == w);
      CHECK(w.isSymmetricInRange(k + 1, 4));
    }
  }
  CHECK_THROWS_AS(applyWkn(0, 4, in, WMethod::SumFormula, 2), ResourceGuardError);
}

TEST_CASE("specialization") {
  CHECK(upsilonPolynomial(computeE(Composition{0, 1})) == poly({{{1, 0}, 1}, {{0, 1}, 1}}));
  CHECK(upsilonPolynomial(lift(poly({{{1, 2}, 3}}))) == poly({{{1, 2}, 3}}));
  const QtPoly pole = QtPoly::monomial(ExponentVector::variable(2), QtRational::q() / QtRational::t());
  CHECK_THROWS_AS(upsilonPolynomial(pole), PoleError);
  std::mt19937_64 rng(43);
  for (int i = 0; i < 40; ++i) {
    const QtPoly p = randomQtPoly(rng, 3, 3, 4);
    const RatPoly u = upsilonPolynomial(p);
    for (int k = 1; k <= 2; ++k) CHECK(upsilonPolynomial(applyTi(k, p)) == applyXi(k, u));
    CHECK(upsilonPolynomial(applyEpsilonKn(1, 3, p)) == applyWkn(1, 3, u, WMethod::XiTower));
  }
}
