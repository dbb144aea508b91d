#include "asf/operators.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "asf/errors.hpp"

namespace asf {

namespace {

void requireRange(int k, int n, int maxIndex) {
  if (k < 0 || k > n) throw DomainError("need 0 <= k <= n");
  if (maxIndex > n) throw DomainError("polynomial involves variables beyond x" + std::to_string(n));
}

void requireCost(int k, int n, int maxSymCost) {
  if (n - k > maxSymCost)
    throw ResourceGuardError("symmetrizing " + std::to_string(n - k) + " variables exceeds the limit of " +
                             std::to_string(maxSymCost) + " (see --max-sym-cost)");
}

}  // namespace

namespace {

template <class R>
SparsePolynomial<R> hecke(int i, const SparsePolynomial<R>& p, const R& oneMinusT) {
  const SparsePolynomial<R> s = p.applyTransposition(i);
  const SparsePolynomial<R> quotient = (p - s).divideByDifference(i, i + 1);
  return s + quotient.timesMonomial(ExponentVector::variable(i)).scaled(oneMinusT);
}

}  // namespace

QtPoly applyTi(int i, const QtPoly& p) {
  if (i < 1) throw DomainError("T_i needs i >= 1");
  return hecke(i, p, QtRational(1) - QtRational::t());
}

QtPoly applyEpsilonKn(int k, int n, const QtPoly& p, int maxSymCost) {
  requireRange(k, n, p.maxVariableIndex());
  requireCost(k, n, maxSymCost);
  const int m = n - k;
  const int top = m * (m - 1) / 2;

  // T_i is linear over Q(q,t): clear denominators once and run the sum over
  // polynomial coefficients.
  QtPolynomial common(1);
  for (const auto& term : p.terms()) {
    const QtPolynomial& d = term.coeff.denominator();
    QtPolynomial rest;
    if (!d.divideExact(gcd(common, d), rest)) throw InternalError("gcd does not divide");
    common *= rest;
  }
  const QtPolynomial oneMinusT = QtPolynomial(1) - QtPolynomial::t();
  const SparsePolynomial<QtPolynomial> cleared = p.mapCoefficients<QtPolynomial>([&](const QtRational& c) {
    QtPolynomial scale;
    if (!common.divideExact(c.denominator(), scale)) throw InternalError("common denominator");
    return c.numerator() * scale;
  });

  // Walk the Young subgroup by length; w is one-line notation on 1..n and
  // s_i w has length l(w)+1 exactly when i precedes i+1 in w.
  std::vector<int> identity(static_cast<std::size_t>(n));
  std::iota(identity.begin(), identity.end(), 1);
  std::map<std::vector<int>, SparsePolynomial<QtPolynomial>> layer{{identity, cleared}};
  SparsePolynomial<QtPolynomial> total;
  for (int length = 0; !layer.empty(); ++length) {
    SparsePolynomial<QtPolynomial> layerSum;
    std::map<std::vector<int>, SparsePolynomial<QtPolynomial>> next;
    for (const auto& [w, image] : layer) {
      layerSum += image;
      std::vector<int> pos(static_cast<std::size_t>(n) + 1);
      for (int j = 0; j < n; ++j) pos[static_cast<std::size_t>(w[static_cast<std::size_t>(j)])] = j;
      for (int i = k + 1; i < n; ++i) {
        if (pos[static_cast<std::size_t>(i)] > pos[static_cast<std::size_t>(i + 1)]) continue;
        std::vector<int> v = w;
        std::swap(v[static_cast<std::size_t>(pos[static_cast<std::size_t>(i)])],
                  v[static_cast<std::size_t>(pos[static_cast<std::size_t>(i + 1)])]);
        if (!next.count(v)) next.emplace(std::move(v), hecke(i, image, oneMinusT));
      }
    }
    total += layerSum.scaled(QtPolynomial::monomial(0, static_cast<std::uint32_t>(top - length)));
    layer = std::move(next);
  }
  const QtPolynomial den = common * tFactorial(m);
  return total.mapCoefficients<QtRational>([&](const QtPolynomial& c) { return QtRational(c, den); });
}

template <class R>
SparsePolynomial<R> applyXi(int i, const SparsePolynomial<R>& p) {
  if (i < 1) throw DomainError("xi_i needs i >= 1");
  std::vector<typename SparsePolynomial<R>::Term> out;
  for (const auto& term : p.terms()) {
    const int a = term.exponents[i];
    const int b = term.exponents[i + 1];
    ExponentVector e = term.exponents;
    if (a >= b) {
      for (int j = 0; j <= a - b; ++j) {
        e.set(i, a - j);
        e.set(i + 1, b + j);
        out.push_back({e, term.coeff});
      }
    } else if (a + 1 < b) {
      const R neg = -term.coeff;
      for (int j = 1; j <= b - a - 1; ++j) {
        e.set(i, a + j);
        e.set(i + 1, b - j);
        out.push_back({e, neg});
      }
    }
  }
  return SparsePolynomial<R>::fromTerms(std::move(out));
}

template <class R>
SparsePolynomial<R> applyXiByDivision(int i, const SparsePolynomial<R>& p) {
  const SparsePolynomial<R> num =
      p.timesMonomial(ExponentVector::variable(i)) - p.applyTransposition(i).timesMonomial(ExponentVector::variable(i + 1));
  return num.divideByDifference(i, i + 1);
}

template <class R>
SparsePolynomial<R> applyXiChain(int from, int to, const SparsePolynomial<R>& p) {
  SparsePolynomial<R> g = p;
  for (int i = from; i <= to; ++i) g = applyXi(i, g);
  return g;
}

namespace {

template <class R>
SparsePolynomial<R> weylBySum(int k, int n, const SparsePolynomial<R>& p) {
  std::vector<int> delta(static_cast<std::size_t>(n), 0);
  for (int i = k + 1; i <= n; ++i) delta[static_cast<std::size_t>(i - 1)] = n - i;
  const SparsePolynomial<R> base = p.timesMonomial(ExponentVector::fromDense(delta));

  std::vector<int> tail(static_cast<std::size_t>(n - k));
  std::iota(tail.begin(), tail.end(), k + 1);
  std::vector<typename SparsePolynomial<R>::Term> acc;
  do {
    int inversions = 0;
    for (std::size_t a = 0; a < tail.size(); ++a)
      for (std::size_t b = a + 1; b < tail.size(); ++b)
        if (tail[a] > tail[b]) ++inversions;
    std::vector<int> w(static_cast<std::size_t>(n) + 1);
    std::iota(w.begin(), w.end(), 0);
    for (std::size_t a = 0; a < tail.size(); ++a) w[static_cast<std::size_t>(k + 1) + a] = tail[a];
    SparsePolynomial<R> image = base.permuteVariables(w);
    if (inversions % 2) image = -image;
    for (const auto& t : image.terms()) acc.push_back(t);
  } while (std::next_permutation(tail.begin(), tail.end()));

  SparsePolynomial<R> result = SparsePolynomial<R>::fromTerms(std::move(acc));
  for (int i = k + 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) result = result.divideByDifference(i, j);
  return result;
}

}  // namespace

template <class R>
SparsePolynomial<R> applyWkn(int k, int n, const SparsePolynomial<R>& p, WMethod method, int maxSymCost) {
  requireRange(k, n, p.maxVariableIndex());
  if (method == WMethod::SumFormula) {
    requireCost(k, n, maxSymCost);
    return weylBySum(k, n, p);
  }
  SparsePolynomial<R> g = p;
  for (int m = n - 1; m >= k; --m) g = applyXiChain(m + 1, n - 1, g);
  return g;
}

template RatPoly applyXi(int, const RatPoly&);
template QtPoly applyXi(int, const QtPoly&);
template RatPoly applyXiByDivision(int, const RatPoly&);
template QtPoly applyXiByDivision(int, const QtPoly&);
template RatPoly applyXiChain(int, int, const RatPoly&);
template QtPoly applyXiChain(int, int, const QtPoly&);
template RatPoly applyWkn(int, int, const RatPoly&, WMethod, int);
template QtPoly applyWkn(int, int, const QtPoly&, WMethod, int);

RatPoly upsilonPolynomial(const QtPoly& p) {
  std::vector<RatPoly::Term> out;
  for (const auto& t : p.terms()) {
    try {
      out.push_back({t.exponents, specializeZero(t.coeff)});
    } catch (const PoleError& e) {
      throw PoleError(e.variable(), std::string(e.what()) + " (coefficient of " + toText(t.exponents) + ")");
    }
  }
  return RatPoly::fromTerms(std::move(out));
}

}  // namespace asf
