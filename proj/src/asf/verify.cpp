#include "asf/verify.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <set>
#include <thread>

#include "asf/errors.hpp"
#include "asf/fillings.hpp"
#include "asf/render.hpp"

namespace asf {

// ----------------------------------------------------------------- threads

void parallelFor(std::size_t count, int jobs, const std::function<void(std::size_t)>& body) {
  const std::size_t workers = std::min<std::size_t>(count, static_cast<std::size_t>(std::max(jobs, 1)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex errorMutex;
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i; (i = next.fetch_add(1)) < count;) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard lock(errorMutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

// -------------------------------------------------------------- generators

namespace {

int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

ExponentVector randomExponents(std::mt19937_64& rng, int variables, int maxDegree) {
  const int degree = uniform(rng, 0, maxDegree);
  std::vector<int> e(static_cast<std::size_t>(variables), 0);
  for (int d = 0; d < degree; ++d) ++e[static_cast<std::size_t>(uniform(rng, 0, variables - 1))];
  return ExponentVector::fromDense(e);
}

}  // namespace

RatPoly randomRatPoly(std::mt19937_64& rng, int variables, int maxDegree, int maxTerms) {
  std::vector<RatPoly::Term> terms;
  const int count = uniform(rng, 1, maxTerms);
  for (int i = 0; i < count; ++i) {
    int c = uniform(rng, -3, 3);
    if (c == 0) c = 1;
    terms.push_back({randomExponents(rng, variables, maxDegree), Rational(c)});
  }
  return RatPoly::fromTerms(std::move(terms));
}

QtRational randomPoleFreeScalar(std::mt19937_64& rng) {
  int c = uniform(rng, -3, 3);
  if (c == 0) c = 1;
  QtRational s(QtPolynomial::monomial(static_cast<std::uint32_t>(uniform(rng, 0, 1)),
                                      static_cast<std::uint32_t>(uniform(rng, 0, 1)), Rational(c)));
  if (uniform(rng, 0, 2) == 0) {
    const int a = uniform(rng, 0, 2);
    const int b = a == 0 ? uniform(rng, 1, 2) : uniform(rng, 0, 2);
    const QtPolynomial den =
        QtPolynomial(1) - QtPolynomial::monomial(static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b));
    s = s * QtRational(QtPolynomial(1), den);
  }
  return s;
}

QtPoly randomQtPoly(std::mt19937_64& rng, int variables, int maxDegree, int maxTerms) {
  std::vector<QtPoly::Term> terms;
  const int count = uniform(rng, 1, maxTerms);
  for (int i = 0; i < count; ++i) terms.push_back({randomExponents(rng, variables, maxDegree), randomPoleFreeScalar(rng)});
  return QtPoly::fromTerms(std::move(terms));
}

RatPoly schurPolynomial(const Partition& lambda, int n) {
  std::vector<RatPoly::Term> terms;
  if (lambda.length() > n) return {};
  for (const Weight& w : weightsOf(n, lambda.size())) {
    const std::int64_t k = kostka(lambda, Composition(w.entries));
    if (k != 0) terms.push_back({ExponentVector::fromDense(w.entries), Rational(static_cast<long>(k))});
  }
  return RatPoly::fromTerms(std::move(terms));
}

int rationalRank(std::vector<std::vector<Rational>> rows) {
  int rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (std::size_t c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
    std::size_t pivot = static_cast<std::size_t>(rank);
    while (pivot < rows.size() && sgn(rows[pivot][c]) == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[static_cast<std::size_t>(rank)]);
    const auto& p = rows[static_cast<std::size_t>(rank)];
    for (std::size_t r = static_cast<std::size_t>(rank) + 1; r < rows.size(); ++r) {
      if (sgn(rows[r][c]) == 0) continue;
      const Rational f = rows[r][c] / p[c];
      for (std::size_t j = c; j < cols; ++j) rows[r][j] -= f * p[j];
    }
    ++rank;
  }
  return rank;
}

// ------------------------------------------------------------------ checks

namespace {

// A check returns an empty string on success, otherwise a description.
struct Check {
  std::string name;
  std::size_t count;
  std::function<std::string(std::size_t, std::mt19937_64&)> run;
};

PropertyResult runCheck(const Check& check, const VerifyOptions& options) {
  PropertyResult result{check.name, static_cast<long>(check.count), 0, {}};
  std::vector<std::string> failures(check.count);
  const std::uint64_t salt = std::hash<std::string>{}(check.name);
  parallelFor(check.count, options.jobs, [&](std::size_t i) {
    std::seed_seq seq{static_cast<std::uint32_t>(options.seed), static_cast<std::uint32_t>(options.seed >> 32),
                      static_cast<std::uint32_t>(salt), static_cast<std::uint32_t>(i)};
    std::mt19937_64 rng(seq);
    try {
      failures[i] = check.run(i, rng);
    } catch (const std::exception& e) {
      failures[i] = std::string("exception: ") + e.what();
    }
  });
  for (const auto& f : failures) {
    if (f.empty()) continue;
    if (result.failed++ == 0) result.firstFailure = f;
  }
  return result;
}

std::string mismatch(const std::string& what, const std::string& lhs, const std::string& rhs) {
  return what + ": " + lhs + " != " + rhs;
}

template <class R>
std::string expectEqual(const SparsePolynomial<R>& a, const SparsePolynomial<R>& b, const std::string& what) {
  return a == b ? std::string() : mismatch(what, renderText(a), renderText(b));
}

std::string expectEqual(const AlmostSymFunction& a, const AlmostSymFunction& b, const std::string& what) {
  return a == b ? std::string() : mismatch(what, renderText(a), renderText(b));
}

// --------------------------------------------------------------- relations

std::vector<Check> relationChecks(const VerifyOptions& o) {
  const std::size_t n = static_cast<std::size_t>(o.samples);
  const int deg = o.degree;
  const QtRational t = QtRational::t();
  std::vector<Check> checks;

  checks.push_back({"hecke-quadratic", n, [=](std::size_t, std::mt19937_64& rng) {
                      const int vars = uniform(rng, 2, 4);
                      const int i = uniform(rng, 1, vars - 1);
                      const QtPoly p = randomQtPoly(rng, vars, deg, 3);
                      const QtPoly u = applyTi(i, p) + p.scaled(t);
                      const QtPoly v = applyTi(i, u) - u;
                      return v.isZero() ? std::string() : "(T_i - 1)(T_i + t) p = " + renderText(v);
                    }});
  checks.push_back({"hecke-braid", n, [=](std::size_t, std::mt19937_64& rng) {
                      const int vars = uniform(rng, 3, 4);
                      const int i = uniform(rng, 1, vars - 2);
                      const QtPoly p = randomQtPoly(rng, vars, deg, 3);
                      return expectEqual(applyTi(i, applyTi(i + 1, applyTi(i, p))),
                                         applyTi(i + 1, applyTi(i, applyTi(i + 1, p))), "braid");
                    }});
  checks.push_back({"hecke-commute", n, [=](std::size_t, std::mt19937_64& rng) {
                      const QtPoly p = randomQtPoly(rng, 4, deg, 3);
                      return expectEqual(applyTi(1, applyTi(3, p)), applyTi(3, applyTi(1, p)), "T1 T3");
                    }});
  checks.push_back({"xi-idempotent", n, [=](std::size_t, std::mt19937_64& rng) {
                      const int vars = uniform(rng, 2, 4);
                      const int i = uniform(rng, 1, vars - 1);
                      const RatPoly p = randomRatPoly(rng, vars, deg, 5);
                      const RatPoly once = applyXi(i, p);
                      return expectEqual(applyXi(i, once), once, "xi^2");
                    }});
  checks.push_back({"xi-braid", n, [=](std::size_t, std::mt19937_64& rng) {
                      const int vars = uniform(rng, 3, 4);
                      const int i = uniform(rng, 1, vars - 2);
                      const RatPoly p = randomRatPoly(rng, vars, deg, 5);
                      return expectEqual(applyXi(i, applyXi(i + 1, applyXi(i, p))),
                                         applyXi(i + 1, applyXi(i, applyXi(i + 1, p))), "xi braid");
                    }});
  checks.push_back({"xi-commute", n, [=](std::size_t, std::mt19937_64& rng) {
                      const RatPoly p = randomRatPoly(rng, 4, deg, 5);
                      return expectEqual(applyXi(1, applyXi(3, p)), applyXi(3, applyXi(1, p)), "xi1 xi3");
                    }});
  checks.push_back({"xi-division", n, [=](std::size_t, std::mt19937_64& rng) {
                      const int vars = uniform(rng, 2, 4);
                      const int i = uniform(rng, 1, vars - 1);
                      const RatPoly p = randomRatPoly(rng, vars, deg, 5);
                      return expectEqual(applyXi(i, p), applyXiByDivision(i, p), "direct vs division");
                    }});
  checks.push_back({"epsilon-idempotent", n, [=](std::size_t, std::mt19937_64& rng) {
                      const int vars = uniform(rng, 2, 4);
                      const int k = uniform(rng, 0, vars - 2);
                      const QtPoly p = randomQtPoly(rng, vars, deg, 2);
                      const QtPoly e = applyEpsilonKn(k, vars, p, o.maxSymCost);
                      return expectEqual(applyEpsilonKn(k, vars, e, o.maxSymCost), e, "eps^2");
                    }});
  checks.push_back({"epsilon-absorption", n, [=](std::size_t, std::mt19937_64& rng) {
                      const int vars = uniform(rng, 2, 4);
                      const int k = uniform(rng, 0, vars - 2);
                      const int i = uniform(rng, k + 1, vars - 1);
                      const QtPoly p = randomQtPoly(rng, vars, deg, 2);
                      const QtPoly e = applyEpsilonKn(k, vars, p, o.maxSymCost);
                      std::string r = expectEqual(applyTi(i, e), e, "T_i eps");
                      if (r.empty()) r = expectEqual(applyEpsilonKn(k, vars, applyTi(i, p), o.maxSymCost), e, "eps T_i");
                      return r;
                    }});
  checks.push_back({"weyl-idempotent", n, [=](std::size_t, std::mt19937_64& rng) {
                      const int vars = uniform(rng, 2, 4);
                      const int k = uniform(rng, 0, vars - 2);
                      const RatPoly p = randomRatPoly(rng, vars, deg, 5);
                      const RatPoly w = applyWkn(k, vars, p, WMethod::SumFormula, o.maxSymCost);
                      return expectEqual(applyWkn(k, vars, w, WMethod::SumFormula, o.maxSymCost), w, "W^2");
                    }});
  checks.push_back({"weyl-sum-vs-tower", n, [=](std::size_t, std::mt19937_64& rng) {
                      const int vars = uniform(rng, 2, 4);
                      const int k = uniform(rng, 0, vars - 1);
                      const RatPoly p = randomRatPoly(rng, vars, deg, 5);
                      return expectEqual(applyWkn(k, vars, p, WMethod::SumFormula, o.maxSymCost),
                                         applyWkn(k, vars, p, WMethod::XiTower), "SumFormula vs XiTower");
                    }});
  checks.push_back({"weyl-invariance", n, [=](std::size_t, std::mt19937_64& rng) {
                      const int vars = uniform(rng, 2, 4);
                      const int k = uniform(rng, 0, vars - 2);
                      const int i = uniform(rng, k + 1, vars - 1);
                      const RatPoly p = randomRatPoly(rng, vars, deg, 5);
                      const RatPoly w = applyWkn(k, vars, p, WMethod::SumFormula, o.maxSymCost);
                      return expectEqual(w.applyTransposition(i), w, "s_i W");
                    }});
  checks.push_back({"upsilon-hecke", n, [=](std::size_t, std::mt19937_64& rng) {
                      const int vars = uniform(rng, 2, 4);
                      const int i = uniform(rng, 1, vars - 1);
                      const QtPoly p = randomQtPoly(rng, vars, deg, 3);
                      return expectEqual(upsilonPolynomial(applyTi(i, p)), applyXi(i, upsilonPolynomial(p)),
                                         "Upsilon T_i vs xi_i Upsilon");
                    }});
  checks.push_back({"upsilon-epsilon", n, [=](std::size_t, std::mt19937_64& rng) {
                      const int vars = uniform(rng, 2, 4);
                      const int k = uniform(rng, 0, vars - 2);
                      const QtPoly p = randomQtPoly(rng, vars, deg, 2);
                      return expectEqual(upsilonPolynomial(applyEpsilonKn(k, vars, p, o.maxSymCost)),
                                         applyWkn(k, vars, upsilonPolynomial(p), WMethod::XiTower),
                                         "Upsilon eps vs W Upsilon");
                    }});
  return checks;
}

// ----------------------------------------------------------- specialization

std::vector<Weight> weightsUpTo(int maxLength, int maxSum) {
  std::vector<Weight> out;
  for (int len = 1; len <= maxLength; ++len)
    for (int s = 0; s <= maxSum; ++s)
      for (Weight& w : weightsOf(len, s)) out.push_back(std::move(w));
  return out;
}

std::vector<SigmaPair> pairsUpTo(int maxDegree, int maxMuLength) {
  std::vector<SigmaPair> out;
  for (int d = 0; d <= maxDegree; ++d)
    for (SigmaPair& p : enumerateSigmaPairs(d, maxMuLength)) out.push_back(std::move(p));
  return out;
}

AlmostSymFunction keyExpansion(const SigmaPair& pair, int zeros) {
  std::vector<int> alpha = pair.mu().parts();
  alpha.resize(alpha.size() + static_cast<std::size_t>(zeros), 0);
  const Composition rev = reverseComposition(pair.lambda().asComposition());
  alpha.insert(alpha.end(), rev.parts().begin(), rev.parts().end());
  return fromFinitePolynomial(keyPolynomial(Weight(alpha)), static_cast<int>(alpha.size()), pair.mu().length());
}

std::vector<Check> specializationChecks(const VerifyOptions& o) {
  auto weights = std::make_shared<std::vector<Weight>>(weightsUpTo(4, o.degree));
  std::vector<Check> checks;
  checks.push_back({"upsilon-e-equals-key", weights->size(), [weights](std::size_t i, std::mt19937_64&) {
                      const Weight& a = (*weights)[i];
                      return expectEqual(upsilonPolynomial(computeE(Composition(a.entries))), keyPolynomial(a),
                                         "Upsilon(E) vs key for " + Composition(a.entries).toString());
                    }});
  checks.push_back({"key-equals-fillings", weights->size(), [weights](std::size_t i, std::mt19937_64&) {
                      const Weight& a = (*weights)[i];
                      std::vector<RatPoly::Term> terms;
                      forEachKeyFilling(a, [&](const Filling& f) { terms.push_back({f.monomial(), Rational(1)}); });
                      return expectEqual(RatPoly::fromTerms(std::move(terms)), keyPolynomial(a),
                                         "sum over L(alpha) vs key for " + Composition(a.entries).toString());
                    }});
  // Truncations of the stable-limit function are checked only in small degree
  // because eps costs (n-k)! Hecke words.
  auto pairs = std::make_shared<std::vector<SigmaPair>>(pairsUpTo(std::min(o.degree, 3), 2));
  const int cost = o.maxSymCost;
  checks.push_back({"truncation-upsilon", pairs->size(), [pairs, cost](std::size_t i, std::mt19937_64&) {
                      const SigmaPair& pair = (*pairs)[i];
                      const int k = pair.mu().length();
                      const int r = k + pair.lambda().length();
                      for (int n = std::max(r, 1); n <= std::max(r, 1) + 1; ++n) {
                        if (n - k > cost) break;
                        Composition base = concat(pair.mu(), pair.lambda().asComposition()).paddedTo(n);
                        const RatPoly lhs = upsilonPolynomial(stableMacdonaldTruncation(pair, n, cost));
                        const RatPoly rhs = applyWkn(k, n, keyPolynomial(Weight(base)), WMethod::XiTower);
                        if (!(lhs == rhs))
                          return mismatch("Upsilon(eps E) vs W(key) for " + pair.serialize() + " at n=" + std::to_string(n),
                                          renderText(lhs), renderText(rhs));
                      }
                      return std::string();
                    }});
  return checks;
}

// ----------------------------------------------------------------- stability

std::vector<Check> stabilityChecks(const VerifyOptions& o) {
  auto pairs = std::make_shared<std::vector<SigmaPair>>(pairsUpTo(o.degree, 3));
  std::vector<Check> checks;
  checks.push_back({"two-algorithm-agreement", pairs->size(), [pairs](std::size_t i, std::mt19937_64&) {
                      const SigmaPair& pair = (*pairs)[i];
                      StabilizationCertificate cert;
                      return expectEqual(almostSchurByRecursion(pair, &cert), almostSchurByCombinatorics(pair),
                                         "recursion vs labellings for " + pair.serialize());
                    }});
  checks.push_back({"key-stabilization", pairs->size(), [pairs](std::size_t i, std::mt19937_64&) {
                      const SigmaPair& pair = (*pairs)[i];
                      const int m = pair.degree();
                      return expectEqual(keyExpansion(pair, m), keyExpansion(pair, m + 1),
                                         "key expansions at m and m+1 for " + pair.serialize());
                    }});
  checks.push_back({"homogeneity", pairs->size(), [pairs](std::size_t i, std::mt19937_64&) {
                      const SigmaPair& pair = (*pairs)[i];
                      const int d = almostSchurByCombinatorics(pair).homogeneousDegree();
                      return d == pair.degree() ? std::string()
                                                : "degree " + std::to_string(d) + " for " + pair.serialize();
                    }});
  const int rankDegree = std::min(o.degree, 5);
  checks.push_back({"basis-rank", static_cast<std::size_t>(rankDegree) + 1, [](std::size_t d, std::mt19937_64&) {
                      const auto pairs = enumerateSigmaPairs(static_cast<int>(d), 2);
                      // Thresholds differ between pairs, so compare the images in 2 + d
                      // variables, where degree-d elements of P(2) are still separated.
                      std::vector<RatPoly> polys;
                      for (const auto& p : pairs) polys.push_back(toFinitePolynomial(almostSchurByCombinatorics(p), 2 + static_cast<int>(d)));
                      std::map<ExponentVector, std::size_t> index;
                      for (const auto& p : polys)
                        for (const auto& t : p.terms()) index.emplace(t.exponents, index.size());
                      std::vector<std::vector<Rational>> rows;
                      for (const auto& p : polys) {
                        std::vector<Rational> row(index.size());
                        for (const auto& t : p.terms()) row[index.at(t.exponents)] = t.coeff;
                        rows.push_back(std::move(row));
                      }
                      const int rank = rationalRank(rows);
                      return rank == static_cast<int>(pairs.size())
                                 ? std::string()
                                 : "rank " + std::to_string(rank) + " of " + std::to_string(pairs.size()) +
                                       " in degree " + std::to_string(d);
                    }});
  auto small = std::make_shared<std::vector<SigmaPair>>(pairsUpTo(std::min(o.degree, 3), 2));
  const int cost = o.maxSymCost;
  checks.push_back({"truncation-stabilizes", small->size(), [small, cost](std::size_t i, std::mt19937_64&) {
                      const SigmaPair& pair = (*small)[i];
                      const int k = pair.mu().length();
                      const int n0 = std::max(k + pair.lambda().length(), k + pair.degree());
                      const AlmostSymFunction target = almostSchurByCombinatorics(pair);
                      for (int n = n0; n <= n0 + 1 && n - k <= cost; ++n) {
                        const RatPoly u = upsilonPolynomial(stableMacdonaldTruncation(pair, n, cost));
                        std::string r = expectEqual(fromFinitePolynomial(u, n, k), target,
                                                    "Upsilon truncation at n=" + std::to_string(n) + " for " +
                                                        pair.serialize());
                        if (!r.empty()) return r;
                      }
                      return std::string();
                    }});
  return checks;
}

// ---------------------------------------------------------------- positivity

std::string nonNegativeIntegers(const AlmostSymFunction& f, const std::string& what) {
  for (const auto& [key, c] : f.terms())
    if (c.get_den() != 1 || sgn(c) < 0)
      return what + " coefficient " + c.get_str() + " at " + key.head.toString() + "|" + key.tail.toString();
  return {};
}

std::vector<Check> positivityChecks(const VerifyOptions& o) {
  auto pairs = std::make_shared<std::vector<SigmaPair>>(pairsUpTo(o.degree, 3));
  std::vector<Check> checks;
  checks.push_back({"kostka-nonnegative", pairs->size(), [pairs](std::size_t i, std::mt19937_64&) {
                      const SigmaPair& pair = (*pairs)[i];
                      const AlmostSymFunction f = almostSchurByRecursion(pair);
                      std::string r = nonNegativeIntegers(f, "K");
                      if (!r.empty()) return r + " for " + pair.serialize();
                      for (const auto& [key, c] : f.terms()) {
                        const std::int64_t k = kostkaAlmost(pair, key.head, key.tail);
                        if (c != Rational(static_cast<long>(k)))
                          return "K" + key.head.toString() + "|" + key.tail.toString() + " = " + c.get_str() +
                                 " but " + std::to_string(k) + " labellings for " + pair.serialize();
                      }
                      return std::string();
                    }});
  checks.push_back({"m-nonnegative", pairs->size(), [pairs](std::size_t i, std::mt19937_64&) {
                      const SigmaPair& pair = (*pairs)[i];
                      const std::string r = nonNegativeIntegers(toSchurBasis(almostSchurByRecursion(pair)), "M");
                      return r.empty() ? r : r + " for " + pair.serialize();
                    }});
  checks.push_back({"k-m-identity", pairs->size(), [pairs](std::size_t i, std::mt19937_64&) {
                      const SigmaPair& pair = (*pairs)[i];
                      const AlmostSymFunction m = toSchurBasis(almostSchurByRecursion(pair));
                      std::set<Composition> heads;
                      const AlmostSymFunction k = almostSchurByCombinatorics(pair);
                      for (const auto& [key, c] : k.terms()) heads.insert(key.head);
                      for (const auto& [key, c] : m.terms()) heads.insert(key.head);
                      for (const Composition& head : heads) {
                        const int rest = pair.degree() - head.size();
                        for (const Partition& nu : partitionsOf(rest)) {
                          Rational rhs = 0;
                          for (const Partition& gamma : partitionsOf(rest))
                            rhs += Rational(static_cast<long>(kostka(gamma, nu.asComposition()))) *
                                   m.coefficient(head, gamma);
                          const std::int64_t lhs = kostkaAlmost(pair, head, nu);
                          if (rhs != Rational(static_cast<long>(lhs)))
                            return "K = " + std::to_string(lhs) + " but sum K*M = " + rhs.get_str() + " at " +
                                   head.toString() + "|" + nu.toString() + " for " + pair.serialize();
                        }
                      }
                      return std::string();
                    }});
  return checks;
}

// ----------------------------------------------------------------- structure

std::vector<Check> structureChecks(const VerifyOptions& o) {
  auto weights = std::make_shared<std::vector<Weight>>(weightsUpTo(4, o.degree));
  std::vector<Check> checks;
  checks.push_back({"e-triangularity", weights->size(), [weights](std::size_t i, std::mt19937_64&) {
                      const Weight& a = (*weights)[i];
                      const QtPoly e = computeE(Composition(a.entries));
                      const ExponentVector lead = ExponentVector::fromDense(a.entries);
                      if (!(e.coefficientOf(lead) == QtRational(1)))
                        return "leading coefficient " + e.coefficientOf(lead).toString() + " for " +
                               Composition(a.entries).toString();
                      const auto below = bruhatDownSet(a);
                      const std::set<Weight> allowed(below.begin(), below.end());
                      for (const auto& t : e.terms()) {
                        const Weight w(t.exponents.dense(a.length()));
                        if (!allowed.count(w))
                          return "term " + toText(t.exponents) + " not Bruhat-below " + Composition(a.entries).toString();
                      }
                      return std::string();
                    }});
  struct WeylCase {
    Partition lambda;
    int n;
  };
  auto cases = std::make_shared<std::vector<WeylCase>>();
  for (int s = 0; s <= o.degree; ++s)
    for (const Partition& lambda : partitionsOf(s))
      for (int n = std::max(1, lambda.length()); n <= 5; ++n) cases->push_back({lambda, n});
  const int cost = o.maxSymCost;
  checks.push_back({"weyl-schur", cases->size(), [cases, cost](std::size_t i, std::mt19937_64&) {
                      const auto& [lambda, n] = (*cases)[i];
                      const RatPoly x = RatPoly::monomial(ExponentVector::fromDense(lambda.parts()), Rational(1));
                      const RatPoly s = schurPolynomial(lambda, n);
                      const std::string what = "W_0 x^" + lambda.toString() + " in " + std::to_string(n) + " variables";
                      std::string r = expectEqual(applyWkn(0, n, x, WMethod::SumFormula, cost), s, what);
                      if (r.empty()) r = expectEqual(applyWkn(0, n, x, WMethod::XiTower), s, what + " (tower)");
                      return r;
                    }});
  auto lambdas = std::make_shared<std::vector<Partition>>();
  for (int s = 0; s <= o.degree; ++s)
    for (Partition& p : partitionsOf(s)) lambdas->push_back(std::move(p));
  checks.push_back({"empty-head", lambdas->size(), [lambdas](std::size_t i, std::mt19937_64&) {
                      const Partition& lambda = (*lambdas)[i];
                      AlmostSymFunction expected(0, TailBasis::Schur);
                      expected.add(Composition(), lambda, Rational(1));
                      return expectEqual(toSchurBasis(almostSchurByRecursion(SigmaPair(Composition(), lambda))), expected,
                                         "s_(empty|" + lambda.toString() + ")");
                    }});
  auto mus = std::make_shared<std::vector<Composition>>();
  for (int s = 0; s <= o.degree; ++s)
    for (Composition& c : reducedCompositionsOf(s, 4)) mus->push_back(std::move(c));
  checks.push_back({"empty-tail", mus->size(), [mus](std::size_t i, std::mt19937_64&) {
                      const Composition& mu = (*mus)[i];
                      const AlmostSymFunction f = almostSchurByRecursion(SigmaPair(mu, Partition()));
                      for (const auto& [key, c] : f.terms())
                        if (!key.tail.empty()) return "tail " + key.tail.toString() + " in s_(" + mu.toString() + "|empty)";
                      return expectEqual(toFinitePolynomial(f, mu.length()), keyPolynomial(Weight(mu)),
                                         "s_(" + mu.toString() + "|empty) vs key");
                    }});
  return checks;
}

}  // namespace

const std::vector<std::string>& suiteNames() {
  static const std::vector<std::string> names{"relations", "specialization", "positivity", "stability", "structure"};
  return names;
}

std::vector<PropertyResult> runSuite(const std::string& suite, const VerifyOptions& options) {
  if (options.degree < 0) throw DomainError("degree must be non-negative");
  std::vector<Check> checks;
  if (suite == "relations") checks = relationChecks(options);
  else if (suite == "specialization") checks = specializationChecks(options);
  else if (suite == "positivity") checks = positivityChecks(options);
  else if (suite == "stability") checks = stabilityChecks(options);
  else if (suite == "structure") checks = structureChecks(options);
  else throw DomainError("unknown suite '" + suite + "'");
  std::vector<PropertyResult> results;
  for (const Check& c : checks) results.push_back(runCheck(c, options));
  return results;
}

}  // namespace asf
