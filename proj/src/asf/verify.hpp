#pragma once

// Randomized and exhaustive property suites over the operator toolkit, the
// specialization q = t = 0, coefficient positivity and stabilization.

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "asf/almost_symmetric.hpp"

namespace asf {

struct PropertyResult {
  std::string name;
  long checked = 0;
  long failed = 0;
  std::string firstFailure;

  bool passed() const { return failed == 0; }
};

struct VerifyOptions {
  int degree = 3;
  std::uint64_t seed = 1;
  int samples = 100;
  int jobs = 1;
  int maxSymCost = kDefaultMaxSymCost;
};

/// relations, specialization, positivity, stability, structure.
const std::vector<std::string>& suiteNames();

/// Throws DomainError for an unknown suite name.
std::vector<PropertyResult> runSuite(const std::string& suite, const VerifyOptions& options);

/// Runs body(0..count-1) on up to jobs threads. The first exception thrown
/// by any call is rethrown after all workers finish.
void parallelFor(std::size_t count, int jobs, const std::function<void(std::size_t)>& body);

/// Generators for randomized checks. Coefficients of randomQtPoly are
/// products c * q^a t^b / (1 - q^c t^d) and admit the iterated limit.
RatPoly randomRatPoly(std::mt19937_64& rng, int variables, int maxDegree, int maxTerms);
QtRational randomPoleFreeScalar(std::mt19937_64& rng);
QtPoly randomQtPoly(std::mt19937_64& rng, int variables, int maxDegree, int maxTerms);

/// s_lambda(x_1..x_n) from SSYT counts.
RatPoly schurPolynomial(const Partition& lambda, int n);

/// Rank over Q of the given rows.
int rationalRank(std::vector<std::vector<Rational>> rows);

}  // namespace asf
