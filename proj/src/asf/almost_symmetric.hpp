#pragma once

// Almost symmetric functions in the bases x^alpha m_nu[X_k] and
// x^alpha s_nu[X_k], key polynomials and the almost symmetric Schur
// functions with their expansion coefficients.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "asf/combinatorics.hpp"
#include "asf/operators.hpp"
#include "asf/polynomial.hpp"

namespace asf {

enum class TailBasis { Monomial, Schur };

/// Finite expansion sum c * x^head * b_tail[x_{k+1} + x_{k+2} + ...] with
/// b = m or s. Heads are stored reduced and have length <= k.
class AlmostSymFunction {
 public:
  struct Key {
    Composition head;
    Partition tail;
    friend bool operator==(const Key&, const Key&) = default;
  };
  /// Heads descending, then tails descending (lexicographic).
  struct KeyOrder {
    bool operator()(const Key& a, const Key& b) const {
      if (a.head != b.head) return a.head > b.head;
      return a.tail > b.tail;
    }
  };
  using TermMap = std::map<Key, Rational, KeyOrder>;

  AlmostSymFunction() = default;
  AlmostSymFunction(int threshold, TailBasis basis) : threshold_(threshold), basis_(basis) {}

  int threshold() const { return threshold_; }
  TailBasis basis() const { return basis_; }
  const TermMap& terms() const { return terms_; }
  bool isZero() const { return terms_.empty(); }

  /// Adds c to the coefficient of (head, tail). Throws DomainError when the
  /// reduced head is longer than the threshold.
  void add(const Composition& head, const Partition& tail, const Rational& c);
  Rational coefficient(const Composition& head, const Partition& tail) const;

  /// -1 for zero; otherwise the degree if all terms share it, else -2.
  int homogeneousDegree() const;

  friend bool operator==(const AlmostSymFunction& a, const AlmostSymFunction& b) {
    return a.threshold_ == b.threshold_ && a.basis_ == b.basis_ && a.terms_ == b.terms_;
  }

 private:
  int threshold_ = 0;
  TailBasis basis_ = TailBasis::Monomial;
  TermMap terms_;
};

/// Reads p in x_1..x_n as an element of the monomial-tail basis with
/// threshold k. Throws NotSymmetricError, InsufficientVariablesError
/// (n < k + deg p) or DomainError (variables beyond x_n).
AlmostSymFunction fromFinitePolynomial(const RatPoly& p, int n, int k);

/// Substitutes X_k -> x_{k+1} + ... + x_n.
RatPoly toFinitePolynomial(const AlmostSymFunction& f, int n);

AlmostSymFunction toMonomialBasis(const AlmostSymFunction& f);
/// Blockwise inverse-Kostka conversion.
AlmostSymFunction toSchurBasis(const AlmostSymFunction& f);

/// Key polynomial of alpha. Results are memoized (thread-safe) and, when a
/// cache directory is configured, persisted on disk.
RatPoly keyPolynomial(const Weight& alpha);

/// Directory for the on-disk key cache; empty disables it. Defaults to the
/// ASK_CACHE_DIR environment variable.
void setKeyCacheDirectory(const std::string& dir);
std::string keyCacheDirectory();
void clearKeyCache();

/// Record of how the recursion result was certified.
struct StabilizationCertificate {
  int n = 0;         // variables used for the main computation
  int witnessN = 0;  // second variable count that reproduced it
};

/// s_(mu|lambda) from key polynomials and the W-tower, at n* = l(mu) +
/// l(lambda) + |mu| + |lambda| variables, checked against n* + 1 variables.
/// Monomial-tail basis. Throws StabilizationFailure on any disagreement.
AlmostSymFunction almostSchurByRecursion(const SigmaPair& pair, StabilizationCertificate* certificate = nullptr);

/// s_(mu|lambda) by counting star labellings per tail content. Monomial-tail
/// basis.
AlmostSymFunction almostSchurByCombinatorics(const SigmaPair& pair);

/// K^{(mu|lambda)}_{(alpha|nu)}; 0 when the reduced alpha is longer than mu.
std::int64_t kostkaAlmost(const SigmaPair& pair, const Composition& alpha, const Partition& nu);

/// M coefficients: s_(mu|lambda) in the Schur-tail basis.
AlmostSymFunction monomialSchurCoefficients(const SigmaPair& pair);

/// eps_{l(mu)}^(n) applied to E_{mu*lambda*0^{n - l(mu) - l(lambda)}}.
QtPoly stableMacdonaldTruncation(const SigmaPair& pair, int n, int maxSymCost = kDefaultMaxSymCost);

}  // namespace asf
