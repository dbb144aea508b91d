#pragma once

// Compositions, partitions, the index set of pairs (mu|lambda), Bruhat order
// on weights, semistandard tableaux and (inverse) Kostka numbers.

#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace asf {

class Partition;

/// Finite tuple of non-negative integers. The empty composition is allowed.
class Composition {
 public:
  Composition() = default;
  explicit Composition(std::vector<int> parts);
  Composition(std::initializer_list<int> parts);

  /// Comma separated integers; the empty string is the empty composition.
  static Composition parse(std::string_view text);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const;
  int operator[](std::size_t i) const { return parts_[i]; }
  bool empty() const { return parts_.empty(); }

  /// Empty or last part nonzero.
  bool isReduced() const;
  /// Drops trailing zeros.
  Composition reduced() const;
  Composition paddedTo(int length) const;
  bool isWeaklyDecreasing() const;

  std::string toString() const;

  friend bool operator==(const Composition&, const Composition&) = default;
  friend auto operator<=>(const Composition&, const Composition&) = default;

 private:
  std::vector<int> parts_;
};

/// Weakly decreasing tuple of positive integers.
class Partition {
 public:
  Partition() = default;
  /// Throws DomainError unless the parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts);

  static Partition parse(std::string_view text);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const;
  int operator[](std::size_t i) const { return parts_[i]; }
  bool empty() const { return parts_.empty(); }

  Composition asComposition() const { return Composition(parts_); }
  std::string toString() const;

  /// Dominance order: partial sums of *this dominate those of other.
  bool dominates(const Partition& other) const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// A pair (mu|lambda) with mu a reduced composition and lambda a partition.
class SigmaPair {
 public:
  SigmaPair() = default;
  /// Throws DomainError if mu is not reduced.
  SigmaPair(Composition mu, Partition lambda);

  /// Accepts "mu=2,0,1;lambda=3,1"; either side may be empty.
  static SigmaPair parse(std::string_view text);

  const Composition& mu() const { return mu_; }
  const Partition& lambda() const { return lambda_; }
  int degree() const { return mu_.size() + lambda_.size(); }

  /// Canonical key, e.g. "mu=2,0,1;lambda=3,1" or "mu=;lambda=".
  std::string serialize() const;

  friend bool operator==(const SigmaPair&, const SigmaPair&) = default;
  friend auto operator<=>(const SigmaPair&, const SigmaPair&) = default;

 private:
  Composition mu_;
  Partition lambda_;
};

/// A point of Z_{>=0}^n for a fixed n.
struct Weight {
  std::vector<int> entries;

  Weight() = default;
  explicit Weight(std::vector<int> e) : entries(std::move(e)) {}
  Weight(std::initializer_list<int> e) : entries(e) {}
  explicit Weight(const Composition& c) : entries(c.parts()) {}

  int length() const { return static_cast<int>(entries.size()); }
  int sum() const;

  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight&, const Weight&) = default;
};

Partition sortToPartition(const Composition& c);
Composition reverseComposition(const Composition& c);
Composition concat(const Composition& a, const Composition& b);

/// Bruhat order on weights of equal length. Returns false when the sums
/// differ; throws DomainError on a length mismatch.
bool bruhatLeq(const Weight& a, const Weight& b);

/// Every weight Bruhat-below (or equal to) b.
std::vector<Weight> bruhatDownSet(const Weight& b);

/// Rows of a tableau, row i holding weakly increasing entries.
using Tableau = std::vector<std::vector<int>>;

/// All SSYT of the given shape with content[i] entries equal to i+1.
/// Returns an empty list on a size mismatch.
std::vector<Tableau> enumerateSSYT(const Partition& shape, const Composition& content);

/// Visits the SSYT one at a time without materializing the list.
void forEachSSYT(const Partition& shape, const Composition& content,
                 const std::function<void(const Tableau&)>& visit);

/// Number of SSYT of shape lambda and content nu (0 on size mismatch).
std::int64_t kostka(const Partition& lambda, const Composition& nu);

/// Entry of the inverse Kostka matrix on partitions of |gamma|.
/// Returns 0 when the sizes differ.
std::int64_t inverseKostka(const Partition& gamma, const Partition& lambda);

/// All partitions of n, ascending lexicographically. This is a linear
/// extension of dominance, so the Kostka matrix in this order is lower
/// unitriangular.
std::vector<Partition> partitionsOf(int n);

/// Partitions of n with at most maxParts parts, same order as partitionsOf.
std::vector<Partition> partitionsOf(int n, int maxParts);

/// Kostka matrix K[row=lambda][col=nu] and its inverse, both indexed by
/// partitionsOf(degree).
struct KostkaTable {
  int degree = 0;
  std::vector<Partition> partitions;
  std::vector<std::vector<std::int64_t>> kostka;
  std::vector<std::vector<std::int64_t>> inverse;

  int indexOf(const Partition& p) const;
};

/// Cached, thread-safe.
const KostkaTable& kostkaTable(int degree);

/// All (mu|lambda) with |mu|+|lambda| = degree and l(mu) <= maxMuLength,
/// ordered by |mu| descending, then mu lexicographically, then lambda
/// lexicographically.
std::vector<SigmaPair> enumerateSigmaPairs(int degree, int maxMuLength);

/// Reduced compositions of n with at most maxLength parts (lexicographic).
std::vector<Composition> reducedCompositionsOf(int n, int maxLength);

/// All weights of the given length and sum (lexicographic).
std::vector<Weight> weightsOf(int length, int sum);

}  // namespace asf
